#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twh {

// Malformed input or a structure violating its invariants. The message
// names the offending witness (vertex, edge, bag, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An instance exceeded a configured size cap. Caps are configuration;
// exceeding one is an error, never a silent approximation.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// The separator oracle reported "no separation" for a queried
// (subgraph, vertex set) pair. Carries the offending query.
struct NoSeparatorError : std::runtime_error {
  NoSeparatorError(const std::string& what, std::vector<int> subgraph_vertices,
                   std::vector<int> query_set)
      : std::runtime_error(what),
        subgraph_vertices(std::move(subgraph_vertices)),
        query_set(std::move(query_set)) {}
  std::vector<int> subgraph_vertices;
  std::vector<int> query_set;
};

// The separator oracle returned a separation violating its contract
// (unbalanced, too large, or not a separation at all).
struct OracleContractError : std::runtime_error {
  explicit OracleContractError(const std::string& what) : std::runtime_error(what) {}
};

// A constructive procedure met a structure outside its case analysis.
// Carries the vertices of the offending piece.
struct StructuralError : std::runtime_error {
  StructuralError(const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), witness(std::move(witness)) {}
  std::vector<int> witness;
};

}  // namespace twh
