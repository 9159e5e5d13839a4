#pragma once

#include <iosfwd>
#include <string>

#include "twhad/circle.hpp"
#include "twhad/decomposition.hpp"
#include "twhad/graph.hpp"
#include "twhad/minors.hpp"
#include "twhad/ordered.hpp"
#include "twhad/vertex_minors.hpp"

// Text formats. All are line-based, whitespace-separated, newline
// terminated:
//   graph          "n m" then m lines "u v" with 0 <= u < v < n
//   decomposition  "td <bags> <width+1> <n>", "b <id> <v...>" (ids
//                  1-based), "t <i> <j>"
//   model          "model <sets>" then "s <pattern-vertex> <host v...>"
//   steps          lines "lc <v>" / "del <v>"
//   drawing        graph followed by "x <c> <c1> <c2> <c3> <c4>" lines
//   chord diagram  one line of 2n chord ids, each appearing twice
//   cyclic order   one line of labels
//   string diagram "string <id> x0/y0 x1/y1 ..." with rational
//                  coordinates; the first point lies on the unit circle
//   ordered graph  graph followed by "order v0 v1 ... v_{n-1}"
//   matrix         n lines of n characters '0'/'1'
//   separation     "sep <n>" then "a <v...>" and "b <v...>"

namespace twh::io {

std::string write_graph(const Graph& g);
Graph read_graph(std::istream& in);

std::string write_decomposition(const Graph& g, const TreeDecomposition& td);
TreeDecomposition read_decomposition(std::istream& in);

std::string write_model(const std::vector<std::vector<int>>& branch_sets);
std::vector<std::vector<int>> read_model(std::istream& in);

std::string write_steps(const std::vector<VmStep>& steps);
std::vector<VmStep> read_steps(std::istream& in);

std::string write_drawing(const MarkedDrawing& d);
MarkedDrawing read_drawing(std::istream& in);

std::string write_chord_diagram(const ChordDiagram& cd);
ChordDiagram read_chord_diagram(std::istream& in);

std::string write_cyclic_order(const CyclicOrder& c);
CyclicOrder read_cyclic_order(std::istream& in);

std::string write_string_diagram(const StringDiagram& d);
StringDiagram read_string_diagram(std::istream& in);

std::string write_ordered_graph(const OrderedGraph& og);
OrderedGraph read_ordered_graph(std::istream& in);

std::string write_matrix(const Gf2Matrix& m);
Gf2Matrix read_matrix(std::istream& in);

std::string write_separation(const Separation& s);
Separation read_separation(std::istream& in);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace twh::io
