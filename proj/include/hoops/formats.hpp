#pragma once

// File formats.  All structured records are JSON.
//
//   loop         {"dim": 2, "basepoint": ["0", "0"],
//                 "vertices": [["0", "0"], ["1", "0"], ["0", "1/2"], ["0", "0"]]}
//                coordinates are "p/q" or decimal strings (or JSON integers);
//                vertices start and end at the basepoint.
//   word         [2, 3, -1]   (e2 e3 e1^-1)
//   connection   {"group": "so3", "dim": 2,
//                 "terms": [{"center": [x, y], "radius": r, "axis": 1,
//                            "coeff": [[a, b], [c, d]]}]}
//                matrix entries are numbers or [re, im] pairs.
//   graph curve  {"t_end": 1, "atoms": [{"level": 1, "sign": 1, "scale": 0.09}],
//                 "mollifiers": [{"point": 0.5, "width": 0.01}]}
//   Cayley table see CayleyTable::parse.
//
// Malformed input raises InputError.

#include "hoops/decompose.hpp"
#include "hoops/graph_curve.hpp"
#include "hoops/synthesize.hpp"

#include <string>

namespace hoops::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

geom::PolyLoop parse_loop(const std::string& text);
std::string format_loop(const geom::PolyLoop& loop);

words::Word parse_word(const std::string& text);
std::string format_word(const words::Word& w);

gauge::Connection parse_connection(const std::string& text);
std::string format_connection(const gauge::Connection& a);

std::string format_matrix(const gauge::Matrix& m);

/// Generators (loop, marked segment, midpoint, clearance) and word.
struct DecompositionRecord
{
  geom::Point basepoint;
  words::Word word;
  struct Entry
  {
    int index = 1;
    geom::PolyLoop loop;
    geom::Point marked_start;
    geom::Point marked_end;
    geom::Point midpoint;
    double clearance = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> generators;
  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

DecompositionRecord record_of(const geom::Decomposition& dec);
std::string format_decomposition(const DecompositionRecord& rec);
DecompositionRecord parse_decomposition(const std::string& text);

/// Witness record: connection, word, generator targets, word value and the
/// verified whole-loop holonomy.  parse_connection accepts it as well.
std::string format_witness(const synth::FalsifyResult& result);

pathology::GraphCurve parse_graph_curve(const std::string& text);
std::string format_graph_curve(const pathology::GraphCurve& curve);

/// CSV with columns x, then c<i>_d<n> for every curve i and order n <= order,
/// sampled at `samples` uniform points of [0, t_end].
std::string curves_csv(const std::vector<pathology::GraphCurve>& curves, int order, int samples);

} // namespace hoops::io
