#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "chainops/table.hpp"

namespace fixtures {

inline auto has_code(chainops::errc c) {
  return Catch::Matchers::Predicate<chainops::Error>(
      [c](const chainops::Error& e) { return e.code() == c; },
      std::string("errc == ") + chainops::errc_name(c));
}

// The picture-case (a) pattern F(2,3)=2, F(2,1)=1, F(3,1)=3 on L_3, with its
// unique quasitrivial nondecreasing completion. Not associative.
inline chainops::BinaryOpTable fig_a_table() {
  return chainops::BinaryOpTable(3, {{1, 1, 1}, {1, 2, 2}, {3, 3, 3}});
}

// The reconstruction-figure operation on L_6 (path R D Gx R, left choice),
// written out cell by cell from the construction rules: min below the
// barrier, max above, path values per the outgoing segments, F(2,5)=2 and
// F(5,2)=5 at the diagonal step, neutral element 4.
inline chainops::BinaryOpTable l6_figure_table() {
  return chainops::BinaryOpTable(6, {{1, 1, 1, 1, 1, 1},
                                     {1, 2, 2, 2, 2, 6},
                                     {1, 2, 3, 3, 5, 6},
                                     {1, 2, 3, 4, 5, 6},
                                     {1, 5, 5, 5, 5, 6},
                                     {1, 6, 6, 6, 6, 6}});
}

// Quasitrivial but not monotone: row 1 reads (1,2,1).
inline chainops::BinaryOpTable bumpy_table() {
  return chainops::BinaryOpTable(3, {{1, 2, 1}, {1, 2, 2}, {3, 3, 3}});
}

}  // namespace fixtures
