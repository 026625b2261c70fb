#include <catch2/catch_amalgamated.hpp>

#include "chainops/predicates.hpp"
#include "fixtures.hpp"

using namespace chainops;
using fixtures::fig_a_table;
using fixtures::has_code;

TEST_CASE("quasitriviality") {
  CHECK(is_quasitrivial(min_table(4)).holds);
  CHECK(is_quasitrivial(proj_y_table(5)).holds);

  BinaryOpTable bad(2, {{2, 1}, {1, 2}});  // F(1,1)=2
  auto c = is_quasitrivial(bad);
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotQuasitrivial>(*c.witness);
  CHECK(w.x == 1);
  CHECK(w.y == 1);
}

TEST_CASE("idempotency") {
  CHECK(is_idempotent(max_table(3)).holds);

  BinaryOpTable bad(2, {{1, 2}, {2, 1}});  // F(2,2)=1
  auto c = is_idempotent(bad);
  REQUIRE_FALSE(c.holds);
  CHECK(std::get<NotIdempotent>(*c.witness).x == 2);
}

TEST_CASE("nondecreasingness") {
  CHECK(is_nondecreasing(min_table(4)).holds);
  CHECK(is_nondecreasing(proj_x_table(4)).holds);

  BinaryOpTable twist(2, {{1, 2}, {2, 1}});  // F(2,2)=1 < F(2,1)=2
  auto c = is_nondecreasing(twist);
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotNondecreasing>(*c.witness);
  CHECK(twist(w.x1, w.y1) > twist(w.x2, w.y2));
  CHECK(w.x1 <= w.x2);
  CHECK(w.y1 <= w.y2);
}

TEST_CASE("per-section monotonicity") {
  // every length-2 section is monotone, so the twisted table passes while
  // failing nondecreasingness
  BinaryOpTable twist(2, {{1, 2}, {2, 1}});
  CHECK(is_monotone(twist).holds);
  CHECK_FALSE(is_nondecreasing(twist).holds);

  auto c = is_monotone(fixtures::bumpy_table());  // row 1 is (1,2,1)
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotMonotone>(*c.witness);
  CHECK(w.along_y);
  CHECK(w.fixed == 1);
  // the witness pairs re-fail the section
  auto t = fixtures::bumpy_table();
  CHECK(t(w.fixed, w.inc_lo) < t(w.fixed, w.inc_hi));
  CHECK(t(w.fixed, w.dec_lo) > t(w.fixed, w.dec_hi));
}

TEST_CASE("nondecreasing tables are monotone") {
  for (const auto& t : {min_table(5), max_table(5), proj_x_table(5), proj_y_table(5)}) {
    CHECK(is_nondecreasing(t).holds);
    CHECK(is_monotone(t).holds);
  }
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(min_table(3)).holds);
  CHECK(is_symmetric(max_table(3)).holds);
  auto c = is_symmetric(proj_x_table(2));
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotSymmetric>(*c.witness);
  CHECK(w.x == 1);
  CHECK(w.y == 2);
}

TEST_CASE("associativity") {
  CHECK(is_associative(min_table(5)).holds);

  auto c = is_associative(fig_a_table());
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotAssociative>(*c.witness);
  // lexicographically smallest failing triple, both sides evaluated by hand:
  // F(F(2,3),1) = F(2,1) = 1 but F(2,F(3,1)) = F(2,3) = 2
  CHECK(w.x == 2);
  CHECK(w.y == 3);
  CHECK(w.z == 1);
  auto t = fig_a_table();
  CHECK(t(t(2, 3), 1) == 1);
  CHECK(t(2, t(3, 1)) == 2);
}

TEST_CASE("bisymmetry") {
  CHECK(is_bisymmetric(proj_x_table(4)).holds);  // both sides reduce to u
  CHECK(is_bisymmetric(min_table(4)).holds);     // associative and symmetric

  // bisymmetric + quasitrivial would force associativity, so the picture
  // table cannot be bisymmetric
  auto c = is_bisymmetric(fig_a_table());
  REQUIRE_FALSE(c.holds);
  auto w = std::get<NotBisymmetric>(*c.witness);
  auto t = fig_a_table();
  CHECK(t(t(w.u, w.v), t(w.w, w.z)) != t(t(w.u, w.w), t(w.v, w.z)));
}

TEST_CASE("neutral elements") {
  CHECK(neutral_element(min_table(4)) == 4);
  CHECK(neutral_element(max_table(4)) == 1);
  CHECK_FALSE(neutral_element(proj_x_table(2)).has_value());
}

TEST_CASE("symmetrizations") {
  // symmetric tables are their own symmetrizations
  CHECK(upper_symmetrization(min_table(3)) == min_table(3));
  CHECK(lower_symmetrization(min_table(3)) == min_table(3));
  // Proj_x turns into min above, max below (expand the definition cellwise)
  CHECK(upper_symmetrization(proj_x_table(3)) == min_table(3));
  CHECK(lower_symmetrization(proj_x_table(3)) == max_table(3));
  // symmetrizations are symmetric by construction
  CHECK(is_symmetric(upper_symmetrization(fig_a_table())).holds);
  CHECK(is_symmetric(lower_symmetrization(fig_a_table())).holds);
}

TEST_CASE("half-neutral elements") {
  auto hn_min = half_neutral_elements(min_table(4));
  CHECK(hn_min.upper == 4);
  CHECK(hn_min.lower == 4);

  auto hn_px = half_neutral_elements(proj_x_table(3));
  CHECK(hn_px.upper == 3);
  CHECK(hn_px.lower == 1);

  // a table with a neutral element has e = f = e0
  BinaryOpTable with_neutral(3, {{1, 1, 1}, {1, 2, 3}, {1, 3, 3}});  // neutral 2
  REQUIRE(neutral_element(with_neutral) == 2);
  auto hn = half_neutral_elements(with_neutral);
  CHECK(hn.upper == 2);
  CHECK(hn.lower == 2);

  CHECK_THROWS_MATCHES(half_neutral_elements(BinaryOpTable(2, {{2, 1}, {1, 2}})), Error,
                       has_code(errc::precondition_failed));
}

TEST_CASE("non-associativity pattern") {
  CHECK_FALSE(non_associativity_pattern(min_table(4)).has_value());

  auto pattern = non_associativity_pattern(fig_a_table());
  REQUIRE(pattern.has_value());
  auto pc = std::get<PictureCase>(*pattern);
  CHECK(pc.tag == 'a');
  // roles satisfy the case 1 value pattern with z < x < y
  CHECK(pc.x == 2);
  CHECK(pc.y == 3);
  CHECK(pc.z == 1);

  CHECK_THROWS_MATCHES(non_associativity_pattern(fixtures::bumpy_table()), Error,
                       has_code(errc::precondition_failed));
}

TEST_CASE("all four pictures are realized on L_3") {
  // (b): F(x,y)=x, F(x,z)=z, F(y,z)=y with roles y<x<z -> cells F(2,1)=2,
  // F(2,3)=3, F(1,3)=1; the quasitrivial nondecreasing completion is forced
  BinaryOpTable b(3, {{1, 1, 1}, {2, 2, 3}, {3, 3, 3}});
  // (c): F(x,y)=y, F(y,z)=z, F(x,z)=x with x<z<y -> F(1,3)=3, F(3,2)=2, F(1,2)=1
  BinaryOpTable c(3, {{1, 1, 3}, {1, 2, 3}, {1, 2, 3}});
  // (d): F(x,y)=y, F(y,z)=z, F(x,z)=x with y<z<x -> F(3,1)=1, F(1,2)=2, F(3,2)=3
  BinaryOpTable d(3, {{1, 2, 3}, {1, 2, 3}, {1, 3, 3}});
  CHECK(std::get<PictureCase>(*non_associativity_pattern(b)).tag == 'b');
  CHECK(std::get<PictureCase>(*non_associativity_pattern(c)).tag == 'c');
  CHECK(std::get<PictureCase>(*non_associativity_pattern(d)).tag == 'd');
}

TEST_CASE("piecewise structure") {
  CHECK(check_piecewise_structure(min_table(4)));     // e = f = 4
  CHECK(check_piecewise_structure(proj_y_table(3)));  // e=1, f=3: middle branch everywhere
  CHECK(check_piecewise_structure(proj_x_table(3)));
  CHECK_THROWS_MATCHES(check_piecewise_structure(fig_a_table()), Error,
                       has_code(errc::precondition_failed));
}

TEST_CASE("analyze fills flags, witnesses and half-neutrals") {
  auto r_min = analyze(min_table(2));
  CHECK(r_min.idempotent);
  CHECK(r_min.quasitrivial);
  CHECK(r_min.nondecreasing);
  CHECK(r_min.monotone);
  CHECK(r_min.symmetric);
  CHECK(r_min.associative);
  CHECK(r_min.bisymmetric);
  CHECK(r_min.neutral == 2);
  CHECK(r_min.witnesses.empty());

  auto r_px = analyze(proj_x_table(3));
  CHECK(r_px.associative);
  CHECK(r_px.quasitrivial);
  CHECK(r_px.nondecreasing);
  CHECK(r_px.bisymmetric);
  CHECK_FALSE(r_px.symmetric);
  CHECK_FALSE(r_px.neutral.has_value());
  CHECK(r_px.upper_half_neutral == 3);
  CHECK(r_px.lower_half_neutral == 1);

  auto r_a = analyze(fig_a_table());
  CHECK_FALSE(r_a.associative);
  bool has_picture = false;
  for (const auto& w : r_a.witnesses)
    if (auto* pc = std::get_if<PictureCase>(&w)) {
      has_picture = true;
      CHECK(pc->tag == 'a');
      // a picture witness is an associativity counterexample on its own triple
      auto t = fig_a_table();
      CHECK(t(t(pc->x, pc->y), pc->z) != t(pc->x, t(pc->y, pc->z)));
    }
  CHECK(has_picture);

  // every false flag carries a witness
  std::size_t false_flags = 0;
  for (bool flag : {r_a.idempotent, r_a.quasitrivial, r_a.nondecreasing, r_a.monotone,
                    r_a.symmetric, r_a.associative, r_a.bisymmetric})
    if (!flag) ++false_flags;
  CHECK(r_a.witnesses.size() >= false_flags);
}
