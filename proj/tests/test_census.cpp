#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <set>

#include "chainops/census.hpp"
#include "fixtures.hpp"

using namespace chainops;
using fixtures::has_code;

TEST_CASE("recurrence counts match the paper") {
  const long long a_list[] = {1, 4, 12, 34, 94, 258, 706, 1930, 5274, 14410};
  for (int k = 1; k <= 10; ++k) CHECK(count_A(k) == a_list[k - 1]);

  const long long b_list[] = {1, 2, 6, 16, 44};
  for (int k = 1; k <= 5; ++k) CHECK(count_B(k) == b_list[k - 1]);

  CHECK(count_D(5) == 16);
  CHECK(count_C(5) == 46);
  CHECK(count_C(1) == 1);

  // A_k = 2 sum B_i - B_k, recomputed independently of count_A's loop
  BigInt sum = 0;
  for (int k = 1; k <= 40; ++k) {
    sum += count_B(k);
    CHECK(count_A(k) == 2 * sum - count_B(k));
  }
  // counts leave the signed 64-bit range near k = 43
  CHECK(count_B(45) > BigInt("9223372036854775807"));
}

TEST_CASE("closed forms agree with the recurrences") {
  auto r = closed_form_check(25, 1e-9);
  CHECK(r.ok);
  CHECK(r.max_rel_deviation <= 1e-9);
  CHECK_NOTHROW(closed_form_check(1, 1e-12));
  CHECK_THROWS_MATCHES(closed_form_check(31, 1e-9), Error, has_code(errc::bound_exceeded));
}

TEST_CASE("enumerate_qn yields the quasitrivial nondecreasing census in order") {
  CHECK(enumerate_qn(1).size() == 1);

  auto two = enumerate_qn(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0] == min_table(2));
  CHECK(two[1] == proj_x_table(2));
  CHECK(two[2] == proj_y_table(2));
  CHECK(two[3] == max_table(2));

  for (int k = 2; k <= 5; ++k) {
    auto tables = enumerate_qn(k);
    CHECK(std::is_sorted(tables.begin(), tables.end()));
    CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());
    for (const auto& t : tables) {
      CHECK(is_quasitrivial(t).holds);
      CHECK(is_nondecreasing(t).holds);
    }
  }

  CHECK_THROWS_MATCHES(enumerate_qn(7), Error, has_code(errc::bound_exceeded));
  CHECK_THROWS_MATCHES(enumerate_qn(0), Error, has_code(errc::bound_exceeded));
}

TEST_CASE("enumerate_qn agrees with the unpruned sweep") {
  // oracle: walk all 2^(k^2-k) quasitrivial tables and keep the
  // nondecreasing ones
  for (int k = 2; k <= 4; ++k) {
    std::vector<std::pair<Elem, Elem>> cells;
    for (Elem x = 1; x <= k; ++x)
      for (Elem y = 1; y <= k; ++y)
        if (x != y) cells.emplace_back(x, y);
    std::set<BinaryOpTable> oracle;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
      std::vector<Elem> flat(static_cast<std::size_t>(k) * k);
      for (Elem x = 1; x <= k; ++x) flat[static_cast<std::size_t>(x - 1) * k + (x - 1)] = x;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [x, y] = cells[i];
        flat[static_cast<std::size_t>(x - 1) * k + (y - 1)] =
            (mask >> i) & 1 ? std::max(x, y) : std::min(x, y);
      }
      BinaryOpTable t(k, std::move(flat));
      if (is_nondecreasing(t)) oracle.insert(std::move(t));
    }
    auto enumerated = enumerate_qn(k);
    REQUIRE(enumerated.size() == oracle.size());
    CHECK(std::set<BinaryOpTable>(enumerated.begin(), enumerated.end()) == oracle);
  }
}

TEST_CASE("filtered counts meet the formulas") {
  EnumFilter assoc;
  assoc.require_associative = true;
  CHECK(enumerate_filtered(3, assoc).size() == 12);

  EnumFilter assoc_neutral = assoc;
  assoc_neutral.require_neutral = true;
  CHECK(enumerate_filtered(3, assoc_neutral).size() == 6);  // B_3 = 2*2 + 2*1

  EnumFilter assoc_sym = assoc;
  assoc_sym.require_symmetric = true;
  CHECK(enumerate_filtered(4, assoc_sym).size() == 8);  // 2^(k-1)

  // filtering preserves the census order
  auto all = enumerate_qn(3);
  auto filtered = enumerate_filtered(3, assoc);
  auto it = all.begin();
  for (const auto& t : filtered) {
    it = std::find(it, all.end(), t);
    REQUIRE(it != all.end());
  }
}

TEST_CASE("path enumeration counts A_k") {
  CHECK(enumerate_paths(1).size() == 1);
  CHECK(enumerate_paths(2).size() == 4);

  auto three = enumerate_paths(3);
  CHECK(three.size() == 12);
  // diagonal-reaching decompositions carry total weight B_3 = 6: the four
  // step-only paths RR, RD, DR, DD plus the diagonal path G in two choices
  std::multiset<std::string> diagonal_specs;
  for (const auto& d : three)
    if (d.projection() == TerminalProjection::None) diagonal_specs.insert(format_path_spec(d));
  CHECK(diagonal_specs ==
        std::multiset<std::string>{"k=3; R R", "k=3; R D", "k=3; D R", "k=3; D D", "k=3; Gx",
                                   "k=3; Gy"});

  for (int k = 1; k <= 6; ++k)
    CHECK(BigInt(enumerate_paths(k).size()) == count_A(k));

  CHECK_THROWS_MATCHES(enumerate_paths(33), Error, has_code(errc::bound_exceeded));
}

TEST_CASE("bijection between paths and associative tables") {
  for (int k = 1; k <= 5; ++k) {
    auto r = verify_bijection(k);
    CHECK(r.ok);
    CHECK(BigInt(r.decomposition_count) == count_A(k));
    CHECK(BigInt(r.table_count) == count_A(k));
    CHECK(r.diagonal_weight == count_B(k));
  }
  CHECK_THROWS_MATCHES(verify_bijection(6), Error, has_code(errc::bound_exceeded));
}

TEST_CASE("count tables carry provenance") {
  auto t = make_count_table(10);
  CHECK(t.k_max == 10);
  CHECK(t.A[9] == 14410);
  CHECK(t.provenance[0] == Provenance::Recurrence);

  auto brute = make_count_table_brute(4);
  for (int k = 1; k <= 4; ++k) {
    std::size_t i = static_cast<std::size_t>(k - 1);
    CHECK(brute.A[i] == t.A[i]);
    CHECK(brute.B[i] == t.B[i]);
    CHECK(brute.C[i] == t.C[i]);
    CHECK(brute.D[i] == t.D[i]);
    CHECK(brute.provenance[i] == Provenance::BruteForce);
  }
  CHECK_THROWS_MATCHES(make_count_table_brute(7), Error, has_code(errc::bound_exceeded));
}

TEST_CASE("enumeration is deterministic across runs") {
  auto a = enumerate_qn(4), b = enumerate_qn(4);
  CHECK(a == b);
  auto pa = enumerate_paths(4), pb = enumerate_paths(4);
  CHECK(pa == pb);
}
