#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "chainops/table.hpp"
#include "chainops/witness.hpp"

namespace chainops {

// Predicates on binary operation tables. All are pure; tables are immutable,
// so any table may be shared across threads freely.

inline PropertyCheck is_idempotent(const BinaryOpTable& f) {
  for (Elem x = 1; x <= f.chain_size(); ++x)
    if (f.at(x, x) != x) return PropertyCheck::fail_with(NotIdempotent{x});
  return PropertyCheck::pass();
}

inline PropertyCheck is_quasitrivial(const BinaryOpTable& f) {
  for (Elem x = 1; x <= f.chain_size(); ++x)
    for (Elem y = 1; y <= f.chain_size(); ++y) {
      Elem v = f.at(x, y);
      if (v != x && v != y) return PropertyCheck::fail_with(NotQuasitrivial{x, y});
    }
  return PropertyCheck::pass();
}

// Joint nondecreasingness via adjacent pairs in each row and column; the
// general comparable-pair form follows by transitivity. Candidate witnesses
// are visited in lexicographic (x1,y1,x2,y2) order.
inline PropertyCheck is_nondecreasing(const BinaryOpTable& f) {
  int k = f.chain_size();
  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y) {
      if (y < k && f.at(x, y) > f.at(x, y + 1))
        return PropertyCheck::fail_with(NotNondecreasing{x, y, x, y + 1});
      if (x < k && f.at(x, y) > f.at(x + 1, y))
        return PropertyCheck::fail_with(NotNondecreasing{x, y, x + 1, y});
    }
  return PropertyCheck::pass();
}

namespace detail {
// Section scan: values[i] for i in [0,k). Returns a witness against "this
// section is nondecreasing or nonincreasing", if any.
template <typename At>
inline std::optional<std::pair<std::pair<Elem, Elem>, std::pair<Elem, Elem>>> section_violation(
    int k, At&& value_at) {
  std::optional<std::pair<Elem, Elem>> inc, dec;
  for (Elem i = 1; i < k; ++i) {
    Elem a = value_at(i), b = value_at(i + 1);
    if (a < b && !inc) inc = {i, i + 1};
    if (a > b && !dec) dec = {i, i + 1};
  }
  if (inc && dec) return std::make_pair(*inc, *dec);
  return std::nullopt;
}
}  // namespace detail

// Per-section monotonicity: every row section y -> F(x,y) and every column
// section x -> F(x,y) is individually nondecreasing or nonincreasing; the
// direction may differ from section to section.
inline PropertyCheck is_monotone(const BinaryOpTable& f) {
  int k = f.chain_size();
  for (Elem x = 1; x <= k; ++x)
    if (auto v = detail::section_violation(k, [&](Elem y) { return f.at(x, y); }))
      return PropertyCheck::fail_with(
          NotMonotone{true, x, v->first.first, v->first.second, v->second.first, v->second.second});
  for (Elem y = 1; y <= k; ++y)
    if (auto v = detail::section_violation(k, [&](Elem x) { return f.at(x, y); }))
      return PropertyCheck::fail_with(NotMonotone{false, y, v->first.first, v->first.second,
                                                  v->second.first, v->second.second});
  return PropertyCheck::pass();
}

inline PropertyCheck is_symmetric(const BinaryOpTable& f) {
  for (Elem x = 1; x <= f.chain_size(); ++x)
    for (Elem y = x + 1; y <= f.chain_size(); ++y)
      if (f.at(x, y) != f.at(y, x)) return PropertyCheck::fail_with(NotSymmetric{x, y});
  return PropertyCheck::pass();
}

inline PropertyCheck is_associative(const BinaryOpTable& f) {
  int k = f.chain_size();
  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y)
      for (Elem z = 1; z <= k; ++z)
        if (f.at(f.at(x, y), z) != f.at(x, f.at(y, z)))
          return PropertyCheck::fail_with(NotAssociative{x, y, z});
  return PropertyCheck::pass();
}

inline PropertyCheck is_bisymmetric(const BinaryOpTable& f) {
  int k = f.chain_size();
  for (Elem u = 1; u <= k; ++u)
    for (Elem v = 1; v <= k; ++v)
      for (Elem w = 1; w <= k; ++w)
        for (Elem z = 1; z <= k; ++z)
          if (f.at(f.at(u, v), f.at(w, z)) != f.at(f.at(u, w), f.at(v, z)))
            return PropertyCheck::fail_with(NotBisymmetric{u, v, w, z});
  return PropertyCheck::pass();
}

// The unique e with F(e,x) = F(x,e) = x for all x, if one exists.
// Uniqueness is asserted, not assumed.
inline std::optional<Elem> neutral_element(const BinaryOpTable& f) {
  std::optional<Elem> found;
  for (Elem e = 1; e <= f.chain_size(); ++e) {
    bool ok = true;
    for (Elem x = 1; x <= f.chain_size() && ok; ++x)
      ok = f.at(e, x) == x && f.at(x, e) == x;
    if (ok) {
      if (found)
        fail(errc::internal_contradiction,
             "two neutral elements " + std::to_string(*found) + " and " + std::to_string(e));
      found = e;
    }
  }
  return found;
}

// Upper symmetrization F1(x,y) = F(x^y, xvy); copies the upper triangle T1.
inline BinaryOpTable upper_symmetrization(const BinaryOpTable& f) {
  return table_from_fn(f.chain_size(),
                       [&](Elem x, Elem y) { return f.at(std::min(x, y), std::max(x, y)); });
}

// Lower symmetrization F2(x,y) = F(xvy, x^y); copies the lower triangle T2.
inline BinaryOpTable lower_symmetrization(const BinaryOpTable& f) {
  return table_from_fn(f.chain_size(),
                       [&](Elem x, Elem y) { return f.at(std::max(x, y), std::min(x, y)); });
}

struct HalfNeutrals {
  Elem upper;  // e: neutral element of the upper symmetrization
  Elem lower;  // f: neutral element of the lower symmetrization
};

namespace detail {
inline void require(const PropertyCheck& check, const char* what) {
  if (!check.holds)
    fail(errc::precondition_failed,
         std::string("operand must be ") + what + " (" + describe(*check.witness) + ")");
}
}  // namespace detail

// Both exist for every quasitrivial nondecreasing table: the symmetrizations
// are quasitrivial symmetric nondecreasing, hence associative with neutral
// elements. A missing one is surfaced as internal_contradiction.
inline HalfNeutrals half_neutral_elements(const BinaryOpTable& f) {
  detail::require(is_quasitrivial(f), "quasitrivial");
  detail::require(is_nondecreasing(f), "nondecreasing");
  auto e = neutral_element(upper_symmetrization(f));
  auto l = neutral_element(lower_symmetrization(f));
  if (!e || !l) fail(errc::internal_contradiction, "symmetrization lacks a neutral element");
  return {*e, *l};
}

// Realized non-associativity picture of a quasitrivial nondecreasing table.
// Absent iff associative. The tag is computed from the lexicographically
// smallest failing triple only.
inline std::optional<Witness> non_associativity_pattern(const BinaryOpTable& f) {
  detail::require(is_quasitrivial(f), "quasitrivial");
  detail::require(is_nondecreasing(f), "nondecreasing");
  auto assoc = is_associative(f);
  if (assoc.holds) return std::nullopt;

  auto [x, y, z] = std::get<NotAssociative>(*assoc.witness);
  // For a quasitrivial table a failing triple realizes exactly one of the two
  // value patterns on its own elements:
  //   eq1: F(x,y)=x, F(x,z)=z, F(y,z)=y   (holds iff F(x,y)=x here)
  //   eq2: F(x,y)=y, F(y,z)=z, F(x,z)=x
  bool eq1 = f.at(x, y) == x && f.at(x, z) == z && f.at(y, z) == y;
  bool eq2 = f.at(x, y) == y && f.at(y, z) == z && f.at(x, z) == x;
  char tag = 0;
  if (eq1) {
    if (z < x && x < y) tag = 'a';
    if (y < x && x < z) tag = 'b';
  } else if (eq2) {
    if (x < z && z < y) tag = 'c';
    if (y < z && z < x) tag = 'd';
  }
  if (tag == 0)
    fail(errc::internal_contradiction, "failing triple matches no nondecreasing picture");
  return Witness{PictureCase{x, y, z, tag}};
}

// Three-branch piecewise description around the half-neutral elements.
// For e <= f:  F = min where max(x,y) <= e;  F = y on the band e <= x <= f;
//              F = max where min(x,y) >= f.
// Mirrored for f <= e: the middle branch is F = x on the band f <= y <= e.
// Cells covered by no branch are left unchecked.
inline bool check_piecewise_structure(const BinaryOpTable& f) {
  detail::require(is_associative(f), "associative");
  auto [e, l] = half_neutral_elements(f);  // also checks quasitrivial + nondecreasing
  int k = f.chain_size();
  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y) {
      Elem lo = std::min(x, y), hi = std::max(x, y), v = f.at(x, y);
      if (e <= l) {
        if (hi <= e && v != lo) return false;
        if (e <= x && x <= l && v != y) return false;
        if (lo >= l && v != hi) return false;
      } else {
        if (hi <= l && v != lo) return false;
        if (l <= y && y <= e && v != x) return false;
        if (lo >= e && v != hi) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

struct PropertyReport {
  int k = 0;
  bool idempotent = false;
  bool quasitrivial = false;
  bool nondecreasing = false;
  bool monotone = false;
  bool symmetric = false;
  bool associative = false;
  bool bisymmetric = false;
  std::optional<Elem> neutral;
  std::optional<Elem> upper_half_neutral;  // e, only when quasitrivial + nondecreasing
  std::optional<Elem> lower_half_neutral;  // f, likewise
  std::vector<Witness> witnesses;          // one per false flag, plus the picture case
};

inline PropertyReport analyze(const BinaryOpTable& f) {
  PropertyReport r;
  r.k = f.chain_size();
  auto record = [&](bool& flag, PropertyCheck check) {
    flag = check.holds;
    if (!check.holds) r.witnesses.push_back(std::move(*check.witness));
  };
  record(r.idempotent, is_idempotent(f));
  record(r.quasitrivial, is_quasitrivial(f));
  record(r.nondecreasing, is_nondecreasing(f));
  record(r.monotone, is_monotone(f));
  record(r.symmetric, is_symmetric(f));
  record(r.associative, is_associative(f));
  record(r.bisymmetric, is_bisymmetric(f));
  r.neutral = neutral_element(f);
  if (r.quasitrivial && r.nondecreasing) {
    auto hn = half_neutral_elements(f);
    r.upper_half_neutral = hn.upper;
    r.lower_half_neutral = hn.lower;
    if (!r.associative)
      if (auto pic = non_associativity_pattern(f)) r.witnesses.push_back(*pic);
  }
  return r;
}

}  // namespace chainops
