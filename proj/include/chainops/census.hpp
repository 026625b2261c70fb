#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "chainops/pathform.hpp"
#include "chainops/predicates.hpp"
#include "chainops/table.hpp"

namespace chainops {

// B_k exceeds 64 bits near k = 43; counts are exact big integers throughout.
using BigInt = boost::multiprecision::cpp_int;

constexpr int max_enum_chain = 6;   // 2^(k^2-k) candidates behind the pruning
constexpr int max_path_chain = 32;  // path census grows like 2.73^k

// ---------------------------------------------------------------------------
// Exact counts. A_k and B_k come from the integer recurrence
//   B_1 = 1, B_2 = 2, B_k = 2 B_{k-1} + 2 B_{k-2},  A_k = 2 sum B_i - B_k;
// C_k and D_k from the closed integer forms D_k = 2^{k-1}, C_k = 3*2^{k-1}-2.
// The irrational closed forms are verified against these, never used to
// produce values.
// ---------------------------------------------------------------------------

inline BigInt count_B(int k) {
  if (k < 1) fail(errc::out_of_range, "k must be >= 1");
  if (k == 1) return 1;
  BigInt prev = 1, cur = 2;  // B_1, B_2
  for (int i = 3; i <= k; ++i) {
    BigInt next = 2 * cur + 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline BigInt count_A(int k) {
  if (k < 1) fail(errc::out_of_range, "k must be >= 1");
  BigInt sum = 0, prev = 0, cur = 1;  // cur = B_1
  for (int i = 1; i <= k; ++i) {
    if (i >= 2) {
      BigInt next = (i == 2) ? BigInt(2) : BigInt(2 * cur + 2 * prev);
      prev = cur;
      cur = next;
    }
    sum += cur;
  }
  return 2 * sum - cur;
}

inline BigInt count_D(int k) {
  if (k < 1) fail(errc::out_of_range, "k must be >= 1");
  return BigInt(1) << (k - 1);
}

inline BigInt count_C(int k) {
  if (k < 1) fail(errc::out_of_range, "k must be >= 1");
  return 3 * (BigInt(1) << (k - 1)) - 2;
}

enum class Provenance { Recurrence, BruteForce, ClosedForm };

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Recurrence: return "recurrence";
    case Provenance::BruteForce: return "brute-force";
    case Provenance::ClosedForm: return "closed-form";
  }
  return "?";
}

struct CountTable {
  int k_max = 0;
  std::vector<BigInt> A, B, C, D;          // indexed 0..k_max-1 for k = 1..k_max
  std::vector<Provenance> provenance;      // per k
};

// ---------------------------------------------------------------------------
// Enumeration of quasitrivial nondecreasing tables
// ---------------------------------------------------------------------------

struct EnumFilter {
  bool require_associative = false;
  bool require_bisymmetric = false;
  bool require_symmetric = false;
  bool require_neutral = false;
};

// Every quasitrivial nondecreasing table on L_k exactly once, in
// lexicographic order of the flattened value array. Backtracking over the
// off-diagonal cells (each forced into {x,y}) in row-major order, pruning on
// the already-assigned upper and left neighbours.
inline std::vector<BinaryOpTable> enumerate_qn(int k) {
  if (k < 1 || k > max_enum_chain)
    fail(errc::bound_exceeded,
         "table enumeration supports 1 <= k <= " + std::to_string(max_enum_chain));
  std::vector<BinaryOpTable> out;
  std::vector<Elem> flat(static_cast<std::size_t>(k) * k, 0);
  auto at = [&](Elem x, Elem y) -> Elem& {
    return flat[static_cast<std::size_t>(x - 1) * k + (y - 1)];
  };

  std::function<void(int)> place = [&](int cell) {
    if (cell == k * k) {
      out.emplace_back(k, flat);
      return;
    }
    Elem x = static_cast<Elem>(cell / k + 1), y = static_cast<Elem>(cell % k + 1);
    Elem lo = std::min(x, y), hi = std::max(x, y);
    int candidates = (x == y) ? 1 : 2;  // diagonal forced to x
    for (int c = 0; c < candidates; ++c) {
      Elem v = (c == 0) ? lo : hi;
      if (y > 1 && at(x, y - 1) > v) continue;
      if (x > 1 && at(x - 1, y) > v) continue;
      at(x, y) = v;
      place(cell + 1);
    }
    at(x, y) = 0;
  };
  place(0);
  return out;
}

inline bool filter_accepts(const EnumFilter& filter, const BinaryOpTable& t) {
  if (filter.require_associative && !is_associative(t)) return false;
  if (filter.require_bisymmetric && !is_bisymmetric(t)) return false;
  if (filter.require_symmetric && !is_symmetric(t)) return false;
  if (filter.require_neutral && !neutral_element(t)) return false;
  return true;
}

inline std::vector<BinaryOpTable> enumerate_filtered(int k, const EnumFilter& filter) {
  std::vector<BinaryOpTable> out;
  for (auto& t : enumerate_qn(k))
    if (filter_accepts(filter, t)) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of path decompositions
// ---------------------------------------------------------------------------

// Every valid PathDecomposition on L_k: all downward-right paths from (1,k)
// into T1 with every diagonal choice, both projections at a < b endpoints and
// None on the diagonal. Emission order: current endpoint first (ProjX before
// ProjY), then extensions R, D, Gx, Gy. The stream holds A_k decompositions.
inline void for_each_path(int k, const std::function<void(const PathDecomposition&)>& visit) {
  if (k < 1 || k > max_path_chain)
    fail(errc::bound_exceeded,
         "path enumeration supports 1 <= k <= " + std::to_string(max_path_chain));
  std::vector<PathStep> steps;
  std::function<void(Elem, Elem)> walk = [&](Elem a, Elem b) {
    if (a == b) {
      visit(PathDecomposition(k, steps, TerminalProjection::None));
    } else {
      visit(PathDecomposition(k, steps, TerminalProjection::ProjX));
      visit(PathDecomposition(k, steps, TerminalProjection::ProjY));
    }
    if (a + 1 <= b) {
      steps.push_back(PathStep::Right);
      walk(a + 1, b);
      steps.back() = PathStep::Down;
      walk(a, b - 1);
      steps.pop_back();
    }
    if (a + 2 <= b) {
      steps.push_back(PathStep::DiagFirst);
      walk(a + 1, b - 1);
      steps.back() = PathStep::DiagSecond;
      walk(a + 1, b - 1);
      steps.pop_back();
    }
  };
  walk(1, static_cast<Elem>(k));
}

inline std::vector<PathDecomposition> enumerate_paths(int k) {
  std::vector<PathDecomposition> out;
  for_each_path(k, [&](const PathDecomposition& d) { out.push_back(d); });
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form verification (Theorem tnumb)
// ---------------------------------------------------------------------------

struct ClosedFormReport {
  int k_max = 0;
  double rel_tol = 0;
  double max_rel_deviation = 0;  // before rounding
  bool ok = false;
};

// Evaluates the irrational closed forms for A_k and B_k in floating point,
// rounds, and confirms agreement with the recurrences. Throws mismatch if any
// rounded value disagrees; ok reflects the relative-deviation tolerance.
inline ClosedFormReport closed_form_check(int k_max, double rel_tol) {
  if (k_max < 1 || k_max > 30)
    fail(errc::bound_exceeded, "closed-form check supports 1 <= k_max <= 30");
  const double r = std::sqrt(3.0);
  ClosedFormReport report{k_max, rel_tol, 0.0, false};
  for (int k = 1; k <= k_max; ++k) {
    double up = std::pow(1.0 + r, k), dn = std::pow(1.0 - r, k);
    double a_closed = ((2.0 + r) * up + (2.0 - r) * dn - 4.0) / 6.0;
    double b_closed = (up - dn) / (2.0 * r);
    BigInt a_exact = count_A(k), b_exact = count_B(k);
    double pairs[2][2] = {{a_closed, a_exact.convert_to<double>()},
                          {b_closed, b_exact.convert_to<double>()}};
    for (auto& [closed, exact] : pairs) {
      double dev = std::abs(closed - exact) / exact;
      report.max_rel_deviation = std::max(report.max_rel_deviation, dev);
      if (std::llround(closed) != static_cast<long long>(exact))
        fail(errc::mismatch, "closed form disagrees with recurrence at k=" + std::to_string(k));
    }
  }
  report.ok = report.max_rel_deviation <= rel_tol;
  return report;
}

// ---------------------------------------------------------------------------
// Path census vs table census (Theorems tfo1/thmchar, Lemma lcount1)
// ---------------------------------------------------------------------------

struct BijectionReport {
  int k = 0;
  std::size_t decomposition_count = 0;
  std::size_t table_count = 0;
  BigInt diagonal_weight;  // sum of 2^m over diagonal-reaching path shapes
  bool ok = false;
};

// Exhaustively checks that reconstruct maps the path census bijectively onto
// the associative census, and the weighted-path identities:
//   sum of weights over diagonal-reaching paths = B_k,
//   A_k + B_k = twice the sum of weights over all paths in T1.
inline BijectionReport verify_bijection(int k) {
  if (k < 1 || k > 5) fail(errc::bound_exceeded, "bijection check supports 1 <= k <= 5");
  BijectionReport report;
  report.k = k;

  std::set<BinaryOpTable> from_paths;
  std::size_t decomps = 0, diagonal_decomps = 0, off_diagonal_decomps = 0;
  for_each_path(k, [&](const PathDecomposition& d) {
    ++decomps;
    if (d.projection() == TerminalProjection::None)
      ++diagonal_decomps;
    else
      ++off_diagonal_decomps;
    BinaryOpTable t = reconstruct(d);
    if (!from_paths.insert(t).second)
      fail(errc::bijection_failure,
           "reconstruct not injective at k=" + std::to_string(k) + ", duplicate table:\n" +
               format_table(t));
  });

  EnumFilter assoc;
  assoc.require_associative = true;
  auto census = enumerate_filtered(k, assoc);
  for (const auto& t : census)
    if (!from_paths.count(t))
      fail(errc::bijection_failure, "associative table missing from path census:\n" +
                                        format_table(t));
  if (census.size() != from_paths.size())
    fail(errc::bijection_failure, "path census has " + std::to_string(from_paths.size()) +
                                      " tables, enumeration has " + std::to_string(census.size()));

  // Each diagonal step doubles the decompositions of its path shape, so the
  // decomposition counts already are the weighted-path sums.
  BigInt b_k = count_B(k), a_k = count_A(k);
  report.diagonal_weight = diagonal_decomps;
  if (BigInt(diagonal_decomps) != b_k)
    fail(errc::bijection_failure, "diagonal-reaching weight " + std::to_string(diagonal_decomps) +
                                      " != B_k");
  // Off-diagonal decompositions double-count their shapes via the two
  // projections, so total weight over all shapes is off/2 + diagonal.
  BigInt twice_total_weight = BigInt(off_diagonal_decomps) + 2 * BigInt(diagonal_decomps);
  if (twice_total_weight != a_k + b_k)
    fail(errc::bijection_failure, "weighted-path identity A_k + B_k failed");
  if (BigInt(decomps) != a_k)
    fail(errc::bijection_failure,
         "decomposition count " + std::to_string(decomps) + " != A_k");

  report.decomposition_count = decomps;
  report.table_count = census.size();
  report.ok = true;
  return report;
}

// ---------------------------------------------------------------------------
// Count tables
// ---------------------------------------------------------------------------

inline CountTable make_count_table(int k_max) {
  if (k_max < 1) fail(errc::out_of_range, "k_max must be >= 1");
  CountTable t;
  t.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    t.A.push_back(count_A(k));
    t.B.push_back(count_B(k));
    t.C.push_back(count_C(k));
    t.D.push_back(count_D(k));
    t.provenance.push_back(Provenance::Recurrence);
  }
  return t;
}

// Counts recomputed from the table census; the slow cross-check behind the
// recurrences.
inline CountTable make_count_table_brute(int k_max) {
  if (k_max < 1 || k_max > max_enum_chain)
    fail(errc::bound_exceeded,
         "brute-force counting supports 1 <= k_max <= " + std::to_string(max_enum_chain));
  CountTable t;
  t.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    std::size_t a = 0, b = 0, c = 0, d = 0;
    for (const auto& table : enumerate_qn(k)) {
      bool assoc = is_associative(table).holds;
      bool bisym = is_bisymmetric(table).holds;
      bool neutral = neutral_element(table).has_value();
      if (assoc) ++a;
      if (assoc && neutral) ++b;
      if (bisym) ++c;
      if (bisym && neutral) ++d;
    }
    t.A.push_back(a);
    t.B.push_back(b);
    t.C.push_back(c);
    t.D.push_back(d);
    t.provenance.push_back(Provenance::BruteForce);
  }
  return t;
}

}  // namespace chainops
