#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chainops/census.hpp"
#include "chainops/nary.hpp"
#include "chainops/pathform.hpp"
#include "chainops/predicates.hpp"
#include "chainops/render.hpp"

namespace chainops {

// One pass/fail line of the theorem suite; the tag names the paper result a
// failure would violate.
struct TheoremCheck {
  std::string tag;
  bool pass = false;
  std::string detail;
};

namespace verification_detail {

inline TheoremCheck run(const std::string& tag, const std::function<std::string()>& body) {
  try {
    return {tag, true, body()};
  } catch (const std::exception& e) {
    return {tag, false, e.what()};
  }
}

[[noreturn]] inline void reject(const std::string& what) {
  throw std::runtime_error(what);
}

// All 2^(k^2-k) quasitrivial tables (diagonal forced, each off-diagonal cell
// in {x,y}), in mask order with off-diagonal cells row-major.
inline void for_each_quasitrivial(int k, const std::function<void(const BinaryOpTable&)>& visit) {
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y)
      if (x != y) cells.emplace_back(x, y);
  std::vector<Elem> flat(static_cast<std::size_t>(k) * k);
  for (Elem x = 1; x <= k; ++x) flat[static_cast<std::size_t>(x - 1) * k + (x - 1)] = x;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto [x, y] = cells[i];
      Elem v = (mask >> i) & 1 ? std::max(x, y) : std::min(x, y);
      flat[static_cast<std::size_t>(x - 1) * k + (y - 1)] = v;
    }
    visit(BinaryOpTable(k, flat));
  }
}

inline std::size_t count_filtered(int k, EnumFilter f) {
  return enumerate_filtered(k, f).size();
}

}  // namespace verification_detail

// --------------------------------------------------------------------------
// Individual theorem checks. Each caps its own chain size; k_max only lowers
// the cap.
// --------------------------------------------------------------------------

// First ten values of A_k against the paper's list.
inline TheoremCheck check_tnumb_list() {
  return verification_detail::run("tnumb-list", [] {
    const long long expected[] = {1, 4, 12, 34, 94, 258, 706, 1930, 5274, 14410};
    for (int k = 1; k <= 10; ++k)
      if (count_A(k) != expected[k - 1])
        verification_detail::reject("A_" + std::to_string(k) + " != paper value");
    return "A_1..A_10 match the published list";
  });
}

// Floating closed forms round to the recurrence values.
inline TheoremCheck check_tnumb_closed() {
  return verification_detail::run("tnumb-closed", [] {
    auto r = closed_form_check(25, 1e-9);
    if (!r.ok) verification_detail::reject("relative deviation above tolerance");
    std::ostringstream os;
    os << "closed forms match for k<=25, max relative deviation " << r.max_rel_deviation;
    return os.str();
  });
}

// Census counts against A_k and B_k.
inline TheoremCheck check_tnumb(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("tnumb", [cap] {
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      EnumFilter assoc_neutral = assoc;
      assoc_neutral.require_neutral = true;
      auto a = verification_detail::count_filtered(k, assoc);
      auto b = verification_detail::count_filtered(k, assoc_neutral);
      if (BigInt(a) != count_A(k))
        verification_detail::reject("associative count " + std::to_string(a) + " != A_" +
                                    std::to_string(k));
      if (BigInt(b) != count_B(k))
        verification_detail::reject("associative-with-neutral count " + std::to_string(b) +
                                    " != B_" + std::to_string(k));
    }
    return "census counts equal A_k, B_k for k <= " + std::to_string(cap);
  });
}

// Census counts against C_k and D_k.
inline TheoremCheck check_binumb(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("binumb", [cap] {
    for (int k = 1; k <= cap; ++k) {
      EnumFilter bisym;
      bisym.require_bisymmetric = true;
      EnumFilter bisym_neutral = bisym;
      bisym_neutral.require_neutral = true;
      auto c = verification_detail::count_filtered(k, bisym);
      auto d = verification_detail::count_filtered(k, bisym_neutral);
      if (BigInt(c) != count_C(k))
        verification_detail::reject("bisymmetric count " + std::to_string(c) + " != C_" +
                                    std::to_string(k));
      if (BigInt(d) != count_D(k))
        verification_detail::reject("bisymmetric-with-neutral count " + std::to_string(d) +
                                    " != D_" + std::to_string(k));
    }
    return "census counts equal C_k, D_k for k <= " + std::to_string(cap);
  });
}

// Symmetric census has 2^(k-1) members, every one associative with a neutral
// element, and the associative filter is redundant on it.
inline TheoremCheck check_ccard(int k_max) {
  int cap = std::min(k_max, max_enum_chain);
  return verification_detail::run("ccard", [cap] {
    for (int k = 1; k <= cap; ++k) {
      EnumFilter sym;
      sym.require_symmetric = true;
      auto tables = enumerate_filtered(k, sym);
      if (BigInt(tables.size()) != count_D(k))
        verification_detail::reject("symmetric count " + std::to_string(tables.size()) +
                                    " != 2^(k-1) at k=" + std::to_string(k));
      for (const auto& t : tables) {
        if (!is_associative(t))
          verification_detail::reject("symmetric table not associative:\n" + format_table(t));
        if (!neutral_element(t))
          verification_detail::reject("symmetric table lacks neutral element:\n" +
                                      format_table(t));
      }
    }
    return "symmetric census is 2^(k-1), all associative with neutral, k <= " +
           std::to_string(cap);
  });
}

// Quasitrivial symmetric nondecreasing implies associative with a neutral
// element (same sweep as ccard, kept under its own tag).
inline TheoremCheck check_prop_ane(int k_max) {
  int cap = std::min(k_max, max_enum_chain);
  return verification_detail::run("prop-ane", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter sym;
      sym.require_symmetric = true;
      for (const auto& t : enumerate_filtered(k, sym)) {
        ++seen;
        if (!is_associative(t) || !neutral_element(t))
          verification_detail::reject("counterexample:\n" + format_table(t));
      }
    }
    return std::to_string(seen) + " symmetric tables all associative with neutral";
  });
}

// Every quasitrivial nondecreasing table on L_2 is associative.
inline TheoremCheck check_cor2() {
  return verification_detail::run("cor2", [] {
    auto tables = enumerate_qn(2);
    if (tables.size() != 4) verification_detail::reject("expected 4 tables on L_2");
    for (const auto& t : tables)
      if (!is_associative(t))
        verification_detail::reject("non-associative table on L_2:\n" + format_table(t));
    return "all 4 quasitrivial nondecreasing tables on L_2 associative";
  });
}

// Path census equals the associative census; weighted-path identities hold.
inline TheoremCheck check_bijection(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("tfo1-thmchar", [cap] {
    std::ostringstream os;
    for (int k = 1; k <= cap; ++k) {
      auto r = verify_bijection(k);
      if (k > 1) os << ", ";
      os << "k=" << k << ": " << r.decomposition_count << " decompositions";
    }
    return os.str();
  });
}

// Lemma lcount1 identities, restated directly over the path census.
inline TheoremCheck check_lcount1(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("lcount1", [cap] {
    for (int k = 1; k <= cap; ++k) {
      std::map<std::vector<PathStep>, int> shape_seen;
      BigInt diagonal_weight = 0, total_weight = 0;
      for_each_path(k, [&](const PathDecomposition& d) {
        // weight once per shape: skip repeats produced by diagonal choices /
        // projections by counting only ProjX-or-None with all-DiagFirst.
        bool canonical_choice =
            std::none_of(d.steps().begin(), d.steps().end(),
                         [](PathStep s) { return s == PathStep::DiagSecond; }) &&
            d.projection() != TerminalProjection::ProjY;
        if (!canonical_choice) return;
        BigInt w = BigInt(1) << d.diag_count();
        total_weight += w;
        if (d.end().x == d.end().y) diagonal_weight += w;
      });
      if (diagonal_weight != count_B(k)) verification_detail::reject("weights to diagonal != B_k");
      if (2 * total_weight != count_A(k) + count_B(k))
        verification_detail::reject("twice total weight != A_k + B_k");
    }
    return "weighted path identities hold for k <= " + std::to_string(cap);
  });
}

// Round trips between tables and decompositions.
inline TheoremCheck check_roundtrip(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("roundtrip", [cap] {
    std::size_t tables = 0, decomps = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& t : enumerate_filtered(k, assoc)) {
        ++tables;
        if (reconstruct(decompose(t)) != t)
          verification_detail::reject("reconstruct(decompose(F)) != F:\n" + format_table(t));
      }
      for_each_path(k, [&](const PathDecomposition& d) {
        ++decomps;
        if (decompose(reconstruct(d)) != d)
          verification_detail::reject("decompose(reconstruct(D)) != D: " + format_path_spec(d));
      });
    }
    return std::to_string(tables) + " tables and " + std::to_string(decomps) +
           " decompositions round-trip";
  });
}

// Monotone <=> nondecreasing over every quasitrivial table.
inline TheoremCheck check_cnem(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("cnem", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k)
      verification_detail::for_each_quasitrivial(k, [&](const BinaryOpTable& t) {
        ++seen;
        if (is_monotone(t).holds != is_nondecreasing(t).holds)
          verification_detail::reject("monotone/nondecreasing disagree:\n" + format_table(t));
      });
    return std::to_string(seen) + " quasitrivial tables agree (k <= " + std::to_string(cap) + ")";
  });
}

// Observation l1: row fibers {y: F(x,y)=x} and column fibers {s: F(s,t)=t}
// of a quasitrivial monotone table are intervals through the diagonal, and
// the complementary fibers are intervals on each side.
inline TheoremCheck check_l1(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("l1", [cap] {
    auto contiguous = [](const std::vector<Elem>& v) {
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[i - 1] + 1) return false;
      return true;
    };
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k)
      verification_detail::for_each_quasitrivial(k, [&](const BinaryOpTable& t) {
        if (!is_monotone(t)) return;
        ++seen;
        for (Elem x = 1; x <= k; ++x) {
          std::vector<Elem> keeps_x, row_low, row_high, col_keeps, col_low, col_high;
          for (Elem y = 1; y <= k; ++y) {
            if (t.at(x, y) == x) keeps_x.push_back(y);
            if (t.at(x, y) == y && y < x) row_low.push_back(y);
            if (t.at(x, y) == y && y > x) row_high.push_back(y);
            if (t.at(y, x) == x) col_keeps.push_back(y);
            if (t.at(y, x) == y && y < x) col_low.push_back(y);
            if (t.at(y, x) == y && y > x) col_high.push_back(y);
          }
          for (const auto* fiber : {&keeps_x, &row_low, &row_high, &col_keeps, &col_low, &col_high})
            if (!contiguous(*fiber))
              verification_detail::reject("fiber not an interval:\n" + format_table(t));
        }
      });
    return std::to_string(seen) + " quasitrivial monotone tables have interval fibers";
  });
}

namespace verification_detail {
inline void revalidate_picture(const BinaryOpTable& t, const PictureCase& pc) {
  Elem x = pc.x, y = pc.y, z = pc.z;
  if (x == y || y == z || x == z) reject("picture triple not pairwise distinct");
  bool eq1 = t.at(x, y) == x && t.at(x, z) == z && t.at(y, z) == y;
  bool eq2 = t.at(x, y) == y && t.at(y, z) == z && t.at(x, z) == x;
  bool order_ok = false;
  switch (pc.tag) {
    case 'a': order_ok = eq1 && z < x && x < y; break;
    case 'b': order_ok = eq1 && y < x && x < z; break;
    case 'c': order_ok = eq2 && x < z && z < y; break;
    case 'd': order_ok = eq2 && y < z && z < x; break;
    default: reject("unknown picture tag");
  }
  if (!order_ok) reject("picture tag does not re-validate");
  if (t.at(t.at(x, y), z) == t.at(x, t.at(y, z)))
    reject("picture triple is not an associativity counterexample");
}
}  // namespace verification_detail

// Picture test: over the nondecreasing quasitrivial corpus, a picture exists
// iff associativity fails, and it re-validates against its template.
inline TheoremCheck check_lpic(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("lpic", [cap] {
    std::size_t pictures = 0;
    for (int k = 1; k <= cap; ++k)
      verification_detail::for_each_quasitrivial(k, [&](const BinaryOpTable& t) {
        if (!is_nondecreasing(t)) return;
        auto pattern = non_associativity_pattern(t);
        bool assoc = is_associative(t).holds;
        if (pattern.has_value() == assoc)
          verification_detail::reject("picture presence disagrees with associativity:\n" +
                                      format_table(t));
        if (pattern) {
          ++pictures;
          verification_detail::revalidate_picture(t, std::get<PictureCase>(*pattern));
        }
      });
    return std::to_string(pictures) + " pictures re-validated (k <= " + std::to_string(cap) + ")";
  });
}

// Bisymmetric quasitrivial nondecreasing tables are symmetric at every cell
// not inside [e^f, evf]^2.
inline TheoremCheck check_thmbi(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("thmbi", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter bisym;
      bisym.require_bisymmetric = true;
      for (const auto& t : enumerate_filtered(k, bisym)) {
        ++seen;
        auto hn = half_neutral_elements(t);
        Elem lo = std::min(hn.upper, hn.lower), hi = std::max(hn.upper, hn.lower);
        for (Elem x = 1; x <= k; ++x)
          for (Elem y = 1; y <= k; ++y) {
            bool inside = lo <= x && x <= hi && lo <= y && y <= hi;
            if (!inside && t.at(x, y) != t.at(y, x))
              verification_detail::reject("asymmetry outside the half-neutral square:\n" +
                                          format_table(t));
          }
      }
    }
    return std::to_string(seen) + " bisymmetric tables symmetric outside the square";
  });
}

// Piecewise min / projection / max description of the associative census.
inline TheoremCheck check_cor_piecewise(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("cor-piecewise", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& t : enumerate_filtered(k, assoc)) {
        ++seen;
        if (!check_piecewise_structure(t))
          verification_detail::reject("piecewise description fails:\n" + format_table(t));
      }
    }
    return std::to_string(seen) + " associative tables match the piecewise description";
  });
}

// Endpoint/projection agreement with the half-neutral elements, plus the
// literal projection blocks of Lemma limp(b) / Remark rimp(b).
inline TheoremCheck check_corcases(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("corcases", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& t : enumerate_filtered(k, assoc)) {
        ++seen;
        auto d = decompose(t);  // internally cross-checks (a,b) vs (e,f)
        auto [a, b] = d.end();
        auto hn = half_neutral_elements(t);
        switch (d.projection()) {
          case TerminalProjection::ProjX:
            if (!(hn.lower < hn.upper && hn.lower == a && hn.upper == b))
              verification_detail::reject("Proj_x endpoint is not (f,e) with f<e");
            for (Elem x = a; x <= b; ++x)
              for (Elem y = a; y <= b; ++y)
                if (t.at(x, y) != x)
                  verification_detail::reject("terminal square is not Proj_x");
            break;
          case TerminalProjection::ProjY:
            if (!(hn.upper < hn.lower && hn.upper == a && hn.lower == b))
              verification_detail::reject("Proj_y endpoint is not (e,f) with e<f");
            for (Elem x = a; x <= b; ++x)
              for (Elem y = a; y <= b; ++y)
                if (t.at(x, y) != y)
                  verification_detail::reject("terminal square is not Proj_y");
            break;
          case TerminalProjection::None:
            if (!(hn.upper == a && hn.lower == a && neutral_element(t) == a))
              verification_detail::reject("diagonal endpoint is not the neutral element");
            break;
        }
      }
    }
    return std::to_string(seen) + " decompositions agree with corcases";
  });
}

// Symmetrizations of associative tables stay associative.
inline TheoremCheck check_prop_fodor(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("prop-fodor", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k)
      verification_detail::for_each_quasitrivial(k, [&](const BinaryOpTable& t) {
        if (!is_associative(t)) return;
        ++seen;
        if (!is_associative(upper_symmetrization(t)) || !is_associative(lower_symmetrization(t)))
          verification_detail::reject("symmetrization not associative:\n" + format_table(t));
      });
    return std::to_string(seen) + " associative quasitrivial tables checked";
  });
}

// Lemma lba: (b) bisymmetric quasitrivial tables are associative, exhaustive;
// (c) associative symmetric tables are bisymmetric, over the census.
inline TheoremCheck check_lba(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("lba", [cap] {
    for (int k = 1; k <= cap; ++k) {
      verification_detail::for_each_quasitrivial(k, [&](const BinaryOpTable& t) {
        if (is_bisymmetric(t) && !is_associative(t))
          verification_detail::reject("bisymmetric quasitrivial but not associative:\n" +
                                      format_table(t));
      });
      EnumFilter sym;
      sym.require_symmetric = true;
      sym.require_associative = true;
      for (const auto& t : enumerate_filtered(k, sym))
        if (!is_bisymmetric(t))
          verification_detail::reject("associative symmetric but not bisymmetric:\n" +
                                      format_table(t));
    }
    return "lba(b) and lba(c) hold for k <= " + std::to_string(cap);
  });
}

// Reduction round trip: reduce(derive(G,3)) recovers G for the associative
// census; the derived tables pass the n-ary predicate suite; derivation is
// injective across the census.
inline TheoremCheck check_t2_reduction(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("t2-eqgf", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      std::map<std::vector<Elem>, BinaryOpTable> derived_to_g;
      for (const auto& g : enumerate_filtered(k, assoc)) {
        ++seen;
        NAryOpTable f = derive(g, 3);
        if (!nary_is_associative(f) || !nary_is_quasitrivial(f) || !nary_is_nondecreasing(f))
          verification_detail::reject("derived table fails predicates:\n" + format_table(g));
        auto r = reduce(f);
        if (!r.is_reduced() || *r.reduced != g)
          verification_detail::reject("reduce does not recover G:\n" + format_table(g));
        auto [it, fresh] = derived_to_g.emplace(f.values(), g);
        if (!fresh)
          verification_detail::reject("derive collides for two tables:\n" + format_table(g) +
                                      "and\n" + format_table(it->second));
      }
    }
    return std::to_string(seen) + " reductions round-trip (n=3, k <= " + std::to_string(cap) + ")";
  });
}

// Remark rem2: the fold of a quasitrivial associative G is quasitrivial, and
// a quasitrivial fold forces G quasitrivial (contrapositive over constants).
inline TheoremCheck check_rem2(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("rem2", [cap] {
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& g : enumerate_filtered(k, assoc))
        if (!nary_is_quasitrivial(derive(g, 3)))
          verification_detail::reject("fold of quasitrivial G not quasitrivial:\n" +
                                      format_table(g));
      for (Elem c = 1; c <= k; ++c) {  // constant tables: associative, not quasitrivial for k>1
        if (k == 1) continue;
        auto constant = table_from_fn(k, [c](Elem, Elem) { return c; });
        if (nary_is_quasitrivial(derive(constant, 3)))
          verification_detail::reject("fold of non-quasitrivial G is quasitrivial");
      }
    }
    return "quasitriviality transfers through derivation (k <= " + std::to_string(cap) + ")";
  });
}

// Appendix fixture: the ternary parity operation is associative, quasitrivial,
// irreducible, not monotone, not nondecreasing; Proposition paqm's
// contrapositive in action.
inline TheoremCheck check_thmakk_paqm() {
  return verification_detail::run("thmAkk-paqm", [] {
    for (int n : {3, 5}) {
      NAryOpTable f = parity_counterexample(n);
      if (!nary_is_associative(f)) verification_detail::reject("parity op not associative");
      if (!nary_is_quasitrivial(f)) verification_detail::reject("parity op not quasitrivial");
      if (!nary_is_idempotent(f)) verification_detail::reject("parity op not idempotent");
      if (reduce(f).is_reduced()) verification_detail::reject("parity op reduced");
      if (nary_is_monotone(f).holds) verification_detail::reject("parity op monotone");
      if (nary_is_nondecreasing(f).holds) verification_detail::reject("parity op nondecreasing");
    }
    return "parity ops (n=3,5) associative quasitrivial irreducible non-monotone";
  });
}

// Lemma lASP on the derived corpus: associative monotone tables are
// nondecreasing in the first and last variable.
inline TheoremCheck check_lasp(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("lASP", [cap] {
    std::size_t seen = 0;
    auto first_last_nondecreasing = [](const NAryOpTable& f) {
      int n = f.arity(), k = f.chain_size();
      std::vector<Elem> t(static_cast<std::size_t>(n), 1);
      do {
        for (int var : {0, n - 1}) {
          if (t[static_cast<std::size_t>(var)] >= k) continue;
          auto up = t;
          ++up[static_cast<std::size_t>(var)];
          if (f.at(t) > f.at(up)) return false;
        }
      } while (detail::next_tuple(t, k));
      return true;
    };
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& g : enumerate_filtered(k, assoc)) {
        NAryOpTable f = derive(g, 3);
        if (!nary_is_monotone(f)) continue;
        ++seen;
        if (!first_last_nondecreasing(f))
          verification_detail::reject("first/last variable decreasing:\n" + format_table(g));
      }
    }
    return std::to_string(seen) + " associative monotone n-ary tables checked";
  });
}

// Corollary cnemh: monotone <=> nondecreasing for the n-ary corpus (derived
// tables plus the parity op).
inline TheoremCheck check_cnemh(int k_max) {
  int cap = std::min(k_max, 4);
  return verification_detail::run("cnemh", [cap] {
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& g : enumerate_filtered(k, assoc)) {
        NAryOpTable f = derive(g, 3);
        if (nary_is_monotone(f).holds != nary_is_nondecreasing(f).holds)
          verification_detail::reject("monotone/nondecreasing disagree on fold of:\n" +
                                      format_table(g));
      }
    }
    NAryOpTable parity = parity_counterexample(3);
    if (nary_is_monotone(parity).holds || nary_is_nondecreasing(parity).holds)
      verification_detail::reject("parity op should fail both sides");
    return "n-ary monotone <=> nondecreasing over the corpus (k <= " + std::to_string(cap) + ")";
  });
}

// The middle ternary projection is bisymmetric quasitrivial nondecreasing but
// not associative.
inline TheoremCheck check_middle_projection() {
  return verification_detail::run("nary-middle-proj", [] {
    std::vector<Elem> values;
    std::vector<Elem> t(3, 1);
    do {
      values.push_back(t[1]);
    } while (detail::next_tuple(t, 2));
    NAryOpTable f(3, 2, std::move(values));
    if (!nary_is_bisymmetric(f)) verification_detail::reject("middle projection not bisymmetric");
    if (!nary_is_quasitrivial(f)) verification_detail::reject("middle projection not quasitrivial");
    if (!nary_is_nondecreasing(f))
      verification_detail::reject("middle projection not nondecreasing");
    if (nary_is_associative(f).holds)
      verification_detail::reject("middle projection should not be associative");
    return "ternary middle projection: bisymmetric, not associative";
  });
}

// Contour geometry over the associative census: 2k segments per table, every
// cell covered by the segment of its value, no crossing between distinct
// values.
inline TheoremCheck check_contour(int k_max) {
  int cap = std::min(k_max, 5);
  return verification_detail::run("contour", [cap] {
    std::size_t seen = 0;
    for (int k = 1; k <= cap; ++k) {
      EnumFilter assoc;
      assoc.require_associative = true;
      for (const auto& t : enumerate_filtered(k, assoc)) {
        ++seen;
        auto segs = contour_segments(t);
        if (segs.size() != 2 * static_cast<std::size_t>(k))
          verification_detail::reject("expected 2k contour segments");
        const ContourSegment* h[1 + BinaryOpTable::max_chain_size] = {};
        const ContourSegment* v[1 + BinaryOpTable::max_chain_size] = {};
        for (const auto& s : segs)
          (s.orientation == Orientation::Horizontal ? h : v)[s.value] = &s;
        for (Elem x = 1; x <= k; ++x)
          for (Elem y = 1; y <= k; ++y) {
            Elem val = t.at(x, y);
            bool on_h = val == y && h[val]->lo <= x && x <= h[val]->hi;
            bool on_v = val == x && v[val]->lo <= y && y <= v[val]->hi;
            if (!(on_h || on_v)) verification_detail::reject("cell not covered by its segments");
            if (x != y && on_h && on_v) verification_detail::reject("off-diagonal cell on both");
          }
        for (Elem a = 1; a <= k; ++a)
          for (Elem b = 1; b <= k; ++b)
            if (a != b && h[a]->lo <= b && b <= h[a]->hi && v[b]->lo <= a && a <= v[b]->hi)
              verification_detail::reject("contour segments of distinct values cross");
      }
    }
    return std::to_string(seen) + " contour plots validated (k <= " + std::to_string(cap) + ")";
  });
}

// The full theorem suite in a fixed order.
inline std::vector<TheoremCheck> run_verification(int k_max) {
  std::vector<TheoremCheck> checks;
  checks.push_back(check_tnumb_list());
  checks.push_back(check_tnumb_closed());
  checks.push_back(check_tnumb(k_max));
  checks.push_back(check_binumb(k_max));
  checks.push_back(check_ccard(k_max));
  checks.push_back(check_prop_ane(k_max));
  checks.push_back(check_cor2());
  checks.push_back(check_bijection(k_max));
  checks.push_back(check_lcount1(k_max));
  checks.push_back(check_roundtrip(k_max));
  checks.push_back(check_cnem(k_max));
  checks.push_back(check_l1(k_max));
  checks.push_back(check_lpic(k_max));
  checks.push_back(check_thmbi(k_max));
  checks.push_back(check_cor_piecewise(k_max));
  checks.push_back(check_corcases(k_max));
  checks.push_back(check_prop_fodor(k_max));
  checks.push_back(check_lba(k_max));
  checks.push_back(check_t2_reduction(k_max));
  checks.push_back(check_rem2(k_max));
  checks.push_back(check_thmakk_paqm());
  checks.push_back(check_lasp(k_max));
  checks.push_back(check_cnemh(k_max));
  checks.push_back(check_middle_projection());
  checks.push_back(check_contour(k_max));
  return checks;
}

}  // namespace chainops
