#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "chainops/path.hpp"
#include "chainops/predicates.hpp"
#include "chainops/table.hpp"

namespace chainops {

// Decomposition of an associative quasitrivial nondecreasing operation into
// its downward-right path. Iterates squares Q_i = [a,b]^2 from [1,k]^2,
// dispatching on (F(a,b), F(b,a)):
//   I(a)  F(a,b)=F(b,a)=a                      -> Right,        Q_{i+1}=[a+1,b]^2
//   I(b)  F(a,b)=F(b,a)=b                      -> Down,         Q_{i+1}=[a,b-1]^2
//   II(a) F(a,b)=a, F(b,a)=b, F(a+1,a)=a+1     -> stop, Proj_x on [a,b]^2
//   II(b) F(a,b)=b, F(b,a)=a, F(a,a+1)=a+1     -> stop, Proj_y on [a,b]^2
//   III(a) F(a,b)=a, F(b,a)=b, F(a+1,a)=a      -> DiagFirst,    Q_{i+1}=[a+1,b-1]^2
//   III(b) F(a,b)=b, F(b,a)=a, F(a,a+1)=a      -> DiagSecond,   Q_{i+1}=[a+1,b-1]^2
// and stops with projection None once a = b.
inline PathDecomposition decompose(const BinaryOpTable& f) {
  if (auto c = is_associative(f); !c)
    fail(errc::precondition_failed, "decompose: not associative (" + describe(*c.witness) + ")");
  if (auto c = is_quasitrivial(f); !c)
    fail(errc::precondition_failed, "decompose: not quasitrivial (" + describe(*c.witness) + ")");
  if (auto c = is_nondecreasing(f); !c)
    fail(errc::precondition_failed, "decompose: not nondecreasing (" + describe(*c.witness) + ")");

  int k = f.chain_size();
  Elem a = 1, b = static_cast<Elem>(k);
  std::vector<PathStep> steps;
  TerminalProjection proj = TerminalProjection::None;
  while (a < b) {
    Elem fab = f.at(a, b), fba = f.at(b, a);
    if (fab == a && fba == a) {
      steps.push_back(PathStep::Right);
      ++a;
    } else if (fab == b && fba == b) {
      steps.push_back(PathStep::Down);
      --b;
    } else if (fab == a && fba == b) {
      if (f.at(a + 1, a) == a + 1) {
        proj = TerminalProjection::ProjX;
        break;
      }
      steps.push_back(PathStep::DiagFirst);
      ++a, --b;
    } else if (fab == b && fba == a) {
      if (f.at(a, a + 1) == a + 1) {
        proj = TerminalProjection::ProjY;
        break;
      }
      steps.push_back(PathStep::DiagSecond);
      ++a, --b;
    } else {
      fail(errc::internal_contradiction, "no algorithm case applies on [" + std::to_string(a) +
                                             "," + std::to_string(b) + "]^2");
    }
  }
  PathDecomposition d(k, std::move(steps), proj);

  // Endpoint coordinates are the half-neutral elements: (a,b) = (f,e) for a
  // Proj_x terminal, (e,f) for Proj_y, and e = f = a on the diagonal.
  HalfNeutrals hn = half_neutral_elements(f);
  bool consistent;
  switch (proj) {
    case TerminalProjection::ProjX: consistent = hn.lower == a && hn.upper == b; break;
    case TerminalProjection::ProjY: consistent = hn.upper == a && hn.lower == b; break;
    default: consistent = hn.upper == a && hn.lower == a; break;
  }
  if (!consistent)
    fail(errc::internal_contradiction,
         "endpoint (" + std::to_string(a) + "," + std::to_string(b) +
             ") disagrees with half-neutral elements (e=" + std::to_string(hn.upper) +
             ", f=" + std::to_string(hn.lower) + ")");
  return d;
}

// Reconstruction of Theorem thmchar. Values: max above the barrier, min
// below; the terminal projection on [a,b]^2; min/max on path points with a
// horizontal/vertical outgoing segment (same at the mirror point); the chosen
// argument at diagonal points, mirrored so that F(p_i) != F(q_i).
inline BinaryOpTable reconstruct(const PathDecomposition& d) {
  int k = d.chain_size();
  const auto& pts = d.points();
  const auto& steps = d.steps();
  auto [a, b] = d.end();

  return table_from_fn(k, [&](Elem x, Elem y) -> Elem {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      bool on_p = pts[i].x == x && pts[i].y == y;
      bool on_q = pts[i].y == x && pts[i].x == y;
      if (!on_p && !on_q) continue;
      switch (steps[i]) {
        case PathStep::Right: return std::min(x, y);
        case PathStep::Down: return std::max(x, y);
        case PathStep::DiagFirst: return x;
        case PathStep::DiagSecond: return y;
      }
    }
    if (a <= x && x <= b && a <= y && y <= b) {
      if (d.projection() == TerminalProjection::ProjX) return x;
      if (d.projection() == TerminalProjection::ProjY) return y;
      return a;  // a = b, the single diagonal endpoint
    }
    Region r = classify(d, x, y);
    if (region_is_above(r)) return std::max(x, y);
    if (region_is_below(r)) return std::min(x, y);
    fail(errc::internal_contradiction, "unvalued cell (" + std::to_string(x) + "," +
                                           std::to_string(y) + ") in reconstruction");
  });
}

// Theorem tbfo1: the operation of a decomposition is bisymmetric exactly when
// the path has only horizontal and vertical segments.
inline bool is_bisymmetric_form(const PathDecomposition& d) { return d.diag_count() == 0; }

// Symmetric (with a neutral element) additionally requires the path to reach
// the diagonal.
inline bool is_symmetric_form(const PathDecomposition& d) {
  return d.diag_count() == 0 && d.projection() == TerminalProjection::None;
}

}  // namespace chainops
