#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "chainops/table.hpp"

namespace chainops {

// Counterexample witnesses. Each predicate that can fail returns the
// lexicographically smallest counterexample its scan order produces, so
// witnesses are deterministic and golden-testable.

struct NotIdempotent {
  Elem x;  // F(x,x) != x
};

struct NotQuasitrivial {
  Elem x, y;  // F(x,y) not in {x,y}
};

struct NotNondecreasing {
  Elem x1, y1, x2, y2;  // (x1,y1) <= (x2,y2) componentwise but F(x1,y1) > F(x2,y2)
};

// One section (a row x=fixed when along_y, else a column y=fixed) holding
// both a strict ascent and a strict descent, so it is neither nondecreasing
// nor nonincreasing.
struct NotMonotone {
  bool along_y;  // true: section y -> F(fixed, y); false: section x -> F(x, fixed)
  Elem fixed;
  Elem inc_lo, inc_hi;  // section value strictly increases from inc_lo to inc_hi
  Elem dec_lo, dec_hi;  // section value strictly decreases from dec_lo to dec_hi
};

struct NotSymmetric {
  Elem x, y;  // x < y, F(x,y) != F(y,x)
};

struct NotAssociative {
  Elem x, y, z;  // F(F(x,y),z) != F(x,F(y,z))
};

struct NotBisymmetric {
  Elem u, v, w, z;  // F(F(u,v),F(w,z)) != F(F(u,w),F(v,z))
};

// A realized non-associativity picture. (x,y,z) are the roles of the value
// pattern, tag 'a'..'d' the figure case:
//   'a': F(x,y)=x, F(x,z)=z, F(y,z)=y with z < x < y
//   'b': F(x,y)=x, F(x,z)=z, F(y,z)=y with y < x < z
//   'c': F(x,y)=y, F(y,z)=z, F(x,z)=x with x < z < y
//   'd': F(x,y)=y, F(y,z)=z, F(x,z)=x with y < z < x
// The same (x,y,z) is always an associativity counterexample.
struct PictureCase {
  Elem x, y, z;
  char tag;
};

using Witness = std::variant<NotIdempotent, NotQuasitrivial, NotNondecreasing, NotMonotone,
                             NotSymmetric, NotAssociative, NotBisymmetric, PictureCase>;

inline std::string describe(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotIdempotent>) {
          os << "not idempotent at x=" << v.x;
        } else if constexpr (std::is_same_v<T, NotQuasitrivial>) {
          os << "not quasitrivial at (" << v.x << "," << v.y << ")";
        } else if constexpr (std::is_same_v<T, NotNondecreasing>) {
          os << "not nondecreasing: (" << v.x1 << "," << v.y1 << ") vs (" << v.x2 << "," << v.y2
             << ")";
        } else if constexpr (std::is_same_v<T, NotMonotone>) {
          os << "non-monotone " << (v.along_y ? "row x=" : "column y=") << v.fixed
             << ": rises " << v.inc_lo << "->" << v.inc_hi << ", falls " << v.dec_lo << "->"
             << v.dec_hi;
        } else if constexpr (std::is_same_v<T, NotSymmetric>) {
          os << "not symmetric at (" << v.x << "," << v.y << ")";
        } else if constexpr (std::is_same_v<T, NotAssociative>) {
          os << "not associative at (" << v.x << "," << v.y << "," << v.z << ")";
        } else if constexpr (std::is_same_v<T, NotBisymmetric>) {
          os << "not bisymmetric at (" << v.u << "," << v.v << "," << v.w << "," << v.z << ")";
        } else if constexpr (std::is_same_v<T, PictureCase>) {
          os << "picture case (" << v.tag << ") on roles x=" << v.x << ", y=" << v.y
             << ", z=" << v.z;
        }
      },
      w);
  return os.str();
}

// Result of a single predicate: holds, or a witness of failure.
struct PropertyCheck {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }

  static PropertyCheck pass() { return {}; }
  static PropertyCheck fail_with(Witness w) { return {false, std::move(w)}; }
};

}  // namespace chainops
