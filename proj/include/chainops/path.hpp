#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chainops/error.hpp"
#include "chainops/table.hpp"

namespace chainops {

// A downward-right path lives in the upper triangle T1 = {(x,y) : x <= y},
// starts at (1,k) and moves one place right, down, or diagonally
// downward-right per step. A diagonal step carries the value choice for its
// starting point: DiagFirst means F at that point (and at its mirror) is the
// first argument, DiagSecond the second argument.
enum class PathStep : unsigned char { Right, Down, DiagFirst, DiagSecond };

inline bool is_diag(PathStep s) { return s == PathStep::DiagFirst || s == PathStep::DiagSecond; }

inline const char* step_token(PathStep s) {
  switch (s) {
    case PathStep::Right: return "R";
    case PathStep::Down: return "D";
    case PathStep::DiagFirst: return "Gx";
    case PathStep::DiagSecond: return "Gy";
  }
  return "?";
}

struct Point {
  Elem x = 0, y = 0;
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

class DownwardRightPath {
 public:
  DownwardRightPath(int k, std::vector<PathStep> steps) : k_(k), steps_(std::move(steps)) {
    if (k < 1 || k > BinaryOpTable::max_chain_size)
      fail(errc::invalid_path, "chain size " + std::to_string(k) + " out of range");
    points_.reserve(steps_.size() + 1);
    Point p{1, static_cast<Elem>(k)};
    points_.push_back(p);
    for (PathStep s : steps_) {
      switch (s) {
        case PathStep::Right: p.x += 1; break;
        case PathStep::Down: p.y -= 1; break;
        case PathStep::DiagFirst:
        case PathStep::DiagSecond: p.x += 1, p.y -= 1; break;
      }
      if (p.x > p.y || p.y < 1)
        fail(errc::invalid_path, "path leaves T1 at (" + std::to_string(p.x) + "," +
                                     std::to_string(p.y) + ")");
      points_.push_back(p);
    }
  }

  int chain_size() const { return k_; }
  const std::vector<PathStep>& steps() const { return steps_; }
  // p_1..p_l; l = #steps + 1 <= k.
  const std::vector<Point>& points() const { return points_; }
  Point end() const { return points_.back(); }
  int diag_count() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), is_diag));
  }

  friend bool operator==(const DownwardRightPath& a, const DownwardRightPath& b) {
    return a.k_ == b.k_ && a.steps_ == b.steps_;
  }

 private:
  int k_;
  std::vector<PathStep> steps_;
  std::vector<Point> points_;
};

enum class TerminalProjection : unsigned char { None, ProjX, ProjY };

// A path plus the uniform projection on the terminal square [a,b]^2.
// Canonical form: projection is None exactly when the path ends on the
// diagonal (a = b); a strict endpoint a < b requires ProjX or ProjY.
class PathDecomposition {
 public:
  PathDecomposition(DownwardRightPath path, TerminalProjection projection)
      : path_(std::move(path)), projection_(projection) {
    bool on_diagonal = path_.end().x == path_.end().y;
    if (on_diagonal != (projection_ == TerminalProjection::None))
      fail(errc::invalid_path, on_diagonal
                                   ? "projection must be none when the path ends on the diagonal"
                                   : "projection required when the path ends off the diagonal");
  }

  PathDecomposition(int k, std::vector<PathStep> steps, TerminalProjection projection)
      : PathDecomposition(DownwardRightPath(k, std::move(steps)), projection) {}

  const DownwardRightPath& path() const { return path_; }
  TerminalProjection projection() const { return projection_; }
  int chain_size() const { return path_.chain_size(); }
  const std::vector<PathStep>& steps() const { return path_.steps(); }
  const std::vector<Point>& points() const { return path_.points(); }
  Point end() const { return path_.end(); }
  // m_P; the path carries weight 2^m_P.
  int diag_count() const { return path_.diag_count(); }

  friend bool operator==(const PathDecomposition& a, const PathDecomposition& b) {
    return a.path_ == b.path_ && a.projection_ == b.projection_;
  }
  friend bool operator!=(const PathDecomposition& a, const PathDecomposition& b) {
    return !(a == b);
  }

 private:
  DownwardRightPath path_;
  TerminalProjection projection_;
};

// ---------------------------------------------------------------------------
// Region classification
// ---------------------------------------------------------------------------

struct RegionAbove {};
struct RegionBelow {};
struct OnP {
  int index;  // 1-based position in P
};
struct OnQ {
  int index;  // 1-based position in Q (the diagonal mirror of P)
};
struct RegionTerminal {};  // inside [a,b]^2, off both paths

using Region = std::variant<RegionAbove, RegionBelow, OnP, OnQ, RegionTerminal>;

inline bool region_is_above(const Region& r) { return std::holds_alternative<RegionAbove>(r); }
inline bool region_is_below(const Region& r) { return std::holds_alternative<RegionBelow>(r); }

// Membership per the paper's above/below test, applied to the union barrier
// P u Q: (x,y) is above when some barrier point sits strictly below it in its
// column or strictly left of it in its row; below is the mirror. P is checked
// first, then Q, then the terminal square.
inline Region classify(const PathDecomposition& d, Elem x, Elem y) {
  int k = d.chain_size();
  if (x < 1 || x > k || y < 1 || y > k)
    fail(errc::out_of_range, "cell (" + std::to_string(x) + "," + std::to_string(y) + ")");
  const auto& pts = d.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].x == x && pts[i].y == y) return OnP{static_cast<int>(i) + 1};
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].y == x && pts[i].x == y) return OnQ{static_cast<int>(i) + 1};
  auto [a, b] = d.end();
  if (a <= x && x <= b && a <= y && y <= b) return RegionTerminal{};

  bool above = false, below = false;
  for (const Point& p : pts) {
    // P point and its mirror (w2,u2) = (p.y, p.x) in Q.
    if (p.x == x && y > p.y) above = true;
    if (p.x == x && y < p.y) below = true;
    if (p.y == y && x > p.x) above = true;
    if (p.y == y && x < p.x) below = true;
    if (p.y == x && y > p.x) above = true;
    if (p.y == x && y < p.x) below = true;
    if (p.x == y && x > p.y) above = true;
    if (p.x == y && x < p.y) below = true;
  }
  if (above == below)
    fail(errc::internal_contradiction, "cell (" + std::to_string(x) + "," + std::to_string(y) +
                                           ") classified " + (above ? "both" : "neither"));
  return above ? Region{RegionAbove{}} : Region{RegionBelow{}};
}

// ---------------------------------------------------------------------------
// Path-spec grammar:  k=<int>; <steps>; [proj=x|proj=y]
// <steps> is whitespace-separated over {R, D, Gx, Gy}; it may be empty. The
// proj clause is required exactly when the endpoint has a < b.
// ---------------------------------------------------------------------------

namespace detail {
struct SpecCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(errc::syntax_error, what + " at position " + std::to_string(pos));
  }
};
}  // namespace detail

inline PathDecomposition parse_path_spec(std::string_view text) {
  detail::SpecCursor c{text};
  c.skip_ws();
  if (!c.eat('k')) c.error("expected 'k='");
  c.skip_ws();
  if (!c.eat('=')) c.error("expected '=' after k");
  c.skip_ws();
  std::size_t num_start = c.pos;
  long long k = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    k = k * 10 + (c.text[c.pos] - '0');
    if (k > 1000) c.error("chain size too large");
    ++c.pos;
  }
  if (c.pos == num_start) c.error("expected integer chain size");
  c.skip_ws();
  if (!c.eat(';')) c.error("expected ';' after chain size");

  std::vector<PathStep> steps;
  std::optional<TerminalProjection> proj;
  while (true) {
    c.skip_ws();
    if (c.pos >= c.text.size()) break;
    if (c.eat(';')) {
      // projection clause
      c.skip_ws();
      std::size_t key_start = c.pos;
      while (c.pos < c.text.size() && std::isalpha(static_cast<unsigned char>(c.text[c.pos])))
        ++c.pos;
      if (c.text.substr(key_start, c.pos - key_start) != "proj") {
        c.pos = key_start;
        c.error("expected 'proj'");
      }
      if (!c.eat('=')) c.error("expected '=' after proj");
      if (c.eat('x'))
        proj = TerminalProjection::ProjX;
      else if (c.eat('y'))
        proj = TerminalProjection::ProjY;
      else
        c.error("expected 'x' or 'y'");
      c.skip_ws();
      if (c.pos != c.text.size()) c.error("trailing input after projection");
      break;
    }
    std::size_t tok_start = c.pos;
    while (c.pos < c.text.size() && std::isalpha(static_cast<unsigned char>(c.text[c.pos])))
      ++c.pos;
    std::string_view tok = c.text.substr(tok_start, c.pos - tok_start);
    if (tok == "R")
      steps.push_back(PathStep::Right);
    else if (tok == "D")
      steps.push_back(PathStep::Down);
    else if (tok == "Gx")
      steps.push_back(PathStep::DiagFirst);
    else if (tok == "Gy")
      steps.push_back(PathStep::DiagSecond);
    else {
      c.pos = tok_start;
      c.error("expected step token R, D, Gx or Gy");
    }
  }
  return PathDecomposition(static_cast<int>(k), std::move(steps),
                           proj.value_or(TerminalProjection::None));
}

inline std::string format_path_spec(const PathDecomposition& d) {
  std::string out = "k=" + std::to_string(d.chain_size()) + ";";
  for (PathStep s : d.steps()) {
    out += ' ';
    out += step_token(s);
  }
  if (d.projection() != TerminalProjection::None) {
    if (d.steps().empty()) out += ' ';
    out += "; proj=";
    out += d.projection() == TerminalProjection::ProjX ? 'x' : 'y';
  }
  return out;
}

}  // namespace chainops
