#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chainops/error.hpp"

namespace chainops {

// A chain element of L_k = {1,...,k} with the natural order. Elements are
// plain 1-based ints; the containing table carries k.
using Elem = int;

// A total binary operation F : L_k x L_k -> L_k stored as a k x k value
// table. First index = first argument x, second = second argument y, so
// F(x,y) stays literal in code; the renderer, not the table, applies the
// figure convention (x horizontal, y vertical). Immutable once built.
class BinaryOpTable {
 public:
  // k*k bisymmetry sweeps stay under ~17M evaluations at this bound.
  static constexpr int max_chain_size = 64;

  BinaryOpTable(int k, const std::vector<std::vector<Elem>>& values)
      : BinaryOpTable(k, flatten(k, values)) {}

  // flat is row-major: flat[(x-1)*k + (y-1)] = F(x,y).
  BinaryOpTable(int k, std::vector<Elem> flat) : k_(k), flat_(std::move(flat)) {
    if (k < 1) fail(errc::shape_mismatch, "chain size must be >= 1, got " + std::to_string(k));
    if (k > max_chain_size)
      fail(errc::bound_exceeded, "chain size " + std::to_string(k) + " exceeds bound " +
                                     std::to_string(max_chain_size));
    if (flat_.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k))
      fail(errc::shape_mismatch, "expected " + std::to_string(k * k) + " entries, got " +
                                     std::to_string(flat_.size()));
    for (Elem x = 1; x <= k_; ++x)
      for (Elem y = 1; y <= k_; ++y) {
        Elem v = flat_[idx(x, y)];
        if (v < 1 || v > k_)
          fail(errc::out_of_range, "entry F(" + std::to_string(x) + "," + std::to_string(y) +
                                       ") = " + std::to_string(v) + " outside [1," +
                                       std::to_string(k_) + "]");
      }
  }

  int chain_size() const { return k_; }

  Elem operator()(Elem x, Elem y) const {
    check_arg(x);
    check_arg(y);
    return flat_[idx(x, y)];
  }

  // Unchecked accessor for inner loops that already iterate [1,k].
  Elem at(Elem x, Elem y) const { return flat_[idx(x, y)]; }

  const std::vector<Elem>& flat() const { return flat_; }

  friend bool operator==(const BinaryOpTable& a, const BinaryOpTable& b) {
    return a.k_ == b.k_ && a.flat_ == b.flat_;
  }
  friend bool operator!=(const BinaryOpTable& a, const BinaryOpTable& b) { return !(a == b); }
  // Lexicographic on (k, flattened values); this is the census order.
  friend bool operator<(const BinaryOpTable& a, const BinaryOpTable& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.flat_ < b.flat_;
  }

 private:
  std::size_t idx(Elem x, Elem y) const {
    return static_cast<std::size_t>(x - 1) * k_ + static_cast<std::size_t>(y - 1);
  }

  void check_arg(Elem v) const {
    if (v < 1 || v > k_)
      fail(errc::out_of_range,
           "argument " + std::to_string(v) + " outside [1," + std::to_string(k_) + "]");
  }

  static std::vector<Elem> flatten(int k, const std::vector<std::vector<Elem>>& values) {
    if (k >= 1 && values.size() != static_cast<std::size_t>(k))
      fail(errc::shape_mismatch, "expected " + std::to_string(k) + " rows, got " +
                                     std::to_string(values.size()));
    std::vector<Elem> flat;
    flat.reserve(values.size() * values.size());
    for (const auto& row : values) {
      if (row.size() != values.size())
        fail(errc::shape_mismatch, "ragged row of length " + std::to_string(row.size()));
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  int k_;
  std::vector<Elem> flat_;
};

// [OP] new_table / eval live on the class; the named tables below are the
// recurring fixtures of the paper.

inline BinaryOpTable make_table(int k, const std::vector<std::vector<Elem>>& values) {
  return BinaryOpTable(k, values);
}

template <typename Fn>
inline BinaryOpTable table_from_fn(int k, Fn&& f) {
  std::vector<Elem> flat(static_cast<std::size_t>(k) * k);
  for (Elem x = 1; x <= k; ++x)
    for (Elem y = 1; y <= k; ++y)
      flat[static_cast<std::size_t>(x - 1) * k + (y - 1)] = f(x, y);
  return BinaryOpTable(k, std::move(flat));
}

inline BinaryOpTable min_table(int k) {
  return table_from_fn(k, [](Elem x, Elem y) { return x < y ? x : y; });
}
inline BinaryOpTable max_table(int k) {
  return table_from_fn(k, [](Elem x, Elem y) { return x > y ? x : y; });
}
inline BinaryOpTable proj_x_table(int k) {
  return table_from_fn(k, [](Elem x, Elem) { return x; });
}
inline BinaryOpTable proj_y_table(int k) {
  return table_from_fn(k, [](Elem, Elem y) { return y; });
}

// ---------------------------------------------------------------------------
// Text format. Line 1: k. Lines 2..k+1: row x with k space-separated values
// F(x,1)..F(x,k). Lines whose first non-blank character is '#' are comments;
// blank lines are ignored.
// ---------------------------------------------------------------------------

namespace detail {
inline bool is_content_line(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c != '#';
  }
  return false;  // blank
}
}  // namespace detail

inline BinaryOpTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (detail::is_content_line(line)) lines.push_back(line);
  if (lines.empty()) fail(errc::syntax_error, "empty table input");

  auto parse_ints = [](const std::string& s) {
    std::istringstream ls(s);
    std::vector<long long> out;
    long long v;
    while (ls >> v) out.push_back(v);
    if (!ls.eof()) fail(errc::syntax_error, "non-numeric token in line: " + s);
    return out;
  };

  auto header = parse_ints(lines[0]);
  if (header.size() != 1) fail(errc::syntax_error, "first line must hold k alone");
  long long k = header[0];
  if (k < 1 || k > BinaryOpTable::max_chain_size)
    fail(errc::syntax_error, "k = " + std::to_string(k) + " out of range");
  if (lines.size() != static_cast<std::size_t>(k) + 1)
    fail(errc::syntax_error, "expected " + std::to_string(k) + " rows, got " +
                                 std::to_string(lines.size() - 1));

  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(k) * k);
  for (long long x = 1; x <= k; ++x) {
    auto row = parse_ints(lines[static_cast<std::size_t>(x)]);
    if (row.size() != static_cast<std::size_t>(k))
      fail(errc::syntax_error, "row " + std::to_string(x) + " has " + std::to_string(row.size()) +
                                   " entries, expected " + std::to_string(k));
    for (long long v : row) {
      if (v < 1 || v > k)
        fail(errc::out_of_range, "entry " + std::to_string(v) + " outside [1," +
                                     std::to_string(k) + "]");
      flat.push_back(static_cast<Elem>(v));
    }
  }
  return BinaryOpTable(static_cast<int>(k), std::move(flat));
}

inline std::string format_table(const BinaryOpTable& t) {
  std::ostringstream out;
  out << t.chain_size() << '\n';
  for (Elem x = 1; x <= t.chain_size(); ++x) {
    for (Elem y = 1; y <= t.chain_size(); ++y) {
      if (y > 1) out << ' ';
      out << t.at(x, y);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace chainops
