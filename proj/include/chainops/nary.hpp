#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chainops/predicates.hpp"
#include "chainops/table.hpp"

namespace chainops {

// A total n-ary operation on L_k stored as k^n values in mixed-radix order,
// first argument most significant: index(x_1..x_n) = sum (x_i - 1) k^(n-i).
class NAryOpTable {
 public:
  static constexpr std::size_t max_cells = std::size_t{1} << 20;

  NAryOpTable(int n, int k, std::vector<Elem> values)
      : n_(n), k_(k), values_(std::move(values)) {
    if (n < 2) fail(errc::shape_mismatch, "arity must be >= 2, got " + std::to_string(n));
    if (k < 1) fail(errc::shape_mismatch, "chain size must be >= 1");
    std::size_t cells = 1;
    for (int i = 0; i < n_; ++i) {
      cells *= static_cast<std::size_t>(k_);
      if (cells > max_cells)
        fail(errc::bound_exceeded, "k^n exceeds " + std::to_string(max_cells) + " cells");
    }
    if (values_.size() != cells)
      fail(errc::shape_mismatch, "expected " + std::to_string(cells) + " values, got " +
                                     std::to_string(values_.size()));
    for (Elem v : values_)
      if (v < 1 || v > k_)
        fail(errc::out_of_range, "entry " + std::to_string(v) + " outside [1," +
                                     std::to_string(k_) + "]");
  }

  int arity() const { return n_; }
  int chain_size() const { return k_; }
  std::size_t cell_count() const { return values_.size(); }
  const std::vector<Elem>& values() const { return values_; }

  Elem eval(const std::vector<Elem>& args) const {
    if (args.size() != static_cast<std::size_t>(n_))
      fail(errc::shape_mismatch, "expected " + std::to_string(n_) + " arguments");
    std::size_t idx = 0;
    for (Elem a : args) {
      if (a < 1 || a > k_)
        fail(errc::out_of_range, "argument " + std::to_string(a) + " outside [1," +
                                     std::to_string(k_) + "]");
      idx = idx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(a - 1);
    }
    return values_[idx];
  }

  // Unchecked lookup for sweeps over well-formed tuples.
  Elem at(const std::vector<Elem>& args) const {
    std::size_t idx = 0;
    for (Elem a : args) idx = idx * static_cast<std::size_t>(k_) + static_cast<std::size_t>(a - 1);
    return values_[idx];
  }

  friend bool operator==(const NAryOpTable& a, const NAryOpTable& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.values_ == b.values_;
  }
  friend bool operator!=(const NAryOpTable& a, const NAryOpTable& b) { return !(a == b); }

 private:
  int n_, k_;
  std::vector<Elem> values_;
};

namespace detail {
// Advances a 1-based tuple in mixed-radix order; false once it wraps.
inline bool next_tuple(std::vector<Elem>& t, int k) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < k) {
      ++t[i];
      std::fill(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end(), 1);
      return true;
    }
  }
  return false;
}

inline std::string tuple_str(const std::vector<Elem>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// cost = base^exp capped against limit; returns false on overflow past limit.
inline bool pow_within(std::size_t base, int exp, std::size_t factor, std::size_t limit) {
  std::size_t cost = factor;
  for (int i = 0; i < exp; ++i) {
    if (cost > limit / base) return false;
    cost *= base;
  }
  return cost <= limit;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Witnesses for the n-ary predicates
// ---------------------------------------------------------------------------

struct NAryNotIdempotent {
  Elem x;
};
struct NAryNotQuasitrivial {
  std::vector<Elem> args;
};
struct NAryNotNondecreasing {
  std::vector<Elem> args;  // F(args) > F(args with position var bumped by one)
  int var;                 // 1-based
};
// Variable var strictly increases somewhere and strictly decreases elsewhere,
// so no single direction fits it.
struct NAryNotMonotone {
  int var;  // 1-based
  std::vector<Elem> inc_args, dec_args;
};
struct NAryNotAssociative {
  int i;  // nesting positions i and i+1 disagree (1-based)
  std::vector<Elem> args;  // 2n-1 arguments
};
struct NAryNotBisymmetric {
  std::vector<Elem> matrix;  // row-major n x n
};

using NAryWitness = std::variant<NAryNotIdempotent, NAryNotQuasitrivial, NAryNotNondecreasing,
                                 NAryNotMonotone, NAryNotAssociative, NAryNotBisymmetric>;

inline std::string describe(const NAryWitness& w) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NAryNotIdempotent>) {
          os << "not idempotent at x=" << v.x;
        } else if constexpr (std::is_same_v<T, NAryNotQuasitrivial>) {
          os << "not quasitrivial at " << detail::tuple_str(v.args);
        } else if constexpr (std::is_same_v<T, NAryNotNondecreasing>) {
          os << "not nondecreasing in variable " << v.var << " at " << detail::tuple_str(v.args);
        } else if constexpr (std::is_same_v<T, NAryNotMonotone>) {
          os << "variable " << v.var << " rises at " << detail::tuple_str(v.inc_args)
             << " and falls at " << detail::tuple_str(v.dec_args);
        } else if constexpr (std::is_same_v<T, NAryNotAssociative>) {
          os << "associativity fails at i=" << v.i << " on " << detail::tuple_str(v.args);
        } else if constexpr (std::is_same_v<T, NAryNotBisymmetric>) {
          os << "bisymmetry fails on matrix " << detail::tuple_str(v.matrix);
        }
      },
      w);
  return os.str();
}

struct NAryCheck {
  bool holds = true;
  std::optional<NAryWitness> witness;
  explicit operator bool() const { return holds; }

  static NAryCheck pass() { return {}; }
  static NAryCheck fail_with(NAryWitness w) { return {false, std::move(w)}; }
};

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

inline NAryCheck nary_is_idempotent(const NAryOpTable& f) {
  for (Elem x = 1; x <= f.chain_size(); ++x) {
    std::vector<Elem> t(static_cast<std::size_t>(f.arity()), x);
    if (f.at(t) != x) return NAryCheck::fail_with(NAryNotIdempotent{x});
  }
  return NAryCheck::pass();
}

inline NAryCheck nary_is_quasitrivial(const NAryOpTable& f) {
  std::vector<Elem> t(static_cast<std::size_t>(f.arity()), 1);
  do {
    Elem v = f.at(t);
    if (std::find(t.begin(), t.end(), v) == t.end())
      return NAryCheck::fail_with(NAryNotQuasitrivial{t});
  } while (detail::next_tuple(t, f.chain_size()));
  return NAryCheck::pass();
}

inline NAryCheck nary_is_nondecreasing(const NAryOpTable& f) {
  std::vector<Elem> t(static_cast<std::size_t>(f.arity()), 1);
  do {
    Elem v = f.at(t);
    for (int i = 0; i < f.arity(); ++i) {
      if (t[static_cast<std::size_t>(i)] >= f.chain_size()) continue;
      std::vector<Elem> up = t;
      ++up[static_cast<std::size_t>(i)];
      if (v > f.at(up)) return NAryCheck::fail_with(NAryNotNondecreasing{t, i + 1});
    }
  } while (detail::next_tuple(t, f.chain_size()));
  return NAryCheck::pass();
}

// Monotone means each variable admits one direction: along variable i the
// operation never both strictly rises and strictly falls (across all
// sections).
inline NAryCheck nary_is_monotone(const NAryOpTable& f) {
  for (int i = 0; i < f.arity(); ++i) {
    std::optional<std::vector<Elem>> inc, dec;
    std::vector<Elem> t(static_cast<std::size_t>(f.arity()), 1);
    do {
      if (t[static_cast<std::size_t>(i)] >= f.chain_size()) continue;
      std::vector<Elem> up = t;
      ++up[static_cast<std::size_t>(i)];
      Elem a = f.at(t), b = f.at(up);
      if (a < b && !inc) inc = t;
      if (a > b && !dec) dec = t;
      if (inc && dec) return NAryCheck::fail_with(NAryNotMonotone{i + 1, *inc, *dec});
    } while (detail::next_tuple(t, f.chain_size()));
  }
  return NAryCheck::pass();
}

inline NAryCheck nary_is_associative(const NAryOpTable& f) {
  int n = f.arity(), k = f.chain_size();
  if (!detail::pow_within(static_cast<std::size_t>(k), 2 * n - 1,
                          static_cast<std::size_t>(n - 1), std::size_t{1} << 24))
    fail(errc::bound_exceeded, "associativity sweep exceeds 2^24 evaluations");
  std::vector<Elem> t(static_cast<std::size_t>(2 * n - 1), 1);
  std::vector<Elem> nested(static_cast<std::size_t>(n));
  auto collapse_at = [&](int i) {  // 0-based start of the inner application
    std::vector<Elem> inner(t.begin() + i, t.begin() + i + n);
    int pos = 0;
    for (int j = 0; j < i; ++j) nested[pos++] = t[static_cast<std::size_t>(j)];
    nested[pos++] = f.at(inner);
    for (int j = i + n; j < 2 * n - 1; ++j) nested[pos++] = t[static_cast<std::size_t>(j)];
    return f.at(nested);
  };
  do {
    for (int i = 0; i + 1 < n; ++i)
      if (collapse_at(i) != collapse_at(i + 1))
        return NAryCheck::fail_with(NAryNotAssociative{i + 1, t});
  } while (detail::next_tuple(t, k));
  return NAryCheck::pass();
}

inline NAryCheck nary_is_bisymmetric(const NAryOpTable& f) {
  int n = f.arity(), k = f.chain_size();
  if (!detail::pow_within(static_cast<std::size_t>(k), n * n, 1, std::size_t{1} << 24))
    fail(errc::bound_exceeded, "bisymmetry sweep exceeds 2^24 matrices");
  std::vector<Elem> m(static_cast<std::size_t>(n) * n, 1);  // row-major
  std::vector<Elem> row(static_cast<std::size_t>(n)), col(static_cast<std::size_t>(n));
  std::vector<Elem> rows(static_cast<std::size_t>(n)), cols(static_cast<std::size_t>(n));
  do {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i) * n + j];
        col[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j) * n + i];
      }
      rows[static_cast<std::size_t>(i)] = f.at(row);
      cols[static_cast<std::size_t>(i)] = f.at(col);
    }
    if (f.at(rows) != f.at(cols)) return NAryCheck::fail_with(NAryNotBisymmetric{m});
  } while (detail::next_tuple(m, k));
  return NAryCheck::pass();
}

// Smallest e with F((i-1).e, x, (n-i).e) = x for every x and position i.
inline std::optional<Elem> nary_neutral_element(const NAryOpTable& f) {
  int n = f.arity(), k = f.chain_size();
  for (Elem e = 1; e <= k; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (Elem x = 1; x <= k && ok; ++x) {
        std::vector<Elem> t(static_cast<std::size_t>(n), e);
        t[static_cast<std::size_t>(i)] = x;
        ok = f.at(t) == x;
      }
    if (ok) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Derivation and reduction
// ---------------------------------------------------------------------------

// F(x_1..x_n) as the left fold of an associative binary operation. The fold
// is only exposed through this checked entry point: the defining equation is
// well-defined exactly when G is associative.
inline NAryOpTable derive(const BinaryOpTable& g, int n) {
  if (auto c = is_associative(g); !c)
    fail(errc::precondition_failed, "derive: not associative (" + describe(*c.witness) + ")");
  if (n < 2) fail(errc::out_of_range, "arity must be >= 2");
  int k = g.chain_size();
  if (!detail::pow_within(static_cast<std::size_t>(k), n, 1, NAryOpTable::max_cells))
    fail(errc::bound_exceeded, "k^n exceeds the table bound");
  std::size_t cells = 1;
  for (int i = 0; i < n; ++i) cells *= static_cast<std::size_t>(k);
  std::vector<Elem> values;
  values.reserve(cells);
  std::vector<Elem> t(static_cast<std::size_t>(n), 1);
  do {
    Elem acc = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) acc = g.at(acc, t[i]);
    values.push_back(acc);
  } while (detail::next_tuple(t, k));
  return NAryOpTable(n, k, std::move(values));
}

// One concrete disagreement between two evaluation routes.
struct ReductionWitness {
  std::vector<Elem> args_a, args_b;
  Elem value_a = 0, value_b = 0;
};

struct ReductionResult {
  std::optional<BinaryOpTable> reduced;        // G with derive(G, n) == F
  std::optional<ReductionWitness> witness;     // set when not reducible
  bool is_reduced() const { return reduced.has_value(); }
};

// Reduction of an associative idempotent n-ary operation to its unique
// binary candidate G(a,b) = F(a, (n-1).b). Verifies the second defining route
// F((n-1).a, b) agrees, that G is associative, and that the fold of G
// reproduces F cell for cell; any disagreement is returned as NotReducible
// with the first failing tuple.
inline ReductionResult reduce(const NAryOpTable& f) {
  if (auto c = nary_is_associative(f); !c)
    fail(errc::precondition_failed, "reduce: not associative (" + describe(*c.witness) + ")");
  if (auto c = nary_is_idempotent(f); !c)
    fail(errc::precondition_failed, "reduce: not idempotent (" + describe(*c.witness) + ")");

  int n = f.arity(), k = f.chain_size();
  std::vector<Elem> flat(static_cast<std::size_t>(k) * k);
  for (Elem a = 1; a <= k; ++a)
    for (Elem b = 1; b <= k; ++b) {
      std::vector<Elem> right(static_cast<std::size_t>(n), b);
      right[0] = a;
      std::vector<Elem> left(static_cast<std::size_t>(n), a);
      left[static_cast<std::size_t>(n) - 1] = b;
      Elem va = f.at(right), vb = f.at(left);
      if (va != vb) return {std::nullopt, ReductionWitness{right, left, va, vb}};
      flat[static_cast<std::size_t>(a - 1) * k + (b - 1)] = va;
    }
  BinaryOpTable g(k, std::move(flat));

  if (auto c = is_associative(g); !c) {
    auto [x, y, z] = std::get<NotAssociative>(*c.witness);
    // The unique candidate is not associative, so no derivation exists.
    return {std::nullopt,
            ReductionWitness{{x, y, z}, {x, y, z}, g.at(g.at(x, y), z), g.at(x, g.at(y, z))}};
  }

  std::vector<Elem> t(static_cast<std::size_t>(n), 1);
  do {
    Elem acc = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) acc = g.at(acc, t[i]);
    if (acc != f.at(t)) return {std::nullopt, ReductionWitness{t, t, f.at(t), acc}};
  } while (detail::next_tuple(t, k));
  return {g, std::nullopt};
}

// The odd-arity irreducible fixture on L_2: the value is whichever of 1,2
// occurs an odd number of times (well defined since n is odd).
inline NAryOpTable parity_counterexample(int n) {
  if (n < 3 || n % 2 == 0)
    fail(errc::precondition_failed, "parity counterexample needs odd arity >= 3");
  std::vector<Elem> values;
  values.reserve(std::size_t{1} << n);
  std::vector<Elem> t(static_cast<std::size_t>(n), 1);
  do {
    int twos = static_cast<int>(std::count(t.begin(), t.end(), 2));
    values.push_back(twos % 2 == 1 ? 2 : 1);
  } while (detail::next_tuple(t, 2));
  return NAryOpTable(n, 2, std::move(values));
}

// ---------------------------------------------------------------------------
// Text format. Line 1: "n k"; then the k^n values in mixed-radix order,
// 16 per line. '#' comment lines and blank lines are ignored.
// ---------------------------------------------------------------------------

inline NAryOpTable parse_nary_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> numbers;
  bool saw_content = false;
  while (std::getline(in, line)) {
    if (!detail::is_content_line(line)) continue;
    saw_content = true;
    std::istringstream ls(line);
    long long v;
    while (ls >> v) numbers.push_back(v);
    if (!ls.eof()) fail(errc::syntax_error, "non-numeric token in line: " + line);
  }
  if (!saw_content || numbers.size() < 2) fail(errc::syntax_error, "missing 'n k' header");
  long long n = numbers[0], k = numbers[1];
  if (n < 2 || n > 20 || k < 1 || k > BinaryOpTable::max_chain_size)
    fail(errc::syntax_error, "bad arity/chain header");
  std::vector<Elem> values;
  values.reserve(numbers.size() - 2);
  for (std::size_t i = 2; i < numbers.size(); ++i) {
    if (numbers[i] < 1 || numbers[i] > k)
      fail(errc::out_of_range, "entry " + std::to_string(numbers[i]) + " outside [1," +
                                   std::to_string(k) + "]");
    values.push_back(static_cast<Elem>(numbers[i]));
  }
  return NAryOpTable(static_cast<int>(n), static_cast<int>(k), std::move(values));
}

inline std::string format_nary_table(const NAryOpTable& f) {
  std::ostringstream out;
  out << f.arity() << ' ' << f.chain_size() << '\n';
  const auto& vals = f.values();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    out << vals[i];
    out << ((i % 16 == 15 || i + 1 == vals.size()) ? '\n' : ' ');
  }
  return out.str();
}

}  // namespace chainops
