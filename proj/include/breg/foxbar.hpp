#pragma once

// Bar and standard resolutions in coinvariants, their differentials and the
// conversions between them, the Fox free derivative, the linearisation W on
// commutator products, and the splitting of relators into elementary triples.

#include <array>
#include <unordered_map>

#include "breg/words.hpp"

namespace breg {

enum class Resolution { bar, standard };

struct TupleKey {
  std::array<int32_t, 5> e{-1, -1, -1, -1, -1};
  int len = 0;
  bool operator==(const TupleKey& o) const { return len == o.len && e == o.e; }
};

struct TupleKeyHash {
  size_t operator()(const TupleKey& k) const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < k.len; ++i) {
      h ^= size_t(uint32_t(k.e[i]));
      h *= 1099511628211ull;
    }
    return h ^ size_t(k.len);
  }
};

// A formal integer combination of tuples of group elements (interned in a
// matrix alphabet acting as the element pool).  kind distinguishes bar
// tuples [g1|...|gk] (len = arity) from standard tuples (g0,...,gk)
// (len = arity + 1).
class Chain {
 public:
  Chain() = default;
  Chain(AlphaPtr pool, Resolution kind, int arity) : pool_(std::move(pool)), kind_(kind), arity_(arity) {}

  const AlphaPtr& pool() const { return pool_; }
  Resolution kind() const { return kind_; }
  int arity() const { return arity_; }
  int tuple_len() const { return kind_ == Resolution::bar ? arity_ : arity_ + 1; }
  const std::unordered_map<TupleKey, long long, TupleKeyHash>& terms() const { return terms_; }

  void add(const TupleKey& t, long long c);
  Chain operator+(const Chain& o) const;
  Chain operator-(const Chain& o) const;
  Chain scaled(long long c) const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Chain& o) const;

  size_t distinct_tuples() const { return terms_.size(); }
  size_t distinct_matrices() const;

  std::string to_string(size_t max_terms = 20) const;

 private:
  void check_compatible(const Chain& o) const;
  AlphaPtr pool_;
  Resolution kind_ = Resolution::bar;
  int arity_ = 0;
  std::unordered_map<TupleKey, long long, TupleKeyHash> terms_;
};

TupleKey make_tuple(std::initializer_list<int> ids);

// differential of the bar resolution in coinvariants:
// d[g1|...|gk] = [g2|...|gk] + sum (-1)^i [...|g_i g_{i+1}|...] + (-1)^k [g1|...|g_{k-1}]
Chain bar_d(const Chain& c);
// differential of the standard resolution in coinvariants (faces dropped)
Chain std_d(const Chain& c);

// psi: bar -> standard, [x1|...|xk] -> (1, x1, x1x2, ..., x1...xk)
Chain convert_psi(const Chain& bar);
// phi: standard -> bar, (g0,...,gk) ~ (1, y1, ..., yk) -> [y1|y1^{-1}y2|...]
Chain convert_phi(const Chain& std);

// {a, b} = [a|b] - [b|a]
Chain steinberg_symbol(const AlphaPtr& pool, int a_id, int b_id);

// Fox free derivative of a word over the matrix alphabet (pool = alphabet)
Chain fox_derivative(const Word& w);

// Product of conjugated elementary triples u (s_x s_y s_{xy}^{-1})^n u^{-1}.
struct CPFactor {
  Word conj;
  int x_id, y_id, xy_id;
  int n;
};

class CommutatorProduct {
 public:
  CommutatorProduct() = default;
  explicit CommutatorProduct(AlphaPtr pool) : pool_(std::move(pool)) {}
  const AlphaPtr& pool() const { return pool_; }
  std::vector<CPFactor>& factors() { return f_; }
  const std::vector<CPFactor>& factors() const { return f_; }
  void emplace(const Word& conj, int x_id, int y_id, int n);
  Word expand() const;
  CommutatorProduct conjugated_by(const Word& u) const;
  CommutatorProduct inverse() const;
  CommutatorProduct operator*(const CommutatorProduct& o) const;

 private:
  AlphaPtr pool_;
  std::vector<CPFactor> f_;
};

// W(w) = sum n_i  [phi(u_i) | x_i | y_i]
Chain linearise_W(const CommutatorProduct& cp);

// d(W(cp)) - sum n_i [x_i|y_i] + fox(expand(cp)); zero iff Theorem 2.4 holds
Chain thm24_residual(const CommutatorProduct& cp);

// split a reduced relator word into conjugator-free elementary triples
CommutatorProduct triple_split(const Word& relator);

}  // namespace breg
