#pragma once

// Replay of Steinberg's proof of {u, -u} = e as recorded free-group
// rewriting.  Every algebraic step that uses a Steinberg relation emits a
// conjugated S/T/U relator factor, so each produced identity
//   lhs = (prod_i  g_i R_i^{e_i} g_i^{-1}) * rhs
// is exact in the free group and is re-checked by free reduction.

#include <optional>

#include "breg/foxbar.hpp"

namespace breg {

enum class RelKind { S, T, U };

struct RelatorSTU {
  RelKind kind;
  int i = 0, j = 0, k = 0, l = 0;
  CycNumber a, b;
  Word word;        // the relator as a word (reduced)
  bool substituted = false;
  std::string name() const;
};

struct TraceFactor {
  Word conj;
  RelatorSTU rel;
  int sign;  // +1 or -1
  Word factor_word() const;  // conj rel^{sign} conj^{-1}, reduced
};

// lhs = factors * rhs in the free group (lhs, rhs stored reduced)
struct EqTrace {
  Word lhs, rhs;
  std::vector<TraceFactor> factors;
  void verify() const;  // throws rewrite_validation on mismatch
};

// [K, v]^{sign} with K a relator word
struct KV {
  Word K, v;
  int sign;
  Word word() const;
};

enum class ConjCase { jk, kj, ki, ik, ji, ij };

class SteinbergContext {
 public:
  explicit SteinbergContext(FieldPtr f, int max_index = 5);

  const AlphaPtr& alphabet() const { return alpha_; }
  const FieldPtr& field() const { return f_; }

  // letters and basic words
  Word x(int i, int j, const CycNumber& lam, int exp = 1);
  Word w_word(int i, int j, const CycNumber& u);  // x_ij^u x_ji^{-u^{-1}} x_ij^u
  Word h_word(int i, int j, const CycNumber& u);  // w_ij^u (w_ij^1)^{-1}

  RelatorSTU relS(int i, int j, const CycNumber& a, const CycNumber& b);
  RelatorSTU relT(int i, int j, int k, const CycNumber& a, const CycNumber& b);
  RelatorSTU relU(int i, int j, int k, int l, const CycNumber& a, const CycNumber& b);

  // equation calculus
  EqTrace eq_refl(const Word& w) const;
  EqTrace eq_mul(const EqTrace& x, const EqTrace& y) const;
  EqTrace eq_trans(const EqTrace& x, const EqTrace& y) const;
  EqTrace eq_sym(const EqTrace& x) const;
  EqTrace eq_inv(const EqTrace& x) const;
  EqTrace in_context(const Word& g, const EqTrace& x, const Word& h) const;

  // atoms and small derived equations
  EqTrace eq_s(int i, int j, const CycNumber& a, const CycNumber& b);  // x^a x^b = x^{a+b}
  EqTrace eq_t(int i, int j, int k, const CycNumber& a, const CycNumber& b);  // [x_ij^a, x_jk^b] = x_ik^{ab}
  EqTrace eq_u(int i, int j, int k, int l, const CycNumber& a, const CycNumber& b);  // [x_ij^a, x_kl^b] = e
  EqTrace eq_cancel(int i, int j, const CycNumber& a);      // x^{-a} x^{a} = e
  EqTrace eq_inv_letter(int i, int j, const CycNumber& a);  // (x^a)^{-1} = x^{-a}
  EqTrace eq_w_inv(int i, int j, const CycNumber& u);       // (w_ij^u)^{-1} = w_ij^{-u}

  // g x g^{-1} = short word, for single letters g, x (exponents allowed)
  EqTrace eq_conj_letter(int gi, int gj, const CycNumber& gs, int gexp, int xi, int xj,
                         const CycNumber& xl);
  // P x P^{-1} = word, P arbitrary, x a positive letter; result internally
  // simplified by cancelling adjacent inverse-parameter pairs
  EqTrace eq_conj_word(const Word& P, int xi, int xj, const CycNumber& xl);

  // the six Lemma-9.2 conjugation identities: w_ij^u x_{..}^lam (w_ij^u)^{-1} = result letter
  EqTrace conj_case(ConjCase c, int i, int j, int k, const CycNumber& u, const CycNumber& lam);

  // [h_13^{-u}, h_12^{u}] = prod of conjugated S/T/U relators (rhs empty)
  EqTrace expand_h_commutator(const CycNumber& u);

  // index-4 substitution x_ij^lam -> [x_i4^1, x_4j^lam]
  Word substitute4(const Word& w) const;
  EqTrace substitute4(const EqTrace& t) const;

  // rewrite a substituted S/T/U relator into commutators [K_j, v_j]^{+-1}
  std::vector<KV> rewrite_substituted(const RelatorSTU& r);
  std::vector<KV> rewrite_U(const RelatorSTU& r);
  std::vector<KV> rewrite_S(const RelatorSTU& r);
  std::vector<KV> rewrite_T(const RelatorSTU& r);

  struct RhsAssembly {
    Word wB, wA;
    std::vector<KV> comms;
    size_t trace_factors = 0;   // factor count of the h-commutator trace
  };
  RhsAssembly assemble_rhs(const CycNumber& u);

  // checks relator property through elementary matrices
  bool relator_ok(const Word& w, int n = 0) const;

  // dump of a trace in the paper's notation
  static std::string dump_trace(const EqTrace& t);

 private:
  EqTrace eq_conj_letter_cached(int gi, int gj, const CycNumber& gs, int gexp, int xi, int xj,
                                const CycNumber& xl);
  std::vector<KV> pair_factors(std::vector<TraceFactor> fs, const Word& target);
  void bridge_unpaired(std::vector<TraceFactor>& fs);
  FieldPtr f_;
  AlphaPtr alpha_;
  std::unordered_map<std::string, std::vector<KV>> rewrite_cache_;
};

// helper used by scripts: apply verified equations at literal positions
class EqBuilder {
 public:
  EqBuilder(const SteinbergContext* ctx, Word start);
  // current[pos ...] must literally begin with e.lhs; replaces it by e.rhs
  void apply(size_t pos, const EqTrace& e);
  void insert_pair(size_t pos, const Word& w);  // splice w w^{-1}, no factor
  void freely_reduce();
  const std::vector<Letter>& current() const { return cur_; }
  std::string current_str() const;
  EqTrace finish(const Word& expected_rhs) &&;

 private:
  const SteinbergContext* ctx_;
  Word start_;
  std::vector<Letter> cur_;
  std::vector<TraceFactor> factors_;
};

}  // namespace breg
