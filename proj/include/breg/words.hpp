#pragma once

// Free groups on symbols indexed by group elements (exact matrices) or by
// formal Steinberg generators x_{ij}^{lambda}.  Words are sequences of
// interned symbol ids with exponents +-1; reduction is a single stack pass.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "breg/matrix.hpp"

namespace breg {

enum class AlphabetKind { matrix, steinberg };

struct StGen {
  int i = 0, j = 0;  // 1-based, i != j
  CycNumber lambda;
};

class Alphabet : public std::enable_shared_from_this<Alphabet> {
 public:
  static std::shared_ptr<Alphabet> matrix_alphabet(FieldPtr f, int dim);
  static std::shared_ptr<Alphabet> steinberg_alphabet(FieldPtr f, int max_index);

  AlphabetKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const FieldPtr& field() const { return f_; }

  int intern(const ExactMatrix& m);
  int intern(int i, int j, const CycNumber& lambda);
  const ExactMatrix& matrix(int id) const { return mats_[id]; }
  const StGen& stgen(int id) const { return gens_[id]; }
  const ExactMatrix& matrix_inverse(int id);  // memoized
  size_t size() const { return kind_ == AlphabetKind::matrix ? mats_.size() : gens_.size(); }
  std::string symbol_name(int id) const;

 private:
  AlphabetKind kind_;
  int dim_ = 0;  // matrix dimension or max Steinberg index
  FieldPtr f_;
  std::unordered_map<std::string, int> index_;
  std::vector<ExactMatrix> mats_;
  std::vector<int> inv_id_;  // -1 until computed
  std::vector<StGen> gens_;
};

using AlphaPtr = std::shared_ptr<Alphabet>;

struct Letter {
  int32_t sym;
  int8_t exp;  // +1 or -1
  bool operator==(const Letter& o) const { return sym == o.sym && exp == o.exp; }
};

class Word {
 public:
  Word() = default;
  explicit Word(AlphaPtr a) : a_(std::move(a)) {}
  Word(AlphaPtr a, std::vector<Letter> ls) : a_(std::move(a)), ls_(std::move(ls)) {}

  const AlphaPtr& alphabet() const { return a_; }
  const std::vector<Letter>& letters() const { return ls_; }
  size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  Word reduced() const;
  bool is_reduced() const;
  Word inverse() const;
  Word operator*(const Word& o) const;           // concatenation (not reduced)
  Word conjugated_by(const Word& u) const;       // u * w * u^{-1}
  static Word commutator(const Word& x, const Word& y);
  bool equals_freely(const Word& o) const;       // equality in the free group

  // evaluation homomorphism phi
  ExactMatrix evaluate(int n) const;  // steinberg: via elementary matrices at N=n
  ExactMatrix evaluate() const;       // matrix alphabet
  bool is_relator(int n = 0) const;

  std::string to_string() const;

 private:
  void check_alpha(const Word& o) const;
  AlphaPtr a_;
  std::vector<Letter> ls_;
};

// single-letter helpers
Word letter_word(const AlphaPtr& a, int sym, int exp = 1);

}  // namespace breg
