#include "breg/words.hpp"

#include <sstream>

namespace breg {

AlphaPtr Alphabet::matrix_alphabet(FieldPtr f, int dim) {
  auto a = std::make_shared<Alphabet>();
  a->kind_ = AlphabetKind::matrix;
  a->f_ = std::move(f);
  a->dim_ = dim;
  return a;
}

AlphaPtr Alphabet::steinberg_alphabet(FieldPtr f, int max_index) {
  auto a = std::make_shared<Alphabet>();
  a->kind_ = AlphabetKind::steinberg;
  a->f_ = std::move(f);
  a->dim_ = max_index;
  return a;
}

int Alphabet::intern(const ExactMatrix& m) {
  if (kind_ != AlphabetKind::matrix) fail(Err::alphabet_mismatch, "matrix symbol in steinberg alphabet");
  if (m.dim() != dim_) fail(Err::dimension, "matrix dimension does not fit the alphabet");
  auto it = index_.find(m.key());
  if (it != index_.end()) return it->second;
  int id = int(mats_.size());
  mats_.push_back(m);
  inv_id_.push_back(-1);
  index_.emplace(m.key(), id);
  return id;
}

int Alphabet::intern(int i, int j, const CycNumber& lambda) {
  if (kind_ != AlphabetKind::steinberg) fail(Err::alphabet_mismatch, "steinberg symbol in matrix alphabet");
  if (i == j || i < 1 || j < 1 || i > dim_ || j > dim_)
    fail(Err::invalid_index, "steinberg generator indices out of range");
  std::ostringstream os;
  os << i << '|' << j << '|' << lambda.serialize();
  auto it = index_.find(os.str());
  if (it != index_.end()) return it->second;
  int id = int(gens_.size());
  gens_.push_back(StGen{i, j, lambda});
  index_.emplace(os.str(), id);
  return id;
}

const ExactMatrix& Alphabet::matrix_inverse(int id) {
  if (inv_id_[id] >= 0) return mats_[inv_id_[id]];
  ExactMatrix inv = mats_[id].inverse();
  int iid = intern(inv);
  inv_id_[id] = iid;
  if (inv_id_[iid] < 0) inv_id_[iid] = id;
  return mats_[iid];
}

std::string Alphabet::symbol_name(int id) const {
  std::ostringstream os;
  if (kind_ == AlphabetKind::steinberg) {
    const StGen& g = gens_[id];
    os << "x_{" << g.i << " " << g.j << "}^{" << g.lambda.to_string() << "}";
  } else {
    os << "s[" << id << "]";
  }
  return os.str();
}

Word letter_word(const AlphaPtr& a, int sym, int exp) {
  return Word(a, {Letter{int32_t(sym), int8_t(exp)}});
}

void Word::check_alpha(const Word& o) const {
  if (a_.get() != o.a_.get()) fail(Err::alphabet_mismatch, "words over different alphabets");
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(ls_.size());
  for (const Letter& l : ls_) {
    if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(a_, std::move(out));
}

bool Word::is_reduced() const {
  for (size_t i = 1; i < ls_.size(); ++i)
    if (ls_[i].sym == ls_[i - 1].sym && ls_[i].exp == -ls_[i - 1].exp) return false;
  return true;
}

Word Word::inverse() const {
  std::vector<Letter> out(ls_.rbegin(), ls_.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return Word(a_, std::move(out));
}

Word Word::operator*(const Word& o) const {
  if (!a_) return o;
  if (!o.a_) return *this;
  check_alpha(o);
  std::vector<Letter> out = ls_;
  out.insert(out.end(), o.ls_.begin(), o.ls_.end());
  return Word(a_, std::move(out));
}

Word Word::conjugated_by(const Word& u) const { return (u * *this * u.inverse()); }

Word Word::commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

bool Word::equals_freely(const Word& o) const {
  check_alpha(o);
  return reduced().letters() == o.reduced().letters();
}

ExactMatrix Word::evaluate(int n) const {
  if (a_->kind() != AlphabetKind::steinberg) fail(Err::alphabet_mismatch, "need steinberg alphabet");
  if (n < a_->dim()) fail(Err::evaluation, "evaluation dimension below alphabet index range");
  ExactMatrix m = ExactMatrix::identity(a_->field(), n);
  for (const Letter& l : ls_) {
    const StGen& g = a_->stgen(l.sym);
    CycNumber lam = l.exp > 0 ? g.lambda : -g.lambda;
    m = m * ExactMatrix::elementary(a_->field(), n, g.i, g.j, lam);
  }
  return m;
}

ExactMatrix Word::evaluate() const {
  if (a_->kind() != AlphabetKind::matrix) fail(Err::alphabet_mismatch, "need matrix alphabet");
  ExactMatrix m = ExactMatrix::identity(a_->field(), a_->dim());
  for (const Letter& l : ls_) {
    if (l.exp > 0)
      m = m * a_->matrix(l.sym);
    else
      m = m * a_->matrix_inverse(l.sym);
  }
  return m;
}

bool Word::is_relator(int n) const {
  if (a_->kind() == AlphabetKind::steinberg) {
    int dim = n > 0 ? n : a_->dim();
    return evaluate(dim).is_identity();
  }
  return evaluate().is_identity();
}

std::string Word::to_string() const {
  if (ls_.empty()) return "e";
  std::ostringstream os;
  for (size_t k = 0; k < ls_.size(); ++k) {
    if (k) os << " ";
    os << a_->symbol_name(ls_[k].sym);
    if (ls_[k].exp < 0) os << "^{-1}";
  }
  return os.str();
}

}  // namespace breg
