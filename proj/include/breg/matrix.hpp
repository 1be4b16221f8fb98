#pragma once

// Exact N x N matrices over Q(zeta_n): the group elements of SL_N.
// Every matrix carries a canonical key so that equal matrices are equal
// strings; the key doubles as the symbol identity in the free-group layer.

#include <vector>

#include "breg/cyclo.hpp"
#include "breg/nmat.hpp"

namespace breg {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(FieldPtr f, int n, std::vector<CycNumber> entries);

  static ExactMatrix identity(FieldPtr f, int n);
  static ExactMatrix diagonal(FieldPtr f, const std::vector<CycNumber>& d);
  // identity + lambda at (i, j); 1-based indices, i != j
  static ExactMatrix elementary(FieldPtr f, int n, int i, int j, const CycNumber& lambda);

  int dim() const { return n_; }
  const FieldPtr& field() const { return f_; }
  const CycNumber& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }  // 0-based
  const std::string& key() const { return key_; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix inverse() const;
  CycNumber det() const;
  bool operator==(const ExactMatrix& o) const { return key_ == o.key_; }
  bool operator!=(const ExactMatrix& o) const { return key_ != o.key_; }
  bool is_identity() const;

  ExactMatrix hermitian_ct() const;
  // block-diagonal embedding into dimension m >= n, identity padding
  ExactMatrix pad(int m) const;

  NMat<DD> embed() const;
  NMat<DD> embed_at(int p) const;

  std::string to_string() const;
  std::string serialize() const;  // entries joined by ';'
  static ExactMatrix deserialize(FieldPtr f, int n, const std::string& s);

 private:
  FieldPtr f_;
  int n_ = 0;
  std::vector<CycNumber> e_;
  std::string key_;
};

// One shared scaling bound per tuple: max over the tuple of the largest
// eigenvalue of X X^*, inflated by a 1e-12 relative margin.
DD spectral_bound(const std::vector<NMat<DD>>& tuple);

}  // namespace breg
