#include "breg/matrix.hpp"

#include <sstream>

namespace breg {

ExactMatrix::ExactMatrix(FieldPtr f, int n, std::vector<CycNumber> entries)
    : f_(std::move(f)), n_(n), e_(std::move(entries)) {
  if (int(e_.size()) != n_ * n_) fail(Err::dimension, "entry count != n^2");
  std::ostringstream os;
  os << n_ << '|';
  for (const auto& x : e_) os << x.serialize() << ';';
  key_ = os.str();
}

ExactMatrix ExactMatrix::identity(FieldPtr f, int n) {
  std::vector<CycNumber> e(size_t(n) * n, CycNumber::zero(f));
  for (int i = 0; i < n; ++i) e[size_t(i) * n + i] = CycNumber::one(f);
  return ExactMatrix(std::move(f), n, std::move(e));
}

ExactMatrix ExactMatrix::diagonal(FieldPtr f, const std::vector<CycNumber>& d) {
  int n = int(d.size());
  std::vector<CycNumber> e(size_t(n) * n, CycNumber::zero(f));
  for (int i = 0; i < n; ++i) e[size_t(i) * n + i] = d[i];
  return ExactMatrix(std::move(f), n, std::move(e));
}

ExactMatrix ExactMatrix::elementary(FieldPtr f, int n, int i, int j, const CycNumber& lambda) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    fail(Err::invalid_index, "elementary matrix needs distinct indices within dimension");
  std::vector<CycNumber> e(size_t(n) * n, CycNumber::zero(f));
  for (int k = 0; k < n; ++k) e[size_t(k) * n + k] = CycNumber::one(f);
  e[size_t(i - 1) * n + (j - 1)] = lambda;
  return ExactMatrix(std::move(f), n, std::move(e));
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n_ != o.n_) fail(Err::dimension, "dimension mismatch in product");
  std::vector<CycNumber> e(size_t(n_) * n_, CycNumber::zero(f_));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const CycNumber& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        e[size_t(i) * n_ + j] = e[size_t(i) * n_ + j] + v * o.at(k, j);
      }
    }
  return ExactMatrix(f_, n_, std::move(e));
}

// Gauss-Jordan over the exact field; pivot on any nonzero entry.
ExactMatrix ExactMatrix::inverse() const {
  int n = n_;
  std::vector<CycNumber> a = e_;
  std::vector<CycNumber> b(size_t(n) * n, CycNumber::zero(f_));
  for (int i = 0; i < n; ++i) b[size_t(i) * n + i] = CycNumber::one(f_);
  auto A = [&](int i, int j) -> CycNumber& { return a[size_t(i) * n + j]; };
  auto B = [&](int i, int j) -> CycNumber& { return b[size_t(i) * n + j]; };
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(Err::singular_matrix, "matrix is singular");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(A(piv, j), A(col, j));
        std::swap(B(piv, j), B(col, j));
      }
    CycNumber inv = A(col, col).inv();
    for (int j = 0; j < n; ++j) {
      A(col, j) = A(col, j) * inv;
      B(col, j) = B(col, j) * inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || A(r, col).is_zero()) continue;
      CycNumber factor = A(r, col);
      for (int j = 0; j < n; ++j) {
        A(r, j) = A(r, j) - factor * A(col, j);
        B(r, j) = B(r, j) - factor * B(col, j);
      }
    }
  }
  return ExactMatrix(f_, n, std::move(b));
}

CycNumber ExactMatrix::det() const {
  int n = n_;
  std::vector<CycNumber> a = e_;
  auto A = [&](int i, int j) -> CycNumber& { return a[size_t(i) * n + j]; };
  CycNumber d = CycNumber::one(f_);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return CycNumber::zero(f_);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
      d = -d;
    }
    d = d * A(col, col);
    CycNumber inv = A(col, col).inv();
    for (int r = col + 1; r < n; ++r) {
      if (A(r, col).is_zero()) continue;
      CycNumber factor = A(r, col) * inv;
      for (int j = col; j < n; ++j) A(r, j) = A(r, j) - factor * A(col, j);
    }
  }
  return d;
}

bool ExactMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

ExactMatrix ExactMatrix::hermitian_ct() const {
  std::vector<CycNumber> e(size_t(n_) * n_, CycNumber::zero(f_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e[size_t(i) * n_ + j] = at(j, i).conj();
  return ExactMatrix(f_, n_, std::move(e));
}

ExactMatrix ExactMatrix::pad(int m) const {
  if (m < n_) fail(Err::dimension, "padding cannot shrink a matrix");
  if (m == n_) return *this;
  std::vector<CycNumber> e(size_t(m) * m, CycNumber::zero(f_));
  for (int i = 0; i < m; ++i) e[size_t(i) * m + i] = CycNumber::one(f_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e[size_t(i) * m + j] = at(i, j);
  return ExactMatrix(f_, m, std::move(e));
}

NMat<DD> ExactMatrix::embed() const {
  NMat<DD> m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).embed();
  return m;
}

NMat<DD> ExactMatrix::embed_at(int p) const {
  NMat<DD> m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).embed_at(p);
  return m;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string ExactMatrix::serialize() const {
  std::ostringstream os;
  for (size_t k = 0; k < e_.size(); ++k) {
    if (k) os << ';';
    os << e_[k].serialize();
  }
  return os.str();
}

ExactMatrix ExactMatrix::deserialize(FieldPtr f, int n, const std::string& s) {
  std::vector<CycNumber> e;
  std::istringstream is(s);
  std::string cur;
  while (std::getline(is, cur, ';')) e.push_back(CycNumber::deserialize(f, cur));
  if (int(e.size()) != n * n) fail(Err::invalid_input, "wrong entry count in matrix");
  return ExactMatrix(std::move(f), n, std::move(e));
}

DD spectral_bound(const std::vector<NMat<DD>>& tuple) {
  if (tuple.empty()) fail(Err::precondition, "spectral bound of empty tuple");
  DD best(0.0);
  for (const auto& x : tuple) {
    NMat<DD> h = x * hermitian_transpose(x);
    DD lam = jacobi_max_eigenvalue(h);
    if (lam > best) best = lam;
  }
  return best * (DD(1.0) + DD(1e-12));
}

}  // namespace breg
