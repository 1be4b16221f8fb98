#pragma once

// Exact arithmetic in Q(zeta_n): elements are rational coefficient vectors in
// the power basis 1, z, ..., z^{d-1} modulo the n-th cyclotomic polynomial.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "breg/dd.hpp"
#include "breg/error.hpp"

namespace breg {

using Rat = mpq_class;

std::string rat_to_string(const Rat& q);      // "p/q" (or "p" when q = 1)
Rat rat_from_string(const std::string& s);

class CycField;
using FieldPtr = std::shared_ptr<const CycField>;

class CycField : public std::enable_shared_from_this<CycField> {
 public:
  static FieldPtr make(int conductor);

  int conductor() const { return n_; }
  int degree() const { return d_; }
  // coefficients of Phi_n (degree d, monic), index k = coeff of x^k
  const std::vector<mpz_class>& phi() const { return phi_; }
  // zeta^k reduced into the power basis, 0 <= k < n
  const std::vector<std::vector<Rat>>& zeta_pow() const { return zpow_; }
  // reduction rows for z^d .. z^{2d-2}
  const std::vector<std::vector<Rat>>& red() const { return red_; }
  const Cx<DD>& root(int k) const { return roots_[k]; }  // e^{2 pi i k / n}, 0<=k<n

 private:
  CycField() = default;
  int n_ = 0, d_ = 0;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<Rat>> red_;
  std::vector<std::vector<Rat>> zpow_;
  std::vector<Cx<DD>> roots_;
};

class CycNumber {
 public:
  CycNumber() = default;
  CycNumber(FieldPtr f, std::vector<Rat> coeffs);
  static CycNumber zero(FieldPtr f);
  static CycNumber one(FieldPtr f);
  static CycNumber rational(FieldPtr f, const Rat& q);
  static CycNumber zeta(FieldPtr f, int power = 1);

  const FieldPtr& field() const { return f_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // lies in Q

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator/(const CycNumber& o) const;
  CycNumber inv() const;
  CycNumber pow(long e) const;
  CycNumber conj() const;  // zeta -> zeta^{n-1}
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  // numeric image under zeta -> e^{2 pi i / n}; full working precision
  Cx<DD> embed() const;
  // precision-limited image; p in [53, 106]
  Cx<DD> embed_at(int p) const;

  std::string to_string() const;  // human-readable polynomial in zeta
  // exact serialization: coefficient strings, joined by ','
  std::string serialize() const;
  static CycNumber deserialize(FieldPtr f, const std::string& s);

 private:
  void check_same(const CycNumber& o) const;
  FieldPtr f_;
  std::vector<Rat> c_;
};

// parse an expression like "zeta", "-zeta^2", "1/2*zeta + 3", over field f
CycNumber parse_unit_expr(FieldPtr f, const std::string& expr);

}  // namespace breg
