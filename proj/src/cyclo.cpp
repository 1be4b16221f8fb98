#include "breg/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace breg {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(Err::invalid_input, "bad rational: " + s);
  q.canonicalize();
  return q;
}

// ---- cyclotomic polynomial ----------------------------------------------

// exact division of integer polynomials (assumes divisibility, divisor monic)
static std::vector<mpz_class> poly_div(const std::vector<mpz_class>& a,
                                       const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r = a;
  int db = int(b.size()) - 1;
  int da = int(r.size()) - 1;
  std::vector<mpz_class> q(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    mpz_class c = r[k + db];  // b monic
    q[k] = c;
    if (c != 0)
      for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
  }
  return q;
}

static std::vector<mpz_class> cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div(num, cyclotomic(d));
  return num;
}

FieldPtr CycField::make(int conductor) {
  if (conductor < 2) fail(Err::invalid_conductor, "conductor must be >= 2");
  auto f = std::shared_ptr<CycField>(new CycField());
  f->n_ = conductor;
  f->phi_ = cyclotomic(conductor);
  f->d_ = int(f->phi_.size()) - 1;
  int d = f->d_;
  // reduction rows: z^k for k = d .. 2d-2 expressed in the power basis
  // z^d = -(phi_{d-1} z^{d-1} + ... + phi_0)
  f->red_.resize(d - 1);
  std::vector<Rat> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = Rat(-f->phi_[i]);
  for (int k = 0; k <= d - 2; ++k) {
    f->red_[k] = cur;
    if (k == d - 2) break;
    // multiply cur by z and reduce the overflow coefficient
    std::vector<Rat> nxt(d);
    Rat top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) nxt[i] += top * Rat(-f->phi_[i]);
    cur = nxt;
  }
  // zeta^k in the basis, k = 0 .. n-1
  f->zpow_.resize(conductor);
  for (int k = 0; k < conductor; ++k) {
    std::vector<Rat> v(d);
    if (k < d) {
      v[k] = 1;
    } else {
      // z * zpow_[k-1], reduced
      const auto& prev = f->zpow_[k - 1];
      Rat top = prev[d - 1];
      for (int i = d - 1; i >= 1; --i) v[i] = prev[i - 1];
      v[0] = 0;
      if (top != 0)
        for (int i = 0; i < d; ++i) v[i] += top * Rat(-f->phi_[i]);
    }
    f->zpow_[k] = v;
  }
  // numeric roots
  f->roots_.resize(conductor);
  for (int k = 0; k < conductor; ++k) {
    DD s, c;
    dd_sincos(dd_two_pi() * DD(double(k)) / DD(double(conductor)), s, c);
    f->roots_[k] = Cx<DD>(c, s);
  }
  return f;
}

// ---- CycNumber ------------------------------------------------------------

CycNumber::CycNumber(FieldPtr f, std::vector<Rat> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (int(c_.size()) != f_->degree()) fail(Err::invalid_input, "coefficient vector has wrong length");
  for (auto& q : c_) q.canonicalize();
}

CycNumber CycNumber::zero(FieldPtr f) {
  std::vector<Rat> v(f->degree());
  return CycNumber(std::move(f), std::move(v));
}

CycNumber CycNumber::one(FieldPtr f) {
  std::vector<Rat> v(f->degree());
  v[0] = 1;
  return CycNumber(std::move(f), std::move(v));
}

CycNumber CycNumber::rational(FieldPtr f, const Rat& q) {
  std::vector<Rat> v(f->degree());
  v[0] = q;
  return CycNumber(std::move(f), std::move(v));
}

CycNumber CycNumber::zeta(FieldPtr f, int power) {
  int n = f->conductor();
  int k = ((power % n) + n) % n;
  std::vector<Rat> v = f->zeta_pow()[k];
  return CycNumber(std::move(f), std::move(v));
}

bool CycNumber::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNumber::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycNumber::check_same(const CycNumber& o) const {
  if (f_.get() != o.f_.get() && f_->conductor() != o.f_->conductor())
    fail(Err::field_mismatch, "operands in different cyclotomic fields");
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  check_same(o);
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] + o.c_[i];
  return CycNumber(f_, std::move(v));
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
  check_same(o);
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] - o.c_[i];
  return CycNumber(f_, std::move(v));
}

CycNumber CycNumber::operator-() const {
  std::vector<Rat> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return CycNumber(f_, std::move(v));
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  check_same(o);
  int d = f_->degree();
  std::vector<Rat> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rat> v(prod.begin(), prod.begin() + d);
  const auto& red = f_->red();
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = red[k - d];
    for (int i = 0; i < d; ++i) v[i] += prod[k] * row[i];
  }
  return CycNumber(f_, std::move(v));
}

// extended Euclid in Q[x] against Phi_n
CycNumber CycNumber::inv() const {
  if (is_zero()) fail(Err::zero_divisor, "inverse of zero");
  int d = f_->degree();
  using Poly = std::vector<Rat>;
  auto deg = [](const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  Poly r0(d + 1), r1 = c_;
  for (int i = 0; i <= d; ++i) r0[i] = Rat(f_->phi()[i]);
  r1.resize(d + 1);
  Poly s0(d + 1), s1(d + 1);
  s1[0] = 1;  // s0 = 0, s1 = 1: invariant s_k * this = r_k mod Phi
  while (true) {
    int d1 = deg(r1);
    if (d1 == 0) break;
    if (d1 < 0) fail(Err::zero_divisor, "element not invertible");
    int d0 = deg(r0);
    // r0 -= (lead r0 / lead r1) x^{d0-d1} r1 ; same for s
    Rat q = r0[d0] / r1[d1];
    int sh = d0 - d1;
    for (int i = 0; i <= d1; ++i) r0[i + sh] -= q * r1[i];
    for (int i = 0; i + sh <= d; ++i) s0[i + sh] -= q * s1[i];
    if (deg(r0) < deg(r1)) {
      std::swap(r0, r1);
      std::swap(s0, s1);
    }
  }
  Rat lead = r1[0];
  std::vector<Rat> v(d);
  for (int i = 0; i < d; ++i) v[i] = s1[i] / lead;
  return CycNumber(f_, std::move(v));
}

CycNumber CycNumber::operator/(const CycNumber& o) const { return *this * o.inv(); }

CycNumber CycNumber::pow(long e) const {
  CycNumber base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  CycNumber r = CycNumber::one(f_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

CycNumber CycNumber::conj() const {
  int n = f_->conductor(), d = f_->degree();
  std::vector<Rat> v(d);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    const auto& z = f_->zeta_pow()[(n - i) % n];
    for (int j = 0; j < d; ++j) v[j] += c_[i] * z[j];
  }
  return CycNumber(f_, std::move(v));
}

bool CycNumber::operator==(const CycNumber& o) const {
  if (f_->conductor() != o.f_->conductor()) return false;
  return c_ == o.c_;
}

Cx<DD> CycNumber::embed() const {
  int n = f_->conductor(), d = f_->degree();
  Cx<DD> acc(DD(0.0), DD(0.0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    DD x(mpq_get_d(c_[i].get_mpq_t()));
    // refine the rational -> DD conversion: x = double approx + correction
    Rat rem = c_[i] - Rat(x.hi);
    rem.canonicalize();
    x.lo += mpq_get_d(rem.get_mpq_t());
    acc += x * f_->root(i % n);
  }
  return acc;
}

Cx<DD> CycNumber::embed_at(int p) const {
  if (p < 53) fail(Err::precondition, "precision must be >= 53 bits");
  if (p > 106) fail(Err::invalid_input, "precision above 106 bits is not supported");
  Cx<DD> z = embed();
  if (p <= 53) return Cx<DD>(DD(z.re.to_double()), DD(z.im.to_double()));
  return z;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    Rat a = c_[i] > 0 || first ? c_[i] : Rat(-c_[i]);
    if (first && a < 0 && i > 0) {
      os << "-";
      a = -a;
    }
    if (i == 0)
      os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "zeta";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string CycNumber::serialize() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  return os.str();
}

CycNumber CycNumber::deserialize(FieldPtr f, const std::string& s) {
  std::vector<Rat> v;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) v.push_back(rat_from_string(cur));
  if (int(v.size()) != f->degree()) fail(Err::invalid_input, "wrong coefficient count");
  return CycNumber(std::move(f), std::move(v));
}

// ---- tiny expression parser: polynomials in zeta over Q -------------------
// grammar: expr := term (('+'|'-') term)* ; term := factor ('*' factor)*
// factor := rational | 'zeta' ['^' int] | '-' factor | '(' expr ')'
namespace {
struct Parser {
  FieldPtr f;
  const std::string& s;
  size_t i = 0;
  explicit Parser(FieldPtr f_, const std::string& s_) : f(std::move(f_)), s(s_) {}
  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  CycNumber expr() {
    CycNumber v = term();
    while (true) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        break;
    }
    return v;
  }
  CycNumber term() {
    CycNumber v = factor();
    while (true) {
      skip();
      if (eat('*'))
        v = v * factor();
      else
        break;
    }
    return v;
  }
  long integer() {
    skip();
    size_t j = i;
    while (j < s.size() && (std::isdigit((unsigned char)s[j]) || (j == i && s[j] == '-'))) ++j;
    if (j == i) fail(Err::invalid_input, "expected integer in unit expression");
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  }
  CycNumber factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      CycNumber v = expr();
      if (!eat(')')) fail(Err::invalid_input, "missing ')' in unit expression");
      return v;
    }
    if (s.compare(i, 4, "zeta") == 0) {
      i += 4;
      long p = 1;
      if (eat('^')) p = integer();
      return CycNumber::zeta(f, int(p));
    }
    // rational literal p or p/q
    size_t j = i;
    while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/')) ++j;
    if (j == i) fail(Err::invalid_input, "cannot parse unit expression near '" + s.substr(i) + "'");
    Rat q = rat_from_string(s.substr(i, j - i));
    i = j;
    return CycNumber::rational(f, q);
  }
};
}  // namespace

CycNumber parse_unit_expr(FieldPtr f, const std::string& expr) {
  Parser p(std::move(f), expr);
  CycNumber v = p.expr();
  p.skip();
  if (p.i != expr.size()) fail(Err::invalid_input, "trailing junk in unit expression");
  return v;
}

}  // namespace breg
