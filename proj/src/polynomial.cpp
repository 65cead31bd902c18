#include "coxrow/polynomial.hpp"

#include <algorithm>

namespace coxrow {

namespace {

// Rational polynomials, lowest degree first, no trailing zeros.
using QP = std::vector<Rational>;

void qp_trim(QP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qp_mul(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QP qp_monic(QP p) {
  qp_trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return p;
}

// Remainder and quotient of a by b, b nonzero.
void qp_divmod(const QP& a, const QP& b, QP& quot, QP& rem) {
  engine_check(!b.empty(), "polynomial division by zero");
  rem = a;
  qp_trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    Rational f = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    qp_trim(rem);
  }
}

QP qp_gcd(QP a, QP b) {
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QP q, r;
    qp_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return qp_monic(std::move(a));
}

QP qp_lcm(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP g = qp_gcd(a, b);
  QP q, r;
  qp_divmod(a, g, q, r);
  engine_check(r.empty(), "gcd does not divide its argument");
  return qp_monic(qp_mul(q, b));
}

std::vector<Rational> mat_vec(const RationalMatrix& a, const std::vector<Rational>& v) {
  std::vector<Rational> r(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) r[i] += a.at(i, j) * v[j];
  return r;
}

bool is_zero_vec(const std::vector<Rational>& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

// Least monic annihilator of the Krylov sequence e_i, A e_i, A^2 e_i, ...
QP krylov_annihilator(const RationalMatrix& a, int seed) {
  int n = a.rows();
  struct Row {
    std::vector<Rational> vec;    // reduced vector, pivot entry normalized to 1
    std::vector<Rational> combo;  // expression over raw iterates u_0..u_k
    int pivot;
  };
  std::vector<Row> rows;
  std::vector<Rational> u(n, Rational(0));
  u[seed] = 1;
  for (int k = 0;; ++k) {
    engine_check(k <= n, "Krylov iteration exceeded dimension bound");
    std::vector<Rational> w = u;
    std::vector<Rational> combo(size_t(k) + 1, Rational(0));
    combo[k] = 1;
    for (const Row& row : rows) {
      const Rational& f = w[row.pivot];
      if (f == 0) continue;
      Rational factor = f;  // row vectors are pivot-normalized
      for (int j = 0; j < n; ++j) w[j] -= factor * row.vec[j];
      for (size_t j = 0; j < row.combo.size(); ++j) combo[j] -= factor * row.combo[j];
    }
    if (is_zero_vec(w)) return qp_monic(QP(combo.begin(), combo.end()));
    int pivot = 0;
    while (w[pivot] == 0) ++pivot;
    Rational inv = 1 / w[pivot];
    for (Rational& x : w) x *= inv;
    for (Rational& x : combo) x *= inv;
    rows.push_back(Row{std::move(w), std::move(combo), pivot});
    u = mat_vec(a, u);
  }
}

// Evaluate p at A applied to a single vector, via accumulated iterates.
bool annihilates_vector(const QP& p, const RationalMatrix& a, int seed) {
  int n = a.rows();
  std::vector<Rational> acc(n, Rational(0));
  std::vector<Rational> u(n, Rational(0));
  u[seed] = 1;
  for (size_t j = 0; j < p.size(); ++j) {
    if (p[j] != 0)
      for (int i = 0; i < n; ++i) acc[i] += p[j] * u[i];
    if (j + 1 < p.size()) u = mat_vec(a, u);
  }
  return is_zero_vec(acc);
}

}  // namespace

IntPolynomial IntPolynomial::from_integer_coeffs(std::vector<Integer> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  IntPolynomial p;
  if (coeffs.empty()) return p;
  Integer content = 0;
  for (const Integer& c : coeffs) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  }
  if (coeffs.back() < 0) content = -content;
  for (Integer& c : coeffs) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    c = q;
  }
  p.c_ = std::move(coeffs);
  return p;
}

IntPolynomial IntPolynomial::from_rational_coeffs(const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const Rational& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs.size());
  for (const Rational& c : coeffs) {
    Rational scaled = c * Rational(den);
    engine_check(scaled.get_den() == 1, "denominator clearing failed");
    ints.push_back(scaled.get_num());
  }
  return from_integer_coeffs(std::move(ints));
}

bool IntPolynomial::divides(const IntPolynomial& other) const {
  if (c_.empty()) return other.c_.empty();
  QP a(other.c_.begin(), other.c_.end());
  QP b(c_.begin(), c_.end());
  QP q, r;
  qp_divmod(a, b, q, r);
  return r.empty();
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Integer& c = c_[d];
    if (c == 0) continue;
    bool negative = c < 0;
    Integer abs_c = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (abs_c != 1 || d == 0) out += abs_c.get_str();
    if (d >= 1) {
      out += "x";
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

IntPolynomial minimal_polynomial(const RationalMatrix& a) {
  if (a.rows() != a.cols()) raise(Errc::NonSquare, "minimal polynomial needs a square matrix");
  int n = a.rows();
  QP m = {Rational(1)};
  for (int seed = 0; seed < n; ++seed) {
    if (static_cast<int>(m.size()) == n + 1) break;  // degree can no longer grow
    if (m.size() > 1 && annihilates_vector(m, a, seed)) continue;
    m = qp_lcm(m, krylov_annihilator(a, seed));
  }
  return IntPolynomial::from_rational_coeffs(m);
}

RationalMatrix evaluate(const IntPolynomial& p, const RationalMatrix& a) {
  if (a.rows() != a.cols()) raise(Errc::NonSquare, "polynomial evaluation needs a square matrix");
  int n = a.rows();
  RationalMatrix r(n, n);
  const std::vector<Integer>& c = p.coeffs();
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
    r = (d == static_cast<int>(c.size()) - 1) ? r : a * r;
    for (int i = 0; i < n; ++i) r.at(i, i) += Rational(c[d]);
  }
  return r;
}

}  // namespace coxrow
