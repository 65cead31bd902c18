#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "coxrow/fp.hpp"
#include "coxrow/matrix.hpp"
#include "coxrow/permutation.hpp"
#include "coxrow/polynomial.hpp"

using namespace coxrow;

namespace {

RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Independent minimal-polynomial oracle: smallest d with vec(A^0..A^d)
// linearly dependent, dependency read off a kernel vector.
IntPolynomial minpoly_bruteforce(const RationalMatrix& a) {
  int n = a.rows();
  std::vector<RationalMatrix> powers = {RationalMatrix::identity(n)};
  for (int d = 1; d <= n; ++d) {
    powers.push_back(a * powers.back());
    RationalMatrix stacked(n * n, d + 1);
    for (int k = 0; k <= d; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) stacked.at(i * n + j, k) = powers[k].at(i, j);
    RationalMatrix ker = kernel_basis(stacked);
    if (ker.cols() > 0) {
      std::vector<Rational> coeffs(d + 1);
      for (int k = 0; k <= d; ++k) coeffs[k] = ker.at(k, 0);
      return IntPolynomial::from_rational_coeffs(coeffs);
    }
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("inverse is exact") {
  RationalMatrix m = mat({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK((m * inverse(m)).is_identity());
  RationalMatrix f = mat({{2, 3}, {5, 7}});
  CHECK((inverse(f) * f).is_identity());
  CHECK_THROWS_AS((void)inverse(mat({{1, 2}, {2, 4}})), Error);
  CHECK_THROWS_AS((void)inverse(mat({{1, 2, 3}, {4, 5, 6}})), Error);
}

TEST_CASE("determinant and rank") {
  CHECK(determinant(mat({{1, 1}, {0, 1}})) == 1);
  CHECK(determinant(mat({{2, 0}, {0, 3}})) == 6);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("kernel basis spans the null space") {
  RationalMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
  RationalMatrix ker = kernel_basis(m);
  CHECK(ker.cols() == 2);
  CHECK((m * ker).is_zero());
  CHECK(rank(ker) == 2);
}

TEST_CASE("solve returns a particular solution") {
  RationalMatrix a = mat({{1, 0}, {1, 1}, {0, 1}});
  RationalMatrix b = mat({{1}, {3}, {2}});
  RationalMatrix x = solve(a, b);
  CHECK(a * x == b);
}

TEST_CASE("coxeter_from_cartan hand values") {
  CHECK(coxeter_from_cartan(mat({{1}})) == mat({{-1}}));
  CHECK(coxeter_from_cartan(mat({{1, 1}, {0, 1}})) == mat({{0, 1}, {-1, -1}}));
  CHECK_THROWS_AS((void)coxeter_from_cartan(mat({{1, 2, 3}, {4, 5, 6}})), Error);
}

TEST_CASE("identity-square and nilpotent-shift checks") {
  RationalMatrix neg = -RationalMatrix::identity(3);
  CHECK(check_identity_square(neg));
  CHECK(check_nilpotent_shift(neg));
  RationalMatrix j = mat({{0, 1}, {0, 0}}) - RationalMatrix::identity(2);
  CHECK(check_nilpotent_shift(j));     // (J - id + id)^2 = J^2 = 0
  CHECK(!check_identity_square(j));
  CHECK(!check_nilpotent_shift(RationalMatrix::identity(2)));
}

TEST_CASE("permutation matrices") {
  Permutation p(std::vector<int>{2, 0, 1});
  RationalMatrix pm = p.to_matrix();
  CHECK((pm.transpose() * pm).is_identity());
  CHECK(p.inverse().to_matrix() == pm.transpose());
  // each row/column sums to 1
  for (int i = 0; i < 3; ++i) {
    Rational row_total = 0, col_total = 0;
    for (int j = 0; j < 3; ++j) {
      row_total += pm.at(i, j);
      col_total += pm.at(j, i);
    }
    CHECK(row_total == 1);
    CHECK(col_total == 1);
  }
  RationalMatrix a = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(p.inverse_times(a) == pm.transpose() * a);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), Error);
}

TEST_CASE("minimal polynomial examples") {
  CHECK(minimal_polynomial(RationalMatrix::identity(3)) ==
        IntPolynomial::from_integer_coeffs({-1, 1}));  // x - 1
  CHECK(minimal_polynomial(RationalMatrix::identity(3)).to_string() == "x - 1");
  RationalMatrix nil = mat({{0, 1}, {0, 0}});
  CHECK(minimal_polynomial(nil).to_string() == "x^2");
  RationalMatrix comp = mat({{0, 0, 1}, {1, 0, 1}, {0, 1, -1}});
  CHECK(minimal_polynomial(comp) == minpoly_bruteforce(comp));
}

TEST_CASE("minimal polynomial agrees with brute-force oracle and annihilates") {
  std::vector<RationalMatrix> samples = {
      mat({{1, 1}, {0, 1}}),
      mat({{0, 1}, {-1, -1}}),
      mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
      mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}),
      mat({{1, 2, 3}, {0, 1, 4}, {0, 0, 2}}),
      mat({{-1, 0, 0, 0}, {5, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 7, 1}}),
  };
  for (const RationalMatrix& a : samples) {
    IntPolynomial mp = minimal_polynomial(a);
    CHECK(evaluate(mp, a).is_zero());
    CHECK(mp == minpoly_bruteforce(a));
  }
}

TEST_CASE("minimal polynomials of similar operators agree") {
  RationalMatrix c = mat({{0, 1, 0}, {0, 0, 1}, {1, -1, 2}});
  Permutation r(std::vector<int>{1, 2, 0});
  RationalMatrix rc = r.inverse_times(c);
  RationalMatrix cr = c * r.inverse().to_matrix();
  CHECK(minimal_polynomial(rc) == minimal_polynomial(cr));
}

TEST_CASE("polynomial formatting and division") {
  IntPolynomial p = IntPolynomial::from_integer_coeffs({1, -1, -1, 1});
  CHECK(p.to_string() == "x^3 - x^2 - x + 1");
  IntPolynomial x2m1 = IntPolynomial::from_integer_coeffs({-1, 0, 1});
  CHECK(x2m1.divides(p));
  CHECK(!p.divides(x2m1));
  CHECK(IntPolynomial::from_integer_coeffs({2, -2, -2, 2}) == p);  // content normalized
  CHECK(IntPolynomial::from_integer_coeffs({}).to_string() == "0");
  CHECK(IntPolynomial::from_rational_coeffs({Rational(1, 2), Rational(1)}).to_string() ==
        "2x + 1");
}

TEST_CASE("prime field arithmetic") {
  Fp::set_modulus(7);
  CHECK(Fp(3) + Fp(5) == Fp(1));
  CHECK(Fp(3) * Fp(5) == Fp(1));
  CHECK(Fp(-1) == Fp(6));
  CHECK(Fp(3) / Fp(5) == Fp(2));  // 3 * 5^{-1} = 3 * 3 = 2
  Matrix<Fp> m(2, 2);
  m.at(0, 0) = Fp(1);
  m.at(0, 1) = Fp(3);
  m.at(1, 0) = Fp(2);
  m.at(1, 1) = Fp(6);
  CHECK(rank(m) == 1);  // second row = 2 * first mod 7
  Matrix<Fp> ker = kernel_basis(m);
  CHECK(ker.cols() == 1);
  CHECK((m * ker).is_zero());
}
