#include "coxrow/matrix.hpp"

namespace coxrow {

bool is_integer_matrix(const RationalMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j).get_den() != 1) return false;
  return true;
}

RationalMatrix coxeter_from_cartan(const RationalMatrix& cartan) {
  if (cartan.rows() != cartan.cols()) raise(Errc::NonSquare, "Cartan matrix must be square");
  bool unimodular_integer = false;
  if (is_integer_matrix(cartan)) {
    Rational d = determinant(cartan);
    unimodular_integer = (d == 1 || d == -1);
  }
  RationalMatrix c = -(inverse(cartan) * cartan.transpose());
  if (unimodular_integer)
    engine_check(is_integer_matrix(c), "Coxeter matrix of unimodular integer Cartan not integral");
  return c;
}

bool check_identity_square(const RationalMatrix& a) {
  if (a.rows() != a.cols()) raise(Errc::NonSquare, "square check needs a square matrix");
  return (a * a).is_identity();
}

bool check_nilpotent_shift(const RationalMatrix& a) {
  if (a.rows() != a.cols()) raise(Errc::NonSquare, "nilpotency check needs a square matrix");
  RationalMatrix s = a + RationalMatrix::identity(a.rows());
  return (s * s).is_zero();
}

}  // namespace coxrow
