#include "coxrow/homology.hpp"

namespace coxrow {

RowmotionCoxeterReport rowmotion_coxeter_report(const RationalMatrix& coxeter,
                                                const Permutation& r) {
  if (coxeter.rows() != r.size())
    raise(Errc::DimensionMismatch, "Coxeter matrix and permutation size differ");
  RowmotionCoxeterReport out{r.inverse_times(coxeter), {}, false};
  out.minimal_poly = minimal_polynomial(out.rowmotion_coxeter);
  out.order_two = check_identity_square(out.rowmotion_coxeter);
  return out;
}

}  // namespace coxrow
