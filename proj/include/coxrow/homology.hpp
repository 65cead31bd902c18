#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "coxrow/permutation.hpp"
#include "coxrow/polynomial.hpp"
#include "coxrow/quiver.hpp"

namespace coxrow {

namespace detail {

// Standard-basis coordinates completing the column space of `span`.
template <typename K>
std::pair<std::vector<int>, std::vector<int>> split_pivots(const Matrix<K>& span) {
  Matrix<K> aug = Matrix<K>::concat_cols(span, Matrix<K>::identity(span.rows()));
  std::vector<int> pivots = rref(aug);
  std::vector<int> span_cols, complement;
  for (int c : pivots) {
    if (c < span.cols())
      span_cols.push_back(c);
    else
      complement.push_back(c - span.cols());
  }
  return {span_cols, complement};
}

template <typename K>
std::vector<int> complement_coords(const Matrix<K>& span) {
  return split_pivots(span).second;
}

}  // namespace detail

// Minimal projective resolution ... -> terms[1] -> terms[0] -> X -> 0.
// diffs[k] is the differential terms[k+1] -> terms[k].
template <typename K>
struct Resolution {
  std::vector<ProjectiveSum<K>> terms;
  std::vector<RepMorphism<K>> diffs;
  RepMorphism<K> augmentation;

  int pdim() const { return static_cast<int>(terms.size()) - 1; }
  std::vector<std::vector<int>> multiplicities(int nvert) const {
    std::vector<std::vector<int>> m;
    for (const ProjectiveSum<K>& t : terms) m.push_back(t.multiplicities(nvert));
    return m;
  }
};

template <typename K>
Resolution<K> minimal_projective_resolution(const BQAlgebra& a, const QuiverRep<K>& x) {
  if (x.is_zero()) raise(Errc::ZeroModule, "resolution of the zero module");
  const Quiver& q = a.quiver();
  Resolution<K> res;
  QuiverRep<K> cur = x;
  std::vector<Matrix<K>> embed;  // kernel of the previous cover, inside its term
  int guard = x.total_dim() + q.vertex_count() + 2;
  while (!cur.is_zero()) {
    engine_check(guard-- > 0, "projective resolution fails to terminate");
    // top(cur) = cur / rad(cur), rad spanned by the images of all arrow maps
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> lifts;  // (vertex, coordinate of a top lift)
    for (int w = 0; w < q.vertex_count(); ++w) {
      if (cur.dims[w] == 0) continue;
      int radcols = 0;
      for (int e : q.in_arrows(w)) radcols += cur.dims[q.arrow(e).src];
      Matrix<K> rad(cur.dims[w], radcols);
      int at = 0;
      for (int e : q.in_arrows(w)) {
        const Matrix<K>& m = cur.arrow_maps[e];
        for (int j = 0; j < m.cols(); ++j, ++at)
          for (int i = 0; i < m.rows(); ++i) rad.at(i, at) = m.at(i, j);
      }
      for (int c : detail::complement_coords(rad)) {
        vertices.push_back(w);
        lifts.emplace_back(w, c);
      }
    }
    ProjectiveSum<K> p = projective_sum<K>(a, vertices);
    RepMorphism<K> d = zero_morphism(p.rep, cur);
    for (size_t s = 0; s < lifts.size(); ++s) {
      Matrix<K> gen(cur.dims[lifts[s].first], 1);
      gen.at(lifts[s].second, 0) = K(1);
      add_summand_morphism(a, p, static_cast<int>(s), cur, gen, d);
    }
    for (int w = 0; w < q.vertex_count(); ++w)
      engine_check(rank(d[w]) == cur.dims[w], "projective cover is not surjective");
    if (res.terms.empty()) {
      res.augmentation = d;
    } else {
      RepMorphism<K> full;
      for (int w = 0; w < q.vertex_count(); ++w) full.push_back(embed[w] * d[w]);
      res.diffs.push_back(std::move(full));
    }
    std::vector<Matrix<K>> ker;
    for (int w = 0; w < q.vertex_count(); ++w) ker.push_back(kernel_basis(d[w]));
    QuiverRep<K> next;
    next.dims.resize(q.vertex_count());
    for (int w = 0; w < q.vertex_count(); ++w) next.dims[w] = ker[w].cols();
    for (int e = 0; e < q.arrow_count(); ++e) {
      const Arrow& ar = q.arrow(e);
      next.arrow_maps.push_back(solve(ker[ar.tgt], p.rep.arrow_maps[e] * ker[ar.src]));
    }
    res.terms.push_back(std::move(p));
    cur = std::move(next);
    embed = std::move(ker);
  }
  return res;
}

template <typename K>
int pdim(const BQAlgebra& a, const QuiverRep<K>& x) {
  return minimal_projective_resolution(a, x).pdim();
}

// The complex Hom(terms[i], Y) in generator coordinates; boundary[i] is
// precomposition with diffs[i], mapping degree i to degree i+1.
template <typename K>
struct HomComplex {
  std::vector<int> dims;
  std::vector<Matrix<K>> boundary;

  std::vector<int> ext_dims() const {
    int len = static_cast<int>(dims.size());
    std::vector<int> ranks(len, 0);
    for (int i = 0; i + 1 < len; ++i) ranks[i] = rank(boundary[i]);
    std::vector<int> ext(len);
    for (int i = 0; i < len; ++i) {
      int ker = (i + 1 < len) ? dims[i] - ranks[i] : dims[i];
      int im = (i > 0) ? ranks[i - 1] : 0;
      ext[i] = ker - im;
    }
    return ext;
  }
};

template <typename K>
HomComplex<K> hom_complex(const BQAlgebra& a, const Resolution<K>& res, const QuiverRep<K>& y) {
  HomComplex<K> hc;
  int len = static_cast<int>(res.terms.size());
  for (int i = 0; i < len; ++i) {
    int d = 0;
    for (int v : res.terms[i].summands) d += y.dims[v];
    hc.dims.push_back(d);
  }
  for (int i = 0; i + 1 < len; ++i) {
    Matrix<K> b(hc.dims[i + 1], hc.dims[i]);
    int col = 0;
    for (size_t s = 0; s < res.terms[i].summands.size(); ++s) {
      int v = res.terms[i].summands[s];
      for (int yb = 0; yb < y.dims[v]; ++yb, ++col) {
        RepMorphism<K> f = zero_morphism(res.terms[i].rep, y);
        Matrix<K> gen(y.dims[v], 1);
        gen.at(yb, 0) = K(1);
        add_summand_morphism(a, res.terms[i], static_cast<int>(s), y, gen, f);
        RepMorphism<K> g;
        for (int w = 0; w < a.vertex_count(); ++w) g.push_back(f[w] * res.diffs[i][w]);
        b.set_column(col, generator_coordinates(res.terms[i + 1], y, g));
      }
    }
    hc.boundary.push_back(std::move(b));
  }
  for (int i = 0; i + 1 < static_cast<int>(hc.boundary.size()); ++i)
    engine_check((hc.boundary[i + 1] * hc.boundary[i]).is_zero(), "hom complex boundary squares");
  return hc;
}

template <typename K>
ProjectiveSum<K> regular_module(const BQAlgebra& a) {
  std::vector<int> all(a.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return projective_sum<K>(a, all);
}

template <typename K>
std::vector<int> ext_dims(const BQAlgebra& a, const QuiverRep<K>& x, const QuiverRep<K>& y) {
  return hom_complex(a, minimal_projective_resolution(a, x), y).ext_dims();
}

// grade X = least i with Ext^i(X, A) != 0.
template <typename K>
int grade(const BQAlgebra& a, const QuiverRep<K>& x) {
  if (x.is_zero()) raise(Errc::ZeroModule, "grade of the zero module");
  std::vector<int> ext = ext_dims(a, x, regular_module<K>(a).rep);
  for (size_t i = 0; i < ext.size(); ++i)
    if (ext[i] != 0) return static_cast<int>(i);
  engine_check(false, "all Ext against the regular module vanish");
  return -1;
}

// cograde X = least i with Ext^i(D(A), X) != 0, computed over the opposite algebra.
template <typename K>
int cograde(const BQAlgebra& a, const QuiverRep<K>& x) {
  return grade(a.opposite(), dual_rep(x));
}

template <typename K>
std::vector<Integer> k0_class(const BQAlgebra& a, const QuiverRep<K>& x) {
  std::vector<Integer> k(a.vertex_count(), 0);
  if (x.is_zero()) return k;
  Resolution<K> res = minimal_projective_resolution(a, x);
  int sign = 1;
  for (const ProjectiveSum<K>& t : res.terms) {
    for (int v : t.summands) k[v] += sign;
    sign = -sign;
  }
  return k;
}

template <typename K>
RationalMatrix cartan_matrix(const BQAlgebra& a) {
  int n = a.vertex_count();
  std::vector<QuiverRep<K>> projs;
  projs.reserve(n);
  for (int v = 0; v < n; ++v) projs.push_back(projective_rep<K>(a, v));
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = hom_dim(a, projs[i], projs[j]);
  return m;
}

// Computed two ways and cross-asserted: -M^{-1}M^T, and column j = -[nu(P_j)]
// via the resolution of the injective at j.
template <typename K>
RationalMatrix coxeter_matrix(const BQAlgebra& a) {
  int n = a.vertex_count();
  RationalMatrix from_cartan = coxeter_from_cartan(cartan_matrix<K>(a));
  BQAlgebra op = a.opposite();
  RationalMatrix from_classes(n, n);
  for (int j = 0; j < n; ++j) {
    QuiverRep<K> inj = dual_rep(projective_rep<K>(op, j));
    std::vector<Integer> k = k0_class(a, inj);
    for (int i = 0; i < n; ++i) from_classes.at(i, j) = -Rational(k[i]);
  }
  if (!(from_cartan == from_classes))
    raise(Errc::ConventionMismatch,
          "Coxeter routes disagree: -M^{-1}M^T vs Grothendieck classes of injectives");
  return from_cartan;
}

struct AuslanderRegularity {
  bool regular = false;
  // first violation: (coresolution degree i, vertex of the injective summand)
  std::optional<std::pair<int, int>> witness;
  std::vector<std::vector<int>> coresolution_multiplicities;  // [degree][vertex]
  std::vector<int> injective_pdim;                            // per vertex
};

template <typename K>
AuslanderRegularity auslander_regularity(const BQAlgebra& a) {
  BQAlgebra op = a.opposite();
  // injective coresolution of the regular module, as a projective resolution
  // of its dual over the opposite algebra
  Resolution<K> opres =
      minimal_projective_resolution(op, dual_rep(regular_module<K>(a).rep));
  AuslanderRegularity out;
  out.coresolution_multiplicities = opres.multiplicities(a.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v) {
    QuiverRep<K> jv = dual_rep(projective_rep<K>(op, v));
    out.injective_pdim.push_back(pdim(a, jv));
  }
  out.regular = true;
  for (size_t i = 0; i < out.coresolution_multiplicities.size() && out.regular; ++i)
    for (int v = 0; v < a.vertex_count(); ++v)
      if (out.coresolution_multiplicities[i][v] > 0 &&
          out.injective_pdim[v] > static_cast<int>(i)) {
        out.regular = false;
        out.witness = {static_cast<int>(i), v};
        break;
      }
  return out;
}

namespace detail {

// Full generator coordinates of Hom(term, A) -> (opposite vertex, position in
// the matching projective sum over the opposite algebra). Position t within a
// path block corresponds to the reversed path on the opposite side.
template <typename K>
std::vector<std::pair<int, int>> left_module_coord_map(const BQAlgebra& a, const BQAlgebra& op,
                                                       const ProjectiveSum<K>& term,
                                                       const ProjectiveSum<K>& reg,
                                                       const ProjectiveSum<K>& opsum) {
  std::vector<std::pair<int, int>> out;
  for (size_t s = 0; s < term.summands.size(); ++s) {
    int v = term.summands[s];
    for (int u = 0; u < a.vertex_count(); ++u) {
      const std::vector<Path>& paths_u = a.paths_from(u).by_target[v];
      for (size_t t = 0; t < paths_u.size(); ++t) {
        int t_op;
        if (a.relation_class() == RelationClass::incidence_commutativity) {
          t_op = 0;
        } else {
          Path rev(paths_u[t].rbegin(), paths_u[t].rend());
          auto it = op.paths_from(v).index_by_target[u].find(rev);
          engine_check(it != op.paths_from(v).index_by_target[u].end(),
                       "reversed path missing on the opposite side");
          t_op = it->second;
        }
        out.emplace_back(u, opsum.offset[s][u] + t_op);
      }
    }
  }
  (void)reg;
  return out;
}

template <typename K>
RepMorphism<K> regrade_boundary(const BQAlgebra& op, const ProjectiveSum<K>& from,
                                const ProjectiveSum<K>& to,
                                const std::vector<std::pair<int, int>>& from_map,
                                const std::vector<std::pair<int, int>>& to_map,
                                const Matrix<K>& b) {
  RepMorphism<K> delta = zero_morphism(from.rep, to.rep);
  for (int col = 0; col < b.cols(); ++col) {
    auto [ucol, pcol] = from_map[col];
    for (int row = 0; row < b.rows(); ++row) {
      if (b.at(row, col) == K(0)) continue;
      auto [urow, prow] = to_map[row];
      engine_check(urow == ucol, "Ext boundary does not preserve the left grading");
      delta[ucol].at(prow, pcol) = b.at(row, col);
    }
  }
  engine_check(is_valid_morphism(op, from.rep, to.rep, delta),
               "Ext boundary is not a morphism of opposite representations");
  return delta;
}

}  // namespace detail

template <typename K>
struct QuotientRep {
  QuiverRep<K> rep;
  std::vector<Matrix<K>> projection;
};

// Quotient of x by the subrepresentation spanned per-vertex by span's columns
// (which must be arrow-closed).
template <typename K>
QuotientRep<K> quotient_rep(const Quiver& q, const QuiverRep<K>& x,
                            const std::vector<Matrix<K>>& span) {
  int n = q.vertex_count();
  QuotientRep<K> out;
  out.rep.dims.resize(n);
  out.projection.resize(n);
  std::vector<std::vector<int>> keep(n);
  for (int v = 0; v < n; ++v) {
    auto [span_cols, comp] = detail::split_pivots(span[v]);
    int d = x.dims[v];
    int r = static_cast<int>(span_cols.size());
    int qd = static_cast<int>(comp.size());
    engine_check(r + qd == d, "rank split mismatch in quotient");
    Matrix<K> m(d, d);
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < d; ++i) m.at(i, k) = span[v].at(i, span_cols[k]);
    for (int k = 0; k < qd; ++k) m.at(comp[k], r + k) = K(1);
    Matrix<K> minv = inverse(m);
    Matrix<K> proj(qd, d);
    for (int i = 0; i < qd; ++i)
      for (int j = 0; j < d; ++j) proj.at(i, j) = minv.at(r + i, j);
    out.projection[v] = std::move(proj);
    out.rep.dims[v] = qd;
    keep[v] = comp;
  }
  for (int e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    // induced map = proj_tgt . X_e . section_src, the section picking the
    // complement coordinates
    Matrix<K> cols(x.dims[ar.tgt], out.rep.dims[ar.src]);
    for (int k = 0; k < out.rep.dims[ar.src]; ++k)
      for (int i = 0; i < x.dims[ar.tgt]; ++i) cols.at(i, k) = x.arrow_maps[e].at(i, keep[ar.src][k]);
    out.rep.arrow_maps.push_back(out.projection[ar.tgt] * cols);
  }
  return out;
}

// Ext^degree(X, A) as a representation of the opposite quiver (left module),
// for a resolution of X and its hom complex against the regular module.
template <typename K>
QuiverRep<K> ext_left_module(const BQAlgebra& a, const BQAlgebra& op, const Resolution<K>& res,
                             const HomComplex<K>& hc, int degree) {
  int len = static_cast<int>(res.terms.size());
  engine_check(degree >= 0 && degree < len, "Ext degree out of range");
  ProjectiveSum<K> reg = regular_module<K>(a);
  ProjectiveSum<K> c_deg = projective_sum<K>(op, res.terms[degree].summands);
  std::vector<std::pair<int, int>> map_deg =
      detail::left_module_coord_map(a, op, res.terms[degree], reg, c_deg);

  // kernel of the outgoing boundary (everything, at the top degree)
  std::vector<Matrix<K>> ker(op.vertex_count());
  QuiverRep<K> kernel_rep;
  if (degree + 1 < len) {
    ProjectiveSum<K> c_next = projective_sum<K>(op, res.terms[degree + 1].summands);
    std::vector<std::pair<int, int>> map_next =
        detail::left_module_coord_map(a, op, res.terms[degree + 1], reg, c_next);
    RepMorphism<K> delta =
        detail::regrade_boundary(op, c_deg, c_next, map_deg, map_next, hc.boundary[degree]);
    for (int u = 0; u < op.vertex_count(); ++u) ker[u] = kernel_basis(delta[u]);
  } else {
    for (int u = 0; u < op.vertex_count(); ++u)
      ker[u] = Matrix<K>::identity(c_deg.rep.dims[u]);
  }
  kernel_rep.dims.resize(op.vertex_count());
  for (int u = 0; u < op.vertex_count(); ++u) kernel_rep.dims[u] = ker[u].cols();
  for (int e = 0; e < op.quiver().arrow_count(); ++e) {
    const Arrow& ar = op.quiver().arrow(e);
    kernel_rep.arrow_maps.push_back(
        solve(ker[ar.tgt], c_deg.rep.arrow_maps[e] * ker[ar.src]));
  }
  if (degree == 0) return kernel_rep;

  // quotient by the image of the incoming boundary, expressed in kernel coords
  ProjectiveSum<K> c_prev = projective_sum<K>(op, res.terms[degree - 1].summands);
  std::vector<std::pair<int, int>> map_prev =
      detail::left_module_coord_map(a, op, res.terms[degree - 1], reg, c_prev);
  RepMorphism<K> delta_in =
      detail::regrade_boundary(op, c_prev, c_deg, map_prev, map_deg, hc.boundary[degree - 1]);
  std::vector<Matrix<K>> image_in_kernel(op.vertex_count());
  for (int u = 0; u < op.vertex_count(); ++u)
    image_in_kernel[u] = solve(ker[u], delta_in[u]);
  return quotient_rep(op.quiver(), kernel_rep, image_in_kernel).rep;
}

template <typename K>
std::vector<int> socle_dims(const Quiver& q, const QuiverRep<K>& x) {
  std::vector<int> soc(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) {
    int rows = 0;
    for (int e : q.out_arrows(v)) rows += x.dims[q.arrow(e).tgt];
    Matrix<K> stack(rows, x.dims[v]);
    int at = 0;
    for (int e : q.out_arrows(v)) {
      const Matrix<K>& m = x.arrow_maps[e];
      for (int i = 0; i < m.rows(); ++i, ++at)
        for (int j = 0; j < m.cols(); ++j) stack.at(at, j) = m.at(i, j);
    }
    soc[v] = x.dims[v] - rank(stack);
  }
  return soc;
}

struct GradeBijection {
  Permutation perm;            // simple at v -> simple at perm(v)
  std::vector<int> grades;     // grade of S_v
  std::vector<int> cogrades;   // cograde of S_{perm(v)}, equal to grades[v]
};

// Iyama's grade bijection R(S) = top(D Ext^{grade S}(S, A)), realized through
// the socle of the Ext left module.
template <typename K>
GradeBijection grade_bijection(const BQAlgebra& a) {
  AuslanderRegularity reg = auslander_regularity<K>(a);
  if (!reg.regular) raise(Errc::NotAuslanderRegular, "grade bijection needs Auslander regularity");
  BQAlgebra op = a.opposite();
  ProjectiveSum<K> regmod = regular_module<K>(a);
  int n = a.vertex_count();
  std::vector<int> image(n), grades(n);
  for (int v = 0; v < n; ++v) {
    Resolution<K> res = minimal_projective_resolution(a, simple_rep<K>(a, v));
    HomComplex<K> hc = hom_complex(a, res, regmod.rep);
    std::vector<int> ext = hc.ext_dims();
    int g = -1;
    for (size_t i = 0; i < ext.size(); ++i)
      if (ext[i] != 0) {
        g = static_cast<int>(i);
        break;
      }
    engine_check(g >= 0, "simple with all Ext vanishing");
    QuiverRep<K> h = ext_left_module(a, op, res, hc, g);
    std::vector<int> soc = socle_dims(op.quiver(), h);
    int total = 0, where = -1;
    for (int u = 0; u < n; ++u) {
      total += soc[u];
      if (soc[u] > 0) where = u;
    }
    if (total != 1)
      raise(Errc::NonSimpleTop, "top of D Ext^g(S, A) is not simple at vertex " + a.label(v));
    image[v] = where;
    grades[v] = g;
  }
  Permutation perm(image);
  std::vector<int> cogrades(n);
  for (int v = 0; v < n; ++v) {
    cogrades[v] = grade(op, simple_rep<K>(op, image[v]));
    engine_check(cogrades[v] == grades[v], "grade(S) != cograde(R(S))");
  }
  return GradeBijection{std::move(perm), std::move(grades), std::move(cogrades)};
}

struct RowmotionCoxeterReport {
  RationalMatrix rowmotion_coxeter;  // R^{-1} C
  IntPolynomial minimal_poly;
  bool order_two;
};

RowmotionCoxeterReport rowmotion_coxeter_report(const RationalMatrix& coxeter,
                                                const Permutation& r);

}  // namespace coxrow
