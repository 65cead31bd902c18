#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxrow/matrix.hpp"
#include "coxrow/poset.hpp"

namespace coxrow {

struct Arrow {
  int src, tgt;
};

// Finite acyclic quiver with a fixed vertex order and arrow order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int e) const { return arrows_[e]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  const std::vector<int>& topo_order() const { return topo_; }

  // Arrow ids are preserved; arrow e of the opposite quiver is e reversed.
  Quiver opposite() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> topo_;
};

using Path = std::vector<int>;  // arrow ids in traversal order

// All paths out of one source vertex, grouped by target. The trivial path sits
// at index 0 of its own vertex. For incidence algebras a single canonical
// representative per target stands for the whole parallel-path class.
struct VertexPaths {
  std::vector<std::vector<Path>> by_target;
  std::vector<std::map<Path, int>> index_by_target;
  int dim(int w) const { return static_cast<int>(by_target[w].size()); }
};

enum class RelationClass { incidence_commutativity, none };

class BQAlgebra {
 public:
  static BQAlgebra incidence(const Poset& poset);
  static BQAlgebra path_algebra(Quiver quiver);

  const Quiver& quiver() const { return quiver_; }
  RelationClass relation_class() const { return rel_; }
  int vertex_count() const { return quiver_.vertex_count(); }
  const std::string& label(int v) const { return quiver_.label(v); }
  const Poset& poset() const {
    engine_check(poset_.has_value(), "poset requested from a non-incidence algebra");
    return *poset_;
  }

  const VertexPaths& paths_from(int v) const { return paths_[v]; }
  BQAlgebra opposite() const;

 private:
  BQAlgebra(Quiver quiver, RelationClass rel, std::optional<Poset> poset);
  void enumerate_paths();

  Quiver quiver_;
  RelationClass rel_;
  std::optional<Poset> poset_;
  std::vector<VertexPaths> paths_;
};

// Representation: one space per vertex, one matrix per arrow (target-dim x
// source-dim, acting on column vectors).
template <typename K>
struct QuiverRep {
  std::vector<int> dims;
  std::vector<Matrix<K>> arrow_maps;

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
};

// Morphism of representations: one matrix per vertex.
template <typename K>
using RepMorphism = std::vector<Matrix<K>>;

template <typename K>
QuiverRep<K> zero_rep(const BQAlgebra& a) {
  QuiverRep<K> r;
  r.dims.assign(a.vertex_count(), 0);
  for (int e = 0; e < a.quiver().arrow_count(); ++e) r.arrow_maps.emplace_back(0, 0);
  return r;
}

template <typename K>
QuiverRep<K> simple_rep(const BQAlgebra& a, int v) {
  if (v < 0 || v >= a.vertex_count()) raise(Errc::UnknownVertex, "simple at unknown vertex");
  QuiverRep<K> r = zero_rep<K>(a);
  r.dims[v] = 1;
  for (int e = 0; e < a.quiver().arrow_count(); ++e) {
    const Arrow& ar = a.quiver().arrow(e);
    r.arrow_maps[e] = Matrix<K>(r.dims[ar.tgt], r.dims[ar.src]);
  }
  return r;
}

template <typename K>
QuiverRep<K> projective_rep(const BQAlgebra& a, int v) {
  if (v < 0 || v >= a.vertex_count()) raise(Errc::UnknownVertex, "projective at unknown vertex");
  const VertexPaths& paths = a.paths_from(v);
  QuiverRep<K> r;
  r.dims.resize(a.vertex_count());
  for (int w = 0; w < a.vertex_count(); ++w) r.dims[w] = paths.dim(w);
  for (int e = 0; e < a.quiver().arrow_count(); ++e) {
    const Arrow& ar = a.quiver().arrow(e);
    Matrix<K> m(r.dims[ar.tgt], r.dims[ar.src]);
    for (int t = 0; t < r.dims[ar.src]; ++t) {
      Path extended = paths.by_target[ar.src][t];
      extended.push_back(e);
      if (a.relation_class() == RelationClass::incidence_commutativity) {
        m.at(0, t) = K(1);  // the single parallel-path class at the target
      } else {
        auto it = paths.index_by_target[ar.tgt].find(extended);
        engine_check(it != paths.index_by_target[ar.tgt].end(), "extended path not enumerated");
        m.at(it->second, t) = K(1);
      }
    }
    r.arrow_maps.push_back(std::move(m));
  }
  return r;
}

// D(X): representation of the opposite quiver, spaces dualized, maps transposed.
template <typename K>
QuiverRep<K> dual_rep(const QuiverRep<K>& x) {
  QuiverRep<K> r;
  r.dims = x.dims;
  for (const Matrix<K>& m : x.arrow_maps) r.arrow_maps.push_back(m.transpose());
  return r;
}

template <typename K>
QuiverRep<K> injective_rep(const BQAlgebra& a, int v) {
  return dual_rep(projective_rep<K>(a.opposite(), v));
}

// Apply the arrow maps of y along a path to a column block.
template <typename K>
Matrix<K> path_apply(const QuiverRep<K>& y, const Path& p, Matrix<K> cols) {
  for (int e : p) cols = y.arrow_maps[e] * cols;
  return cols;
}

template <typename K>
bool validate_rep(const BQAlgebra& a, const QuiverRep<K>& x) {
  const Quiver& q = a.quiver();
  if (static_cast<int>(x.dims.size()) != q.vertex_count() ||
      static_cast<int>(x.arrow_maps.size()) != q.arrow_count())
    return false;
  for (int e = 0; e < q.arrow_count(); ++e)
    if (x.arrow_maps[e].rows() != x.dims[q.arrow(e).tgt] ||
        x.arrow_maps[e].cols() != x.dims[q.arrow(e).src])
      return false;
  if (a.relation_class() != RelationClass::incidence_commutativity) return true;
  // parallel composites must agree vertex-to-vertex
  for (int u = 0; u < q.vertex_count(); ++u) {
    std::vector<std::optional<Matrix<K>>> composite(q.vertex_count());
    composite[u] = Matrix<K>::identity(x.dims[u]);
    for (int w : q.topo_order()) {
      if (!composite[w].has_value()) continue;
      for (int e : q.out_arrows(w)) {
        Matrix<K> cand = x.arrow_maps[e] * *composite[w];
        int b = q.arrow(e).tgt;
        if (!composite[b].has_value())
          composite[b] = std::move(cand);
        else if (!(*composite[b] == cand))
          return false;
      }
    }
  }
  return true;
}

template <typename K>
QuiverRep<K> direct_sum(const QuiverRep<K>& x, const QuiverRep<K>& y) {
  QuiverRep<K> r;
  r.dims.resize(x.dims.size());
  for (size_t w = 0; w < x.dims.size(); ++w) r.dims[w] = x.dims[w] + y.dims[w];
  for (size_t e = 0; e < x.arrow_maps.size(); ++e) {
    const Matrix<K>& mx = x.arrow_maps[e];
    const Matrix<K>& my = y.arrow_maps[e];
    Matrix<K> m(mx.rows() + my.rows(), mx.cols() + my.cols());
    for (int i = 0; i < mx.rows(); ++i)
      for (int j = 0; j < mx.cols(); ++j) m.at(i, j) = mx.at(i, j);
    for (int i = 0; i < my.rows(); ++i)
      for (int j = 0; j < my.cols(); ++j) m.at(mx.rows() + i, mx.cols() + j) = my.at(i, j);
    r.arrow_maps.push_back(std::move(m));
  }
  return r;
}

// Hom_A(X, Y): solution space of the per-arrow commuting conditions.
template <typename K>
Matrix<K> hom_constraint_matrix(const BQAlgebra& a, const QuiverRep<K>& x,
                                const QuiverRep<K>& y) {
  const Quiver& q = a.quiver();
  int nvert = q.vertex_count();
  std::vector<int> offset(nvert + 1, 0);
  for (int v = 0; v < nvert; ++v) offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
  int unknowns = offset[nvert];
  int rows = 0;
  for (int e = 0; e < q.arrow_count(); ++e)
    rows += x.dims[q.arrow(e).src] * y.dims[q.arrow(e).tgt];
  Matrix<K> c(rows, unknowns);
  int r = 0;
  for (int e = 0; e < q.arrow_count(); ++e) {
    const Arrow& ar = q.arrow(e);
    const Matrix<K>& xe = x.arrow_maps[e];
    const Matrix<K>& ye = y.arrow_maps[e];
    // equation f_tgt X_e - Y_e f_src = 0, entry (i over Y_tgt, j over X_src)
    for (int i = 0; i < y.dims[ar.tgt]; ++i)
      for (int j = 0; j < x.dims[ar.src]; ++j) {
        for (int k = 0; k < x.dims[ar.tgt]; ++k)
          c.at(r, offset[ar.tgt] + i * x.dims[ar.tgt] + k) = xe.at(k, j);
        for (int k = 0; k < y.dims[ar.src]; ++k)
          c.at(r, offset[ar.src] + k * x.dims[ar.src] + j) =
              c.at(r, offset[ar.src] + k * x.dims[ar.src] + j) - ye.at(i, k);
        ++r;
      }
  }
  return c;
}

template <typename K>
int hom_dim(const BQAlgebra& a, const QuiverRep<K>& x, const QuiverRep<K>& y) {
  if (x.dims.size() != y.dims.size()) raise(Errc::AlgebraMismatch, "hom between different algebras");
  int unknowns = 0;
  for (size_t v = 0; v < x.dims.size(); ++v) unknowns += x.dims[v] * y.dims[v];
  return unknowns - rank(hom_constraint_matrix(a, x, y));
}

template <typename K>
std::vector<RepMorphism<K>> hom_space(const BQAlgebra& a, const QuiverRep<K>& x,
                                      const QuiverRep<K>& y) {
  if (x.dims.size() != y.dims.size()) raise(Errc::AlgebraMismatch, "hom between different algebras");
  int nvert = a.vertex_count();
  std::vector<int> offset(nvert + 1, 0);
  for (int v = 0; v < nvert; ++v) offset[v + 1] = offset[v] + x.dims[v] * y.dims[v];
  Matrix<K> ker = kernel_basis(hom_constraint_matrix(a, x, y));
  std::vector<RepMorphism<K>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    RepMorphism<K> f;
    for (int v = 0; v < nvert; ++v) {
      Matrix<K> m(y.dims[v], x.dims[v]);
      for (int i = 0; i < y.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j) m.at(i, j) = ker.at(offset[v] + i * x.dims[v] + j, b);
      f.push_back(std::move(m));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

// Finite direct sum of indecomposable projectives with block bookkeeping.
template <typename K>
struct ProjectiveSum {
  QuiverRep<K> rep;
  std::vector<int> summands;             // vertex of each block, in order
  std::vector<std::vector<int>> offset;  // [s][w] -> column offset of block s at w

  std::vector<int> multiplicities(int nvert) const {
    std::vector<int> m(nvert, 0);
    for (int v : summands) ++m[v];
    return m;
  }
};

template <typename K>
ProjectiveSum<K> projective_sum(const BQAlgebra& a, std::vector<int> vertices) {
  ProjectiveSum<K> s;
  int nvert = a.vertex_count();
  s.summands = std::move(vertices);
  s.rep.dims.assign(nvert, 0);
  s.offset.assign(s.summands.size(), std::vector<int>(nvert, 0));
  for (size_t k = 0; k < s.summands.size(); ++k) {
    const VertexPaths& paths = a.paths_from(s.summands[k]);
    for (int w = 0; w < nvert; ++w) {
      s.offset[k][w] = s.rep.dims[w];
      s.rep.dims[w] += paths.dim(w);
    }
  }
  std::vector<QuiverRep<K>> blocks;
  blocks.reserve(s.summands.size());
  for (int v : s.summands) blocks.push_back(projective_rep<K>(a, v));
  for (int e = 0; e < a.quiver().arrow_count(); ++e) {
    const Arrow& ar = a.quiver().arrow(e);
    Matrix<K> m(s.rep.dims[ar.tgt], s.rep.dims[ar.src]);
    for (size_t k = 0; k < s.summands.size(); ++k) {
      const Matrix<K>& bm = blocks[k].arrow_maps[e];
      for (int i = 0; i < bm.rows(); ++i)
        for (int j = 0; j < bm.cols(); ++j)
          m.at(s.offset[k][ar.tgt] + i, s.offset[k][ar.src] + j) = bm.at(i, j);
    }
    s.rep.arrow_maps.push_back(std::move(m));
  }
  return s;
}

// Morphism P_{v_s} -> Y determined by the generator image x (a column over
// Y_{v_s}); written into the block columns of an existing morphism.
template <typename K>
void add_summand_morphism(const BQAlgebra& a, const ProjectiveSum<K>& dom, int s,
                          const QuiverRep<K>& y, const Matrix<K>& x, RepMorphism<K>& out) {
  int v = dom.summands[s];
  const VertexPaths& paths = a.paths_from(v);
  for (int w = 0; w < a.vertex_count(); ++w) {
    for (int t = 0; t < paths.dim(w); ++t) {
      Matrix<K> col = path_apply(y, paths.by_target[w][t], x);
      for (int i = 0; i < y.dims[w]; ++i) out[w].at(i, dom.offset[s][w] + t) = col.at(i, 0);
    }
  }
}

template <typename K>
RepMorphism<K> zero_morphism(const QuiverRep<K>& from, const QuiverRep<K>& to) {
  RepMorphism<K> f;
  for (size_t v = 0; v < from.dims.size(); ++v) f.emplace_back(to.dims[v], from.dims[v]);
  return f;
}

// Coordinates of a morphism out of a projective sum: its generator images,
// stacked block by block.
template <typename K>
Matrix<K> generator_coordinates(const ProjectiveSum<K>& dom, const QuiverRep<K>& y,
                                const RepMorphism<K>& f) {
  int total = 0;
  for (int v : dom.summands) total += y.dims[v];
  Matrix<K> coords(total, 1);
  int at = 0;
  for (size_t s = 0; s < dom.summands.size(); ++s) {
    int v = dom.summands[s];
    int gen = dom.offset[s][v];  // trivial path is index 0 of its block
    for (int i = 0; i < y.dims[v]; ++i) coords.at(at++, 0) = f[v].at(i, gen);
  }
  return coords;
}

template <typename K>
bool is_valid_morphism(const BQAlgebra& a, const QuiverRep<K>& x, const QuiverRep<K>& y,
                       const RepMorphism<K>& f) {
  for (int e = 0; e < a.quiver().arrow_count(); ++e) {
    const Arrow& ar = a.quiver().arrow(e);
    if (!(f[ar.tgt] * x.arrow_maps[e] == y.arrow_maps[e] * f[ar.src])) return false;
  }
  return true;
}

}  // namespace coxrow
