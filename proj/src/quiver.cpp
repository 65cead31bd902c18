#include "coxrow/quiver.hpp"

#include <algorithm>
#include <deque>

namespace coxrow {

Quiver::Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows)
    : labels_(std::move(labels)), arrows_(std::move(arrows)) {
  int n = vertex_count();
  out_.assign(n, {});
  in_.assign(n, {});
  std::vector<int> indeg(n, 0);
  for (int e = 0; e < arrow_count(); ++e) {
    const Arrow& a = arrows_[e];
    engine_check(a.src >= 0 && a.src < n && a.tgt >= 0 && a.tgt < n, "arrow endpoint out of range");
    out_[a.src].push_back(e);
    in_[a.tgt].push_back(e);
    ++indeg[a.tgt];
  }
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    topo_.push_back(v);
    for (int e : out_[v])
      if (--indeg[arrows_[e].tgt] == 0) ready.push_back(arrows_[e].tgt);
  }
  if (static_cast<int>(topo_.size()) != n) raise(Errc::CycleDetected, "quiver has an oriented cycle");
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const Arrow& a : arrows_) rev.push_back(Arrow{a.tgt, a.src});
  return Quiver(labels_, std::move(rev));
}

BQAlgebra::BQAlgebra(Quiver quiver, RelationClass rel, std::optional<Poset> poset)
    : quiver_(std::move(quiver)), rel_(rel), poset_(std::move(poset)) {
  enumerate_paths();
}

BQAlgebra BQAlgebra::incidence(const Poset& poset) {
  // Hasse quiver: one arrow a -> b per cover pair "a covers b".
  std::vector<Arrow> arrows;
  for (const auto& [a, b] : poset.covers()) arrows.push_back(Arrow{a, b});
  return BQAlgebra(Quiver(poset.labels(), std::move(arrows)),
                   RelationClass::incidence_commutativity, poset);
}

BQAlgebra BQAlgebra::path_algebra(Quiver quiver) {
  return BQAlgebra(std::move(quiver), RelationClass::none, std::nullopt);
}

BQAlgebra BQAlgebra::opposite() const {
  std::optional<Poset> op_poset;
  if (poset_) op_poset = poset_->opposite();
  return BQAlgebra(quiver_.opposite(), rel_, std::move(op_poset));
}

void BQAlgebra::enumerate_paths() {
  int n = quiver_.vertex_count();
  paths_.assign(n, VertexPaths{});
  for (int v = 0; v < n; ++v) {
    VertexPaths& vp = paths_[v];
    vp.by_target.assign(n, {});
    vp.index_by_target.assign(n, {});
    vp.by_target[v].push_back(Path{});
    vp.index_by_target[v].emplace(Path{}, 0);
    for (int b : quiver_.topo_order()) {
      for (int e : quiver_.in_arrows(b)) {
        int src = quiver_.arrow(e).src;
        for (const Path& p : vp.by_target[src]) {
          if (rel_ == RelationClass::incidence_commutativity && !vp.by_target[b].empty())
            break;  // one canonical representative per parallel-path class
          Path ext = p;
          ext.push_back(e);
          int idx = static_cast<int>(vp.by_target[b].size());
          vp.index_by_target[b].emplace(ext, idx);
          vp.by_target[b].push_back(std::move(ext));
        }
      }
    }
  }
}

}  // namespace coxrow
