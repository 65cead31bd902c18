#include "coxrow/poset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace coxrow {

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  raise(Errc::UnknownVertex, "no element labelled '" + label + "'");
}

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.labels_ = std::move(labels);
  int n = p.size();
  {
    std::unordered_set<std::string> seen;
    for (const std::string& l : p.labels_)
      if (!seen.insert(l).second) raise(Errc::DuplicateLabel, "label '" + l + "' repeated");
  }

  std::vector<std::pair<int, int>> edges;  // (a, b): a covers b
  for (const auto& [a, b] : covers) edges.emplace_back(p.index_of(a), p.index_of(b));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Topological pass over "covered before coverer"; below_[a] accumulates the
  // reflexive-transitive closure.
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> coverers(n);  // b -> list of a with a covers b
  for (const auto& [a, b] : edges) {
    coverers[b].push_back(a);
    ++indeg[a];
  }
  p.below_.assign(n, Bitset(n));
  std::deque<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  int done = 0;
  std::vector<int> order;
  while (!ready.empty()) {
    int b = ready.front();
    ready.pop_front();
    order.push_back(b);
    ++done;
    for (int a : coverers[b])
      if (--indeg[a] == 0) ready.push_back(a);
  }
  if (done != n) raise(Errc::CycleDetected, "cover pairs contain a cycle");
  std::vector<std::vector<int>> covered_by(n);  // a -> list of b with a covers b
  for (const auto& [a, b] : edges) covered_by[a].push_back(b);
  for (int v : order) {
    p.below_[v].set(v);
    for (int b : covered_by[v]) p.below_[v] = p.below_[v] | p.below_[b];
  }

  p.above_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.below_[j].test(i)) p.above_[i].set(j);

  for (const auto& [a, b] : edges) {
    Bitset between = p.below_[a] & p.above_[b];
    if (between.count() != 2)
      raise(Errc::NonCoverEdge, "pair (" + p.labels_[a] + ", " + p.labels_[b] +
                                     ") is not a cover relation");
  }
  p.covers_ = std::move(edges);
  return p;
}

Poset Poset::from_leq(std::vector<std::string> labels, std::vector<Bitset> below) {
  Poset p;
  p.labels_ = std::move(labels);
  p.below_ = std::move(below);
  int n = p.size();
  {
    std::unordered_set<std::string> seen;
    for (const std::string& l : p.labels_)
      if (!seen.insert(l).second) raise(Errc::DuplicateLabel, "label '" + l + "' repeated");
  }
  engine_check(static_cast<int>(p.below_.size()) == n, "leq table size mismatch");
  for (int i = 0; i < n; ++i) {
    if (!p.below_[i].test(i)) raise(Errc::ParseError, "relation not reflexive");
    for (int j : p.below_[i].members()) {
      if (j != i && p.below_[j].test(i)) raise(Errc::CycleDetected, "relation not antisymmetric");
      if (!p.below_[j].is_subset_of(p.below_[i]))
        raise(Errc::ParseError, "relation not transitive");
    }
  }
  p.above_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.below_[j].test(i)) p.above_[i].set(j);
  p.derive_covers();
  return p;
}

void Poset::derive_covers() {
  covers_.clear();
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(b, a)) continue;
      if ((below_[a] & above_[b]).count() == 2) covers_.emplace_back(a, b);
    }
  std::sort(covers_.begin(), covers_.end());
}

bool Poset::is_antichain(const Bitset& s) const {
  for (int i : s.members())
    if ((above_[i] & s).count() != 1) return false;
  return true;
}

bool Poset::is_order_ideal(const Bitset& s) const {
  for (int i : s.members())
    if (!below_[i].is_subset_of(s)) return false;
  return true;
}

Bitset Poset::down_closure(const Bitset& s) const {
  Bitset r(size());
  for (int i : s.members()) r = r | below_[i];
  return r;
}

Bitset Poset::up_closure(const Bitset& s) const {
  Bitset r(size());
  for (int i : s.members()) r = r | above_[i];
  return r;
}

Bitset Poset::maximal_members(const Bitset& s) const {
  Bitset r(size());
  for (int i : s.members())
    if ((above_[i] & s).count() == 1) r.set(i);
  return r;
}

Bitset Poset::minimal_members(const Bitset& s) const {
  Bitset r(size());
  for (int i : s.members())
    if ((below_[i] & s).count() == 1) r.set(i);
  return r;
}

std::string Poset::subset_label(const Bitset& s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += labels_[i];
    first = false;
  }
  return out + "}";
}

Poset Poset::opposite() const {
  Poset p;
  p.labels_ = labels_;
  p.below_ = above_;
  p.above_ = below_;
  for (const auto& [a, b] : covers_) p.covers_.emplace_back(b, a);
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

IdealLattice::IdealLattice(Poset parent, std::vector<Bitset> ideals)
    : parent_(std::move(parent)), ideals_(std::move(ideals)) {
  for (int i = 0; i < size(); ++i) index_.emplace(ideals_[i], i);
}

int IdealLattice::index_of(const Bitset& s) const {
  auto it = index_.find(s);
  engine_check(it != index_.end(), "subset is not an ideal of the lattice");
  return it->second;
}

Poset IdealLattice::as_poset() const {
  std::vector<std::string> labels;
  labels.reserve(size());
  for (int i = 0; i < size(); ++i) labels.push_back(label(i));
  std::vector<Bitset> below(size(), Bitset(size()));
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < size(); ++i)
      if (leq(i, j)) below[j].set(i);
  return Poset::from_leq(std::move(labels), std::move(below));
}

IdealLattice order_ideals(const Poset& p, uint64_t ideal_cap) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::deque<Bitset> work;
  Bitset empty = p.empty_subset();
  seen.insert(empty);
  work.push_back(empty);
  while (!work.empty()) {
    Bitset ideal = work.front();
    work.pop_front();
    for (int x = 0; x < p.size(); ++x) {
      if (ideal.test(x)) continue;
      Bitset strictly_below = p.down_set(x);
      strictly_below.reset(x);
      if (!strictly_below.is_subset_of(ideal)) continue;
      Bitset grown = ideal;
      grown.set(x);
      if (seen.insert(grown).second) {
        if (seen.size() > ideal_cap)
          raise(Errc::SizeLimitExceeded,
                "ideal count exceeds cap " + std::to_string(ideal_cap));
        work.push_back(grown);
      }
    }
  }
  std::vector<Bitset> ideals(seen.begin(), seen.end());
  std::sort(ideals.begin(), ideals.end(), Bitset::card_lex_less);
  return IdealLattice(p, std::move(ideals));
}

Antichain max_antichain(const Poset& p, const OrderIdeal& ideal) {
  if (!p.is_order_ideal(ideal.members))
    raise(Errc::MalformedData, "subset is not downward closed");
  return Antichain{p.maximal_members(ideal.members)};
}

OrderIdeal ideal_of_antichain(const Poset& p, const Antichain& s) {
  if (!p.is_antichain(s.members)) raise(Errc::NotAnAntichain, "members are comparable");
  return OrderIdeal{p.down_closure(s.members)};
}

OrderIdeal complement_ideal(const Poset& p, const Antichain& s) {
  if (!p.is_antichain(s.members)) raise(Errc::NotAnAntichain, "members are comparable");
  Bitset result = p.up_closure(s.members).complement();
  engine_check(p.minimal_members(result.complement()) == s.members,
               "minimal non-elements of M(S) differ from S");
  return OrderIdeal{result};
}

OrderIdeal rowmotion(const Poset& p, const OrderIdeal& ideal) {
  return complement_ideal(p, max_antichain(p, ideal));
}

Permutation rowmotion_matrix(const IdealLattice& lattice) {
  std::vector<int> image(lattice.size());
  for (int j = 0; j < lattice.size(); ++j)
    image[j] = lattice.index_of(rowmotion(lattice.parent(), OrderIdeal{lattice.ideal(j)}).members);
  return Permutation(std::move(image));
}

namespace {

struct LatticeOps {
  bool is_lattice = false;
  std::vector<int> join, meet;  // n*n tables, -1 where undefined
  int n = 0;
  int join_of(int i, int j) const { return join[size_t(i) * n + j]; }
  int meet_of(int i, int j) const { return meet[size_t(i) * n + j]; }
};

LatticeOps compute_lattice_ops(const Poset& q) {
  LatticeOps ops;
  int n = q.size();
  ops.n = n;
  ops.join.assign(size_t(n) * n, -1);
  ops.meet.assign(size_t(n) * n, -1);
  ops.is_lattice = n > 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Bitset upper = q.up_set(i) & q.up_set(j);
      Bitset lub = q.minimal_members(upper);
      int join = lub.count() == 1 ? lub.members()[0] : -1;
      Bitset lower = q.down_set(i) & q.down_set(j);
      Bitset glb = q.maximal_members(lower);
      int meet = glb.count() == 1 ? glb.members()[0] : -1;
      ops.join[size_t(i) * n + j] = ops.join[size_t(j) * n + i] = join;
      ops.meet[size_t(i) * n + j] = ops.meet[size_t(j) * n + i] = meet;
      if (join < 0 || meet < 0) ops.is_lattice = false;
    }
  return ops;
}

bool check_distributive(const LatticeOps& ops) {
  if (!ops.is_lattice) return false;
  int n = ops.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ops.meet_of(a, ops.join_of(b, c)) !=
            ops.join_of(ops.meet_of(a, b), ops.meet_of(a, c)))
          return false;
  return true;
}

}  // namespace

LatticeFlags lattice_tests(const Poset& q) {
  LatticeOps ops = compute_lattice_ops(q);
  return LatticeFlags{ops.is_lattice, check_distributive(ops)};
}

JoinIrreducibles join_irreducibles(const Poset& lattice) {
  LatticeOps ops = compute_lattice_ops(lattice);
  if (!check_distributive(ops)) raise(Errc::NotDistributive, "input is not a distributive lattice");
  std::vector<int> lower_cover_count(lattice.size(), 0);
  for (const auto& [a, b] : lattice.covers()) {
    (void)b;
    ++lower_cover_count[a];
  }
  JoinIrreducibles out;
  for (int x = 0; x < lattice.size(); ++x)
    if (lower_cover_count[x] == 1) out.elements.push_back(x);
  int m = static_cast<int>(out.elements.size());
  std::vector<std::string> labels;
  for (int x : out.elements) labels.push_back(lattice.label(x));
  std::vector<Bitset> below(m, Bitset(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (lattice.leq(out.elements[i], out.elements[j])) below[j].set(i);
  out.subposet = Poset::from_leq(std::move(labels), std::move(below));
  for (int x = 0; x < lattice.size(); ++x) {
    Bitset s(m);
    for (int i = 0; i < m; ++i)
      if (lattice.leq(out.elements[i], x)) s.set(i);
    out.ideal_of.push_back(s);
  }
  return out;
}

std::pair<RationalMatrix, RationalMatrix> zeta_and_mobius(const IdealLattice& lattice) {
  RationalMatrix zeta(lattice.size(), lattice.size());
  for (int i = 0; i < lattice.size(); ++i)
    for (int j = 0; j < lattice.size(); ++j)
      if (lattice.leq(i, j)) zeta.at(i, j) = 1;
  return {zeta, inverse(zeta)};
}

RationalMatrix zeta_matrix(const Poset& p) {
  RationalMatrix zeta(p.size(), p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) zeta.at(i, j) = 1;
  return zeta;
}

}  // namespace coxrow
