#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxrow/bitset.hpp"
#include "coxrow/matrix.hpp"
#include "coxrow/permutation.hpp"

namespace coxrow {

struct Antichain {
  Bitset members;
};

struct OrderIdeal {
  Bitset members;
};

// Finite poset over a fixed label sequence. The full order relation is stored;
// covers are kept as the canonical input presentation.
class Poset {
 public:
  Poset() = default;  // the empty poset

  // cover pair (a, b) reads "a covers b". Pairs implied by others are rejected.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& covers);
  // below[i] = { j : j <= i }; poset axioms are validated.
  static Poset from_leq(std::vector<std::string> labels, std::vector<Bitset> below);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;

  bool leq(int i, int j) const { return below_[j].test(i); }
  const Bitset& down_set(int i) const { return below_[i]; }
  const Bitset& up_set(int i) const { return above_[i]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool is_antichain(const Bitset& s) const;
  bool is_order_ideal(const Bitset& s) const;
  Bitset down_closure(const Bitset& s) const;
  Bitset up_closure(const Bitset& s) const;
  Bitset maximal_members(const Bitset& s) const;
  Bitset minimal_members(const Bitset& s) const;

  Bitset empty_subset() const { return Bitset(size()); }
  Bitset full_subset() const { return Bitset(size()).complement(); }
  std::string subset_label(const Bitset& s) const;  // "{a,b}" in element order

  Poset opposite() const;

 private:
  void derive_covers();

  std::vector<std::string> labels_;
  std::vector<Bitset> below_, above_;
  std::vector<std::pair<int, int>> covers_;
};

// The distributive lattice J(P) with its pinned element order:
// ideals sorted by (cardinality, lex on the fixed element order).
class IdealLattice {
 public:
  IdealLattice(Poset parent, std::vector<Bitset> ideals);

  const Poset& parent() const { return parent_; }
  int size() const { return static_cast<int>(ideals_.size()); }
  const Bitset& ideal(int i) const { return ideals_[i]; }
  int index_of(const Bitset& s) const;
  bool leq(int i, int j) const { return ideals_[i].is_subset_of(ideals_[j]); }
  int join(int i, int j) const { return index_of(ideals_[i] | ideals_[j]); }
  int meet(int i, int j) const { return index_of(ideals_[i] & ideals_[j]); }
  std::string label(int i) const { return parent_.subset_label(ideals_[i]); }
  Poset as_poset() const;

 private:
  Poset parent_;
  std::vector<Bitset> ideals_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
};

inline constexpr uint64_t kDefaultIdealCap = uint64_t(1) << 20;

IdealLattice order_ideals(const Poset& p, uint64_t ideal_cap = kDefaultIdealCap);

Antichain max_antichain(const Poset& p, const OrderIdeal& ideal);
OrderIdeal ideal_of_antichain(const Poset& p, const Antichain& s);
// M(S): complement of the upward closure of S.
OrderIdeal complement_ideal(const Poset& p, const Antichain& s);
OrderIdeal rowmotion(const Poset& p, const OrderIdeal& ideal);
Permutation rowmotion_matrix(const IdealLattice& lattice);

struct LatticeFlags {
  bool is_lattice;
  bool is_distributive;
};
LatticeFlags lattice_tests(const Poset& q);

struct JoinIrreducibles {
  Poset subposet;               // induced order on the join-irreducibles
  std::vector<int> elements;    // their indices in the input lattice
  std::vector<Bitset> ideal_of; // lattice element -> join-irreducibles below it
};
JoinIrreducibles join_irreducibles(const Poset& lattice);

std::pair<RationalMatrix, RationalMatrix> zeta_and_mobius(const IdealLattice& lattice);
RationalMatrix zeta_matrix(const Poset& p);

}  // namespace coxrow
