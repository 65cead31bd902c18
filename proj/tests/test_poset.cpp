#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "coxrow/poset.hpp"

using namespace coxrow;

namespace {

Poset antichain3() { return Poset::from_covers({"x1", "x2", "x3"}, {}); }

Poset chain2() { return Poset::from_covers({"x1", "x2"}, {{"x2", "x1"}}); }

Poset example6() {
  return Poset::from_covers({"1", "2", "3", "4", "5", "6"},
                            {{"1", "2"},
                             {"1", "3"},
                             {"2", "4"},
                             {"2", "5"},
                             {"3", "4"},
                             {"3", "5"},
                             {"4", "6"},
                             {"5", "6"}});
}

Poset diamond_m3() {
  return Poset::from_covers({"bot", "a", "b", "c", "top"},
                            {{"a", "bot"},
                             {"b", "bot"},
                             {"c", "bot"},
                             {"top", "a"},
                             {"top", "b"},
                             {"top", "c"}});
}

Bitset subset(const Poset& p, const std::vector<std::string>& labels) {
  Bitset s(p.size());
  for (const std::string& l : labels) s.set(p.index_of(l));
  return s;
}

// Brute-force oracle: all downward-closed subsets by filtering the power set.
std::vector<Bitset> ideals_bruteforce(const Poset& p) {
  std::vector<Bitset> out;
  int n = p.size();
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    Bitset s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    if (p.is_order_ideal(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), Bitset::card_lex_less);
  return out;
}

// All labeled posets on n elements (n small), by filtering strict relations.
std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
    std::vector<Bitset> below(n, Bitset(n));
    for (int i = 0; i < n; ++i) below[i].set(i);
    for (size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) below[pairs[k].second].set(pairs[k].first);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && below[i].test(j) && below[j].test(i)) ok = false;  // antisymmetry
        if (below[i].test(j) && !below[i].is_subset_of(below[i]))
          ok = false;
      }
    // transitivity
    for (int j = 0; j < n && ok; ++j)
      for (int i : below[j].members())
        if (!below[i].is_subset_of(below[j])) {
          ok = false;
          break;
        }
    if (!ok) continue;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    out.push_back(Poset::from_leq(std::move(labels), std::move(below)));
  }
  return out;
}

}  // namespace

TEST_CASE("build_poset validates input") {
  Poset p = example6();
  CHECK(p.size() == 6);
  CHECK(p.leq(p.index_of("6"), p.index_of("1")));
  CHECK(p.leq(p.index_of("4"), p.index_of("2")));
  CHECK(!p.leq(p.index_of("4"), p.index_of("5")));
  CHECK(p.covers().size() == 8);

  CHECK_THROWS_AS(Poset::from_covers({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  // (c,a) is implied by (c,b),(b,a): not a genuine cover
  CHECK_THROWS_AS(
      Poset::from_covers({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}, {"c", "a"}}), Error);
  CHECK_THROWS_AS(Poset::from_covers({"a"}, {{"a", "z"}}), Error);
}

TEST_CASE("order_ideals enumerates J(P) in (cardinality, lex) order") {
  IdealLattice l = order_ideals(antichain3());
  CHECK(l.size() == 8);
  std::vector<std::string> got;
  for (int i = 0; i < l.size(); ++i) got.push_back(l.label(i));
  std::vector<std::string> want = {"{}",      "{x1}",    "{x2}",    "{x3}",
                                   "{x1,x2}", "{x1,x3}", "{x2,x3}", "{x1,x2,x3}"};
  CHECK(got == want);

  CHECK(order_ideals(Poset()).size() == 1);

  IdealLattice chain = order_ideals(chain2());
  CHECK(chain.size() == 3);
  CHECK(chain.label(0) == "{}");
  CHECK(chain.label(1) == "{x1}");
  CHECK(chain.label(2) == "{x1,x2}");

  CHECK_THROWS_AS((void)order_ideals(antichain3(), 4), Error);  // cap
}

TEST_CASE("order_ideals matches the brute-force oracle") {
  for (int n = 0; n <= 3; ++n)
    for (const Poset& p : all_posets(n)) {
      IdealLattice l = order_ideals(p);
      std::vector<Bitset> expect = ideals_bruteforce(p);
      REQUIRE(l.size() == static_cast<int>(expect.size()));
      for (int i = 0; i < l.size(); ++i) CHECK(l.ideal(i) == expect[i]);
    }
  CHECK(order_ideals(example6()).size() ==
        static_cast<int>(ideals_bruteforce(example6()).size()));
}

TEST_CASE("max_antichain and ideal_of_antichain invert each other") {
  Poset a3 = antichain3();
  CHECK(max_antichain(a3, OrderIdeal{subset(a3, {"x1", "x2"})}).members ==
        subset(a3, {"x1", "x2"}));
  CHECK(ideal_of_antichain(a3, Antichain{subset(a3, {})}).members == subset(a3, {}));
  Poset c2 = chain2();
  CHECK(max_antichain(c2, OrderIdeal{subset(c2, {"x1", "x2"})}).members ==
        subset(c2, {"x2"}));
  CHECK_THROWS_AS((void)ideal_of_antichain(c2, Antichain{subset(c2, {"x1", "x2"})}), Error);

  for (const Poset& p : all_posets(3)) {
    IdealLattice l = order_ideals(p);
    for (int i = 0; i < l.size(); ++i) {
      Antichain s = max_antichain(p, OrderIdeal{l.ideal(i)});
      CHECK(ideal_of_antichain(p, s).members == l.ideal(i));
    }
  }
}

TEST_CASE("complement_ideal") {
  Poset a3 = antichain3();
  CHECK(complement_ideal(a3, Antichain{subset(a3, {})}).members == a3.full_subset());
  CHECK(complement_ideal(a3, Antichain{subset(a3, {"x1", "x2"})}).members ==
        subset(a3, {"x3"}));
  Poset c2 = chain2();
  CHECK(complement_ideal(c2, Antichain{subset(c2, {"x1"})}).members.empty());
  CHECK_THROWS_AS((void)complement_ideal(c2, Antichain{subset(c2, {"x1", "x2"})}), Error);

  // minimal non-elements of M(S) recover S, over every antichain of small posets
  for (const Poset& p : all_posets(3)) {
    IdealLattice l = order_ideals(p);
    for (int i = 0; i < l.size(); ++i) {
      Bitset s = max_antichain(p, OrderIdeal{l.ideal(i)}).members;
      Bitset m = complement_ideal(p, Antichain{s}).members;
      CHECK(p.minimal_members(m.complement()) == s);
    }
  }
}

TEST_CASE("rowmotion on small posets") {
  Poset a3 = antichain3();
  IdealLattice l = order_ideals(a3);
  // on an antichain, rowmotion is complementation, so it squares to the identity
  for (int i = 0; i < l.size(); ++i) {
    OrderIdeal ideal{l.ideal(i)};
    OrderIdeal once = rowmotion(a3, ideal);
    CHECK(once.members == l.ideal(i).complement());
    CHECK(rowmotion(a3, once).members == ideal.members);
  }

  Poset c2 = chain2();
  OrderIdeal cur{subset(c2, {})};
  std::vector<std::string> orbit;
  for (int k = 0; k < 3; ++k) {
    orbit.push_back(c2.subset_label(cur.members));
    cur = rowmotion(c2, cur);
  }
  CHECK(orbit == std::vector<std::string>{"{}", "{x1,x2}", "{x1}"});
  CHECK(cur.members == subset(c2, {}));  // orbit length 3

  Poset pt = Poset::from_covers({"x"}, {});
  CHECK(rowmotion(pt, OrderIdeal{subset(pt, {})}).members == subset(pt, {"x"}));
  CHECK(rowmotion(pt, OrderIdeal{subset(pt, {"x"})}).members == subset(pt, {}));
}

TEST_CASE("rowmotion_matrix is a permutation for every small poset") {
  for (int n = 0; n <= 3; ++n)
    for (const Poset& p : all_posets(n)) {
      IdealLattice l = order_ideals(p);
      Permutation rho = rowmotion_matrix(l);  // constructor rejects non-bijections
      RationalMatrix m = rho.to_matrix();
      CHECK((m.transpose() * m).is_identity());
    }
}

TEST_CASE("lattice_tests") {
  LatticeFlags j3 = lattice_tests(order_ideals(antichain3()).as_poset());
  CHECK(j3.is_lattice);
  CHECK(j3.is_distributive);

  LatticeFlags m3 = lattice_tests(diamond_m3());
  CHECK(m3.is_lattice);
  CHECK(!m3.is_distributive);

  LatticeFlags ex = lattice_tests(example6());
  CHECK(!ex.is_lattice);
  CHECK(!ex.is_distributive);

  for (const Poset& p : all_posets(3)) {
    LatticeFlags flags = lattice_tests(order_ideals(p).as_poset());
    CHECK(flags.is_lattice);
    CHECK(flags.is_distributive);
  }
}

TEST_CASE("join_irreducibles recovers the base poset") {
  JoinIrreducibles b3 = join_irreducibles(order_ideals(antichain3()).as_poset());
  CHECK(b3.subposet.size() == 3);
  CHECK(b3.subposet.covers().empty());

  JoinIrreducibles two_chain =
      join_irreducibles(order_ideals(Poset::from_covers({"x"}, {})).as_poset());
  CHECK(two_chain.subposet.size() == 1);

  JoinIrreducibles three_chain = join_irreducibles(order_ideals(chain2()).as_poset());
  CHECK(three_chain.subposet.size() == 2);
  CHECK(three_chain.subposet.covers().size() == 1);

  CHECK_THROWS_AS((void)join_irreducibles(diamond_m3()), Error);

  // order_ideals(join_irreducibles(L)) is isomorphic to L via ideal_of
  for (const Poset& p : all_posets(3)) {
    Poset lattice = order_ideals(p).as_poset();
    JoinIrreducibles ji = join_irreducibles(lattice);
    IdealLattice rebuilt = order_ideals(ji.subposet);
    REQUIRE(rebuilt.size() == lattice.size());
    std::vector<int> where(lattice.size());
    for (int x = 0; x < lattice.size(); ++x) where[x] = rebuilt.index_of(ji.ideal_of[x]);
    Permutation relabel(where);  // must be a bijection
    for (int x = 0; x < lattice.size(); ++x)
      for (int y = 0; y < lattice.size(); ++y)
        CHECK(lattice.leq(x, y) == rebuilt.leq(where[x], where[y]));
  }
}

TEST_CASE("zeta and mobius") {
  IdealLattice one = order_ideals(Poset());
  auto [z1, m1] = zeta_and_mobius(one);
  CHECK(z1 == RationalMatrix::identity(1));
  CHECK(m1 == RationalMatrix::identity(1));

  IdealLattice two = order_ideals(Poset::from_covers({"x"}, {}));
  auto [z2, m2] = zeta_and_mobius(two);
  CHECK(z2.at(0, 0) == 1);
  CHECK(z2.at(0, 1) == 1);
  CHECK(z2.at(1, 0) == 0);
  CHECK(z2.at(1, 1) == 1);
  CHECK(m2.at(0, 1) == -1);

  for (const Poset& p : all_posets(3)) {
    IdealLattice l = order_ideals(p);
    auto [zeta, mobius] = zeta_and_mobius(l);
    CHECK((zeta * mobius).is_identity());
    CHECK(determinant(zeta) == 1);
    for (int i = 0; i < l.size(); ++i) {
      CHECK(zeta.at(i, i) == 1);
      for (int j = 0; j < i; ++j) CHECK(zeta.at(i, j) == 0);  // unit upper triangular
    }
  }
}

TEST_CASE("labeled poset counts on tiny sizes") {
  CHECK(all_posets(0).size() == 1);
  CHECK(all_posets(1).size() == 1);
  CHECK(all_posets(2).size() == 3);
  CHECK(all_posets(3).size() == 19);
}
