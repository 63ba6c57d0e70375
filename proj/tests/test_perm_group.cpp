#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "qext/builtins.hpp"
#include "qext/group.hpp"

using namespace qext;

namespace {

// Independent oracle: conjugation-orbit sizes computed on raw permutations,
// no group indices or mult tables involved.
std::vector<size_t> class_sizes_oracle(GroupPtr G) {
  const auto& elems = G->elements();
  std::set<Permutation> unvisited(elems.begin(), elems.end());
  std::vector<size_t> sizes;
  while (!unvisited.empty()) {
    Permutation x = *unvisited.begin();
    std::set<Permutation> orbit;
    for (const auto& h : elems) orbit.insert(x.conjugated_by(h));
    for (const auto& y : orbit) unvisited.erase(y);
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<size_t> class_sizes(GroupPtr G) {
  std::vector<size_t> sizes;
  for (auto& c : G->classes()) sizes.push_back(c.members.size());
  return sizes;  // already ascending by canonical order
}

// Independent oracle: orders of subgroups found by closing all 1- and
// 2-element generating sets (enough for the small groups used here).
std::set<std::pair<size_t, bool>> subgroup_orders_oracle(GroupPtr G,
                                                         bool odd_only) {
  std::set<std::vector<EIdx>> seen;
  std::set<size_t> orders{1};
  for (size_t a = 0; a < G->order(); ++a)
    for (size_t b = a; b < G->order(); ++b) {
      auto h = generate_idx(G, {EIdx(a), EIdx(b)});
      if (!odd_only || h.order() % 2 == 1) orders.insert(h.order());
    }
  std::set<std::pair<size_t, bool>> out;
  for (size_t o : orders) out.insert({o, true});
  return out;
}

}  // namespace

TEST_CASE("element order") {
  CHECK(element_order(Permutation::identity(5)) == 1);
  CHECK(element_order(Permutation::from_cycles(5, {{0, 1, 2}})) == 3);
  CHECK(element_order(Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}})) == 6);
}

TEST_CASE("pi_parts on permutations") {
  // g of order 12, pi = {2}: g_pi = g^9, g_pi' = g^4
  auto g = Permutation::from_cycles(7, {{0, 1, 2}, {3, 4, 5, 6}});
  REQUIRE(g.order() == 12);
  auto [gp, gq] = pi_parts(g, PrimeSet({2}));
  Permutation g9 = Permutation::identity(7);
  for (int i = 0; i < 9; ++i) g9 = g9 * g;
  Permutation g4 = Permutation::identity(7);
  for (int i = 0; i < 4; ++i) g4 = g4 * g;
  CHECK(gp == g9);
  CHECK(gq == g4);
  CHECK(gp * gq == g);
  CHECK(gq * gp == g);

  // pi-element with pi covering its order: (g, 1)
  auto h = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  auto [hp, hq] = pi_parts(h, PrimeSet({2, 3}));
  CHECK(hp == h);
  CHECK(hq.is_identity());

  // pi empty: (1, g)
  auto k = Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}});
  auto [kp, kq] = pi_parts(k, PrimeSet({}));
  CHECK(kp.is_identity());
  CHECK(kq == k);
}

TEST_CASE("pi_parts properties across a group") {
  auto G = symmetric_group(4);
  for (auto pi : {PrimeSet({}), PrimeSet({2}), PrimeSet({3}), PrimeSet({2, 3})})
    for (size_t x = 0; x < G->order(); ++x) {
      auto [a, b] = pi_parts(*G, EIdx(x), pi);
      CHECK(G->mul(a, b) == EIdx(x));
      CHECK(G->mul(b, a) == EIdx(x));
      CHECK(pi.is_pi_number(G->element_order(a)));
      CHECK(pi.is_pi_prime_number(G->element_order(b)));
    }
}

TEST_CASE("conjugacy classes canonical order and oracle agreement") {
  auto S3 = symmetric_group(3);
  CHECK(class_sizes(S3) == std::vector<size_t>{1, 2, 3});
  CHECK(class_sizes_oracle(S3) == std::vector<size_t>{1, 2, 3});

  auto C6 = cyclic_group(6);
  CHECK(class_sizes(C6) == std::vector<size_t>(6, 1));

  auto Q8 = quaternion_group();
  REQUIRE(Q8->order() == 8);
  CHECK(class_sizes(Q8) == std::vector<size_t>{1, 1, 2, 2, 2});
  CHECK(class_sizes_oracle(Q8) == std::vector<size_t>{1, 1, 2, 2, 2});

  // conjugation stability: class(g^h) = class(g)
  auto S4 = symmetric_group(4);
  const auto& cof = S4->class_of();
  for (size_t g = 0; g < S4->order(); g += 3)
    for (size_t h = 0; h < S4->order(); h += 5)
      CHECK(cof[S4->conj(EIdx(g), EIdx(h))] == cof[g]);
}

TEST_CASE("generate") {
  auto S4 = symmetric_group(4);
  CHECK(generate_idx(S4, {}).order() == 1);
  CHECK(generate(S4, S4->generators()).order() == 24);
  auto four = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(generate(S4, {four}).order() == 4);
}

TEST_CASE("generate rejects foreign elements") {
  auto A4 = alternating_group(4);
  CHECK_THROWS_AS(generate(A4, {Permutation::from_cycles(4, {{0, 1}})}),
                  std::invalid_argument);
}

TEST_CASE("sylow subgroups") {
  auto S4 = symmetric_group(4);
  CHECK(sylow_subgroup(S4, 3).order() == 3);
  CHECK(sylow_subgroup(S4, 5).order() == 1);
  CHECK(sylow_subgroup(S4, 2).order() == 8);

  auto SL23 = sl2_group(3);
  REQUIRE(SL23->order() == 24);
  auto P = sylow_subgroup(SL23, 2);
  REQUIRE(P.order() == 8);
  // brute-force order profile: Q8 has 1 element of order 2 and 6 of order 4
  std::map<int64_t, int> profile;
  for (EIdx m : P.members) profile[SL23->element_order(m)]++;
  CHECK(profile[1] == 1);
  CHECK(profile[2] == 1);
  CHECK(profile[4] == 6);

  // |Syl_p| = |G|_p for every prime up to |G|
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
    CHECK((int64_t)sylow_subgroup(SL23, p).order() == PrimeSet({p}).part(24));
}

TEST_CASE("quotients") {
  auto S4 = symmetric_group(4);
  auto whole = quotient(S4, full_subgroup(S4));
  CHECK(whole->quotient->order() == 1);
  auto triv = quotient(S4, trivial_subgroup(S4));
  CHECK(triv->quotient->order() == 24);
  CHECK(class_sizes(triv->quotient) == class_sizes(S4));

  auto SL25 = sl2_group(5);
  REQUIRE(SL25->order() == 120);
  auto Z = center(SL25);
  REQUIRE(Z.order() == 2);
  auto qm = quotient(SL25, Z);
  CHECK(qm->quotient->order() == 60);
  CHECK(class_sizes(qm->quotient) == std::vector<size_t>{1, 12, 12, 15, 20});

  // projection is a homomorphism with the right kernel; section splits it
  for (size_t q = 0; q < qm->quotient->order(); ++q)
    CHECK(qm->proj[qm->section[q]] == q);
  CHECK(qm->section[0] == 0);
  for (size_t x = 0; x < 120; x += 7)
    for (size_t y = 0; y < 120; y += 11)
      CHECK(qm->proj[SL25->mul(EIdx(x), EIdx(y))] ==
            qm->quotient->mul(qm->proj[x], qm->proj[y]));
  size_t kercount = 0;
  for (size_t x = 0; x < 120; ++x)
    if (qm->proj[x] == 0) ++kercount;
  CHECK(kercount == 2);

  CHECK_THROWS_AS(quotient(S4, sylow_subgroup(S4, 2)), std::invalid_argument);
}

TEST_CASE("pi_prime_overgroups") {
  auto SL25 = sl2_group(5);
  auto Z = center(SL25);

  // pi covering primes(|G/N|): only N
  auto only_n = pi_prime_overgroups(SL25, Z, PrimeSet({2, 3, 5}));
  REQUIRE(only_n.size() == 1);
  CHECK(only_n[0].subgroup.order() == 2);
  CHECK(only_n[0].maximal);

  // pi = {}: G itself appears, flagged maximal
  auto all = pi_prime_overgroups(SL25, Z, PrimeSet({}));
  bool has_g = false;
  for (auto& h : all)
    if (h.subgroup.order() == 120) {
      has_g = true;
      CHECK(h.maximal);
    }
  CHECK(has_g);

  // pi = {2}: quotient-side pi'-subgroups of A5 have orders 1, 3, 5
  // (independent oracle: exhaustive 2-generated subgroup scan)
  auto A5 = alternating_group(5);
  std::set<size_t> odd_orders;
  for (auto& [o, flag] : subgroup_orders_oracle(A5, true)) odd_orders.insert(o);
  CHECK(odd_orders == std::set<size_t>{1, 3, 5});

  auto over = pi_prime_overgroups(SL25, Z, PrimeSet({2}));
  std::vector<size_t> qorders;
  for (auto& h : over) qorders.push_back(h.subgroup.order() / 2);
  CHECK(qorders == std::vector<size_t>{1, 3, 5});
  CHECK_FALSE(over[0].maximal);
  CHECK(over[1].maximal);
  CHECK(over[2].maximal);
}

TEST_CASE("centralizer_mod_N") {
  auto S4 = symmetric_group(4);
  auto V4 = generate(S4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                          Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  REQUIRE(V4.order() == 4);
  REQUIRE(is_normal(V4));

  // x in N: whole group
  CHECK(centralizer_mod_N(S4, V4, V4.members[1]).order() == 24);
  // N = 1: ordinary centralizer
  auto triv = trivial_subgroup(S4);
  for (size_t x = 0; x < 24; x += 5)
    CHECK(centralizer_mod_N(S4, triv, EIdx(x)).members ==
          centralizer(S4, EIdx(x)).members);
  // abelian: G
  auto C12 = cyclic_group(12);
  CHECK(centralizer_mod_N(C12, trivial_subgroup(C12), EIdx(5)).order() == 12);
}

TEST_CASE("builtin orders") {
  CHECK(cyclic_group(1)->order() == 1);
  CHECK(cyclic_group(12)->order() == 12);
  CHECK(dihedral_group(6)->order() == 12);
  CHECK(symmetric_group(5)->order() == 120);
  CHECK(alternating_group(5)->order() == 60);
  CHECK(quaternion_group()->order() == 8);
  CHECK(sl2_group(3)->order() == 24);
  CHECK(sl2_group(5)->order() == 120);
  CHECK(direct_product(cyclic_group(2), symmetric_group(3))->order() == 12);
  CHECK(parse_builtin("cyclic:4*sl23")->order() == 96);
}

TEST_CASE("normal subgroups and center") {
  auto S4 = symmetric_group(4);
  std::vector<size_t> orders;
  for (auto& n : normal_subgroups(S4)) orders.push_back(n.order());
  CHECK(orders == std::vector<size_t>{1, 4, 12, 24});

  auto Q8 = quaternion_group();
  CHECK(center(Q8).order() == 2);
  orders.clear();
  for (auto& n : normal_subgroups(Q8)) orders.push_back(n.order());
  // Q8: 1, Z, three C4's, Q8
  CHECK(orders == std::vector<size_t>{1, 2, 4, 4, 4, 8});

  CHECK(derived_subgroup(S4).order() == 12);
  CHECK(derived_subgroup(alternating_group(5)).order() == 60);
}

TEST_CASE("subgroup lattice sizes") {
  // S4 has 30 subgroups, A5 has 59 (classical counts)
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(alternating_group(5)).size() == 59);
}
