#include "doctest.h"

#include <algorithm>

#include "qext/builtins.hpp"
#include "qext/chartab.hpp"

using namespace qext;

namespace {

std::vector<int64_t> degrees(GroupPtr G) {
  std::vector<int64_t> out;
  for (auto& ch : character_table(G)->irr) out.push_back(ch.degree());
  return out;
}

}  // namespace

TEST_CASE("small tables") {
  auto C2 = cyclic_group(2);
  auto t = character_table(C2);
  REQUIRE(t->size() == 2);
  CHECK(t->irr[0].f.values[1] == Cyclotomic(1));
  CHECK(t->irr[1].f.values[1] == Cyclotomic(-1));

  // S3: classes id, 3-cycles, transpositions
  auto S3 = symmetric_group(3);
  CHECK(degrees(S3) == std::vector<int64_t>{1, 1, 2});
  auto ts = character_table(S3);
  // frozen table: trivial, sign, standard
  CHECK(ts->irr[0].f.values ==
        std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)});
  CHECK(ts->irr[1].f.values ==
        std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(-1)});
  CHECK(ts->irr[2].f.values ==
        std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(-1), Cyclotomic(0)});

  CHECK(degrees(sl2_group(3)) == std::vector<int64_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(degrees(alternating_group(5)) == std::vector<int64_t>{1, 3, 3, 4, 5});
  CHECK(degrees(sl2_group(5)) ==
        std::vector<int64_t>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  CHECK(degrees(quaternion_group()) == std::vector<int64_t>{1, 1, 1, 1, 2});
  CHECK(degrees(cyclic_group(12)) == std::vector<int64_t>(12, 1));
}

TEST_CASE("inner products") {
  auto S4 = symmetric_group(4);
  auto t = character_table(S4);
  auto one = trivial_character(S4);
  CHECK(inner_product(one, one) == Cyclotomic(1));
  for (size_t i = 0; i < t->size(); ++i)
    for (size_t j = 0; j < t->size(); ++j)
      CHECK(inner_product(t->irr[i].f, t->irr[j].f) ==
            Cyclotomic(i == j ? 1 : 0));
  auto reg = regular_character(S4);
  for (auto& ch : t->irr)
    CHECK(inner_product(reg, ch.f) == Cyclotomic(ch.degree()));
}

TEST_CASE("restriction, induction, inflation") {
  auto S4 = symmetric_group(4);
  auto A4members = generate(S4, alternating_group(4)->generators().empty()
                                    ? std::vector<Permutation>{}
                                    : alternating_group(4)->generators());
  REQUIRE(A4members.order() == 12);

  // restrict(1_G, H) = 1_H
  auto oneG = trivial_character(S4);
  auto r = restrict_to(oneG, A4members);
  for (auto& v : r.values) CHECK(v == Cyclotomic(1));

  // induce(1_N, G)(1) = |G:N|
  auto oneH = trivial_character(r.group);
  auto ind = induce_from(oneH, A4members);
  CHECK(ind.values[0] == Cyclotomic(2));

  // Frobenius reciprocity on all pairs
  auto tG = character_table(S4);
  auto tH = character_table(r.group);
  for (auto& chi : tG->irr)
    for (auto& th : tH->irr) {
      auto lhs = inner_product(induce_from(th.f, A4members), chi.f);
      auto rhs = inner_product(th.f, restrict_to(chi.f, A4members));
      CHECK(lhs == rhs);
    }

  // inflation via S4 / V4 = S3
  auto V4 = generate(S4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                          Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  auto qm = quotient(S4, V4);
  REQUIRE(qm->quotient->order() == 6);
  auto tQ = character_table(qm->quotient);
  for (auto& a : tQ->irr)
    for (auto& b : tQ->irr) {
      // inflation is an isometry
      CHECK(inner_product(inflate(a.f, *qm), inflate(b.f, *qm)) ==
            inner_product(a.f, b.f));
    }
  // inflate then deflate is the identity
  for (auto& a : tQ->irr) CHECK(deflate(inflate(a.f, *qm), *qm) == a.f);
}

TEST_CASE("det_order") {
  auto S3 = symmetric_group(3);
  auto t = character_table(S3);
  // linear characters: order equals the value order
  CHECK(det_order(t->irr[0]) == 1);
  CHECK(det_order(t->irr[1]) == 2);
  // 2-dim irreducible of S3: det is the sign character
  CHECK(det_order(t->irr[2]) == 2);

  // 2-dim faithful character of Q8 sits inside SU(2): det order 1
  auto Q8 = quaternion_group();
  auto tq = character_table(Q8);
  REQUIRE(tq->irr[4].degree() == 2);
  CHECK(det_order(tq->irr[4]) == 1);

  // det_order(chi) divides the exponent
  auto SL23 = sl2_group(3);
  for (auto& ch : character_table(SL23)->irr)
    CHECK(SL23->exponent() % det_order(ch) == 0);

  // non-character input detected
  auto bad = t->irr[2];
  bad.f.values[1] = Cyclotomic(1);
  CHECK_THROWS_AS(det_order(bad), std::invalid_argument);
}

TEST_CASE("linear characters") {
  CHECK(linear_characters(cyclic_group(8)).size() == 8);
  CHECK(linear_characters(alternating_group(5)).size() == 1);
  CHECK(linear_characters(symmetric_group(3)).size() == 2);
  // closed under pointwise product
  auto S3 = symmetric_group(3);
  auto lin = linear_characters(S3);
  auto t = character_table(S3);
  for (auto& a : lin)
    for (auto& b : lin)
      CHECK(find_in_table(*t, pointwise_mul(a.f, b.f)) >= 0);
}

TEST_CASE("pointwise products") {
  auto S3 = symmetric_group(3);
  auto t = character_table(S3);
  auto one = trivial_character(S3);
  for (auto& ch : t->irr) CHECK(pointwise_mul(ch.f, one) == ch.f);
  auto sign = t->irr[1].f;
  CHECK(pointwise_mul(sign, sign) == one);
}

TEST_CASE("kernels") {
  auto S3 = symmetric_group(3);
  auto t = character_table(S3);
  CHECK(kernel_of(t->irr[0]).order() == 6);
  CHECK(kernel_of(t->irr[1]).order() == 3);
  CHECK(kernel_of(t->irr[2]).order() == 1);
  CHECK(is_faithful(t->irr[2]));

  auto Q8 = quaternion_group();
  auto tq = character_table(Q8);
  CHECK(is_faithful(tq->irr[4]));
  CHECK_FALSE(is_faithful(tq->irr[1]));
}

TEST_CASE("second orthogonality spot check") {
  auto A5 = alternating_group(5);
  auto t = character_table(A5);
  const auto& cls = A5->classes();
  for (size_t c = 0; c < cls.size(); ++c) {
    CycloAccum acc(A5->exponent());
    for (auto& ch : t->irr)
      acc.add_mul(ch.f.values[c], ch.f.values[c], true, Rational(1));
    int64_t cent = (int64_t)A5->order() / (int64_t)cls[c].members.size();
    CHECK(acc.finish() == Cyclotomic(cent));
  }
}

TEST_CASE("decompose and generalized characters") {
  auto S4 = symmetric_group(4);
  auto t = character_table(S4);
  auto reg = regular_character(S4);
  auto coeffs = decompose(reg, *t);
  for (size_t i = 0; i < t->size(); ++i)
    CHECK(coeffs[i] == Rational(t->irr[i].degree()));
  CHECK(is_generalized_character(reg));
  auto half = trivial_character(S4);
  half.values[0] = Cyclotomic(Rational(1, 2));
  CHECK_FALSE(is_generalized_character(half));
}
