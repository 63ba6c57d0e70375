#include <algorithm>
#include <stdexcept>

#include "qext/chartab.hpp"

namespace qext {

namespace {

int64_t values_conductor(const ClassFunction& f) {
  int64_t L = 1;
  for (auto& v : f.values) L = common_conductor(L, v.conductor());
  return L;
}

}  // namespace

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group)
    throw std::invalid_argument("inner_product: group mismatch");
  const auto& cls = a.group->classes();
  CycloAccum acc(common_conductor(values_conductor(a), values_conductor(b)));
  for (size_t c = 0; c < cls.size(); ++c)
    acc.add_mul(a.values[c], b.values[c], true,
                Rational((int64_t)cls[c].members.size()));
  return acc.finish(Rational((int64_t)a.group->order()));
}

ClassFunction restrict_to(const ClassFunction& f, const SubgroupHandle& H) {
  if (H.parent != f.group)
    throw std::invalid_argument("restrict_to: subgroup of a different group");
  auto view = f.group->materialize(H);
  ClassFunction out;
  out.group = view->group;
  const auto& cof = f.group->class_of();
  for (auto& c : view->group->classes())
    out.values.push_back(f.values[cof[view->to_parent[c.rep]]]);
  return out;
}

ClassFunction induce_from(const ClassFunction& f, const SubgroupHandle& H) {
  GroupPtr G = H.parent;
  auto view = G->materialize(H);
  if (f.group != view->group)
    throw std::invalid_argument("induce_from: function not on the subgroup");
  const auto& subcof = view->group->class_of();
  ClassFunction out;
  out.group = G;
  int64_t L = values_conductor(f);
  for (auto& c : G->classes()) {
    CycloAccum acc(L);
    for (size_t x = 0; x < G->order(); ++x) {
      EIdx y = G->conj(c.rep, EIdx(x));
      EIdx sub = view->from_parent[y];
      if (sub == EIdx(0xffff)) continue;
      acc.add(f.values[subcof[sub]]);
    }
    out.values.push_back(acc.finish(Rational((int64_t)H.order())));
  }
  return out;
}

ClassFunction inflate(const ClassFunction& fbar, const QuotientMap& qm) {
  if (fbar.group != qm.quotient)
    throw std::invalid_argument("inflate: function not on the quotient");
  ClassFunction out;
  out.group = qm.source;
  const auto& qcof = qm.quotient->class_of();
  for (auto& c : qm.source->classes())
    out.values.push_back(fbar.values[qcof[qm.proj[c.rep]]]);
  return out;
}

ClassFunction deflate(const ClassFunction& f, const QuotientMap& qm) {
  if (f.group != qm.source)
    throw std::invalid_argument("deflate: function not on the source");
  ClassFunction out;
  out.group = qm.quotient;
  const auto& cof = qm.source->class_of();
  for (auto& c : qm.quotient->classes())
    out.values.push_back(f.values[cof[qm.section[c.rep]]]);
  // well-definedness: constant on kernel cosets
  for (size_t x = 0; x < qm.source->order(); ++x)
    if (!(f.values[cof[x]] == out.values[qm.quotient->class_of()[qm.proj[x]]]))
      throw std::invalid_argument("deflate: function not constant on cosets");
  return out;
}

ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group)
    throw std::invalid_argument("pointwise_mul: group mismatch");
  ClassFunction out;
  out.group = a.group;
  out.values.reserve(a.values.size());
  for (size_t c = 0; c < a.values.size(); ++c)
    out.values.push_back(a.values[c] * b.values[c]);
  return out;
}

ClassFunction conj_values(const ClassFunction& a) {
  ClassFunction out;
  out.group = a.group;
  for (auto& v : a.values) out.values.push_back(v.conj());
  return out;
}

ClassFunction regular_character(GroupPtr G) {
  ClassFunction out;
  out.group = G;
  out.values.assign(G->num_classes(), Cyclotomic());
  out.values[0] = Cyclotomic((int64_t)G->order());
  return out;
}

ClassFunction trivial_character(GroupPtr G) {
  ClassFunction out;
  out.group = G;
  out.values.assign(G->num_classes(), Cyclotomic(1));
  return out;
}

int64_t det_order(const Character& chi) {
  GroupPtr G = chi.group();
  const auto& cls = G->classes();
  int64_t deg = chi.degree();
  int64_t order = 1;
  for (size_t c = 0; c < cls.size(); ++c) {
    int64_t m = G->element_order(cls[c].rep);
    // eigenvalue multiplicities from the inverse DFT over <g>
    int64_t det_exp = 0;
    int64_t total = 0;
    for (int64_t u = 0; u < m; ++u) {
      CycloAccum acc(m % 4 == 2 ? 2 * m : m);
      for (int64_t t = 0; t < m; ++t)
        acc.add_mul(chi.f.values[G->power_class(c, t)],
                    Cyclotomic::root_of_unity(m, -(u * t) % m), false,
                    Rational(1));
      Cyclotomic au = acc.finish(Rational(m));
      if (!au.is_rational())
        throw std::invalid_argument("det_order: not a character (non-rational multiplicity)");
      Rational r = au.rational_value();
      if (boost::multiprecision::denominator(r) != 1 || r < 0 || r > deg)
        throw std::invalid_argument("det_order: not a character (bad multiplicity)");
      int64_t a = r.convert_to<int64_t>();
      det_exp = (det_exp + u * a) % m;
      total += a;
    }
    if (total != deg)
      throw std::invalid_argument("det_order: multiplicities do not sum to degree");
    int64_t value_order = m / std::gcd(m, det_exp == 0 ? m : det_exp);
    order = std::lcm(order, value_order);
  }
  return order;
}

std::vector<Character> linear_characters(GroupPtr G) {
  auto t = character_table(G);
  std::vector<Character> out;
  for (auto& ch : t->irr)
    if (ch.degree() == 1) out.push_back(ch);
  return out;
}

SubgroupHandle kernel_of(const Character& chi) {
  GroupPtr G = chi.group();
  const auto& cof = G->class_of();
  Cyclotomic deg = chi.f.values[0];
  std::vector<EIdx> members;
  for (size_t x = 0; x < G->order(); ++x)
    if (chi.f.values[cof[x]] == deg) members.push_back(EIdx(x));
  return subgroup_from_members(G, std::move(members));
}

bool is_faithful(const Character& chi) { return kernel_of(chi).order() == 1; }

int find_in_table(const CharacterTable& t, const ClassFunction& f) {
  for (size_t i = 0; i < t.irr.size(); ++i)
    if (t.irr[i].f.values == f.values) return (int)i;
  return -1;
}

std::vector<Rational> decompose(const ClassFunction& f, const CharacterTable& t) {
  std::vector<Rational> out;
  for (auto& ch : t.irr) {
    Cyclotomic ip = inner_product(f, ch.f);
    if (!ip.is_rational())
      throw std::logic_error("decompose: non-rational multiplicity");
    out.push_back(ip.rational_value());
  }
  return out;
}

bool is_generalized_character(const ClassFunction& f) {
  auto t = character_table(f.group);
  for (auto& ch : t->irr) {
    Cyclotomic ip = inner_product(f, ch.f);
    if (!ip.is_rational()) return false;
    if (boost::multiprecision::denominator(ip.rational_value()) != 1)
      return false;
  }
  return true;
}

}  // namespace qext
