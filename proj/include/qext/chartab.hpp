#pragma once

// Exact irreducible character tables and the class-function calculus.
// Tables are computed with the Burnside-Dixon class-matrix method over
// GF(p) and lifted exactly through eigenvalue multiplicities; both
// orthogonality relations are then verified exactly as a mandatory
// post-condition. Abelian groups take a direct construction.

#include <memory>
#include <vector>

#include "qext/cyclotomic.hpp"
#include "qext/group.hpp"

namespace qext {

struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;  // one per conjugacy class, canonical order

  const Cyclotomic& at_class(size_t c) const { return values[c]; }
  const Cyclotomic& at_element(EIdx e) const {
    return values[group->class_of()[e]];
  }
  bool operator==(const ClassFunction& o) const {
    return group == o.group && values == o.values;
  }
};

struct Character {
  ClassFunction f;
  bool irreducible = false;

  GroupPtr group() const { return f.group; }
  int64_t degree() const;  // f.values[0], must be a positive integer
  const Cyclotomic& at_class(size_t c) const { return f.at_class(c); }
};

struct CharacterTable {
  GroupPtr group;
  std::vector<Character> irr;  // canonical order: degree, then values

  size_t size() const { return irr.size(); }
};
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Complete exact table; deterministic; cached per group. Throws on
/// verification failure or prime-search exhaustion.
TablePtr character_table(GroupPtr G);

/// Exact [phi, psi] = (1/|G|) sum phi(g) conj(psi(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const ClassFunction& f, const SubgroupHandle& H);
ClassFunction induce_from(const ClassFunction& f, const SubgroupHandle& H);
ClassFunction inflate(const ClassFunction& fbar, const QuotientMap& qm);
/// Inverse of inflate for functions constant on kernel cosets.
ClassFunction deflate(const ClassFunction& f, const QuotientMap& qm);

ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b);
ClassFunction conj_values(const ClassFunction& a);
ClassFunction regular_character(GroupPtr G);
ClassFunction trivial_character(GroupPtr G);

/// Order of det(chi); eigenvalue multiplicities are recovered per class by
/// an inverse DFT over <g>, so non-characters are detected and rejected.
int64_t det_order(const Character& chi);

std::vector<Character> linear_characters(GroupPtr G);

SubgroupHandle kernel_of(const Character& chi);
bool is_faithful(const Character& chi);

/// Index of f in Irr(G), or -1.
int find_in_table(const CharacterTable& t, const ClassFunction& f);

/// Multiplicities [f, chi_i]; throws if any is not a nonnegative integer
/// when require_character is set.
std::vector<Rational> decompose(const ClassFunction& f, const CharacterTable& t);
bool is_generalized_character(const ClassFunction& f);

}  // namespace qext
