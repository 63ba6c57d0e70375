#pragma once

// Explicit finite permutation groups with full element enumeration.
// Desk scale: group order is capped (default 2000, override with the
// QUASIEXT_ORDER_CAP environment variable). Elements are kept in a
// canonical order (lexicographic one-line notation), so every derived
// object (classes, subgroup lists, quotients) is deterministic.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qext/numutil.hpp"
#include "qext/perm.hpp"

namespace qext {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
using EIdx = std::uint16_t;  // element index within a group

int64_t order_cap();  // QUASIEXT_ORDER_CAP or 2000

struct ConjClass {
  EIdx rep;                   // least element index in the class
  std::vector<EIdx> members;  // ascending
};

/// Subgroup of a parent group, stored by member indices (ascending).
struct SubgroupHandle {
  GroupPtr parent;
  std::vector<EIdx> members;
  std::vector<EIdx> gens;
  std::vector<uint64_t> mask;  // membership bitset

  size_t order() const { return members.size(); }
  bool contains(EIdx x) const { return mask[x >> 6] >> (x & 63) & 1; }
  bool contains_all(const SubgroupHandle& o) const {
    for (size_t i = 0; i < mask.size(); ++i)
      if ((o.mask[i] & ~mask[i]) != 0) return false;
    return true;
  }
  bool operator==(const SubgroupHandle& o) const { return members == o.members; }
};

struct QuotientMap {
  GroupPtr source;
  SubgroupHandle kernel;
  GroupPtr quotient;          // faithful permutation action on cosets
  std::vector<EIdx> proj;     // source element index -> quotient element index
  std::vector<EIdx> section;  // quotient element index -> coset representative
};
using QuotientPtr = std::shared_ptr<const QuotientMap>;

/// Materialized subgroup: the subgroup as a FiniteGroup of its own.
/// Element i of the subgroup corresponds to parent element to_parent[i];
/// both sides use lexicographic element order, so the map is monotone.
struct SubGroupView {
  GroupPtr group;
  std::vector<EIdx> to_parent;
  std::vector<EIdx> from_parent;  // parent idx -> sub idx, or 0xffff
};
using SubGroupViewPtr = std::shared_ptr<const SubGroupView>;

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// Closure of the generators; throws if the order cap is exceeded.
  static GroupPtr from_generators(const std::vector<Permutation>& gens,
                                  size_t degree);
  /// Trusted: elems already closed under product and inverse.
  static GroupPtr from_elements(std::vector<Permutation> elems,
                                std::vector<Permutation> gens);

  size_t order() const { return elems_.size(); }
  size_t degree() const { return degree_; }
  const Permutation& perm(EIdx i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::vector<EIdx> generator_indices() const;

  EIdx index_of(const Permutation& p) const;  // throws if absent
  std::optional<EIdx> find(const Permutation& p) const;

  EIdx mul(EIdx a, EIdx b) const {
    const auto& t = mult_table();
    return t[size_t(a) * elems_.size() + b];
  }
  EIdx inv(EIdx a) const { return inverse_table()[a]; }
  EIdx conj(EIdx x, EIdx by) const { return mul(mul(by, x), inv(by)); }
  EIdx power(EIdx a, int64_t e) const;
  int64_t element_order(EIdx a) const { return element_orders()[a]; }

  bool is_abelian() const;
  int64_t exponent() const;

  const std::vector<ConjClass>& classes() const;
  const std::vector<EIdx>& class_of() const;  // element index -> class index
  size_t num_classes() const { return classes().size(); }
  /// class index of rep(c)^e
  EIdx power_class(size_t c, int64_t e) const;

  const std::vector<EIdx>& mult_table() const;
  const std::vector<EIdx>& inverse_table() const;
  const std::vector<int64_t>& element_orders() const;

  // Type-erased per-group memo slots (character tables etc.); thread-safe.
  std::shared_ptr<void> attachment(const std::string& key) const;
  void set_attachment(const std::string& key, std::shared_ptr<void> v) const;

  SubGroupViewPtr materialize(const SubgroupHandle& h) const;
  QuotientPtr quotient_by(const SubgroupHandle& n) const;

 private:
  FiniteGroup() = default;

  size_t degree_ = 0;
  std::vector<Permutation> elems_;  // sorted lex; elems_[0] = identity
  std::vector<Permutation> gens_;
  std::unordered_map<Permutation, EIdx, PermHash> index_;

  mutable std::mutex mu_;
  mutable std::vector<EIdx> mult_;
  mutable std::vector<EIdx> inv_;
  mutable std::vector<int64_t> orders_;
  mutable std::vector<ConjClass> classes_;
  mutable std::vector<EIdx> class_of_;
  mutable std::unordered_map<std::string, std::shared_ptr<void>> attach_;
};

// ---- operations ------------------------------------------------------

int64_t element_order(const Permutation& g);

/// g = g_pi * g_pi' with commuting power-of-g parts of pi / pi' order.
std::pair<Permutation, Permutation> pi_parts(const Permutation& g,
                                             const PrimeSet& pi);
/// Index version inside a group.
std::pair<EIdx, EIdx> pi_parts(const FiniteGroup& G, EIdx g, const PrimeSet& pi);

SubgroupHandle generate(GroupPtr parent, const std::vector<Permutation>& gens);
SubgroupHandle generate_idx(GroupPtr parent, const std::vector<EIdx>& gens);

SubgroupHandle trivial_subgroup(GroupPtr G);
SubgroupHandle full_subgroup(GroupPtr G);
SubgroupHandle center(GroupPtr G);
SubgroupHandle derived_subgroup(GroupPtr G);
SubgroupHandle centralizer(GroupPtr G, EIdx x);
SubgroupHandle normalizer(GroupPtr G, const SubgroupHandle& H);
/// {g in G : [g,x] in N}, the preimage of C_{G/N}(Nx).
SubgroupHandle centralizer_mod_N(GroupPtr G, const SubgroupHandle& N, EIdx x);

bool is_normal(const SubgroupHandle& h);
bool is_nilpotent_subgroup(const SubgroupHandle& h);

SubgroupHandle sylow_subgroup(GroupPtr G, int64_t p);

QuotientPtr quotient(GroupPtr G, const SubgroupHandle& N);

/// All subgroups (member sets ascending by (order, members)); cached.
const std::vector<SubgroupHandle>& all_subgroups(GroupPtr G);

/// All normal subgroups in canonical order; cached.
const std::vector<SubgroupHandle>& normal_subgroups(GroupPtr G);

/// Conjugacy-orbit representatives of all subgroups (canonical reps).
std::vector<SubgroupHandle> subgroup_class_reps(GroupPtr G);

struct PiPrimeOvergroup {
  SubgroupHandle subgroup;  // N <= H <= G with H/N a pi'-group
  bool maximal;             // maximal among pi'-overgroups (up to conjugacy)
};

/// One representative per G-conjugacy orbit, canonical order; includes N.
std::vector<PiPrimeOvergroup> pi_prime_overgroups(GroupPtr G,
                                                  const SubgroupHandle& N,
                                                  const PrimeSet& pi);

/// Conjugate of a subgroup by group element g (member-wise).
SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, EIdx g);

SubgroupHandle subgroup_from_members(GroupPtr parent, std::vector<EIdx> members);

}  // namespace qext
