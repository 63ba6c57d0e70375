#include "qext/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace qext {

int64_t order_cap() {
  static int64_t cap = [] {
    if (const char* s = std::getenv("QUASIEXT_ORDER_CAP")) {
      int64_t v = std::atoll(s);
      if (v >= 1 && v <= 60000) return v;
    }
    return int64_t(2000);
  }();
  return cap;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<EIdx>& v) const {
    size_t h = 1469598103934665603ull;
    for (EIdx x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<uint64_t> make_mask(size_t n, const std::vector<EIdx>& members) {
  std::vector<uint64_t> m((n + 63) / 64, 0);
  for (EIdx x : members) m[x >> 6] |= uint64_t(1) << (x & 63);
  return m;
}

/// Closure of the given generator indices inside G (right-multiplication BFS).
std::vector<EIdx> closure_idx(const FiniteGroup& G, const std::vector<EIdx>& gens) {
  std::vector<char> in(G.order(), 0);
  std::vector<EIdx> members{0}, frontier{0};
  in[0] = 1;
  while (!frontier.empty()) {
    std::vector<EIdx> next;
    for (EIdx m : frontier)
      for (EIdx g : gens) {
        EIdx y = G.mul(m, g);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Greedy small generating set for a closed member set.
std::vector<EIdx> small_gens(const FiniteGroup& G, const std::vector<EIdx>& members) {
  std::vector<EIdx> gens;
  std::vector<EIdx> cur{0};
  for (EIdx m : members) {
    if (std::binary_search(cur.begin(), cur.end(), m)) continue;
    gens.push_back(m);
    cur = closure_idx(G, gens);
    if (cur.size() == members.size()) break;
  }
  return gens;
}

struct RawSubgroup {
  std::vector<EIdx> members;
  std::vector<EIdx> gens;
};

SubgroupHandle handle_from_raw(GroupPtr G, const RawSubgroup& r) {
  SubgroupHandle h;
  h.parent = G;
  h.members = r.members;
  h.gens = r.gens;
  h.mask = make_mask(G->order(), r.members);
  return h;
}

}  // namespace

// ---- FiniteGroup -----------------------------------------------------

GroupPtr FiniteGroup::from_generators(const std::vector<Permutation>& gens,
                                      size_t degree) {
  for (auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermHash> seen{elems[0]};
  std::deque<Permutation> frontier{elems[0]};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if ((int64_t)seen.size() > order_cap())
          throw std::runtime_error(
              "group order cap exceeded (set QUASIEXT_ORDER_CAP to raise)");
        elems.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  return from_elements(std::move(elems), gens);
}

GroupPtr FiniteGroup::from_elements(std::vector<Permutation> elems,
                                    std::vector<Permutation> gens) {
  if (elems.empty()) throw std::invalid_argument("empty element list");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->degree_ = elems[0].degree();
  std::sort(elems.begin(), elems.end());
  g->elems_ = std::move(elems);
  if (!g->elems_[0].is_identity())
    throw std::invalid_argument("element list lacks identity");
  g->gens_ = std::move(gens);
  g->index_.reserve(g->elems_.size() * 2);
  for (size_t i = 0; i < g->elems_.size(); ++i)
    g->index_.emplace(g->elems_[i], EIdx(i));
  return g;
}

std::vector<EIdx> FiniteGroup::generator_indices() const {
  std::vector<EIdx> out;
  for (auto& p : gens_) out.push_back(index_of(p));
  if (out.empty()) out.push_back(0);
  return out;
}

EIdx FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("element not in group");
  return it->second;
}

std::optional<EIdx> FiniteGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<EIdx>& FiniteGroup::mult_table() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (!mult_.empty()) return mult_;
  size_t n = elems_.size();
  std::vector<EIdx> table(n * n, EIdx(0xffff));
  // identity column
  for (size_t i = 0; i < n; ++i) table[i * n + 0] = EIdx(i);
  auto gidx = [&] {
    std::vector<EIdx> out;
    for (auto& p : gens_) out.push_back(index_.at(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  // generator columns by direct composition
  for (EIdx g : gidx)
    for (size_t i = 0; i < n; ++i)
      table[i * n + g] = index_.at(elems_[i] * elems_[g]);
  // remaining columns via a BFS word decomposition j = parent * generator
  std::vector<char> done(n, 0);
  done[0] = 1;
  for (EIdx g : gidx) done[g] = 1;
  std::deque<EIdx> frontier;
  frontier.push_back(0);
  for (EIdx g : gidx) frontier.push_back(g);
  while (!frontier.empty()) {
    EIdx p = frontier.front();
    frontier.pop_front();
    for (EIdx g : gidx) {
      EIdx j = table[size_t(p) * n + g];
      if (done[j]) continue;
      done[j] = 1;
      for (size_t i = 0; i < n; ++i)
        table[i * n + j] = table[size_t(table[i * n + p]) * n + g];
      frontier.push_back(j);
    }
  }
  for (size_t i = 0; i < n * n; ++i)
    if (table[i] == EIdx(0xffff))
      throw std::logic_error("mult table incomplete: generators do not generate");
  mult_ = std::move(table);
  return mult_;
}

const std::vector<EIdx>& FiniteGroup::inverse_table() const {
  mult_table();
  std::lock_guard<std::mutex> lk(mu_);
  if (!inv_.empty()) return inv_;
  size_t n = elems_.size();
  inv_.assign(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (mult_[i * n + j] == 0) {
        inv_[i] = EIdx(j);
        break;
      }
  return inv_;
}

const std::vector<int64_t>& FiniteGroup::element_orders() const {
  std::lock_guard<std::mutex> lk(mu_);
  if (!orders_.empty()) return orders_;
  orders_.reserve(elems_.size());
  for (auto& p : elems_) orders_.push_back(p.order());
  return orders_;
}

EIdx FiniteGroup::power(EIdx a, int64_t e) const {
  int64_t m = element_order(a);
  e %= m;
  if (e < 0) e += m;
  EIdx r = 0, x = a;
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (auto& a : gens_)
    for (auto& b : gens_)
      if (!(a * b == b * a)) return false;
  return true;
}

int64_t FiniteGroup::exponent() const {
  int64_t e = 1;
  for (int64_t m : element_orders()) e = std::lcm(e, m);
  return e;
}

const std::vector<ConjClass>& FiniteGroup::classes() const {
  mult_table();
  inverse_table();
  std::lock_guard<std::mutex> lk(mu_);
  if (!classes_.empty()) return classes_;
  size_t n = elems_.size();
  auto gidx = generator_indices();
  std::vector<char> assigned(n, 0);
  std::vector<ConjClass> cls;
  for (size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<EIdx> orbit{EIdx(x)};
    assigned[x] = 1;
    for (size_t q = 0; q < orbit.size(); ++q)
      for (EIdx g : gidx) {
        EIdx y = mult_[size_t(mult_[size_t(g) * n + orbit[q]]) * n + inv_[g]];
        if (!assigned[y]) {
          assigned[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    cls.push_back(ConjClass{orbit[0], std::move(orbit)});
  }
  std::sort(cls.begin(), cls.end(), [](const ConjClass& a, const ConjClass& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.rep < b.rep;
  });
  class_of_.assign(n, 0);
  for (size_t c = 0; c < cls.size(); ++c)
    for (EIdx m : cls[c].members) class_of_[m] = EIdx(c);
  classes_ = std::move(cls);
  return classes_;
}

const std::vector<EIdx>& FiniteGroup::class_of() const {
  classes();
  return class_of_;
}

EIdx FiniteGroup::power_class(size_t c, int64_t e) const {
  return class_of()[power(classes()[c].rep, e)];
}

std::shared_ptr<void> FiniteGroup::attachment(const std::string& key) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = attach_.find(key);
  return it == attach_.end() ? nullptr : it->second;
}

void FiniteGroup::set_attachment(const std::string& key,
                                 std::shared_ptr<void> v) const {
  std::lock_guard<std::mutex> lk(mu_);
  attach_.emplace(key, std::move(v));
}

SubGroupViewPtr FiniteGroup::materialize(const SubgroupHandle& h) const {
  std::string key = "sub:";
  key.reserve(h.members.size() * 3 + 4);
  for (EIdx m : h.members) {
    key += char('0' + (m & 63));
    key += char('0' + ((m >> 6) & 63));
    key += ';';
  }
  if (auto a = attachment(key)) return std::static_pointer_cast<const SubGroupView>(a);
  auto view = std::make_shared<SubGroupView>();
  std::vector<Permutation> elems;
  elems.reserve(h.members.size());
  for (EIdx m : h.members) elems.push_back(elems_[m]);
  std::vector<Permutation> gens;
  for (EIdx g : h.gens) gens.push_back(elems_[g]);
  if (gens.empty()) gens.push_back(Permutation::identity(degree_));
  view->group = FiniteGroup::from_elements(std::move(elems), std::move(gens));
  // both sides sort lexicographically, so the correspondence is monotone
  view->to_parent = h.members;
  view->from_parent.assign(elems_.size(), EIdx(0xffff));
  for (size_t i = 0; i < h.members.size(); ++i)
    view->from_parent[h.members[i]] = EIdx(i);
  set_attachment(key, std::static_pointer_cast<void>(
                          std::shared_ptr<SubGroupView>(view)));
  return view;
}

namespace {
struct QuotientRaw {
  std::vector<EIdx> kernel_members;
  GroupPtr quotient;
  std::vector<EIdx> proj, section;
};
}  // namespace

QuotientPtr FiniteGroup::quotient_by(const SubgroupHandle& n) const {
  std::string key = "quo:";
  for (EIdx m : n.members) {
    key += char('0' + (m & 63));
    key += char('0' + ((m >> 6) & 63));
    key += ';';
  }
  std::shared_ptr<const QuotientRaw> raw;
  if (auto a = attachment(key)) {
    raw = std::static_pointer_cast<const QuotientRaw>(a);
  } else {
    if (!is_normal(n))
      throw std::invalid_argument("quotient: subgroup is not normal");
    size_t ord = elems_.size();
    const auto& mt = mult_table();
    std::vector<EIdx> coset_of(ord, EIdx(0xffff));
    std::vector<EIdx> reps;
    for (size_t x = 0; x < ord; ++x) {
      if (coset_of[x] != EIdx(0xffff)) continue;
      EIdx c = EIdx(reps.size());
      reps.push_back(EIdx(x));
      for (EIdx m : n.members) coset_of[mt[x * ord + m]] = c;
    }
    size_t q = reps.size();
    // left-translation action on cosets
    std::vector<Permutation> qperm(q);
    for (size_t c = 0; c < q; ++c) {
      std::vector<Point> img(q);
      for (size_t j = 0; j < q; ++j)
        img[j] = coset_of[mt[size_t(reps[c]) * ord + reps[j]]];
      qperm[c] = Permutation(std::move(img));
    }
    std::vector<Permutation> qgens;
    for (auto& g : gens_) qgens.push_back(qperm[coset_of[index_.at(g)]]);
    if (qgens.empty()) qgens.push_back(Permutation::identity(q));
    auto r = std::make_shared<QuotientRaw>();
    r->kernel_members = n.members;
    r->quotient = FiniteGroup::from_elements(qperm, qgens);
    r->proj.assign(ord, 0);
    std::vector<EIdx> coset_to_q(q);
    for (size_t c = 0; c < q; ++c) coset_to_q[c] = r->quotient->index_of(qperm[c]);
    for (size_t x = 0; x < ord; ++x) r->proj[x] = coset_to_q[coset_of[x]];
    r->section.assign(q, 0);
    std::vector<char> have(q, 0);
    for (size_t x = 0; x < ord; ++x) {  // least element of each coset wins
      EIdx qi = r->proj[x];
      if (!have[qi]) {
        have[qi] = 1;
        r->section[qi] = EIdx(x);
      }
    }
    set_attachment(key, std::static_pointer_cast<void>(
                            std::shared_ptr<QuotientRaw>(r)));
    raw = r;
  }
  auto qm = std::make_shared<QuotientMap>();
  qm->source = shared_from_this();
  qm->kernel = subgroup_from_members(qm->source, raw->kernel_members);
  qm->quotient = raw->quotient;
  qm->proj = raw->proj;
  qm->section = raw->section;
  return qm;
}

// ---- free operations -------------------------------------------------

int64_t element_order(const Permutation& g) { return g.order(); }

std::pair<Permutation, Permutation> pi_parts(const Permutation& g,
                                             const PrimeSet& pi) {
  int64_t m = g.order();
  int64_t mp = pi.part(m), mq = m / mp;
  // e = 1 mod mp, e = 0 mod mq
  int64_t e = (mp == 1) ? 0 : mq * inv_mod(mq % mp, mp) % m;
  Permutation gp = Permutation::identity(g.degree());
  Permutation acc = g;
  int64_t k = e;
  while (k > 0) {
    if (k & 1) gp = gp * acc;
    acc = acc * acc;
    k >>= 1;
  }
  Permutation gq = gp.inverse() * g;
  return {gp, gq};
}

std::pair<EIdx, EIdx> pi_parts(const FiniteGroup& G, EIdx g, const PrimeSet& pi) {
  int64_t m = G.element_order(g);
  int64_t mp = pi.part(m), mq = m / mp;
  int64_t e = (mp == 1) ? 0 : mq * inv_mod(mq % mp, mp) % m;
  EIdx gp = G.power(g, e);
  EIdx gq = G.mul(G.inv(gp), g);
  return {gp, gq};
}

SubgroupHandle subgroup_from_members(GroupPtr parent, std::vector<EIdx> members) {
  std::sort(members.begin(), members.end());
  SubgroupHandle h;
  h.parent = parent;
  h.gens = small_gens(*parent, members);
  h.mask = make_mask(parent->order(), members);
  h.members = std::move(members);
  return h;
}

SubgroupHandle generate_idx(GroupPtr parent, const std::vector<EIdx>& gens) {
  auto members = closure_idx(*parent, gens);
  SubgroupHandle h;
  h.parent = parent;
  h.members = members;
  h.gens = gens;
  std::sort(h.gens.begin(), h.gens.end());
  h.gens.erase(std::unique(h.gens.begin(), h.gens.end()), h.gens.end());
  h.mask = make_mask(parent->order(), h.members);
  return h;
}

SubgroupHandle generate(GroupPtr parent, const std::vector<Permutation>& gens) {
  std::vector<EIdx> gi;
  for (auto& p : gens) gi.push_back(parent->index_of(p));
  return generate_idx(parent, gi);
}

SubgroupHandle trivial_subgroup(GroupPtr G) {
  return generate_idx(G, {});
}

SubgroupHandle full_subgroup(GroupPtr G) {
  std::vector<EIdx> all(G->order());
  for (size_t i = 0; i < all.size(); ++i) all[i] = EIdx(i);
  SubgroupHandle h;
  h.parent = G;
  h.members = std::move(all);
  h.gens = G->generator_indices();
  h.mask = make_mask(G->order(), h.members);
  return h;
}

SubgroupHandle center(GroupPtr G) {
  std::vector<EIdx> members;
  auto gidx = G->generator_indices();
  for (size_t x = 0; x < G->order(); ++x) {
    bool ok = true;
    for (EIdx g : gidx)
      if (G->mul(EIdx(x), g) != G->mul(g, EIdx(x))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(EIdx(x));
  }
  return subgroup_from_members(G, std::move(members));
}

SubgroupHandle derived_subgroup(GroupPtr G) {
  size_t n = G->order();
  std::unordered_set<EIdx> comms;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      EIdx c = G->mul(G->mul(G->inv(EIdx(x)), G->inv(EIdx(y))),
                      G->mul(EIdx(x), EIdx(y)));
      comms.insert(c);
    }
  std::vector<EIdx> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  return generate_idx(G, gens);
}

SubgroupHandle centralizer(GroupPtr G, EIdx x) {
  std::vector<EIdx> members;
  for (size_t g = 0; g < G->order(); ++g)
    if (G->mul(EIdx(g), x) == G->mul(x, EIdx(g))) members.push_back(EIdx(g));
  return subgroup_from_members(G, std::move(members));
}

SubgroupHandle centralizer_mod_N(GroupPtr G, const SubgroupHandle& N, EIdx x) {
  std::vector<EIdx> members;
  EIdx xi = G->inv(x);
  for (size_t g = 0; g < G->order(); ++g) {
    EIdx c = G->mul(G->mul(G->inv(EIdx(g)), xi), G->mul(EIdx(g), x));
    if (N.contains(c)) members.push_back(EIdx(g));
  }
  return subgroup_from_members(G, std::move(members));
}

SubgroupHandle normalizer(GroupPtr G, const SubgroupHandle& H) {
  std::vector<EIdx> members;
  for (size_t g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (EIdx h : H.gens)
      if (!H.contains(G->conj(h, EIdx(g)))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(EIdx(g));
  }
  return subgroup_from_members(G, std::move(members));
}

bool is_normal(const SubgroupHandle& h) {
  const auto& G = *h.parent;
  for (EIdx g : G.generator_indices())
    for (EIdx m : h.gens)
      if (!h.contains(G.conj(m, g))) return false;
  return true;
}

bool is_nilpotent_subgroup(const SubgroupHandle& h) {
  const auto& G = *h.parent;
  int64_t n = (int64_t)h.members.size();
  for (int64_t p : prime_divisors(n)) {
    int64_t pc = 0;
    for (EIdx m : h.members) {
      int64_t o = G.element_order(m);
      while (o % p == 0) o /= p;
      if (o == 1) ++pc;
    }
    PrimeSet ps({p});
    if (pc != ps.part(n)) return false;  // Sylow p not unique
  }
  return true;
}

SubgroupHandle sylow_subgroup(GroupPtr G, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p not prime");
  PrimeSet ps({p});
  int64_t target = ps.part((int64_t)G->order());
  if (target == 1) return trivial_subgroup(G);
  // first p-element in canonical order
  EIdx seed = 0;
  for (size_t x = 1; x < G->order(); ++x)
    if (ps.is_pi_number(G->element_order(EIdx(x)))) {
      seed = EIdx(x);
      break;
    }
  SubgroupHandle P = generate_idx(G, {seed});
  while ((int64_t)P.order() < target) {
    SubgroupHandle Ng = normalizer(G, P);
    bool grown = false;
    for (EIdx x : Ng.members) {
      if (P.contains(x)) continue;
      if (!ps.is_pi_number(G->element_order(x))) continue;
      auto gens = P.gens;
      gens.push_back(x);
      P = generate_idx(G, gens);
      grown = true;
      break;
    }
    if (!grown)
      throw std::logic_error("sylow_subgroup: normalizer growth stalled");
  }
  return P;
}

QuotientPtr quotient(GroupPtr G, const SubgroupHandle& N) {
  return G->quotient_by(N);
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& h, EIdx g) {
  const auto& G = *h.parent;
  std::vector<EIdx> members;
  members.reserve(h.members.size());
  for (EIdx m : h.members) members.push_back(G.conj(m, g));
  std::sort(members.begin(), members.end());
  SubgroupHandle out;
  out.parent = h.parent;
  out.members = std::move(members);
  out.gens.reserve(h.gens.size());
  for (EIdx m : h.gens) out.gens.push_back(G.conj(m, g));
  out.mask = make_mask(G.order(), out.members);
  return out;
}

// ---- subgroup lattice -------------------------------------------------

namespace {

struct Lattice {
  std::vector<RawSubgroup> subs;  // sorted by (order, members)
};

std::vector<RawSubgroup> cyclic_subgroups(const FiniteGroup& G) {
  std::unordered_map<std::vector<EIdx>, EIdx, VecHash> seen;
  std::vector<RawSubgroup> out;
  for (size_t x = 1; x < G.order(); ++x) {
    std::vector<EIdx> mem;
    EIdx y = EIdx(x);
    mem.push_back(0);
    while (y != 0) {
      mem.push_back(y);
      y = G.mul(y, EIdx(x));
    }
    std::sort(mem.begin(), mem.end());
    if (seen.emplace(mem, EIdx(x)).second)
      out.push_back(RawSubgroup{std::move(mem), {EIdx(x)}});
  }
  return out;
}

std::shared_ptr<const Lattice> lattice_of(GroupPtr G) {
  if (auto a = G->attachment("lattice"))
    return std::static_pointer_cast<const Lattice>(a);
  auto lat = std::make_shared<Lattice>();
  auto cyc = cyclic_subgroups(*G);
  std::unordered_map<std::vector<EIdx>, size_t, VecHash> seen;
  std::vector<RawSubgroup> subs;
  subs.push_back(RawSubgroup{{0}, {}});
  seen.emplace(subs[0].members, 0);
  for (auto& c : cyc)
    if (seen.emplace(c.members, subs.size()).second) subs.push_back(c);
  for (size_t i = 0; i < subs.size(); ++i) {
    for (auto& c : cyc) {
      bool inside = std::includes(subs[i].members.begin(), subs[i].members.end(),
                                  c.members.begin(), c.members.end());
      if (inside) continue;
      std::vector<EIdx> gens = subs[i].gens;
      gens.push_back(c.gens[0]);
      auto mem = closure_idx(*G, gens);
      if (seen.emplace(mem, subs.size()).second)
        subs.push_back(RawSubgroup{std::move(mem), std::move(gens)});
    }
  }
  std::sort(subs.begin(), subs.end(), [](const RawSubgroup& a, const RawSubgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  lat->subs = std::move(subs);
  G->set_attachment("lattice", std::static_pointer_cast<void>(
                                   std::shared_ptr<Lattice>(lat)));
  return lat;
}

}  // namespace

const std::vector<SubgroupHandle>& all_subgroups(GroupPtr G) {
  if (auto a = G->attachment("lattice_handles"))
    return *std::static_pointer_cast<const std::vector<SubgroupHandle>>(a);
  auto lat = lattice_of(G);
  auto out = std::make_shared<std::vector<SubgroupHandle>>();
  out->reserve(lat->subs.size());
  for (auto& r : lat->subs) out->push_back(handle_from_raw(G, r));
  G->set_attachment("lattice_handles", std::static_pointer_cast<void>(out));
  return *std::static_pointer_cast<const std::vector<SubgroupHandle>>(
      G->attachment("lattice_handles"));
}

const std::vector<SubgroupHandle>& normal_subgroups(GroupPtr G) {
  if (auto a = G->attachment("normals"))
    return *std::static_pointer_cast<const std::vector<SubgroupHandle>>(a);
  // class closures: subgroup generated by a full conjugacy class
  const auto& cls = G->classes();
  std::unordered_map<std::vector<EIdx>, size_t, VecHash> seen;
  std::vector<RawSubgroup> base;
  for (auto& c : cls) {
    if (c.members.size() == 1 && c.rep == 0) continue;
    std::vector<EIdx> gens(c.members.begin(), c.members.end());
    auto mem = closure_idx(*G, gens);
    if (seen.emplace(mem, base.size()).second) {
      auto sg = small_gens(*G, mem);
      base.push_back(RawSubgroup{std::move(mem), std::move(sg)});
    }
  }
  std::vector<RawSubgroup> subs;
  std::unordered_map<std::vector<EIdx>, size_t, VecHash> have;
  subs.push_back(RawSubgroup{{0}, {}});
  have.emplace(subs[0].members, 0);
  for (size_t i = 0; i < subs.size(); ++i) {
    for (auto& b : base) {
      if (std::includes(subs[i].members.begin(), subs[i].members.end(),
                        b.members.begin(), b.members.end()))
        continue;
      std::vector<EIdx> gens = subs[i].gens;
      gens.insert(gens.end(), b.gens.begin(), b.gens.end());
      auto mem = closure_idx(*G, gens);
      if (have.emplace(mem, subs.size()).second) {
        auto sg = small_gens(*G, mem);
        subs.push_back(RawSubgroup{std::move(mem), std::move(sg)});
      }
    }
  }
  std::sort(subs.begin(), subs.end(), [](const RawSubgroup& a, const RawSubgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  auto out = std::make_shared<std::vector<SubgroupHandle>>();
  for (auto& r : subs) out->push_back(handle_from_raw(G, r));
  G->set_attachment("normals", std::static_pointer_cast<void>(out));
  return *std::static_pointer_cast<const std::vector<SubgroupHandle>>(
      G->attachment("normals"));
}

namespace {

/// Canonical representative (lex-least member vector) of the conjugacy
/// orbit of a subgroup, together with the orbit itself.
std::vector<std::vector<EIdx>> subgroup_orbit(GroupPtr G,
                                              const std::vector<EIdx>& members) {
  auto gidx = G->generator_indices();
  std::unordered_set<std::vector<EIdx>, VecHash> seen;
  std::vector<std::vector<EIdx>> orbit{members};
  seen.insert(members);
  for (size_t i = 0; i < orbit.size(); ++i)
    for (EIdx g : gidx) {
      std::vector<EIdx> img;
      img.reserve(orbit[i].size());
      for (EIdx m : orbit[i]) img.push_back(G->conj(m, g));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) orbit.push_back(std::move(img));
    }
  return orbit;
}

}  // namespace

std::vector<SubgroupHandle> subgroup_class_reps(GroupPtr G) {
  const auto& subs = all_subgroups(G);
  std::unordered_set<std::vector<EIdx>, VecHash> seen;
  std::vector<SubgroupHandle> reps;
  for (auto& h : subs) {
    if (seen.count(h.members)) continue;
    auto orbit = subgroup_orbit(G, h.members);
    std::vector<EIdx> least = orbit[0];
    for (auto& o : orbit) {
      if (o < least) least = o;
      seen.insert(o);
    }
    reps.push_back(subgroup_from_members(G, least));
  }
  std::sort(reps.begin(), reps.end(),
            [](const SubgroupHandle& a, const SubgroupHandle& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return reps;
}

std::vector<PiPrimeOvergroup> pi_prime_overgroups(GroupPtr G,
                                                  const SubgroupHandle& N,
                                                  const PrimeSet& pi) {
  auto qm = G->quotient_by(N);
  GroupPtr Q = qm->quotient;
  int64_t qord = (int64_t)Q->order();

  // enumerate pi'-subgroups of Q (joins of cyclic pi'-subgroups)
  std::vector<RawSubgroup> subs;
  std::unordered_map<std::vector<EIdx>, size_t, VecHash> have;
  subs.push_back(RawSubgroup{{0}, {}});
  have.emplace(subs[0].members, 0);
  if (pi.is_pi_prime_number(qord)) {
    // the whole quotient is a pi'-group: reuse the full lattice
    for (auto& h : all_subgroups(Q)) {
      if (have.emplace(h.members, subs.size()).second)
        subs.push_back(RawSubgroup{h.members, h.gens});
    }
  } else {
    std::vector<RawSubgroup> cyc;
    {
      std::unordered_set<std::vector<EIdx>, VecHash> cseen;
      for (size_t x = 1; x < Q->order(); ++x) {
        if (!pi.is_pi_prime_number(Q->element_order(EIdx(x)))) continue;
        std::vector<EIdx> mem{0};
        EIdx y = EIdx(x);
        while (y != 0) {
          mem.push_back(y);
          y = Q->mul(y, EIdx(x));
        }
        std::sort(mem.begin(), mem.end());
        if (cseen.insert(mem).second)
          cyc.push_back(RawSubgroup{std::move(mem), {EIdx(x)}});
      }
    }
    for (auto& c : cyc)
      if (have.emplace(c.members, subs.size()).second) subs.push_back(c);
    for (size_t i = 0; i < subs.size(); ++i)
      for (auto& c : cyc) {
        if (std::includes(subs[i].members.begin(), subs[i].members.end(),
                          c.members.begin(), c.members.end()))
          continue;
        std::vector<EIdx> gens = subs[i].gens;
        gens.push_back(c.gens[0]);
        auto mem = closure_idx(*Q, gens);
        if (!pi.is_pi_prime_number((int64_t)mem.size())) continue;
        if (have.emplace(mem, subs.size()).second)
          subs.push_back(RawSubgroup{std::move(mem), std::move(gens)});
      }
  }

  // dedup up to Q-conjugacy, keeping the lex-least orbit member
  std::unordered_set<std::vector<EIdx>, VecHash> seen;
  std::vector<std::vector<EIdx>> reps;           // canonical reps
  std::vector<std::vector<std::vector<EIdx>>> orbits;
  for (auto& r : subs) {
    if (seen.count(r.members)) continue;
    auto orbit = subgroup_orbit(Q, r.members);
    std::vector<EIdx> least = orbit[0];
    for (auto& o : orbit) {
      if (o < least) least = o;
      seen.insert(o);
    }
    reps.push_back(least);
    orbits.push_back(std::move(orbit));
  }

  // maximality: H maximal iff contained in no conjugate of a larger rep
  std::vector<bool> maximal(reps.size(), true);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size() && maximal[i]; ++j) {
      if (i == j || orbits[j][0].size() <= reps[i].size()) continue;
      if (orbits[j][0].size() % reps[i].size() != 0) continue;
      for (auto& o : orbits[j])
        if (std::includes(o.begin(), o.end(), reps[i].begin(), reps[i].end())) {
          maximal[i] = false;
          break;
        }
    }

  // map back to G as preimages
  std::vector<PiPrimeOvergroup> out;
  for (size_t i = 0; i < reps.size(); ++i) {
    std::vector<char> inq(Q->order(), 0);
    for (EIdx m : reps[i]) inq[m] = 1;
    std::vector<EIdx> members;
    for (size_t g = 0; g < G->order(); ++g)
      if (inq[qm->proj[g]]) members.push_back(EIdx(g));
    out.push_back(PiPrimeOvergroup{subgroup_from_members(G, std::move(members)),
                                   maximal[i]});
  }
  std::sort(out.begin(), out.end(),
            [](const PiPrimeOvergroup& a, const PiPrimeOvergroup& b) {
              if (a.subgroup.members.size() != b.subgroup.members.size())
                return a.subgroup.members.size() < b.subgroup.members.size();
              return a.subgroup.members < b.subgroup.members;
            });
  return out;
}

}  // namespace qext
