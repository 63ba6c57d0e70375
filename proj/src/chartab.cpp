#include "qext/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qext/gfp.hpp"

namespace qext {

int64_t Character::degree() const {
  const auto& v = f.values.at(0);
  if (!v.is_rational()) throw std::logic_error("character degree not rational");
  Rational r = v.rational_value();
  if (boost::multiprecision::denominator(r) != 1 || r <= 0)
    throw std::logic_error("character degree not a positive integer");
  return r.convert_to<int64_t>();
}

namespace {

int64_t normalized_exponent_conductor(GroupPtr G) {
  int64_t e = G->exponent();
  while (e % 4 == 2) e /= 2;
  return e;
}

// ---- exact reduction of integer exponent-count vectors -------------------

/// Reduce an integer vector over exponents mod L to the power basis of
/// Q(zeta_L) and compare with target = c0 * 1 (constant term only).
bool counts_equal_constant(const std::vector<int64_t>& counts, int64_t L,
                           int64_t c0) {
  if (L == 1) return counts[0] == c0;
  std::vector<Cyclotomic::Term> raw;
  for (int64_t t = 0; t < L; ++t)
    if (counts[t] != 0) raw.push_back({uint32_t(t), Rational(counts[t])});
  Cyclotomic z = Cyclotomic::from_terms(L, std::move(raw));
  return z == Cyclotomic(Rational(c0));
}

// ---- abelian tables -------------------------------------------------------

std::vector<Character> abelian_irr(GroupPtr G) {
  size_t n = G->order();
  int64_t e = G->exponent();

  // generator chain in canonical element order
  struct Level {
    EIdx gen;
    int64_t coset_order;
  };
  std::vector<Level> levels;
  std::vector<EIdx> members{0};
  std::vector<char> in(n, 0);
  in[0] = 1;
  for (size_t x = 1; x < n && members.size() < n; ++x) {
    if (in[x]) continue;
    // coset order: least c with x^c in current subgroup
    int64_t c = 1;
    EIdx y = EIdx(x);
    while (!in[y]) {
      y = G->mul(y, EIdx(x));
      ++c;
    }
    std::vector<EIdx> bigger;
    EIdx p = 0;
    for (int64_t j = 0; j < c; ++j) {
      for (EIdx h : members) {
        EIdx z = G->mul(h, p);
        if (!in[z]) in[z] = 1;
        bigger.push_back(z);
      }
      p = G->mul(p, EIdx(x));
    }
    levels.push_back({EIdx(x), c});
    members = std::move(bigger);
  }

  // characters as exponent arrays over elements (values zeta_e^exp)
  std::vector<std::vector<int64_t>> chars{std::vector<int64_t>(n, 0)};
  std::vector<EIdx> cur{0};
  for (auto& lv : levels) {
    int64_t c = lv.coset_order;
    EIdx gc = G->power(lv.gen, c);
    std::vector<std::vector<int64_t>> next;
    next.reserve(chars.size() * c);
    std::vector<EIdx> bigger;
    {
      EIdx p = 0;
      for (int64_t j = 0; j < c; ++j) {
        for (EIdx h : cur) bigger.push_back(G->mul(h, p));
        p = G->mul(p, lv.gen);
      }
    }
    for (auto& phi : chars) {
      int64_t a = phi[gc];
      if (a % c != 0)
        throw std::logic_error("abelian table: extension obstruction");
      int64_t t0 = a / c;
      for (int64_t s = 0; s < c; ++s) {
        int64_t t = (t0 + s * (e / c)) % e;
        std::vector<int64_t> ext(n, -1);
        EIdx p = 0;
        for (int64_t j = 0; j < c; ++j) {
          for (EIdx h : cur) ext[G->mul(h, p)] = (phi[h] + j * t) % e;
          p = G->mul(p, lv.gen);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    cur = std::move(bigger);
  }
  if (chars.size() != n) throw std::logic_error("abelian table: wrong count");

  // exact verification on the exponent representation:
  // (1) multiplicativity against every generator (forces the rest by
  //     induction), (2) pairwise distinct, (3) row sums, (4) column sums
  auto gidx = G->generator_indices();
  for (auto& phi : chars)
    for (EIdx g : gidx)
      for (size_t x = 0; x < n; ++x)
        if ((phi[g] + phi[x]) % e != phi[G->mul(g, EIdx(x))])
          throw std::logic_error("abelian table: not multiplicative");
  {
    auto sorted = chars;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        throw std::logic_error("abelian table: duplicate characters");
  }
  for (size_t i = 0; i < n; ++i) {
    std::vector<int64_t> counts(e, 0);
    for (size_t x = 0; x < n; ++x) counts[chars[i][x]]++;  // row sum
    bool triv = true;
    for (size_t x = 0; x < n; ++x)
      if (chars[i][x] != 0) triv = false;
    if (!counts_equal_constant(counts, e, triv ? int64_t(n) : 0))
      throw std::logic_error("abelian table: row orthogonality failed");
  }
  for (size_t x = 0; x < n; ++x) {
    std::vector<int64_t> counts(e, 0);
    for (size_t i = 0; i < n; ++i) counts[chars[i][x]]++;  // column sum
    if (!counts_equal_constant(counts, e, x == 0 ? int64_t(n) : 0))
      throw std::logic_error("abelian table: column orthogonality failed");
  }

  // classes of an abelian group are singletons in element order
  std::vector<Character> out;
  out.reserve(n);
  for (auto& phi : chars) {
    Character ch;
    ch.irreducible = true;
    ch.f.group = G;
    ch.f.values.reserve(n);
    for (auto& cls : G->classes())
      ch.f.values.push_back(Cyclotomic::root_of_unity(e, phi[cls.rep]));
    out.push_back(std::move(ch));
  }
  return out;
}

// ---- Dixon over GF(p) -----------------------------------------------------

GfpMat class_matrix(GroupPtr G, size_t i, const GfpCtx& F) {
  const auto& cls = G->classes();
  size_t k = cls.size();
  auto M = GfpMat::zero(k);
  const auto& cof = G->class_of();
  for (size_t l = 0; l < k; ++l) {
    EIdx z = cls[l].rep;
    for (EIdx x : cls[i].members) {
      EIdx y = G->mul(G->inv(x), z);
      M.at(cof[y], l) = F.add(M.at(cof[y], l), 1);
    }
  }
  return M;
}

uint64_t primitive_root(const GfpCtx& F) {
  auto fac = factorize((int64_t)F.p - 1);
  for (uint64_t w = 2; w < F.p; ++w) {
    bool ok = true;
    for (auto& [q, ee] : fac)
      if (F.pow(w, (F.p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  throw std::logic_error("no primitive root");
}

std::vector<Character> dixon_attempt(GroupPtr G, int64_t p) {
  const GfpCtx F{uint64_t(p)};
  const auto& cls = G->classes();
  size_t k = cls.size();
  int64_t n = (int64_t)G->order();

  auto vs = eigen_split_stream(
      k, k - 1, [&](size_t i) { return class_matrix(G, i + 1, F); }, F);
  if (vs.size() != k) throw SplitError("wrong eigenvector count");

  uint64_t w = primitive_root(F);
  std::vector<uint64_t> inv_size(k), inv_class(k);
  for (size_t l = 0; l < k; ++l) {
    inv_size[l] = F.inv(cls[l].members.size() % F.p);
    inv_class[l] = G->power_class(l, -1);
  }

  int64_t dmax = (int64_t)std::sqrt((double)n) + 1;
  while (dmax * dmax > n) --dmax;

  std::vector<Character> out;
  for (auto& v0 : vs) {
    GfpVec v = v0;
    if (v[0] == 0) throw SplitError("eigenvector vanishes at identity class");
    uint64_t s0 = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, s0);
    uint64_t s = 0;
    for (size_t l = 0; l < k; ++l)
      s = F.add(s, F.mul(F.mul(v[l], v[inv_class[l]]), inv_size[l]));
    if (s == 0) throw SplitError("zero norm");
    uint64_t dd = F.mul(uint64_t(n % p), F.inv(s));
    int64_t deg = 0;
    for (int64_t d = 1; d <= dmax; ++d)
      if (n % d == 0 && F.mul(d, d) == dd) {
        if (deg != 0) throw SplitError("ambiguous degree");
        deg = d;
      }
    if (deg == 0) throw SplitError("no degree found");

    Character ch;
    ch.irreducible = true;
    ch.f.group = G;
    ch.f.values.resize(k);
    std::vector<uint64_t> chi_p(k);
    for (size_t l = 0; l < k; ++l)
      chi_p[l] = F.mul(F.mul(uint64_t(deg), v[l]), inv_size[l]);
    for (size_t l = 0; l < k; ++l) {
      int64_t m = G->element_order(cls[l].rep);
      uint64_t xi = F.pow(w, (F.p - 1) / m);
      uint64_t xi_inv = F.inv(xi);
      uint64_t minv = F.inv(uint64_t(m % p));
      std::vector<Cyclotomic::Term> terms;
      int64_t total = 0;
      for (int64_t u = 0; u < m; ++u) {
        uint64_t acc = 0, xt = 1;
        uint64_t xiu = F.pow(xi_inv, uint64_t(u));
        for (int64_t t = 0; t < m; ++t) {
          acc = F.add(acc, F.mul(chi_p[G->power_class(l, t)], xt));
          xt = F.mul(xt, xiu);
        }
        uint64_t au = F.mul(acc, minv);
        if (au > uint64_t(deg)) throw SplitError("multiplicity out of range");
        if (au != 0) terms.push_back({uint32_t(u), Rational(int64_t(au))});
        total += int64_t(au);
      }
      if (total != deg) throw SplitError("multiplicities do not sum to degree");
      ch.f.values[l] = Cyclotomic::from_terms(m, std::move(terms));
    }
    out.push_back(std::move(ch));
  }
  return out;
}

// ---- verification ---------------------------------------------------------

struct LiftedTerms {
  // per character, per class: list of (exponent mod L, int64 coefficient)
  std::vector<std::vector<std::vector<std::pair<int64_t, int64_t>>>> t;
};

LiftedTerms lift_terms(const std::vector<Character>& irr, int64_t L) {
  LiftedTerms lt;
  lt.t.resize(irr.size());
  for (size_t i = 0; i < irr.size(); ++i) {
    lt.t[i].resize(irr[i].f.values.size());
    for (size_t c = 0; c < irr[i].f.values.size(); ++c) {
      const auto& v = irr[i].f.values[c];
      if (L % v.conductor() != 0)
        throw std::logic_error("verify: conductor does not divide exponent");
      int64_t step = L / v.conductor();
      for (auto& [ee, cc] : v.terms()) {
        if (boost::multiprecision::denominator(cc) != 1)
          throw std::logic_error("verify: non-integral character value");
        lt.t[i][c].push_back(
            {int64_t(ee) * step % L,
             boost::multiprecision::numerator(cc).convert_to<int64_t>()});
      }
    }
  }
  return lt;
}

void verify_nonabelian_table(GroupPtr G, const std::vector<Character>& irr) {
  const auto& cls = G->classes();
  size_t k = cls.size();
  int64_t n = (int64_t)G->order();
  int64_t L = normalized_exponent_conductor(G);
  auto lt = lift_terms(irr, L);

  // row orthogonality: sum_c |C_c| chi_i(c) conj(chi_j(c)) = delta * |G|
  std::vector<int64_t> counts(L);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i; j < k; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (size_t c = 0; c < k; ++c) {
        int64_t w = (int64_t)cls[c].members.size();
        for (auto& [ea, ca] : lt.t[i][c])
          for (auto& [eb, cb] : lt.t[j][c]) {
            int64_t ee = ea - eb;
            if (ee < 0) ee += L;
            counts[ee] += w * ca * cb;
          }
      }
      if (!counts_equal_constant(counts, L, i == j ? n : 0))
        throw std::logic_error("table verification: row orthogonality failed");
    }
  // column orthogonality: sum_chi chi(c) conj(chi(d)) = delta * |C_G(x_c)|
  for (size_t c = 0; c < k; ++c)
    for (size_t d = c; d < k; ++d) {
      std::fill(counts.begin(), counts.end(), 0);
      for (size_t i = 0; i < k; ++i)
        for (auto& [ea, ca] : lt.t[i][c])
          for (auto& [eb, cb] : lt.t[i][d]) {
            int64_t ee = ea - eb;
            if (ee < 0) ee += L;
            counts[ee] += ca * cb;
          }
      int64_t cent = n / (int64_t)cls[c].members.size();
      if (!counts_equal_constant(counts, L, c == d ? cent : 0))
        throw std::logic_error("table verification: column orthogonality failed");
    }
}

void sort_canonical(std::vector<Character>& irr) {
  std::sort(irr.begin(), irr.end(), [](const Character& a, const Character& b) {
    const auto &va = a.f.values, &vb = b.f.values;
    bool ra = va[0].is_rational(), rb = vb[0].is_rational();
    if (ra && rb && va[0] != vb[0])
      return va[0].rational_value() < vb[0].rational_value();
    for (size_t c = 0; c < va.size(); ++c) {
      if (va[c] != vb[c]) return cyclo_less(vb[c], va[c]);
    }
    return false;
  });
}

}  // namespace

TablePtr character_table(GroupPtr G) {
  if (auto a = G->attachment("chartab"))
    return std::static_pointer_cast<const CharacterTable>(a);

  std::vector<Character> irr;
  if (G->is_abelian()) {
    irr = abelian_irr(G);
    sort_canonical(irr);
  } else {
    int64_t e = G->exponent();
    int64_t lower = (int64_t)(4.0 * std::sqrt((double)G->order())) + 1;
    int64_t p = dixon_prime(e, lower);
    int attempts = 0;
    while (true) {
      try {
        irr = dixon_attempt(G, p);
        sort_canonical(irr);
        verify_nonabelian_table(G, irr);
        break;
      } catch (const SplitError&) {
        if (++attempts >= 8)
          throw std::runtime_error(
              "character_table: prime search exhausted; raise cap");
        p = dixon_prime(e, p);
      } catch (const std::logic_error&) {
        if (++attempts >= 8)
          throw std::runtime_error(
              "character_table: verification kept failing; raise cap");
        p = dixon_prime(e, p);
      }
    }
  }

  // sum of squared degrees
  int64_t ssq = 0;
  for (auto& ch : irr) ssq += ch.degree() * ch.degree();
  if (ssq != (int64_t)G->order())
    throw std::logic_error("table verification: degree sum failed");

  auto t = std::make_shared<CharacterTable>();
  t->group = G;
  t->irr = std::move(irr);
  G->set_attachment("chartab", std::static_pointer_cast<void>(
                                   std::shared_ptr<CharacterTable>(t)));
  return t;
}

}  // namespace qext
