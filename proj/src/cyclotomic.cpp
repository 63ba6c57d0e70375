#include "qext/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qext {

namespace {

// ---- conductor registry ------------------------------------------------

struct ConductorData {
  int64_t n = 1;
  int64_t phi = 1;
  int64_t tmax = 0;                       // reduction rows cover [phi, tmax]
  std::vector<int64_t> cyclo;             // Phi_n coefficients, degree phi
  std::vector<std::vector<int64_t>> red;  // red[t - phi] = x^t mod Phi_n
};

/// Phi_n via division of x^n - 1 by all proper-divisor cyclotomics.
std::vector<int64_t> cyclotomic_poly(int64_t n,
                                     std::map<int64_t, std::vector<int64_t>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int64_t d : divisors(n)) {
    if (d == n) continue;
    auto phi_d = cyclotomic_poly(d, memo);
    // exact division num /= phi_d
    std::vector<int64_t> q(num.size() - phi_d.size() + 1, 0);
    std::vector<int64_t> r = num;
    for (int64_t i = (int64_t)q.size() - 1; i >= 0; --i) {
      int64_t c = r[i + phi_d.size() - 1];  // phi_d is monic
      q[i] = c;
      if (c != 0)
        for (size_t j = 0; j < phi_d.size(); ++j) r[i + j] -= c * phi_d[j];
    }
    for (int64_t c : r)
      if (c != 0) throw std::logic_error("cyclotomic_poly: division not exact");
    num = std::move(q);
  }
  memo[n] = num;
  return num;
}

std::shared_ptr<const ConductorData> conductor_data(int64_t n) {
  static std::mutex mu;
  static std::map<int64_t, std::shared_ptr<const ConductorData>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n <= 0 || n % 4 == 2)
    throw std::logic_error("conductor_data: invalid conductor");
  auto d = std::make_shared<ConductorData>();
  d->n = n;
  d->phi = euler_phi(n);
  {
    std::map<int64_t, std::vector<int64_t>> memo;
    d->cyclo = cyclotomic_poly(n, memo);
  }
  d->tmax = std::max(n - 1, 2 * d->phi - 2);
  d->red.reserve(d->tmax - d->phi + 1);
  std::vector<int64_t> cur(d->phi, 0);
  // x^phi = -(lower part of Phi_n)
  for (int64_t i = 0; i < d->phi; ++i) cur[i] = -d->cyclo[i];
  d->red.push_back(cur);
  for (int64_t t = d->phi + 1; t <= d->tmax; ++t) {
    int64_t top = cur[d->phi - 1];
    for (int64_t i = d->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int64_t i = 0; i < d->phi; ++i) {
        cur[i] += top * -d->cyclo[i];
        if (cur[i] > (int64_t(1) << 42) || cur[i] < -(int64_t(1) << 42))
          throw std::overflow_error("cyclotomic reduction row overflow");
      }
    d->red.push_back(cur);
  }
  cache[n] = d;
  return d;
}

// ---- subfield rewrite (conductor minimization) --------------------------

struct SubfieldSolver {
  int64_t n, m;
  // lift: coords over conductor n of zeta_m^j, j < phi(m) (columns)
  std::vector<std::vector<Rational>> lift;   // phi(n) rows x phi(m) cols
  std::vector<int64_t> pivot_rows;           // phi(m) row indices
  std::vector<std::vector<Rational>> inv;    // inverse of pivot submatrix
};

std::shared_ptr<const SubfieldSolver> subfield_solver(int64_t n, int64_t m) {
  static std::mutex mu;
  static std::map<std::pair<int64_t, int64_t>, std::shared_ptr<const SubfieldSolver>>
      cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(n, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto dn = conductor_data(n);
  auto dm = conductor_data(m);
  auto s = std::make_shared<SubfieldSolver>();
  s->n = n;
  s->m = m;
  int64_t step = n / m;
  s->lift.assign(dn->phi, std::vector<Rational>(dm->phi, Rational(0)));
  for (int64_t j = 0; j < dm->phi; ++j) {
    int64_t e = j * step;  // exponent of zeta_n
    if (e < dn->phi) {
      s->lift[e][j] = 1;
    } else {
      const auto& row = dn->red[e - dn->phi];
      for (int64_t i = 0; i < dn->phi; ++i)
        if (row[i] != 0) s->lift[i][j] = Rational(row[i]);
    }
  }
  // row echelon to select pivot rows, then invert the square submatrix
  std::vector<std::vector<Rational>> work = s->lift;
  std::vector<char> used(dn->phi, 0);
  for (int64_t col = 0; col < dm->phi; ++col) {
    int64_t pr = -1;
    for (int64_t r = 0; r < dn->phi; ++r)
      if (!used[r] && work[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) throw std::logic_error("subfield_solver: singular lift");
    used[pr] = 1;
    s->pivot_rows.push_back(pr);
    Rational inv_p = Rational(1) / work[pr][col];
    for (int64_t c = 0; c < dm->phi; ++c) work[pr][c] *= inv_p;
    for (int64_t r = 0; r < dn->phi; ++r) {
      if (r == pr || work[r][col] == 0) continue;
      Rational f = work[r][col];
      for (int64_t c = 0; c < dm->phi; ++c) work[r][c] -= f * work[pr][c];
    }
  }
  std::sort(s->pivot_rows.begin(), s->pivot_rows.end());
  // invert submatrix lift[pivot_rows][:]
  int64_t k = dm->phi;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k, Rational(0)));
  for (int64_t r = 0; r < k; ++r) {
    for (int64_t c = 0; c < k; ++c) a[r][c] = s->lift[s->pivot_rows[r]][c];
    a[r][k + r] = 1;
  }
  for (int64_t col = 0; col < k; ++col) {
    int64_t pr = -1;
    for (int64_t r = col; r < k; ++r)
      if (a[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) throw std::logic_error("subfield_solver: singular submatrix");
    std::swap(a[col], a[pr]);
    Rational ip = Rational(1) / a[col][col];
    for (int64_t c = 0; c < 2 * k; ++c) a[col][c] *= ip;
    for (int64_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int64_t c = 0; c < 2 * k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  s->inv.assign(k, std::vector<Rational>(k));
  for (int64_t r = 0; r < k; ++r)
    for (int64_t c = 0; c < k; ++c) s->inv[r][c] = a[r][k + c];
  cache[key] = s;
  return s;
}

int64_t normalize_conductor(int64_t n) {
  while (n % 4 == 2) n /= 2;  // Q(zeta_{2m}) = Q(zeta_m) for odd m
  return n;
}

}  // namespace

int64_t common_conductor(int64_t a, int64_t b) {
  return normalize_conductor(std::lcm(a, b));
}

// ---- Cyclotomic ---------------------------------------------------------

Cyclotomic::Cyclotomic(const Rational& r) {
  n_ = 1;
  if (r != 0) c_.push_back({0, r});
}

Cyclotomic Cyclotomic::from_terms(int64_t n, std::vector<Term> terms) {
  Cyclotomic z;
  z.canonicalize(n, std::move(terms));
  return z;
}

Cyclotomic Cyclotomic::root_of_unity(int64_t n, int64_t k) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: n <= 0");
  k %= n;
  if (k < 0) k += n;
  int64_t g = std::gcd(n, k == 0 ? n : k);
  n /= g;
  k /= g;
  return from_terms(n, {{uint32_t(k), Rational(1)}});
}

void Cyclotomic::canonicalize(int64_t n, std::vector<Term> raw) {
  while (n % 4 == 2) {
    // zeta_{2m}^u = (-1)^u zeta_m^{u(m+1)/2 mod m} for odd m
    int64_t m = n / 2;
    for (auto& [ee, cc] : raw) {
      int64_t u = ee;
      if (u % 2 == 1) cc = -cc;
      ee = uint32_t((u * ((m + 1) / 2)) % m);
    }
    n = m;
  }
  // fast path: a single primitive-root term is already canonical
  if (raw.size() == 1 && raw[0].second != 0 && n > 1) {
    int64_t e = raw[0].first;
    int64_t g = std::gcd(e == 0 ? n : e, n);
    if (g > 1) {
      raw[0].first = uint32_t(e / g);
      canonicalize(n / g, std::move(raw));
      return;
    }
    if (e < euler_phi(n)) {
      n_ = uint32_t(n);
      c_ = std::move(raw);
      return;
    }
  }
  auto d = conductor_data(n);
  // combine duplicate exponents; reduce exponents >= phi(n)
  std::vector<Rational> dense(d->phi, Rational(0));
  for (auto& [e, c] : raw) {
    if (c == 0) continue;
    if (e < d->phi) {
      dense[e] += c;
    } else {
      if (e > d->tmax) throw std::logic_error("canonicalize: exponent out of range");
      const auto& row = d->red[e - d->phi];
      for (int64_t i = 0; i < d->phi; ++i)
        if (row[i] != 0) dense[i] += c * row[i];
    }
  }
  // strip primes while the value lives in a smaller cyclotomic field
  bool shrunk = true;
  while (shrunk && n > 1) {
    shrunk = false;
    bool all_zero = true;
    for (auto& x : dense)
      if (x != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      n = 1;
      break;
    }
    if (n == 1) break;
    for (int64_t p : prime_divisors(n)) {
      int64_t m = normalize_conductor(n / p);
      if (m == n) continue;
      // Galois invariance under {k = 1 mod n/p} checks membership in Q(zeta_m)
      int64_t m0 = n / p;
      bool invariant = true;
      for (int64_t t = 1; t < p && invariant; ++t) {
        int64_t k = 1 + m0 * t;
        if (std::gcd(k, n) != 1) continue;
        // apply sigma_k to dense, compare
        std::vector<Rational> img(d->phi, Rational(0));
        for (int64_t e = 0; e < d->phi; ++e) {
          if (dense[e] == 0) continue;
          int64_t e2 = (e * k) % n;
          if (e2 < d->phi) {
            img[e2] += dense[e];
          } else {
            const auto& row = d->red[e2 - d->phi];
            for (int64_t i = 0; i < d->phi; ++i)
              if (row[i] != 0) img[i] += dense[e] * row[i];
          }
        }
        for (int64_t i = 0; i < d->phi && invariant; ++i)
          if (img[i] != dense[i]) invariant = false;
      }
      if (!invariant) continue;
      auto sol = subfield_solver(n, m);
      auto dm = conductor_data(m);
      std::vector<Rational> x(dm->phi, Rational(0));
      for (int64_t r = 0; r < dm->phi; ++r)
        for (int64_t c = 0; c < dm->phi; ++c)
          if (sol->inv[r][c] != 0)
            x[r] += sol->inv[r][c] * dense[sol->pivot_rows[c]];
      // verify lift(x) == dense
      for (int64_t r = 0; r < d->phi; ++r) {
        Rational acc(0);
        for (int64_t c = 0; c < dm->phi; ++c)
          if (sol->lift[r][c] != 0) acc += sol->lift[r][c] * x[c];
        if (acc != dense[r])
          throw std::logic_error("canonicalize: subfield rewrite failed");
      }
      n = m;
      d = dm;
      dense = std::move(x);
      shrunk = true;
      break;
    }
  }
  n_ = uint32_t(n);
  c_.clear();
  if (n == 1) {
    // dense may be length phi(old) -> only index 0 relevant after shrink
    if (!dense.empty() && dense[0] != 0) c_.push_back({0, dense[0]});
    return;
  }
  for (size_t e = 0; e < dense.size(); ++e)
    if (dense[e] != 0) c_.push_back({uint32_t(e), dense[e]});
}

bool Cyclotomic::is_rational() const { return n_ == 1; }

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::logic_error("rational_value: not rational");
  return c_.empty() ? Rational(0) : c_[0].second;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int64_t L = common_conductor(n_, o.n_);
  std::vector<Term> raw;
  raw.reserve(c_.size() + o.c_.size());
  for (auto& [e, c] : c_) raw.push_back({uint32_t(e * (L / n_)), c});
  for (auto& [e, c] : o.c_) raw.push_back({uint32_t(e * (L / o.n_)), c});
  return from_terms(L, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& [e, c] : z.c_) c = -c;
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  if (r == 0) return Cyclotomic();
  Cyclotomic z = *this;
  for (auto& [e, c] : z.c_) c *= r;
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (n_ == 1) return o * rational_value();
  if (o.n_ == 1) return *this * o.rational_value();
  int64_t L = common_conductor(n_, o.n_);
  int64_t sa = L / n_, sb = L / o.n_;
  std::vector<Term> raw;
  raw.reserve(c_.size() * o.c_.size());
  for (auto& [ea, ca] : c_)
    for (auto& [eb, cb] : o.c_) {
      int64_t e = (int64_t(ea) * sa + int64_t(eb) * sb) % L;
      raw.push_back({uint32_t(e), ca * cb});
    }
  return from_terms(L, std::move(raw));
}

Cyclotomic Cyclotomic::galois(int64_t k) const {
  if (n_ == 1) return *this;
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, (int64_t)n_) != 1)
    throw std::invalid_argument("galois: k not coprime to conductor");
  std::vector<Term> raw;
  raw.reserve(c_.size());
  for (auto& [e, c] : c_) raw.push_back({uint32_t((int64_t(e) * k) % n_), c});
  return from_terms(n_, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(int64_t(n_) - 1); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / rational_value());
  if (c_.size() == 1) {
    // c * zeta^e: inverse = (1/c) * zeta^{-e}
    auto z = root_of_unity(n_, -(int64_t)c_[0].first);
    return z * (Rational(1) / c_[0].second);
  }
  auto d = conductor_data(n_);
  int64_t k = d->phi;
  // multiplication-by-a matrix: column i = coords of a * zeta^i
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, Rational(0)));
  for (int64_t i = 0; i < k; ++i) {
    for (auto& [e, c] : c_) {
      int64_t t = e + i;
      if (t < k) {
        m[t][i] += c;
      } else {
        const auto& row = d->red[t - k];
        for (int64_t r = 0; r < k; ++r)
          if (row[r] != 0) m[r][i] += c * row[r];
      }
    }
  }
  m[0][k] = 1;  // rhs e0
  // Gaussian elimination
  for (int64_t col = 0; col < k; ++col) {
    int64_t pr = -1;
    for (int64_t r = col; r < k; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) throw std::logic_error("inverse: singular multiplication matrix");
    std::swap(m[col], m[pr]);
    Rational ip = Rational(1) / m[col][col];
    for (int64_t c = col; c <= k; ++c) m[col][c] *= ip;
    for (int64_t r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int64_t c = col; c <= k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Term> raw;
  for (int64_t i = 0; i < k; ++i)
    if (m[i][k] != 0) raw.push_back({uint32_t(i), m[i][k]});
  return from_terms(n_, std::move(raw));
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r(Rational(1)), x = *this;
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

bool Cyclotomic::is_algebraic_integer() const {
  for (auto& [e, c] : c_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

int64_t Cyclotomic::root_of_unity_order() const {
  if (is_zero()) return 0;
  int64_t L = (n_ % 2 == 1) ? 2 * int64_t(n_) : int64_t(n_);
  if (!(pow(L).is_one())) return 0;
  for (int64_t d : divisors(L))
    if (pow(d).is_one()) return d;
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a;
    } else {
      if (a == -1) os << "-";
      else if (a != 1) os << a << "*";
      os << "z" << n_;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  const auto &ta = a.terms(), &tb = b.terms();
  size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    uint32_t ea = i < ta.size() ? ta[i].first : UINT32_MAX;
    uint32_t eb = j < tb.size() ? tb[j].first : UINT32_MAX;
    if (ea < eb) {
      // a has a nonzero coefficient where b has zero
      return ta[i].second < 0;
    }
    if (eb < ea) {
      return !(tb[j].second < 0);
    }
    if (ta[i].second != tb[j].second) return ta[i].second < tb[j].second;
    ++i;
    ++j;
  }
  return false;
}

// ---- CycloAccum ---------------------------------------------------------

CycloAccum::CycloAccum(int64_t L) : L_(normalize_conductor(L)) {
  dense_.assign(L_, Rational(0));
}

void CycloAccum::add(const Cyclotomic& a) { add_scaled(a, Rational(1)); }

void CycloAccum::add_scaled(const Cyclotomic& a, const Rational& s) {
  int64_t step = L_ / a.conductor();
  if (step * a.conductor() != L_)
    throw std::logic_error("CycloAccum: conductor does not divide L");
  for (auto& [e, c] : a.terms()) dense_[(int64_t(e) * step) % L_] += c * s;
}

void CycloAccum::add_mul(const Cyclotomic& a, const Cyclotomic& b, bool conj_b,
                         const Rational& s) {
  if (a.is_zero() || b.is_zero()) return;
  int64_t na = a.conductor(), nb = b.conductor();
  int64_t sa = L_ / na, sb = L_ / nb;
  if (sa * na != L_ || sb * nb != L_)
    throw std::logic_error("CycloAccum: conductor does not divide L");
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) {
      int64_t e2 = conj_b ? (nb - eb) % nb : eb;
      int64_t e = (int64_t(ea) * sa + e2 * sb) % L_;
      dense_[e] += ca * cb * s;
    }
}

Cyclotomic CycloAccum::finish(const Rational& divide_by) const {
  std::vector<Cyclotomic::Term> raw;
  for (int64_t e = 0; e < L_; ++e)
    if (dense_[e] != 0) raw.push_back({uint32_t(e), dense_[e] / divide_by});
  return Cyclotomic::from_terms(L_, std::move(raw));
}

}  // namespace qext
