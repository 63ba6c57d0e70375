#include "qext/builtins.hpp"

#include <array>
#include <stdexcept>

namespace qext {

GroupPtr cyclic_group(int64_t n) {
  if (n < 1 || n > order_cap()) throw std::invalid_argument("cyclic: bad n");
  if (n == 1)
    return FiniteGroup::from_generators({}, 1);
  std::vector<Point> img(n);
  for (int64_t i = 0; i < n; ++i) img[i] = Point((i + 1) % n);
  return FiniteGroup::from_generators({Permutation(std::move(img))}, n);
}

GroupPtr dihedral_group(int64_t n) {
  if (n < 1 || 2 * n > order_cap()) throw std::invalid_argument("dihedral: bad n");
  if (n == 1) return cyclic_group(2);
  if (n == 2) {
    // Klein four group on 4 points
    auto a = Permutation::from_cycles(4, {{0, 1}});
    auto b = Permutation::from_cycles(4, {{2, 3}});
    return FiniteGroup::from_generators({a, b}, 4);
  }
  std::vector<Point> rot(n), refl(n);
  for (int64_t i = 0; i < n; ++i) {
    rot[i] = Point((i + 1) % n);
    refl[i] = Point((n - i) % n);
  }
  return FiniteGroup::from_generators(
      {Permutation(std::move(rot)), Permutation(std::move(refl))}, n);
}

GroupPtr symmetric_group(int64_t n) {
  if (n < 1) throw std::invalid_argument("sym: bad n");
  if (n == 1) return FiniteGroup::from_generators({}, 1);
  std::vector<Point> cyc(n), swap2(n);
  for (int64_t i = 0; i < n; ++i) {
    cyc[i] = Point((i + 1) % n);
    swap2[i] = Point(i);
  }
  std::swap(swap2[0], swap2[1]);
  return FiniteGroup::from_generators(
      {Permutation(std::move(swap2)), Permutation(std::move(cyc))}, n);
}

GroupPtr alternating_group(int64_t n) {
  if (n < 1) throw std::invalid_argument("alt: bad n");
  if (n <= 2) return FiniteGroup::from_generators({}, std::max<int64_t>(n, 1));
  auto three = Permutation::from_cycles(n, {{0, 1, 2}});
  if (n == 3) return FiniteGroup::from_generators({three}, n);
  std::vector<Point> big(n);
  for (int64_t i = 0; i < n; ++i) big[i] = Point(i);
  if (n % 2 == 1) {
    for (int64_t i = 0; i < n; ++i) big[i] = Point((i + 1) % n);
  } else {
    for (int64_t i = 1; i < n; ++i) big[i] = Point(i == n - 1 ? 1 : i + 1);
  }
  return FiniteGroup::from_generators({three, Permutation(std::move(big))}, n);
}

GroupPtr quaternion_group() {
  // regular representation of Q8 = {1,-1,i,-i,j,-j,k,-k}
  // encode q = (sign, axis): index = axis*2 + (sign<0), axis in {1=1,i,j,k}
  auto idx = [](int axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
  // multiplication of unit quaternions by table on axes 0=1,1=i,2=j,3=k
  static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto mul = [&](int q1, int q2) {
    int a1 = q1 / 2, s1 = q1 % 2 ? -1 : 1;
    int a2 = q2 / 2, s2 = q2 % 2 ? -1 : 1;
    return idx(ax[a1][a2], s1 * s2 * sg[a1][a2]);
  };
  auto left = [&](int q) {
    std::vector<Point> img(8);
    for (int x = 0; x < 8; ++x) img[x] = Point(mul(q, x));
    return Permutation(std::move(img));
  };
  return FiniteGroup::from_generators({left(idx(1, 1)), left(idx(2, 1))}, 8);
}

GroupPtr sl2_group(int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sl2: p not prime");
  int64_t npts = p * p - 1;  // nonzero vectors of F_p^2
  if (npts > order_cap() * 4) throw std::invalid_argument("sl2: p too large");
  auto vec_index = [&](int64_t x, int64_t y) { return x * p + y - 1; };
  auto act = [&](std::array<int64_t, 4> m) {
    std::vector<Point> img(npts);
    for (int64_t x = 0; x < p; ++x)
      for (int64_t y = 0; y < p; ++y) {
        if (x == 0 && y == 0) continue;
        int64_t nx = (m[0] * x + m[1] * y) % p;
        int64_t ny = (m[2] * x + m[3] * y) % p;
        img[vec_index(x, y)] = Point(vec_index(nx, ny));
      }
    return Permutation(std::move(img));
  };
  // [[1,1],[0,1]] and [[0,-1],[1,0]] generate SL(2,p)
  auto t = act({1, 1, 0, 1});
  auto s = act({0, p - 1, 1, 0});
  return FiniteGroup::from_generators({t, s}, npts);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  if ((int64_t)(a->order() * b->order()) > order_cap())
    throw std::runtime_error("direct_product: order cap exceeded");
  size_t da = a->degree(), db = b->degree();
  auto embed_a = [&](const Permutation& p) {
    std::vector<Point> img(da + db);
    for (size_t i = 0; i < da; ++i) img[i] = p(Point(i));
    for (size_t i = 0; i < db; ++i) img[da + i] = Point(da + i);
    return Permutation(std::move(img));
  };
  auto embed_b = [&](const Permutation& p) {
    std::vector<Point> img(da + db);
    for (size_t i = 0; i < da; ++i) img[i] = Point(i);
    for (size_t i = 0; i < db; ++i) img[da + i] = Point(da + p(Point(i)));
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (auto& g : a->generators()) gens.push_back(embed_a(g));
  for (auto& g : b->generators()) gens.push_back(embed_b(g));
  if (gens.empty()) return FiniteGroup::from_generators({}, da + db);
  return FiniteGroup::from_generators(gens, da + db);
}

namespace {

GroupPtr parse_single(const std::string& s) {
  auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  int64_t n = -1;
  if (colon != std::string::npos) n = std::atoll(s.c_str() + colon + 1);
  if (name == "cyclic" || name == "c") return cyclic_group(n);
  if (name == "dihedral" || name == "d") return dihedral_group(n);
  if (name == "sym" || name == "s") return symmetric_group(n);
  if (name == "alt" || name == "a") return alternating_group(n);
  if (name == "quaternion8" || name == "q8") return quaternion_group();
  if (name == "sl23") return sl2_group(3);
  if (name == "sl25") return sl2_group(5);
  throw std::invalid_argument("unknown builtin: " + s);
}

}  // namespace

GroupPtr parse_builtin(const std::string& name) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    auto star = name.find('*', start);
    parts.push_back(name.substr(start, star == std::string::npos
                                           ? std::string::npos
                                           : star - start));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  GroupPtr g = parse_single(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, parse_single(parts[i]));
  return g;
}

GroupPtr group_from_generator_images(size_t degree,
                                     const std::vector<std::vector<int>>& gens) {
  std::vector<Permutation> ps;
  for (auto& g : gens) {
    if (g.size() != degree)
      throw std::invalid_argument("generator length != degree");
    std::vector<Point> img(degree);
    for (size_t i = 0; i < degree; ++i) {
      if (g[i] < 0 || (size_t)g[i] >= degree)
        throw std::invalid_argument("generator image out of range");
      img[i] = Point(g[i]);
    }
    ps.emplace_back(std::move(img));
  }
  return FiniteGroup::from_generators(ps, degree);
}

}  // namespace qext
