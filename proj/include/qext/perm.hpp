#pragma once

// Permutations in one-line notation on {0..degree-1}.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qext {

using Point = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    validate();
  }

  static Permutation identity(size_t degree) {
    std::vector<Point> v(degree);
    std::iota(v.begin(), v.end(), Point(0));
    return Permutation(std::move(v));
  }

  /// From disjoint cycles, e.g. {{0,1,2},{3,4}} on the given degree.
  static Permutation from_cycles(size_t degree,
                                 const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> v(degree);
    std::iota(v.begin(), v.end(), Point(0));
    for (auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i) v[c[i]] = c[(i + 1) % c.size()];
    return Permutation(std::move(v));
  }

  size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Composition acting on the left: (a*b)(x) = a(b(x)).
  Permutation operator*(const Permutation& o) const {
    if (degree() != o.degree())
      throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<Point> v(degree());
    for (size_t i = 0; i < v.size(); ++i) v[i] = img_[o.img_[i]];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<Point> v(degree());
    for (size_t i = 0; i < v.size(); ++i) v[img_[i]] = Point(i);
    return Permutation(std::move(v));
  }

  /// h g h^{-1}
  Permutation conjugated_by(const Permutation& h) const {
    return h * (*this) * h.inverse();
  }

  std::int64_t order() const {
    std::int64_t m = 1;
    std::vector<char> seen(degree(), 0);
    for (size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::int64_t len = 0;
      for (Point j = Point(i); !seen[j]; j = img_[j]) seen[j] = 1, ++len;
      m = std::lcm(m, len);
    }
    return m;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

 private:
  void validate() const {
    std::vector<char> seen(img_.size(), 0);
    for (Point x : img_) {
      if (x >= img_.size() || seen[x])
        throw std::invalid_argument("Permutation: images not a bijection");
      seen[x] = 1;
    }
  }

  std::vector<Point> img_;
};

struct PermHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace qext
