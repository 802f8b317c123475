#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "collar/common.hpp"

namespace collar {

/// A permutation of {0..n-1}, stored as its image array.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw ValidationError("permutation images are not a bijection of {0..n-1}");
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  /// Cycle notation helper: apply the cycle (c0 c1 ... ck) to the identity.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int from = c[i];
        int to = c[(i + 1) % c.size()];
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw ValidationError("cycle entry out of range");
        im[from] = to;
      }
    }
    return Permutation(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)); b acts first.
  Permutation operator*(const Permutation& b) const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = images_[b.images_[i]];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  int order() const {
    Permutation p = *this;
    int k = 1;
    while (!p.is_identity()) {
      p = p * (*this);
      ++k;
    }
    return k;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b9;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace collar
