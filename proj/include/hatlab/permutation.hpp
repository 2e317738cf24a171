#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hatlab/error.hpp"

namespace hatlab {

// Permutation of strand positions 0..n-1. img[j] is where the strand starting
// at position j ends up. Composition follows braid words: (a * b) means a, then b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
  }
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
        throw DomainError("not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation transposition(int n, int i) {
    Permutation p(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(i) + 1]);
    return p;
  }

  // Reverses positions; the permutation of the half twist.
  static Permutation reversal(int n) {
    Permutation p(n);
    for (int j = 0; j < n; ++j) p.img_[static_cast<std::size_t>(j)] = n - 1 - j;
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int j) const { return img_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& b) const {
    if (b.size() != size()) throw DomainError("permutation size mismatch");
    Permutation r(size());
    for (int j = 0; j < size(); ++j) r.img_[static_cast<std::size_t>(j)] = b[(*this)[j]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (int j = 0; j < size(); ++j) r.img_[static_cast<std::size_t>((*this)[j])] = j;
    return r;
  }

  // Swap the contents of positions i and i+1 after this permutation.
  void apply_swap(int i) {
    for (auto& v : img_) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }

  bool is_identity() const {
    for (int j = 0; j < size(); ++j)
      if ((*this)[j] != j) return false;
    return true;
  }

  int cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (int j = 0; j < size(); ++j) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      ++cycles;
      for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (*this)[k]) seen[static_cast<std::size_t>(k)] = true;
    }
    return cycles;
  }

  // 1-based images, e.g. "[2 3 1]"
  std::string to_string() const {
    std::string s = "[";
    for (int j = 0; j < size(); ++j) {
      if (j) s += ' ';
      s += std::to_string((*this)[j] + 1);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

}  // namespace hatlab
