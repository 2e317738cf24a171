#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <vector>

#include "hatlab/braid.hpp"

namespace hatlab::testing {

inline BraidWord random_word(std::mt19937_64& rng, int n, int max_len, bool positive = false) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), sign(0, 1);
  BraidWord w{n, {}};
  int l = len(rng);
  for (int i = 0; i < l; ++i) w.letters.push_back((positive || sign(rng)) ? gen(rng) : -gen(rng));
  return w;
}

// One relation applied somewhere in w: free insertion or cancellation, far
// commutation, or a braid relation. Returns false if nothing applied.
inline bool random_rewrite(std::mt19937_64& rng, BraidWord& w) {
  auto& L = w.letters;
  const int n = w.strands;
  std::uniform_int_distribution<int> kind(0, 3);
  for (int attempt = 0; attempt < 20; ++attempt) {
    int k = kind(rng);
    std::size_t sz = L.size();
    if (k == 0) {
      std::uniform_int_distribution<std::size_t> pos(0, sz);
      std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
      int g = gen(rng) * (sign(rng) ? 1 : -1);
      auto at = L.begin() + static_cast<std::ptrdiff_t>(pos(rng));
      at = L.insert(at, -g);
      L.insert(at, g);
      return true;
    }
    if (sz < 2) continue;
    std::uniform_int_distribution<std::size_t> pos(0, sz - 2);
    std::size_t i = pos(rng);
    if (k == 1 && L[i] == -L[i + 1]) {
      L.erase(L.begin() + static_cast<std::ptrdiff_t>(i), L.begin() + static_cast<std::ptrdiff_t>(i + 2));
      return true;
    }
    if (k == 2 && std::abs(std::abs(L[i]) - std::abs(L[i + 1])) > 1) {
      std::swap(L[i], L[i + 1]);
      return true;
    }
    if (k == 3 && i + 2 < sz) {
      int a = L[i], b = L[i + 1], c = L[i + 2];
      // s_a s_b s_a = s_b s_a s_b with |a| - |b| = +-1, all of one sign
      if (a == c && std::abs(std::abs(a) - std::abs(b)) == 1 && (a > 0) == (b > 0)) {
        L[i] = b;
        L[i + 1] = a;
        L[i + 2] = b;
        return true;
      }
    }
  }
  return false;
}

// Unreduced Burau representation over Z/p at a fixed t: a homomorphism, faithful on B_3.
class Burau {
 public:
  static constexpr std::uint64_t P = 2147483647ull;

  explicit Burau(std::uint64_t t) : t_(t % P), tinv_(pow(t % P, P - 2)) {}

  std::vector<std::uint64_t> image(const BraidWord& w) const {
    const int n = w.strands;
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
    for (int l : w.letters) {
      int i = std::abs(l) - 1;
      // right-multiply by the 2x2 block acting on columns i, i+1
      std::uint64_t a, b, c, d;
      if (l > 0) {
        a = (1 + P - t_) % P, b = t_, c = 1, d = 0;
      } else {
        a = 0, b = 1, c = tinv_, d = (1 + P - tinv_) % P;
      }
      for (int r = 0; r < n; ++r) {
        std::uint64_t x = m[static_cast<std::size_t>(r * n + i)], y = m[static_cast<std::size_t>(r * n + i + 1)];
        m[static_cast<std::size_t>(r * n + i)] = (x * a + y * c) % P;
        m[static_cast<std::size_t>(r * n + i + 1)] = (x * b + y * d) % P;
      }
    }
    return m;
  }

 private:
  static std::uint64_t pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= P; e; e >>= 1, b = b * b % P)
      if (e & 1) r = r * b % P;
    return r;
  }
  std::uint64_t t_, tinv_;
};

// Equal Burau images at several random points.
inline bool burau_equal(const BraidWord& a, const BraidWord& b) {
  for (std::uint64_t t : {7919ull, 104729ull, 1299709ull, 15485863ull})
    if (Burau(t).image(a) != Burau(t).image(b)) return false;
  return true;
}

}  // namespace hatlab::testing
