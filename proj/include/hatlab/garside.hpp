#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hatlab/braid.hpp"
#include "hatlab/permutation.hpp"

namespace hatlab {

// Left normal form Delta^inf * A_1 ... A_k with each A_j a permutation braid,
// none equal to Delta or the identity, and every adjacent pair left-weighted.
// Two words are equal in B_n exactly when their normal forms coincide.
struct NormalForm {
  int strands = 1;
  std::int64_t inf = 0;
  std::vector<Permutation> factors;

  std::int64_t sup() const { return inf + static_cast<std::int64_t>(factors.size()); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

namespace garside {

// A positive braid whose strands pairwise cross at most once, identified with
// its permutation p (p[j] = final position of the strand starting at j).

// i is a final letter of p: p = q * s_i as permutation braids.
inline bool ends_with(const Permutation& p, int i) {
  Permutation inv = p.inverse();
  return inv[i] > inv[i + 1];
}

// i is an initial letter of p: p = s_i * q.
inline bool starts_with(const Permutation& p, int i) { return p[i] > p[i + 1]; }

// Delta p Delta^-1
inline Permutation flip(const Permutation& p) {
  int n = p.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = n - 1 - p[n - 1 - j];
  return Permutation(std::move(img));
}

inline Permutation flip_times(const Permutation& p, std::int64_t times) {
  return (times % 2 == 0) ? p : flip(p);
}

// Rewrites (a, b) in place so that a becomes the longest permutation-braid
// prefix of a*b. Returns true if anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  bool moved = false;
  int n = a.size();
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        Permutation s = Permutation::transposition(n, i);
        a = a * s;
        b = s * b;
        moved = again = true;
      }
    }
  }
  return moved;
}

// A positive word spelling the permutation braid p.
inline std::vector<int> spell(const Permutation& p) {
  std::vector<int> out;
  Permutation q = p;
  int n = q.size();
  while (!q.is_identity()) {
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(q, i)) {
        out.push_back(i + 1);
        q = Permutation::transposition(n, i) * q;
        break;
      }
    }
  }
  return out;
}

}  // namespace garside

inline NormalForm normal_form(const BraidWord& w) {
  using namespace garside;
  const int n = w.strands;
  NormalForm nf;
  nf.strands = n;
  if (n < 2) return nf;
  const Permutation delta = Permutation::reversal(n);

  // s_i^-1 = Delta^-1 * (Delta s_i^-1); push every Delta^-1 to the front,
  // flipping the simple factors it passes over.
  std::vector<std::pair<std::int64_t, Permutation>> raw;  // (Deltas to its left, factor)
  std::int64_t neg = 0;
  for (int l : w.letters) {
    int i = std::abs(l) - 1;
    if (l > 0) {
      raw.push_back({neg, Permutation::transposition(n, i)});
    } else {
      ++neg;
      Permutation co = delta * Permutation::transposition(n, i);  // Delta s_i^-1 as a permutation
      raw.push_back({neg, co});
    }
  }
  // Moving Delta^-neg past a factor preceded by d of them flips it (neg - d) times.
  std::vector<Permutation> factors;
  factors.reserve(raw.size());
  for (auto& [d, f] : raw) factors.push_back(flip_times(f, neg - d));
  nf.inf = -neg;

  // Insert factors one at a time into a left-weighted list.
  std::vector<Permutation> list;
  for (auto& f : factors) {
    list.push_back(f);
    for (std::size_t j = list.size() - 1; j > 0; --j) {
      if (!left_weight(list[j - 1], list[j])) break;
    }
    // identity factors drift to the end
    while (!list.empty() && list.back().is_identity()) list.pop_back();
  }
  // Deltas collect at the front.
  std::size_t lead = 0;
  while (lead < list.size() && list[lead] == delta) ++lead;
  nf.inf += static_cast<std::int64_t>(lead);
  for (std::size_t j = lead; j < list.size(); ++j) {
    // Moving a Delta past earlier factors flips them; all the Deltas here are
    // already in front so remaining factors stay put.
    nf.factors.push_back(list[j]);
  }
  return nf;
}

inline bool equal(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (underlying_permutation(a) != underlying_permutation(b)) return false;
  return normal_form(a) == normal_form(b);
}

// Positive word for Delta^inf A_1 ... A_k (Delta^-1 spelled with inverses).
inline BraidWord to_word(const NormalForm& nf) {
  BraidWord w{nf.strands, {}};
  if (nf.strands < 2) return w;
  BraidWord d = half_twist(nf.strands);
  w = power(d, static_cast<int>(nf.inf));
  for (const auto& f : nf.factors)
    for (int l : garside::spell(f)) w.letters.push_back(l);
  return w;
}

inline std::string to_string(const NormalForm& nf) {
  std::string s = "D^" + std::to_string(nf.inf);
  for (const auto& f : nf.factors) s += " " + f.to_string();
  return s;
}

}  // namespace hatlab

template <>
struct std::hash<hatlab::NormalForm> {
  std::size_t operator()(const hatlab::NormalForm& nf) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(nf.inf) ^ (static_cast<std::size_t>(nf.strands) << 48);
    for (const auto& f : nf.factors)
      for (int v : f.images()) h = h * 1099511628211ull + static_cast<std::size_t>(v);
    return h;
  }
};
