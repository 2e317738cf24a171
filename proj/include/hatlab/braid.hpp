#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "hatlab/error.hpp"
#include "hatlab/permutation.hpp"

namespace hatlab {

// A braid word on `strands` strands: +i is sigma_i, -i its inverse (1 <= i < strands).
// No free reduction happens implicitly; scripts address letters by position.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (n < 1) throw DomainError("a braid needs at least one strand");
    for (int l : letters)
      if (l == 0 || std::abs(l) >= n)
        throw DomainError("generator index " + std::to_string(std::abs(l)) + " out of range for B_" +
                          std::to_string(n));
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw DomainError("strand counts differ: " + std::to_string(a.strands) + " vs " + std::to_string(b.strands));
}

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline BraidWord inverse(const BraidWord& w) {
  BraidWord r{w.strands, {}};
  r.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

inline BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k < 0 ? inverse(w) : w;
  BraidWord r{w.strands, {}};
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

// ---------------------------------------------------------------- text form

namespace detail {

inline constexpr std::string_view kLetters = "xyzw";

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline bool read_uint(std::string_view s, std::size_t& i, long long& out) {
  std::size_t start = i;
  out = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    out = out * 10 + (s[i] - '0');
    if (out > 1'000'000) return false;
    ++i;
  }
  return i > start;
}

}  // namespace detail

// Letters x,y,z,w are sigma_1..sigma_4 and capitals their inverses; s<i>/S<i>
// names any generator. Each generator may carry a power ^k (k may be negative).
inline BraidWord parse_braid(std::string_view text, int strands) {
  using namespace detail;
  if (strands < 1) throw DomainError("a braid needs at least one strand");
  BraidWord w{strands, {}};
  std::size_t i = 0;
  skip_ws(text, i);
  while (i < text.size()) {
    char c = text[i];
    int gen = 0;
    bool inv = false;
    std::size_t at = i;
    if (auto p = kLetters.find(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        p != std::string_view::npos) {
      gen = static_cast<int>(p) + 1;
      inv = std::isupper(static_cast<unsigned char>(c));
      ++i;
    } else if (c == 's' || c == 'S') {
      inv = c == 'S';
      ++i;
      skip_ws(text, i);
      long long idx;
      if (!read_uint(text, i, idx) || idx == 0)
        throw ParseError("expected generator number after '" + std::string(1, c) + "' at offset " + std::to_string(at));
      gen = static_cast<int>(idx);
    } else {
      throw ParseError("unknown letter '" + std::string(1, c) + "' at offset " + std::to_string(at));
    }
    if (gen >= strands)
      throw ParseError("generator " + std::to_string(gen) + " out of range for " + std::to_string(strands) +
                       " strands at offset " + std::to_string(at));
    skip_ws(text, i);
    long long k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws(text, i);
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (!read_uint(text, i, k)) throw ParseError("malformed power at offset " + std::to_string(at));
      if (neg) k = -k;
      skip_ws(text, i);
    }
    int letter = inv ? -gen : gen;
    if (k < 0) letter = -letter;
    for (long long r = 0; r < std::llabs(k); ++r) w.letters.push_back(letter);
  }
  return w;
}

inline std::string letter_text(int letter, int strands) {
  int g = std::abs(letter);
  if (strands <= 5) {
    char c = detail::kLetters[static_cast<std::size_t>(g - 1)];
    return std::string(1, letter < 0 ? static_cast<char>(std::toupper(c)) : c);
  }
  return (letter < 0 ? "S" : "s") + std::to_string(g);
}

// Runs of a repeated letter are folded into a positive power: x^3, Y^2.
// Numeric s<i> form is used above five strands.
inline std::string to_string(const BraidWord& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    bool numeric = w.strands > 5;
    if (numeric && !out.empty()) out += ' ';
    out += letter_text(w.letters[i], w.strands);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------- invariants

inline std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t e = 0;
  for (int l : w.letters) e += l > 0 ? 1 : -1;
  return e;
}

inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands);
  for (int l : w.letters) p.apply_swap(std::abs(l) - 1);
  return p;
}

inline int closure_components(const BraidWord& w) { return underlying_permutation(w).cycle_count(); }

inline bool closes_to_knot(const BraidWord& w) { return closure_components(w) == 1; }

// Self-linking number of the transverse closure: writhe minus strand count.
inline std::int64_t self_linking(const BraidWord& w) {
  if (!closes_to_knot(w))
    throw DomainError("closure has " + std::to_string(closure_components(w)) + " components, not a knot");
  return exponent_sum(w) - w.strands;
}

// ---------------------------------------------------------------- moves

// c * w * c^-1
inline BraidWord conjugate(const BraidWord& w, const BraidWord& c) { return c * w * inverse(c); }

// Rotates left by k letters; k may be negative.
inline BraidWord cyclic_permute(const BraidWord& w, long long k) {
  if (w.empty()) return w;
  auto n = static_cast<long long>(w.size());
  k = ((k % n) + n) % n;
  BraidWord r{w.strands, {}};
  r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
  return r;
}

// B_n -> B_{n+1}, appending sigma_n^{+1} or sigma_n^{-1}.
inline BraidWord markov_stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
  BraidWord r{w.strands + 1, w.letters};
  r.letters.push_back(sign * w.strands);
  return r;
}

// B_n -> B_{n-1}: sigma_{n-1} must occur exactly once and positively. The word
// is rotated so that letter comes last, then the letter is dropped.
inline BraidWord markov_destabilize(const BraidWord& w) {
  if (w.strands < 2) throw DomainError("cannot destabilize a one-strand braid");
  int top = w.strands - 1;
  std::size_t count = 0, at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::abs(w.letters[i]) == top) {
      ++count;
      at = i;
    }
  }
  if (count != 1)
    throw DomainError("destabilization needs exactly one occurrence of generator " + std::to_string(top) +
                      ", found " + std::to_string(count));
  if (w.letters[at] < 0) throw DomainError("destabilization needs a positive occurrence of the top generator");
  BraidWord rotated = cyclic_permute(w, static_cast<long long>(at) + 1);
  rotated.letters.pop_back();
  return BraidWord{w.strands - 1, std::move(rotated.letters)};
}

// ---------------------------------------------------------------- twists

// sigma_1 sigma_2 ... sigma_{n-1}
inline BraidWord coxeter_word(int n) {
  BraidWord w{n, {}};
  for (int i = 1; i < n; ++i) w.letters.push_back(i);
  return w;
}

// Positive torus braid (sigma_1 ... sigma_{p-1})^q on p strands.
inline BraidWord torus_braid(int p, int q) { return power(coxeter_word(p), q); }

// Delta = (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1)
inline BraidWord half_twist(int n) {
  BraidWord w{n, {}};
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.letters.push_back(i);
  return w;
}

inline BraidWord full_twist(int n) { return torus_braid(n, n); }

// Inserting sigma_generator^2 so that its first letter lands at `position`.
struct SquareInsertion {
  std::size_t position;
  int generator;
  friend bool operator==(const SquareInsertion&, const SquareInsertion&) = default;
};

inline void apply_square_insertion(BraidWord& w, const SquareInsertion& s) {
  if (s.position > w.size()) throw DomainError("square insertion position out of range");
  if (s.generator < 1 || s.generator >= w.strands) throw DomainError("square insertion generator out of range");
  w.letters.insert(w.letters.begin() + static_cast<std::ptrdiff_t>(s.position), 2, s.generator);
}

namespace detail {

// Grows sigma_k^2 sitting at `at` into s_k ... s_2 s_1^2 s_2 ... s_k.
inline void grow_arch(std::vector<SquareInsertion>& out, std::size_t at, int k) {
  for (int j = k - 1; j >= 1; --j) out.push_back({at + static_cast<std::size_t>(k - j), j});
}

// Builds the recursive full-twist word on m strands at offset `at` from nothing.
inline void twist_from_identity(std::vector<SquareInsertion>& out, std::size_t at, int m) {
  if (m < 2) return;
  twist_from_identity(out, at, m - 1);
  auto len = static_cast<std::size_t>((m - 1) * (m - 2));
  out.push_back({at + len, m - 1});
  grow_arch(out, at + len, m - 1);
}

}  // namespace detail

// The full twist written recursively as
//   D(2) = s1^2,  D(k+1) = D(k) * s_k ... s_2 s_1^2 s_2 ... s_k.
inline BraidWord recursive_full_twist(int n) {
  BraidWord w{n, {}};
  for (int k = 1; k < n; ++k) {
    for (int j = k; j >= 2; --j) w.letters.push_back(j);
    w.letters.push_back(1);
    w.letters.push_back(1);
    for (int j = 2; j <= k; ++j) w.letters.push_back(j);
  }
  return w;
}

// Square insertions turning the word sigma_i^2 into recursive_full_twist(n).
inline std::vector<SquareInsertion> delta_square_script(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw DomainError("delta_square_script needs 1 <= i < n");
  std::vector<SquareInsertion> out;
  int k = n - 1;
  if (i == k) {
    detail::grow_arch(out, 0, k);
    detail::twist_from_identity(out, 0, n - 1);
  } else {
    out = delta_square_script(n - 1, i);
    auto len = static_cast<std::size_t>((n - 1) * (n - 2));
    out.push_back({len, k});
    detail::grow_arch(out, len, k);
  }
  return out;
}

}  // namespace hatlab
