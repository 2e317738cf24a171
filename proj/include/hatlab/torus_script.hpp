#pragma once

#include <stdexcept>
#include <vector>

#include "hatlab/braid.hpp"
#include "hatlab/cobordism.hpp"
#include "hatlab/garside.hpp"

namespace hatlab {

// One factor c * sigma_generator^(2*sign) * c^-1 of a combed pure braid.
struct SquareFactor {
  BraidWord conjugator;
  int generator;
  int sign;
};

// Writes a pure braid word as a product of conjugates of squared generators,
// using permutation braids as coset representatives: prefix k contributes
// P(pi_{k-1}) l_k P(pi_k)^-1, which is trivial or a conjugate of a square.
inline std::vector<SquareFactor> comb_pure_braid(const BraidWord& gamma) {
  using namespace garside;
  const int n = gamma.strands;
  if (!underlying_permutation(gamma).is_identity()) throw DomainError("comb_pure_braid needs a pure braid");
  std::vector<SquareFactor> out;
  Permutation pi(n);
  for (int l : gamma.letters) {
    int i = std::abs(l) - 1;
    Permutation s = Permutation::transposition(n, i);
    Permutation next = pi * s;
    if (l > 0) {
      if (ends_with(pi, i)) out.push_back({BraidWord{n, spell(next)}, i + 1, 1});
    } else {
      if (!ends_with(pi, i)) out.push_back({BraidWord{n, spell(pi)}, i + 1, -1});
    }
    pi = next;
  }
  return out;
}

// A positive permutation braid c with c w c^-1 having the permutation of
// sigma_1 ... sigma_{n-1}. The closure of w must be a knot.
inline BraidWord cycle_aligning_conjugator(const BraidWord& w) {
  const int n = w.strands;
  Permutation pw = underlying_permutation(w);
  Permutation pb = underlying_permutation(coxeter_word(n));
  std::vector<int> img(static_cast<std::size_t>(n));
  int a = 0, b = 0;
  for (int k = 0; k < n; ++k) {
    img[static_cast<std::size_t>(b)] = a;
    a = pw[a];
    b = pb[b];
  }
  // img sends the cycle of pb onto the cycle of pw
  Permutation pc(std::move(img));
  BraidWord c{n, garside::spell(pc)};
  if (underlying_permutation(conjugate(w, c)) != pb) throw std::logic_error("conjugator does not align cycles");
  return c;
}

// Moves from a braid with knotted closure to (sigma_1 ... sigma_{n-1}) Delta^{2m},
// a torus knot T(n, mn+1). Every band comes from a crossing change on a
// negative square or a square insertion completing a positive square to Delta^2.
inline MoveScript to_torus_script(const BraidWord& w) {
  const int n = w.strands;
  if (!closes_to_knot(w)) throw DomainError("to_torus_script needs a braid whose closure is a knot");
  MoveScript s;
  s.start = w;
  if (n == 1) {
    s.end = w;
    return s;
  }
  BraidWord c = cycle_aligning_conjugator(w);
  BraidWord aligned = w;
  if (!c.empty()) {
    s.moves.push_back(Conjugate{c});
    aligned = conjugate(w, c);
  }
  BraidWord beta0 = coxeter_word(n);
  auto factors = comb_pure_braid(inverse(beta0) * aligned);

  BraidWord combed = beta0;
  for (const auto& f : factors) {
    combed = combed * f.conjugator;
    combed.letters.push_back(f.sign * f.generator);
    combed.letters.push_back(f.sign * f.generator);
    combed = combed * inverse(f.conjugator);
  }
  s.moves.push_back(RewriteEqual{combed});

  std::size_t offset = beta0.size();
  int twists = 0;
  for (const auto& f : factors) {
    std::size_t at = offset + f.conjugator.size();
    std::size_t region = 2 * f.conjugator.size() + 2;
    if (f.sign < 0) {
      s.moves.push_back(CrossingChange{at, f.generator});
    } else {
      for (const auto& q : delta_square_script(n, f.generator)) {
        s.moves.push_back(InsertPositive{at + q.position, q.generator});
        s.moves.push_back(InsertPositive{at + q.position, q.generator});
      }
      region = 2 * f.conjugator.size() + static_cast<std::size_t>(n * (n - 1));
      ++twists;
    }
    offset += region;
  }
  s.end = torus_braid(n, twists * n + 1);
  s.moves.push_back(RewriteEqual{s.end});
  return s;
}

}  // namespace hatlab
