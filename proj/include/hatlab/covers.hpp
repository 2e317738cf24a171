#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/checked.hpp"
#include "hatlab/error.hpp"
#include "hatlab/hat_bounds.hpp"

namespace hatlab {

// chi of an r-fold cyclic cover branched along a surface of Euler characteristic chi_branch.
inline i64 branched_cover_euler(i64 r, i64 chi_base, i64 chi_branch) {
  if (r < 1) throw DomainError("cover degree must be positive");
  return checked::sub(checked::mul(r, chi_base), checked::mul(r - 1, chi_branch));
}

enum class Surface { CP2, P1xP1 };

inline std::string to_string(Surface s) { return s == Surface::CP2 ? "CP2" : "P1xP1"; }

struct CyCoverResult {
  bool canonical_trivial = false;
  i64 branch_genus = 0;
  i64 euler = 0;
  bool ok() const { return canonical_trivial && euler == 24; }
};

// r-fold cover of CP2 branched along a smooth degree-d curve, or of P1xP1 along a
// bidegree (d, d2) curve. The branch class must be divisible by r.
inline CyCoverResult cy_cover_test(i64 r, Surface s, i64 d, i64 d2 = -1) {
  if (r < 2) throw DomainError("cover degree must be at least 2");
  CyCoverResult out;
  if (s == Surface::CP2) {
    if (d < 1) throw DomainError("degree must be positive");
    if (d % r != 0) throw DomainError("degree " + std::to_string(d) + " not divisible by " + std::to_string(r));
    // K = pi^*(-3h + (r-1)/r d h)
    out.canonical_trivial = checked::mul(d, r - 1) == checked::mul(i64{3}, r);
    out.branch_genus = plane_curve_genus(d);
    out.euler = branched_cover_euler(r, 3, 2 - 2 * out.branch_genus);
  } else {
    if (d2 < 0) d2 = d;
    if (d < 1 || d2 < 1) throw DomainError("bidegree must be positive");
    if (d % r != 0 || d2 % r != 0)
      throw DomainError("bidegree (" + std::to_string(d) + "," + std::to_string(d2) + ") not divisible by " +
                        std::to_string(r));
    out.canonical_trivial =
        checked::mul(d, r - 1) == checked::mul(i64{2}, r) && checked::mul(d2, r - 1) == checked::mul(i64{2}, r);
    out.branch_genus = checked::mul(d - 1, d2 - 1);
    out.euler = branched_cover_euler(r, 4, 2 - 2 * out.branch_genus);
  }
  return out;
}

// b2 of the r-fold cover of B^4 branched along a genus-g surface.
inline i64 cover_filling_b2(i64 g, i64 r) {
  if (g < 0 || r < 2) throw DomainError("need g >= 0 and r >= 2");
  return checked::mul(checked::mul(i64{2}, g), r - 1);
}

struct UnimodularForm {
  i64 rank;
  i64 signature;
  const char* label;
};

// Even forms, listed only where they are needed.
inline const std::vector<UnimodularForm>& even_form_table() {
  static const std::vector<UnimodularForm> t = {
      {12, -8, "E8+2H"}, {10, -8, "E8+H"}, {8, -8, "E8"}, {4, 0, "2H"}, {2, 0, "H"}};
  return t;
}

struct CoverBooks {
  i64 b2_filling;
  i64 b2_cap;
  i64 sigma_filling;
  i64 sigma_cap;
  std::string form;  // "undetermined" when the table has no entry
};

inline std::string lookup_form(i64 rank, i64 signature, bool even) {
  if (even) {
    for (const auto& f : even_form_table())
      if (f.rank == rank && f.signature == signature) return f.label;
    return "undetermined";
  }
  if (rank > 0 && signature == -rank) return "<-1>^" + std::to_string(rank);
  return "undetermined";
}

// Double cover of a K3 (b2 22, signature -16) split along the branched double
// cover of a determinant-one knot: filling from the slice surface, cap the rest.
// Sublattices of the K3 lattice are even, hence the default.
inline CoverBooks double_cover_books(i64 g_s, i64 sigma_filling, bool even = true) {
  if (g_s < 0) throw DomainError("slice genus must be non-negative");
  CoverBooks b;
  b.b2_filling = checked::mul(i64{2}, g_s);
  b.b2_cap = 22 - b.b2_filling;
  b.sigma_filling = sigma_filling;
  b.sigma_cap = -16 - sigma_filling;
  auto bad = [](i64 rank, i64 sig) { return rank < 0 || sig > rank || sig < -rank || (rank + sig) % 2 != 0; };
  if (bad(b.b2_filling, b.sigma_filling) || bad(b.b2_cap, b.sigma_cap))
    throw DomainError("no unimodular form with rank " + std::to_string(b.b2_cap) + " and signature " +
                      std::to_string(b.sigma_cap));
  if (even && (b.sigma_cap % 8 != 0))
    throw DomainError("no even unimodular form with signature " + std::to_string(b.sigma_cap));
  b.form = lookup_form(b.b2_cap, b.sigma_cap, even);
  return b;
}

}  // namespace hatlab
