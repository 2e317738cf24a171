#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/checked.hpp"
#include "hatlab/error.hpp"

namespace hatlab {

using i64 = std::int64_t;

namespace detail {
inline void require_odd(i64 slk) {
  if (slk % 2 == 0) throw DomainError("self-linking of a knot must be odd, got " + std::to_string(slk));
}
}  // namespace detail

// (d-1)(d-2)/2
inline i64 plane_curve_genus(i64 d) {
  if (d < 1) throw DomainError("degree must be positive");
  return checked::choose2(d - 1);
}

// Slice genus of a quasipositive knot from its maximal self-linking number.
inline i64 slice_genus_qp(i64 slk) {
  detail::require_odd(slk);
  if (slk < -1) throw DomainError("a quasipositive knot has slk >= -1");
  return (slk + 1) / 2;
}

// Genus of a degree-d hat for a transverse knot with self-linking slk.
inline i64 hat_genus_at_degree(i64 slk, i64 d) {
  detail::require_odd(slk);
  i64 g = checked::sub(plane_curve_genus(d), (slk + 1) / 2);
  if (g < 0)
    throw DomainError("no degree-" + std::to_string(d) + " hat for slk " + std::to_string(slk) +
                      " (adjunction gives genus " + std::to_string(g) + ")");
  return g;
}

// Degree of a genus-g hat, if one is compatible with adjunction: slk = d^2 - 3d + 1 - 2g.
inline std::optional<i64> hat_degree_for_genus(i64 slk, i64 g) {
  detail::require_odd(slk);
  if (g < 0) throw DomainError("genus must be non-negative");
  i64 disc = checked::add(checked::add(i64{5}, checked::mul(i64{4}, slk)), checked::mul(i64{8}, g));
  if (disc < 0) return std::nullopt;
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(disc)));
  while (r * r > disc) --r;
  while ((r + 1) * (r + 1) <= disc) ++r;
  if (r * r != disc || (3 + r) % 2 != 0) return std::nullopt;
  i64 d = (3 + r) / 2;
  if (d < 1) return std::nullopt;
  return d;
}

// Smallest degree admitting a hat at all.
inline i64 min_hat_degree(i64 slk) {
  detail::require_odd(slk);
  i64 need = (slk + 1) / 2;
  i64 d = 1;
  while (plane_curve_genus(d) < need) ++d;
  return d;
}

struct TriangularBound {
  i64 m;         // least triangular number (d-2)(d-1)/2 >= g_s
  i64 d;         // the degree realizing m (smallest such)
  i64 genus_lb;  // m - g_s
  friend bool operator==(const TriangularBound&, const TriangularBound&) = default;
};

// Lower bound on the hat genus of a quasipositive knot of slice genus g_s.
inline TriangularBound triangular_lb(i64 g_s) {
  if (g_s < 0) throw DomainError("slice genus must be non-negative");
  i64 d = 1;
  while (plane_curve_genus(d) < g_s) ++d;
  i64 m = plane_curve_genus(d);
  return {m, d, m - g_s};
}

// Hat genus of the closure of a negative braid (slk <= -1), attained in degree 1.
inline i64 negbraid_hat_genus(i64 slk) {
  detail::require_odd(slk);
  if (slk > -1) throw DomainError("negative braid closures have slk <= -1");
  return -(slk + 1) / 2;
}

// Hat genus of the twist knot K_n where the maximal self-linking is known;
// nullopt where it is not (even negative n, and n in {-1, 0}).
inline std::optional<i64> twist_knot_hat_genus(i64 n) {
  if (n <= -3 && n % 2 != 0) return negbraid_hat_genus(-3);
  if (n >= 1 && n % 2 != 0) return (n + 3) / 2;
  if (n >= 2 && n % 2 == 0) return n / 2;
  return std::nullopt;
}

inline void require_coprime_pair(i64 p, i64 q) {
  if (p < 2 || q <= p) throw DomainError("need 2 <= p < q");
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
}

// (p-1)(q-1)/2
inline i64 milnor_genus(i64 p, i64 q) {
  if (p < 1 || q < 1) throw DomainError("torus parameters must be positive");
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  return checked::mul(p - 1, q - 1) / 2;
}

// Genus of the degree-q hat of T(p,q) coming from the curve x^p z^(q-p) = y^q.
inline i64 torus_hat_genus(i64 p, i64 q) {
  require_coprime_pair(p, q);
  return checked::mul(q - 1, q - p - 1) / 2;
}

// Third element (counting 0 as the first) of the semigroup generated by p and q.
inline i64 semigroup_lb(i64 p, i64 q) {
  require_coprime_pair(p, q);
  std::vector<i64> elems;
  for (i64 a = 0; a <= 2; ++a)
    for (i64 b = 0; b <= 2; ++b) elems.push_back(checked::add(checked::mul(a, p), checked::mul(b, q)));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems[2];
}

// Genus left for a degree-d curve after singularities of the given Milnor genera.
inline i64 singular_genus_budget(i64 d, const std::vector<i64>& singularity_genera) {
  i64 g = plane_curve_genus(d);
  for (i64 s : singularity_genera) {
    if (s < 0) throw DomainError("singularity genus must be non-negative");
    g = checked::sub(g, s);
  }
  if (g < 0) throw DomainError("singularities exceed the genus of a degree-" + std::to_string(d) + " curve");
  return g;
}

struct WitnessRef {
  i64 degree;
  i64 genus;
  std::string source;
};

struct HatBoundReport {
  i64 slk;
  std::optional<i64> slice_genus;
  i64 degree_lb;  // no hat below this degree
  i64 genus_lb;   // no hat of smaller genus
  std::optional<TriangularBound> triangular;  // when slk = 2g_s - 1
  std::map<i64, i64> genus_by_degree;
  std::vector<WitnessRef> witnesses;
};

// Raises the lower bounds to a known minimal degree.
inline void apply_degree_lb(HatBoundReport& r, i64 d) {
  if (d <= r.degree_lb) return;
  r.degree_lb = d;
  r.genus_lb = std::max(r.genus_lb, hat_genus_at_degree(r.slk, d));
}

// Adds a witness after checking it against adjunction.
inline void add_witness(HatBoundReport& r, WitnessRef w) {
  i64 g = hat_genus_at_degree(r.slk, w.degree);
  if (g != w.genus)
    throw DomainError("witness (" + w.source + ") claims genus " + std::to_string(w.genus) + " in degree " +
                      std::to_string(w.degree) + " but adjunction gives " + std::to_string(g));
  if (w.genus < r.genus_lb)
    throw DomainError("witness (" + w.source + ") beats the lower bound " + std::to_string(r.genus_lb));
  r.genus_by_degree[w.degree] = g;
  r.witnesses.push_back(std::move(w));
}

inline HatBoundReport hat_bounds(i64 slk, std::optional<i64> slice_genus, int degrees = 4) {
  detail::require_odd(slk);
  HatBoundReport r{slk, slice_genus, min_hat_degree(slk), 0, std::nullopt, {}, {}};
  r.genus_lb = hat_genus_at_degree(slk, r.degree_lb);
  if (slice_genus) {
    if (*slice_genus < 0) throw DomainError("slice genus must be non-negative");
    if (2 * *slice_genus - 1 < slk)
      throw DomainError("slk " + std::to_string(slk) + " exceeds 2g_s - 1 = " + std::to_string(2 * *slice_genus - 1));
    if (2 * *slice_genus - 1 == slk) {
      r.triangular = triangular_lb(*slice_genus);
      apply_degree_lb(r, r.triangular->d);
    }
  }
  for (int k = 0; k < degrees; ++k) {
    i64 d = r.degree_lb + k;
    r.genus_by_degree[d] = hat_genus_at_degree(slk, d);
  }
  return r;
}

}  // namespace hatlab
