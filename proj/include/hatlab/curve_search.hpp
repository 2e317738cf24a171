#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hatlab/checked.hpp"
#include "hatlab/error.hpp"

namespace hatlab {

using i64 = std::int64_t;

// a h - sum b_i e_i in CP^2 blown up N times; b kept non-increasing.
struct CurveClass {
  i64 a = 0;
  std::vector<i64> b;

  CurveClass() = default;
  CurveClass(i64 a_, std::vector<i64> b_) : a(a_), b(std::move(b_)) {
    for (i64 x : b)
      if (x < 0) throw DomainError("exceptional coefficients must be non-negative");
    std::sort(b.begin(), b.end(), std::greater<>());
  }

  i64 sum_b() const {
    i64 s = 0;
    for (i64 x : b) s = checked::add(s, x);
    return s;
  }
  i64 sum_b2() const {
    i64 s = 0;
    for (i64 x : b) s = checked::add(s, checked::square(x));
    return s;
  }
  i64 self_intersection() const { return checked::sub(checked::square(a), sum_b2()); }
  std::string to_string() const {
    std::string s = "(" + std::to_string(a) + ";";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
  }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

// Genus of a T(p,p+1) cusp plus an ordinary cusp.
inline i64 cusp_pair_genus(i64 p) { return checked::add(checked::choose2(p), i64{1}); }

// (a-1)(a-2)/2 - sum b_i(b_i-1)/2 - sing_genus_sum
inline i64 class_genus(const CurveClass& c, i64 sing_genus_sum) {
  i64 g = checked::choose2(c.a - 1);
  for (i64 x : c.b) g = checked::sub(g, checked::choose2(x));
  return checked::sub(g, sing_genus_sum);
}

// a^2 - sum b^2 = p^2 - p + 3a - sum b: a rational curve carrying T(p,p+1) and T(2,3).
inline bool adjunction_rational(i64 p, const CurveClass& c) {
  if (p < 2) throw DomainError("p must be at least 2");
  i64 lhs = c.self_intersection();
  i64 rhs = checked::add(checked::sub(checked::square(p), p), checked::sub(checked::mul(i64{3}, c.a), c.sum_b()));
  return lhs == rhs;
}

struct GromovCheck {
  bool lines = true;   // a >= top two of b, p, 2
  bool conics = true;  // 2a >= top five of b, p, 2
  i64 line_rhs = 0;
  i64 conic_rhs = 0;
  bool ok() const { return lines && conics; }
};

// The singular points count as extra blow-ups of multiplicity p and 2.
inline std::vector<i64> with_sentinels(i64 p, const CurveClass& c) {
  std::vector<i64> m = c.b;
  m.push_back(p);
  m.push_back(2);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

inline i64 top_sum(const std::vector<i64>& sorted_desc, std::size_t k) {
  i64 s = 0;
  for (std::size_t i = 0; i < k && i < sorted_desc.size(); ++i) s = checked::add(s, sorted_desc[i]);
  return s;
}

inline GromovCheck gromov_constraints(i64 p, const CurveClass& c) {
  if (p < 2) throw DomainError("p must be at least 2");
  auto m = with_sentinels(p, c);
  GromovCheck g;
  g.line_rhs = top_sum(m, 2);
  g.conic_rhs = top_sum(m, 5);
  g.lines = c.a >= g.line_rhs;
  g.conics = checked::mul(i64{2}, c.a) >= g.conic_rhs;
  return g;
}

// False when the self-intersection exceeds p^2 + 9.
inline bool ohta_ono_filter(i64 p, const CurveClass& c) {
  if (p < 2) throw DomainError("p must be at least 2");
  return c.self_intersection() <= checked::add(checked::square(p), i64{9});
}

struct SearchParams {
  i64 p = 2;
  int blowups = 1;
  i64 a_min = 0;
  i64 a_max = 0;
  i64 genus = 0;
  std::uint64_t cap = 50'000'000;  // enumeration nodes
};

struct SearchSolution {
  CurveClass c;
  i64 self_int = 0;
  GromovCheck gromov;
  bool ohta_ono = true;
  std::optional<std::string> excluded;  // set from the witness database, not by the search

  bool survives() const { return gromov.ok() && ohta_ono && !excluded; }
};

struct SearchReport {
  SearchParams params;
  std::vector<SearchSolution> solutions;  // sorted by (a, b)
  std::uint64_t visited = 0;

  std::vector<CurveClass> surviving() const {
    std::vector<CurveClass> out;
    for (const auto& s : solutions)
      if (s.survives()) out.push_back(s.c);
    return out;
  }
};

inline SearchSolution annotate(i64 p, CurveClass c) {
  SearchSolution s;
  s.self_int = c.self_intersection();
  s.gromov = gromov_constraints(p, c);
  s.ohta_ono = ohta_ono_filter(p, c);
  s.c = std::move(c);
  return s;
}

namespace detail {

// Non-increasing b_0 >= b_1 >= ... with sum b(b-1)/2 = target, b_i <= bound.
inline void fill_classes(i64 a, int slots, i64 bound, i64 target, std::vector<i64>& cur,
                         std::vector<CurveClass>& out, std::atomic<std::uint64_t>& visited, std::uint64_t cap) {
  if (visited.fetch_add(1, std::memory_order_relaxed) >= cap)
    throw LimitError("search visited more than " + std::to_string(cap) + " nodes");
  if (slots == 0) {
    if (target == 0) out.emplace_back(a, cur);
    return;
  }
  for (i64 x = bound; x >= 0; --x) {
    i64 t = checked::choose2(x);
    if (t > target) continue;
    // the remaining slots can take at most choose2(x) each
    if (checked::mul(t, static_cast<i64>(slots)) < target) break;
    cur.push_back(x);
    fill_classes(a, slots - 1, x, target - t, cur, out, visited, cap);
    cur.pop_back();
  }
}

}  // namespace detail

// All classes (a; b_1..b_N) with a_min <= a <= a_max, 0 <= b_i <= a and genus
// `genus` once the cusp pair is removed, annotated with the constraints.
inline SearchReport search(const SearchParams& params) {
  if (params.p < 2) throw DomainError("p must be at least 2");
  if (params.blowups < 0) throw DomainError("number of blow-ups must be non-negative");
  if (params.genus < 0) throw DomainError("genus must be non-negative");
  if (params.a_min < 0 || params.a_max < params.a_min) throw DomainError("need 0 <= amin <= amax");
  const i64 sing = cusp_pair_genus(params.p);
  std::atomic<std::uint64_t> visited{0};

  auto one = [&](i64 a) {
    std::vector<CurveClass> found;
    i64 target = checked::sub(checked::sub(checked::choose2(a - 1), sing), params.genus);
    if (target < 0) return found;
    std::vector<i64> cur;
    detail::fill_classes(a, params.blowups, a, target, cur, found, visited, params.cap);
    return found;
  };

  // workers pull values of a from a shared counter; results are merged in order of a
  const std::size_t count = static_cast<std::size_t>(params.a_max - params.a_min + 1);
  std::vector<std::vector<CurveClass>> per_a(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      per_a[i] = one(params.a_min + static_cast<i64>(i));
  };
  std::size_t nworkers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < nworkers; ++w) jobs.push_back(std::async(std::launch::async, worker));
  std::exception_ptr err;
  for (auto& j : jobs) {
    try {
      j.get();
    } catch (...) {
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  SearchReport r;
  r.params = params;
  std::vector<CurveClass> all;
  for (auto& v : per_a) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [](const CurveClass& x, const CurveClass& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (auto& c : all) r.solutions.push_back(annotate(params.p, std::move(c)));
  r.visited = visited.load();
  return r;
}

inline nlohmann::ordered_json to_json(const SearchReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["params"] = {{"p", r.params.p},           {"blowups", r.params.blowups}, {"amin", r.params.a_min},
                 {"amax", r.params.a_max},    {"genus", r.params.genus},     {"cap", r.params.cap}};
  ordered_json sols = ordered_json::array();
  for (const auto& s : r.solutions) {
    ordered_json e;
    e["a"] = s.c.a;
    e["b"] = s.c.b;
    e["self_int"] = s.self_int;
    e["passes"] = {{"lines", s.gromov.lines}, {"conics", s.gromov.conics}, {"ohta_ono", s.ohta_ono}};
    if (s.excluded) e["excluded"] = *s.excluded;
    sols.push_back(std::move(e));
  }
  j["solutions"] = std::move(sols);
  return j;
}

struct TriangularDifference {
  std::vector<std::pair<i64, i64>> pairs;  // (m1, m2), m1 - m2 = g, m1 > m2
  bool self_pairs = false;                 // g = 0: every (m, m) works and is not listed
};

// Triangular numbers here are 0, 1, 3, 6, 10, ...
inline TriangularDifference triangular_difference(i64 g) {
  if (g < 0) throw DomainError("difference must be non-negative");
  TriangularDifference out;
  if (g == 0) {
    out.self_pairs = true;
    return out;
  }
  // t(n) - t(n-1) = n, so a pair with difference g has n <= g
  for (i64 n = 1; n <= g; ++n) {
    i64 tn = checked::mul(n, n + 1) / 2;
    for (i64 m = n - 1; m >= 0; --m) {
      i64 d = tn - m * (m + 1) / 2;
      if (d == g) out.pairs.push_back({tn, m * (m + 1) / 2});
      if (d >= g) break;
    }
  }
  return out;
}

}  // namespace hatlab
