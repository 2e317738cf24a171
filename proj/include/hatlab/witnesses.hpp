#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hatlab/error.hpp"
#include "hatlab/hat_bounds.hpp"

namespace hatlab {

// Known hat of T(2,2k+1) in CP^2.
struct HatWitness {
  std::string knot;
  i64 k = 0;
  i64 degree = 0;
  i64 hat_genus = 0;
  std::string source;
  std::string evidence;
  std::string script_ref;  // empty unless backed by a move script
};

// k changes of sign take T(2,2*from_k+1) to T(2,2*to_k+1), a genus-(to_k - from_k) cobordism.
struct CrossingChangeEdge {
  i64 from_k = 0;
  i64 to_k = 0;
  i64 changes = 0;
};

// No hat of degree below min_degree exists.
struct DegreeBound {
  std::string knot;
  i64 k = 0;
  i64 min_degree = 0;
  std::string source;
  std::string evidence;
};

// A curve class ruled out by an argument outside arithmetic.
struct ClassExclusion {
  i64 p = 0;
  i64 a = 0;
  std::vector<i64> b;
  std::string source;
  std::string evidence;
};

struct WitnessDb {
  std::vector<HatWitness> hats;
  std::vector<CrossingChangeEdge> edges;
  std::vector<DegreeBound> degree_bounds;
  std::vector<ClassExclusion> exclusions;
};

// Maximal self-linking of T(2,2k+1).
inline i64 t2_slk(i64 k) { return 2 * k - 1; }
inline std::string t2_name(i64 k) { return "T(2," + std::to_string(2 * k + 1) + ")"; }

inline WitnessDb parse_witness_db(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness database: ") + e.what());
  }
  WitnessDb db;
  try {
    for (const auto& h : j.at("hats")) {
      HatWitness w{h.at("knot").get<std::string>(), h.at("k").get<i64>(), h.at("degree").get<i64>(),
                   h.at("hat_genus").get<i64>(), h.at("source").get<std::string>(),
                   h.at("evidence").get<std::string>(), h.value("script_ref", std::string{})};
      if (w.k < 1 || w.knot != t2_name(w.k)) throw DomainError("witness " + w.knot + ": k does not match the name");
      i64 g = hat_genus_at_degree(t2_slk(w.k), w.degree);
      if (g != w.hat_genus)
        throw DomainError("witness " + w.knot + ": genus " + std::to_string(w.hat_genus) + " in degree " +
                          std::to_string(w.degree) + " contradicts adjunction (" + std::to_string(g) + ")");
      db.hats.push_back(std::move(w));
    }
    for (const auto& e : j.at("crossing_changes")) {
      CrossingChangeEdge c{e.at("from_k").get<i64>(), e.at("to_k").get<i64>(), e.at("changes").get<i64>()};
      if (c.from_k < 1 || c.to_k <= c.from_k || c.changes != c.to_k - c.from_k)
        throw DomainError("crossing change edge " + std::to_string(c.from_k) + " -> " + std::to_string(c.to_k) +
                          " is inconsistent");
      db.edges.push_back(c);
    }
    for (const auto& b : j.at("degree_lower_bounds")) {
      DegreeBound d{b.at("knot").get<std::string>(), b.at("k").get<i64>(), b.at("min_degree").get<i64>(),
                    b.at("source").get<std::string>(), b.at("evidence").get<std::string>()};
      if (d.k < 1 || d.knot != t2_name(d.k)) throw DomainError("degree bound " + d.knot + ": k does not match the name");
      db.degree_bounds.push_back(std::move(d));
    }
    for (const auto& x : j.at("class_exclusions")) {
      ClassExclusion c{x.at("p").get<i64>(), x.at("a").get<i64>(), x.at("b").get<std::vector<i64>>(),
                       x.at("source").get<std::string>(), x.at("evidence").get<std::string>()};
      std::sort(c.b.begin(), c.b.end(), std::greater<>());
      db.exclusions.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("witness database: ") + e.what());
  }
  return db;
}

struct T2Row {
  i64 k = 0;
  i64 lb = 0;
  std::optional<i64> ub;
  std::vector<std::string> reasons;  // how lb and ub were reached

  bool exact() const { return ub && *ub == lb; }
  std::string cell() const {
    if (exact()) return std::to_string(lb);
    return std::to_string(lb) + ".." + (ub ? std::to_string(*ub) : std::string("?"));
  }
};

// Hat genus of T(2,2k+1) for k = 1..kmax: lower bound from the next triangular
// number and any known minimal degree, upper bound from witnesses pulled back
// along crossing changes.
inline std::vector<T2Row> t2_table(const WitnessDb& db, i64 kmax) {
  if (kmax < 1) throw DomainError("kmax must be at least 1");
  i64 top = kmax;
  for (const auto& e : db.edges) top = std::max(top, e.to_k);
  std::vector<T2Row> rows(static_cast<std::size_t>(top + 1));
  for (i64 k = 1; k <= top; ++k) {
    T2Row& r = rows[static_cast<std::size_t>(k)];
    r.k = k;
    auto tri = triangular_lb(k);
    r.lb = tri.genus_lb;
    r.reasons.push_back("lb " + std::to_string(tri.genus_lb) + " from triangular " + std::to_string(tri.m));
    for (const auto& b : db.degree_bounds) {
      if (b.k != k) continue;
      i64 g = hat_genus_at_degree(t2_slk(k), b.min_degree);
      if (g > r.lb) r.lb = g;
      r.reasons.push_back("lb " + std::to_string(g) + " from degree >= " + std::to_string(b.min_degree));
    }
    for (const auto& w : db.hats) {
      if (w.k != k) continue;
      if (!r.ub || w.hat_genus < *r.ub) r.ub = w.hat_genus;
      r.reasons.push_back("ub " + std::to_string(w.hat_genus) + " from degree-" + std::to_string(w.degree) + " hat");
    }
  }
  // edges point upward in k, so settle larger k first
  for (i64 k = top; k >= 1; --k) {
    T2Row& r = rows[static_cast<std::size_t>(k)];
    for (const auto& e : db.edges) {
      if (e.from_k != k) continue;
      const auto& up = rows[static_cast<std::size_t>(e.to_k)].ub;
      if (!up) continue;
      i64 g = *up + e.changes;
      if (!r.ub || g < *r.ub) r.ub = g;
      r.reasons.push_back("ub " + std::to_string(g) + " via " + std::to_string(e.changes) + " crossing change(s) to " +
                          t2_name(e.to_k));
    }
    if (r.ub && *r.ub < r.lb)
      throw DomainError(t2_name(k) + ": witness genus " + std::to_string(*r.ub) + " below lower bound " +
                        std::to_string(r.lb));
  }
  rows.erase(rows.begin());
  rows.resize(static_cast<std::size_t>(kmax));
  return rows;
}

inline std::string t2_table_tsv(const std::vector<T2Row>& rows) {
  std::ostringstream out;
  out << "k";
  for (const auto& r : rows) out << '\t' << r.k;
  out << "\nhat_genus";
  for (const auto& r : rows) out << '\t' << r.cell();
  out << '\n';
  return out.str();
}

}  // namespace hatlab
