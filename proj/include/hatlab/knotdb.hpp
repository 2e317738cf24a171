#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hatlab/braid.hpp"
#include "hatlab/corpus.hpp"
#include "hatlab/error.hpp"
#include "hatlab/hat_bounds.hpp"

namespace hatlab {

// Knot whose hat is obtained by a script ending at `label`, in this degree.
struct KnotTarget {
  std::string label;
  i64 degree = 0;
};

struct KnotRecord {
  std::string name;
  std::vector<std::string> aliases;
  std::string braid_text;  // as stored
  BraidWord braid;
  i64 slice_genus = 0;
  bool quasipositive = true;
  bool determinant_one = false;
  std::optional<i64> filling_signature;
  std::optional<std::string> script_ref;
  std::optional<KnotTarget> target;
  std::string source;
  std::string note;

  i64 slk() const { return self_linking(braid); }
  bool matches(std::string_view key) const {
    if (name == key) return true;
    for (const auto& a : aliases)
      if (a == key) return true;
    return false;
  }
};

struct KnotDb {
  std::vector<KnotRecord> knots;

  const KnotRecord* find(std::string_view key) const {
    for (const auto& k : knots)
      if (k.matches(key)) return &k;
    return nullptr;
  }
  const KnotRecord& at(std::string_view key) const {
    if (auto* k = find(key)) return *k;
    throw DomainError("no knot named " + std::string(key) + " in the database");
  }
};

// Invariants every record must satisfy; throws naming the record.
inline void check_record(const KnotRecord& k) {
  auto fail = [&](const std::string& why) { throw DomainError("knot record " + k.name + ": " + why); };
  if (!closes_to_knot(k.braid)) fail("braid closure is not a knot");
  if (k.slice_genus < 0) fail("negative slice genus");
  if (k.quasipositive && k.slk() != 2 * k.slice_genus - 1)
    fail("self-linking " + std::to_string(k.slk()) + " != 2 * slice genus - 1 = " +
         std::to_string(2 * k.slice_genus - 1));
  if (k.filling_signature && !k.determinant_one) fail("filling signature given without determinant one");
  if (k.target && k.target->degree < 1) fail("target degree must be positive");
}

inline KnotDb parse_knot_db(std::string_view text) {
  using nlohmann::json;
  KnotDb db;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("knot database: ") + e.what());
  }
  if (!j.contains("knots") || !j["knots"].is_array()) throw ParseError("knot database: missing knots array");
  for (const auto& r : j["knots"]) {
    KnotRecord k;
    try {
      k.name = r.at("name").get<std::string>();
      k.aliases = r.value("aliases", std::vector<std::string>{});
      k.braid_text = r.at("braid").get<std::string>();
      int strands = r.at("strands").get<int>();
      k.braid = parse_braid(k.braid_text, strands);
      k.slice_genus = r.at("slice_genus").get<i64>();
      k.quasipositive = r.at("quasipositive").get<bool>();
      k.determinant_one = r.at("determinant_one").get<bool>();
      if (!r.at("filling_signature").is_null()) k.filling_signature = r["filling_signature"].get<i64>();
      if (!r.at("script_ref").is_null()) k.script_ref = r["script_ref"].get<std::string>();
      if (!r.at("target").is_null())
        k.target = KnotTarget{r["target"].at("label").get<std::string>(), r["target"].at("degree").get<i64>()};
      k.source = r.at("source").get<std::string>();
      k.note = r.value("note", std::string{});
    } catch (const json::exception& e) {
      throw ParseError("knot record " + (k.name.empty() ? std::string("?") : k.name) + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError("knot record " + k.name + ": " + e.what());
    }
    check_record(k);
    if (db.find(k.name)) throw DomainError("knot record " + k.name + ": duplicate name");
    db.knots.push_back(std::move(k));
  }
  return db;
}

inline std::string serialize_knot_db(const KnotDb& db) {
  using nlohmann::ordered_json;
  ordered_json arr = ordered_json::array();
  for (const auto& k : db.knots) {
    ordered_json r;
    r["name"] = k.name;
    if (!k.aliases.empty()) r["aliases"] = k.aliases;
    r["braid"] = k.braid_text;
    r["strands"] = k.braid.strands;
    r["slice_genus"] = k.slice_genus;
    r["quasipositive"] = k.quasipositive;
    r["determinant_one"] = k.determinant_one;
    r["filling_signature"] = k.filling_signature ? ordered_json(*k.filling_signature) : ordered_json(nullptr);
    r["script_ref"] = k.script_ref ? ordered_json(*k.script_ref) : ordered_json(nullptr);
    if (k.target) {
      ordered_json t;
      t["label"] = k.target->label;
      t["degree"] = k.target->degree;
      r["target"] = t;
    } else {
      r["target"] = nullptr;
    }
    r["source"] = k.source;
    if (!k.note.empty()) r["note"] = k.note;
    arr.push_back(std::move(r));
  }
  ordered_json top;
  top["knots"] = std::move(arr);
  return top.dump(2) + "\n";
}

// Checks each record's script: it exists, starts at the record's braid and replays.
inline void check_scripts(const KnotDb& db, const std::map<std::string, ScriptSource>& scripts) {
  for (const auto& k : db.knots) {
    if (!k.script_ref) continue;
    auto it = scripts.find(*k.script_ref);
    if (it == scripts.end()) throw DomainError("knot record " + k.name + ": no script " + *k.script_ref);
    auto out = verify_script(it->second);
    if (!out.ok) throw DomainError("knot record " + k.name + ": script " + *k.script_ref + " fails: " + out.error);
    MoveScript s = parse_script(it->second.text);
    if (s.start != k.braid)
      throw DomainError("knot record " + k.name + ": script " + *k.script_ref + " starts at " + to_string(s.start));
  }
}

// Hat of the record's knot built from its script and the target's hat in the target degree.
struct KnotHat {
  i64 degree = 0;
  i64 script_genus = 0;
  i64 target_genus = 0;
  i64 genus = 0;  // script_genus + target_genus
  std::string source;
};

inline std::optional<KnotHat> knot_hat(const KnotRecord& k, const std::map<std::string, ScriptSource>& scripts) {
  if (!k.target) return std::nullopt;
  KnotHat h;
  h.degree = k.target->degree;
  if (!k.script_ref) {
    h.genus = hat_genus_at_degree(k.slk(), h.degree);
    h.target_genus = h.genus;
    h.source = k.target->label + " degree-" + std::to_string(h.degree) + " hat";
    return h;
  }
  auto it = scripts.find(*k.script_ref);
  if (it == scripts.end()) throw DomainError("no script " + *k.script_ref);
  ScriptResult r = run_script(parse_script(it->second.text));
  if (!r.ledger.genus) throw DomainError("script " + *k.script_ref + " does not run between knots");
  h.script_genus = *r.ledger.genus;
  h.target_genus = hat_genus_at_degree(r.ledger.slk_end, h.degree);
  h.genus = h.script_genus + h.target_genus;
  h.source = "script " + *k.script_ref + " (genus " + std::to_string(h.script_genus) + ") + " + k.target->label +
             " degree-" + std::to_string(h.degree) + " hat (genus " + std::to_string(h.target_genus) + ")";
  return h;
}

}  // namespace hatlab
