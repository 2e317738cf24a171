#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hatlab/corpus.hpp"
#include "hatlab/embedded_data.hpp"
#include "hatlab/knotdb.hpp"
#include "hatlab/witnesses.hpp"

namespace hatlab {

inline std::vector<ScriptSource> embedded_scripts() {
  std::vector<ScriptSource> out;
  for (const auto& f : embedded::scripts) out.push_back({f.name, f.text});
  return out;
}

inline std::vector<ScriptSource> embedded_witness_scripts() {
  std::vector<ScriptSource> out;
  for (const auto& f : embedded::witness_scripts) out.push_back({f.name, f.text});
  return out;
}

// Corpus and witness scripts by id.
inline std::map<std::string, ScriptSource> script_index() {
  std::map<std::string, ScriptSource> m;
  for (auto& s : embedded_scripts()) m.emplace(s.id, s);
  for (auto& s : embedded_witness_scripts()) m.emplace(s.id, s);
  return m;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The knot database text: $HATLAB_DB if set, else the built-in copy.
inline std::string knot_db_text() {
  if (const char* p = std::getenv("HATLAB_DB"); p && *p) return read_text_file(p);
  return embedded::knots_json;
}

// Parses and checks every record, including script replay.
inline KnotDb load_db() {
  KnotDb db = parse_knot_db(knot_db_text());
  check_scripts(db, script_index());
  return db;
}

inline const WitnessDb& witness_db() {
  static const WitnessDb db = parse_witness_db(embedded::witnesses_json);
  return db;
}

}  // namespace hatlab
