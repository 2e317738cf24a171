#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/cobordism.hpp"

namespace hatlab {

struct ScriptSource {
  std::string id;    // file stem
  std::string text;
};

struct CorpusOutcome {
  std::string id;
  std::string name;  // from the script header, may be empty
  bool ok = false;
  std::optional<ScriptResult> result;
  std::size_t failed_step = 0;  // 1-based, 0 for parse or footer failures
  std::string error;
};

inline CorpusOutcome verify_script(const ScriptSource& src) {
  CorpusOutcome out;
  out.id = src.id;
  try {
    MoveScript s = parse_script(src.text);
    out.name = s.name;
    out.result = run_script(s);
    out.ok = true;
  } catch (const ScriptError& e) {
    out.failed_step = e.step;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Replays every script, one task each; results come back in input order.
inline std::vector<CorpusOutcome> verify_corpus(const std::vector<ScriptSource>& sources) {
  std::vector<std::future<CorpusOutcome>> jobs;
  jobs.reserve(sources.size());
  for (const auto& s : sources) jobs.push_back(std::async(std::launch::async, verify_script, std::cref(s)));
  std::vector<CorpusOutcome> out;
  out.reserve(sources.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace hatlab
