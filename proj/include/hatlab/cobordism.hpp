#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hatlab/braid.hpp"
#include "hatlab/error.hpp"
#include "hatlab/garside.hpp"

namespace hatlab {

// ---------------------------------------------------------------- moves

// Adds sigma_generator so that it becomes the letter at `position`. One band.
struct InsertPositive {
  std::size_t position;
  int generator;
  friend bool operator==(const InsertPositive&, const InsertPositive&) = default;
};
// The letter at `position` must be sigma_generator^-1; it becomes sigma_generator. Two bands.
struct CrossingChange {
  std::size_t position;
  int generator;
  friend bool operator==(const CrossingChange&, const CrossingChange&) = default;
};
// w -> c w c^-1
struct Conjugate {
  BraidWord by;
  friend bool operator==(const Conjugate&, const Conjugate&) = default;
};
struct CyclicPermute {
  long long shift;
  friend bool operator==(const CyclicPermute&, const CyclicPermute&) = default;
};
// Replaces the word by `target`, certified by the normal form.
struct RewriteEqual {
  BraidWord target;
  friend bool operator==(const RewriteEqual&, const RewriteEqual&) = default;
};
struct Stabilize {
  int sign;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};
struct Destabilize {
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};

using Move = std::variant<InsertPositive, CrossingChange, Conjugate, CyclicPermute, RewriteEqual, Stabilize, Destabilize>;

struct MoveScript {
  std::string name;  // optional, empty if absent
  BraidWord start;
  std::vector<Move> moves;
  BraidWord end;  // declared final word
  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

struct CobordismLedger {
  std::int64_t bands = 0;
  std::int64_t euler = 0;
  std::optional<std::int64_t> genus;  // knot to knot only
  std::int64_t slk_start = 0;
  std::int64_t slk_end = 0;
  std::vector<int> component_trace;  // closure components before the first move and after each move
  int crossing_changes = 0;
  int insertions = 0;
  int negative_stabilizations = 0;
  bool stabilized = false;  // a negative stabilization was used; transverse type not preserved
};

struct ScriptResult {
  BraidWord end;
  CobordismLedger ledger;
};

// A script step that could not be carried out. `step` is 1-based; 0 means the header or footer.
struct ScriptError : std::runtime_error {
  std::size_t step;
  ScriptError(std::size_t s, const std::string& what)
      : std::runtime_error(s ? "step " + std::to_string(s) + ": " + what : what), step(s) {}
};

// ---------------------------------------------------------------- text format
//
//   name: <label>            (optional)
//   strands: <n>
//   start: <braid>
//   ins <pos> <letter> | cc <pos> <letter> | conj <braid> | cyc <k>
//   eq <braid> | stab + | stab - | destab
//   end: <braid>
//
// Positions are 0-based. Blank lines and lines starting with '#' are ignored.

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline bool starts_with_key(const std::string& line, std::string_view key, std::string& rest) {
  if (line.rfind(key, 0) != 0) return false;
  rest = trim(std::string_view(line).substr(key.size()));
  return true;
}

inline int parse_generator_token(const std::string& tok, int strands) {
  BraidWord g = parse_braid(tok, strands);
  if (g.size() != 1) throw ParseError("expected a single generator, got '" + tok + "'");
  return std::abs(g.letters[0]);
}

inline long long parse_int_token(const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

inline MoveScript parse_script(std::string_view text) {
  using detail::trim;
  MoveScript s;
  std::istringstream in{std::string(text)};
  std::string raw;
  int strands = 0;
  bool have_start = false, have_end = false;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (have_end) fail("text after end:");
    std::string rest;
    try {
      if (detail::starts_with_key(line, "name:", rest)) {
        if (strands) fail("name: must come first");
        s.name = rest;
      } else if (detail::starts_with_key(line, "strands:", rest)) {
        if (strands) fail("duplicate strands:");
        long long n = detail::parse_int_token(rest);
        if (n < 1 || n > 64) fail("strand count out of range");
        strands = static_cast<int>(n);
      } else if (detail::starts_with_key(line, "start:", rest)) {
        if (!strands) fail("start: before strands:");
        if (have_start) fail("duplicate start:");
        s.start = parse_braid(rest, strands);
        have_start = true;
      } else if (detail::starts_with_key(line, "end:", rest)) {
        if (!have_start) fail("end: before start:");
        s.end = parse_braid(rest, strands);
        have_end = true;
      } else {
        if (!have_start) fail("move before start:");
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        std::string arg_rest;
        std::getline(ls, arg_rest);
        arg_rest = trim(arg_rest);
        if (op == "ins" || op == "cc") {
          std::istringstream as(arg_rest);
          std::string pos, letter, extra;
          if (!(as >> pos >> letter) || (as >> extra)) fail(op + " takes a position and a letter");
          long long p = detail::parse_int_token(pos);
          if (p < 0) fail("negative position");
          int g = detail::parse_generator_token(letter, strands);
          if (op == "ins")
            s.moves.push_back(InsertPositive{static_cast<std::size_t>(p), g});
          else
            s.moves.push_back(CrossingChange{static_cast<std::size_t>(p), g});
        } else if (op == "conj") {
          s.moves.push_back(Conjugate{parse_braid(arg_rest, strands)});
        } else if (op == "cyc") {
          s.moves.push_back(CyclicPermute{detail::parse_int_token(arg_rest)});
        } else if (op == "eq") {
          s.moves.push_back(RewriteEqual{parse_braid(arg_rest, strands)});
        } else if (op == "stab") {
          if (arg_rest != "+" && arg_rest != "-") fail("stab takes + or -");
          s.moves.push_back(Stabilize{arg_rest == "+" ? 1 : -1});
          ++strands;
        } else if (op == "destab") {
          if (!arg_rest.empty()) fail("destab takes no argument");
          if (strands < 2) fail("destab on one strand");
          s.moves.push_back(Destabilize{});
          --strands;
        } else {
          fail("unknown move '" + op + "'");
        }
      }
    } catch (const ParseError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail(e.what());
    }
  }
  if (!strands) throw ParseError("missing strands:");
  if (!have_start) throw ParseError("missing start:");
  if (!have_end) throw ParseError("missing end:");
  return s;
}

inline std::string to_string(const MoveScript& s) {
  std::string out;
  if (!s.name.empty()) out += "name: " + s.name + "\n";
  out += "strands: " + std::to_string(s.start.strands) + "\n";
  auto braid_line = [](const std::string& key, const BraidWord& w) {
    std::string t = to_string(w);
    return key + (t.empty() ? "" : " " + t) + "\n";
  };
  out += braid_line("start:", s.start);
  int strands = s.start.strands;
  for (const auto& m : s.moves) {
    std::visit(
        [&](const auto& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, InsertPositive>)
            out += "ins " + std::to_string(mv.position) + " " + letter_text(mv.generator, strands) + "\n";
          else if constexpr (std::is_same_v<T, CrossingChange>)
            out += "cc " + std::to_string(mv.position) + " " + letter_text(mv.generator, strands) + "\n";
          else if constexpr (std::is_same_v<T, Conjugate>)
            out += braid_line("conj", mv.by);
          else if constexpr (std::is_same_v<T, CyclicPermute>)
            out += "cyc " + std::to_string(mv.shift) + "\n";
          else if constexpr (std::is_same_v<T, RewriteEqual>)
            out += braid_line("eq", mv.target);
          else if constexpr (std::is_same_v<T, Stabilize>) {
            out += std::string("stab ") + (mv.sign > 0 ? "+" : "-") + "\n";
            ++strands;
          } else {
            out += "destab\n";
            --strands;
          }
        },
        m);
  }
  out += braid_line("end:", s.end);
  return out;
}

// ---------------------------------------------------------------- replay

inline std::string describe(const Move& m) {
  return std::visit(
      [](const auto& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, InsertPositive>)
          return "ins " + std::to_string(mv.position) + " s" + std::to_string(mv.generator);
        else if constexpr (std::is_same_v<T, CrossingChange>)
          return "cc " + std::to_string(mv.position) + " s" + std::to_string(mv.generator);
        else if constexpr (std::is_same_v<T, Conjugate>)
          return "conj " + to_string(mv.by);
        else if constexpr (std::is_same_v<T, CyclicPermute>)
          return "cyc " + std::to_string(mv.shift);
        else if constexpr (std::is_same_v<T, RewriteEqual>)
          return "eq " + to_string(mv.target);
        else if constexpr (std::is_same_v<T, Stabilize>)
          return std::string("stab ") + (mv.sign > 0 ? "+" : "-");
        else
          return "destab";
      },
      m);
}

// Applies one move, updating the ledger. Throws DomainError on a failed precondition.
inline void apply_move(BraidWord& w, const Move& m, CobordismLedger& led) {
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, InsertPositive>) {
          if (mv.position > w.size())
            throw DomainError("insert position " + std::to_string(mv.position) + " beyond word length " +
                              std::to_string(w.size()));
          if (mv.generator < 1 || mv.generator >= w.strands) throw DomainError("generator out of range");
          w.letters.insert(w.letters.begin() + static_cast<std::ptrdiff_t>(mv.position), mv.generator);
          led.bands += 1;
          led.insertions += 1;
        } else if constexpr (std::is_same_v<T, CrossingChange>) {
          if (mv.position >= w.size())
            throw DomainError("crossing change position " + std::to_string(mv.position) + " beyond word length " +
                              std::to_string(w.size()));
          if (w.letters[mv.position] != -mv.generator)
            throw DomainError("letter at " + std::to_string(mv.position) + " is " +
                              letter_text(w.letters[mv.position], w.strands) + ", expected " +
                              letter_text(-mv.generator, w.strands));
          w.letters[mv.position] = mv.generator;
          led.bands += 2;
          led.crossing_changes += 1;
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          w = conjugate(w, mv.by);
        } else if constexpr (std::is_same_v<T, CyclicPermute>) {
          w = cyclic_permute(w, mv.shift);
        } else if constexpr (std::is_same_v<T, RewriteEqual>) {
          if (mv.target.strands != w.strands) throw DomainError("rewrite target has the wrong strand count");
          if (!equal(w, mv.target))
            throw DomainError("cannot certify " + to_string(w) + " = " + to_string(mv.target));
          w = mv.target;
        } else if constexpr (std::is_same_v<T, Stabilize>) {
          w = markov_stabilize(w, mv.sign);
          if (mv.sign < 0) {
            led.stabilized = true;
            led.negative_stabilizations += 1;
          }
        } else {
          w = markov_destabilize(w);
        }
      },
      m);
  led.component_trace.push_back(closure_components(w));
}

inline ScriptResult run_script(const MoveScript& s) {
  ScriptResult r;
  BraidWord w = s.start;
  CobordismLedger& led = r.ledger;
  led.slk_start = exponent_sum(w) - w.strands;
  led.component_trace.push_back(closure_components(w));
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    try {
      apply_move(w, s.moves[i], led);
    } catch (const std::exception& e) {
      throw ScriptError(i + 1, describe(s.moves[i]) + ": " + e.what());
    }
  }
  if (w.strands != s.end.strands || !equal(w, s.end))
    throw ScriptError(0, "final word " + to_string(w) + " on " + std::to_string(w.strands) +
                             " strands does not equal declared end " + to_string(s.end));
  led.slk_end = exponent_sum(w) - w.strands;
  led.euler = -led.bands;
  if (led.slk_end - led.slk_start != led.bands - 2 * led.negative_stabilizations)
    throw ScriptError(0, "ledger does not balance");
  if (led.component_trace.front() == 1 && led.component_trace.back() == 1) {
    if (led.bands % 2 != 0) throw ScriptError(0, "odd band count between knots");
    led.genus = led.bands / 2;
  }
  r.end = std::move(w);
  return r;
}

}  // namespace hatlab
