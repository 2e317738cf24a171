#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hatlab/braid.hpp"
#include "hatlab/cobordism.hpp"
#include "hatlab/corpus.hpp"
#include "hatlab/covers.hpp"
#include "hatlab/curve_search.hpp"
#include "hatlab/data.hpp"
#include "hatlab/garside.hpp"
#include "hatlab/hat_bounds.hpp"
#include "hatlab/knotdb.hpp"
#include "hatlab/reproduce.hpp"
#include "hatlab/torus_script.hpp"
#include "hatlab/witnesses.hpp"

using namespace hatlab;
using nlohmann::ordered_json;

namespace {

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string opt_text(const std::optional<i64>& v) { return v ? std::to_string(*v) : "-"; }

ordered_json ledger_json(const CobordismLedger& l) {
  ordered_json j;
  j["bands"] = l.bands;
  j["euler"] = l.euler;
  j["genus"] = l.genus ? ordered_json(*l.genus) : ordered_json(nullptr);
  j["slk_start"] = l.slk_start;
  j["slk_end"] = l.slk_end;
  j["crossing_changes"] = l.crossing_changes;
  j["insertions"] = l.insertions;
  j["negative_stabilizations"] = l.negative_stabilizations;
  j["stabilized"] = l.stabilized;
  j["component_trace"] = l.component_trace;
  return j;
}

int cmd_slk(const std::string& text, int strands, bool json) {
  BraidWord w = parse_braid(text, strands);
  int comps = closure_components(w);
  std::optional<i64> slk;
  if (comps == 1) slk = self_linking(w);
  if (json) {
    ordered_json j{{"braid", to_string(w)},  {"strands", strands},
                   {"exponent_sum", exponent_sum(w)}, {"components", comps},
                   {"slk", slk ? ordered_json(*slk) : ordered_json(nullptr)}};
    print_json(j);
  } else {
    std::cout << "braid\t" << to_string(w) << "\nstrands\t" << strands << "\nexponent_sum\t" << exponent_sum(w)
              << "\ncomponents\t" << comps << "\nslk\t" << opt_text(slk) << '\n';
  }
  return 0;
}

int cmd_eq(const std::string& a, const std::string& b, int strands, bool json) {
  BraidWord x = parse_braid(a, strands), y = parse_braid(b, strands);
  bool same = equal(x, y);
  if (json) {
    print_json({{"equal", same}, {"normal_form_a", to_string(normal_form(x))}, {"normal_form_b", to_string(normal_form(y))}});
  } else {
    std::cout << (same ? "equal" : "different") << '\n'
              << "nf(a)\t" << to_string(normal_form(x)) << "\nnf(b)\t" << to_string(normal_form(y)) << '\n';
  }
  return same ? 0 : 1;
}

int cmd_run_script(const std::string& path, bool json) {
  ScriptSource src{std::filesystem::path(path).stem().string(), read_text_file(path)};
  CorpusOutcome o = verify_script(src);
  if (json) {
    ordered_json j{{"id", o.id}, {"name", o.name}, {"ok", o.ok}};
    if (o.ok) {
      j["end"] = to_string(o.result->end);
      j["ledger"] = ledger_json(o.result->ledger);
    } else {
      j["failed_step"] = o.failed_step;
      j["error"] = o.error;
    }
    print_json(j);
  } else if (o.ok) {
    const auto& l = o.result->ledger;
    std::cout << "OK\t" << (o.name.empty() ? o.id : o.name) << "\nend\t" << to_string(o.result->end) << "\nbands\t"
              << l.bands << "\neuler\t" << l.euler << "\ngenus\t" << opt_text(l.genus) << "\nslk\t" << l.slk_start
              << " -> " << l.slk_end << "\ncrossing_changes\t" << l.crossing_changes << "\ninsertions\t"
              << l.insertions << (l.stabilized ? "\nstabilized\tyes" : "") << '\n';
  } else {
    std::cout << "FAIL\t" << o.id << '\t' << o.error << '\n';
  }
  return o.ok ? 0 : 1;
}

int cmd_verify_corpus(const std::string& dir, bool json) {
  std::vector<ScriptSource> sources;
  if (dir.empty()) {
    sources = embedded_scripts();
  } else {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".hat") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) sources.push_back({f.stem().string(), read_text_file(f.string())});
  }
  auto outcomes = verify_corpus(sources);
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const auto& o : outcomes) {
    all = all && o.ok;
    if (json) {
      ordered_json j{{"id", o.id}, {"name", o.name}, {"ok", o.ok}};
      if (o.ok) {
        j["ledger"] = ledger_json(o.result->ledger);
      } else {
        j["failed_step"] = o.failed_step;
        j["error"] = o.error;
      }
      arr.push_back(j);
    } else if (o.ok) {
      const auto& l = o.result->ledger;
      std::cout << "PASS\t" << (o.name.empty() ? o.id : o.name) << "\tbands " << l.bands << "\tgenus "
                << opt_text(l.genus) << "\tend " << to_string(o.result->end) << '\n';
    } else {
      std::cout << "FAIL\t" << o.id << '\t' << o.error << '\n';
    }
  }
  if (json) print_json(arr);
  return all ? 0 : 1;
}

int cmd_bounds(std::optional<i64> slk, std::optional<i64> slice_genus, const std::string& knot, int degrees,
               bool json) {
  std::vector<WitnessRef> witnesses;
  std::optional<i64> min_degree;
  if (!knot.empty()) {
    const auto& wdb = witness_db();
    KnotDb db = load_db();
    if (const KnotRecord* k = db.find(knot)) {
      if (!slk) slk = k->slk();
      if (!slice_genus && k->quasipositive) slice_genus = k->slice_genus;
      if (auto h = knot_hat(*k, script_index())) witnesses.push_back({h->degree, h->genus, h->source});
    } else {
      bool found = false;
      for (const auto& w : wdb.hats)
        if (w.knot == knot) {
          found = true;
          if (!slk) slk = t2_slk(w.k);
          if (!slice_genus) slice_genus = w.k;
          witnesses.push_back({w.degree, w.hat_genus, w.source + ": " + w.evidence});
        }
      for (const auto& b : wdb.degree_bounds)
        if (b.knot == knot) {
          found = true;
          if (!slk) slk = t2_slk(b.k);
          if (!slice_genus) slice_genus = b.k;
          min_degree = std::max(min_degree.value_or(0), b.min_degree);
        }
      if (!found) throw DomainError("no knot named " + knot + " in either database");
    }
  }
  if (!slk) throw DomainError("need --slk or --knot");
  HatBoundReport r = hat_bounds(*slk, slice_genus, degrees);
  if (min_degree) apply_degree_lb(r, *min_degree);
  for (auto& w : witnesses) add_witness(r, w);
  if (json) {
    ordered_json j;
    j["slk"] = r.slk;
    j["slice_genus"] = r.slice_genus ? ordered_json(*r.slice_genus) : ordered_json(nullptr);
    j["degree_lb"] = r.degree_lb;
    j["genus_lb"] = r.genus_lb;
    if (r.triangular) j["triangular"] = {{"m", r.triangular->m}, {"d", r.triangular->d}, {"genus_lb", r.triangular->genus_lb}};
    ordered_json gbd = ordered_json::object();
    for (auto [d, g] : r.genus_by_degree) gbd[std::to_string(d)] = g;
    j["genus_by_degree"] = gbd;
    j["witnesses"] = ordered_json::array();
    for (const auto& w : r.witnesses) j["witnesses"].push_back({{"degree", w.degree}, {"genus", w.genus}, {"source", w.source}});
    print_json(j);
  } else {
    std::cout << "slk\t" << r.slk << "\nslice_genus\t" << opt_text(r.slice_genus) << "\ndegree_lb\t" << r.degree_lb
              << "\ngenus_lb\t" << r.genus_lb << '\n';
    if (r.triangular)
      std::cout << "triangular\tm " << r.triangular->m << ", d " << r.triangular->d << ", genus >= "
                << r.triangular->genus_lb << '\n';
    std::cout << "degree\tgenus\n";
    for (auto [d, g] : r.genus_by_degree) std::cout << d << '\t' << g << '\n';
    for (const auto& w : r.witnesses)
      std::cout << "witness\tdegree " << w.degree << "\tgenus " << w.genus << '\t' << w.source << '\n';
  }
  return 0;
}

int cmd_t2_table(i64 kmax, bool json) {
  auto rows = t2_table(witness_db(), kmax);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"k", r.k}, {"lb", r.lb}, {"ub", r.ub ? ordered_json(*r.ub) : ordered_json(nullptr)},
                     {"reasons", r.reasons}});
    print_json(arr);
  } else {
    std::cout << t2_table_tsv(rows);
  }
  return 0;
}

int cmd_search(const SearchParams& sp, bool json) {
  SearchReport r = search(sp);
  mark_exclusions(r, witness_db());
  if (json) {
    print_json(to_json(r));
    return 0;
  }
  std::cout << "a\tb\tself_int\tlines\tconics\tohta_ono\tsurvives\n";
  for (const auto& s : r.solutions) {
    std::string b;
    for (std::size_t i = 0; i < s.c.b.size(); ++i) b += (i ? "," : "") + std::to_string(s.c.b[i]);
    std::cout << s.c.a << '\t' << (b.empty() ? "-" : b) << '\t' << s.self_int << '\t' << (s.gromov.lines ? "pass" : "fail")
              << '\t' << (s.gromov.conics ? "pass" : "fail") << '\t' << (s.ohta_ono ? "pass" : "fail") << '\t'
              << (s.survives() ? "yes" : (s.excluded ? "excluded" : "no")) << '\n';
  }
  std::cout << "# " << r.solutions.size() << " solution(s), " << r.surviving().size() << " surviving\n";
  return 0;
}

int cmd_covers(const std::string& knot, i64 r, bool json) {
  KnotDb db = load_db();
  const KnotRecord& k = db.at(knot);
  i64 g = k.slice_genus;
  ordered_json j{{"knot", k.name}, {"r", r}, {"slice_genus", g}, {"b2_filling", cover_filling_b2(g, r)}};
  std::string line = k.name + "\tr " + std::to_string(r) + "\tg " + std::to_string(g) + "\tb2(filling) " +
                     std::to_string(cover_filling_b2(g, r));
  if (r == 2 && k.determinant_one && k.filling_signature) {
    auto b = double_cover_books(g, *k.filling_signature);
    j["b2_cap"] = b.b2_cap;
    j["sigma_filling"] = b.sigma_filling;
    j["sigma_cap"] = b.sigma_cap;
    j["form"] = b.form;
    line += "\tb2(cap) " + std::to_string(b.b2_cap) + "\tsigma " + std::to_string(b.sigma_filling) + " + " +
            std::to_string(b.sigma_cap) + "\tcap form " + b.form;
  } else {
    i64 cap = 22 - cover_filling_b2(g, r);
    j["b2_cap"] = cap;
    j["form"] = "undetermined";
    line += "\tb2(cap) " + std::to_string(cap) + "\tcap form undetermined";
    if (!k.determinant_one && r == 2) line += " (branched double cover not a homology sphere)";
  }
  if (json)
    print_json(j);
  else
    std::cout << line << '\n';
  return 0;
}

int cmd_reproduce(const std::string& which, bool json) {
  std::vector<std::string> names;
  if (which == "all")
    names = report_names();
  else
    names = {which};
  bool ok = true;
  ordered_json arr = ordered_json::array();
  for (const auto& n : names) {
    Report r = reproduce(n);
    ok = ok && r.ok();
    if (json)
      arr.push_back(to_json(r));
    else
      std::cout << format_tsv(r);
  }
  if (json) print_json(names.size() == 1 ? arr[0] : arr);
  return ok ? 0 : 1;
}

int cmd_torus_script(const std::string& text, int strands) {
  MoveScript s = to_torus_script(parse_braid(text, strands));
  std::cout << to_string(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hatlab: braid cobordisms and projective hat bounds"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string braid_a, braid_b, path, knot, report = "all", dir;
  int strands = 0, degrees = 4;
  std::optional<i64> slk, slice_genus;
  i64 kmax = 11, r = 2;
  SearchParams sp;

  auto* slk_cmd = app.add_subcommand("slk", "exponent sum, components and self-linking of a braid");
  slk_cmd->add_option("braid", braid_a, "braid word")->required();
  slk_cmd->add_option("-n,--strands", strands, "number of strands")->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide whether two braid words are equal (exit 1 if not)");
  eq_cmd->add_option("a", braid_a)->required();
  eq_cmd->add_option("b", braid_b)->required();
  eq_cmd->add_option("-n,--strands", strands)->required();

  auto* run_cmd = app.add_subcommand("run-script", "replay a move script and print its ledger");
  run_cmd->add_option("file", path)->required()->check(CLI::ExistingFile);

  auto* corpus_cmd = app.add_subcommand("verify-corpus", "replay every built-in script (or every .hat in --dir)");
  corpus_cmd->add_option("--dir", dir)->check(CLI::ExistingDirectory);

  auto* bounds_cmd = app.add_subcommand("bounds", "hat genus and degree bounds");
  bounds_cmd->add_option("--slk", slk);
  bounds_cmd->add_option("--slice-genus", slice_genus);
  bounds_cmd->add_option("--knot", knot, "knot from the knot or witness database");
  bounds_cmd->add_option("--degrees", degrees, "how many degrees to tabulate")->check(CLI::Range(1, 100));

  auto* t2_cmd = app.add_subcommand("t2-table", "hat genus of T(2,2k+1)");
  t2_cmd->add_option("--kmax", kmax)->check(CLI::Range(1, 1000));

  auto* search_cmd = app.add_subcommand("search", "enumerate curve classes in blow-ups of CP2");
  search_cmd->add_option("--p", sp.p)->required()->check(CLI::Range(2, 1000));
  search_cmd->add_option("--blowups", sp.blowups)->required()->check(CLI::Range(0, 64));
  search_cmd->add_option("--genus", sp.genus)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--amin", sp.a_min)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--amax", sp.a_max)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--cap", sp.cap, "enumeration cap");

  auto* covers_cmd = app.add_subcommand("covers", "branched cover bookkeeping for a database knot");
  covers_cmd->add_option("--knot", knot)->required();
  covers_cmd->add_option("--r", r)->check(CLI::IsMember({2, 3, 4}));

  auto* repro_cmd = app.add_subcommand("reproduce", "PASS/FAIL report: appendix-scripts, t2-table, k3-searches, cover-books, all");
  repro_cmd->add_option("report", report)->check(CLI::IsMember({"appendix-scripts", "t2-table", "k3-searches", "cover-books", "all"}));

  auto* torus_cmd = app.add_subcommand("torus-script", "moves from a braid to a torus knot T(n, mn+1)");
  torus_cmd->add_option("braid", braid_a)->required();
  torus_cmd->add_option("-n,--strands", strands)->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*slk_cmd) return cmd_slk(braid_a, strands, json);
    if (*eq_cmd) return cmd_eq(braid_a, braid_b, strands, json);
    if (*run_cmd) return cmd_run_script(path, json);
    if (*corpus_cmd) return cmd_verify_corpus(dir, json);
    if (*bounds_cmd) return cmd_bounds(slk, slice_genus, knot, degrees, json);
    if (*t2_cmd) return cmd_t2_table(kmax, json);
    if (*search_cmd) return cmd_search(sp, json);
    if (*covers_cmd) return cmd_covers(knot, r, json);
    if (*repro_cmd) return cmd_reproduce(report, json);
    if (*torus_cmd) return cmd_torus_script(braid_a, strands);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
