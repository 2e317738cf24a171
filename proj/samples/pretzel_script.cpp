// Replays the P(-2,3,7) script move by move and prints the braid after each step.
#include <iostream>

#include "hatlab/cobordism.hpp"
#include "hatlab/data.hpp"
#include "hatlab/hat_bounds.hpp"

int main() {
  using namespace hatlab;
  MoveScript s = parse_script(script_index().at("p-2_3_7").text);
  BraidWord w = s.start;
  CobordismLedger led;
  std::cout << "start  " << to_string(w) << "  slk " << self_linking(w) << '\n';
  for (const auto& m : s.moves) {
    apply_move(w, m, led);
    std::cout << describe(m) << "\n    -> " << to_string(w) << "  (B_" << w.strands << ", "
              << closure_components(w) << " component(s))\n";
  }
  ScriptResult r = run_script(s);
  std::cout << "bands " << r.ledger.bands << ", genus " << r.ledger.genus.value_or(-1) << '\n';
  i64 target = hat_genus_at_degree(r.ledger.slk_end, 6);
  std::cout << "degree-6 hat: " << *r.ledger.genus << " + " << target << " = "
            << hat_genus_at_degree(r.ledger.slk_start, 6) << '\n';
  return *r.ledger.genus + target == hat_genus_at_degree(r.ledger.slk_start, 6) ? 0 : 1;
}
