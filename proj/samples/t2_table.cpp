// Prints the hat genus table for T(2,2k+1), k = 1..15, with the reasons behind each cell.
#include <iostream>

#include "hatlab/data.hpp"
#include "hatlab/witnesses.hpp"

int main() {
  auto rows = hatlab::t2_table(hatlab::witness_db(), 15);
  std::cout << hatlab::t2_table_tsv(rows);
  for (const auto& r : rows) {
    std::cout << hatlab::t2_name(r.k) << "  " << r.cell() << '\n';
    for (const auto& why : r.reasons) std::cout << "    " << why << '\n';
  }
}
