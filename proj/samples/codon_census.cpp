// Lists the 64-dimensional typical irreps of all basic classical Lie
// superalgebras, then folds diagram-conjugate rows together.

#include <iostream>

#include "superdim/format.hpp"

int main() {
  using namespace superdim;
  const SearchReport report = enumerate_all(Integer(64));
  std::cout << type_one_table(report.reps) << '\n' << type_two_table(report.reps) << '\n';
  const MergeResult merged = merge_conjugates(report.reps);
  std::cout << report.reps.size() << " rows, " << merged.classes.size() << " up to conjugation\n";
  for (const auto& [kept, dropped] : merged.merged)
    std::cout << "  " << to_string(kept.algebra) << ' ' << format_even(kept.even_labels) << " ~ " << format_even(dropped.even_labels) << '\n';
}
