#pragma once

#include <vector>

namespace shiftcat {

template <class Visit>
void for_each_word(const EdgeShift& shift, std::size_t k, Visit&& visit) {
  Word w;
  if (k == 0) {
    visit(static_cast<const Word&>(w));
    return;
  }
  w.reserve(k);
  // Explicit stack of positions into out-edge lists keeps this iterative.
  std::vector<std::size_t> cursor;
  cursor.reserve(k);
  for (EdgeId first = 0; first < shift.edge_count(); ++first) {
    w.assign(1, first);
    cursor.assign(1, 0);
    if (k == 1) {
      visit(static_cast<const Word&>(w));
      continue;
    }
    while (!cursor.empty()) {
      const auto& outs = shift.out_edges(shift.edge(w.back()).dst);
      std::size_t& pos = cursor.back();
      if (pos == outs.size()) {
        cursor.pop_back();
        w.pop_back();
        continue;
      }
      w.push_back(outs[pos++]);
      if (w.size() == k) {
        visit(static_cast<const Word&>(w));
        w.pop_back();
      } else {
        cursor.push_back(0);
      }
    }
  }
}

}  // namespace shiftcat
