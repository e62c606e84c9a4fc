#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace chroma::detail {

/// Ranks items by an ordered key: equal keys share a rank, ranks are dense
/// and follow key order.
template <class Key>
std::vector<int> dense_ranks(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                sorted.begin());
  return ranks;
}

/// An ordered cell of items whose members are grouped into twin classes.
/// Twins are interchangeable, so only distinct arrangements of the class
/// labels are visited.
struct Cell {
  std::vector<std::vector<int>> twin_classes;
};

/// Builds cells from a colouring (colour = rank, cells in ascending colour)
/// and a twin predicate that is an equivalence relation within a cell.
template <class TwinPred>
std::vector<Cell> make_cells(const std::vector<int>& colour, TwinPred&& twins) {
  std::map<int, std::vector<int>> by_colour;
  for (int v = 0; v < static_cast<int>(colour.size()); ++v) by_colour[colour[v]].push_back(v);
  std::vector<Cell> cells;
  for (auto& [c, members] : by_colour) {
    Cell cell;
    for (int v : members) {
      bool placed = false;
      for (auto& cls : cell.twin_classes)
        if (twins(cls.front(), v)) {
          cls.push_back(v);
          placed = true;
          break;
        }
      if (!placed) cell.twin_classes.push_back({v});
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

/// Visits every labeling `position` (item -> 0..n-1) that places the cells in
/// order, once per distinct arrangement of twin classes inside each cell.
template <class Visit>
void for_each_cell_labeling(const std::vector<Cell>& cells, int n, Visit&& visit) {
  std::vector<int> position(n, -1);
  std::vector<std::vector<int>> arrangement(cells.size());
  std::vector<int> offset(cells.size() + 1, 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    int size = 0;
    for (std::size_t t = 0; t < cells[c].twin_classes.size(); ++t) {
      const auto count = cells[c].twin_classes[t].size();
      arrangement[c].insert(arrangement[c].end(), count, static_cast<int>(t));
      size += static_cast<int>(count);
    }
    offset[c + 1] = offset[c] + size;
  }

  auto place = [&](std::size_t c) {
    std::vector<std::size_t> used(cells[c].twin_classes.size(), 0);
    int p = offset[c];
    for (int t : arrangement[c]) position[cells[c].twin_classes[t][used[t]++]] = p++;
  };

  auto recurse = [&](auto&& self, std::size_t c) -> void {
    if (c == cells.size()) {
      visit(static_cast<const std::vector<int>&>(position));
      return;
    }
    std::sort(arrangement[c].begin(), arrangement[c].end());
    do {
      place(c);
      self(self, c + 1);
    } while (std::next_permutation(arrangement[c].begin(), arrangement[c].end()));
  };
  recurse(recurse, 0);
}

}  // namespace chroma::detail
