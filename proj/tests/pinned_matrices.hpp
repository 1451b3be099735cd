#pragma once

#include <cstdint>
#include <vector>

// Integer relation matrices with invariants worked out by hand from gcds of
// k x k minors: (torsion, free rank).
struct PinnedMatrix {
  std::vector<std::vector<long long>> rows;
  std::size_t columns;
  std::vector<std::int64_t> torsion;
  std::size_t free_rank;
};

inline const std::vector<PinnedMatrix>& pinned_matrices() {
  static const std::vector<PinnedMatrix> m{
      {{{2, -2}, {0, 4}}, 2, {2, 4}, 0},
      {{{2, 0}, {0, 3}}, 2, {6}, 0},
      {{{4}}, 1, {4}, 0},
      {{{1}}, 1, {}, 0},
      {{{2, 4}, {6, 8}}, 2, {2, 4}, 0},
      {{{0, 0}}, 2, {}, 2},
      {{{6, 0}, {0, 4}}, 2, {2, 12}, 0},
      {{{2, 0, 0}, {0, 2, 0}}, 3, {2, 2}, 1},
      {{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 3, {3}, 1},
      {{{12, 0}, {0, 18}}, 2, {6, 36}, 0},
  };
  return m;
}
