#pragma once

#include <string>
#include <vector>

#include "moore/simplex_maps/surj_tuple.hpp"

// The seven printed expansions, as (pair, right-hand side).
struct PrintedFormula {
  moore::PeifferPair pair;
  std::string rhs;
};

inline std::vector<PrintedFormula> printed_formulas() {
  using moore::SurjTuple;
  auto p = [](int n, std::vector<int> a, std::vector<int> b) {
    return moore::PeifferPair{n, SurjTuple(n, a), SurjTuple(n, b)};
  };
  return {
      {p(2, {0}, {1}), "[s_0x_1, s_1y_1]{~}[s_1y_1, s_1x_1]"},
      {p(3, {1, 0}, {2}), "[s_1s_0x_1, s_2y_2]{~}[s_2y_2, s_2s_{0}x_1]"},
      {p(3, {2, 0}, {1}), "[s_2s_0x_1, s_1y_2]{~}[s_1y_2, s_2s_1x_1]{~}[s_2s_1x_1, s_2y_2]{~}[s_2y_2, s_2s_0x_1]"},
      {p(3, {0}, {2, 1}), "[s_0x_2, s_2s_1y_1]{~}[s_2s_1y_1, s_1x_2]{~}[s_2x_2, s_2s_1y_1]"},
      {p(3, {0}, {1}), "[s_0x_2, s_1y_2]{~}[s_1y_2, s_1x_2]{~}[s_2x_2, s_2y_2]"},
      {p(3, {0}, {2}), "[s_0x_2, s_2y_2]"},
      {p(3, {1}, {2}), "[s_1x_2, s_2y_2]{~}[s_2y_2, s_2x_2]"},
  };
}
