#ifndef TWIC_DECOMPOSITION_HPP
#define TWIC_DECOMPOSITION_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "twic/channel.hpp"

namespace twic {

// An elementary one-directional channel shape: i direct levels, j cross
// levels. The catalogue used by the planner is (1,0), (2,1), (3,2), (0,1),
// (1,2), plus (1,1) for equal-strength channels.
struct Factor {
  int i = 0;
  int j = 0;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }
  friend bool operator<(const Factor& a, const Factor& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

struct NotDecomposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Which orthogonal subchannel each physical level belongs to. Direct levels
// are indexed 0..n-1 (top first), cross levels 0..m-1; the value is a factor
// instance id. Instances are ordered by their smallest transmit level.
struct LevelAssignment {
  std::vector<int> direct_factor;
  std::vector<int> cross_factor;
  std::vector<Factor> instances;
};

struct Decomposition {
  std::vector<std::pair<Factor, int>> factors; // (shape, multiplicity)
  LevelAssignment levels;
};

bool decomposable(int n, int m);

// Splits (n,m) into orthogonal elementary subchannels:
//   m/n <= 1/2        -> (1,0)^(n-2m) x (2,1)^m
//   m/n in [1/2, 2/3] -> (2,1)^(2n-3m) x (3,2)^(2m-n)
//   m/n >= 2          -> (0,1)^(m-2n) x (1,2)^n
//   n == m            -> (1,1)^n
// Other ratios do not decompose and raise NotDecomposable.
Decomposition decompose(int n, int m);

// Connectivity coloring: transmit level l reaches receive level l+(q-n)
// directly and l+(q-m) across; connected components are the subchannels.
LevelAssignment level_assignment(int n, int m);

// The (shape, multiplicity) multiset of an assignment, sorted by shape.
std::vector<std::pair<Factor, int>> factor_multiset(const LevelAssignment& la);

} // namespace twic

#endif
