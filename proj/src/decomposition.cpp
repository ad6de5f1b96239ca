#include "twic/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace twic {

bool decomposable(int n, int m) {
  if (n < 0 || m < 0) return false;
  if (n == m) return true;
  return 3 * m <= 2 * n || m >= 2 * n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int k) : parent(k) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LevelAssignment level_assignment(int n, int m) {
  if (!decomposable(n, m))
    throw NotDecomposable("level_assignment: ratio " + std::to_string(m) + "/" +
                          std::to_string(n) +
                          " lies strictly inside (2/3, 2); the channel is used "
                          "whole instead of decomposed");
  const int q = std::max(n, m);
  // Nodes 0..q-1 are transmit levels, q..2q-1 receive levels.
  UnionFind uf(2 * q);
  for (int l = 0; l < n; ++l) uf.unite(l, q + l + (q - n));
  for (int l = 0; l < m; ++l) uf.unite(l, q + l + (q - m));

  LevelAssignment la;
  la.direct_factor.resize(n);
  la.cross_factor.resize(m);
  // Instance ids in order of first appearance over transmit levels top-down.
  std::map<int, int> id_of_root;
  std::vector<int> first_tx;
  for (int l = 0; l < q; ++l) {
    const int r = uf.find(l);
    if ((l < n || l < m) && !id_of_root.count(r)) {
      id_of_root[r] = static_cast<int>(la.instances.size());
      la.instances.push_back(Factor{0, 0});
      first_tx.push_back(l);
    }
  }
  for (int l = 0; l < n; ++l) {
    const int id = id_of_root.at(uf.find(l));
    la.direct_factor[l] = id;
    ++la.instances[id].i;
  }
  for (int l = 0; l < m; ++l) {
    const int id = id_of_root.at(uf.find(l));
    la.cross_factor[l] = id;
    ++la.instances[id].j;
  }
  return la;
}

std::vector<std::pair<Factor, int>> factor_multiset(const LevelAssignment& la) {
  std::map<Factor, int> count;
  for (const auto& f : la.instances) ++count[f];
  return {count.begin(), count.end()};
}

Decomposition decompose(int n, int m) {
  Decomposition d;
  d.levels = level_assignment(n, m); // raises on non-decomposable ratios
  auto add = [&](int i, int j, int mult) {
    if (mult > 0) d.factors.push_back({Factor{i, j}, mult});
  };
  if (n == m) {
    add(1, 1, n);
  } else if (2 * m <= n) {
    add(1, 0, n - 2 * m);
    add(2, 1, m);
  } else if (3 * m <= 2 * n) {
    add(2, 1, 2 * n - 3 * m);
    add(3, 2, 2 * m - n);
  } else { // m >= 2n
    add(0, 1, m - 2 * n);
    add(1, 2, n);
  }
  return d;
}

} // namespace twic
