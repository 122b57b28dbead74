#pragma once

// Independent reference computations used to cross-check the library.
// Written against plain std containers, not reldoc types.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline constexpr double inf = std::numeric_limits<double>::infinity();
using Matrix = std::vector<std::vector<double>>;
using BoolMatrix = std::vector<std::vector<bool>>;

// (a;b)(i,k) = min_j a(i,j) + b(j,k)
inline Matrix min_plus(const Matrix& a, const Matrix& b, std::size_t cols) {
  Matrix out(a.size(), std::vector<double>(cols, inf));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k)
      for (std::size_t j = 0; j < b.size(); ++j) out[i][k] = std::min(out[i][k], a[i][j] + b[j][k]);
  return out;
}

// Relational composition of Boolean relations given as pair sets.
inline std::set<std::pair<int, int>> rel_compose(const std::set<std::pair<int, int>>& a,
                                                 const std::set<std::pair<int, int>>& b) {
  std::set<std::pair<int, int>> out;
  for (auto [x, y] : a)
    for (auto [y2, z] : b)
      if (y == y2) out.insert({x, z});
  return out;
}

// Classical Hausdorff distance between finite nonempty point sets on a line.
inline double hausdorff(const std::vector<double>& A, const std::vector<double>& B) {
  auto directed = [](const std::vector<double>& S, const std::vector<double>& T) {
    double worst = 0;
    for (double s : S) {
      double best = inf;
      for (double t : T) best = std::min(best, std::fabs(s - t));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(A, B), directed(B, A));
}

// Strong bisimilarity of an unlabelled transition system by naive
// partition refinement: split blocks by the set of blocks reachable in one
// step until stable. Returns block ids per state.
inline std::vector<int> bisimilarity_classes(const std::vector<std::vector<int>>& succ) {
  const std::size_t n = succ.size();
  std::vector<int> block(n, 0);
  while (true) {
    std::map<std::pair<int, std::set<int>>, int> sig_id;
    std::vector<int> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::set<int> sig;
      for (int t : succ[s]) sig.insert(block[t]);
      auto key = std::make_pair(block[s], sig);
      auto it = sig_id.find(key);
      if (it == sig_id.end()) it = sig_id.emplace(key, static_cast<int>(sig_id.size())).first;
      next[s] = it->second;
    }
    std::set<int> before(block.begin(), block.end()), after(next.begin(), next.end());
    block = next;
    if (after.size() == before.size()) return block;
  }
}

// Connected components of the graph with an edge wherever w(i,j) < inf.
inline std::vector<int> finite_components(const Matrix& w) {
  const std::size_t n = w.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && (w[u][v] < inf || w[v][u] < inf)) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

// Same-block test for two block labelings.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

// Labelled partial orders on n points with a bottom and all binary joins,
// counted by brute force over the n*n order matrices.
inline std::size_t count_join_semilattices(std::size_t n) {
  std::size_t count = 0;
  const std::size_t cells = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
    auto le = [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = le(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && le(i, j) && le(j, i)) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (le(i, j) && le(j, k) && !le(i, k)) ok = false;
      }
    if (!ok) continue;
    bool bottom = false;
    for (std::size_t b = 0; b < n && !bottom; ++b) {
      bottom = true;
      for (std::size_t i = 0; i < n; ++i) bottom = bottom && le(b, i);
    }
    if (!bottom) continue;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        // a least upper bound exists
        bool lub = false;
        for (std::size_t u = 0; u < n && !lub; ++u) {
          if (!le(i, u) || !le(j, u)) continue;
          bool least = true;
          for (std::size_t v = 0; v < n; ++v)
            if (le(i, v) && le(j, v) && !le(u, v)) least = false;
          lub = least;
        }
        ok = lub;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
