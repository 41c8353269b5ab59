#include "coxkit/isomorphism.hpp"

#include <algorithm>

namespace coxkit {

namespace {

// Degree plus sorted incident labels; equal signatures are necessary for a
// vertex to map onto another.
using Signature = std::vector<int>;

Signature signature(const CoxeterMatrix& m, Mask subset, std::size_t v) {
  Signature s;
  for (auto u : members(m.neighbours(v) & subset)) s.push_back(m.label(v, u).key());
  std::sort(s.begin(), s.end());
  return s;
}

struct Matcher {
  const CoxeterMatrix& a;
  const CoxeterMatrix& b;
  std::vector<std::size_t> order;  // a-vertices in search order
  std::vector<Signature> sig_a;    // indexed like `order`
  std::vector<Signature> sig_b;
  std::vector<std::size_t> image;  // indexed like `order`
  std::vector<bool> used;

  bool search(std::size_t k) {
    if (k == order.size()) return true;
    for (std::size_t cand = 0; cand < b.rank(); ++cand) {
      if (used[cand] || sig_b[cand] != sig_a[k]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = a.label(order[k], order[j]) == b.label(cand, image[j]);
      if (!ok) continue;
      used[cand] = true;
      image[k] = cand;
      if (search(k + 1)) return true;
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const CoxeterMatrix& a, Mask a_subset,
                                                         const CoxeterMatrix& b) {
  a_subset &= a.all();
  const auto verts = members(a_subset);
  if (verts.size() != b.rank()) return std::nullopt;

  std::vector<Signature> sa, sb;
  for (auto v : verts) sa.push_back(signature(a, a_subset, v));
  for (std::size_t v = 0; v < b.rank(); ++v) sb.push_back(signature(b, b.all(), v));
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }

  // Search order: repeatedly take the unvisited vertex with the most
  // neighbours already ordered, ties by degree; keeps consistency checks tight.
  std::vector<std::size_t> order;
  Mask placed = 0;
  while (order.size() < verts.size()) {
    std::size_t best = 0;
    int best_score = -1;
    for (auto v : verts) {
      if (contains(placed, v)) continue;
      int score = popcount(a.neighbours(v) & placed) * 64 + popcount(a.neighbours(v) & a_subset);
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }

  Matcher mt{a, b, order, {}, sb, std::vector<std::size_t>(order.size()),
             std::vector<bool>(b.rank(), false)};
  for (auto v : order) mt.sig_a.push_back(signature(a, a_subset, v));
  if (!mt.search(0)) return std::nullopt;

  std::vector<std::size_t> result(verts.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto pos = std::lower_bound(verts.begin(), verts.end(), order[k]) - verts.begin();
    result[pos] = mt.image[k];
  }
  return result;
}

}  // namespace coxkit
