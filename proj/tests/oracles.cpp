#include "oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

namespace oracle {

using coxkit::Mask;

double min_eigenvalue(const coxkit::CoxeterMatrix& m, Mask subset) {
  const auto idx = coxkit::members(subset);
  const auto n = static_cast<Eigen::Index>(idx.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        g(i, j) = 1.0;
        continue;
      }
      const auto l = m.label(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
      g(i, j) = l.is_infinite() ? -1.0 : -std::cos(M_PI / l.order());
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

coxkit::DiagramKind spectral_kind(const coxkit::CoxeterMatrix& m, Mask subset) {
  const double e = min_eigenvalue(m, subset);
  if (e > 1e-9) return coxkit::DiagramKind::Elliptic;
  if (e >= -1e-9) return coxkit::DiagramKind::Parabolic;
  return coxkit::DiagramKind::Indefinite;
}

std::vector<Mask> components(const coxkit::CoxeterMatrix& m, Mask subset) {
  std::vector<Mask> out;
  Mask left = subset;
  while (left) {
    Mask comp = left & (~left + 1), frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (auto v : coxkit::members(frontier))
        for (auto u : coxkit::members(left & ~comp))
          if (m.label(u, v) != coxkit::EdgeLabel::finite(2)) next |= coxkit::bit(u);
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool spectral_elliptic(const coxkit::CoxeterMatrix& m, Mask subset) { return min_eigenvalue(m, subset) > 1e-9; }

bool spectral_all_parabolic(const coxkit::CoxeterMatrix& m, Mask subset) {
  if (subset == 0) return false;
  for (Mask c : components(m, subset))
    if (spectral_kind(m, c) != coxkit::DiagramKind::Parabolic) return false;
  return true;
}

std::vector<Mask> brute_nerve(const coxkit::CoxeterMatrix& m) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= coxkit::full_mask(m.rank()); ++s)
    if (spectral_elliptic(m, s)) out.push_back(s);
  return out;
}

std::vector<BruteFlat> brute_maximal_flats(const coxkit::CoxeterMatrix& m) {
  std::vector<Mask> flats;
  for (Mask s = 1; s <= coxkit::full_mask(m.rank()); ++s)
    if (spectral_all_parabolic(m, s)) flats.push_back(s);
  std::vector<BruteFlat> out;
  for (Mask f : flats) {
    bool maximal = true;
    for (Mask g : flats)
      if (g != f && (f & ~g) == 0) maximal = false;
    if (maximal)
      out.push_back({f, coxkit::popcount(f) - static_cast<int>(components(m, f).size())});
  }
  return out;
}

namespace {

// Fraction-free elimination; every intermediate is a minor of `a`.
std::int64_t bareiss_det(SmallMatrix a) {
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = static_cast<std::int64_t>((static_cast<__int128>(a[i][j]) * a[k][k] -
                                             static_cast<__int128>(a[i][k]) * a[k][j]) / prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::int64_t> invariant_factors_by_minors(const SmallMatrix& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        SmallMatrix sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = std::gcd(g, bareiss_det(sub));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::size_t pairs_within(const coxkit::CoxeterMatrix& m, int c) {
  const std::size_t n = m.rank();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.label(i, j) != coxkit::EdgeLabel::finite(2)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) count += d[i][j] <= c;
  return count;
}

}  // namespace oracle
