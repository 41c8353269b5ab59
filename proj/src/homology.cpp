#include "coxkit/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coxkit/errors.hpp"

namespace coxkit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix a) {
  SmithForm out;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    BigInt best;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0 && (!found || abs_big(a(i, j)) < best)) {
          found = true;
          best = abs_big(a(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot; move the smallest of row t
        // and column t onto the diagonal and reduce again.
        std::size_t bi = t, bj = t;
        BigInt b = abs_big(a(t, t));
        for (std::size_t i = t + 1; i < R; ++i)
          if (a(i, t) != 0 && abs_big(a(i, t)) < b) {
            b = abs_big(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(t, j) != 0 && abs_big(a(t, j)) < b) {
            b = abs_big(a(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C && divides; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < C; ++k) a(t, k) += a(i, k);
            divides = false;
          }
      if (divides) break;
    }
    out.factors.push_back(abs_big(a(t, t)));
  }
  out.rank = out.factors.size();
  return out;
}

namespace {

// Sparse integer matrix reduced by unit pivots, finished densely.
class SparseReducer {
 public:
  SparseReducer(std::size_t rows, std::size_t cols) : rows_(rows), col_rows_(cols) {}

  void set(std::size_t r, std::size_t c, long long v) {
    rows_[r][c] = v;
    col_rows_[c].insert(r);
  }

  SmithForm reduce() {
    std::size_t units = 0;
    std::vector<bool> dead_row(rows_.size(), false);
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (dead_row[r] || rows_[r].empty()) continue;
        // Unit entry in this row with the sparsest column.
        std::size_t best_c = 0;
        std::size_t best_fill = SIZE_MAX;
        for (const auto& [c, v] : rows_[r])
          if (abs_big(v) == 1 && col_rows_[c].size() < best_fill) {
            best_fill = col_rows_[c].size();
            best_c = c;
          }
        if (best_fill == SIZE_MAX) continue;
        eliminate(r, best_c);
        dead_row[r] = true;
        ++units;
        progress = true;
      }
    }
    // Dense remainder.
    std::vector<std::size_t> live_rows, live_cols;
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!dead_row[r] && !rows_[r].empty()) live_rows.push_back(r);
    for (std::size_t c = 0; c < col_rows_.size(); ++c)
      if (!col_rows_[c].empty()) {
        col_pos[c] = live_cols.size();
        live_cols.push_back(c);
      }
    SmithForm out;
    out.factors.assign(units, BigInt(1));
    if (!live_rows.empty() && !live_cols.empty()) {
      IntegerMatrix dense(live_rows.size(), live_cols.size());
      for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows_[live_rows[i]]) dense(i, col_pos[c]) = v;
      auto tail = smith_normal_form(std::move(dense));
      out.factors.insert(out.factors.end(), tail.factors.begin(), tail.factors.end());
    }
    out.rank = out.factors.size();
    return out;
  }

 private:
  void eliminate(std::size_t r, std::size_t c) {
    const BigInt unit = rows_[r][c];  // +-1, its own inverse
    std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
    for (std::size_t r2 : others) {
      if (r2 == r) continue;
      BigInt f = rows_[r2][c] * unit;
      for (const auto& [cc, v] : rows_[r]) {
        BigInt nv = rows_[r2][cc] - f * v;
        if (nv == 0) {
          rows_[r2].erase(cc);
          col_rows_[cc].erase(r2);
        } else {
          rows_[r2][cc] = nv;
          col_rows_[cc].insert(r2);
        }
      }
    }
    // Column c now only meets row r; clearing row r by column operations
    // touches nothing else, so both can be dropped.
    for (const auto& [cc, v] : rows_[r]) col_rows_[cc].erase(r);
    rows_[r].clear();
  }

  std::vector<std::map<std::size_t, BigInt>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

// Boundary map from k-simplices to (k-1)-simplices; k = 0 maps onto the
// augmentation Z.
SmithForm boundary_smith(const std::vector<Mask>& faces, const std::vector<Mask>& cells) {
  std::unordered_map<Mask, std::size_t> row;
  for (std::size_t i = 0; i < faces.size(); ++i) row[faces[i]] = i;
  SparseReducer red(faces.size(), cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto verts = members(cells[j]);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      Mask face = cells[j] & ~bit(verts[i]);
      red.set(row.at(face), j, (i % 2 == 0) ? 1 : -1);
    }
  }
  return red.reduce();
}

}  // namespace

const HomologyGroup& HomologyGroups::at(int k) const {
  static const HomologyGroup zero;
  if (k < -1 || k + 1 >= static_cast<int>(groups.size())) return zero;
  return groups[static_cast<std::size_t>(k + 1)];
}

bool HomologyGroups::is_sphere(int d) const {
  for (int k = -1; k <= std::max(top(), d); ++k) {
    const auto& g = at(k);
    if (!g.torsion.empty()) return false;
    if (g.betti != (k == d ? 1U : 0U)) return false;
  }
  return true;
}

std::string HomologyGroups::str() const {
  std::ostringstream os;
  bool any = false;
  for (int k = -1; k <= top(); ++k) {
    const auto& g = at(k);
    if (g.trivial()) continue;
    if (any) os << ", ";
    any = true;
    os << 'H' << k << '=';
    bool first = true;
    if (g.betti > 0) {
      os << 'Z';
      if (g.betti > 1) os << '^' << g.betti;
      first = false;
    }
    for (const auto& t : g.torsion) {
      if (!first) os << "+";
      os << "Z/" << t;
      first = false;
    }
  }
  return any ? os.str() : "0";
}

HomologyGroups reduced_homology(const SimplicialComplex& c) {
  const int dim = c.dimension();
  // chains[k + 1] holds the k-simplices; the empty simplex spans C_{-1}.
  std::vector<std::vector<Mask>> chains(static_cast<std::size_t>(dim + 2));
  chains[0] = {0};
  for (Mask s : c.simplices()) chains[static_cast<std::size_t>(popcount(s))].push_back(s);

  // bd[k + 1] is the Smith form of the boundary from k-chains, k = 0..dim.
  std::vector<SmithForm> bd(static_cast<std::size_t>(dim + 3));
  for (int k = 0; k <= dim; ++k)
    bd[static_cast<std::size_t>(k + 1)] =
        boundary_smith(chains[static_cast<std::size_t>(k)], chains[static_cast<std::size_t>(k + 1)]);

  HomologyGroups h;
  h.groups.resize(static_cast<std::size_t>(dim + 2));
  for (int k = -1; k <= dim; ++k) {
    const auto idx = static_cast<std::size_t>(k + 1);
    const std::size_t n = chains[idx].size();
    const std::size_t out_rank = bd[idx].rank;       // boundary leaving C_k (0 for k = -1)
    const std::size_t in_rank = bd[idx + 1].rank;    // boundary entering C_k
    h.groups[idx].betti = n - out_rank - in_rank;
    for (const auto& f : bd[idx + 1].factors)
      if (f > 1) h.groups[idx].torsion.push_back(f);
  }
  return h;
}

SimplicialComplex link(const SimplicialComplex& c, Mask sigma) {
  if (sigma == 0 || !c.has(sigma)) throw PreconditionError("link: not a simplex of the complex");
  Mask used = 0;
  std::vector<Mask> taus;
  for (Mask s : c.simplices())
    if ((s & sigma) == sigma && s != sigma) {
      taus.push_back(s & ~sigma);
      used |= s & ~sigma;
    }
  std::vector<int> to(c.vertices().size(), -1);
  std::vector<std::string> names;
  for (auto v : members(used)) {
    to[v] = static_cast<int>(names.size());
    names.push_back(c.vertices()[v]);
  }
  for (Mask& t : taus) {
    Mask r = 0;
    for (auto v : members(t)) r |= bit(static_cast<std::size_t>(to[v]));
    t = r;
  }
  return SimplicialComplex(std::move(names), std::move(taus));
}

namespace {

nlohmann::json simplex_json(const SimplicialComplex& c, Mask s) {
  std::vector<std::string> names;
  for (auto v : members(s)) names.push_back(c.vertices()[v]);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

AuditReport is_ghs(const SimplicialComplex& c, int d) {
  AuditReport rep;
  rep.name = "generalized_homology_sphere";
  if (c.dimension() != d || !c.is_pure()) {
    nlohmann::json bad = nlohmann::json::array();
    for (Mask f : c.facets())
      if (popcount(f) - 1 != d) bad.push_back(simplex_json(c, f));
    rep.add("pure of dimension " + std::to_string(d), false,
            "dimension " + std::to_string(c.dimension()), {{"facets", bad}});
    return rep;
  }
  auto h = reduced_homology(c);
  rep.add("homology of S^" + std::to_string(d), h.is_sphere(d), h.str());
  for (Mask s : c.simplices()) {
    const int k = popcount(s) - 1;
    auto lh = reduced_homology(link(c, s));
    bool ok = lh.is_sphere(d - k - 1);
    if (!ok)
      rep.add("link has homology of S^" + std::to_string(d - k - 1), false, lh.str(),
              {{"simplex", simplex_json(c, s)}});
  }
  if (rep.passed())
    rep.add("all " + std::to_string(c.size()) + " links are homology spheres", true);
  return rep;
}

}  // namespace coxkit
