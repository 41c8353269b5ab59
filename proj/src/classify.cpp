#include "coxkit/classify.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "coxkit/errors.hpp"
#include "coxkit/isomorphism.hpp"

namespace coxkit {

std::string to_string(DiagramKind k) {
  switch (k) {
    case DiagramKind::Elliptic: return "elliptic";
    case DiagramKind::Parabolic: return "parabolic";
    case DiagramKind::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

// Templates on >= 3 vertices; rank-2 diagrams are read off the label.
const std::vector<Template>& candidates(std::size_t n) {
  static std::array<std::vector<Template>, kMaxGenerators + 1> table;
  static std::once_flag once;
  std::call_once(once, [] {
    for (std::size_t r = 3; r <= kMaxGenerators; ++r) table[r] = templates_of_rank(r, 2);
  });
  return table[n];
}

DiagramType indefinite() { return {DiagramKind::Indefinite, {}}; }

DiagramType classify_pair(EdgeLabel l) {
  if (l.is_infinite()) return {DiagramKind::Parabolic, {"~A1"}};
  switch (l.order()) {
    case 2: return {DiagramKind::Elliptic, {"A1", "A1"}};
    case 3: return {DiagramKind::Elliptic, {"A2"}};
    case 4: return {DiagramKind::Elliptic, {"B2"}};
    case 6: return {DiagramKind::Elliptic, {"G2"}};
    default: return {DiagramKind::Elliptic, {"I2(" + std::to_string(l.order()) + ")"}};
  }
}

}  // namespace

DiagramType classify_connected(const CoxeterMatrix& m, Mask subset) {
  subset &= m.all();
  const int n = popcount(subset);
  if (n == 0) throw PreconditionError("classify_connected: empty diagram");
  if (n == 1) return {DiagramKind::Elliptic, {"A1"}};
  const auto verts = members(subset);
  if (n == 2) {
    auto l = m.label(verts[0], verts[1]);
    if (!l.is_edge()) throw PreconditionError("classify_connected: diagram is disconnected");
    return classify_pair(l);
  }
  // Every connected elliptic or parabolic diagram on >= 3 vertices has
  // labels <= 6, max degree 4 and at most as many edges as vertices.
  int edges = 0;
  for (auto v : verts) {
    Mask nb = m.neighbours(v) & subset;
    if (popcount(nb) > 4) return indefinite();
    for (auto u : members(nb)) {
      auto l = m.label(u, v);
      if (l.is_infinite() || l.order() > 6) return indefinite();
    }
    edges += popcount(nb);
  }
  if (edges / 2 > n) return indefinite();
  for (const auto& t : candidates(static_cast<std::size_t>(n)))
    if (find_isomorphism(m, subset, t.diagram)) return {t.kind, {t.family}};
  return indefinite();
}

DiagramType classify_connected(const CoxeterMatrix& m) { return classify_connected(m, m.all()); }

DiagramType classify(const CoxeterMatrix& m, Mask subset) {
  DiagramType out{DiagramKind::Elliptic, {}};
  for (Mask c : connected_components(m, subset)) {
    auto t = classify_connected(m, c);
    if (t.indefinite()) return indefinite();
    if (t.parabolic()) out.kind = DiagramKind::Parabolic;
    out.families.insert(out.families.end(), t.families.begin(), t.families.end());
  }
  return out;
}

DiagramType classify(const CoxeterMatrix& m) { return classify(m, m.all()); }

bool is_elliptic(const CoxeterMatrix& m, Mask subset) {
  for (Mask c : connected_components(m, subset)) {
    if (popcount(c) == 1) continue;
    if (popcount(c) == 2) {
      auto v = members(c);
      if (m.label(v[0], v[1]).is_infinite()) return false;
      continue;
    }
    if (!classify_connected(m, c).elliptic()) return false;
  }
  return true;
}

bool is_quasi_lanner(const CoxeterMatrix& m, Mask subset) {
  subset &= m.all();
  if (popcount(subset) < 3) throw PreconditionError("is_quasi_lanner: needs at least 3 vertices");
  if (!is_connected(m, subset)) throw PreconditionError("is_quasi_lanner: diagram is disconnected");
  if (!classify_connected(m, subset).indefinite()) return false;
  for (auto v : members(subset))
    if (!classify(m, subset & ~bit(v)).nonnegative()) return false;
  return true;
}

bool is_quasi_lanner(const CoxeterMatrix& m) { return is_quasi_lanner(m, m.all()); }

namespace {

struct Extender {
  CoxeterMatrix work;
  std::size_t base = 0;  // template vertices are 0..base-1, new vertex is `base`
  std::vector<CoxeterMatrix>* found;

  void run(std::size_t i) {
    const std::size_t x = base;
    if (i == base) {
      if (work.neighbours(x) == 0) return;
      if (!is_quasi_lanner(work)) return;
      for (const auto& f : *found)
        if (isomorphic(f, work)) return;
      found->push_back(work);
      return;
    }
    for (int label : {2, 3, 4, 5, 6}) {
      work.set_label(i, x, EdgeLabel::finite(label));
      // {0..i, x} is a proper subset unless i is the last template vertex.
      if (i + 1 < base && !classify(work, full_mask(i + 1) | bit(x)).nonnegative()) continue;
      run(i + 1);
    }
    work.set_label(i, x, EdgeLabel::finite(2));
  }
};

}  // namespace

std::vector<CoxeterMatrix> enumerate_quasi_lanner(std::size_t vertices) {
  if (vertices < 4) throw PreconditionError("enumerate_quasi_lanner: needs at least 4 vertices");
  std::vector<CoxeterMatrix> found;
  for (const auto& t : templates_of_rank(vertices - 1, 6)) {
    Extender ext{t.diagram, vertices - 1, &found};
    ext.work.add_generator("x" + std::to_string(vertices - 1));
    ext.run(0);
  }
  return found;
}

DiameterReport quasi_lanner_diameter_report(const std::vector<QuasiLannerEntry>& table) {
  DiameterReport rep;
  for (const auto& e : table) {
    const auto& d = e.diagram;
    DiameterEntry de{e.name, d.rank(), 0, {}};
    for (std::size_t u = 0; u < d.rank(); ++u) {
      auto dist = distances_from(d, d.all(), u);
      for (std::size_t v = u + 1; v < d.rank(); ++v) {
        de.diameter = std::max(de.diameter, dist[v]);
        if (dist[v] == 8) {
          auto a = d.name(u), b = d.name(v);
          if (b < a) std::swap(a, b);
          de.pairs_at_8.emplace_back(a, b);
        }
      }
    }
    std::sort(de.pairs_at_8.begin(), de.pairs_at_8.end());
    if (de.diameter > 8) rep.all_within_8 = false;
    if (de.pairs_at_8.size() > 1) rep.at_most_one_pair_at_8_per_diagram = false;
    rep.pairs_at_8_total += de.pairs_at_8.size();
    if (!de.pairs_at_8.empty()) rep.attaining.push_back(e.name);
    rep.entries.push_back(std::move(de));
  }
  return rep;
}

PairCount pair_count_check(const CoxeterMatrix& m, int c) {
  if (c <= 0) throw PreconditionError("pair_count_check: C must be positive");
  if (!is_connected(m, m.all())) throw PreconditionError("pair_count_check: diagram is disconnected");
  if (!classify_connected(m).nonnegative())
    throw PreconditionError("pair_count_check: diagram is indefinite");
  PairCount pc;
  for (std::size_t u = 0; u < m.rank(); ++u) {
    auto dist = distances_from(m, m.all(), u);
    for (std::size_t v = u + 1; v < m.rank(); ++v)
      if (dist[v] >= 0 && dist[v] <= c) ++pc.count;
  }
  pc.bound = static_cast<std::size_t>(c) * m.rank();
  pc.ok = pc.count <= pc.bound;
  return pc;
}

}  // namespace coxkit
