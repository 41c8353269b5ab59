#include "coxkit/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "coxkit/classify.hpp"
#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

void require_3face(const PolytopeModel& p, Mask t) {
  p.index_of(t);
  if (p.face_dim(t) != 3) throw PreconditionError(p.face_name(t) + " is not a 3-face");
}

std::vector<std::size_t> two_face_generators(const PolytopeModel& p, Mask t) {
  std::vector<std::size_t> out;
  for (auto u : members(p.matrix().all() & ~t))
    if (p.is_face(t | bit(u))) out.push_back(u);
  return out;
}

bool on_some_cusp(const PolytopeModel& p, Mask s) {
  for (Mask a : p.cusps())
    if ((s & ~a) == 0) return true;
  return false;
}

}  // namespace

FacePoset face_poset(const PolytopeModel& p, Mask t) {
  require_3face(p, t);
  FacePoset out;
  std::vector<Mask> finite;  // vertex i < finite.size() is a finite vertex
  for (Mask s : p.faces())
    if ((s & t) == t && popcount(s) == popcount(t) + 3) finite.push_back(s);
  std::vector<std::size_t> cusps;
  for (std::size_t c = 0; c < p.cusps().size(); ++c)
    if (p.cusp_on(c, t)) cusps.push_back(c);
  out.cusp.assign(finite.size(), false);
  out.cusp.resize(finite.size() + cusps.size(), true);

  std::vector<Mask> edges;
  for (Mask e : p.faces())
    if ((e & t) == t && popcount(e) == popcount(t) + 2) edges.push_back(e);
  for (Mask e : edges) {
    std::vector<int> ends;
    for (std::size_t i = 0; i < finite.size(); ++i)
      if ((e & ~finite[i]) == 0) ends.push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < cusps.size(); ++j)
      if ((e & ~p.cusps()[cusps[j]]) == 0) ends.push_back(static_cast<int>(finite.size() + j));
    out.edges.push_back(ends);
  }
  for (auto u : two_face_generators(p, t)) {
    const Mask q = t | bit(u);
    std::vector<int> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((edges[i] & q) == q) es.push_back(static_cast<int>(i));
    out.faces.push_back(es);
  }
  return out;
}

FacePoset shape_poset(const ShapeTemplate& s) {
  FacePoset out;
  out.cusp.assign(s.kinds.size(), false);
  for (std::size_t i = 0; i < s.kinds.size(); ++i) out.cusp[i] = s.kinds[i] == 'c';
  std::map<std::pair<int, int>, int> edge_id;
  for (const auto& cyc : s.cycles) {
    std::vector<int> es;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 'A', b = cyc[(i + 1) % cyc.size()] - 'A';
      if (a > b) std::swap(a, b);
      auto [it, fresh] = edge_id.emplace(std::make_pair(a, b), static_cast<int>(out.edges.size()));
      if (fresh) out.edges.push_back({a, b});
      es.push_back(it->second);
    }
    std::sort(es.begin(), es.end());
    out.faces.push_back(es);
  }
  return out;
}

namespace {

using Pair = std::pair<int, int>;

Pair mapped(const std::vector<int>& phi, const std::vector<int>& e) {
  int a = phi[static_cast<std::size_t>(e[0])], b = phi[static_cast<std::size_t>(e[1])];
  return a < b ? Pair{a, b} : Pair{b, a};
}

std::multiset<std::set<Pair>> face_sets(const FacePoset& f, const std::vector<int>& phi) {
  std::multiset<std::set<Pair>> out;
  for (const auto& face : f.faces) {
    std::set<Pair> s;
    for (int e : face) s.insert(mapped(phi, f.edges[static_cast<std::size_t>(e)]));
    out.insert(s);
  }
  return out;
}

}  // namespace

bool matches_shape(const FacePoset& f, const ShapeTemplate& s) {
  const FacePoset t = shape_poset(s);
  const std::size_t nv = t.cusp.size();
  if (f.cusp.size() != nv || f.edges.size() != t.edges.size() || f.faces.size() != t.faces.size()) return false;
  for (const auto& e : f.edges)
    if (e.size() != 2) return false;

  auto adjacency = [nv](const FacePoset& p) {
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (const auto& e : p.edges) {
      adj[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = true;
      adj[static_cast<std::size_t>(e[1])][static_cast<std::size_t>(e[0])] = true;
    }
    return adj;
  };
  const auto ta = adjacency(t), fa = adjacency(f);
  auto degree = [nv](const std::vector<std::vector<bool>>& a, std::size_t i) {
    return std::count(a[i].begin(), a[i].end(), true);
  };
  std::vector<int> ident(nv);
  for (std::size_t i = 0; i < nv; ++i) ident[i] = static_cast<int>(i);
  const auto target_faces = face_sets(f, ident);

  std::vector<int> phi(nv, -1);
  std::vector<bool> used(nv, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == nv) return face_sets(t, phi) == target_faces;
    for (std::size_t j = 0; j < nv; ++j) {
      if (used[j] || degree(ta, i) != degree(fa, j)) continue;
      if (s.kinds[i] == 'f' && f.cusp[j]) continue;
      if (s.kinds[i] == 'c' && !f.cusp[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = ta[i][k] == fa[j][static_cast<std::size_t>(phi[k])];
      if (!ok) continue;
      phi[i] = static_cast<int>(j);
      used[j] = true;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    phi[i] = -1;
    return false;
  };
  return extend(0);
}

const ShapeTemplate& bad_face_shape() {
  static const ShapeTemplate s{"triangular bipyramid", "ffccc", {"ACD", "ADE", "AEC", "BCD", "BDE", "BEC"}};
  return s;
}

const std::vector<ShapeTemplate>& small_face_shapes() {
  static const std::vector<ShapeTemplate> shapes{
      {"a", "****", {"ABC", "ABD", "ACD", "BCD"}},
      {"b", "******", {"ABC", "DEF", "ACFD", "CBEF", "ABED"}},
      {"c", "c****", {"ABC", "ACD", "ADE", "AEB", "BCDE"}},
      {"d", "********", {"ABCD", "EFGH", "ABFE", "BCGF", "CDHG", "DAEH"}},
      {"e", "********", {"ABCG", "DEF", "GCFDH", "CBEF", "ABEDH", "AGH"}},
      {"f", "c******", {"ABFC", "ACD", "ADE", "AEGB", "FCDEG", "BFG"}},
      {"g", "c******", {"ABEF", "BEDC", "CDGA", "ABC", "DEFG", "AFG"}},
      {"h", "**cc**", {"ACD", "ADEB", "BEFC", "ABC", "CDF", "DEF"}},
      {"pentagonal pyramid (excluded)", "******", {"ABC", "ACD", "ADE", "AEF", "AFB", "BCDEF"}},
  };
  return shapes;
}

bool is_bad_3face(const PolytopeModel& p, Mask t) {
  return matches_shape(face_poset(p, t), bad_face_shape());
}

BadFaceReport bad_face_counts(const PolytopeModel& p) {
  BadFaceReport r;
  for (Mask t : p.faces_of_dim(3)) {
    ++r.alpha3;
    if (is_bad_3face(p, t)) ++r.bad;
  }
  r.good = r.alpha3 - r.bad;
  r.ratio = r.alpha3 == 0 ? Rational(0) : Rational(r.bad, r.alpha3);
  return r;
}

Rational bad_ratio_threshold(int n) {
  if (n < 8) throw PreconditionError("bad-face ratio bound needs n >= 8");
  return n % 2 == 0 ? Rational(3 * n + 6, 4 * (n - 3)) : Rational(3 * n + 9, 4 * (n - 2));
}

AuditReport bad_ratio_audit(int n, long long alpha3, long long bad) {
  const Rational bound = bad_ratio_threshold(n);
  if (alpha3 < 0 || bad < 0 || bad > alpha3) throw PreconditionError("inconsistent 3-face counts");
  const Rational ratio = alpha3 == 0 ? Rational(0) : Rational(bad, alpha3);
  AuditReport r;
  r.name = "bad 3-face ratio";
  r.add("bad/all < threshold", ratio < bound,
        std::to_string(bad) + "/" + std::to_string(alpha3) + " = " + ratio.str() + " vs " + bound.str());
  return r;
}

AuditReport bad_ratio_audit(const PolytopeModel& p) {
  bad_ratio_threshold(p.dimension());
  const auto c = bad_face_counts(p);
  return bad_ratio_audit(p.dimension(), c.alpha3, c.bad);
}

AngleDiagram angle_diagram(const PolytopeModel& p, Mask t, std::size_t u, std::size_t v) {
  require_3face(p, t);
  if (u == v || contains(t, u) || contains(t, v) || !p.is_face(t | bit(u) | bit(v)))
    throw PreconditionError("not a dihedral angle of " + p.face_name(t));
  AngleDiagram a;
  a.base = t;
  a.u = u;
  a.v = v;
  a.diagram = p.matrix().induced(t | bit(u) | bit(v));
  a.marked_u = a.diagram.index_of(p.matrix().name(u));
  a.marked_v = a.diagram.index_of(p.matrix().name(v));
  return a;
}

Rational weight(std::optional<int> d) {
  if (!d || *d > 15) return 0;
  return *d <= 7 ? Rational(1) : Rational(1, 3);
}

Rational weight(const AngleDiagram& a) {
  return weight(distance(a.diagram, a.diagram.all(), a.marked_u, a.marked_v));
}

Rational sigma_face(const PolytopeModel& p, Mask t) {
  require_3face(p, t);
  const auto gens = two_face_generators(p, t);
  Rational s = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (p.is_face(t | bit(gens[i]) | bit(gens[j]))) s += weight(angle_diagram(p, t, gens[i], gens[j]));
  return s;
}

EdgeSigma sigma_edge(const CoxeterMatrix& m, Mask t, int n) {
  if (popcount(t) != n - 1 || !is_elliptic(m, t))
    throw PreconditionError("edge diagram must be elliptic with n-1 vertices");
  EdgeSigma out;
  const auto idx = members(t);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) out.value += weight(distance(m, t, idx[i], idx[j]));
  out.bound = Rational(29 * (n - 1), 3);
  out.ok = out.value <= out.bound;
  return out;
}

EdgeSigma sigma_edge(const PolytopeModel& p, Mask t) {
  p.index_of(t);
  return sigma_edge(p.matrix(), t, p.dimension());
}

std::string to_string(KprimeType t) {
  switch (t) {
    case KprimeType::Type1: return "type1";
    case KprimeType::Type2: return "type2";
    case KprimeType::Type3: return "type3";
    case KprimeType::Type4: return "type4";
    case KprimeType::None: return "none";
  }
  return "none";
}

KprimeType classify_Kprime(const PolytopeModel& p, Mask t, const std::vector<Mask>& kprime) {
  require_3face(p, t);
  std::vector<std::size_t> g;
  for (Mask q : kprime) {
    if ((q & t) != t || popcount(q) != popcount(t) + 1 || !p.is_face(q))
      throw PreconditionError(p.face_name(q) + " is not a 2-face of " + p.face_name(t));
    g.push_back(members(q & ~t).front());
  }
  std::sort(g.begin(), g.end());
  if (std::adjacent_find(g.begin(), g.end()) != g.end()) throw PreconditionError("repeated 2-face");

  enum Meet { Edge, Cusp, Empty };
  auto meet = [&](std::size_t a, std::size_t b) {
    const Mask s = t | bit(a) | bit(b);
    if (p.is_face(s)) return Edge;
    return on_some_cusp(p, s) ? Cusp : Empty;
  };
  Mask all = t;
  for (auto u : g) all |= bit(u);
  const bool common_vertex = p.is_face(all) || on_some_cusp(p, all);

  if (g.size() == 3) {
    int edges = 0, cusps = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        auto m = meet(g[i], g[j]);
        edges += m == Edge;
        cusps += m == Cusp;
      }
    if (common_vertex) return KprimeType::None;
    if (edges == 3) return KprimeType::Type2;
    if (edges == 2 && cusps == 1) return KprimeType::Type3;
    return KprimeType::None;
  }
  if (g.size() == 4) {
    Meet mt[4][4];
    int edges = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        mt[i][j] = mt[j][i] = meet(g[i], g[j]);
        edges += mt[i][j] == Edge;
      }
    if (edges == 6) return KprimeType::Type1;
    if (common_vertex) return KprimeType::None;
    // Split into two opposite pairs; all cross pairs share an edge.
    static constexpr int split[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& s : split) {
      const bool opposite = mt[s[0]][s[1]] != Edge && mt[s[2]][s[3]] != Edge;
      const bool cross = mt[s[0]][s[2]] == Edge && mt[s[0]][s[3]] == Edge && mt[s[1]][s[2]] == Edge &&
                         mt[s[1]][s[3]] == Edge;
      if (opposite && cross) return KprimeType::Type4;
    }
  }
  return KprimeType::None;
}

AuditReport good_face_audit(const PolytopeModel& p) {
  AuditReport r;
  r.name = "good 3-face weights";
  std::size_t audited = 0, bad = 0, large = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (Mask t : p.faces_of_dim(3)) {
    const auto poset = face_poset(p, t);
    if (matches_shape(poset, bad_face_shape())) {
      ++bad;
      continue;
    }
    const int k = static_cast<int>(poset.faces.size());
    if (k > 6) {
      ++large;
      continue;
    }
    ++audited;
    std::string shape = "unmatched";
    for (const auto& s : small_face_shapes())
      if (matches_shape(poset, s)) {
        shape = s.name;
        break;
      }
    const Rational sigma = sigma_face(p, t);
    const bool ok = sigma >= Rational(7 - k);
    r.notes.push_back("3-face " + p.face_name(t) + ": k=" + std::to_string(k) + " shape " + shape +
                      " sigma=" + sigma.str());
    if (!ok)
      failures.push_back({{"face", sorted_names(p.matrix(), t)}, {"k", k}, {"sigma", sigma.str()}, {"shape", shape}});
  }
  if (audited > 0)
    r.add("sigma >= 7 - k", failures.empty(), std::to_string(audited) + " good 3-faces with k <= 6",
          failures.empty() ? nlohmann::json{} : failures);
  r.notes.push_back("skipped: " + std::to_string(bad) + " bad, " + std::to_string(large) + " with k > 6");
  return r;
}

Rational general_bound(const Rational& c) {
  if (c < 0) throw PreconditionError("C must be nonnegative");
  return 96 * c + 68;
}

WeightReport weight_report(const PolytopeModel& p) {
  WeightReport r;
  for (Mask t : p.faces_of_dim(3))
    r.faces.push_back({t, sigma_face(p, t), static_cast<int>(two_face_generators(p, t).size()), is_bad_3face(p, t)});
  for (Mask t : p.faces_of_dim(1)) r.edges.push_back({t, sigma_edge(p, t)});
  return r;
}

nlohmann::json to_json(const PolytopeModel& p, const WeightReport& r) {
  nlohmann::json faces = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& f : r.faces)
    faces.push_back({{"face", sorted_names(p.matrix(), f.face)},
                     {"sigma", f.sigma.str()},
                     {"two_faces", f.two_faces},
                     {"bad", f.bad}});
  for (const auto& e : r.edges)
    edges.push_back({{"edge", sorted_names(p.matrix(), e.edge)},
                     {"sigma", e.sigma.value.str()},
                     {"bound", e.sigma.bound.str()},
                     {"ok", e.sigma.ok}});
  return {{"faces", faces}, {"edges", edges}};
}

}  // namespace coxkit
