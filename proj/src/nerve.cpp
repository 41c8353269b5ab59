#include "coxkit/nerve.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

// Same size: the set holding the least element of the symmetric difference
// comes first, i.e. lexicographic order on sorted index lists.
bool simplex_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  if (a == b) return false;
  Mask low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

Mask remap(Mask s, const std::vector<int>& to) {
  Mask out = 0;
  for (auto i : members(s)) out |= bit(static_cast<std::size_t>(to[i]));
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Mask> simplices)
    : vertices_(std::move(vertices)), simplices_(std::move(simplices)) {
  if (vertices_.size() > kMaxGenerators) throw PreconditionError("at most 64 vertices are supported");
  std::sort(simplices_.begin(), simplices_.end(), simplex_less);
  simplices_.erase(std::unique(simplices_.begin(), simplices_.end()), simplices_.end());
  if (!simplices_.empty() && simplices_.front() == 0) simplices_.erase(simplices_.begin());
  index_.reserve(simplices_.size() * 2);
  for (Mask s : simplices_) {
    if ((s & ~full_mask(vertices_.size())) != 0) throw PreconditionError("simplex uses unknown vertex");
    index_.insert(s);
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<Mask>& facets) {
  std::unordered_set<Mask> all;
  for (Mask f : facets) {
    // Every nonempty submask of f.
    for (Mask s = f; s != 0; s = (s - 1) & f) all.insert(s);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) all.insert(bit(i));
  return SimplicialComplex(std::move(vertices), std::vector<Mask>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<int> labels;
  for (const auto& f : facets) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::string> names;
  for (int l : labels) names.push_back(std::to_string(l));
  std::vector<Mask> masks;
  for (const auto& f : facets) {
    Mask m = 0;
    for (int v : f)
      m |= bit(static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
    masks.push_back(m);
  }
  return from_facets(std::move(names), masks);
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : popcount(simplices_.back()) - 1;
}

std::vector<Mask> SimplicialComplex::facets() const {
  std::vector<Mask> out;
  for (Mask s : simplices_) {
    bool facet = true;
    for (std::size_t v = 0; v < vertices_.size() && facet; ++v)
      if (!contains(s, v) && has(s | bit(v))) facet = false;
    if (facet) out.push_back(s);
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  const int d = dimension();
  for (Mask f : facets())
    if (popcount(f) - 1 != d) return false;
  return true;
}

std::vector<Mask> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<Mask> out;
  for (Mask s : simplices_)
    if (popcount(s) == k + 1) out.push_back(s);
  return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(Mask vertices) const {
  std::vector<int> to(vertices_.size(), -1);
  std::vector<std::string> names;
  for (auto i : members(vertices & full_mask(vertices_.size()))) {
    to[i] = static_cast<int>(names.size());
    names.push_back(vertices_[i]);
  }
  std::vector<Mask> kept;
  for (Mask s : simplices_)
    if ((s & ~vertices) == 0) kept.push_back(remap(s, to));
  return SimplicialComplex(std::move(names), std::move(kept));
}

Mask SimplicialComplex::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) {
    auto it = std::find(vertices_.begin(), vertices_.end(), n);
    if (it == vertices_.end()) throw PreconditionError("unknown vertex '" + n + "'");
    m |= bit(static_cast<std::size_t>(it - vertices_.begin()));
  }
  return m;
}

bool is_flag(const SimplicialComplex& c) {
  const std::size_t n = c.vertices().size();
  std::vector<Mask> adj(n, 0);
  for (Mask s : c.simplices_of_dim(1)) {
    auto v = members(s);
    adj[v[0]] |= bit(v[1]);
    adj[v[1]] |= bit(v[0]);
  }
  // Cliques grow one vertex at a time from simplices, so it suffices that
  // every simplex extended by a common neighbour is again a simplex.
  for (Mask s : c.simplices()) {
    Mask common = full_mask(n) & ~s;
    for (auto v : members(s)) common &= adj[v];
    for (auto v : members(common))
      if (!c.has(s | bit(v))) return false;
  }
  return true;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("COXKIT_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

Nerve build_nerve(const CoxeterMatrix& m, std::size_t cap) {
  const std::size_t n = m.rank();
  std::vector<Mask> infinite(n, 0), non_commuting(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.label(i, j).is_infinite()) infinite[i] |= bit(j);
      if (m.label(i, j).is_edge()) non_commuting[i] |= bit(j);
    }

  std::vector<Mask> all;
  std::vector<Mask> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back(bit(i));
  std::size_t depth = 1;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    if (all.size() > cap) throw CapExceeded("nerve enumeration", cap, depth);
    std::vector<Mask> next;
    for (Mask t : level) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(t));
      for (std::size_t v = top + 1; v < n; ++v) {
        if (infinite[v] & t) continue;
        Mask s = t | bit(v);
        // v commuting with all of t adds an A1 factor.
        if ((non_commuting[v] & t) == 0 || is_elliptic(m, s)) next.push_back(s);
      }
      if (all.size() + next.size() > cap) throw CapExceeded("nerve enumeration", cap, depth + 1);
    }
    level = std::move(next);
    ++depth;
  }
  return Nerve{m, SimplicialComplex(m.generators(), std::move(all)), 0};
}

namespace {

// Connected subsets of the diagram whose induced diagram is parabolic. Each
// has a non-cut vertex whose removal leaves a connected elliptic subset, so
// growing connected elliptic subsets by one neighbour finds all of them.
std::vector<Mask> connected_parabolic_sets(const CoxeterMatrix& m, std::size_t cap) {
  std::unordered_set<Mask> seen, parabolic;
  std::vector<Mask> frontier;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    frontier.push_back(bit(i));
    seen.insert(bit(i));
  }
  std::size_t depth = 1;
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier) {
      Mask nb = 0;
      for (auto v : members(s)) nb |= m.neighbours(v);
      nb &= ~s;
      for (auto v : members(nb)) {
        Mask t = s | bit(v);
        if (!seen.insert(t).second) continue;
        if (seen.size() > cap) throw CapExceeded("affine flat enumeration", cap, depth);
        auto type = classify_connected(m, t);
        if (type.elliptic()) next.push_back(t);
        else if (type.parabolic()) parabolic.insert(t);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return {parabolic.begin(), parabolic.end()};
}

}  // namespace

std::vector<AffineFlat> enumerate_affine_flats(const CoxeterMatrix& m, std::size_t cap) {
  auto pieces = connected_parabolic_sets(m, cap);
  std::sort(pieces.begin(), pieces.end());
  const std::size_t k = pieces.size();
  std::vector<Mask> reach(k, 0);  // closed neighbourhood of each piece in the diagram
  for (std::size_t i = 0; i < k; ++i) {
    reach[i] = pieces[i];
    for (auto v : members(pieces[i])) reach[i] |= m.neighbours(v);
  }
  auto compatible = [&](std::size_t i, Mask chosen) { return (reach[i] & chosen) == 0; };

  std::vector<AffineFlat> out;
  // Depth-first over sets of pairwise orthogonal pieces, in increasing
  // piece index so each union is produced once.
  std::vector<std::size_t> stack;
  auto recurse = [&](auto&& self, std::size_t from, Mask chosen) -> void {
    for (std::size_t i = from; i < k; ++i) {
      if (!compatible(i, chosen)) continue;
      Mask t = chosen | pieces[i];
      stack.push_back(i);
      bool maximal = true;
      for (std::size_t j = 0; j < k && maximal; ++j)
        if (compatible(j, t)) maximal = false;
      int dim = popcount(t) - static_cast<int>(stack.size());
      out.push_back({t, dim, maximal});
      if (out.size() > cap) throw CapExceeded("affine flat enumeration", cap, stack.size());
      self(self, i + 1, t);
      stack.pop_back();
    }
  };
  recurse(recurse, 0, 0);

  std::vector<Mask> order;
  for (const auto& f : out) order.push_back(f.generators);
  sort_canonical(m, order);
  std::map<Mask, AffineFlat> by_mask;
  for (const auto& f : out) by_mask[f.generators] = f;
  std::vector<AffineFlat> sorted;
  for (Mask s : order) sorted.push_back(by_mask[s]);
  return sorted;
}

std::vector<AffineFlat> maximal_flats(const CoxeterMatrix& m, std::size_t cap) {
  auto all = enumerate_affine_flats(m, cap);
  std::vector<AffineFlat> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const AffineFlat& f) { return f.maximal; });
  return out;
}

namespace {

nlohmann::json names_json(const CoxeterMatrix& m, Mask s) { return sorted_names(m, s); }

}  // namespace

AuditReport check_codim1_flats(const Nerve& n, int dim) {
  AuditReport rep;
  rep.name = "codim1_flats";
  for (const auto& f : maximal_flats(n.matrix)) {
    if (f.flat_dim < 2) {
      rep.notes.push_back("one-dimensional maximal flat {" + [&] {
        std::string s;
        for (const auto& x : sorted_names(n.matrix, f.generators)) s += (s.empty() ? "" : ",") + x;
        return s;
      }() + "} ignored (virtually cyclic)");
      continue;
    }
    rep.add("maximal flat has dimension " + std::to_string(dim - 1), f.flat_dim == dim - 1,
            "flat_dim " + std::to_string(f.flat_dim),
            {{"flat", names_json(n.matrix, f.generators)}, {"flat_dim", f.flat_dim}});
  }
  return rep;
}

AuditReport check_flat_isolation(const Nerve& n) {
  AuditReport rep;
  rep.name = "flat_isolation";
  rep.notes.push_back("necessary condition for isolated flats only; not a relative hyperbolicity certificate");
  auto flats = maximal_flats(n.matrix);
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      Mask common = flats[i].generators & flats[j].generators;
      bool ok = is_elliptic(n.matrix, common);
      rep.add("distinct maximal flats meet in an elliptic subset", ok, {},
              ok ? nlohmann::json{}
                 : nlohmann::json{{"flats", {names_json(n.matrix, flats[i].generators),
                                             names_json(n.matrix, flats[j].generators)}},
                                  {"shared", names_json(n.matrix, common)}});
    }
  return rep;
}

std::string to_string(BoundaryPosition::Kind k) {
  switch (k) {
    case BoundaryPosition::Kind::Boundary: return "boundary";
    case BoundaryPosition::Kind::Interior: return "interior";
    case BoundaryPosition::Kind::NonSeparating: return "non-separating";
  }
  return "?";
}

namespace {

// Components of the 1-skeleton of the full subcomplex on `vertices`.
std::vector<Mask> skeleton_components(const Nerve& n, Mask vertices) {
  const auto& m = n.matrix;
  std::vector<Mask> out;
  Mask rest = vertices;
  while (rest != 0) {
    Mask comp = Mask{1} << std::countr_zero(rest);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (auto v : members(frontier))
        for (auto u : members(rest & ~comp))
          if (!m.label(u, v).is_infinite()) next |= bit(u);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  sort_canonical(m, out);
  return out;
}

}  // namespace

bool is_cone_point(const Nerve& n, Mask flat, std::size_t v) {
  if (contains(flat, v)) return false;
  const Mask complement = n.matrix.all() & ~flat & ~bit(v);
  for (auto u : members(complement))
    if (!n.matrix.label(u, v).is_infinite()) return false;
  for (Mask s : n.complex.simplices())
    if ((s & ~flat) == 0 && !n.complex.has(s | bit(v))) return false;
  return true;
}

BoundaryPosition flat_boundary_position(const Nerve& n, Mask flat) {
  BoundaryPosition pos;
  pos.complement_components = skeleton_components(n, n.matrix.all() & ~flat);
  std::vector<std::size_t> cones;
  for (Mask c : pos.complement_components)
    if (popcount(c) == 1 && is_cone_point(n, flat, members(c)[0])) cones.push_back(members(c)[0]);
  if (!cones.empty()) {
    pos.kind = BoundaryPosition::Kind::Boundary;
    pos.cone_vertex = *std::min_element(cones.begin(), cones.end(), [&](auto a, auto b) {
      return n.matrix.name(a) < n.matrix.name(b);
    });
  } else if (pos.complement_components.size() == 2) {
    pos.kind = BoundaryPosition::Kind::Interior;
  } else {
    pos.kind = BoundaryPosition::Kind::NonSeparating;
  }
  return pos;
}

Nerve mark_cone_vertices(Nerve n, int dim) {
  for (const auto& f : maximal_flats(n.matrix)) {
    if (f.flat_dim != dim - 1) continue;
    auto pos = flat_boundary_position(n, f.generators);
    if (pos.kind != BoundaryPosition::Kind::Boundary) continue;
    bool already = false;
    for (auto c : members(n.cone_vertices)) already = already || is_cone_point(n, f.generators, c);
    if (!already) n.cone_vertices |= bit(pos.cone_vertex);
  }
  return n;
}

nlohmann::json nerve_to_json(const Nerve& n, const std::vector<AffineFlat>& flats) {
  const auto& m = n.matrix;
  nlohmann::json j;
  j["vertices"] = m.generators();
  std::vector<Mask> facets = n.complex.facets();
  sort_canonical(m, facets);
  nlohmann::json fj = nlohmann::json::array();
  for (Mask f : facets) fj.push_back(sorted_names(m, f));
  j["facets"] = std::move(fj);
  j["cone_vertices"] = sorted_names(m, n.cone_vertices);
  nlohmann::json flj = nlohmann::json::array();
  for (const auto& f : flats)
    flj.push_back({{"generators", sorted_names(m, f.generators)},
                   {"flat_dim", f.flat_dim},
                   {"maximal", f.maximal}});
  j["flats"] = std::move(flj);
  j["simplex_count"] = n.complex.size();
  j["dimension"] = n.complex.dimension();
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Mask> facets;
  SimplicialComplex probe(vertices, {});
  for (const auto& f : j.at("facets")) facets.push_back(probe.mask_of(f.get<std::vector<std::string>>()));
  return SimplicialComplex::from_facets(std::move(vertices), facets);
}

}  // namespace coxkit
