#include "coxkit/surgery.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxkit/errors.hpp"
#include "coxkit/isomorphism.hpp"

namespace coxkit {

namespace {

std::string fresh_name(const std::set<std::string>& taken, const std::string& base) {
  if (!taken.count(base)) return base;
  for (int i = 2;; ++i) {
    auto n = base + std::to_string(i);
    if (!taken.count(n)) return n;
  }
}

// Cone vertex over `flat` that gluing removes: a marked one if present.
std::size_t gluing_cone(const Nerve& n, Mask flat) {
  auto pos = flat_boundary_position(n, flat);
  if (pos.kind != BoundaryPosition::Kind::Boundary)
    throw PreconditionError("glue: flat is not in boundary position (" + to_string(pos.kind) + ")");
  for (auto c : members(n.cone_vertices))
    if (is_cone_point(n, flat, c)) return c;
  return pos.cone_vertex;
}

}  // namespace

CutResult cut_along_flat(const Nerve& n, Mask flat) {
  auto pos = flat_boundary_position(n, flat);
  if (pos.kind == BoundaryPosition::Kind::Boundary)
    throw PreconditionError("cut: flat already in boundary position (cone vertex '" +
                            n.matrix.name(pos.cone_vertex) + "')");
  if (pos.complement_components.size() != 2)
    throw PreconditionError("cut: complement of the flat has " +
                            std::to_string(pos.complement_components.size()) +
                            " components, expected 2");

  CutResult out;
  out.flat = sorted_names(n.matrix, flat);
  std::set<std::string> taken(n.matrix.generators().begin(), n.matrix.generators().end());
  for (int i = 0; i < 2; ++i) {
    const Mask part = pos.complement_components[static_cast<std::size_t>(i)] | flat;
    CoxeterMatrix m = n.matrix.induced(part);
    const std::string cone = fresh_name(taken, "cone");
    taken.insert(cone);
    const Mask flat_here = m.mask_of(out.flat);
    const std::size_t c = m.add_generator(cone);
    for (std::size_t u = 0; u < c; ++u)
      m.set_label(u, c, contains(flat_here, u) ? EdgeLabel::finite(2) : EdgeLabel::infinity());
    Nerve piece = build_nerve(m);
    for (auto v : members(n.cone_vertices & part)) piece.cone_vertices |= bit(m.index_of(n.matrix.name(v)));
    piece.cone_vertices |= bit(c);
    out.pieces[static_cast<std::size_t>(i)] = std::move(piece);
    out.cone_vertex_names[static_cast<std::size_t>(i)] = cone;
  }
  return out;
}

Nerve glue_along_flat(const Nerve& n1, Mask f1, const Nerve& n2, Mask f2,
                      const std::map<std::string, std::string>& match) {
  const auto& m1 = n1.matrix;
  const auto& m2 = n2.matrix;
  if (popcount(f1) != popcount(f2) || match.size() != static_cast<std::size_t>(popcount(f1)))
    throw PreconditionError("glue: match is not a bijection between the flats");
  std::map<std::size_t, std::size_t> to2, to1;  // flat index maps
  for (const auto& [a, b] : match) {
    auto i = m1.index_of(a), j = m2.index_of(b);
    if (!contains(f1, i) || !contains(f2, j))
      throw PreconditionError("glue: match uses a vertex outside the flats");
    if (!to1.emplace(j, i).second) throw PreconditionError("glue: match is not injective");
    to2[i] = j;
  }
  for (auto [i, j] : to2)
    for (auto [k, l] : to2)
      if (i < k && m1.label(i, k) != m2.label(j, l))
        throw PreconditionError("glue: match is not label-preserving (" + m1.name(i) + "," + m1.name(k) +
                                " has " + m1.label(i, k).str() + ", image has " + m2.label(j, l).str() + ")");

  const std::size_t c1 = gluing_cone(n1, f1);
  const std::size_t c2 = gluing_cone(n2, f2);

  std::vector<std::string> names;
  std::vector<std::size_t> src1;  // indices into m1
  for (std::size_t i = 0; i < m1.rank(); ++i)
    if (i != c1) {
      names.push_back(m1.name(i));
      src1.push_back(i);
    }
  std::set<std::string> taken(names.begin(), names.end());
  std::vector<std::size_t> src2;  // indices into m2 outside f2
  for (std::size_t j = 0; j < m2.rank(); ++j) {
    if (j == c2 || contains(f2, j)) continue;
    std::string nm = m2.name(j);
    while (taken.count(nm)) nm += '\'';
    taken.insert(nm);
    names.push_back(nm);
    src2.push_back(j);
  }
  CoxeterMatrix m(names);
  const std::size_t k1 = src1.size();
  for (std::size_t a = 0; a < k1; ++a)
    for (std::size_t b = a + 1; b < k1; ++b) m.set_label(a, b, m1.label(src1[a], src1[b]));
  for (std::size_t a = 0; a < src2.size(); ++a) {
    for (std::size_t b = a + 1; b < src2.size(); ++b)
      m.set_label(k1 + a, k1 + b, m2.label(src2[a], src2[b]));
    for (std::size_t b = 0; b < k1; ++b) {
      const std::size_t i = src1[b];
      if (contains(f1, i)) m.set_label(k1 + a, b, m2.label(src2[a], to2[i]));
      else m.set_label(k1 + a, b, EdgeLabel::infinity());
    }
  }
  Nerve out = build_nerve(m);
  for (auto c : members(n1.cone_vertices & ~bit(c1))) out.cone_vertices |= bit(m.index_of(m1.name(c)));
  for (std::size_t a = 0; a < src2.size(); ++a)
    if (contains(n2.cone_vertices, src2[a])) out.cone_vertices |= bit(k1 + a);
  return out;
}

std::vector<Nerve> normalize_boundary(const Nerve& n, int dim) {
  auto codim1 = [dim](const Nerve& x) {
    std::vector<Mask> out;
    for (const auto& f : maximal_flats(x.matrix))
      if (f.flat_dim == dim - 1) out.push_back(f.generators);
    return out;
  };
  const std::size_t limit = codim1(n).size();
  std::size_t cuts = 0;
  std::deque<Nerve> work{n};
  std::vector<Nerve> done;
  while (!work.empty()) {
    Nerve cur = std::move(work.front());
    work.pop_front();
    auto flats = codim1(cur);
    sort_canonical(cur.matrix, flats);
    bool cut = false;
    for (Mask f : flats) {
      auto pos = flat_boundary_position(cur, f);
      if (pos.kind == BoundaryPosition::Kind::Boundary) continue;
      if (pos.kind == BoundaryPosition::Kind::NonSeparating)
        throw PreconditionError("normalize: flat {" + [&] {
          std::string s;
          for (const auto& x : sorted_names(cur.matrix, f)) s += (s.empty() ? "" : ",") + x;
          return s;
        }() + "} does not separate the nerve");
      if (++cuts > limit) throw PreconditionError("normalize: exceeded iteration cap " + std::to_string(limit));
      auto res = cut_along_flat(cur, f);
      work.push_back(std::move(res.pieces[0]));
      work.push_back(std::move(res.pieces[1]));
      cut = true;
      break;
    }
    if (!cut) done.push_back(std::move(cur));
  }
  return done;
}

}  // namespace coxkit
