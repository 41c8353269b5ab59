#include "coxkit/polytope.hpp"

#include <algorithm>
#include <functional>

#include "coxkit/errors.hpp"

namespace coxkit {

using boost::multiprecision::cpp_int;

PolytopeModel::PolytopeModel(Nerve nerve, int dim, std::vector<Mask> faces, std::vector<Mask> cusps)
    : nerve_(std::move(nerve)), dim_(dim), faces_(std::move(faces)), cusps_(std::move(cusps)) {
  for (std::size_t i = 0; i < faces_.size(); ++i) index_[faces_[i]] = i;
}

std::size_t PolytopeModel::index_of(Mask t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw PreconditionError("not a face of the model: " + face_name(t));
  return it->second;
}

std::vector<Mask> PolytopeModel::faces_of_dim(int k) const {
  std::vector<Mask> out;
  for (Mask t : faces_)
    if (face_dim(t) == k) out.push_back(t);
  return out;
}

std::vector<std::size_t> PolytopeModel::facet_generators() const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < matrix().rank(); ++u)
    if (is_face(bit(u))) out.push_back(u);
  return out;
}

std::string PolytopeModel::face_name(Mask t) const {
  std::string s = "{";
  for (const auto& x : sorted_names(matrix(), t)) s += (s.size() > 1 ? "," : "") + x;
  return s + "}";
}

PolytopeModel build_polytope(const Nerve& n, int dim, bool validate) {
  if (dim < 1) throw PreconditionError("polytope dimension must be positive");
  if (validate) {
    auto r = check_codim1_flats(n, dim);
    if (!r.passed()) throw PreconditionError("build_polytope: " + r.violations().front().detail);
  }
  const auto& m = n.matrix;
  std::vector<Mask> faces{0};
  for (Mask s : n.complex.simplices())
    if (s != 0 && (s & n.cone_vertices) == 0 && popcount(s) <= dim) faces.push_back(s);
  sort_canonical(m, faces);

  std::vector<Mask> cusps;
  for (auto v : members(n.cone_vertices)) {
    Mask base = 0;
    for (std::size_t u = 0; u < m.rank(); ++u)
      if (u != v && m.label(u, v) == EdgeLabel::finite(2)) base |= bit(u);
    cusps.push_back(base);
  }
  for (const auto& f : maximal_flats(m))
    if (f.flat_dim == dim - 1 && std::find(cusps.begin(), cusps.end(), f.generators) == cusps.end())
      cusps.push_back(f.generators);
  sort_canonical(m, cusps);
  return PolytopeModel(n, dim, std::move(faces), std::move(cusps));
}

FVector f_vector(const PolytopeModel& p) {
  FVector f;
  const int n = p.dimension();
  f.a.assign(static_cast<std::size_t>(n), 0);
  for (Mask t : p.faces()) {
    const int k = p.face_dim(t);
    if (k < n) ++f.a[static_cast<std::size_t>(k)];
  }
  f.c = static_cast<long long>(p.cusps().size());
  return f;
}

FaceLocalCounts face_local_counts(const PolytopeModel& p, Mask t) {
  p.index_of(t);
  FaceLocalCounts out;
  out.face = t;
  out.dim = p.face_dim(t);
  out.a.assign(static_cast<std::size_t>(std::max(out.dim, 0)), 0);
  for (Mask s : p.faces()) {
    if ((s & t) != t || s == t) continue;
    ++out.a[static_cast<std::size_t>(p.face_dim(s))];
  }
  for (std::size_t c = 0; c < p.cusps().size(); ++c)
    if (p.cusp_on(c, t)) ++out.c;
  if (out.dim == 2) out.excess = out.a[1] + out.c - 5;
  return out;
}

namespace {

nlohmann::json face_json(const PolytopeModel& p, const FaceLocalCounts& f) {
  return {{"face", sorted_names(p.matrix(), f.face)}, {"dim", f.dim}, {"a", f.a}, {"c", f.c}};
}

// Aggregates one inequality over many faces into a single finding.
struct Tally {
  std::string check;
  std::size_t checked = 0;
  nlohmann::json failures = nlohmann::json::array();

  void record(bool ok, const nlohmann::json& w) {
    ++checked;
    if (!ok && failures.size() < 16) failures.push_back(w);
  }
  void emit(AuditReport& r) const {
    if (checked == 0) return;
    r.add(check, failures.empty(), std::to_string(checked) + " faces checked",
          failures.empty() ? nlohmann::json{} : failures);
  }
};

}  // namespace

AuditReport audit_section4(const PolytopeModel& p) {
  const int n = p.dimension();
  if (n < 2) throw PreconditionError("audit_section4 needs dimension >= 2");
  AuditReport r;
  r.name = "face-count inequalities";
  Tally f2{"2-face: a1 + c >= 5"};
  Tally f3a{"3-face: a1 + c = 3 a2 - 6"}, f3b{"3-face: a2 + 2c = 12 + total excess"},
      f3c{"3-face: a2 + 2c >= 12"}, f3d{"3-face: a2 >= 6"}, f3e{"3-face: a2 + c >= 9"},
      f3f{"3-face: a0 - a1 + a2 = 2"}, f3g{"3-face: 2 a1 = 3 a0 + c"};
  Tally f4a{"4-face: a3 >= 10"}, f4b{"4-face: a3 + c >= 15"}, f5{"5-face: a4 >= 16"};
  long long excess_total = 0;

  for (Mask t : p.faces()) {
    const int k = p.face_dim(t);
    if (k < 2 || k > std::min(5, n)) continue;
    const auto f = face_local_counts(p, t);
    const auto w = face_json(p, f);
    const auto& a = f.a;
    switch (k) {
      case 2:
        f2.record(a[1] + f.c >= 5, w);
        excess_total += f.excess;
        break;
      case 3: {
        long long ex = 0;
        for (auto u : members(p.matrix().all() & ~t))
          if (p.is_face(t | bit(u))) ex += face_local_counts(p, t | bit(u)).excess;
        auto we = w;
        we["excess"] = ex;
        const long long a0 = f.vertices_total();
        f3a.record(a[1] + f.c == 3 * a[2] - 6, we);
        f3b.record(a[2] + 2 * f.c == 12 + ex, we);
        f3c.record(a[2] + 2 * f.c >= 12, we);
        f3d.record(a[2] >= 6, we);
        f3e.record(a[2] + f.c >= 9, we);
        f3f.record(a0 - a[1] + a[2] == 2, we);
        f3g.record(2 * a[1] == 3 * a0 + f.c, we);
        r.notes.push_back("3-face " + p.face_name(t) + ": total excess of 2-faces " + std::to_string(ex));
        break;
      }
      case 4:
        f4a.record(a[3] >= 10, w);
        f4b.record(a[3] + f.c >= 15, w);
        break;
      case 5:
        f5.record(a[4] >= 16, w);
        break;
    }
  }
  for (const Tally* t : {&f2, &f3a, &f3b, &f3c, &f3d, &f3e, &f3f, &f3g, &f4a, &f4b, &f5}) t->emit(r);
  r.notes.push_back("total excess over 2-faces: " + std::to_string(excess_total));
  return r;
}

AuditReport check_proposition4(const PolytopeModel& p) {
  const auto& m = p.matrix();
  if (!m.is_right_angled()) throw PreconditionError("check_proposition4 needs a right-angled matrix");
  AuditReport r;
  r.name = "facet adjacency";
  const auto facets = p.facet_generators();
  auto adjacent = [&](std::size_t u, std::size_t v) { return p.is_face(bit(u) | bit(v)); };
  auto cusp_over = [&](Mask s) {
    for (std::size_t c = 0; c < p.cusps().size(); ++c)
      if ((s & ~p.cusps()[c]) == 0) return true;
    return false;
  };
  auto parallel = [&](std::size_t u, std::size_t v) { return !adjacent(u, v) && cusp_over(bit(u) | bit(v)); };
  auto names = [&](Mask s) { return nlohmann::json(sorted_names(m, s)); };

  Tally p1{"adjacent triple meets in a codim-3 face"};
  Tally p2{"parallel pair with common neighbour meets at a cusp"};
  Tally p3{"parallel pair with two common neighbours meets at a cusp"};
  const std::size_t F = facets.size();
  for (std::size_t a = 0; a < F; ++a)
    for (std::size_t b = a + 1; b < F; ++b) {
      const auto u = facets[a], v = facets[b];
      if (adjacent(u, v)) {
        if (p.dimension() < 3) continue;
        for (std::size_t c = b + 1; c < F; ++c) {
          const auto w = facets[c];
          if (adjacent(u, w) && adjacent(v, w)) p1.record(p.is_face(bit(u) | bit(v) | bit(w)), names(bit(u) | bit(v) | bit(w)));
        }
        continue;
      }
      if (!parallel(u, v)) continue;
      std::vector<std::size_t> common;
      for (auto w : facets)
        if (w != u && w != v && adjacent(u, w) && adjacent(v, w)) common.push_back(w);
      for (auto w : common) p2.record(cusp_over(bit(u) | bit(v) | bit(w)), names(bit(u) | bit(v) | bit(w)));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          const Mask s = bit(u) | bit(v) | bit(common[i]) | bit(common[j]);
          p3.record(cusp_over(s), names(s));
        }
    }
  for (const Tally* t : {&p1, &p2, &p3}) {
    if (t->checked == 0) r.notes.push_back(t->check + ": no instances");
    t->emit(r);
  }
  return r;
}

namespace {

cpp_int binom(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

Rational nikulin_bound(int n, int i, int k) {
  if (!(0 <= i && i < k && k <= n / 2))
    throw PreconditionError("nikulin_bound needs 0 <= i < k <= n/2 (n=" + std::to_string(n) +
                            ", i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")");
  const int fl = n / 2, ce = n - n / 2;
  return Rational(binom(n - i, n - k) * (binom(fl, i) + binom(ce, i)), binom(fl, k) + binom(ce, k));
}

Rational average_face_count(const PolytopeModel& p, int i, int k) {
  const int n = p.dimension();
  if (!(0 <= i && i < k && k <= n)) throw PreconditionError("average_face_count needs 0 <= i < k <= n");
  cpp_int total = 0, count = 0;
  for (Mask t : p.faces_of_dim(k)) {
    const auto f = face_local_counts(p, t);
    total += i == 0 ? f.vertices_total() : f.a[static_cast<std::size_t>(i)];
    ++count;
  }
  if (count == 0) throw PreconditionError("no " + std::to_string(k) + "-faces");
  return Rational(total, count);
}

namespace {

// Incidences counted from the small side: every (n-k)-subset of a face is a face.
Rational average_by_incidence(const PolytopeModel& p, int i, int k) {
  const int n = p.dimension();
  cpp_int incidences = 0;
  for (Mask t : p.faces_of_dim(i)) incidences += binom(popcount(t), n - k);
  if (i == 0)
    for (Mask a : p.cusps())
      for (Mask s : p.faces_of_dim(k))
        if ((s & ~a) == 0) ++incidences;
  const auto ak = p.faces_of_dim(k).size();
  if (ak == 0) throw PreconditionError("no " + std::to_string(k) + "-faces");
  return Rational(incidences, cpp_int(ak));
}

}  // namespace

AuditReport audit_nikulin(const PolytopeModel& p, int i, int k) {
  const int n = p.dimension();
  const Rational bound = nikulin_bound(n, i, k);
  const Rational alpha = average_face_count(p, i, k);
  const Rational alpha2 = average_by_incidence(p, i, k);
  AuditReport r;
  r.name = "average face counts";
  r.add("average by faces = average by incidences", alpha == alpha2,
        alpha.str() + " vs " + alpha2.str());
  const bool strict = alpha < bound;
  nlohmann::json w = {{"i", i}, {"k", k}, {"alpha", alpha.str()}, {"bound", bound.str()}, {"strict", strict}};
  r.add("alpha <= bound", alpha <= bound,
        "alpha=" + alpha.str() + " bound=" + bound.str() + (strict ? " (strict)" : " (equality)"),
        alpha <= bound ? nlohmann::json{} : w);
  return r;
}

int rightangled_dimension_bound() {
  // The bound decreases in n within each parity class, so two consecutive
  // misses end the scan.
  int best = 0, misses = 0;
  for (int n = 10; n <= 256 && misses < 2; ++n) {
    if (Rational(16) < nikulin_bound(n, 4, 5)) {
      best = n;
      misses = 0;
    } else {
      ++misses;
    }
  }
  return best;
}

}  // namespace coxkit
