#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxkit/nerve.hpp"
#include "coxkit/report.hpp"

namespace coxkit {

using Rational = boost::multiprecision::cpp_rational;

/// Combinatorial model of the polytope dual to a nerve. A face is a
/// spherical subset T containing no cone vertex; F_T has dimension
/// n - |T| and F_T <= F_T' iff T contains T'. Cusps are collapsed affine
/// faces, stored by their generator sets; cusp A lies on F_T iff T is a
/// subset of A.
class PolytopeModel {
 public:
  PolytopeModel(Nerve nerve, int dim, std::vector<Mask> faces, std::vector<Mask> cusps);

  int dimension() const { return dim_; }
  const Nerve& nerve() const { return nerve_; }
  const CoxeterMatrix& matrix() const { return nerve_.matrix; }
  /// Canonical order; faces()[0] is the empty set (P itself).
  const std::vector<Mask>& faces() const { return faces_; }
  const std::vector<Mask>& cusps() const { return cusps_; }

  bool is_face(Mask t) const { return index_.count(t) != 0; }
  std::size_t index_of(Mask t) const;  // throws PreconditionError
  int face_dim(Mask t) const { return dim_ - popcount(t); }
  std::vector<Mask> faces_of_dim(int k) const;
  /// Facets contained in the face, i.e. u with T + u a face.
  std::vector<std::size_t> facet_generators() const;
  bool cusp_on(std::size_t c, Mask t) const { return (t & ~cusps_[c]) == 0; }
  std::string face_name(Mask t) const;

 private:
  Nerve nerve_;
  int dim_;
  std::vector<Mask> faces_;
  std::vector<Mask> cusps_;
  std::map<Mask, std::size_t> index_;
};

struct FVector {
  std::vector<long long> a;  // a[k] for k < n; a[0] counts finite vertices only
  long long c = 0;
};

/// With `validate`, refuses nerves whose maximal flats of dimension >= 2
/// are not of dimension dim - 1. Cusps: one per marked cone vertex (its
/// base is the set of generators commuting with it), plus every maximal
/// flat of dimension dim - 1 that is not already a cone base.
PolytopeModel build_polytope(const Nerve& n, int dim, bool validate = true);

FVector f_vector(const PolytopeModel& p);

struct FaceLocalCounts {
  Mask face = 0;
  int dim = 0;
  std::vector<long long> a;  // a[i] for i < dim, finite vertices only at i = 0
  long long c = 0;
  long long excess = 0;      // 2-faces only: a[1] + c - 5

  long long vertices_total() const { return a.empty() ? 0 : a[0] + c; }
};

FaceLocalCounts face_local_counts(const PolytopeModel& p, Mask t);

/// Face-count inequalities for faces of dimension 2 to min(5, n). Vertex
/// totals in the 3-face relations include cusps.
AuditReport audit_section4(const PolytopeModel& p);

/// Exhaustive facet triple/quadruple check of the adjacency/parallelism
/// statements for right-angled inputs.
AuditReport check_proposition4(const PolytopeModel& p);

/// C(n-i, n-k) (C(fl,i) + C(ce,i)) / (C(fl,k) + C(ce,k)), fl = floor(n/2),
/// ce = ceil(n/2). Requires 0 <= i < k <= floor(n/2).
Rational nikulin_bound(int n, int i, int k);

/// Average number of i-faces on a k-face. Vertices include cusps.
Rational average_face_count(const PolytopeModel& p, int i, int k);

/// alpha_k^(i) against nikulin_bound; the average is computed both by
/// per-face counting and by global incidence counting.
AuditReport audit_nikulin(const PolytopeModel& p, int i, int k);

/// Largest n >= 10 with 16 < nikulin_bound(n, 4, 5).
int rightangled_dimension_bound();

}  // namespace coxkit
