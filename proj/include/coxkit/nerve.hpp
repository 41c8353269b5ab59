#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "coxkit/classify.hpp"
#include "coxkit/diagram.hpp"
#include "coxkit/report.hpp"

namespace coxkit {

/// Finite abstract simplicial complex on at most 64 named vertices.
/// Simplices are nonempty vertex masks, closed under nonempty subsets, held
/// in canonical order (size, then lexicographic on vertex index).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// `simplices` must already be subset-closed; order is normalized.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Mask> simplices);
  static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                       const std::vector<Mask>& facets);
  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Mask>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool has(Mask s) const { return s == 0 || index_.count(s) != 0; }
  /// Largest simplex dimension; -1 for the void complex.
  int dimension() const;
  std::vector<Mask> facets() const;
  bool is_pure() const;
  /// Simplices of exactly `k + 1` vertices.
  std::vector<Mask> simplices_of_dim(int k) const;
  /// Full subcomplex on `vertices`, reindexed to those vertices.
  SimplicialComplex full_subcomplex(Mask vertices) const;
  /// Simplex mask built from vertex names.
  Mask mask_of(const std::vector<std::string>& names) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Mask> simplices_;
  std::unordered_set<Mask> index_;
};

/// Every pairwise-adjacent vertex set spans a simplex.
bool is_flag(const SimplicialComplex& c);

/// The nerve of a Coxeter system: vertex i is generator i, and T spans a
/// simplex iff the induced diagram on T is elliptic.
struct Nerve {
  CoxeterMatrix matrix;
  SimplicialComplex complex;
  Mask cone_vertices = 0;
};

/// Enumeration limit: COXKIT_CAP from the environment, else 2^20.
std::size_t default_cap();

Nerve build_nerve(const CoxeterMatrix& m, std::size_t cap = default_cap());

struct AffineFlat {
  Mask generators = 0;
  int flat_dim = 0;  // |T| - number of components
  bool maximal = false;
};

/// Every nonempty T whose induced diagram has only parabolic components.
std::vector<AffineFlat> enumerate_affine_flats(const CoxeterMatrix& m,
                                               std::size_t cap = default_cap());
std::vector<AffineFlat> maximal_flats(const CoxeterMatrix& m, std::size_t cap = default_cap());

/// Maximal flats of dimension >= 2 must have dimension `dim - 1`.
/// One-dimensional flats (infinite dihedral pieces) are virtually cyclic
/// and are listed in the notes only.
AuditReport check_codim1_flats(const Nerve& n, int dim);
/// Distinct maximal flats intersect in an elliptic subset. Necessary for
/// isolated flats; not a relative-hyperbolicity certificate.
AuditReport check_flat_isolation(const Nerve& n);

struct BoundaryPosition {
  enum class Kind { Boundary, Interior, NonSeparating };
  Kind kind = Kind::NonSeparating;
  std::size_t cone_vertex = 0;           // Boundary only
  std::vector<Mask> complement_components;
};

std::string to_string(BoundaryPosition::Kind k);

/// Position of the flat on `flat` relative to the rest of the nerve.
BoundaryPosition flat_boundary_position(const Nerve& n, Mask flat);

/// Generators joined to every vertex of `flat` and to nothing else in the
/// complement (each is a cone point over the flat subcomplex).
bool is_cone_point(const Nerve& n, Mask flat, std::size_t v);

/// Marks one cone vertex for every maximal codimension-1 flat in boundary
/// position (canonically least candidate).
Nerve mark_cone_vertices(Nerve n, int dim);

/// JSON export: vertices, facets, cone vertices, flats with dimensions.
nlohmann::json nerve_to_json(const Nerve& n, const std::vector<AffineFlat>& flats);
/// Reads the complex back from a nerve export (or any document with
/// "vertices" and "facets").
SimplicialComplex complex_from_json(const nlohmann::json& j);

}  // namespace coxkit
