#pragma once

#include <string>
#include <vector>

#include "coxkit/diagram.hpp"

namespace coxkit {

enum class DiagramKind { Elliptic, Parabolic, Indefinite };

std::string to_string(DiagramKind k);

struct DiagramType {
  DiagramKind kind = DiagramKind::Elliptic;
  /// Irreducible family per component (elliptic or parabolic diagrams only),
  /// e.g. "A3", "H4", "I2(7)", "~A2". Affine families carry a leading '~'.
  std::vector<std::string> families;

  bool elliptic() const { return kind == DiagramKind::Elliptic; }
  bool parabolic() const { return kind == DiagramKind::Parabolic; }
  bool indefinite() const { return kind == DiagramKind::Indefinite; }
  /// Elliptic or parabolic.
  bool nonnegative() const { return kind != DiagramKind::Indefinite; }
};

/// A connected elliptic or parabolic diagram of the classification.
struct Template {
  std::string family;
  DiagramKind kind;
  CoxeterMatrix diagram;
};

/// Connected elliptic and parabolic families of a given vertex count, with
/// the rank-2 dihedral diagrams I2(m) limited to m <= max_dihedral.
std::vector<Template> templates_of_rank(std::size_t vertices, int max_dihedral = 12);
/// Every connected elliptic and parabolic template on at most `max_vertices`.
std::vector<Template> template_catalogue(std::size_t max_vertices, int max_dihedral = 12);

/// Classifies the connected diagram on `subset` by template matching.
DiagramType classify_connected(const CoxeterMatrix& m, Mask subset);
DiagramType classify_connected(const CoxeterMatrix& m);
/// Componentwise classification; the empty diagram is elliptic.
DiagramType classify(const CoxeterMatrix& m, Mask subset);
DiagramType classify(const CoxeterMatrix& m);

/// Faster membership tests used by the enumerators.
bool is_elliptic(const CoxeterMatrix& m, Mask subset);

/// Indefinite, and every proper subdiagram elliptic or parabolic.
/// Requires a connected diagram on at least 3 vertices.
bool is_quasi_lanner(const CoxeterMatrix& m, Mask subset);
bool is_quasi_lanner(const CoxeterMatrix& m);

struct QuasiLannerEntry {
  std::string name;  // e.g. "QL6-03"
  CoxeterMatrix diagram;
};

/// Embedded catalogue of quasi-Lanner diagrams with 4 to 10 vertices.
const std::vector<QuasiLannerEntry>& quasi_lanner_table();
/// Exhaustive search for connected quasi-Lanner diagrams on `vertices`
/// vertices (>= 4): every such diagram is a connected elliptic or parabolic
/// template plus one vertex. Results are pairwise non-isomorphic.
std::vector<CoxeterMatrix> enumerate_quasi_lanner(std::size_t vertices);

struct DiameterEntry {
  std::string name;
  std::size_t vertices = 0;
  int diameter = 0;
  std::vector<std::pair<std::string, std::string>> pairs_at_8;
};

struct DiameterReport {
  std::vector<DiameterEntry> entries;
  bool all_within_8 = true;
  bool at_most_one_pair_at_8_per_diagram = true;
  std::size_t pairs_at_8_total = 0;        // across the whole table
  std::vector<std::string> attaining;      // diagrams with a pair at distance 8
};

DiameterReport quasi_lanner_diameter_report(const std::vector<QuasiLannerEntry>& table);

struct PairCount {
  std::size_t count = 0;
  std::size_t bound = 0;
  bool ok = true;
};

/// Unordered vertex pairs at distance <= c, against c times the vertex count.
PairCount pair_count_check(const CoxeterMatrix& m, int c);

}  // namespace coxkit
