#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/polytope.hpp"

namespace coxkit {

/// Vertex/edge/2-face incidences of a 3-face, with vertices tagged finite
/// or cusp. Edges and 2-faces are stored by vertex index sets.
struct FacePoset {
  std::vector<bool> cusp;                   // per vertex
  std::vector<std::vector<int>> edges;      // sorted endpoint lists
  std::vector<std::vector<int>> faces;      // sorted edge index lists
};

FacePoset face_poset(const PolytopeModel& p, Mask t);

/// Builds a poset from 2-faces given as vertex cycles over letters; `kinds`
/// has one entry per letter: 'f' finite, 'c' cusp, '*' either.
struct ShapeTemplate {
  std::string name;
  std::string kinds;
  std::vector<std::string> cycles;
};

FacePoset shape_poset(const ShapeTemplate& s);

/// Isomorphism of the underlying posets respecting the template's kinds.
bool matches_shape(const FacePoset& f, const ShapeTemplate& s);

/// Triangular bipyramid, finite apexes, cusps on the equator.
const ShapeTemplate& bad_face_shape();
/// Good 3-faces with at most six 2-faces (letters a to h) and the
/// pentagonal pyramid, which cannot occur.
const std::vector<ShapeTemplate>& small_face_shapes();

bool is_bad_3face(const PolytopeModel& p, Mask t);

struct BadFaceReport {
  long long alpha3 = 0, bad = 0, good = 0;
  Rational ratio;
};

BadFaceReport bad_face_counts(const PolytopeModel& p);
/// (3n+6)/(4(n-3)) for even n, (3n+9)/(4(n-2)) for odd n.
Rational bad_ratio_threshold(int n);
AuditReport bad_ratio_audit(const PolytopeModel& p);
AuditReport bad_ratio_audit(int n, long long alpha3, long long bad);

/// Elliptic diagram of an edge T + {u, v} of the 3-face F_T, with u and v
/// marked (indices into the induced matrix).
struct AngleDiagram {
  Mask base = 0;
  std::size_t u = 0, v = 0;  // generators in the source matrix
  CoxeterMatrix diagram;
  std::size_t marked_u = 0, marked_v = 0;
};

AngleDiagram angle_diagram(const PolytopeModel& p, Mask t, std::size_t u, std::size_t v);

/// 1 for distance <= 7, 1/3 for 8..15, 0 beyond or when disconnected.
Rational weight(std::optional<int> distance);
Rational weight(const AngleDiagram& a);

Rational sigma_face(const PolytopeModel& p, Mask t);

struct EdgeSigma {
  Rational value, bound;
  bool ok = true;
};

/// Weights of all pairs inside T against 29(n-1)/3.
EdgeSigma sigma_edge(const CoxeterMatrix& m, Mask t, int n);
EdgeSigma sigma_edge(const PolytopeModel& p, Mask t);

enum class KprimeType { Type1, Type2, Type3, Type4, None };
std::string to_string(KprimeType t);

/// Pattern of pairwise intersections (edge, cusp, empty) among the chosen
/// 2-faces of F_T, each given as its generator set.
KprimeType classify_Kprime(const PolytopeModel& p, Mask t, const std::vector<Mask>& kprime);

/// Good 3-faces with k <= 6 two-faces: sigma >= 7 - k, with the matched shape.
AuditReport good_face_audit(const PolytopeModel& p);

/// 96 C + 68.
Rational general_bound(const Rational& c);

struct WeightReport {
  struct Face {
    Mask face;
    Rational sigma;
    int two_faces;
    bool bad;
  };
  struct Edge {
    Mask edge;
    EdgeSigma sigma;
  };
  std::vector<Face> faces;
  std::vector<Edge> edges;
};

WeightReport weight_report(const PolytopeModel& p);
nlohmann::json to_json(const PolytopeModel& p, const WeightReport& r);

}  // namespace coxkit
