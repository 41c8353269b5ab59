#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "coxkit/nerve.hpp"

namespace coxkit {

/// Two coned-off halves of a nerve cut along a separating flat.
struct CutResult {
  std::array<Nerve, 2> pieces;
  std::array<std::string, 2> cone_vertex_names;
  std::vector<std::string> flat;  // generators of the cut flat, sorted
};

/// Cuts along an interior flat. Piece i is the full subcomplex on
/// (component i + flat) plus a fresh cone vertex commuting (label 2) with
/// every flat generator and free (label inf) with everything else.
CutResult cut_along_flat(const Nerve& n, Mask flat);

/// Inverse of cut: drops the cone vertices over f1 and f2, identifies the
/// flats through `match` (names in n1 -> names in n2), and sets every label
/// between the two remainders to inf. Vertices of n2 keep their names unless
/// they collide with n1, in which case a prime is appended.
Nerve glue_along_flat(const Nerve& n1, Mask f1, const Nerve& n2, Mask f2,
                      const std::map<std::string, std::string>& match);

/// Repeatedly cuts the first interior codimension-1 maximal flat until every
/// such flat is in boundary position; guarded by the initial flat count.
std::vector<Nerve> normalize_boundary(const Nerve& n, int dim);

}  // namespace coxkit
