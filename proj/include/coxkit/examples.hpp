#pragma once

#include "coxkit/diagram.hpp"

namespace coxkit {

/// k pairs a_i, b_i: label inf inside a pair, 2 across pairs. The nerve is
/// the boundary of the k-dimensional cross-polytope.
CoxeterMatrix build_rac_cube(int k);

/// Right-angled cube on `pairs` (8 or 12) with extra inf edges:
/// upper(A1)-upper(B1 x3), lower(A1)-lower(B2 x3), upper(A2)-upper(B2 x3),
/// lower(A2)-lower(B1 x3). Pairs beyond the first 8 are untouched.
CoxeterMatrix build_pv_example(int pairs = 8);

/// Generator subsets of the PV example: the pairs of A1 and A2, and the six
/// pairs of B1 and B2.
Mask pv_a_block(const CoxeterMatrix& m);
Mask pv_b_block(const CoxeterMatrix& m);

/// Right-angled group on the 8 faces of an octahedron: label 2 iff two
/// faces share an edge, inf otherwise. Face f<bits> is the face on the
/// octant with sign bits (bit set = negative).
CoxeterMatrix build_ideal_octahedron();

/// The same group with one cone generator per ideal vertex (v0+, v0-, ...):
/// label 2 to the four faces at that vertex, inf to everything else.
CoxeterMatrix build_truncated_ideal_octahedron();

}  // namespace coxkit
