#pragma once

#include <optional>
#include <vector>

#include "coxkit/diagram.hpp"

namespace coxkit {

/// Label-preserving bijection from the generators of `a` in `a_subset` onto
/// all generators of `b`. Entry k of the result is the index in `b` of the
/// k-th member of `a_subset` (increasing index order).
std::optional<std::vector<std::size_t>> find_isomorphism(const CoxeterMatrix& a,
                                                         Mask a_subset,
                                                         const CoxeterMatrix& b);

inline bool isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  return a.rank() == b.rank() && find_isomorphism(a, a.all(), b).has_value();
}

}  // namespace coxkit
