#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxkit/nerve.hpp"
#include "coxkit/report.hpp"

namespace coxkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  std::vector<BigInt> factors;  // positive, each divides the next
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntegerMatrix a);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// Reduced integral homology H~_k for k = -1 .. dim.
struct HomologyGroups {
  std::vector<HomologyGroup> groups;  // groups[k + 1] is H~_k

  const HomologyGroup& at(int k) const;
  int top() const { return static_cast<int>(groups.size()) - 2; }
  /// Same reduced homology as the d-sphere (d = -1 is the empty sphere).
  bool is_sphere(int d) const;
  /// e.g. "H1=Z^2, H2=Z/2" or "0".
  std::string str() const;
};

HomologyGroups reduced_homology(const SimplicialComplex& c);

/// {tau : tau disjoint from sigma, tau u sigma in c}, on the vertices used.
SimplicialComplex link(const SimplicialComplex& c, Mask sigma);

/// Generalized homology d-sphere: pure of dimension d, homology of S^d, and
/// the link of every k-simplex has the homology of S^(d-k-1).
AuditReport is_ghs(const SimplicialComplex& c, int d);

}  // namespace coxkit
