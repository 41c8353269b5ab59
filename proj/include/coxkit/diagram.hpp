#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coxkit {

/// Subset of generators, bit i set iff generator i is a member.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxGenerators = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool contains(Mask m, std::size_t i) { return (m >> i) & 1U; }
inline Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
/// Indices of the set bits in increasing order.
std::vector<std::size_t> members(Mask m);

/// Off-diagonal entry of a Coxeter matrix: an integer m >= 2 or infinity.
class EdgeLabel {
 public:
  constexpr EdgeLabel() = default;
  static EdgeLabel finite(int m);
  static constexpr EdgeLabel infinity() { return EdgeLabel(kInf); }

  constexpr bool is_infinite() const { return m_ == kInf; }
  /// Finite order m; only meaningful when !is_infinite().
  constexpr int order() const { return m_; }
  /// Drawn as an edge in the Coxeter diagram (m >= 3 or infinity).
  constexpr bool is_edge() const { return m_ != 2; }
  /// Total-order key with infinity above every integer.
  constexpr int key() const { return m_; }
  std::string str() const;

  friend constexpr auto operator<=>(EdgeLabel, EdgeLabel) = default;

 private:
  static constexpr int kInf = 1 << 30;
  constexpr explicit EdgeLabel(int m) : m_(m) {}
  int m_ = 2;
};

/// Symmetric Coxeter matrix over named generators. The diagonal is
/// implicitly 1 and never stored; unset pairs are 2. Generator order is the
/// construction (file declaration) order.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::string> generators);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  std::size_t index_of(std::string_view name) const;
  Mask mask_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Mask m) const;

  EdgeLabel label(std::size_t i, std::size_t j) const {
    return labels_[i * names_.size() + j];
  }
  void set_label(std::size_t i, std::size_t j, EdgeLabel l);
  void set_label(std::string_view a, std::string_view b, EdgeLabel l) {
    set_label(index_of(a), index_of(b), l);
  }

  Mask all() const { return full_mask(rank()); }
  /// Neighbours of i in the diagram (label != 2).
  Mask neighbours(std::size_t i) const { return adjacency_[i]; }
  /// Matrix restricted to `subset`, generator order preserved.
  CoxeterMatrix induced(Mask subset) const;
  /// Adds a generator with every label 2; returns its index.
  std::size_t add_generator(std::string name);
  bool is_right_angled() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<EdgeLabel> labels_;
  std::vector<Mask> adjacency_;
};

/// Edge-list form of the same data: only labels >= 3 or infinity are kept.
struct Diagram {
  std::vector<std::string> vertices;
  std::map<std::pair<std::string, std::string>, EdgeLabel> edges;  // key sorted
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram to_diagram(const CoxeterMatrix& m);
CoxeterMatrix to_matrix(const Diagram& d);

/// Reads the line-oriented `.cox` format.
CoxeterMatrix parse_diagram(std::string_view text);
/// Writes `.cox`; edges are emitted in generator order.
std::string to_cox(const CoxeterMatrix& m);

/// Shortest-path length in the diagram restricted to `subset`;
/// std::nullopt when u and v lie in different components.
std::optional<int> distance(const CoxeterMatrix& m, Mask subset, std::size_t u,
                            std::size_t v);
std::optional<int> distance(const CoxeterMatrix& m, std::string_view u,
                            std::string_view v);
/// BFS distances from `source` inside `subset`; -1 marks unreachable.
std::vector<int> distances_from(const CoxeterMatrix& m, Mask subset,
                                std::size_t source);

CoxeterMatrix induced_subdiagram(const CoxeterMatrix& m,
                                 const std::vector<std::string>& vertices);

/// Components of the diagram on `subset`, ordered by least member name.
std::vector<Mask> connected_components(const CoxeterMatrix& m, Mask subset);
std::vector<Mask> connected_components(const CoxeterMatrix& m);
bool is_connected(const CoxeterMatrix& m, Mask subset);

/// Canonical ordering of generator subsets: by size, then by the sorted
/// list of member names.
bool canonical_less(const CoxeterMatrix& m, Mask a, Mask b);
void sort_canonical(const CoxeterMatrix& m, std::vector<Mask>& sets);
/// Member names sorted lexicographically.
std::vector<std::string> sorted_names(const CoxeterMatrix& m, Mask s);

/// One entry -cos(pi/m) of the cosine Gram matrix.
struct GramEntry {
  double value = 0.0;
  bool exact = true;   // value is one of 1, 0, -1/2, -sqrt2/2, -sqrt3/2, -1
  std::string symbol;  // exact closed form when `exact`
};

struct CosineGram {
  std::size_t size = 0;
  std::vector<GramEntry> entries;  // row-major
  const GramEntry& at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
  bool exact() const;
};

CosineGram cosine_gram(const CoxeterMatrix& m);

}  // namespace coxkit
