#include "coxkit/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

std::vector<std::size_t> members(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

EdgeLabel EdgeLabel::finite(int m) {
  if (m < 2) throw PreconditionError("edge label must be >= 2, got " + std::to_string(m));
  return EdgeLabel(m);
}

std::string EdgeLabel::str() const { return is_infinite() ? "inf" : std::to_string(m_); }

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators)
    : names_(std::move(generators)) {
  if (names_.size() > kMaxGenerators) {
    throw PreconditionError("at most 64 generators are supported, got " +
                            std::to_string(names_.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty generator name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate generator '" + n + "'");
  }
  labels_.assign(names_.size() * names_.size(), EdgeLabel{});
  adjacency_.assign(names_.size(), 0);
}

std::optional<std::size_t> CoxeterMatrix::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t CoxeterMatrix::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

Mask CoxeterMatrix::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= bit(index_of(n));
  return m;
}

std::vector<std::string> CoxeterMatrix::names_of(Mask m) const {
  std::vector<std::string> out;
  for (auto i : members(m)) out.push_back(names_[i]);
  return out;
}

void CoxeterMatrix::set_label(std::size_t i, std::size_t j, EdgeLabel l) {
  if (i == j) throw PreconditionError("diagonal entries of a Coxeter matrix are fixed to 1");
  const std::size_t n = names_.size();
  labels_[i * n + j] = l;
  labels_[j * n + i] = l;
  if (l.is_edge()) {
    adjacency_[i] |= bit(j);
    adjacency_[j] |= bit(i);
  } else {
    adjacency_[i] &= ~bit(j);
    adjacency_[j] &= ~bit(i);
  }
}

CoxeterMatrix CoxeterMatrix::induced(Mask subset) const {
  const auto idx = members(subset & all());
  std::vector<std::string> names;
  names.reserve(idx.size());
  for (auto i : idx) names.push_back(names_[i]);
  CoxeterMatrix out(std::move(names));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) out.set_label(a, b, label(idx[a], idx[b]));
  return out;
}

std::size_t CoxeterMatrix::add_generator(std::string name) {
  if (find(name)) throw PreconditionError("duplicate generator '" + name + "'");
  if (names_.size() == kMaxGenerators) throw PreconditionError("at most 64 generators are supported");
  const std::size_t n = names_.size();
  std::vector<EdgeLabel> grown((n + 1) * (n + 1), EdgeLabel{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grown[i * (n + 1) + j] = labels_[i * n + j];
  labels_ = std::move(grown);
  names_.push_back(std::move(name));
  adjacency_.push_back(0);
  return n;
}

bool CoxeterMatrix::is_right_angled() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j) {
      auto l = label(i, j);
      if (!l.is_infinite() && l.order() != 2) return false;
    }
  return true;
}

Diagram to_diagram(const CoxeterMatrix& m) {
  Diagram d;
  d.vertices = m.generators();
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j) {
      if (!m.label(i, j).is_edge()) continue;
      auto a = m.name(i), b = m.name(j);
      if (b < a) std::swap(a, b);
      d.edges.emplace(std::pair{a, b}, m.label(i, j));
    }
  return d;
}

CoxeterMatrix to_matrix(const Diagram& d) {
  CoxeterMatrix m(d.vertices);
  for (const auto& [pair, l] : d.edges) m.set_label(pair.first, pair.second, l);
  return m;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

EdgeLabel parse_label(std::string_view tok, std::size_t line) {
  if (tok == "inf" || tok == "infinity" || tok == "oo") return EdgeLabel::infinity();
  int m = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), m);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "bad edge label '" + std::string(tok) + "'");
  if (m < 2) throw ParseError(line, "edge label must be >= 2, got " + std::string(tok));
  return EdgeLabel::finite(m);
}

}  // namespace

CoxeterMatrix parse_diagram(std::string_view text) {
  std::optional<CoxeterMatrix> m;
  bool header = false;
  std::set<std::pair<std::size_t, std::size_t>> declared;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "coxeter" || tok[1] != "v1")
        throw ParseError(lineno, "expected header 'coxeter v1'");
      header = true;
      continue;
    }
    if (tok[0] == "vertices") {
      if (m) throw ParseError(lineno, "second 'vertices' line");
      std::vector<std::string> names(tok.begin() + 1, tok.end());
      try {
        m.emplace(std::move(names));
      } catch (const PreconditionError& e) {
        throw ParseError(lineno, e.what());
      }
    } else if (tok[0] == "edge") {
      if (!m) throw ParseError(lineno, "'edge' before 'vertices'");
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <u> <v> <m|inf>'");
      auto u = m->find(tok[1]);
      auto v = m->find(tok[2]);
      if (!u) throw ParseError(lineno, "unknown vertex '" + std::string(tok[1]) + "'");
      if (!v) throw ParseError(lineno, "unknown vertex '" + std::string(tok[2]) + "'");
      if (*u == *v) throw ParseError(lineno, "self-loop on '" + std::string(tok[1]) + "'");
      auto key = std::minmax(*u, *v);
      if (!declared.insert(key).second)
        throw ParseError(lineno, "duplicate edge " + std::string(tok[1]) + " " + std::string(tok[2]));
      m->set_label(*u, *v, parse_label(tok[3], lineno));
    } else {
      throw ParseError(lineno, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing header 'coxeter v1'");
  if (!m) throw ParseError(lineno, "missing 'vertices' line");
  return *std::move(m);
}

std::string to_cox(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "coxeter v1\nvertices";
  for (const auto& n : m.generators()) os << ' ' << n;
  os << '\n';
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = i + 1; j < m.rank(); ++j)
      if (m.label(i, j).is_edge())
        os << "edge " << m.name(i) << ' ' << m.name(j) << ' ' << m.label(i, j).str() << '\n';
  return os.str();
}

std::vector<int> distances_from(const CoxeterMatrix& m, Mask subset, std::size_t source) {
  std::vector<int> dist(m.rank(), -1);
  if (!contains(subset, source)) return dist;
  dist[source] = 0;
  Mask frontier = bit(source);
  Mask seen = frontier;
  int d = 0;
  while (frontier != 0) {
    ++d;
    Mask next = 0;
    for (auto i : members(frontier)) next |= m.neighbours(i);
    next &= subset & ~seen;
    for (auto i : members(next)) dist[i] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> distance(const CoxeterMatrix& m, Mask subset, std::size_t u, std::size_t v) {
  if (!contains(subset, u) || !contains(subset, v))
    throw PreconditionError("distance: vertex outside the diagram");
  int d = distances_from(m, subset, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> distance(const CoxeterMatrix& m, std::string_view u, std::string_view v) {
  return distance(m, m.all(), m.index_of(u), m.index_of(v));
}

CoxeterMatrix induced_subdiagram(const CoxeterMatrix& m, const std::vector<std::string>& vertices) {
  return m.induced(m.mask_of(vertices));
}

std::vector<Mask> connected_components(const CoxeterMatrix& m, Mask subset) {
  std::vector<Mask> out;
  Mask rest = subset & m.all();
  while (rest != 0) {
    Mask comp = Mask{1} << std::countr_zero(rest);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (auto i : members(frontier)) next |= m.neighbours(i);
      next &= rest & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  auto least = [&](Mask c) {
    const std::string* best = nullptr;
    for (auto i : members(c))
      if (!best || m.name(i) < *best) best = &m.name(i);
    return *best;
  };
  std::sort(out.begin(), out.end(), [&](Mask a, Mask b) { return least(a) < least(b); });
  return out;
}

std::vector<Mask> connected_components(const CoxeterMatrix& m) {
  return connected_components(m, m.all());
}

bool is_connected(const CoxeterMatrix& m, Mask subset) {
  if (subset == 0) return false;
  Mask comp = Mask{1} << std::countr_zero(subset);
  Mask frontier = comp;
  while (frontier != 0) {
    Mask next = 0;
    for (auto i : members(frontier)) next |= m.neighbours(i);
    next &= subset & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == subset;
}

std::vector<std::string> sorted_names(const CoxeterMatrix& m, Mask s) {
  auto names = m.names_of(s);
  std::sort(names.begin(), names.end());
  return names;
}

bool canonical_less(const CoxeterMatrix& m, Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  return sorted_names(m, a) < sorted_names(m, b);
}

void sort_canonical(const CoxeterMatrix& m, std::vector<Mask>& sets) {
  std::vector<std::pair<std::pair<int, std::vector<std::string>>, Mask>> keyed;
  keyed.reserve(sets.size());
  for (Mask s : sets) keyed.push_back({{popcount(s), sorted_names(m, s)}, s});
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < sets.size(); ++i) sets[i] = keyed[i].second;
}

bool CosineGram::exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const GramEntry& e) { return e.exact; });
}

CosineGram cosine_gram(const CoxeterMatrix& m) {
  CosineGram g;
  g.size = m.rank();
  g.entries.resize(g.size * g.size);
  for (std::size_t i = 0; i < g.size; ++i) {
    for (std::size_t j = 0; j < g.size; ++j) {
      GramEntry& e = g.entries[i * g.size + j];
      if (i == j) {
        e = {1.0, true, "1"};
        continue;
      }
      const auto l = m.label(i, j);
      if (l.is_infinite()) {
        e = {-1.0, true, "-1"};
        continue;
      }
      switch (l.order()) {
        case 2: e = {0.0, true, "0"}; break;
        case 3: e = {-0.5, true, "-1/2"}; break;
        case 4: e = {-std::numbers::sqrt2 / 2, true, "-sqrt(2)/2"}; break;
        case 6: e = {-std::numbers::sqrt3 / 2, true, "-sqrt(3)/2"}; break;
        default:
          e = {-std::cos(std::numbers::pi / l.order()), false,
               "-cos(pi/" + std::to_string(l.order()) + ")"};
      }
    }
  }
  return g;
}

}  // namespace coxkit
