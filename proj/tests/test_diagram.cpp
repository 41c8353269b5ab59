#include <doctest.h>

#include <random>

#include "coxkit/diagram.hpp"
#include "coxkit/errors.hpp"
#include "fixtures.hpp"

using namespace coxkit;

TEST_SUITE("diagram") {

TEST_CASE("parse a small diagram") {
  auto m = parse_diagram(
      "coxeter v1\n"
      "# H3 with an extra free generator\n"
      "vertices a b c d\n"
      "edge a b 5\n"
      "edge b c 3\n"
      "edge c d inf\n");
  CHECK(m.rank() == 4);
  CHECK(m.label(0, 1) == EdgeLabel::finite(5));
  CHECK(m.label(1, 2) == EdgeLabel::finite(3));
  CHECK(m.label(2, 3).is_infinite());
  CHECK(m.label(0, 2) == EdgeLabel::finite(2));
  CHECK(m.label(0, 3) == m.label(3, 0));
  CHECK_FALSE(m.is_right_angled());
}

TEST_CASE("parse errors carry the line") {
  auto bad = [](const char* text) { CHECK_THROWS_AS(parse_diagram(text), ParseError); };
  bad("coxeter v1\nvertices a b\nedge a b 1\n");
  bad("coxeter v1\nvertices a b\nedge a c 3\n");
  bad("coxeter v1\nvertices a b\nedge a a 3\n");
  bad("coxeter v1\nvertices a b\nedge a b 3\nedge b a 4\n");
  bad("coxeter v1\nvertices a b\nlabel a b 3\n");
  bad("coxeter v2\nvertices a\n");
  try {
    parse_diagram("coxeter v1\nvertices a b\n\nedge a z 3\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("cox round trip on random matrices") {
  std::mt19937 rng(7);
  const int labels[] = {2, 3, 4, 5, 6, 7, 0};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    CoxeterMatrix m(names);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int l = labels[rng() % 7];
        m.set_label(i, j, l == 0 ? EdgeLabel::infinity() : EdgeLabel::finite(l));
      }
    CHECK(parse_diagram(to_cox(m)) == m);
    CHECK(to_matrix(to_diagram(m)) == m);
  }
}

TEST_CASE("distance is a metric on each component") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    CoxeterMatrix m(names);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) m.set_label(i, j, EdgeLabel::finite(3));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto dab = distance(m, m.all(), a, b);
        CHECK(dab == distance(m, m.all(), b, a));
        if (a == b) CHECK(dab == 0);
        for (std::size_t c = 0; c < n; ++c) {
          auto dac = distance(m, m.all(), a, c), dcb = distance(m, m.all(), c, b);
          if (dac && dcb) {
            REQUIRE(dab);
            CHECK(*dab <= *dac + *dcb);
          }
        }
      }
  }
}

TEST_CASE("distance on a path and across components") {
  auto m = fixtures::path_diagram({3, 3, 3, 3});
  CHECK(distance(m, "s0", "s4") == 4);
  auto sub = m.mask_of({"s0", "s1", "s3", "s4"});
  CHECK_FALSE(distance(m, sub, 0, 4).has_value());
  CHECK(connected_components(m, sub).size() == 2);
  CHECK_THROWS_AS(distance(m, "s0", "zz"), PreconditionError);
}

TEST_CASE("induced subdiagram keeps labels") {
  auto m = fixtures::path_diagram({4, 3, 5});
  auto s = induced_subdiagram(m, {"s1", "s3", "s2"});
  CHECK(s.rank() == 3);
  CHECK(s.label(s.index_of("s2"), s.index_of("s3")) == EdgeLabel::finite(5));
  CHECK(s.label(s.index_of("s1"), s.index_of("s3")) == EdgeLabel::finite(2));
}

TEST_CASE("cosine gram entries") {
  auto m = fixtures::path_diagram({3, 4, 6, 0, 5});
  auto g = cosine_gram(m);
  CHECK(g.at(0, 0).value == doctest::Approx(1.0));
  CHECK(g.at(0, 1).value == doctest::Approx(-0.5));
  CHECK(g.at(1, 2).value == doctest::Approx(-std::sqrt(2.0) / 2));
  CHECK(g.at(2, 3).value == doctest::Approx(-std::sqrt(3.0) / 2));
  CHECK(g.at(3, 4).value == doctest::Approx(-1.0));
  CHECK(g.at(3, 4).exact);
  CHECK_FALSE(g.at(4, 5).exact);
  CHECK_FALSE(g.exact());
}

TEST_CASE("canonical order is size then names") {
  CoxeterMatrix m({"b", "a", "c"});
  std::vector<Mask> v{m.mask_of({"b", "c"}), m.mask_of({"c"}), m.mask_of({"a", "b"}), m.mask_of({"a"})};
  sort_canonical(m, v);
  CHECK(sorted_names(m, v[0]) == std::vector<std::string>{"a"});
  CHECK(sorted_names(m, v[1]) == std::vector<std::string>{"c"});
  CHECK(sorted_names(m, v[2]) == std::vector<std::string>{"a", "b"});
}

}
