#include <random>

#include "doctest.h"
#include "repcount/presentation.hpp"

using namespace repcount;

namespace {
  FreeElement W(std::initializer_list<size_t> letters, Rational c = Rational(1)) {
    return FreeElement(FreeWord(letters), c);
  }

  FreeElement random_element(std::mt19937_64& rng, size_t gens) {
    FreeElement e;
    size_t      n = rng() % 4;
    for (size_t k = 0; k < n; ++k) {
      FreeWord w(rng() % 3);
      for (auto& l : w) {
        l = rng() % gens;
      }
      e += FreeElement(w, Rational(static_cast<int64_t>(rng() % 9) - 4,
                                   static_cast<int64_t>(rng() % 3) + 1));
    }
    return e;
  }

  PolyMatrix random_int_matrix(std::mt19937_64& rng, size_t d) {
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (auto& r : rows) {
      for (auto& x : r) {
        x = Rational(static_cast<int64_t>(rng() % 7) - 3);
      }
    }
    return PolyMatrix::constant(rows);
  }
}  // namespace

TEST_CASE("parse: Weyl relation") {
  Presentation p = parse_presentation("generators: X Y\nrelation: X*Y - Y*X - 1");
  REQUIRE(p.generator_count() == 2);
  REQUIRE(p.relations.size() == 1);
  FreeElement const& r = p.relations[0];
  CHECK(r.terms().size() == 3);
  CHECK(r.coefficient({0, 1}) == Rational(1));
  CHECK(r.coefficient({1, 0}) == Rational(-1));
  CHECK(r.coefficient({}) == Rational(-1));
}

TEST_CASE("parse: powers expand") {
  Presentation p = parse_presentation("generators: X\nrelation: X^2 - X");
  CHECK(p.relations[0] == W({0, 0}) - W({0}));
  Presentation q = parse_presentation("generators: X\nrelation: X^0 - 1");
  CHECK(q.relations.empty());
}

TEST_CASE("parse: undeclared generator") {
  try {
    parse_presentation("generators: X\nrelation: X*Z");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 13);
    CHECK(e.message() == "undeclared generator Z");
  }
}

TEST_CASE("parse: other errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("generators: X\nrelation: 1/0*X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X\nrelation: 2/*X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("relation: X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: 1X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X\nrelation: X^"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X\nrelation: (X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X\nrelation:"), ParseError);
  CHECK_THROWS_AS(parse_presentation("generators: X\nfoo: X"), ParseError);
  CHECK_THROWS_AS(parse_presentation("# nothing\n"), ParseError);
}

TEST_CASE("parse: comments, name, coefficients, parentheses") {
  std::vector<ParseWarning> warn;
  Presentation              p = parse_presentation(
      "# symmetric group\n"
      "name: S3\n"
      "generators: a b   # two of them\n"
      "relation: a^2 - 1\n"
      "relation: b^3 - 1\n"
      "relation: (a*b)^2 - 1\n"
      "relation: a - a\n"
      "relation: -2/3 a*b + 3*b\n",
      &warn);
  CHECK(p.name == "S3");
  REQUIRE(p.relations.size() == 4);
  CHECK(p.relations[2] == W({0, 1, 0, 1}) - FreeElement(Rational(1)));
  CHECK(p.relations[3] == W({0, 1}, Rational(-2, 3)) + W({1}, Rational(3)));
  REQUIRE(warn.size() == 1);
  CHECK(warn[0].line == 7);
}

TEST_CASE("free_multiply examples") {
  CHECK(free_multiply(W({0}), W({1})) == W({0, 1}));
  FreeElement one(Rational(1));
  CHECK(free_multiply(W({0}) - one, W({0}) + one) == W({0, 0}) - one);
  CHECK(free_multiply(W({0, 1}), one) == W({0, 1}));
}

TEST_CASE("free_multiply is associative and unital") {
  std::mt19937_64 rng(31);
  FreeElement     one(Rational(1));
  for (int iter = 0; iter < 300; ++iter) {
    FreeElement a = random_element(rng, 3);
    FreeElement b = random_element(rng, 3);
    FreeElement c = random_element(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * one == a);
    CHECK(one * a == a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("format round trips") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 200; ++iter) {
    Presentation p;
    p.generators = {{"X", 0}, {"Y2", 1}, {"z_w", 2}};
    if (iter % 3 == 0) {
      p.name = "sample " + std::to_string(iter);
    }
    for (int k = 0; k < 3; ++k) {
      FreeElement e = random_element(rng, 3);
      if (!e.is_zero()) {
        p.relations.push_back(e);
      }
    }
    std::string text = format(p);
    CAPTURE(text);
    CHECK(parse_presentation(text) == p);
  }
}

TEST_CASE("substitute examples") {
  RingPtr                 ring = make_ring(Ring::matrix_entries(2, 1));
  std::vector<Polynomial> entries;
  for (size_t v = 0; v < 4; ++v) {
    entries.push_back(Polynomial::variable(v));
  }
  PolyMatrix              x(2, entries);
  std::vector<PolyMatrix> imgs{x};
  CHECK(substitute(W({0}), imgs) == x);

  // 1x1 commutator vanishes, leaving -1
  std::vector<PolyMatrix> uv{PolyMatrix(1, {Polynomial::variable(0)}),
                             PolyMatrix(1, {Polynomial::variable(1)})};
  FreeElement weyl = W({0, 1}) - W({1, 0}) - FreeElement(Rational(1));
  CHECK(substitute(weyl, uv) == PolyMatrix(1, {Polynomial(Rational(-1))}));

  std::vector<PolyMatrix> nil{PolyMatrix::constant({{Rational(0), Rational(1)},
                                                    {Rational(0), Rational(0)}})};
  CHECK(substitute(W({0, 0}), nil).is_zero());

  std::vector<PolyMatrix> mixed{PolyMatrix::identity(2), PolyMatrix::identity(3)};
  CHECK_THROWS_AS(substitute(W({0}), mixed), std::invalid_argument);
  CHECK(substitute(FreeElement(Rational(5)), {}, 3) == Rational(5) * PolyMatrix::identity(3));
}

TEST_CASE("substitute is a unital homomorphism") {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 200; ++iter) {
    size_t                  d = 1 + rng() % 3;
    std::vector<PolyMatrix> imgs;
    for (int l = 0; l < 3; ++l) {
      imgs.push_back(random_int_matrix(rng, d));
    }
    FreeElement a = random_element(rng, 3);
    FreeElement b = random_element(rng, 3);
    CHECK(substitute(a * b, imgs) == substitute(a, imgs) * substitute(b, imgs));
    CHECK(substitute(a + b, imgs) == substitute(a, imgs) + substitute(b, imgs));
    CHECK(substitute(FreeElement(Rational(1)), imgs) == PolyMatrix::identity(d));
  }
}
