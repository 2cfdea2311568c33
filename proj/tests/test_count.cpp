#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "repcount/count.hpp"

using namespace repcount;

namespace {
  Presentation corpus(char const* name) {
    std::ifstream     in(std::string(REPCOUNT_CORPUS_DIR) + "/" + name + ".alg");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  DecisionInput input(Presentation p, int n) {
    DecisionInput d;
    d.presentation = std::move(p);
    d.n            = n;
    return d;
  }

  QMatrix Q(std::initializer_list<std::initializer_list<int64_t>> rows) {
    QMatrix m;
    for (auto const& r : rows) {
      m.emplace_back();
      for (auto x : r) {
        m.back().emplace_back(x);
      }
    }
    return m;
  }

  // Algebra of a one-generator relation at n = 1.
  FiniteDimAlgebra one_variable(char const* relation) {
    auto p   = parse_presentation(std::string("generators: X\nrelation: ") + relation);
    auto sp  = build_generic_space(1, 1);
    auto j   = buchberger(relations_ideal(p, sp), MonomialOrder::grevlex());
    std::vector<Polynomial> g{sp.matrices[0].trace()};
    return build_quotient_basis(g, j);
  }

  std::vector<Rational> mat_vec(QMatrix const& m, std::vector<Rational> const& v) {
    std::vector<Rational> out(m.size(), Rational(0));
    for (size_t i = 0; i < m.size(); ++i) {
      for (size_t j = 0; j < v.size(); ++j) {
        out[i] += m[i][j] * v[j];
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("build_quotient_basis examples") {
  auto idem = one_variable("X^2 - X");
  CHECK(idem.dim() == 2);
  auto sq = one_variable("X^2 + 1");
  CHECK(sq.dim() == 2);

  auto sp   = build_generic_space(1, 1);
  auto unit = buchberger(Ideal::unit(sp.ring), MonomialOrder::grevlex());
  std::vector<Polynomial> g{sp.matrices[0].trace()};
  CHECK(build_quotient_basis(g, unit).dim() == 0);
}

TEST_CASE("multiplication_matrix examples") {
  auto idem = one_variable("X^2 - X");
  CHECK(multiplication_matrix(idem, 1) == Q({{0, 0}, {1, 1}}));
  CHECK(multiplication_matrix(idem, 0) == Q({{1, 0}, {0, 1}}));
  auto sq = one_variable("X^2 + 1");
  CHECK(multiplication_matrix(sq, 1) == Q({{0, -1}, {1, 0}}));
  CHECK_THROWS_AS(multiplication_matrix(sq, 2), std::out_of_range);
}

TEST_CASE("trace_form_rank examples") {
  auto r1 = trace_form_rank(one_variable("X^2 - X"));
  CHECK(r1.gram == Q({{2, 1}, {1, 1}}));
  CHECK(r1.count == 2);
  auto r2 = trace_form_rank(one_variable("X^2 + 1"));
  CHECK(r2.gram == Q({{2, 0}, {0, -2}}));
  CHECK(r2.count == 2);
  auto r3 = trace_form_rank(one_variable("X^2"));
  CHECK(r3.gram == Q({{2, 0}, {0, 0}}));
  CHECK(r3.count == 1);
}

TEST_CASE("count_classes examples") {
  CHECK(count_classes(input(corpus("idempotent"), 1)) == 2);
  CHECK(count_classes(input(corpus("x2plus1"), 1)) == 2);
  CHECK(count_classes(input(corpus("x2"), 1)) == 1);
  CHECK(count_classes(input(corpus("s3"), 1)) == 2);
  CHECK(count_classes(input(corpus("s3"), 2)) == 1);
  CHECK(count_classes(input(corpus("weyl"), 2)) == 0);
  CHECK(count_classes(input(corpus("commplane"), 2)) == 0);
  try {
    count_classes(input(corpus("free2"), 1));
    FAIL("expected an infinite verdict");
  } catch (InfiniteVerdictError const& e) {
    CHECK(e.witness().to_string() == "x1");
  }
  auto tight                      = input(corpus("s3"), 2);
  tight.options.limits.max_degree = 2;
  CHECK_THROWS_AS(count_classes(tight), ResourceLimitExceeded);
}

TEST_CASE("algebra invariants on the corpus") {
  for (auto [name, n] : {std::pair{"idempotent", 1}, std::pair{"x2plus1", 1}, std::pair{"x2", 1},
                         std::pair{"s3", 1}, std::pair{"s3", 2}}) {
    CAPTURE(name);
    CAPTURE(n);
    auto run = run_count(input(corpus(name), n));
    REQUIRE(run.algebra.has_value());
    auto const&  d = *run.algebra;
    auto const&  j = run.decision.j->basis;
    size_t const m = d.dim();

    // closure: products reduce into the span, with the stated coordinates
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        Polynomial lhs = j.normal_form(d.basis[a] * d.basis[b]);
        Polynomial rhs(lhs.order());
        for (size_t k = 0; k < m; ++k) {
          rhs += d.basis[k] * d.structure[a][b][k];
        }
        CHECK(lhs == j.normal_form(rhs));
      }
    }
    // commuting regular representation
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        auto la = multiplication_matrix(d, a), lb = multiplication_matrix(d, b);
        CHECK(multiply(la, lb) == multiply(lb, la));
      }
    }
    // symmetric Gram, nilpotent kernel
    auto const& r = *run.report;
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        CHECK(r.gram[a][b] == r.gram[b][a]);
      }
    }
    for (auto const& v : kernel(r.gram)) {
      QMatrix lv(m, std::vector<Rational>(m, Rational(0)));
      for (size_t k = 0; k < m; ++k) {
        if (!v[k].is_zero()) {
          auto lk = multiplication_matrix(d, k);
          for (size_t a = 0; a < m; ++a) {
            for (size_t b = 0; b < m; ++b) {
              lv[a][b] += v[k] * lk[a][b];
            }
          }
        }
      }
      // v^m = 0 in an m-dimensional algebra when v is nilpotent
      std::vector<Rational> power(m, Rational(0));
      power[0] = Rational(1);
      for (size_t k = 0; k < m; ++k) {
        power = mat_vec(lv, power);
      }
      for (auto const& c : power) {
        CHECK(c.is_zero());
      }
    }
  }
}

TEST_CASE("count does not depend on generator order") {
  auto run = run_count(input(corpus("s3"), 1));
  REQUIRE(run.count.has_value());
  std::vector<Polynomial> gens;
  for (auto const& g : run.decision.generators) {
    gens.push_back(g.value);
  }
  std::reverse(gens.begin(), gens.end());
  auto d = build_quotient_basis(gens, run.decision.j->basis);
  CHECK(trace_form_rank(d).count == *run.count);
}

TEST_CASE("n = 1 counts match an independent univariate oracle") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 60; ++iter) {
    auto c = oracle::random_point_count_case(rng, iter);
    CAPTURE(format(c.presentation));
    CHECK(count_classes(input(c.presentation, 1)) == c.expected);
  }
}
