#include <random>

#include "doctest.h"
#include "repcount/polynomial.hpp"

using namespace repcount;

namespace {
  Ring const& xyz() {
    static Ring const r({VariableId::auxiliary("x"),
                         VariableId::auxiliary("y"),
                         VariableId::auxiliary("z")});
    return r;
  }

  Polynomial P(std::string_view s, MonomialOrder ord = MonomialOrder::grevlex()) {
    return parse_polynomial(s, xyz(), ord);
  }

  Polynomial random_poly(std::mt19937_64& rng, MonomialOrder ord) {
    std::vector<Term> terms;
    size_t            n = rng() % 5;
    for (size_t k = 0; k < n; ++k) {
      Monomial m;
      for (size_t i = 0; i < 3; ++i) {
        m.set(i, static_cast<unsigned>(rng() % 3));
      }
      terms.push_back({m, Rational(static_cast<int64_t>(rng() % 7) - 3,
                                   static_cast<int64_t>(rng() % 3) + 1)});
    }
    return Polynomial::from_terms(std::move(terms), ord);
  }

  Monomial random_monomial(std::mt19937_64& rng, size_t vars) {
    Monomial m;
    for (size_t i = 0; i < vars; ++i) {
      m.set(i, static_cast<unsigned>(rng() % 4));
    }
    return m;
  }

  // Independent, definition-level comparisons.
  int oracle_grevlex(Monomial const& a, Monomial const& b, size_t lo, size_t hi) {
    unsigned da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) {
      return da > db ? 1 : -1;
    }
    for (size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) {
        return a[i] < b[i] ? 1 : -1;
      }
    }
    return 0;
  }

  int oracle(MonomialOrder ord, Monomial const& a, Monomial const& b) {
    switch (ord.scheme) {
      case MonomialOrder::Scheme::lex:
        for (size_t i = 0; i < kMaxVariables; ++i) {
          if (a[i] != b[i]) {
            return a[i] > b[i] ? 1 : -1;
          }
        }
        return 0;
      case MonomialOrder::Scheme::grevlex:
        return oracle_grevlex(a, b, 0, kMaxVariables);
      case MonomialOrder::Scheme::block: {
        if (ord.inner == MonomialOrder::Scheme::lex) {
          return oracle(MonomialOrder::lex(), a, b);
        }
        int c = oracle_grevlex(a, b, 0, ord.block);
        return c != 0 ? c : oracle_grevlex(a, b, ord.block, kMaxVariables);
      }
    }
    return 0;
  }
}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("x^2 + x") - P("x^2") == P("x"));
  CHECK(Rational(2, 3) * P("3*x") == P("2*x"));
  CHECK((P("x") - P("x")).is_zero());
}

TEST_CASE("leading_term examples") {
  Polynomial f = P("x + y^2");
  Term       l = leading_term(f, MonomialOrder::lex());
  CHECK(l.monomial == Monomial::variable(0));
  CHECK(l.coeff == Rational(1));
  Term g = leading_term(f, MonomialOrder::grevlex());
  CHECK(g.monomial == Monomial::variable(1, 2));
  CHECK_THROWS_AS(leading_term(Polynomial(), MonomialOrder::lex()), std::domain_error);
}

TEST_CASE("reduce examples") {
  auto lex = MonomialOrder::lex();
  std::vector<Polynomial> d1{P("x*y - 1", lex)};
  CHECK(reduce(P("x^2*y", lex), d1, lex) == P("x"));
  std::vector<Polynomial> d2{P("x")};
  CHECK(reduce(P("y"), d2, lex) == P("y"));
  CHECK(reduce(P("x"), d2, lex).is_zero());
}

TEST_CASE("reduce leaves no reducible term") {
  std::mt19937_64 rng(3);
  auto            ord = MonomialOrder::grevlex();
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Polynomial> divs;
    for (int k = 0; k < 3; ++k) {
      Polynomial p = random_poly(rng, ord);
      if (!p.is_zero()) {
        divs.push_back(p);
      }
    }
    Polynomial f = random_poly(rng, ord) * random_poly(rng, ord);
    Polynomial r = reduce(f, divs, ord);
    for (auto const& t : r.terms()) {
      for (auto const& d : divs) {
        CHECK_FALSE(d.lm().divides(t.monomial));
      }
    }
  }
}

TEST_CASE("s_polynomial example") {
  auto lex = MonomialOrder::lex();
  CHECK(s_polynomial(P("x^2 - y", lex), P("x*y - 1", lex), lex) == P("x - y^2"));
  CHECK(s_polynomial(P("x^2 - y", lex), P("x^2 - y", lex), lex).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                   MonomialOrder::elimination(1)}) {
    for (int iter = 0; iter < 200; ++iter) {
      Polynomial a = random_poly(rng, ord);
      Polynomial b = random_poly(rng, ord);
      Polynomial c = random_poly(rng, ord);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * Polynomial(Rational(1), ord) == a);
      CHECK((a + Polynomial(ord)) == a);
      CHECK((a - a).is_zero());
      // the order travels with the value but equality does not depend on it
      CHECK(a.in_order(MonomialOrder::lex()) == a);
    }
  }
}

TEST_CASE("monomial orders: total, multiplicative, 1 minimal") {
  std::mt19937_64 rng(9);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(),
                   MonomialOrder::elimination(2), MonomialOrder::elimination(4),
                   MonomialOrder::elimination(3, MonomialOrder::Scheme::lex)}) {
    CAPTURE(ord.name());
    for (int iter = 0; iter < 2000; ++iter) {
      Monomial a = random_monomial(rng, 6);
      Monomial b = random_monomial(rng, 6);
      Monomial c = random_monomial(rng, 6);
      int      ab = ord.compare(a, b);
      CHECK(ab == -ord.compare(b, a));
      CHECK((ab == 0) == (a == b));
      CHECK(ab == oracle(ord, a, b));
      CHECK(ord.compare(a * c, b * c) == ab);
      if (!a.is_one()) {
        CHECK(ord.compare(a, Monomial()) > 0);
      }
      if (ab > 0 && ord.compare(b, c) > 0) {
        CHECK(ord.compare(a, c) > 0);
      }
    }
  }
}

TEST_CASE("primitive and monic") {
  CHECK(P("2/3*x - 4/9*y").primitive() == P("3*x - 2*y"));
  CHECK(P("-2*x + 4").primitive() == P("x - 2"));
  CHECK(P("3*x + 6").monic() == P("x + 2"));
  Polynomial huge = P("123456789012345678901234567890*x + 246913578024691357802469135780");
  CHECK(huge.primitive() == P("x + 2"));
}

TEST_CASE("divide_exact") {
  CHECK(*divide_exact(P("x^2 - y^2"), P("x - y")) == P("x + y"));
  CHECK_FALSE(divide_exact(P("x^2 + 1"), P("x - 1")).has_value());
  CHECK(divide_exact(Polynomial(), P("x"))->is_zero());
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    Polynomial a = random_poly(rng, MonomialOrder::grevlex());
    if (a.is_zero()) {
      continue;
    }
    CHECK(parse_polynomial(to_string(a, xyz()), xyz()) == a);
  }
  Ring entries = Ring::matrix_entries(2, 1);
  Polynomial e = parse_polynomial("x[1,2,1]*x[2,1,1] - 1", entries);
  CHECK(to_string(e, entries) == "x[1,2,1]*x[2,1,1] - 1");
  CHECK_THROWS_AS(parse_polynomial("x + q", xyz()), std::invalid_argument);
}

TEST_CASE("evaluate and remap") {
  Polynomial f = P("x^2*y - 3*z + 1");
  std::vector<Rational> pt{Rational(2), Rational(1, 2), Rational(1)};
  CHECK(f.evaluate(pt) == Rational(0));
  std::vector<size_t> perm{2, 0, 1};  // x->z, y->x, z->y
  CHECK(remap_variables(f, perm, MonomialOrder::grevlex()) == P("z^2*x - 3*y + 1"));
}
