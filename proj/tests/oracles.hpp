#pragma once

// Independent oracles for tests: plain univariate arithmetic over Q, no
// Groebner bases involved.

#include <random>
#include <vector>

#include "repcount/presentation.hpp"

namespace repcount::oracle {

  using Uni = std::vector<Rational>;  // low degree first

  inline void trim(Uni& a) {
    while (!a.empty() && a.back().is_zero()) {
      a.pop_back();
    }
  }

  inline Uni uni_mod(Uni a, Uni const& b) {
    trim(a);
    while (a.size() >= b.size()) {
      Rational c     = a.back() / b.back();
      size_t   shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        a[i + shift] -= c * b[i];
      }
      trim(a);
    }
    return a;
  }

  inline Uni uni_gcd(Uni a, Uni b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Uni r = uni_mod(a, b);
      a     = std::move(b);
      b     = std::move(r);
    }
    return a;
  }

  inline Uni uni_mul(Uni const& a, Uni const& b) {
    Uni out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < b.size(); ++j) {
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  // Distinct roots over the closure: deg p - deg gcd(p, p').
  inline size_t distinct_roots(Uni p) {
    trim(p);
    Uni d;
    for (size_t i = 1; i < p.size(); ++i) {
      d.push_back(p[i] * Rational(static_cast<int64_t>(i)));
    }
    if (d.empty()) {
      return 0;
    }
    Uni g = uni_gcd(p, d);
    return (p.size() - 1) - (g.size() - 1);
  }

  // p(x_letter) as a free-algebra element.
  inline FreeElement as_word_poly(Uni const& p, size_t letter) {
    FreeElement e;
    for (size_t k = 0; k < p.size(); ++k) {
      e += FreeElement(FreeWord(k, letter), p[k]);
    }
    return e;
  }

  struct PointCountCase {
    Presentation presentation;
    size_t       expected = 0;
  };

  // Zero-dimensional commutative presentations in one or two generators:
  // products of linear factors, some squared, sometimes times an
  // irreducible quadratic. Shapes cycle through one variable, a grid
  // p(X) = q(Y) = 0 and a graph p(X) = 0, Y = aX + b.
  inline PointCountCase random_point_count_case(std::mt19937_64& rng, int shape) {
    auto rnd = [&](int span) {
      return Rational(static_cast<int64_t>(rng() % (2 * span + 1)) - span);
    };
    auto random_univariate = [&]() {
      Uni    p{Rational(1)};
      size_t k = 1 + rng() % 3;
      for (size_t i = 0; i < k; ++i) {
        Uni    lin{rnd(3), Rational(1)};
        size_t mult = 1 + (rng() % 4 == 0);
        for (size_t e = 0; e < mult; ++e) {
          p = uni_mul(p, lin);
        }
      }
      if (rng() % 4 == 0) {
        p = uni_mul(p, Uni{Rational(2 + static_cast<int64_t>(rng() % 3)), Rational(0), Rational(1)});
      }
      return p;
    };

    PointCountCase c;
    Uni            pu = random_univariate();
    switch (shape % 3) {
      case 0:
        c.presentation.generators = {{"X", 0}};
        c.presentation.relations  = {as_word_poly(pu, 0)};
        c.expected                = distinct_roots(pu);
        break;
      case 1: {
        Uni pv                    = random_univariate();
        c.presentation.generators = {{"X", 0}, {"Y", 1}};
        c.presentation.relations  = {as_word_poly(pu, 0), as_word_poly(pv, 1)};
        c.expected                = distinct_roots(pu) * distinct_roots(pv);
        break;
      }
      default: {
        c.presentation.generators = {{"X", 0}, {"Y", 1}};
        FreeElement const x(FreeWord{0}), y(FreeWord{1});
        FreeElement line = y - rnd(2) * x - FreeElement(rnd(2));
        c.presentation.relations = {as_word_poly(pu, 0), (rng() % 2) ? line * line : line};
        if (rng() % 2) {
          c.presentation.relations.push_back(x * line);
        }
        c.expected = distinct_roots(pu);
        break;
      }
    }
    return c;
  }

}  // namespace repcount::oracle
