#include <cmath>
#include <random>

#include "doctest.h"
#include "repcount/genmat.hpp"

using namespace repcount;

namespace {
  PolyMatrix random_int_matrix(std::mt19937_64& rng, size_t d) {
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (auto& r : rows) {
      for (auto& x : r) {
        x = Rational(static_cast<int64_t>(rng() % 7) - 3);
      }
    }
    return PolyMatrix::constant(rows);
  }

  // Necklace count by Burnside: (1/k) sum_{d|k} phi(d) s^(k/d).
  size_t necklaces(size_t k, size_t s) {
    auto phi = [](size_t d) {
      size_t r = 0;
      for (size_t i = 1; i <= d; ++i) {
        size_t a = i, b = d;
        while (b) {
          std::tie(a, b) = std::pair(b, a % b);
        }
        r += a == 1;
      }
      return r;
    };
    size_t total = 0;
    for (size_t d = 1; d <= k; ++d) {
      if (k % d == 0) {
        size_t p = 1;
        for (size_t e = 0; e < k / d; ++e) {
          p *= s;
        }
        total += phi(d) * p;
      }
    }
    return total / k;
  }

  // Trace of a word through plain repeated multiplication.
  Polynomial naive_trace(GenericMatrixSpace const& sp, FreeWord const& w) {
    PolyMatrix m = PolyMatrix::identity(static_cast<size_t>(sp.n));
    for (size_t l : w) {
      m = m * sp.matrices[l];
    }
    return m.trace();
  }

  Presentation P(char const* text) {
    return parse_presentation(text);
  }
}  // namespace

TEST_CASE("build_generic_space examples") {
  auto a = build_generic_space(1, 2);
  REQUIRE(a.matrices.size() == 2);
  CHECK(to_string(a.matrices[0](0, 0), *a.ring) == "x[1,1,1]");
  CHECK(to_string(a.matrices[1](0, 0), *a.ring) == "x[1,1,2]");

  auto b = build_generic_space(2, 1);
  CHECK(to_string(b.matrices[0](0, 0), *b.ring) == "x[1,1,1]");
  CHECK(to_string(b.matrices[0](0, 1), *b.ring) == "x[1,2,1]");
  CHECK(to_string(b.matrices[0](1, 0), *b.ring) == "x[2,1,1]");
  CHECK(to_string(b.matrices[0](1, 1), *b.ring) == "x[2,2,1]");

  auto c = build_generic_space(2, 0);
  CHECK(c.matrices.empty());
  CHECK(c.ring->size() == 0);
}

TEST_CASE("relations_ideal examples") {
  auto sp1 = build_generic_space(1, 1);
  auto i1  = relations_ideal(P("generators: X\nrelation: X^2 - X"), sp1);
  REQUIRE(i1.size() == 1);
  CHECK(i1.generators()[0] == parse_polynomial("x[1,1,1]^2 - x[1,1,1]", *sp1.ring));

  auto sp2  = build_generic_space(1, 2);
  auto weyl = relations_ideal(P("generators: X Y\nrelation: X*Y - Y*X - 1"), sp2);
  REQUIRE(weyl.size() == 1);
  CHECK(weyl.generators()[0] == Polynomial(Rational(-1)));

  auto sp3 = build_generic_space(2, 2);
  auto cp  = relations_ideal(P("generators: X Y\nrelation: X*Y - Y*X"), sp3);
  CHECK(cp.size() == 4);
  PolyMatrix comm = substitute(P("generators: X Y\nrelation: X*Y - Y*X").relations[0],
                               sp3.matrices);
  CHECK((comm(0, 0) + comm(1, 1)).is_zero());
  CHECK(!comm(0, 0).is_zero());

  // the Weyl diagonal sum is -2 at n = 2
  PolyMatrix w2 = substitute(P("generators: X Y\nrelation: X*Y - Y*X - 1").relations[0],
                             sp3.matrices);
  CHECK(w2.trace() == Polynomial(Rational(-2)));
}

TEST_CASE("standard identity examples and Amitsur-Levitzky at n = 2") {
  auto                    sp = build_generic_space(2, 4);
  auto const&             x  = sp.matrices;
  std::vector<PolyMatrix> ab{x[0], x[1]};
  CHECK(standard_identity(2, ab) == x[0] * x[1] - x[1] * x[0]);
  std::vector<PolyMatrix> aa{x[0], x[0]};
  CHECK(standard_identity(2, aa).is_zero());

  CHECK(standard_identity(4, x).is_zero());
  std::vector<PolyMatrix> three{x[0], x[1], x[2]};
  PolyMatrix              s3 = standard_identity(3, three);
  bool                    some_nonzero = false;
  for (auto const& e : s3.entries()) {
    some_nonzero = some_nonzero || !e.is_zero();
  }
  CHECK(some_nonzero);
  // s_2 does not vanish on 2x2 matrices either
  CHECK_FALSE(standard_identity(2, ab).is_zero());
}

TEST_CASE("standard identity: brute-force sum, multilinear and alternating") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    size_t                  m = 1 + rng() % 4;
    size_t                  d = 1 + rng() % 3;
    std::vector<PolyMatrix> args;
    for (size_t i = 0; i < m; ++i) {
      args.push_back(random_int_matrix(rng, d));
    }
    // oracle: explicit permutation sum
    std::vector<size_t> perm(m);
    for (size_t i = 0; i < m; ++i) {
      perm[i] = i;
    }
    PolyMatrix expect(d);
    do {
      int inv = 0;
      for (size_t a = 0; a < m; ++a) {
        for (size_t b = a + 1; b < m; ++b) {
          inv += perm[a] > perm[b];
        }
      }
      PolyMatrix prod = PolyMatrix::identity(d);
      for (size_t i : perm) {
        prod = prod * args[i];
      }
      expect += Rational(inv % 2 ? -1 : 1) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    PolyMatrix got = standard_identity(m, args);
    CHECK(got == expect);

    if (m >= 2) {
      auto swapped = args;
      std::swap(swapped[0], swapped[1]);
      CHECK(standard_identity(m, swapped) == Rational(-1) * got);
    }
    auto       scaled = args;
    PolyMatrix extra  = random_int_matrix(rng, d);
    scaled[0]         = Rational(3) * args[0] + extra;
    auto with_extra   = args;
    with_extra[0]     = extra;
    CHECK(standard_identity(m, scaled)
          == Rational(3) * got + standard_identity(m, with_extra));
  }
}

TEST_CASE("length_bound") {
  CHECK(length_bound(2) == 4);
  CHECK(length_bound(3) == 8);
  CHECK_THROWS_AS(length_bound(1), std::invalid_argument);
  // floating-point cross-check where p is safely away from an integer
  for (int n = 2; n <= 12; ++n) {
    double p = n * std::sqrt(2.0 * n * n / (n - 1) + 0.25) + n / 2.0 - 2;
    if (std::abs(p - std::round(p)) > 1e-6) {
      CHECK(length_bound(n) == static_cast<unsigned>(std::floor(p)));
    }
  }
}

TEST_CASE("cyclic words") {
  CHECK(least_rotation({1, 0, 0}) == FreeWord{0, 0, 1});
  CHECK(least_rotation({1, 0, 1, 0}) == FreeWord{0, 1, 0, 1});
  CHECK(CyclicWord({0, 0}).to_string() == "x1^2");
  CHECK(CyclicWord({1, 0, 0}).to_string() == "x1^2*x2");
}

TEST_CASE("trace_generators examples") {
  auto g11 = trace_generators(build_generic_space(1, 1));
  REQUIRE(g11.size() == 1);
  CHECK(g11[0].value == Polynomial::variable(0));

  auto sp22 = build_generic_space(2, 2);
  auto g22  = trace_generators(sp22);
  CHECK(g22.size() == 15);
  size_t per_len[5] = {};
  for (auto const& g : g22) {
    ++per_len[g.word.size()];
  }
  CHECK(per_len[1] == 2);
  CHECK(per_len[2] == 3);
  CHECK(per_len[3] == 4);
  CHECK(per_len[4] == 6);
  for (size_t k = 1; k <= 4; ++k) {
    CHECK(per_len[k] == necklaces(k, 2));
  }
  CHECK(g22[0].word.to_string() == "x1");
  CHECK(g22[2].word.to_string() == "x1^2");

  auto g21 = trace_generators(build_generic_space(2, 1));
  REQUIRE(g21.size() == 4);
  for (size_t k = 0; k < 4; ++k) {
    CHECK(g21[k].word.size() == k + 1);
  }

  // n = 3, s = 1 and n = 2, s = 3 against the necklace formula
  auto g23 = trace_generators(build_generic_space(2, 3));
  size_t expect = 0;
  for (size_t k = 1; k <= 4; ++k) {
    expect += necklaces(k, 3);
  }
  CHECK(g23.size() == expect);
}

TEST_CASE("trace values are rotation invariant (exhaustive, n = 2, s = 2)") {
  auto       sp = build_generic_space(2, 2);
  TraceTable table(sp);
  for (auto const& w : words_up_to(2, 4)) {
    if (w.empty()) {
      continue;
    }
    Polynomial const expect = naive_trace(sp, CyclicWord(w).letters());
    FreeWord         rot    = w;
    for (size_t k = 0; k < w.size(); ++k) {
      CHECK(naive_trace(sp, rot) == expect);
      CHECK(table.trace(rot) == expect);
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  // longer words go through the split and uncached paths
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 40; ++iter) {
    FreeWord w(1 + rng() % 18);
    for (auto& l : w) {
      l = rng() % 2;
    }
    CHECK(table.trace(w) == naive_trace(sp, w));
  }
}

TEST_CASE("irreducibility_set examples") {
  auto s21 = irreducibility_set(build_generic_space(2, 1));
  CHECK(s21.polynomials.empty());

  auto sp = build_generic_space(2, 2);
  auto s  = irreducibility_set(sp);
  CHECK(s.word_length == 4);
  CHECK(s.raw_tuples == doctest::Approx(31.0 * 31 * 31));
  CHECK(s.evaluated == 31 * (31 * 30 / 2));
  CHECK(!s.polynomials.empty());
  REQUIRE(s.polynomials.size() == s.provenance.size());

  // tr(x1 [x1, x2]) vanishes by cyclicity, so nothing of degree 3 appears
  FreeElement const x1(FreeWord{0}), x2(FreeWord{1});
  PolyMatrix        m = substitute(x1 * (x1 * x2 - x2 * x1), sp.matrices);
  CHECK(m.trace().is_zero());
  // tr(x1 x2 [x1, x2]) is a member up to sign
  PolyMatrix m4 = substitute(x1 * x2 * (x1 * x2 - x2 * x1), sp.matrices);
  Polynomial f4 = m4.trace().primitive();
  CHECK(!f4.is_zero());
  CHECK(std::find(s.polynomials.begin(), s.polynomials.end(), f4) != s.polynomials.end());

  unsigned const bound = (2 * (2 - 1) + 1) * length_bound(2);
  for (size_t i = 0; i < s.polynomials.size(); ++i) {
    auto const& f = s.polynomials[i];
    CHECK(!f.is_zero());
    CHECK(f.total_degree() <= bound);
    // provenance reproduces the member up to sign
    auto const& t   = s.provenance[i];
    FreeElement m0(t[0]), a(t[1]), b(t[2]);
    Polynomial  g = substitute(m0 * (a * b - b * a), sp.matrices).trace().primitive();
    CHECK(g == f);
    CHECK(t[1] != t[2]);
  }
  for (size_t i = 0; i < s.polynomials.size(); ++i) {
    for (size_t j = i + 1; j < s.polynomials.size() && j < i + 50; ++j) {
      CHECK_FALSE(s.polynomials[i] == s.polynomials[j]);
      CHECK_FALSE(s.polynomials[i] == -s.polynomials[j]);
    }
  }
  CHECK_THROWS_AS(irreducibility_set(build_generic_space(1, 2)), std::invalid_argument);
}
