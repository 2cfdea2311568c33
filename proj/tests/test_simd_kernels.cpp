// Equivalence of every available kernel table against the scalar reference.

#include <random>
#include <vector>

#include "doctest.h"
#include "repcount/monomial.hpp"
#include "repcount/simd/kernels.hpp"

using namespace repcount;
using simd::kExponentBytes;

namespace {
  using Block = std::array<uint8_t, kExponentBytes>;

  Block random_block(std::mt19937_64& rng, size_t used, unsigned max_exp) {
    Block b{};
    for (size_t i = 0; i < used; ++i) {
      // sparse-ish, with many zeros like real monomials
      b[i] = (rng() % 3 == 0) ? static_cast<uint8_t>(rng() % (max_exp + 1)) : 0;
    }
    return b;
  }

  // Perturb a copy so equal / dividing pairs are common.
  Block nearby(std::mt19937_64& rng, Block b, size_t used) {
    switch (rng() % 4) {
      case 0:
        return b;
      case 1: {
        size_t i = rng() % used;
        b[i]     = static_cast<uint8_t>(b[i] + 1);
        return b;
      }
      case 2: {
        size_t i = rng() % used;
        if (b[i] > 0) {
          --b[i];
        }
        return b;
      }
      default:
        return random_block(rng, used, 6);
    }
  }
}  // namespace

TEST_CASE("simd: every kernel table matches the scalar reference") {
  auto const& ref = simd::scalar_kernels();
  auto        all = simd::available_kernels();
  MESSAGE("kernel tables available: " << all.size()
                                      << " (active: " << simd::active_kernels().name << ")");
  std::mt19937_64 rng(7);
  for (auto const* k : all) {
    CAPTURE(k->name);
    for (int iter = 0; iter < 20000; ++iter) {
      size_t used = 1 + rng() % kExponentBytes;
      Block  a    = random_block(rng, used, 6);
      Block  b    = nearby(rng, a, used);
      Block  r1{}, r2{};

      ref.add(a.data(), b.data(), r1.data());
      k->add(a.data(), b.data(), r2.data());
      CHECK(r1 == r2);

      ref.lcm(a.data(), b.data(), r1.data());
      k->lcm(a.data(), b.data(), r2.data());
      CHECK(r1 == r2);

      ref.lcm(a.data(), b.data(), r1.data());
      Block q1{}, q2{};
      ref.sub(r1.data(), a.data(), q1.data());
      k->sub(r1.data(), a.data(), q2.data());
      CHECK(q1 == q2);

      CHECK(ref.divides(a.data(), b.data()) == k->divides(a.data(), b.data()));
      CHECK(ref.coprime(a.data(), b.data()) == k->coprime(a.data(), b.data()));
      CHECK(ref.first_diff(a.data(), b.data())
            == k->first_diff(a.data(), b.data()));
      CHECK(ref.last_diff(a.data(), b.data()) == k->last_diff(a.data(), b.data()));
      size_t prefix = rng() % (kExponentBytes + 1);
      CHECK(ref.prefix_sum(a.data(), prefix) == k->prefix_sum(a.data(), prefix));
    }

    // batch kernels, including a negative stride walk
    std::vector<Block> leads;
    for (int i = 0; i < 64; ++i) {
      leads.push_back(random_block(rng, 12, 3));
    }
    for (int iter = 0; iter < 2000; ++iter) {
      Block t = random_block(rng, 12, 5);
      CHECK(ref.find_divisor(leads[0].data(), sizeof(Block), leads.size(), t.data())
            == k->find_divisor(leads[0].data(), sizeof(Block), leads.size(), t.data()));
    }
    Block              m = random_block(rng, 12, 3);
    std::vector<Block> out1(leads.size()), out2(leads.size());
    auto const         stride = static_cast<ptrdiff_t>(sizeof(Block));
    ref.add_batch(leads.back().data(), -stride, leads.size(), m.data(),
                  out1[0].data(), stride);
    k->add_batch(leads.back().data(), -stride, leads.size(), m.data(),
                 out2[0].data(), stride);
    CHECK(out1 == out2);
    Block expect{};
    ref.add(leads.back().data(), m.data(), expect.data());
    CHECK(out1[0] == expect);
  }
}

TEST_CASE("simd: monomial orders agree across kernel tables") {
  std::mt19937_64 rng(11);
  auto            all   = simd::available_kernels();
  auto const*     saved = &simd::active_kernels();
  MonomialOrder const orders[] = {MonomialOrder::lex(),
                                  MonomialOrder::grevlex(),
                                  MonomialOrder::elimination(3),
                                  MonomialOrder::elimination(5)};
  for (int iter = 0; iter < 3000; ++iter) {
    Monomial a, b;
    for (size_t i = 0; i < 9; ++i) {
      a.set(i, static_cast<unsigned>(rng() % 4));
      b.set(i, static_cast<unsigned>(rng() % 4));
    }
    for (auto const& ord : orders) {
      simd::select_kernels("scalar");
      int expect = ord.compare(a, b);
      for (auto const* k : all) {
        simd::select_kernels(k->name);
        CHECK(ord.compare(a, b) == expect);
      }
    }
  }
  simd::select_kernels(saved->name);
}

TEST_CASE("simd: selection by name") {
  auto const* saved = &simd::active_kernels();
  CHECK(simd::select_kernels("scalar"));
  CHECK(std::string(simd::active_kernels().name) == "scalar");
  CHECK_FALSE(simd::select_kernels("no-such-isa"));
  CHECK(std::string(simd::active_kernels().name) == "scalar");
  simd::select_kernels(saved->name);
}
