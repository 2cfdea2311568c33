#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

#include "repcount/simd/kernels.hpp"

namespace repcount {

  inline constexpr size_t kMaxVariables = simd::kExponentBytes;
  inline constexpr unsigned kMaxExponent = 255;

  // Power product over at most kMaxVariables variables. Variables are
  // identified by their position, which is also their rank: position 0 is
  // the largest variable in every monomial order.
  class Monomial {
   public:
    Monomial() noexcept : exp_{}, degree_(0) {}

    static Monomial variable(size_t index, unsigned power = 1);

    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] unsigned operator[](size_t i) const noexcept {
      return exp_[i];
    }
    [[nodiscard]] bool is_one() const noexcept { return degree_ == 0; }
    [[nodiscard]] uint8_t const* data() const noexcept { return exp_.data(); }

    void set(size_t index, unsigned power);

    [[nodiscard]] bool divides(Monomial const& other) const noexcept {
      return degree_ <= other.degree_
             && k().divides(exp_.data(), other.exp_.data());
    }
    [[nodiscard]] bool coprime(Monomial const& other) const noexcept {
      return k().coprime(exp_.data(), other.exp_.data());
    }
    [[nodiscard]] Monomial lcm(Monomial const& other) const noexcept;
    [[nodiscard]] uint32_t prefix_degree(size_t count) const noexcept {
      return k().prefix_sum(exp_.data(), count);
    }

    // Requires this | other.
    [[nodiscard]] Monomial quotient_of(Monomial const& other) const noexcept;

    friend Monomial operator*(Monomial const& a, Monomial const& b) {
      if (a.degree_ + b.degree_ > kMaxExponent) {
        throw std::overflow_error("monomial degree exceeds "
                                  + std::to_string(kMaxExponent));
      }
      Monomial r;
      k().add(a.exp_.data(), b.exp_.data(), r.exp_.data());
      r.degree_ = a.degree_ + b.degree_;
      return r;
    }

    friend bool operator==(Monomial const& a, Monomial const& b) noexcept {
      return a.degree_ == b.degree_
             && std::memcmp(a.exp_.data(), b.exp_.data(), kMaxVariables) == 0;
    }

    [[nodiscard]] int first_diff(Monomial const& other) const noexcept {
      return k().first_diff(exp_.data(), other.exp_.data());
    }
    [[nodiscard]] int last_diff(Monomial const& other) const noexcept {
      return k().last_diff(exp_.data(), other.exp_.data());
    }

    [[nodiscard]] size_t hash() const noexcept;

    // dst[i] = src[i] * m over count monomials spaced by the given byte
    // strides (so monomials embedded in larger records can be processed in
    // place).
    static void multiply_batch(Monomial const* src,
                               ptrdiff_t          src_stride,
                               size_t          count,
                               Monomial const& m,
                               Monomial*       dst,
                               ptrdiff_t          dst_stride);

    // Highest index with a nonzero exponent plus one.
    [[nodiscard]] size_t support_end() const noexcept;

   private:
    static simd::MonomialKernels const& k() noexcept {
      return *simd::detail::g_active;
    }

    std::array<uint8_t, kMaxVariables> exp_;
    uint32_t                           degree_;
  };

  struct MonomialHash {
    size_t operator()(Monomial const& m) const noexcept { return m.hash(); }
  };

  // Only the scheme and, for block orders, the number of leading variables
  // forming the eliminated block are needed: the variable ranking is the
  // storage order of the ring.
  struct MonomialOrder {
    enum class Scheme : uint8_t { lex, grevlex, block };

    Scheme   scheme = Scheme::grevlex;
    // Block orders: variables [0, block) are compared first, then the rest,
    // each with the inner scheme.
    uint16_t block = 0;
    Scheme   inner = Scheme::grevlex;

    static constexpr MonomialOrder lex() { return {Scheme::lex, 0, Scheme::lex}; }
    static constexpr MonomialOrder grevlex() {
      return {Scheme::grevlex, 0, Scheme::grevlex};
    }
    static constexpr MonomialOrder elimination(uint16_t eliminated,
                                               Scheme inner = Scheme::grevlex) {
      return {Scheme::block, eliminated, inner};
    }

    // <0, 0, >0 as a < b, a == b, a > b.
    [[nodiscard]] int compare(Monomial const& a, Monomial const& b) const noexcept;

    [[nodiscard]] bool greater(Monomial const& a, Monomial const& b) const noexcept {
      return compare(a, b) > 0;
    }

    [[nodiscard]] std::string name() const;

    friend bool operator==(MonomialOrder const&, MonomialOrder const&) = default;
  };

}  // namespace repcount
