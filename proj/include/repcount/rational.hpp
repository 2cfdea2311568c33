#pragma once

#include <cstdint>
#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace repcount {

  // Exact rational number. Values whose normalized numerator and denominator
  // fit in a signed 64-bit word are kept inline; everything else spills to a
  // heap-allocated mpq_class. The representation is always canonical:
  // positive denominator, gcd(num, den) = 1, and a value is big only if it
  // does not fit the small form.
  class Rational {
   public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(int64_t value);  // NOLINT(runtime/explicit)
    Rational(int64_t num, int64_t den);
    explicit Rational(mpq_class const& value);
    explicit Rational(mpz_class const& value);

    Rational(Rational const& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(Rational const& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    // Accepts "a" or "a/b" with optional leading sign; b must be positive.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept {
      return !big_ && num_ == 1 && den_ == 1;
    }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] int sign() const;

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] size_t hash() const;

    Rational operator-() const;
    Rational& operator+=(Rational const& rhs);
    Rational& operator-=(Rational const& rhs);
    Rational& operator*=(Rational const& rhs);
    Rational& operator/=(Rational const& rhs);

    friend Rational operator+(Rational lhs, Rational const& rhs) {
      return lhs += rhs;
    }
    friend Rational operator-(Rational lhs, Rational const& rhs) {
      return lhs -= rhs;
    }
    friend Rational operator*(Rational lhs, Rational const& rhs) {
      return lhs *= rhs;
    }
    friend Rational operator/(Rational lhs, Rational const& rhs) {
      return lhs /= rhs;
    }

    friend bool operator==(Rational const& a, Rational const& b);
    friend std::strong_ordering operator<=>(Rational const& a,
                                            Rational const& b);

    Rational inverse() const;
    Rational abs() const;

   private:
    void assign_big(mpq_class&& value);
    void set_from_i128(__int128 num, __int128 den);

    int64_t                    num_;
    int64_t                    den_;
    std::unique_ptr<mpq_class> big_;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& r);

  mpz_class gcd(mpz_class const& a, mpz_class const& b);

}  // namespace repcount

template <>
struct std::hash<repcount::Rational> {
  size_t operator()(repcount::Rational const& r) const { return r.hash(); }
};

