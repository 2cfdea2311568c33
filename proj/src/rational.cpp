#include "repcount/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace repcount {

  namespace {
    constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

    using u128 = unsigned __int128;
    using i128 = __int128;

    u128 abs128(i128 x) {
      return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x);
    }

    u128 gcd128(u128 a, u128 b) {
      if ((a >> 64) == 0 && (b >> 64) == 0) {
        return std::gcd(static_cast<uint64_t>(a), static_cast<uint64_t>(b));
      }
      while (b != 0) {
        u128 t = a % b;
        a      = b;
        b      = t;
      }
      return a;
    }

    bool fits(i128 x) {
      return x >= -static_cast<i128>(kMax) && x <= static_cast<i128>(kMax);
    }

    mpz_class to_mpz(i128 x) {
      bool      neg = x < 0;
      u128      m   = abs128(x);
      mpz_class hi  = static_cast<unsigned long>(static_cast<uint64_t>(m >> 64));
      mpz_class lo  = static_cast<unsigned long>(static_cast<uint64_t>(m));
      mpz_class r   = (hi << 64) + lo;
      return neg ? mpz_class(-r) : r;
    }

    mpz_class to_mpz(int64_t x) {
      return to_mpz(static_cast<i128>(x));
    }

    bool mpz_fits_small(mpz_class const& z) {
      if (!z.fits_slong_p()) {
        return false;
      }
      return z.get_si() != std::numeric_limits<long>::min();
    }
  }  // namespace

  Rational::Rational(int64_t value) : num_(value), den_(1) {
    if (value == std::numeric_limits<int64_t>::min()) {
      assign_big(mpq_class(to_mpz(value)));
    }
  }

  Rational::Rational(int64_t num, int64_t den) : num_(0), den_(1) {
    if (den == 0) {
      throw std::domain_error("Rational: zero denominator");
    }
    set_from_i128(num, den);
  }

  Rational::Rational(mpq_class const& value) : num_(0), den_(1) {
    mpq_class copy = value;
    copy.canonicalize();
    assign_big(std::move(copy));
  }

  Rational::Rational(mpz_class const& value) : num_(0), den_(1) {
    assign_big(mpq_class(value));
  }

  Rational::Rational(Rational const& other)
      : num_(other.num_),
        den_(other.den_),
        big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

  Rational& Rational::operator=(Rational const& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      if (other.big_) {
        big_ = std::make_unique<mpq_class>(*other.big_);
      } else {
        big_.reset();
      }
    }
    return *this;
  }

  void Rational::assign_big(mpq_class&& value) {
    if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
      num_ = value.get_num().get_si();
      den_ = value.get_den().get_si();
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
  }

  void Rational::set_from_i128(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
      num /= static_cast<i128>(g);
      den /= static_cast<i128>(g);
    }
    if (fits(num) && fits(den)) {
      num_ = static_cast<int64_t>(num);
      den_ = static_cast<int64_t>(den);
      big_.reset();
      return;
    }
    big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
    num_ = 0;
    den_ = 1;
  }

  Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
      throw std::invalid_argument("empty rational literal");
    }
    auto slash = s.find('/');
    auto is_int = [](std::string const& t, bool allow_sign) {
      size_t i = 0;
      if (allow_sign && i < t.size() && (t[i] == '+' || t[i] == '-')) {
        ++i;
      }
      if (i == t.size()) {
        return false;
      }
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') {
          return false;
        }
      }
      return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) {
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (!num.empty() && num[0] == '+') {
      num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
      throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    return Rational(mpq_class(n, d));
  }

  bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
  }

  int Rational::sign() const {
    if (big_) {
      return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
  }

  mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : to_mpz(num_);
  }

  mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : to_mpz(den_);
  }

  mpq_class Rational::to_mpq() const {
    if (big_) {
      return *big_;
    }
    return mpq_class(to_mpz(num_), to_mpz(den_));
  }

  std::string Rational::to_string() const {
    if (big_) {
      return big_->get_str();
    }
    if (den_ == 1) {
      return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  size_t Rational::hash() const {
    if (!big_) {
      uint64_t h = static_cast<uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<uint64_t>(den_) + 0x632BE59BD9B4E019ULL + (h << 6)
           + (h >> 2);
      return h;
    }
    // Big values never equal small ones, so any consistent hash works.
    std::string s = big_->get_str();
    return std::hash<std::string>()(s);
  }

  Rational Rational::operator-() const {
    Rational r;
    if (big_) {
      r.assign_big(mpq_class(-*big_));
    } else {
      r.num_ = -num_;
      r.den_ = den_;
    }
    return r;
  }

  Rational& Rational::operator+=(Rational const& rhs) {
    if (!big_ && !rhs.big_) {
      if (den_ == 1 && rhs.den_ == 1) {
        int64_t out;
        if (!__builtin_add_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<int64_t>::min()) {
          num_ = out;
          return *this;
        }
      }
      i128 n = static_cast<i128>(num_) * rhs.den_
               + static_cast<i128>(rhs.num_) * den_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      set_from_i128(n, d);
      return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
  }

  Rational& Rational::operator-=(Rational const& rhs) {
    if (!big_ && !rhs.big_) {
      if (den_ == 1 && rhs.den_ == 1) {
        int64_t out;
        if (!__builtin_sub_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<int64_t>::min()) {
          num_ = out;
          return *this;
        }
      }
      i128 n = static_cast<i128>(num_) * rhs.den_
               - static_cast<i128>(rhs.num_) * den_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      set_from_i128(n, d);
      return *this;
    }
    assign_big(to_mpq() - rhs.to_mpq());
    return *this;
  }

  Rational& Rational::operator*=(Rational const& rhs) {
    if (!big_ && !rhs.big_) {
      if (den_ == 1 && rhs.den_ == 1) {
        int64_t out;
        if (!__builtin_mul_overflow(num_, rhs.num_, &out) && out != std::numeric_limits<int64_t>::min()) {
          num_ = out;
          return *this;
        }
      }
      i128 n = static_cast<i128>(num_) * rhs.num_;
      i128 d = static_cast<i128>(den_) * rhs.den_;
      set_from_i128(n, d);
      return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
  }

  Rational& Rational::operator/=(Rational const& rhs) {
    if (rhs.is_zero()) {
      throw std::domain_error("Rational: division by zero");
    }
    if (!big_ && !rhs.big_) {
      i128 n = static_cast<i128>(num_) * rhs.den_;
      i128 d = static_cast<i128>(den_) * rhs.num_;
      set_from_i128(n, d);
      return *this;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
  }

  Rational Rational::inverse() const {
    return Rational(1) / *this;
  }

  Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
  }

  bool operator==(Rational const& a, Rational const& b) {
    if (!a.big_ && !b.big_) {
      return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) {
      return false;
    }
    return *a.big_ == *b.big_;
  }

  std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
    if (!a.big_ && !b.big_) {
      i128 l = static_cast<i128>(a.num_) * b.den_;
      i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
  }

  std::ostream& operator<<(std::ostream& os, Rational const& r) {
    return os << r.to_string();
  }

  mpz_class gcd(mpz_class const& a, mpz_class const& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }

}  // namespace repcount
