#include "repcount/monomial.hpp"

#include <algorithm>
#include <cstddef>

namespace repcount {

  Monomial Monomial::variable(size_t index, unsigned power) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  void Monomial::set(size_t index, unsigned power) {
    if (index >= kMaxVariables) {
      throw std::out_of_range("variable index " + std::to_string(index)
                              + " exceeds the supported "
                              + std::to_string(kMaxVariables) + " variables");
    }
    unsigned new_degree = degree_ - exp_[index] + power;
    if (power > kMaxExponent || new_degree > kMaxExponent) {
      throw std::overflow_error("monomial degree exceeds "
                                + std::to_string(kMaxExponent));
    }
    exp_[index] = static_cast<uint8_t>(power);
    degree_     = new_degree;
  }

  Monomial Monomial::lcm(Monomial const& other) const noexcept {
    Monomial r;
    k().lcm(exp_.data(), other.exp_.data(), r.exp_.data());
    // degree of the lcm is bounded by the sum of the degrees
    r.degree_ = k().prefix_sum(r.exp_.data(), kMaxVariables);
    return r;
  }

  Monomial Monomial::quotient_of(Monomial const& other) const noexcept {
    Monomial r;
    k().sub(other.exp_.data(), exp_.data(), r.exp_.data());
    r.degree_ = other.degree_ - degree_;
    return r;
  }

  size_t Monomial::hash() const noexcept {
    uint64_t words[kMaxVariables / 8];
    std::memcpy(words, exp_.data(), kMaxVariables);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint64_t w : words) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<size_t>(h);
  }

  void Monomial::multiply_batch(Monomial const* src,
                                ptrdiff_t          src_stride,
                                size_t          count,
                                Monomial const& m,
                                Monomial*       dst,
                                ptrdiff_t          dst_stride) {
    static_assert(offsetof(Monomial, exp_) == 0);
    auto const* s = reinterpret_cast<uint8_t const*>(src);
    auto*       d = reinterpret_cast<uint8_t*>(dst);
    unsigned    max_degree = 0;
    for (size_t i = 0; i < count; ++i) {
      auto const* mono = reinterpret_cast<Monomial const*>(s + static_cast<ptrdiff_t>(i) * src_stride);
      max_degree       = std::max(max_degree, mono->degree_);
    }
    if (max_degree + m.degree_ > kMaxExponent) {
      throw std::overflow_error("monomial degree exceeds "
                                + std::to_string(kMaxExponent));
    }
    k().add_batch(s, src_stride, count, m.exp_.data(), d, dst_stride);
    for (size_t i = 0; i < count; ++i) {
      auto const* in  = reinterpret_cast<Monomial const*>(s + static_cast<ptrdiff_t>(i) * src_stride);
      auto*       out = reinterpret_cast<Monomial*>(d + static_cast<ptrdiff_t>(i) * dst_stride);
      out->degree_    = in->degree_ + m.degree_;
    }
  }

  size_t Monomial::support_end() const noexcept {
    for (size_t i = kMaxVariables; i-- > 0;) {
      if (exp_[i] != 0) {
        return i + 1;
      }
    }
    return 0;
  }

  int MonomialOrder::compare(Monomial const& a,
                             Monomial const& b) const noexcept {
    switch (scheme) {
      case Scheme::lex: {
        int d = a.first_diff(b);
        if (d < 0) {
          return 0;
        }
        return a[d] > b[d] ? 1 : -1;
      }
      case Scheme::grevlex: {
        if (a.degree() != b.degree()) {
          return a.degree() > b.degree() ? 1 : -1;
        }
        int d = a.last_diff(b);
        if (d < 0) {
          return 0;
        }
        return a[d] < b[d] ? 1 : -1;
      }
      case Scheme::block: {
        if (inner == Scheme::lex) {
          int d = a.first_diff(b);
          if (d < 0) {
            return 0;
          }
          return a[d] > b[d] ? 1 : -1;
        }
        int f = a.first_diff(b);
        if (f < 0) {
          return 0;
        }
        uint32_t da = a.prefix_degree(block);
        uint32_t db = b.prefix_degree(block);
        if (da != db) {
          return da > db ? 1 : -1;
        }
        if (static_cast<size_t>(f) < block) {
          for (size_t i = block; i-- > 0;) {
            if (a[i] != b[i]) {
              return a[i] < b[i] ? 1 : -1;
            }
          }
        }
        uint32_t ra = a.degree() - da;
        uint32_t rb = b.degree() - db;
        if (ra != rb) {
          return ra > rb ? 1 : -1;
        }
        int d = a.last_diff(b);
        return a[d] < b[d] ? 1 : -1;
      }
    }
    return 0;
  }

  std::string MonomialOrder::name() const {
    switch (scheme) {
      case Scheme::lex:
        return "lex";
      case Scheme::grevlex:
        return "grevlex";
      case Scheme::block:
        return "block(" + std::to_string(block) + ","
               + (inner == Scheme::lex ? "lex" : "grevlex") + ")";
    }
    return "?";
  }

}  // namespace repcount
