#pragma once

#include <span>
#include <vector>

#include "repcount/polynomial.hpp"

namespace repcount {

  // Square matrix with polynomial entries, row-major.
  class PolyMatrix {
   public:
    PolyMatrix() = default;
    explicit PolyMatrix(size_t dim, MonomialOrder order = MonomialOrder::grevlex());
    PolyMatrix(size_t dim, std::vector<Polynomial> entries);

    static PolyMatrix identity(size_t dim, MonomialOrder order = MonomialOrder::grevlex());
    // Constant matrix from rational rows.
    static PolyMatrix constant(std::vector<std::vector<Rational>> const& rows,
                               MonomialOrder order = MonomialOrder::grevlex());

    [[nodiscard]] size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Polynomial const& operator()(size_t i, size_t j) const {
      return entries_[i * dim_ + j];
    }
    Polynomial& operator()(size_t i, size_t j) { return entries_[i * dim_ + j]; }
    [[nodiscard]] std::vector<Polynomial> const& entries() const noexcept {
      return entries_;
    }

    [[nodiscard]] Polynomial trace() const;
    [[nodiscard]] bool is_zero() const noexcept;

    PolyMatrix& operator+=(PolyMatrix const& rhs);
    PolyMatrix& operator-=(PolyMatrix const& rhs);
    PolyMatrix& operator*=(Rational const& c);

    friend PolyMatrix operator+(PolyMatrix a, PolyMatrix const& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, PolyMatrix const& b) { return a -= b; }
    friend PolyMatrix operator*(PolyMatrix const& a, PolyMatrix const& b);
    friend PolyMatrix operator*(Rational const& c, PolyMatrix a) { return a *= c; }

    friend bool operator==(PolyMatrix const& a, PolyMatrix const& b) {
      return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

   private:
    size_t                  dim_ = 0;
    std::vector<Polynomial> entries_;
  };

  // Trace of a product without forming the full last factor.
  Polynomial trace_of_product(PolyMatrix const& a, PolyMatrix const& b);

}  // namespace repcount
