#include "repcount/poly_matrix.hpp"

#include <stdexcept>

namespace repcount {

  PolyMatrix::PolyMatrix(size_t dim, MonomialOrder order)
      : dim_(dim), entries_(dim * dim, Polynomial(order)) {}

  PolyMatrix::PolyMatrix(size_t dim, std::vector<Polynomial> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
      throw std::invalid_argument("PolyMatrix: entry count does not match dimension");
    }
  }

  PolyMatrix PolyMatrix::identity(size_t dim, MonomialOrder order) {
    PolyMatrix m(dim, order);
    for (size_t i = 0; i < dim; ++i) {
      m(i, i) = Polynomial(Rational(1), order);
    }
    return m;
  }

  PolyMatrix PolyMatrix::constant(std::vector<std::vector<Rational>> const& rows,
                                  MonomialOrder                           order) {
    PolyMatrix m(rows.size(), order);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw std::invalid_argument("PolyMatrix::constant: rows must be square");
      }
      for (size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = Polynomial(rows[i][j], order);
      }
    }
    return m;
  }

  Polynomial PolyMatrix::trace() const {
    Polynomial t(dim_ ? entries_[0].order() : MonomialOrder::grevlex());
    for (size_t i = 0; i < dim_; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  bool PolyMatrix::is_zero() const noexcept {
    for (auto const& e : entries_) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  PolyMatrix& PolyMatrix::operator+=(PolyMatrix const& rhs) {
    if (rhs.dim_ != dim_) {
      throw std::invalid_argument("PolyMatrix: dimension mismatch");
    }
    for (size_t k = 0; k < entries_.size(); ++k) {
      entries_[k] += rhs.entries_[k];
    }
    return *this;
  }

  PolyMatrix& PolyMatrix::operator-=(PolyMatrix const& rhs) {
    if (rhs.dim_ != dim_) {
      throw std::invalid_argument("PolyMatrix: dimension mismatch");
    }
    for (size_t k = 0; k < entries_.size(); ++k) {
      entries_[k] -= rhs.entries_[k];
    }
    return *this;
  }

  PolyMatrix& PolyMatrix::operator*=(Rational const& c) {
    for (auto& e : entries_) {
      e *= c;
    }
    return *this;
  }

  PolyMatrix operator*(PolyMatrix const& a, PolyMatrix const& b) {
    if (a.dim_ != b.dim_) {
      throw std::invalid_argument("PolyMatrix: dimension mismatch");
    }
    size_t const n   = a.dim_;
    auto const   ord = n ? a.entries_[0].order() : MonomialOrder::grevlex();
    PolyMatrix   c(n, ord);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        Polynomial acc(ord);
        for (size_t k = 0; k < n; ++k) {
          if (!a(i, k).is_zero() && !b(k, j).is_zero()) {
            acc += a(i, k) * b(k, j);
          }
        }
        c(i, j) = std::move(acc);
      }
    }
    return c;
  }

  Polynomial trace_of_product(PolyMatrix const& a, PolyMatrix const& b) {
    if (a.dim() != b.dim()) {
      throw std::invalid_argument("trace_of_product: dimension mismatch");
    }
    Polynomial t(a.dim() ? a(0, 0).order() : MonomialOrder::grevlex());
    for (size_t i = 0; i < a.dim(); ++i) {
      for (size_t k = 0; k < a.dim(); ++k) {
        if (!a(i, k).is_zero() && !b(k, i).is_zero()) {
          t += a(i, k) * b(k, i);
        }
      }
    }
    return t;
  }

}  // namespace repcount
