#include "repcount/linalg.hpp"

#include <stdexcept>

namespace repcount {

  namespace {

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<size_t> rref(QMatrix& m) {
      std::vector<size_t> pivots;
      size_t const        rows = m.size();
      size_t const        cols = rows ? m[0].size() : 0;
      size_t              r    = 0;
      for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
          ++p;
        }
        if (p == rows) {
          continue;
        }
        std::swap(m[p], m[r]);
        Rational inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) {
          m[r][j] *= inv;
        }
        for (size_t i = 0; i < rows; ++i) {
          if (i == r || m[i][c].is_zero()) {
            continue;
          }
          Rational f = m[i][c];
          for (size_t j = c; j < cols; ++j) {
            if (!m[r][j].is_zero()) {
              m[i][j] -= f * m[r][j];
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      return pivots;
    }

  }  // namespace

  size_t rank(QMatrix m) {
    return rref(m).size();
  }

  std::vector<std::vector<Rational>> kernel(QMatrix const& m) {
    QMatrix      a    = m;
    size_t const cols = a.empty() ? 0 : a[0].size();
    auto         piv  = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : piv) {
      is_pivot[c] = true;
    }
    std::vector<std::vector<Rational>> out;
    for (size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> v(cols, Rational(0));
      v[free] = Rational(1);
      for (size_t r = 0; r < piv.size(); ++r) {
        v[piv[r]] = -a[r][free];
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  QMatrix multiply(QMatrix const& a, QMatrix const& b) {
    size_t const n = a.size();
    size_t const k = b.size();
    size_t const m = k ? b[0].size() : 0;
    QMatrix      c(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
      if (a[i].size() != k) {
        throw std::invalid_argument("multiply: shape mismatch");
      }
      for (size_t t = 0; t < k; ++t) {
        if (a[i][t].is_zero()) {
          continue;
        }
        for (size_t j = 0; j < m; ++j) {
          c[i][j] += a[i][t] * b[t][j];
        }
      }
    }
    return c;
  }

}  // namespace repcount
