#pragma once

#include <vector>

#include "repcount/rational.hpp"

namespace repcount {

  using QMatrix = std::vector<std::vector<Rational>>;

  // Exact rank by Gaussian elimination.
  size_t rank(QMatrix m);

  // Basis of {v : m v = 0}.
  std::vector<std::vector<Rational>> kernel(QMatrix const& m);

  QMatrix multiply(QMatrix const& a, QMatrix const& b);

}  // namespace repcount
