#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "repcount/polynomial.hpp"

namespace repcount {

  // Incremental row reduction over polynomials viewed as coefficient
  // vectors. Keeps one row per leading monomial, each row remembering its
  // coordinates over the elements added so far.
  class PolynomialEchelon {
   public:
    // Coordinates of p over the added elements, or nullopt when p is not in
    // their span.
    [[nodiscard]] std::optional<std::vector<Rational>> express(Polynomial const& p) const;

    // Adds p when independent; returns whether it was added.
    bool add(Polynomial const& p);

    [[nodiscard]] size_t size() const noexcept { return count_; }

   private:
    struct Row {
      Polynomial            value;
      std::vector<Rational> coords;
    };

    // remainder and the coordinates of p - remainder
    std::pair<Polynomial, std::vector<Rational>> reduce(Polynomial const& p) const;

    std::vector<Row>                                   rows_;
    std::unordered_map<Monomial, size_t, MonomialHash> by_lead_;
    size_t                                             count_ = 0;
  };

}  // namespace repcount
