#include "repcount/echelon.hpp"

namespace repcount {

  std::pair<Polynomial, std::vector<Rational>> PolynomialEchelon::reduce(Polynomial const& p) const {
    std::vector<Rational> coords(count_, Rational(0));
    Polynomial            r = p;
    Polynomial            rest(p.order());
    // peel leading terms; ones without a matching row stay in the remainder
    while (!r.is_zero()) {
      auto it = by_lead_.find(r.lm());
      if (it == by_lead_.end()) {
        rest += Polynomial::monomial(r.lm(), r.lc(), p.order());
        r -= Polynomial::monomial(r.lm(), r.lc(), p.order());
        continue;
      }
      Row const& row = rows_[it->second];
      Rational   c   = r.lc() / row.value.lc();
      r -= row.value * c;
      for (size_t i = 0; i < row.coords.size(); ++i) {
        if (!row.coords[i].is_zero()) {
          coords[i] += c * row.coords[i];
        }
      }
    }
    return {std::move(rest), std::move(coords)};
  }

  std::optional<std::vector<Rational>> PolynomialEchelon::express(Polynomial const& p) const {
    auto [rest, coords] = reduce(p);
    if (!rest.is_zero()) {
      return std::nullopt;
    }
    return std::move(coords);
  }

  bool PolynomialEchelon::add(Polynomial const& p) {
    auto [rest, coords] = reduce(p);
    if (rest.is_zero()) {
      return false;
    }
    // rest = e_new - sum coords
    for (auto& c : coords) {
      c = -c;
    }
    coords.emplace_back(1);
    ++count_;
    for (auto& row : rows_) {
      row.coords.resize(count_, Rational(0));
    }
    by_lead_.emplace(rest.lm(), rows_.size());
    rows_.push_back({std::move(rest), std::move(coords)});
    return true;
  }

}  // namespace repcount
