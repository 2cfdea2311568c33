#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "repcount/budget.hpp"
#include "repcount/monomial.hpp"
#include "repcount/rational.hpp"
#include "repcount/ring.hpp"

namespace repcount {

  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  // Sparse multivariate polynomial with rational coefficients. Terms are
  // kept strictly decreasing with respect to the polynomial's own monomial
  // order, with no zero coefficients; the order travels with the value so
  // that leading terms are O(1). Equality is order-independent.
  class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(MonomialOrder order) : order_(order) {}
    Polynomial(Rational const& c, MonomialOrder order = MonomialOrder::grevlex());

    static Polynomial variable(size_t index,
                               MonomialOrder order = MonomialOrder::grevlex());
    static Polynomial monomial(Monomial const& m,
                               Rational const& c = Rational(1),
                               MonomialOrder order = MonomialOrder::grevlex());
    // Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms, MonomialOrder order);
    // Caller guarantees the class invariant.
    static Polynomial from_sorted(std::vector<Term> terms, MonomialOrder order);

    [[nodiscard]] MonomialOrder order() const noexcept { return order_; }
    [[nodiscard]] std::vector<Term> const& terms() const noexcept {
      return terms_;
    }
    [[nodiscard]] size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept {
      return terms_.empty()
             || (terms_.size() == 1 && terms_[0].monomial.is_one());
    }
    [[nodiscard]] unsigned total_degree() const noexcept;

    // Leading term under the polynomial's own order. Requires nonzero.
    [[nodiscard]] Term const& leading() const { return terms_.front(); }
    [[nodiscard]] Monomial const& lm() const { return terms_.front().monomial; }
    [[nodiscard]] Rational const& lc() const { return terms_.front().coeff; }

    [[nodiscard]] Polynomial in_order(MonomialOrder order) const;

    [[nodiscard]] bool uses_variable(size_t index) const noexcept;
    // Coefficient of m, zero when absent.
    [[nodiscard]] Rational coefficient(Monomial const& m) const;
    [[nodiscard]] Rational evaluate(std::span<Rational const> point) const;

    Polynomial& operator+=(Polynomial const& rhs);
    Polynomial& operator-=(Polynomial const& rhs);
    Polynomial& operator*=(Polynomial const& rhs);
    Polynomial& operator*=(Rational const& c);

    friend Polynomial operator+(Polynomial lhs, Polynomial const& rhs) {
      return lhs += rhs;
    }
    friend Polynomial operator-(Polynomial lhs, Polynomial const& rhs) {
      return lhs -= rhs;
    }
    friend Polynomial operator*(Polynomial const& lhs, Polynomial const& rhs);
    friend Polynomial operator*(Polynomial lhs, Rational const& c) {
      return lhs *= c;
    }
    friend Polynomial operator*(Rational const& c, Polynomial rhs) {
      return rhs *= c;
    }
    Polynomial operator-() const;

    [[nodiscard]] Polynomial mul_term(Monomial const& m, Rational const& c) const;

    // Scaled to coprime integer coefficients with positive leading
    // coefficient. Zero stays zero.
    [[nodiscard]] Polynomial primitive() const;
    // Scaled so the leading coefficient is 1.
    [[nodiscard]] Polynomial monic() const;
    // Multiplied by -1 if the leading coefficient is negative.
    [[nodiscard]] Polynomial sign_normalized() const;

    [[nodiscard]] size_t hash() const;

    friend bool operator==(Polynomial const& a, Polynomial const& b);

   private:
    MonomialOrder     order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
  };

  struct PolynomialHash {
    size_t operator()(Polynomial const& p) const { return p.hash(); }
  };

  // Order-maximal term of f under ord; throws std::domain_error for f = 0.
  Term leading_term(Polynomial const& f, MonomialOrder ord);

  // Leading monomials of a fixed divisor list, packed for the kernels.
  class DivisorSet {
   public:
    DivisorSet() = default;
    explicit DivisorSet(MonomialOrder order) : order_(order) {}

    void add(Polynomial const* p);
    void clear();
    [[nodiscard]] size_t size() const noexcept { return polys_.size(); }
    [[nodiscard]] MonomialOrder order() const noexcept { return order_; }
    // Index of the first divisor whose leading monomial divides m, or size().
    [[nodiscard]] size_t find(Monomial const& m) const;
    [[nodiscard]] Polynomial const& operator[](size_t i) const {
      return *polys_[i];
    }

   private:
    MonomialOrder                  order_ = MonomialOrder::grevlex();
    std::vector<Monomial>          leads_;
    std::vector<Polynomial const*> polys_;
  };

  // Full multivariate division. The largest reducible term is always reduced
  // by the first divisor whose leading monomial divides it; the result has
  // no term divisible by any divisor leading monomial. Polynomials in the
  // divisor set must use the set's order.
  Polynomial normal_form(Polynomial const& f,
                         DivisorSet const& divisors,
                         Budget const&     budget = Budget::unlimited());

  Polynomial reduce(Polynomial const&           f,
                    std::span<Polynomial const> divisors,
                    MonomialOrder               ord,
                    Budget const&               budget = Budget::unlimited());

  // (lcm/LT(f)) f - (lcm/LT(g)) g with leading terms taken under ord.
  Polynomial s_polynomial(Polynomial const& f,
                          Polynomial const& g,
                          MonomialOrder     ord);

  // f / g when g divides f exactly, otherwise nullopt. g nonzero.
  std::optional<Polynomial> divide_exact(Polynomial const& f,
                                         Polynomial const& g);

  // Moves variable i to position new_position[i]; positions past the span
  // keep their index. Result uses ord.
  Polynomial remap_variables(Polynomial const&      f,
                             std::span<size_t const> new_position,
                             MonomialOrder           ord);

  // Inverse of to_string: sums of [rational][*]var[^k](*var[^k])* terms over
  // the ring's variable names. Throws std::invalid_argument on bad input.
  Polynomial parse_polynomial(std::string_view text,
                              Ring const&      ring,
                              MonomialOrder    ord = MonomialOrder::grevlex());

  std::string to_string(Monomial const& m, Ring const& ring);
  std::string to_string(Polynomial const& f, Ring const& ring);

}  // namespace repcount
