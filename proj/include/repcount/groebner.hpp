#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "repcount/budget.hpp"
#include "repcount/polynomial.hpp"
#include "repcount/ring.hpp"

namespace repcount {

  // Finite generating set over a ring; zero generators are dropped, so the
  // zero ideal has no generators.
  class Ideal {
   public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal unit(RingPtr ring);

    [[nodiscard]] RingPtr const& ring() const noexcept { return ring_; }
    [[nodiscard]] std::vector<Polynomial> const& generators() const noexcept {
      return gens_;
    }
    [[nodiscard]] bool empty() const noexcept { return gens_.empty(); }
    [[nodiscard]] size_t size() const noexcept { return gens_.size(); }

   private:
    RingPtr                 ring_;
    std::vector<Polynomial> gens_;
  };

  struct GroebnerStats {
    size_t   runs            = 0;
    size_t   pairs_created   = 0;
    size_t   pairs_reduced   = 0;
    size_t   zero_reductions = 0;
    size_t   largest_basis   = 0;
    unsigned max_degree      = 0;

    void merge(GroebnerStats const& other);
  };

  // Reduced Groebner basis: monic elements sorted by increasing leading
  // monomial, no term of any element divisible by another's leading
  // monomial.
  class GroebnerBasis {
   public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> reduced);
    GroebnerBasis(GroebnerBasis const& other);
    GroebnerBasis(GroebnerBasis&& other) noexcept = default;
    GroebnerBasis& operator=(GroebnerBasis const& other);
    GroebnerBasis& operator=(GroebnerBasis&& other) noexcept = default;

    [[nodiscard]] RingPtr const& ring() const noexcept { return ring_; }
    [[nodiscard]] MonomialOrder order() const noexcept { return order_; }
    [[nodiscard]] std::vector<Polynomial> const& elements() const noexcept {
      return elems_;
    }
    [[nodiscard]] size_t size() const noexcept { return elems_.size(); }
    [[nodiscard]] bool is_unit() const noexcept;
    [[nodiscard]] bool is_zero_ideal() const noexcept { return elems_.empty(); }
    [[nodiscard]] unsigned max_degree() const noexcept;

    [[nodiscard]] Polynomial normal_form(Polynomial const& f,
                                         Budget const& budget = Budget::unlimited()) const;
    [[nodiscard]] bool contains(Polynomial const& f) const;
    [[nodiscard]] Ideal to_ideal() const { return Ideal(ring_, elems_); }

    // Header lines naming the order and variable ranking, then one element
    // per line.
    void dump(std::ostream& os) const;

    friend bool operator==(GroebnerBasis const& a, GroebnerBasis const& b) {
      return a.order_ == b.order_ && a.elems_ == b.elems_;
    }

   private:
    void rebuild_divisors();

    RingPtr                 ring_;
    MonomialOrder           order_ = MonomialOrder::grevlex();
    std::vector<Polynomial> elems_;
    DivisorSet              divisors_;
  };

  // Buchberger's algorithm with the Gebauer-Moeller criteria and sugar-degree
  // pair selection. Throws ResourceLimitExceeded when the budget runs out.
  GroebnerBasis buchberger(Ideal const&   ideal,
                           MonomialOrder  order,
                           Budget const&  budget = Budget::unlimited(),
                           GroebnerStats* stats  = nullptr);

  bool contains(GroebnerBasis const& basis, Polynomial const& f);

  // Generators of I intersected with the subring in the retained variables
  // (block order with the dropped variables ranked first).
  Ideal eliminate(Ideal const&            ideal,
                  std::span<size_t const> drop,
                  Budget const&           budget = Budget::unlimited(),
                  GroebnerStats*          stats  = nullptr);

  // I cap K via eliminating w from w*I + (1 - w)*K.
  Ideal intersect(Ideal const&   a,
                  Ideal const&   b,
                  Budget const&  budget = Budget::unlimited(),
                  GroebnerStats* stats  = nullptr);

  // (I : f) = (I cap <f>) / f. Requires f != 0.
  Ideal ideal_quotient(Ideal const&      ideal,
                       Polynomial const& f,
                       Budget const&     budget = Budget::unlimited(),
                       GroebnerStats*    stats  = nullptr);

  // (I : <S>) = intersection over g in S of (I : g). Requires S nonempty.
  Ideal ideal_quotient(Ideal const&                ideal,
                       std::span<Polynomial const> s,
                       Budget const&               budget = Budget::unlimited(),
                       GroebnerStats*              stats  = nullptr);

  struct SaturationResult {
    Ideal  ideal;
    // Number of quotient steps performed, including the final one that
    // confirmed stabilization.
    size_t steps = 0;
  };

  // (I : <S>^inf): K <- (K : <S>) from K = I until the reduced basis is
  // stable. Requires S nonempty with nonzero members.
  SaturationResult saturate(Ideal const&                ideal,
                            std::span<Polynomial const> s,
                            Budget const&               budget = Budget::unlimited(),
                            GroebnerStats*              stats  = nullptr);

  // Equality of ideals via reduced grevlex bases.
  bool same_ideal(Ideal const& a, Ideal const& b, Budget const& budget = Budget::unlimited());

}  // namespace repcount
