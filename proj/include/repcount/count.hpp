#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "repcount/decide.hpp"
#include "repcount/linalg.hpp"

namespace repcount {

  // Subalgebra of B/J generated by the trace generators, as normal forms.
  struct FiniteDimAlgebra {
    RingPtr                 ring;
    std::vector<Polynomial> basis;  // basis[0] = 1 unless dim = 0
    // structure[i][j][k]: coefficient of basis[k] in basis[i] * basis[j]
    std::vector<std::vector<std::vector<Rational>>> structure;

    [[nodiscard]] size_t dim() const noexcept { return basis.size(); }
  };

  // Breadth-first closure of {1} under multiplication by the generators,
  // modulo J. Generators constant modulo J are skipped. Requires every
  // generator to be algebraic modulo J, otherwise the budget runs out.
  FiniteDimAlgebra build_quotient_basis(std::span<Polynomial const> generators,
                                        GroebnerBasis const&        j,
                                        Budget const&               budget = Budget::unlimited());

  // Left multiplication by basis[index]; column c is the image of basis[c].
  QMatrix multiplication_matrix(FiniteDimAlgebra const& d, size_t index);

  struct TraceFormReport {
    QMatrix gram;
    size_t  rank  = 0;
    size_t  count = 0;
  };

  // gram(i, j) = trace of multiplication by basis[i] * basis[j]. Its radical
  // is the nilradical, so the rank counts points over the closure.
  TraceFormReport trace_form_rank(FiniteDimAlgebra const& d);

  // Human-readable basis, structure constants and Gram matrix.
  void dump_algebra(std::ostream& os, FiniteDimAlgebra const& d, TraceFormReport const& r);

  class InfiniteVerdictError : public std::runtime_error {
   public:
    explicit InfiniteVerdictError(CyclicWord witness);
    [[nodiscard]] CyclicWord const& witness() const noexcept { return witness_; }

   private:
    CyclicWord witness_;
  };

  struct CountRun {
    DecisionRun                     decision;
    std::optional<FiniteDimAlgebra> algebra;
    std::optional<TraceFormReport>  report;
    // Set only for a finite verdict that completed.
    std::optional<size_t>           count;
  };

  // Full pipeline; never throws for resource exhaustion (the verdict is
  // downgraded to inconclusive instead).
  CountRun run_count(DecisionInput const& input);

  // The number of equivalence classes of n-dimensional irreducible
  // representations over the closure. Throws InfiniteVerdictError or
  // ResourceLimitExceeded.
  size_t count_classes(DecisionInput const& input);

}  // namespace repcount
