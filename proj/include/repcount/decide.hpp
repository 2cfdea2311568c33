#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repcount/genmat.hpp"
#include "repcount/groebner.hpp"
#include "repcount/presentation.hpp"

namespace repcount {

  enum class QuotientMode { saturate, single };

  struct DecisionOptions {
    QuotientMode            mode       = QuotientMode::saturate;
    ResourceLimits          limits     = {};
    // Order for Rel(B) and J; elimination steps always use block orders.
    MonomialOrder           base_order = MonomialOrder::grevlex();
    std::optional<unsigned> length_override;
    unsigned                threads    = 1;
  };

  struct DecisionInput {
    Presentation    presentation;
    int             n = 1;
    DecisionOptions options;
  };

  // Univariate polynomial in y, coefficients from degree 0 up.
  struct Univariate {
    std::vector<Rational> coeffs;

    [[nodiscard]] size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(Univariate const&, Univariate const&) = default;
  };

  // Monic generator of (J + <y - f>) cap Q[y], or nullopt when f is
  // transcendental modulo J. J = <1> gives y.
  std::optional<Univariate> minimal_polynomial(Polynomial const&    f,
                                               GroebnerBasis const& j,
                                               Budget const&        budget = Budget::unlimited(),
                                               GroebnerStats*       stats  = nullptr);

  // Same question answered by elimination alone.
  std::optional<Univariate> minimal_polynomial_by_elimination(
      Polynomial const&    f,
      GroebnerBasis const& j,
      Budget const&        budget = Budget::unlimited(),
      GroebnerStats*       stats  = nullptr);

  // Linear dependency among the normal forms of 1, f, f^2, ... up to
  // max_degree; nullopt when none is found that far.
  std::optional<Univariate> minimal_polynomial_by_powers(Polynomial const&    f,
                                                         GroebnerBasis const& j,
                                                         size_t               max_degree,
                                                         Budget const& budget = Budget::unlimited());

  bool is_algebraic(Polynomial const& f, GroebnerBasis const& j,
                    Budget const& budget = Budget::unlimited());

  // f(value) computed in B; used to certify a minimal polynomial.
  Polynomial evaluate_at(Univariate const& p, Polynomial const& value);

  struct JResult {
    GroebnerBasis           basis;
    // Members of S actually used: I + <used> = I + <S>.
    std::vector<Polynomial> used;
    size_t                  saturation_steps = 0;
  };

  // Reduced basis of (Rel(B) : <S>^inf), or (Rel(B) : <S>) in single mode.
  // S is first thinned to a subset generating the same ideal together with
  // Rel(B), which leaves both quotients unchanged. Empty S gives <1>.
  JResult compute_J(Ideal const&                relb,
                    std::span<Polynomial const> s,
                    QuotientMode                mode,
                    MonomialOrder               order  = MonomialOrder::grevlex(),
                    Budget const&               budget = Budget::unlimited(),
                    GroebnerStats*              stats  = nullptr);

  enum class Outcome { finite, infinite, inconclusive };
  char const* outcome_name(Outcome o);

  struct MinimalPolynomialRecord {
    CyclicWord word;
    Univariate polynomial;
  };

  struct DecisionMetrics {
    size_t        variables          = 0;
    size_t        relation_generators = 0;
    size_t        relation_gb_size   = 0;
    double        s_raw_tuples       = 0;
    size_t        s_evaluated        = 0;
    size_t        s_size             = 0;
    size_t        s_used             = 0;
    unsigned      s_word_length      = 0;
    size_t        trace_generators   = 0;
    size_t        j_gb_size          = 0;
    unsigned      j_max_degree       = 0;
    size_t        saturation_steps   = 0;
    GroebnerStats groebner;
  };

  struct Verdict {
    Outcome                              outcome = Outcome::inconclusive;
    std::optional<CyclicWord>            witness;
    std::vector<MinimalPolynomialRecord> minimal_polynomials;
    // For inconclusive runs: which limit ran out, and where.
    std::string                          limit;
    std::string                          stage;
    DecisionMetrics                      metrics;
    std::map<std::string, double>        timings_ms;
  };

  // Everything the pipeline built on the way to the verdict; later stages
  // are empty when an earlier one ran out of resources.
  struct DecisionRun {
    GenericMatrixSpace           space;
    Ideal                        relations;
    std::optional<GroebnerBasis> relations_gb;
    IrreducibilitySet            s;
    std::optional<JResult>       j;
    std::vector<TraceGenerator>  generators;
    Verdict                      verdict;
  };

  DecisionRun run_decision(DecisionInput const& input);
  // Shares a budget with later stages.
  DecisionRun run_decision(DecisionInput const& input, Budget const& budget);
  Verdict     decide_finiteness(DecisionInput const& input);

}  // namespace repcount
