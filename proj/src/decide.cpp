#include "repcount/decide.hpp"

#include <chrono>
#include <future>

#include "repcount/echelon.hpp"

namespace repcount {

  std::string Univariate::to_string() const {
    std::string out;
    for (size_t k = coeffs.size(); k-- > 0;) {
      Rational const& c = coeffs[k];
      if (c.is_zero()) {
        continue;
      }
      bool const neg = c.sign() < 0;
      Rational   mag = c.abs();
      if (out.empty()) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) {
        out += mag.to_string() + "*";
      }
      out += k == 1 ? "y" : "y^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  Polynomial evaluate_at(Univariate const& p, Polynomial const& value) {
    // Horner
    Polynomial acc(value.order());
    for (size_t k = p.coeffs.size(); k-- > 0;) {
      acc = acc * value + Polynomial(p.coeffs[k], value.order());
    }
    return acc;
  }

  namespace {

    Univariate monic_from_dependency(std::vector<Rational> const& lower) {
      // y^k - sum lower[i] y^i
      Univariate u;
      for (auto const& c : lower) {
        u.coeffs.push_back(-c);
      }
      u.coeffs.emplace_back(1);
      return u;
    }

  }  // namespace

  std::optional<Univariate> minimal_polynomial_by_powers(Polynomial const&    f,
                                                         GroebnerBasis const& j,
                                                         size_t               max_degree,
                                                         Budget const&        budget) {
    if (j.is_unit()) {
      return Univariate{{Rational(0), Rational(1)}};
    }
    auto const        ord  = j.order();
    Polynomial const  base = j.normal_form(f.in_order(ord), budget);
    PolynomialEchelon span;
    Polynomial        power(Rational(1), ord);
    for (size_t k = 0; k <= max_degree; ++k) {
      budget.check_time();
      if (auto coords = span.express(power)) {
        return monic_from_dependency(*coords);
      }
      span.add(power);
      power = j.normal_form(power * base, budget);
    }
    return std::nullopt;
  }

  std::optional<Univariate> minimal_polynomial_by_elimination(Polynomial const&    f,
                                                              GroebnerBasis const& j,
                                                              Budget const&        budget,
                                                              GroebnerStats*       stats) {
    if (j.is_unit()) {
      return Univariate{{Rational(0), Rational(1)}};
    }
    RingPtr const& ring = j.ring();
    size_t const   nv   = ring->size();
    VariableId     y    = VariableId::auxiliary("y");
    for (int k = 1; ring->index_of(y); ++k) {
      y = VariableId::auxiliary("y", k);
    }
    RingPtr                 ext = make_ring(ring->with_back({y}));
    auto const              ord = MonomialOrder::grevlex();
    std::vector<Polynomial> gens;
    for (auto const& g : j.elements()) {
      gens.push_back(g.in_order(ord));
    }
    gens.push_back(Polynomial::variable(nv, ord) - f.in_order(ord));
    std::vector<size_t> drop(nv);
    for (size_t i = 0; i < nv; ++i) {
      drop[i] = i;
    }
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), drop, budget, stats);
    if (elim.empty()) {
      return std::nullopt;
    }
    // a principal ideal of Q[y]; its reduced basis is one monic element
    Polynomial const* best = nullptr;
    for (auto const& g : elim.generators()) {
      if (!best || g.total_degree() < best->total_degree()) {
        best = &g;
      }
    }
    Polynomial const m = best->monic();
    Univariate       u;
    u.coeffs.assign(m.total_degree() + 1, Rational(0));
    for (auto const& t : m.terms()) {
      u.coeffs[t.monomial[nv]] = t.coeff;
    }
    return u;
  }

  std::optional<Univariate> minimal_polynomial(Polynomial const&    f,
                                               GroebnerBasis const& j,
                                               Budget const&        budget,
                                               GroebnerStats*       stats) {
    // Powers settle every low-degree case quickly; elimination is the
    // definitive route, including for transcendental f.
    constexpr size_t kPowerProbe = 12;
    if (auto m = minimal_polynomial_by_powers(f, j, kPowerProbe, budget)) {
      return m;
    }
    return minimal_polynomial_by_elimination(f, j, budget, stats);
  }

  bool is_algebraic(Polynomial const& f, GroebnerBasis const& j, Budget const& budget) {
    return minimal_polynomial(f, j, budget).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // J
  ////////////////////////////////////////////////////////////////////////

  JResult compute_J(Ideal const&                relb,
                    std::span<Polynomial const> s,
                    QuotientMode                mode,
                    MonomialOrder               order,
                    Budget const&               budget,
                    GroebnerStats*              stats) {
    RingPtr const& ring = relb.ring();
    auto const     grev = MonomialOrder::grevlex();
    JResult        out;
    auto           unit = [&] { return GroebnerBasis(ring, order, {Polynomial(Rational(1), order)}); };
    if (s.empty()) {
      out.basis = unit();
      return out;
    }
    GroebnerBasis g = buchberger(relb, grev, budget, stats);
    if (g.is_unit()) {
      out.basis = unit();
      return out;
    }

    // Keep g in S only when it enlarges I + <kept>.
    GroebnerBasis           acc = g;
    std::vector<Polynomial> acc_gens(g.elements());
    for (auto const& f : s) {
      budget.check_time();
      if (acc.contains(f)) {
        continue;
      }
      out.used.push_back(f);
      acc_gens.push_back(f);
      acc = buchberger(Ideal(ring, acc_gens), grev, budget, stats);
      acc_gens = acc.elements();
      if (acc.is_unit()) {
        break;
      }
    }
    if (out.used.empty()) {
      // S inside Rel(B): (I : I) = <1>
      out.basis = unit();
      return out;
    }

    Ideal result;
    if (mode == QuotientMode::saturate) {
      auto sat              = saturate(g.to_ideal(), out.used, budget, stats);
      out.saturation_steps  = sat.steps;
      result                = std::move(sat.ideal);
    } else {
      result               = ideal_quotient(g.to_ideal(), out.used, budget, stats);
      out.saturation_steps = 1;
    }
    out.basis = buchberger(result, order, budget, stats);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decision
  ////////////////////////////////////////////////////////////////////////

  char const* outcome_name(Outcome o) {
    switch (o) {
      case Outcome::finite:
        return "FINITE";
      case Outcome::infinite:
        return "INFINITE";
      case Outcome::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }

  namespace {

    class StageTimer {
     public:
      StageTimer(std::map<std::string, double>& sink, std::string name)
          : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
      ~StageTimer() {
        std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
        sink_[name_] += d.count();
      }

     private:
      std::map<std::string, double>&        sink_;
      std::string                           name_;
      std::chrono::steady_clock::time_point start_;
    };

  }  // namespace

  DecisionRun run_decision(DecisionInput const& input) {
    return run_decision(input, Budget(input.options.limits));
  }

  DecisionRun run_decision(DecisionInput const& input, Budget const& budget) {
    DecisionRun      run;
    Verdict&         v = run.verdict;
    DecisionMetrics& m = v.metrics;
    std::string     stage = "setup";

    if (input.n < 1) {
      throw std::invalid_argument("n must be at least 1");
    }
    int const s = static_cast<int>(input.presentation.generator_count());
    // two auxiliary variables are needed on top of the entries
    if (static_cast<size_t>(input.n) * input.n * s + 2 > kMaxVariables) {
      throw std::invalid_argument("n^2 * s must be at most " + std::to_string(kMaxVariables - 2));
    }

    try {
      stage = "genmat";
      {
        StageTimer t(v.timings_ms, "genmat");
        run.space      = build_generic_space(input.n, s);
        run.relations  = relations_ideal(input.presentation, run.space);
        run.generators = trace_generators(run.space);
      }
      m.variables           = run.space.ring->size();
      m.relation_generators = run.relations.size();
      m.trace_generators    = run.generators.size();

      stage = "irreducibility_set";
      if (input.n == 1) {
        // every 1-dimensional representation is irreducible
        run.s.polynomials = {Polynomial(Rational(1))};
        run.s.provenance  = {{}};
      } else {
        StageTimer t(v.timings_ms, "irreducibility_set");
        run.s = irreducibility_set(run.space, input.options.length_override, budget);
      }
      m.s_raw_tuples  = run.s.raw_tuples;
      m.s_evaluated   = run.s.evaluated;
      m.s_size        = run.s.polynomials.size();
      m.s_word_length = run.s.word_length;

      stage = "relations_gb";
      {
        StageTimer t(v.timings_ms, "relations_gb");
        run.relations_gb = buchberger(run.relations, input.options.base_order, budget, &m.groebner);
      }
      m.relation_gb_size = run.relations_gb->size();

      stage = "J";
      {
        StageTimer t(v.timings_ms, "J");
        run.j = compute_J(run.relations, run.s.polynomials, input.options.mode,
                          input.options.base_order, budget, &m.groebner);
      }
      m.s_used           = run.j->used.size();
      m.saturation_steps = run.j->saturation_steps;
      m.j_gb_size        = run.j->basis.size();
      m.j_max_degree     = run.j->basis.max_degree();

      stage = "algebraicity";
      StageTimer     t(v.timings_ms, "algebraicity");
      auto const&    j       = run.j->basis;
      unsigned const threads = std::max(1u, input.options.threads);
      size_t         next    = 0;
      while (next < run.generators.size()) {
        size_t const end = std::min(run.generators.size(), next + threads);
        std::vector<std::optional<Univariate>> results(end - next);
        std::vector<GroebnerStats>             local(end - next);
        if (end - next == 1) {
          results[0] = minimal_polynomial(run.generators[next].value, j, budget, &local[0]);
        } else {
          std::vector<std::future<std::optional<Univariate>>> futures;
          for (size_t k = next; k < end; ++k) {
            futures.push_back(std::async(std::launch::async, [&, k] {
              return minimal_polynomial(run.generators[k].value, j, budget, &local[k - next]);
            }));
          }
          for (size_t k = 0; k < futures.size(); ++k) {
            results[k] = futures[k].get();
          }
        }
        // aggregate in generator order regardless of completion order
        for (size_t k = 0; k < results.size(); ++k) {
          m.groebner.merge(local[k]);
          if (!results[k]) {
            v.outcome = Outcome::infinite;
            v.witness = run.generators[next + k].word;
            return run;
          }
          v.minimal_polynomials.push_back({run.generators[next + k].word, *results[k]});
        }
        next = end;
      }
      v.outcome = Outcome::finite;
    } catch (ResourceLimitExceeded const& e) {
      v.outcome = Outcome::inconclusive;
      v.limit   = e.kind_name();
      v.stage   = stage;
      v.minimal_polynomials.clear();
    }
    return run;
  }

  Verdict decide_finiteness(DecisionInput const& input) {
    return run_decision(input).verdict;
  }

}  // namespace repcount
