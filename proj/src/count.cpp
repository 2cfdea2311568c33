#include "repcount/count.hpp"

#include <chrono>
#include <ostream>

#include "repcount/echelon.hpp"

namespace repcount {

  FiniteDimAlgebra build_quotient_basis(std::span<Polynomial const> generators,
                                        GroebnerBasis const&        j,
                                        Budget const&               budget) {
    FiniteDimAlgebra d;
    d.ring = j.ring();
    if (j.is_unit()) {
      return d;
    }
    auto const              ord = j.order();
    std::vector<Polynomial> gens;
    for (auto const& g : generators) {
      Polynomial nf = j.normal_form(g.in_order(ord), budget);
      if (!nf.is_constant()) {
        gens.push_back(std::move(nf));
      }
    }

    PolynomialEchelon span;
    d.basis.push_back(Polynomial(Rational(1), ord));
    span.add(d.basis[0]);
    for (size_t next = 0; next < d.basis.size(); ++next) {
      for (auto const& g : gens) {
        budget.check_time();
        Polynomial p = j.normal_form(d.basis[next] * g, budget);
        if (span.add(p)) {
          d.basis.push_back(std::move(p));
          budget.check_basis_size(d.basis.size());
        }
      }
    }

    size_t const m = d.basis.size();
    d.structure.assign(m, std::vector<std::vector<Rational>>(m));
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = a; b < m; ++b) {
        budget.check_time();
        Polynomial p      = j.normal_form(d.basis[a] * d.basis[b], budget);
        auto       coords = span.express(p);
        if (!coords) {
          throw std::logic_error("build_quotient_basis: product left the closure");
        }
        d.structure[a][b] = *coords;
        d.structure[b][a] = std::move(*coords);
      }
    }
    return d;
  }

  QMatrix multiplication_matrix(FiniteDimAlgebra const& d, size_t index) {
    size_t const m = d.dim();
    if (index >= m) {
      throw std::out_of_range("multiplication_matrix: index out of range");
    }
    QMatrix l(m, std::vector<Rational>(m, Rational(0)));
    for (size_t c = 0; c < m; ++c) {
      for (size_t r = 0; r < m; ++r) {
        l[r][c] = d.structure[index][c][r];
      }
    }
    return l;
  }

  TraceFormReport trace_form_rank(FiniteDimAlgebra const& d) {
    size_t const          m = d.dim();
    std::vector<Rational> tr(m, Rational(0));
    for (size_t k = 0; k < m; ++k) {
      for (size_t c = 0; c < m; ++c) {
        tr[k] += d.structure[k][c][c];
      }
    }
    TraceFormReport r;
    r.gram.assign(m, std::vector<Rational>(m, Rational(0)));
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        for (size_t k = 0; k < m; ++k) {
          if (!d.structure[a][b][k].is_zero()) {
            r.gram[a][b] += d.structure[a][b][k] * tr[k];
          }
        }
      }
    }
    r.rank  = rank(r.gram);
    r.count = r.rank;
    return r;
  }

  void dump_algebra(std::ostream& os, FiniteDimAlgebra const& d, TraceFormReport const& r) {
    size_t const m = d.dim();
    os << "# basis: " << m << "\n";
    for (size_t i = 0; i < m; ++i) {
      os << "e" << i << " = " << (d.ring ? to_string(d.basis[i], *d.ring) : "?") << "\n";
    }
    os << "# structure constants: e_i*e_j = sum_k c_k e_k (i <= j, nonzero only)\n";
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i; j < m; ++j) {
        os << "e" << i << "*e" << j << " =";
        bool any = false;
        for (size_t k = 0; k < m; ++k) {
          Rational const& c = d.structure[i][j][k];
          if (!c.is_zero()) {
            os << " " << (any && c.sign() > 0 ? "+" : "") << c.to_string() << "*e" << k;
            any = true;
          }
        }
        os << (any ? "" : " 0") << "\n";
      }
    }
    os << "# gram (rank " << r.rank << ")\n";
    for (auto const& row : r.gram) {
      for (size_t j = 0; j < row.size(); ++j) {
        os << (j ? " " : "") << row[j].to_string();
      }
      os << "\n";
    }
  }

  InfiniteVerdictError::InfiniteVerdictError(CyclicWord witness)
      : std::runtime_error("infinitely many classes (witness: tr(" + witness.to_string() + "))"),
        witness_(std::move(witness)) {}

  CountRun run_count(DecisionInput const& input) {
    Budget const budget(input.options.limits);
    CountRun     out;
    out.decision = run_decision(input, budget);
    Verdict& v   = out.decision.verdict;
    if (v.outcome != Outcome::finite) {
      return out;
    }
    auto const start = std::chrono::steady_clock::now();
    try {
      std::vector<Polynomial> gens;
      for (size_t k = 0; k < out.decision.generators.size(); ++k) {
        // constants modulo J generate nothing new
        if (v.minimal_polynomials[k].polynomial.degree() > 1) {
          gens.push_back(out.decision.generators[k].value);
        }
      }
      out.algebra = build_quotient_basis(gens, out.decision.j->basis, budget);
      out.report  = trace_form_rank(*out.algebra);
      out.count   = out.report->count;
    } catch (ResourceLimitExceeded const& e) {
      v.outcome = Outcome::inconclusive;
      v.limit   = e.kind_name();
      v.stage   = "count";
      out.algebra.reset();
      out.report.reset();
    }
    std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
    v.timings_ms["count"] += d.count();
    return out;
  }

  size_t count_classes(DecisionInput const& input) {
    CountRun run = run_count(input);
    Verdict& v   = run.decision.verdict;
    switch (v.outcome) {
      case Outcome::infinite:
        throw InfiniteVerdictError(*v.witness);
      case Outcome::inconclusive: {
        auto kind = v.limit == "time"     ? ResourceLimitExceeded::Kind::time
                    : v.limit == "degree" ? ResourceLimitExceeded::Kind::degree
                                          : ResourceLimitExceeded::Kind::basis_size;
        throw ResourceLimitExceeded(kind, "resource limit (" + v.limit + ") hit during "
                                              + v.stage);
      }
      case Outcome::finite:
        break;
    }
    return *run.count;
  }

}  // namespace repcount
