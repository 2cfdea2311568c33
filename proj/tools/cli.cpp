#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "repcount/count.hpp"

namespace repcount::cli {

  namespace {
    using json = nlohmann::ordered_json;

    constexpr char const* kFooter =
        "Counts are taken over the algebraic closure of Q: X^2 + 1 at n = 1 has two\n"
        "classes even though neither is defined over Q. The answer is the number of\n"
        "closure points of the variety of irreducible classes, so nilpotent thickening\n"
        "does not add to it.\n"
        "\n"
        "Exit codes: 0 ok, 1 internal error, 2 parse or usage error, 3 inconclusive\n"
        "(a resource limit ran out), 4 count requested but the verdict is INFINITE.\n"
        "Dumps are written to stderr.";

    struct Options {
      int                      n = 0;
      std::string              file;
      bool                     json_output = false;
      bool                     verbose     = false;
      std::vector<std::string> dumps;
      double                   max_seconds = 300;
      unsigned                 max_degree  = 60;
      size_t                   max_basis   = 20000;
      unsigned                 threads     = 1;
      std::string              order       = "grevlex";
      std::string              mode        = "saturate";
      std::optional<unsigned>  length_override;
    };

    bool wants(Options const& o, char const* what) {
      return std::find(o.dumps.begin(), o.dumps.end(), what) != o.dumps.end();
    }

    std::string read_source(std::string const& file) {
      std::stringstream ss;
      if (file == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
      }
      std::ifstream in(file);
      if (!in) {
        throw std::runtime_error("cannot open " + file);
      }
      ss << in.rdbuf();
      return ss.str();
    }

    std::string tr(CyclicWord const& w) { return "tr(" + w.to_string() + ")"; }

    json metrics_json(DecisionMetrics const& m, std::optional<FiniteDimAlgebra> const& algebra) {
      json g                 = json::object();
      g["runs"]              = m.groebner.runs;
      g["pairs_created"]     = m.groebner.pairs_created;
      g["pairs_reduced"]     = m.groebner.pairs_reduced;
      g["zero_reductions"]   = m.groebner.zero_reductions;
      g["largest_basis"]     = m.groebner.largest_basis;
      g["max_degree"]        = m.groebner.max_degree;
      json j                 = json::object();
      j["variables"]         = m.variables;
      j["relation_generators"] = m.relation_generators;
      j["relation_gb_size"]  = m.relation_gb_size;
      j["s_word_length"]     = m.s_word_length;
      j["s_raw_tuples"]      = m.s_raw_tuples;
      j["s_evaluated"]       = m.s_evaluated;
      j["s_size"]            = m.s_size;
      j["s_used"]            = m.s_used;
      j["trace_generators"]  = m.trace_generators;
      j["j_gb_size"]         = m.j_gb_size;
      j["j_max_degree"]      = m.j_max_degree;
      j["saturation_steps"]  = m.saturation_steps;
      j["algebra_dim"]       = algebra ? json(algebra->dim()) : json(nullptr);
      j["groebner"]          = g;
      return j;
    }

    void human_report(std::ostream& os, Options const& o, Presentation const& p,
                      CountRun const& run) {
      auto const& v = run.decision.verdict;
      auto const& m = v.metrics;
      os << "# input: " << p.name.value_or(o.file) << ", n = " << o.n << ", order " << o.order
         << ", quotient mode " << o.mode << "\n";
      os << "# variables " << m.variables << ", Rel(B) generators " << m.relation_generators
         << ", Rel(B) basis " << m.relation_gb_size << "\n";
      os << "# S: word length " << m.s_word_length << ", " << m.s_evaluated << " of "
         << m.s_raw_tuples << " tuples evaluated, " << m.s_size << " distinct, " << m.s_used
         << " used\n";
      os << "# J: basis " << m.j_gb_size << ", max degree " << m.j_max_degree << ", "
         << m.saturation_steps << " saturation steps\n";
      os << "# trace generators " << m.trace_generators << "\n";
      for (auto const& r : v.minimal_polynomials) {
        os << tr(r.word) << ": " << r.polynomial.to_string() << "\n";
      }
      if (run.algebra) {
        os << "# algebra dimension " << run.algebra->dim() << "\n";
      }
      for (auto const& [stage, ms] : v.timings_ms) {
        os << "# " << stage << ": " << ms << " ms\n";
      }
    }

    void dump_polys(std::ostream& os, std::span<Polynomial const> ps, Ring const& ring) {
      for (auto const& f : ps) {
        os << to_string(f, ring) << "\n";
      }
    }

    void dumps(std::ostream& os, Options const& o, CountRun const& run) {
      auto const& d    = run.decision;
      auto const& ring = *d.space.ring;
      if (wants(o, "ideal")) {
        os << "# Rel(B): " << d.relations.generators().size() << " generators\n";
        dump_polys(os, d.relations.generators(), ring);
      }
      if (wants(o, "gb")) {
        os << "# Groebner basis of Rel(B)\n";
        if (d.relations_gb) {
          d.relations_gb->dump(os);
        } else {
          os << "# not computed\n";
        }
        os << "# Groebner basis of J\n";
        if (d.j) {
          d.j->basis.dump(os);
        } else {
          os << "# not computed\n";
        }
      }
      if (wants(o, "traces")) {
        os << "# trace generators: " << d.generators.size() << "\n";
        for (auto const& g : d.generators) {
          os << tr(g.word) << " = " << to_string(g.value, ring) << "\n";
        }
      }
      if (wants(o, "sset")) {
        os << "# S: " << d.s.polynomials.size() << " polynomials, word length "
           << d.s.word_length << "\n";
        for (size_t i = 0; i < d.s.polynomials.size(); ++i) {
          os << "# from";
          for (auto const& w : d.s.provenance[i]) {
            os << " " << (w.empty() ? std::string("1") : word_to_string(w));
          }
          os << "\n" << to_string(d.s.polynomials[i], ring) << "\n";
        }
      }
      if (wants(o, "algebra")) {
        if (run.algebra && run.report) {
          dump_algebra(os, *run.algebra, *run.report);
        } else {
          os << "# algebra not built (verdict is not FINITE)\n";
        }
      }
    }

    int execute(Options const& o, bool counting, std::ostream& out, std::ostream& err) {
      json report;
      auto emit_error = [&](int code, std::string const& kind, std::string const& message) {
        if (o.json_output) {
          json j;
          j["status"]              = "error";
          j["verdict"]             = nullptr;
          j["count"]               = nullptr;
          j["witness"]             = nullptr;
          j["minimal_polynomials"] = json::object();
          j["metrics"]             = nullptr;
          j["timings_ms"]          = json::object();
          j["error"]               = {{"kind", kind}, {"message", message}};
          out << j.dump(2) << "\n";
        }
        err << "repcount: " << message << "\n";
        return code;
      };

      Presentation p;
      try {
        std::vector<ParseWarning> warnings;
        p = parse_presentation(read_source(o.file), &warnings);
        for (auto const& w : warnings) {
          err << o.file << ":" << w.line << ": warning: " << w.message << "\n";
        }
      } catch (ParseError const& e) {
        std::string msg = o.file + ":" + std::to_string(e.line()) + ":"
                          + std::to_string(e.column()) + ": " + e.message();
        return emit_error(exit_parse, "parse", msg);
      } catch (std::runtime_error const& e) {
        return emit_error(exit_parse, "io", e.what());
      }

      DecisionInput in;
      in.presentation              = p;
      in.n                         = o.n;
      in.options.mode              = o.mode == "single" ? QuotientMode::single : QuotientMode::saturate;
      in.options.base_order        = o.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
      in.options.limits            = {o.max_seconds, o.max_degree, o.max_basis};
      in.options.length_override   = o.length_override;
      in.options.threads           = std::max(1u, o.threads);

      CountRun run;
      try {
        if (counting || wants(o, "algebra")) {
          run = run_count(in);
        } else {
          run.decision = run_decision(in);
        }
      } catch (std::invalid_argument const& e) {
        return emit_error(exit_parse, "usage", e.what());
      }
      auto const& v = run.decision.verdict;

      if (!o.dumps.empty()) {
        dumps(err, o, run);
      }
      if (o.verbose) {
        human_report(err, o, p, run);
      }

      int         code = exit_ok;
      std::string status = "ok";
      std::string line;
      switch (v.outcome) {
        case Outcome::finite:
          line = counting ? std::to_string(*run.count) : "FINITE";
          break;
        case Outcome::infinite:
          line = "INFINITE (witness: " + tr(*v.witness) + ")";
          if (counting) {
            code   = exit_infinite;
            status = "error";
          }
          break;
        case Outcome::inconclusive:
          line   = "INCONCLUSIVE (limit: " + v.limit + ", stage: " + v.stage + ")";
          code   = exit_inconclusive;
          status = "inconclusive";
          break;
      }

      if (!o.json_output) {
        out << line << "\n";
        return code;
      }
      json j;
      j["status"]  = status;
      j["verdict"] = outcome_name(v.outcome);
      j["count"]   = run.count ? json(*run.count) : json(nullptr);
      j["witness"] = v.witness ? json(tr(*v.witness)) : json(nullptr);
      json mp      = json::object();
      for (auto const& r : v.minimal_polynomials) {
        mp[tr(r.word)] = r.polynomial.degree();
      }
      j["minimal_polynomials"] = mp;
      j["metrics"]             = metrics_json(v.metrics, run.algebra);
      json t                   = json::object();
      for (auto const& [stage, ms] : v.timings_ms) {
        t[stage] = ms;
      }
      j["timings_ms"] = t;
      j["input"]      = {{"name", p.name ? json(*p.name) : json(nullptr)},
                         {"file", o.file},
                         {"command", counting ? "count" : "decide"},
                         {"n", o.n},
                         {"order", o.order},
                         {"quotient_mode", o.mode},
                         {"threads", in.options.threads},
                         {"max_seconds", o.max_seconds},
                         {"max_degree", o.max_degree},
                         {"max_basis", o.max_basis},
                         {"length_bound_override",
                          o.length_override ? json(*o.length_override) : json(nullptr)}};
      if (v.outcome == Outcome::inconclusive) {
        j["error"] = {{"kind", "resource_limit"}, {"limit", v.limit}, {"stage", v.stage}};
      } else if (code == exit_infinite) {
        j["error"] = {{"kind", "infinite"},
                      {"message", "count requested but the verdict is INFINITE"}};
      } else {
        j["error"] = nullptr;
      }
      out << j.dump(2) << "\n";
      if (code == exit_infinite) {
        err << "repcount: " << line << "\n";
      }
      return code;
    }

    void add_common(CLI::App* sub, Options& o) {
      sub->add_option("--n", o.n, "Representation dimension")->required()->check(CLI::PositiveNumber);
      sub->add_option("file", o.file, "Presentation file (.alg), or - for stdin")->required();
      sub->add_flag("--json", o.json_output, "Print a JSON report instead of the result line");
      sub->add_flag("--verbose", o.verbose, "Print metrics and minimal polynomials to stderr");
      sub->add_option("--dump", o.dumps, "Dump intermediate data (repeatable)")
          ->check(CLI::IsMember({"ideal", "gb", "traces", "sset", "algebra"}))
          ->take_last()
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
      sub->add_option("--max-seconds", o.max_seconds, "Wall-clock budget")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-degree", o.max_degree, "Degree cap for Groebner basis elements")
          ->capture_default_str()
          ->check(CLI::Range(1u, 255u));
      sub->add_option("--max-basis", o.max_basis, "Cap on basis and pair-queue sizes")
          ->capture_default_str();
      sub->add_option("--threads", o.threads, "Worker threads for algebraicity tests")
          ->capture_default_str()
          ->check(CLI::Range(1u, 256u));
      sub->add_option("--order", o.order, "Base monomial order")
          ->capture_default_str()
          ->check(CLI::IsMember({"lex", "grevlex"}));
      sub->add_option("--quotient-mode", o.mode, "saturate: (Rel : S^inf); single: (Rel : S)")
          ->capture_default_str()
          ->check(CLI::IsMember({"saturate", "single"}));
      sub->add_option("--length-bound-override", o.length_override,
                      "Word length for the irreducibility set instead of the proven bound");
    }
  }  // namespace

  int run(std::span<std::string const> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finiteness and counting of n-dimensional irreducible representations\n"
                 "of finitely presented Q-algebras.",
                 "repcount"};
    app.footer(kFooter);
    app.require_subcommand(1, 1);

    Options decide_opts, count_opts;
    auto*   decide = app.add_subcommand("decide", "FINITE, INFINITE or INCONCLUSIVE");
    auto*   count  = app.add_subcommand("count", "Number of classes, or INFINITE (exit 4)");
    decide->footer(kFooter);
    count->footer(kFooter);
    add_common(decide, decide_opts);
    add_common(count, count_opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_parse;
    }

    try {
      bool const counting = count->parsed();
      return execute(counting ? count_opts : decide_opts, counting, out, err);
    } catch (std::exception const& e) {
      err << "repcount: internal error: " << e.what() << "\n";
      return exit_internal;
    }
  }

}  // namespace repcount::cli
