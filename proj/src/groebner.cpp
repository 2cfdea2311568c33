#include "repcount/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace repcount {

  Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!g.is_zero()) {
        gens_.push_back(std::move(g));
      }
    }
  }

  Ideal Ideal::unit(RingPtr ring) {
    return Ideal(std::move(ring), {Polynomial(Rational(1))});
  }

  void GroebnerStats::merge(GroebnerStats const& other) {
    runs += other.runs;
    pairs_created += other.pairs_created;
    pairs_reduced += other.pairs_reduced;
    zero_reductions += other.zero_reductions;
    largest_basis = std::max(largest_basis, other.largest_basis);
    max_degree    = std::max(max_degree, other.max_degree);
  }

  ////////////////////////////////////////////////////////////////////////
  // GroebnerBasis
  ////////////////////////////////////////////////////////////////////////

  GroebnerBasis::GroebnerBasis(RingPtr                 ring,
                               MonomialOrder           order,
                               std::vector<Polynomial> reduced)
      : ring_(std::move(ring)), order_(order), elems_(std::move(reduced)) {
    rebuild_divisors();
  }

  GroebnerBasis::GroebnerBasis(GroebnerBasis const& other)
      : ring_(other.ring_), order_(other.order_), elems_(other.elems_) {
    rebuild_divisors();
  }

  GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis const& other) {
    if (this != &other) {
      ring_  = other.ring_;
      order_ = other.order_;
      elems_ = other.elems_;
      rebuild_divisors();
    }
    return *this;
  }

  void GroebnerBasis::rebuild_divisors() {
    divisors_ = DivisorSet(order_);
    for (auto& e : elems_) {
      if (e.order() != order_) {
        e = e.in_order(order_);
      }
      divisors_.add(&e);
    }
  }

  bool GroebnerBasis::is_unit() const noexcept {
    return elems_.size() == 1 && elems_[0].is_constant();
  }

  unsigned GroebnerBasis::max_degree() const noexcept {
    unsigned d = 0;
    for (auto const& e : elems_) {
      d = std::max(d, e.total_degree());
    }
    return d;
  }

  Polynomial GroebnerBasis::normal_form(Polynomial const& f,
                                        Budget const&     budget) const {
    return repcount::normal_form(f, divisors_, budget);
  }

  bool GroebnerBasis::contains(Polynomial const& f) const {
    return normal_form(f).is_zero();
  }

  void GroebnerBasis::dump(std::ostream& os) const {
    os << "# order: " << order_.name() << "\n# ranking:";
    if (ring_) {
      for (size_t i = 0; i < ring_->size(); ++i) {
        os << (i == 0 ? " " : " > ") << ring_->name(i);
      }
    }
    os << "\n# elements: " << elems_.size() << "\n";
    for (auto const& e : elems_) {
      os << (ring_ ? to_string(e, *ring_) : std::string("?")) << "\n";
    }
  }

  bool contains(GroebnerBasis const& basis, Polynomial const& f) {
    return basis.contains(f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Buchberger
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Pair {
      uint32_t i;
      uint32_t j;
      Monomial lcm;
      unsigned sugar;
    };

    class Buchberger {
     public:
      Buchberger(MonomialOrder order, Budget const& budget, GroebnerStats& stats)
          : ord_(order), budget_(budget), stats_(stats) {}

      // Returns false once the unit ideal has been detected.
      bool insert_input(Polynomial const& f) {
        return insert(f.in_order(ord_), f.total_degree());
      }

      bool run() {
        while (!pairs_.empty()) {
          budget_.check_time();
          // pairs_ is sorted so the preferred pair is last
          Pair p = std::move(pairs_.back());
          pairs_.pop_back();
          ++stats_.pairs_reduced;
          Polynomial s = s_polynomial(polys_[p.i], polys_[p.j], ord_);
          if (!insert(s, p.sugar)) {
            return false;
          }
        }
        return true;
      }

      std::vector<Polynomial> reduced_basis() const {
        std::vector<size_t> keep;
        for (size_t i = 0; i < polys_.size(); ++i) {
          if (active_[i]) {
            keep.push_back(i);
          }
        }
        std::vector<Polynomial> out;
        out.reserve(keep.size());
        for (size_t a : keep) {
          DivisorSet others(ord_);
          for (size_t b : keep) {
            if (b != a) {
              others.add(&polys_[b]);
            }
          }
          // minimal basis: the leading term survives, only the tail moves
          out.push_back(normal_form(polys_[a], others, budget_).monic());
        }
        std::sort(out.begin(), out.end(), [&](auto const& x, auto const& y) {
          return ord_.compare(x.lm(), y.lm()) < 0;
        });
        return out;
      }

     private:
      bool insert(Polynomial const& f, unsigned sugar) {
        Polynomial h = normal_form(f, reducers_, budget_);
        if (h.is_zero()) {
          ++stats_.zero_reductions;
          return true;
        }
        if (h.is_constant()) {
          return false;
        }
        h = h.primitive();
        unsigned deg = h.total_degree();
        stats_.max_degree = std::max(stats_.max_degree, deg);
        budget_.check_degree(deg);
        update(std::move(h), std::max(sugar, deg));
        return true;
      }

      // Gebauer-Moeller installation of a new, fully reduced element.
      void update(Polynomial h, unsigned sugar) {
        auto const hi = static_cast<uint32_t>(polys_.size());
        Monomial const hm = h.lm();

        std::vector<Pair> candidates;
        for (uint32_t g = 0; g < hi; ++g) {
          if (!active_[g]) {
            continue;
          }
          Monomial const& gm  = polys_[g].lm();
          Monomial        l   = hm.lcm(gm);
          unsigned        sug = std::max(sugar + l.degree() - hm.degree(),
                                  sugar_[g] + l.degree() - gm.degree());
          candidates.push_back({g, hi, l, sug});
        }

        // Chain criterion among the new pairs.
        std::vector<bool> dropped(candidates.size(), false);
        for (size_t a = 0; a < candidates.size(); ++a) {
          Monomial const& ga = polys_[candidates[a].i].lm();
          if (ga.coprime(hm)) {
            continue;
          }
          for (size_t b = 0; b < candidates.size(); ++b) {
            if (b == a || dropped[b]) {
              continue;
            }
            if (candidates[b].lcm.divides(candidates[a].lcm)) {
              // equal lcms: keep the earlier one
              if (candidates[b].lcm == candidates[a].lcm && b > a) {
                continue;
              }
              dropped[a] = true;
              break;
            }
          }
        }
        // Product criterion: coprime pairs reduce to zero.
        std::vector<Pair> fresh;
        for (size_t a = 0; a < candidates.size(); ++a) {
          if (dropped[a]) {
            continue;
          }
          if (polys_[candidates[a].i].lm().coprime(hm)) {
            continue;
          }
          fresh.push_back(candidates[a]);
        }

        // Old pairs made redundant by h.
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + fresh.size());
        for (auto& p : pairs_) {
          if (hm.divides(p.lcm)) {
            Monomial li = polys_[p.i].lm().lcm(hm);
            Monomial lj = polys_[p.j].lm().lcm(hm);
            if (!(li == p.lcm) && !(lj == p.lcm)) {
              continue;
            }
          }
          kept.push_back(std::move(p));
        }
        stats_.pairs_created += fresh.size();
        for (auto& p : fresh) {
          kept.push_back(std::move(p));
        }
        // Descending preference so the best pair sits at the back.
        std::sort(kept.begin(), kept.end(), [&](Pair const& a, Pair const& b) {
          if (a.sugar != b.sugar) {
            return a.sugar > b.sugar;
          }
          int c = ord_.compare(a.lcm, b.lcm);
          if (c != 0) {
            return c > 0;
          }
          return std::tie(a.j, a.i) > std::tie(b.j, b.i);
        });
        pairs_ = std::move(kept);

        for (uint32_t g = 0; g < hi; ++g) {
          if (active_[g] && hm.divides(polys_[g].lm())) {
            active_[g] = false;
          }
        }
        polys_.push_back(std::move(h));
        sugar_.push_back(sugar);
        active_.push_back(true);

        size_t n_active = std::count(active_.begin(), active_.end(), true);
        stats_.largest_basis = std::max(stats_.largest_basis, n_active);
        budget_.check_basis_size(n_active);

        // polys_ may have reallocated; rebuild reducer pointers.
        reducers_ = DivisorSet(ord_);
        for (size_t g = 0; g < polys_.size(); ++g) {
          if (active_[g]) {
            reducers_.add(&polys_[g]);
          }
        }
      }

      MonomialOrder           ord_;
      Budget const&           budget_;
      GroebnerStats&          stats_;
      std::vector<Polynomial> polys_;
      std::vector<unsigned>   sugar_;
      std::vector<bool>       active_;
      std::vector<Pair>       pairs_;
      DivisorSet              reducers_{ord_};
    };

  }  // namespace

  GroebnerBasis buchberger(Ideal const&   ideal,
                           MonomialOrder  order,
                           Budget const&  budget,
                           GroebnerStats* stats) {
    GroebnerStats local;
    ++local.runs;
    RingPtr const& ring = ideal.ring();

    std::vector<Polynomial> inputs;
    for (auto const& g : ideal.generators()) {
      if (g.is_constant()) {
        if (stats) {
          stats->merge(local);
        }
        return GroebnerBasis(ring, order, {Polynomial(Rational(1), order)});
      }
      budget.check_degree(g.total_degree());
      inputs.push_back(g.in_order(order));
    }
    std::sort(inputs.begin(), inputs.end(), [&](auto const& a, auto const& b) {
      return order.compare(a.lm(), b.lm()) < 0;
    });

    Buchberger engine(order, budget, local);
    bool       proper = true;
    for (auto const& g : inputs) {
      if (!engine.insert_input(g)) {
        proper = false;
        break;
      }
    }
    if (proper) {
      proper = engine.run();
    }
    std::vector<Polynomial> basis;
    if (proper) {
      basis = engine.reduced_basis();
    } else {
      basis = {Polynomial(Rational(1), order)};
    }
    if (stats) {
      stats->merge(local);
    }
    return GroebnerBasis(ring, order, std::move(basis));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal operations
  ////////////////////////////////////////////////////////////////////////

  namespace {

    VariableId fresh_auxiliary(Ring const& ring, std::string const& tag) {
      for (int k = 0;; ++k) {
        VariableId v = VariableId::auxiliary(tag, k);
        if (!ring.index_of(v)) {
          return v;
        }
      }
    }

    std::vector<size_t> shift_positions(size_t count, size_t by) {
      std::vector<size_t> pos(count);
      std::iota(pos.begin(), pos.end(), by);
      return pos;
    }

  }  // namespace

  Ideal eliminate(Ideal const&            ideal,
                  std::span<size_t const> drop,
                  Budget const&           budget,
                  GroebnerStats*          stats) {
    RingPtr const& ring = ideal.ring();
    size_t const   n    = ring ? ring->size() : 0;
    std::vector<bool> dropped(n, false);
    for (size_t d : drop) {
      if (d >= n) {
        throw std::out_of_range("eliminate: variable index out of range");
      }
      dropped[d] = true;
    }
    // dropped variables first, each group keeping its relative order
    std::vector<size_t> new_position(n);
    size_t              next = 0;
    for (size_t i = 0; i < n; ++i) {
      if (dropped[i]) {
        new_position[i] = next++;
      }
    }
    size_t const k = next;
    for (size_t i = 0; i < n; ++i) {
      if (!dropped[i]) {
        new_position[i] = next++;
      }
    }
    std::vector<size_t> old_position(n);
    for (size_t i = 0; i < n; ++i) {
      old_position[new_position[i]] = i;
    }

    MonomialOrder const     block = MonomialOrder::elimination(static_cast<uint16_t>(k));
    std::vector<Polynomial> moved;
    for (auto const& g : ideal.generators()) {
      moved.push_back(remap_variables(g, new_position, block));
    }
    GroebnerBasis gb = buchberger(Ideal(ring, std::move(moved)), block, budget, stats);

    std::vector<Polynomial> kept;
    for (auto const& e : gb.elements()) {
      bool free = true;
      for (size_t v = 0; v < k && free; ++v) {
        free = !e.uses_variable(v);
      }
      if (free) {
        kept.push_back(remap_variables(e, old_position, MonomialOrder::grevlex()));
      }
    }
    return Ideal(ring, std::move(kept));
  }

  Ideal intersect(Ideal const& a, Ideal const& b, Budget const& budget, GroebnerStats* stats) {
    RingPtr const& ring = a.ring() ? a.ring() : b.ring();
    if (a.empty() || b.empty()) {
      return Ideal(ring, {});
    }
    Ring const   base = *ring;
    RingPtr      ext  = make_ring(base.with_front({fresh_auxiliary(base, "w")}));
    auto const   up   = shift_positions(base.size(), 1);
    auto const   ord  = MonomialOrder::grevlex();
    Polynomial   w    = Polynomial::variable(0, ord);
    Polynomial   one_minus_w = Polynomial(Rational(1), ord) - w;

    std::vector<Polynomial> gens;
    for (auto const& f : a.generators()) {
      gens.push_back(w * remap_variables(f, up, ord));
    }
    for (auto const& g : b.generators()) {
      gens.push_back(one_minus_w * remap_variables(g, up, ord));
    }
    size_t const drop[] = {0};
    Ideal        elim   = eliminate(Ideal(ext, std::move(gens)), drop, budget, stats);

    std::vector<size_t> down(base.size() + 1);
    down[0] = 0;
    for (size_t i = 1; i <= base.size(); ++i) {
      down[i] = i - 1;
    }
    std::vector<Polynomial> out;
    for (auto const& g : elim.generators()) {
      out.push_back(remap_variables(g, down, ord));
    }
    return Ideal(ring, std::move(out));
  }

  Ideal ideal_quotient(Ideal const&      ideal,
                       Polynomial const& f,
                       Budget const&     budget,
                       GroebnerStats*    stats) {
    if (f.is_zero()) {
      throw std::invalid_argument("ideal_quotient: divisor must be nonzero");
    }
    if (f.is_constant()) {
      return ideal;
    }
    Ideal cap = intersect(ideal, Ideal(ideal.ring(), {f}), budget, stats);
    std::vector<Polynomial> out;
    for (auto const& g : cap.generators()) {
      auto q = divide_exact(g, f);
      if (!q) {
        throw std::logic_error("ideal_quotient: generator of I cap <f> not divisible by f");
      }
      out.push_back(std::move(*q));
    }
    return Ideal(ideal.ring(), std::move(out));
  }

  Ideal ideal_quotient(Ideal const&                ideal,
                       std::span<Polynomial const> s,
                       Budget const&               budget,
                       GroebnerStats*              stats) {
    if (s.empty()) {
      throw std::invalid_argument("ideal_quotient: empty divisor set");
    }
    Ideal result = ideal_quotient(ideal, s[0], budget, stats);
    for (size_t i = 1; i < s.size(); ++i) {
      result = intersect(result, ideal_quotient(ideal, s[i], budget, stats), budget, stats);
    }
    return result;
  }

  SaturationResult saturate(Ideal const&                ideal,
                            std::span<Polynomial const> s,
                            Budget const&               budget,
                            GroebnerStats*              stats) {
    if (s.empty()) {
      throw std::invalid_argument("saturate: empty set");
    }
    auto const    ord     = MonomialOrder::grevlex();
    GroebnerBasis current = buchberger(ideal, ord, budget, stats);
    size_t        steps   = 0;
    for (;;) {
      budget.check_time();
      if (current.is_unit()) {
        return {current.to_ideal(), steps};
      }
      Ideal         next    = ideal_quotient(current.to_ideal(), s, budget, stats);
      GroebnerBasis next_gb = buchberger(next, ord, budget, stats);
      ++steps;
      if (next_gb == current) {
        return {next_gb.to_ideal(), steps};
      }
      current = std::move(next_gb);
    }
  }

  bool same_ideal(Ideal const& a, Ideal const& b, Budget const& budget) {
    auto const ord = MonomialOrder::grevlex();
    return buchberger(a, ord, budget) == buchberger(b, ord, budget);
  }

}  // namespace repcount
