#include "repcount/genmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace repcount {

  GenericMatrixSpace build_generic_space(int n, int s) {
    if (n < 1 || s < 0) {
      throw std::invalid_argument("build_generic_space: need n >= 1 and s >= 0");
    }
    if (static_cast<size_t>(n) * n * s > kMaxVariables) {
      throw std::invalid_argument("build_generic_space: more than "
                                  + std::to_string(kMaxVariables) + " entry variables");
    }
    GenericMatrixSpace sp;
    sp.n    = n;
    sp.s    = s;
    sp.ring = make_ring(Ring::matrix_entries(n, s));
    size_t const nn = static_cast<size_t>(n) * n;
    for (int l = 0; l < s; ++l) {
      std::vector<Polynomial> entries;
      for (size_t k = 0; k < nn; ++k) {
        entries.push_back(Polynomial::variable(static_cast<size_t>(l) * nn + k));
      }
      sp.matrices.emplace_back(static_cast<size_t>(n), std::move(entries));
    }
    return sp;
  }

  Ideal relations_ideal(Presentation const& p, GenericMatrixSpace const& sp) {
    if (p.generator_count() != static_cast<size_t>(sp.s)) {
      throw std::invalid_argument("relations_ideal: generator count mismatch");
    }
    std::vector<Polynomial> gens;
    for (auto const& r : p.relations) {
      PolyMatrix m = substitute(r, sp.matrices, static_cast<size_t>(sp.n));
      for (auto const& e : m.entries()) {
        if (!e.is_zero()) {
          gens.push_back(e);
        }
      }
    }
    return Ideal(sp.ring, std::move(gens));
  }

  PolyMatrix standard_identity(size_t m, std::span<PolyMatrix const> args) {
    if (m == 0 || args.size() != m) {
      throw std::invalid_argument("standard_identity: need m >= 1 matching arguments");
    }
    if (m > 20) {
      throw std::invalid_argument("standard_identity: m too large");
    }
    size_t const dim = args[0].dim();
    // sum[T] = signed sum over orderings of the subset T, the sign taken
    // relative to increasing index order. Choosing the first factor i of T
    // moves it past the members of T below it.
    std::vector<PolyMatrix> sum(size_t{1} << m);
    sum[0] = PolyMatrix::identity(dim);
    for (size_t t = 1; t < sum.size(); ++t) {
      PolyMatrix acc(dim);
      size_t     below = 0;
      for (size_t i = 0; i < m; ++i) {
        if (!(t >> i & 1)) {
          continue;
        }
        PolyMatrix term = args[i] * sum[t & ~(size_t{1} << i)];
        if (below % 2) {
          acc -= term;
        } else {
          acc += term;
        }
        ++below;
      }
      sum[t] = std::move(acc);
    }
    return sum.back();
  }

  unsigned length_bound(int n) {
    if (n < 2) {
      throw std::invalid_argument("length_bound: requires n >= 2");
    }
    // L < n sqrt(q) + n/2 - 2  <=>  L + 2 - n/2 < n sqrt(q)
    Rational const q     = Rational(2 * n * n, n - 1) + Rational(1, 4);
    Rational const rhs_2 = Rational(n * n) * q;
    auto           below = [&](unsigned l) {
      Rational lhs = Rational(static_cast<int64_t>(l) + 2) - Rational(n, 2);
      return lhs.sign() < 0 || lhs * lhs < rhs_2;
    };
    unsigned l = 0;
    while (below(l + 1)) {
      ++l;
    }
    return l;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  FreeWord least_rotation(FreeWord const& w) {
    FreeWord best = w;
    FreeWord rot  = w;
    for (size_t k = 1; k < w.size(); ++k) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) {
        best = rot;
      }
    }
    return best;
  }

  CyclicWord::CyclicWord(FreeWord const& w) : letters_(least_rotation(w)) {}

  std::string word_to_string(FreeWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      if (i > 0) {
        out += "*";
      }
      out += "x" + std::to_string(w[i] + 1);
      if (j - i > 1) {
        out += "^" + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  std::string CyclicWord::to_string() const {
    return word_to_string(letters_);
  }

  size_t FreeWordHash::operator()(FreeWord const& w) const noexcept {
    size_t h = w.size();
    for (size_t l : w) {
      h = h * 1000003u ^ (l + 0x9e3779b97f4a7c15ull);
    }
    return h;
  }

  std::vector<FreeWord> words_up_to(int s, unsigned max_length) {
    std::vector<FreeWord> out{FreeWord{}};
    if (s <= 0) {
      return out;
    }
    size_t level_start = 0;
    for (unsigned len = 1; len <= max_length; ++len) {
      size_t level_end = out.size();
      for (size_t k = level_start; k < level_end; ++k) {
        for (int l = 0; l < s; ++l) {
          FreeWord w = out[k];
          w.push_back(static_cast<size_t>(l));
          out.push_back(std::move(w));
        }
      }
      level_start = level_end;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Traces
  ////////////////////////////////////////////////////////////////////////

  TraceTable::TraceTable(GenericMatrixSpace const& sp) : sp_(sp) {
    // keep the cache of full products at a few hundred matrices
    product_cap_ = 1;
    size_t count = static_cast<size_t>(std::max(sp.s, 1));
    while (product_cap_ < 8 && count * static_cast<size_t>(std::max(sp.s, 1)) <= 512) {
      count *= static_cast<size_t>(std::max(sp.s, 1));
      ++product_cap_;
    }
  }

  PolyMatrix TraceTable::compute_product(FreeWord const& w) {
    if (w.empty()) {
      return PolyMatrix::identity(static_cast<size_t>(sp_.n));
    }
    if (w.size() == 1) {
      return sp_.matrices.at(w[0]);
    }
    FreeWord head(w.begin(), w.end() - 1);
    if (head.size() <= product_cap_) {
      return product(head) * sp_.matrices.at(w.back());
    }
    return compute_product(head) * sp_.matrices.at(w.back());
  }

  PolyMatrix TraceTable::product(FreeWord const& w) {
    if (auto it = products_.find(w); it != products_.end()) {
      return it->second;
    }
    PolyMatrix p = compute_product(w);
    if (w.size() <= product_cap_) {
      products_.emplace(w, p);
    }
    return p;
  }

  Polynomial const& TraceTable::trace(FreeWord const& w) {
    FreeWord key = least_rotation(w);
    if (auto it = traces_.find(key); it != traces_.end()) {
      return it->second;
    }
    Polynomial t;
    if (key.empty()) {
      t = Polynomial(Rational(sp_.n));
    } else if (key.size() <= 2 * product_cap_) {
      size_t   half = (key.size() + 1) / 2;
      FreeWord a(key.begin(), key.begin() + static_cast<ptrdiff_t>(half));
      FreeWord b(key.begin() + static_cast<ptrdiff_t>(half), key.end());
      t = trace_of_product(product(a), product(b));
    } else {
      FreeWord   head(key.begin(), key.end() - 1);
      PolyMatrix ph = compute_product(head);
      t             = trace_of_product(ph, sp_.matrices.at(key.back()));
    }
    return traces_.emplace(std::move(key), std::move(t)).first->second;
  }

  std::vector<TraceGenerator> trace_generators(GenericMatrixSpace const& sp) {
    std::vector<TraceGenerator> out;
    if (sp.s == 0) {
      return out;
    }
    TraceTable     table(sp);
    unsigned const max_len = static_cast<unsigned>(sp.n * sp.n);
    for (auto const& w : words_up_to(sp.s, max_len)) {
      if (w.empty() || least_rotation(w) != w) {
        continue;
      }
      out.push_back({CyclicWord(w), table.trace(w)});
    }
    // words_up_to already yields (length, lex) order
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Irreducibility set
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Calls f on every strictly increasing index tuple of size k below n.
    template <typename F>
    void for_each_combination(size_t n, size_t k, F&& f) {
      if (k > n) {
        return;
      }
      std::vector<size_t> idx(k);
      for (size_t i = 0; i < k; ++i) {
        idx[i] = i;
      }
      for (;;) {
        f(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
          --i;
        }
        if (i == 0) {
          return;
        }
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
      }
    }

    struct SignedPermutation {
      std::vector<size_t> order;
      int                 sign;
    };

    std::vector<SignedPermutation> all_permutations(size_t k) {
      std::vector<size_t> p(k);
      for (size_t i = 0; i < k; ++i) {
        p[i] = i;
      }
      std::vector<SignedPermutation> out;
      do {
        int inversions = 0;
        for (size_t a = 0; a < k; ++a) {
          for (size_t b = a + 1; b < k; ++b) {
            inversions += p[a] > p[b];
          }
        }
        out.push_back({p, inversions % 2 ? -1 : 1});
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

  }  // namespace

  IrreducibilitySet irreducibility_set(GenericMatrixSpace const& sp,
                                       std::optional<unsigned>   length_override,
                                       Budget const&             budget) {
    if (sp.n < 2) {
      throw std::invalid_argument("irreducibility_set: requires n >= 2");
    }
    IrreducibilitySet out;
    out.word_length         = length_override ? *length_override : length_bound(sp.n);
    auto const   words      = words_up_to(sp.s, out.word_length);
    size_t const k          = static_cast<size_t>(2 * (sp.n - 1));
    auto const   perms      = all_permutations(k);
    out.raw_tuples          = 1;
    for (size_t i = 0; i < k + 1; ++i) {
      out.raw_tuples *= static_cast<double>(words.size());
    }

    TraceTable                                           table(sp);
    std::unordered_set<Polynomial, PolynomialHash>       seen;
    std::vector<std::pair<Polynomial, std::vector<FreeWord>>> found;

    for_each_combination(words.size(), k, [&](std::vector<size_t> const& pick) {
      for (size_t m0 = 0; m0 < words.size(); ++m0) {
        ++out.evaluated;
        if ((out.evaluated & 63) == 0) {
          budget.check_time();
        }
        Polynomial f;
        for (auto const& perm : perms) {
          FreeWord w = words[m0];
          for (size_t i : perm.order) {
            auto const& mi = words[pick[i]];
            w.insert(w.end(), mi.begin(), mi.end());
          }
          Polynomial const& t = table.trace(w);
          if (perm.sign > 0) {
            f += t;
          } else {
            f -= t;
          }
        }
        if (f.is_zero()) {
          continue;
        }
        f = f.primitive();
        if (!seen.insert(f).second) {
          continue;
        }
        std::vector<FreeWord> tuple{words[m0]};
        for (size_t i : pick) {
          tuple.push_back(words[i]);
        }
        found.emplace_back(std::move(f), std::move(tuple));
      }
    });

    // canonical order: degree, size, then leading terms
    std::stable_sort(found.begin(), found.end(), [](auto const& a, auto const& b) {
      unsigned da = a.first.total_degree(), db = b.first.total_degree();
      if (da != db) {
        return da < db;
      }
      return a.first.size() < b.first.size();
    });
    for (auto& [f, tuple] : found) {
      out.polynomials.push_back(std::move(f));
      out.provenance.push_back(std::move(tuple));
    }
    return out;
  }

}  // namespace repcount
