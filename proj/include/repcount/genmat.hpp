#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "repcount/budget.hpp"
#include "repcount/groebner.hpp"
#include "repcount/poly_matrix.hpp"
#include "repcount/presentation.hpp"

namespace repcount {

  // The n x n generic matrices x_1..x_s over Q[x[i,j,l]].
  struct GenericMatrixSpace {
    int                     n = 1;
    int                     s = 0;
    RingPtr                 ring;
    std::vector<PolyMatrix> matrices;
  };

  GenericMatrixSpace build_generic_space(int n, int s);

  // Entries of every relation evaluated at the generic matrices.
  Ideal relations_ideal(Presentation const& p, GenericMatrixSpace const& sp);

  // Alternating sum over all orderings of the m arguments. O(2^m m) matrix
  // products via a subset recursion.
  PolyMatrix standard_identity(size_t m, std::span<PolyMatrix const> args);

  // Largest integer strictly below n sqrt(2n^2/(n-1) + 1/4) + n/2 - 2, by
  // exact comparison. Requires n >= 2.
  unsigned length_bound(int n);

  // Word up to rotation, stored as its lexicographically least rotation.
  class CyclicWord {
   public:
    CyclicWord() = default;
    explicit CyclicWord(FreeWord const& w);

    [[nodiscard]] FreeWord const& letters() const noexcept { return letters_; }
    [[nodiscard]] size_t size() const noexcept { return letters_.size(); }
    // "x1^2*x2"; 1-based generic matrix names.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(CyclicWord const&, CyclicWord const&) = default;

   private:
    FreeWord letters_;
  };

  FreeWord least_rotation(FreeWord const& w);
  std::string word_to_string(FreeWord const& w);

  struct TraceGenerator {
    CyclicWord word;
    Polynomial value;
  };

  struct FreeWordHash {
    size_t operator()(FreeWord const& w) const noexcept;
  };

  // Memoized traces of products of generic matrices, keyed by necklace.
  class TraceTable {
   public:
    explicit TraceTable(GenericMatrixSpace const& sp);

    PolyMatrix product(FreeWord const& w);
    Polynomial const& trace(FreeWord const& w);
    [[nodiscard]] size_t cached_traces() const noexcept { return traces_.size(); }

   private:
    PolyMatrix compute_product(FreeWord const& w);

    GenericMatrixSpace const&                            sp_;
    size_t                                               product_cap_;
    std::unordered_map<FreeWord, PolyMatrix, FreeWordHash> products_;
    std::unordered_map<FreeWord, Polynomial, FreeWordHash> traces_;
  };

  // All necklaces of length 1..n^2, ordered by length then lexicographically.
  std::vector<TraceGenerator> trace_generators(GenericMatrixSpace const& sp);

  // All words over s letters of length <= max_length, shortest first, then
  // lexicographic. Includes the empty word.
  std::vector<FreeWord> words_up_to(int s, unsigned max_length);

  struct IrreducibilitySet {
    std::vector<Polynomial>            polynomials;
    // (M0, M1, ..., M_{2(n-1)}) that first produced each polynomial.
    std::vector<std::vector<FreeWord>> provenance;
    unsigned                           word_length = 0;
    // |words|^(2n-1), tuples actually evaluated after pruning.
    double                             raw_tuples  = 0;
    size_t                             evaluated   = 0;
  };

  // trace(M0 s_{2n-2}(M1..M_{2n-2})) over words of bounded length. Only one
  // ordering of each set of distinct M1.. is evaluated, and results are
  // deduplicated up to sign, with zeros dropped. Requires n >= 2.
  IrreducibilitySet irreducibility_set(GenericMatrixSpace const& sp,
                                       std::optional<unsigned>   length_override = std::nullopt,
                                       Budget const&             budget = Budget::unlimited());

}  // namespace repcount
