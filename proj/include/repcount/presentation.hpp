#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "repcount/poly_matrix.hpp"
#include "repcount/rational.hpp"

namespace repcount {

  struct GeneratorSymbol {
    std::string name;
    size_t      index = 0;

    friend bool operator==(GeneratorSymbol const&, GeneratorSymbol const&) = default;
  };

  // Generator indices, left to right; empty is the identity.
  using FreeWord = std::vector<size_t>;

  // Shorter words first, then lexicographic.
  struct WordLess {
    bool operator()(FreeWord const& a, FreeWord const& b) const {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }
  };

  // Element of the free associative algebra over Q.
  class FreeElement {
   public:
    using TermMap = std::map<FreeWord, Rational, WordLess>;

    FreeElement() = default;
    explicit FreeElement(Rational const& c);
    explicit FreeElement(FreeWord w, Rational const& c = Rational(1));

    [[nodiscard]] TermMap const& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(FreeWord const& w) const;
    // Largest generator index used plus one.
    [[nodiscard]] size_t letters_used() const noexcept;

    FreeElement& operator+=(FreeElement const& rhs);
    FreeElement& operator-=(FreeElement const& rhs);
    FreeElement& operator*=(Rational const& c);

    friend FreeElement operator+(FreeElement a, FreeElement const& b) { return a += b; }
    friend FreeElement operator-(FreeElement a, FreeElement const& b) { return a -= b; }
    friend FreeElement operator*(Rational const& c, FreeElement a) { return a *= c; }
    friend FreeElement operator*(FreeElement const& a, FreeElement const& b);

    friend bool operator==(FreeElement const& a, FreeElement const& b) {
      return a.terms_ == b.terms_;
    }

   private:
    void add_term(FreeWord const& w, Rational const& c);

    TermMap terms_;
  };

  FreeElement free_multiply(FreeElement const& a, FreeElement const& b);

  struct Presentation {
    std::vector<GeneratorSymbol> generators;
    std::vector<FreeElement>     relations;
    std::optional<std::string>   name;

    [[nodiscard]] size_t generator_count() const noexcept { return generators.size(); }
    [[nodiscard]] std::optional<size_t> generator_index(std::string_view name) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;
  };

  class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, size_t column, std::string const& message);

    [[nodiscard]] size_t line() const noexcept { return line_; }
    [[nodiscard]] size_t column() const noexcept { return column_; }
    [[nodiscard]] std::string const& message() const noexcept { return message_; }

   private:
    size_t      line_;
    size_t      column_;
    std::string message_;
  };

  struct ParseWarning {
    size_t      line = 0;
    std::string message;
  };

  // Line-oriented format: `generators:` names, `relation:` expressions,
  // optional `name:` text, `#` comments. Expressions are signed sums of
  // products of generators, rationals, parenthesized subexpressions and
  // nonnegative integer powers. Zero relations are dropped with a warning.
  Presentation parse_presentation(std::string_view                source,
                                  std::vector<ParseWarning>*      warnings = nullptr);

  // Text that parses back to the same presentation.
  std::string format(Presentation const& p);
  std::string format(FreeElement const& e, std::span<GeneratorSymbol const> generators);

  // Image under X_l -> images[l]; the empty word maps to the identity. dim
  // is only consulted when there are no images.
  PolyMatrix substitute(FreeElement const&          e,
                        std::span<PolyMatrix const> images,
                        size_t                      dim = 1);

}  // namespace repcount
