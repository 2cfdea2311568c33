#include "repcount/presentation.hpp"

#include <cctype>
#include <sstream>

namespace repcount {

  ////////////////////////////////////////////////////////////////////////
  // FreeElement
  ////////////////////////////////////////////////////////////////////////

  FreeElement::FreeElement(Rational const& c) {
    add_term({}, c);
  }

  FreeElement::FreeElement(FreeWord w, Rational const& c) {
    add_term(w, c);
  }

  void FreeElement::add_term(FreeWord const& w, Rational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  Rational FreeElement::coefficient(FreeWord const& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  size_t FreeElement::letters_used() const noexcept {
    size_t n = 0;
    for (auto const& [w, c] : terms_) {
      for (size_t l : w) {
        n = std::max(n, l + 1);
      }
    }
    return n;
  }

  FreeElement& FreeElement::operator+=(FreeElement const& rhs) {
    for (auto const& [w, c] : rhs.terms_) {
      add_term(w, c);
    }
    return *this;
  }

  FreeElement& FreeElement::operator-=(FreeElement const& rhs) {
    for (auto const& [w, c] : rhs.terms_) {
      add_term(w, -c);
    }
    return *this;
  }

  FreeElement& FreeElement::operator*=(Rational const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) {
      v *= c;
    }
    return *this;
  }

  FreeElement operator*(FreeElement const& a, FreeElement const& b) {
    FreeElement out;
    for (auto const& [wa, ca] : a.terms_) {
      for (auto const& [wb, cb] : b.terms_) {
        FreeWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        out.add_term(w, ca * cb);
      }
    }
    return out;
  }

  FreeElement free_multiply(FreeElement const& a, FreeElement const& b) {
    return a * b;
  }

  std::optional<size_t> Presentation::generator_index(std::string_view name) const {
    for (auto const& g : generators) {
      if (g.name == name) {
        return g.index;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string located(size_t line, size_t column, std::string const& message) {
      std::ostringstream os;
      os << "line " << line << ", column " << column << ": " << message;
      return os.str();
    }

    bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    bool digit(char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    // Recursive descent over one relation body.
    //   expr   := [sign] term (sign term)*
    //   term   := factor ([*] factor)*
    //   factor := atom [^ k]
    //   atom   := rational | identifier | ( expr )
    class ExpressionParser {
     public:
      ExpressionParser(std::string_view text, size_t line, size_t column0,
                       Presentation const& p)
          : text_(text), line_(line), col0_(column0), p_(p) {}

      FreeElement parse() {
        skip_space();
        if (at_end()) {
          fail("empty expression");
        }
        FreeElement e = expr();
        skip_space();
        if (!at_end()) {
          fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(line_, col0_ + pos_, msg);
      }

      bool at_end() const { return pos_ >= text_.size(); }
      char peek() const { return at_end() ? '\0' : text_[pos_]; }
      void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      FreeElement expr() {
        FreeElement sum;
        bool        first = true;
        for (;;) {
          skip_space();
          bool negative = false;
          if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
          } else if (!first) {
            return sum;
          }
          FreeElement t = term();
          if (negative) {
            sum -= t;
          } else {
            sum += t;
          }
          first = false;
        }
      }

      bool starts_atom() {
        skip_space();
        char c = peek();
        return digit(c) || ident_start(c) || c == '(';
      }

      FreeElement term() {
        FreeElement prod = factor();
        for (;;) {
          skip_space();
          if (peek() == '*') {
            ++pos_;
            prod = prod * factor();
          } else if (starts_atom()) {
            prod = prod * factor();
          } else {
            return prod;
          }
        }
      }

      FreeElement factor() {
        FreeElement base = atom();
        skip_space();
        while (peek() == '^') {
          ++pos_;
          skip_space();
          if (!digit(peek())) {
            fail("expected a nonnegative integer exponent");
          }
          size_t start = pos_;
          while (digit(peek())) {
            ++pos_;
          }
          unsigned long k = 0;
          try {
            k = std::stoul(std::string(text_.substr(start, pos_ - start)));
          } catch (std::exception const&) {
            k = ~0ul;
          }
          if (k > 1000) {
            pos_ = start;
            fail("exponent too large");
          }
          FreeElement power(Rational(1));
          for (unsigned long i = 0; i < k; ++i) {
            power = power * base;
          }
          base = std::move(power);
          skip_space();
        }
        return base;
      }

      FreeElement atom() {
        skip_space();
        char c = peek();
        if (c == '(') {
          ++pos_;
          FreeElement e = expr();
          skip_space();
          if (peek() != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return e;
        }
        if (digit(c)) {
          return FreeElement(rational());
        }
        if (ident_start(c)) {
          size_t start = pos_;
          while (ident_char(peek())) {
            ++pos_;
          }
          std::string_view name = text_.substr(start, pos_ - start);
          auto             idx  = p_.generator_index(name);
          if (!idx) {
            pos_ = start;
            fail("undeclared generator " + std::string(name));
          }
          return FreeElement(FreeWord{*idx});
        }
        if (at_end()) {
          fail("unexpected end of expression");
        }
        fail(std::string("unexpected '") + c + "'");
      }

      Rational rational() {
        size_t start = pos_;
        while (digit(peek())) {
          ++pos_;
        }
        if (peek() == '/') {
          ++pos_;
          if (!digit(peek())) {
            fail("malformed rational: expected a positive integer denominator");
          }
          while (digit(peek())) {
            ++pos_;
          }
        }
        std::string_view lit = text_.substr(start, pos_ - start);
        try {
          return Rational::parse(lit);
        } catch (std::exception const&) {
          pos_ = start;
          fail("malformed rational " + std::string(lit));
        }
      }

      std::string_view    text_;
      size_t              pos_ = 0;
      size_t              line_;
      size_t              col0_;
      Presentation const& p_;
    };

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

  }  // namespace

  ParseError::ParseError(size_t line, size_t column, std::string const& message)
      : std::runtime_error(located(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  Presentation parse_presentation(std::string_view source, std::vector<ParseWarning>* warnings) {
    Presentation p;
    bool         have_generators = false;
    size_t       line_no         = 0;
    size_t       pos             = 0;

    while (pos <= source.size()) {
      size_t end = source.find('\n', pos);
      if (end == std::string_view::npos) {
        end = source.size();
      }
      std::string_view line = source.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      if (trim(line).empty()) {
        continue;
      }
      size_t lead = 0;
      while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) {
        ++lead;
      }
      size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, lead + 1, "expected 'generators:', 'relation:' or 'name:'");
      }
      std::string_view key  = trim(line.substr(0, colon));
      std::string_view body = line.substr(colon + 1);
      size_t const     col0 = colon + 2;  // 1-based column of body[0]

      if (key == "generators") {
        if (have_generators) {
          throw ParseError(line_no, lead + 1, "duplicate 'generators:' line");
        }
        have_generators = true;
        size_t i        = 0;
        while (i < body.size()) {
          if (std::isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
            continue;
          }
          size_t start = i;
          if (!ident_start(body[i])) {
            throw ParseError(line_no, col0 + i, "generator names must start with a letter");
          }
          while (i < body.size() && ident_char(body[i])) {
            ++i;
          }
          if (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) {
            throw ParseError(line_no, col0 + i,
                             std::string("unexpected '") + body[i] + "' in generator list");
          }
          std::string name(body.substr(start, i - start));
          if (p.generator_index(name)) {
            throw ParseError(line_no, col0 + start, "duplicate generator " + name);
          }
          p.generators.push_back({name, p.generators.size()});
        }
      } else if (key == "relation") {
        if (!have_generators) {
          throw ParseError(line_no, lead + 1, "relation before 'generators:' line");
        }
        FreeElement r = ExpressionParser(body, line_no, col0, p).parse();
        if (r.is_zero()) {
          if (warnings) {
            warnings->push_back({line_no, "relation is zero; dropped"});
          }
          continue;
        }
        p.relations.push_back(std::move(r));
      } else if (key == "name") {
        if (p.name) {
          throw ParseError(line_no, lead + 1, "duplicate 'name:' line");
        }
        p.name = std::string(trim(body));
      } else {
        throw ParseError(line_no, lead + 1, "unknown directive '" + std::string(key) + "'");
      }
    }
    if (!have_generators) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'generators:' line");
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Formatting
  ////////////////////////////////////////////////////////////////////////

  std::string format(FreeElement const& e, std::span<GeneratorSymbol const> generators) {
    if (e.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    // longest words first
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
      auto const& [w, c] = *it;
      Rational    mag    = c.abs();
      if (first) {
        if (c.sign() < 0) {
          out += "-";
        }
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      if (w.empty()) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) {
        out += mag.to_string() + "*";
      }
      for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) {
          ++j;
        }
        if (i > 0) {
          out += "*";
        }
        out += generators[w[i]].name;
        if (j - i > 1) {
          out += "^" + std::to_string(j - i);
        }
        i = j;
      }
    }
    return out;
  }

  std::string format(Presentation const& p) {
    std::string out;
    if (p.name) {
      out += "name: " + *p.name + "\n";
    }
    out += "generators:";
    for (auto const& g : p.generators) {
      out += " " + g.name;
    }
    out += "\n";
    for (auto const& r : p.relations) {
      out += "relation: " + format(r, p.generators) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  PolyMatrix substitute(FreeElement const&          e,
                        std::span<PolyMatrix const> images,
                        size_t                      dim) {
    if (!images.empty()) {
      dim = images[0].dim();
    }
    for (auto const& m : images) {
      if (m.dim() != dim) {
        throw std::invalid_argument("substitute: images have different dimensions");
      }
    }
    if (e.letters_used() > images.size()) {
      throw std::invalid_argument("substitute: missing image for a generator");
    }
    PolyMatrix sum(dim);
    for (auto const& [w, c] : e.terms()) {
      PolyMatrix prod = PolyMatrix::identity(dim);
      if (!w.empty()) {
        prod = images[w[0]];
        for (size_t i = 1; i < w.size(); ++i) {
          prod = prod * images[w[i]];
        }
      }
      sum += c * std::move(prod);
    }
    return sum;
  }

}  // namespace repcount
