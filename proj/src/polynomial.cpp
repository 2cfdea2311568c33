#include "repcount/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repcount {

  namespace {

    // Geometric buckets (Yan). Each bucket is kept in ascending order so the
    // leading candidate is at the back; bucket i holds at most 8 * 4^i terms.
    class GeoBucket {
     public:
      explicit GeoBucket(MonomialOrder ord) : ord_(ord) {}

      void add(std::vector<Term>&& ascending) {
        if (ascending.empty()) {
          return;
        }
        size_t i = 0;
        while (capacity(i) < ascending.size()) {
          ++i;
        }
        std::vector<Term> carry = std::move(ascending);
        for (;; ++i) {
          if (i >= buckets_.size()) {
            buckets_.resize(i + 1);
          }
          if (buckets_[i].empty()) {
            buckets_[i] = std::move(carry);
            return;
          }
          std::vector<Term> merged = merge(buckets_[i], carry);
          buckets_[i].clear();
          if (merged.size() <= capacity(i)) {
            buckets_[i] = std::move(merged);
            return;
          }
          carry = std::move(merged);
        }
      }

      bool pop_leading(Term& out) {
        for (;;) {
          int best = -1;
          for (size_t i = 0; i < buckets_.size(); ++i) {
            if (buckets_[i].empty()) {
              continue;
            }
            if (best < 0
                || ord_.compare(buckets_[i].back().monomial,
                                buckets_[best].back().monomial)
                       > 0) {
              best = static_cast<int>(i);
            }
          }
          if (best < 0) {
            return false;
          }
          out = std::move(buckets_[best].back());
          buckets_[best].pop_back();
          for (size_t i = 0; i < buckets_.size(); ++i) {
            if (!buckets_[i].empty()
                && buckets_[i].back().monomial == out.monomial) {
              out.coeff += buckets_[i].back().coeff;
              buckets_[i].pop_back();
            }
          }
          if (!out.coeff.is_zero()) {
            return true;
          }
        }
      }

     private:
      static size_t capacity(size_t i) { return size_t{8} << (2 * i); }

      std::vector<Term> merge(std::vector<Term>& a, std::vector<Term>& b) const {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
          int c = ord_.compare(a[i].monomial, b[j].monomial);
          if (c < 0) {
            out.push_back(std::move(a[i++]));
          } else if (c > 0) {
            out.push_back(std::move(b[j++]));
          } else {
            a[i].coeff += b[j].coeff;
            if (!a[i].coeff.is_zero()) {
              out.push_back(std::move(a[i]));
            }
            ++i;
            ++j;
          }
        }
        for (; i < a.size(); ++i) {
          out.push_back(std::move(a[i]));
        }
        for (; j < b.size(); ++j) {
          out.push_back(std::move(b[j]));
        }
        return out;
      }

      MonomialOrder                  ord_;
      std::vector<std::vector<Term>> buckets_;
    };

    // c * m * terms[from..], emitted in ascending order.
    std::vector<Term> scaled_ascending(std::vector<Term> const& terms,
                                       size_t                   from,
                                       Monomial const&          m,
                                       Rational const&          c) {
      std::vector<Term> out(terms.size() - from);
      if (out.empty()) {
        return out;
      }
      size_t count = out.size();
      // reversed source: terms[size-1], terms[size-2], ..., terms[from]
      Monomial::multiply_batch(&terms.back().monomial,
                               -static_cast<ptrdiff_t>(sizeof(Term)),
                               count,
                               m,
                               &out.front().monomial,
                               sizeof(Term));
      for (size_t k = 0; k < count; ++k) {
        out[k].coeff = terms[terms.size() - 1 - k].coeff * c;
      }
      return out;
    }

    std::vector<Term> merge_descending(std::vector<Term> const& a,
                                       std::vector<Term> const& b,
                                       MonomialOrder            ord,
                                       bool                     subtract) {
      std::vector<Term> out;
      out.reserve(a.size() + b.size());
      size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        int c = ord.compare(a[i].monomial, b[j].monomial);
        if (c > 0) {
          out.push_back(a[i++]);
        } else if (c < 0) {
          out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
          ++j;
        } else {
          Rational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
          if (!s.is_zero()) {
            out.push_back({a[i].monomial, std::move(s)});
          }
          ++i;
          ++j;
        }
      }
      for (; i < a.size(); ++i) {
        out.push_back(a[i]);
      }
      for (; j < b.size(); ++j) {
        out.push_back(subtract ? Term{b[j].monomial, -b[j].coeff} : b[j]);
      }
      return out;
    }

  }  // namespace

  Polynomial::Polynomial(Rational const& c, MonomialOrder order) : order_(order) {
    if (!c.is_zero()) {
      terms_.push_back({Monomial(), c});
    }
  }

  Polynomial Polynomial::variable(size_t index, MonomialOrder order) {
    return monomial(Monomial::variable(index), Rational(1), order);
  }

  Polynomial Polynomial::monomial(Monomial const& m,
                                  Rational const& c,
                                  MonomialOrder   order) {
    Polynomial p(order);
    if (!c.is_zero()) {
      p.terms_.push_back({m, c});
    }
    return p;
  }

  Polynomial Polynomial::from_terms(std::vector<Term> terms, MonomialOrder order) {
    std::sort(terms.begin(), terms.end(), [&](Term const& a, Term const& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) {
          out.pop_back();
        }
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) {
      out.pop_back();
    }
    return from_sorted(std::move(out), order);
  }

  Polynomial Polynomial::from_sorted(std::vector<Term> terms, MonomialOrder order) {
    Polynomial p(order);
    p.terms_ = std::move(terms);
    return p;
  }

  unsigned Polynomial::total_degree() const noexcept {
    unsigned d = 0;
    for (auto const& t : terms_) {
      d = std::max(d, t.monomial.degree());
    }
    return d;
  }

  Polynomial Polynomial::in_order(MonomialOrder order) const {
    if (order == order_) {
      return *this;
    }
    std::vector<Term> terms = terms_;
    std::sort(terms.begin(), terms.end(), [&](Term const& a, Term const& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
    return from_sorted(std::move(terms), order);
  }

  bool Polynomial::uses_variable(size_t index) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [&](Term const& t) {
      return t.monomial[index] != 0;
    });
  }

  Rational Polynomial::coefficient(Monomial const& m) const {
    for (auto const& t : terms_) {
      if (t.monomial == m) {
        return t.coeff;
      }
    }
    return Rational();
  }

  Rational Polynomial::evaluate(std::span<Rational const> point) const {
    Rational total;
    for (auto const& t : terms_) {
      Rational v = t.coeff;
      for (size_t i = 0, end = t.monomial.support_end(); i < end; ++i) {
        unsigned e = t.monomial[i];
        if (e == 0) {
          continue;
        }
        if (i >= point.size()) {
          throw std::out_of_range("evaluation point has too few coordinates");
        }
        for (unsigned k = 0; k < e; ++k) {
          v *= point[i];
        }
      }
      total += v;
    }
    return total;
  }

  Polynomial& Polynomial::operator+=(Polynomial const& rhs) {
    if (rhs.order_ != order_) {
      return *this += rhs.in_order(order_);
    }
    terms_ = merge_descending(terms_, rhs.terms_, order_, false);
    return *this;
  }

  Polynomial& Polynomial::operator-=(Polynomial const& rhs) {
    if (rhs.order_ != order_) {
      return *this -= rhs.in_order(order_);
    }
    terms_ = merge_descending(terms_, rhs.terms_, order_, true);
    return *this;
  }

  Polynomial& Polynomial::operator*=(Polynomial const& rhs) {
    *this = *this * rhs;
    return *this;
  }

  Polynomial& Polynomial::operator*=(Rational const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) {
      t.coeff *= c;
    }
    return *this;
  }

  Polynomial operator*(Polynomial const& lhs, Polynomial const& rhs) {
    MonomialOrder ord = lhs.order_;
    if (lhs.is_zero() || rhs.is_zero()) {
      return Polynomial(ord);
    }
    Polynomial const  r     = rhs.in_order(ord);
    Polynomial const& small = lhs.size() <= r.size() ? lhs : r;
    Polynomial const& large = lhs.size() <= r.size() ? r : lhs;
    if (small.size() == 1) {
      return large.mul_term(small.terms_[0].monomial, small.terms_[0].coeff);
    }
    GeoBucket bucket(ord);
    for (auto const& t : small.terms_) {
      bucket.add(scaled_ascending(large.terms_, 0, t.monomial, t.coeff));
    }
    std::vector<Term> out;
    Term              t;
    while (bucket.pop_leading(t)) {
      out.push_back(std::move(t));
    }
    return Polynomial::from_sorted(std::move(out), ord);
  }

  Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) {
      t.coeff = -t.coeff;
    }
    return p;
  }

  Polynomial Polynomial::mul_term(Monomial const& m, Rational const& c) const {
    if (c.is_zero() || terms_.empty()) {
      return Polynomial(order_);
    }
    std::vector<Term> out(terms_.size());
    Monomial::multiply_batch(&terms_.front().monomial,
                             static_cast<ptrdiff_t>(sizeof(Term)),
                             terms_.size(),
                             m,
                             &out.front().monomial,
                             sizeof(Term));
    for (size_t i = 0; i < terms_.size(); ++i) {
      out[i].coeff = terms_[i].coeff * c;
    }
    // multiplication by a monomial preserves any monomial order
    return from_sorted(std::move(out), order_);
  }

  Polynomial Polynomial::primitive() const {
    if (terms_.empty()) {
      return *this;
    }
    bool     small   = true;
    uint64_t num_gcd = 0;
    uint64_t den_lcm = 1;
    for (auto const& t : terms_) {
      if (!t.coeff.is_small()) {
        small = false;
        break;
      }
      mpz_class n = t.coeff.numerator();
      mpz_class d = t.coeff.denominator();
      uint64_t  an = static_cast<uint64_t>(std::abs(n.get_si()));
      uint64_t  ad = static_cast<uint64_t>(d.get_si());
      num_gcd      = std::gcd(num_gcd, an);
      uint64_t g   = std::gcd(den_lcm, ad);
      unsigned __int128 l = static_cast<unsigned __int128>(den_lcm / g) * ad;
      if (l > static_cast<unsigned __int128>(INT64_MAX)) {
        small = false;
        break;
      }
      den_lcm = static_cast<uint64_t>(l);
    }
    Rational scale;
    if (small) {
      scale = Rational(static_cast<int64_t>(den_lcm), static_cast<int64_t>(num_gcd));
    } else {
      mpz_class ng = 0;
      mpz_class dl = 1;
      for (auto const& t : terms_) {
        mpz_class n = t.coeff.numerator();
        mpz_class d = t.coeff.denominator();
        mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), d.get_mpz_t());
      }
      scale = Rational(mpq_class(dl, ng));
    }
    if (terms_.front().coeff.sign() < 0) {
      scale = -scale;
    }
    Polynomial p = *this;
    if (!scale.is_one()) {
      p *= scale;
    }
    return p;
  }

  Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_.front().coeff.is_one()) {
      return *this;
    }
    Polynomial p = *this;
    p *= terms_.front().coeff.inverse();
    return p;
  }

  Polynomial Polynomial::sign_normalized() const {
    if (!terms_.empty() && terms_.front().coeff.sign() < 0) {
      return -*this;
    }
    return *this;
  }

  size_t Polynomial::hash() const {
    // Order-independent: sum of per-term hashes.
    size_t h = terms_.size();
    for (auto const& t : terms_) {
      size_t th = t.monomial.hash() ^ (t.coeff.hash() * 0x9E3779B97F4A7C15ULL);
      h += th * 0xbf58476d1ce4e5b9ULL + (th >> 31);
    }
    return h;
  }

  bool operator==(Polynomial const& a, Polynomial const& b) {
    if (a.terms_.size() != b.terms_.size()) {
      return false;
    }
    if (a.order_ != b.order_) {
      return a == b.in_order(a.order_);
    }
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial)
          || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  Term leading_term(Polynomial const& f, MonomialOrder ord) {
    if (f.is_zero()) {
      throw std::domain_error("leading term of the zero polynomial");
    }
    if (f.order() == ord) {
      return f.leading();
    }
    auto const& terms = f.terms();
    size_t      best  = 0;
    for (size_t i = 1; i < terms.size(); ++i) {
      if (ord.compare(terms[i].monomial, terms[best].monomial) > 0) {
        best = i;
      }
    }
    return terms[best];
  }

  void DivisorSet::add(Polynomial const* p) {
    if (p->is_zero()) {
      throw std::invalid_argument("zero divisor polynomial");
    }
    if (p->order() != order_) {
      throw std::invalid_argument("divisor order does not match the set");
    }
    polys_.push_back(p);
    leads_.push_back(p->lm());
  }

  void DivisorSet::clear() {
    polys_.clear();
    leads_.clear();
  }

  size_t DivisorSet::find(Monomial const& m) const {
    if (leads_.empty()) {
      return 0;
    }
    return simd::active_kernels().find_divisor(
        leads_.front().data(), sizeof(Monomial), leads_.size(), m.data());
  }

  Polynomial normal_form(Polynomial const& f,
                         DivisorSet const& divisors,
                         Budget const&     budget) {
    MonomialOrder const ord = divisors.order();
    Polynomial const    g   = f.in_order(ord);
    if (divisors.size() == 0 || g.is_zero()) {
      return g;
    }
    GeoBucket bucket(ord);
    {
      std::vector<Term> asc(g.terms().rbegin(), g.terms().rend());
      bucket.add(std::move(asc));
    }
    std::vector<Term> remainder;
    Term              t;
    size_t            steps = 0;
    while (bucket.pop_leading(t)) {
      size_t k = divisors.find(t.monomial);
      if (k == divisors.size()) {
        remainder.push_back(std::move(t));
        continue;
      }
      if ((++steps & 1023) == 0) {
        budget.check_time();
      }
      Polynomial const& d = divisors[k];
      Monomial          m = d.lm().quotient_of(t.monomial);
      Rational          q = -(t.coeff / d.lc());
      bucket.add(scaled_ascending(d.terms(), 1, m, q));
    }
    return Polynomial::from_sorted(std::move(remainder), ord);
  }

  Polynomial reduce(Polynomial const&           f,
                    std::span<Polynomial const> divisors,
                    MonomialOrder               ord,
                    Budget const&               budget) {
    std::vector<Polynomial> converted;
    converted.reserve(divisors.size());
    for (auto const& d : divisors) {
      if (d.is_zero()) {
        throw std::invalid_argument("reduce: zero divisor");
      }
      converted.push_back(d.in_order(ord));
    }
    DivisorSet set(ord);
    for (auto const& d : converted) {
      set.add(&d);
    }
    return normal_form(f, set, budget);
  }

  Polynomial s_polynomial(Polynomial const& f,
                          Polynomial const& g,
                          MonomialOrder     ord) {
    Polynomial const a  = f.in_order(ord);
    Polynomial const b  = g.in_order(ord);
    Monomial const   l  = a.lm().lcm(b.lm());
    Polynomial       sa = a.mul_term(a.lm().quotient_of(l), a.lc().inverse());
    Polynomial       sb = b.mul_term(b.lm().quotient_of(l), b.lc().inverse());
    return sa - sb;
  }

  std::optional<Polynomial> divide_exact(Polynomial const& f,
                                         Polynomial const& g) {
    if (g.is_zero()) {
      throw std::domain_error("division by the zero polynomial");
    }
    MonomialOrder const ord = MonomialOrder::grevlex();
    Polynomial          rem = f.in_order(ord);
    Polynomial const    d   = g.in_order(ord);
    std::vector<Term>   quotient;
    while (!rem.is_zero()) {
      if (!d.lm().divides(rem.lm())) {
        return std::nullopt;
      }
      Monomial m = d.lm().quotient_of(rem.lm());
      Rational c = rem.lc() / d.lc();
      rem -= d.mul_term(m, c);
      quotient.push_back({m, c});
    }
    // quotient terms were produced in decreasing order
    return Polynomial::from_sorted(std::move(quotient), ord);
  }

  Polynomial remap_variables(Polynomial const&       f,
                             std::span<size_t const> new_position,
                             MonomialOrder           ord) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (auto const& t : f.terms()) {
      Monomial m;
      for (size_t i = 0, end = t.monomial.support_end(); i < end; ++i) {
        unsigned e = t.monomial[i];
        if (e == 0) {
          continue;
        }
        size_t target = i < new_position.size() ? new_position[i] : i;
        m.set(target, m[target] + e);
      }
      terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(std::move(terms), ord);
  }

  std::string to_string(Monomial const& m, Ring const& ring) {
    std::string out;
    for (size_t i = 0, end = m.support_end(); i < end; ++i) {
      if (m[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += '*';
      }
      out += i < ring.size() ? ring.name(i) : "v" + std::to_string(i);
      if (m[i] > 1) {
        out += '^' + std::to_string(m[i]);
      }
    }
    return out.empty() ? "1" : out;
  }

  std::string to_string(Polynomial const& f, Ring const& ring) {
    if (f.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& t : f.terms()) {
      Rational c   = t.coeff;
      bool     neg = c.sign() < 0;
      if (neg) {
        c = -c;
      }
      if (first) {
        if (neg) {
          os << '-';
        }
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (t.monomial.is_one()) {
        os << c;
      } else {
        if (!c.is_one()) {
          os << c << '*';
        }
        os << to_string(t.monomial, ring);
      }
    }
    return os.str();
  }

}  // namespace repcount

namespace repcount {

  namespace {
    class PolyParser {
     public:
      PolyParser(std::string_view text, Ring const& ring, MonomialOrder ord)
          : text_(text), ring_(ring), ord_(ord) {}

      Polynomial parse() {
        std::vector<Term> terms;
        skip();
        bool first = true;
        while (pos_ < text_.size()) {
          bool neg = false;
          if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
            skip();
          } else if (!first) {
            fail("expected '+' or '-'");
          }
          first = false;
          Term t = term();
          if (neg) {
            t.coeff = -t.coeff;
          }
          terms.push_back(std::move(t));
          skip();
        }
        if (first) {
          fail("empty polynomial");
        }
        return Polynomial::from_terms(std::move(terms), ord_);
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("polynomial parse error at offset "
                                    + std::to_string(pos_) + ": " + what);
      }
      char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
      void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }
      std::string digits() {
        size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      Term term() {
        Term t{Monomial(), Rational(1)};
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          std::string num = digits();
          if (peek() == '/') {
            ++pos_;
            std::string den = digits();
            if (den.empty()) {
              fail("missing denominator");
            }
            num += "/" + den;
          }
          t.coeff     = Rational::parse(num);
          need_factor = false;
          skip();
          if (peek() == '*') {
            ++pos_;
            skip();
            need_factor = true;
          } else {
            return t;
          }
        }
        (void) need_factor;
        for (;;) {
          size_t   var   = variable();
          unsigned power = 1;
          skip();
          if (peek() == '^') {
            ++pos_;
            skip();
            std::string e = digits();
            if (e.empty()) {
              fail("missing exponent");
            }
            power = static_cast<unsigned>(std::stoul(e));
            skip();
          }
          t.monomial = t.monomial * Monomial::variable(var, power);
          if (peek() != '*') {
            return t;
          }
          ++pos_;
          skip();
        }
      }

      size_t variable() {
        size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek()))) {
          fail("expected a variable name");
        }
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
          ++pos_;
        }
        if (peek() == '[') {
          while (pos_ < text_.size() && text_[pos_] != ']') {
            ++pos_;
          }
          if (peek() != ']') {
            fail("unterminated '['");
          }
          ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
        for (size_t i = 0; i < ring_.size(); ++i) {
          if (ring_.name(i) == name) {
            return i;
          }
        }
        fail("unknown variable '" + name + "'");
      }

      std::string_view text_;
      Ring const&      ring_;
      MonomialOrder    ord_;
      size_t           pos_ = 0;
    };
  }  // namespace

  Polynomial parse_polynomial(std::string_view text,
                              Ring const&      ring,
                              MonomialOrder    ord) {
    return PolyParser(text, ring, ord).parse();
  }

}  // namespace repcount
