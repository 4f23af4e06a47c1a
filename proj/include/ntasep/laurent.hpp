#pragma once

#include <cctype>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ntasep/monomial.hpp"
#include "ntasep/scalars.hpp"

namespace ntasep {

// Multivariate Laurent polynomial in y_1..y_N with exact integer coefficients.
// Canonical form: no zero coefficients are stored, terms ordered by descending
// graded-lex, so equality is map equality and printing is deterministic.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Int, MonoDescOrder>;

  explicit LaurentPoly(std::size_t vars) : vars_(vars) {}

  static LaurentPoly zero(std::size_t vars) { return LaurentPoly(vars); }

  static LaurentPoly constant(std::size_t vars, Int c) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace(Monomial::unit(vars), std::move(c));
    return p;
  }

  static LaurentPoly one(std::size_t vars) { return constant(vars, 1); }

  static LaurentPoly monomial(Monomial m, Int c = Int(1)) {
    LaurentPoly p(m.vars());
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  static LaurentPoly var(std::size_t vars, int a, std::int32_t power = 1) {
    return monomial(Monomial::var(vars, a, power));
  }

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void add_term(const Monomial& m, const Int& c) {
    if (m.vars() != vars_)
      throw std::invalid_argument("laurent term variable-count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    check_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    check_vars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_vars(b);
    LaurentPoly out(a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  // Cheap forms used by the matrix kernels.
  LaurentPoly scaled(const Monomial& m, const Int& c = Int(1)) const {
    LaurentPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [mt, ct] : terms_) out.terms_.emplace(mt * m, ct * c);
    return out;
  }

  LaurentPoly& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Substitutes exact rational values for y_1..y_N. A zero value is only an
  // error if that variable actually occurs with a negative exponent.
  Rat eval(std::span<const Rat> y) const {
    if (y.size() != vars_)
      throw std::invalid_argument("eval: value vector has wrong length");
    Rat out(0);
    for (const auto& [m, c] : terms_) {
      Rat term(c);
      for (std::size_t i = 0; i < vars_; ++i) {
        const std::int32_t e = m.exponents()[i];
        if (e == 0) continue;
        if (y[i] == 0 && e < 0)
          throw std::domain_error("eval: zero rate with a negative exponent present");
        term *= rat_pow(y[i], e);
      }
      out += term;
    }
    return out;
  }

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text, std::size_t vars);

 private:
  void check_vars(const LaurentPoly& rhs) const {
    if (rhs.vars_ != vars_)
      throw std::invalid_argument("laurent variable-count mismatch");
  }

  std::size_t vars_;
  TermMap terms_;
};

// Text form: terms in descending graded-lex order, "*" separators, explicit
// "^" powers; unit coefficients and exponents are omitted ("y1^2+y1*y2+y2^2").
inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    bool printed = false;
    if (abs_c != 1 || m.is_unit()) {
      os << abs_c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < m.vars(); ++i) {
      const std::int32_t e = m.exponents()[i];
      if (e == 0) continue;
      if (printed) os << "*";
      os << "y" << (i + 1);
      if (e != 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& s, std::size_t vars) : s_(s), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly out(vars_);
    skip_ws();
    if (pos_ == s_.size()) throw std::invalid_argument("empty polynomial text");
    bool neg = consume_sign();
    for (;;) {
      auto [m, c] = parse_term();
      out.add_term(m, neg ? Int(-c) : c);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] == '+') {
        ++pos_;
        neg = false;
      } else if (s_[pos_] == '-') {
        ++pos_;
        neg = true;
      } else {
        fail("expected '+' or '-'");
      }
      skip_ws();
    }
    return out;
  }

 private:
  // term := atom ('*' atom)*, atom := integer | 'y'<idx>['^'<exp>]
  std::pair<Monomial, Int> parse_term() {
    Monomial m(vars_);
    Int coef(1);
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        coef *= Int(read_integer());
      } else if (pos_ < s_.size() && s_[pos_] == 'y') {
        ++pos_;
        const long idx = read_long("variable index");
        if (idx < 1 || static_cast<std::size_t>(idx) > vars_)
          fail("variable index out of range");
        long expo = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          bool en = false;
          if (pos_ < s_.size() && s_[pos_] == '-') {
            en = true;
            ++pos_;
          }
          expo = read_long("exponent");
          if (en) expo = -expo;
        }
        m.set_exponent(static_cast<int>(idx),
                       m.exponent(static_cast<int>(idx)) + static_cast<std::int32_t>(expo));
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {m, coef};
  }

  std::string read_integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  long read_long(const char* what) {
    try {
      return std::stol(read_integer());
    } catch (const std::exception&) {
      fail(what);
    }
    return 0;
  }

  bool consume_sign() {
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (pos_ < s_.size() && s_[pos_] == '+') ++pos_;
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos_) + ": " + why + " in \"" + s_ + "\"");
  }

  const std::string& s_;
  std::size_t vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t vars) {
  return detail::PolyParser(text, vars).run();
}

}  // namespace ntasep
