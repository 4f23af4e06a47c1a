#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ntasep {

// Power product y_1^{e_1} ... y_N^{e_N}; exponents may be negative, since the
// hopping rates enter as x_a = y_a^{-1}. Variable indices are 1-based.
class Monomial {
 public:
  explicit Monomial(std::size_t vars) : e_(vars, 0) {}

  static Monomial unit(std::size_t vars) { return Monomial(vars); }

  static Monomial var(std::size_t vars, int a, std::int32_t power = 1) {
    Monomial m(vars);
    m.set_exponent(a, power);
    return m;
  }

  std::size_t vars() const { return e_.size(); }

  std::int32_t exponent(int a) const {
    check_index(a);
    return e_[static_cast<std::size_t>(a) - 1];
  }

  void set_exponent(int a, std::int32_t value) {
    check_index(a);
    e_[static_cast<std::size_t>(a) - 1] = value;
  }

  const std::vector<std::int32_t>& exponents() const { return e_; }

  long total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0L);
  }

  bool is_unit() const {
    for (auto x : e_)
      if (x != 0) return false;
    return true;
  }

  Monomial& operator*=(const Monomial& rhs) {
    if (rhs.e_.size() != e_.size())
      throw std::invalid_argument("monomial variable-count mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += rhs.e_[i];
    return *this;
  }

  Monomial operator*(const Monomial& rhs) const {
    Monomial out = *this;
    out *= rhs;
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_index(int a) const {
    if (a < 1 || static_cast<std::size_t>(a) > e_.size())
      throw std::out_of_range("monomial variable index out of range");
  }

  std::vector<std::int32_t> e_;
};

// Graded lexicographic: total degree first, then the exponent vector.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

// Term maps are keyed descending so iteration order equals print order.
struct MonoDescOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return graded_lex_less(b, a);
  }
};

}  // namespace ntasep
