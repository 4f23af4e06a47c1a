#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace ntasep {

// Exact arithmetic everywhere: weights are integer Laurent polynomials,
// numeric cross-checks run over rationals. No floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  if (e < 0) {
    if (b == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    b = Rat(1) / b;
    e = -e;
  }
  Rat out(1);
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

// Parses "3" or "22/7". Decimals are rejected: rates are exact by contract.
inline Rat parse_fraction(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty fraction");
  if (s.find('.') != std::string::npos)
    throw std::invalid_argument("decimal rates are not accepted, use fractions like 1/3: " + s);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(Int(s));
      r.canonicalize();
      return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed fraction: " + s);
  }
}

inline std::string format_fraction(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Deterministic stream of small positive rationals (numerator and denominator
// in 1..7). Raw engine output is used instead of a distribution so the stream
// is identical across standard library implementations.
class SmallRatGen {
 public:
  explicit SmallRatGen(std::uint64_t seed) : eng_(seed) {}

  Rat next() {
    const unsigned long num = 1 + static_cast<unsigned long>(eng_() % 7);
    const unsigned long den = 1 + static_cast<unsigned long>(eng_() % 7);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ntasep
