#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ntasep/linalg.hpp"
#include "ntasep/poly_matrix.hpp"

namespace ntasep {

// Strictly positive hopping rates x_1..x_N; the Laurent variables are the
// inverses, y_a = 1/x_a.
struct RateAssignment {
  std::vector<Rat> x;

  explicit RateAssignment(std::vector<Rat> rates) : x(std::move(rates)) {
    for (const auto& v : x)
      if (v <= 0) throw std::invalid_argument("rates must be strictly positive");
  }

  std::size_t size() const { return x.size(); }

  std::vector<Rat> y_values() const {
    std::vector<Rat> y;
    y.reserve(x.size());
    for (const auto& v : x) y.push_back(Rat(1) / v);
    return y;
  }

  static RateAssignment ones(std::size_t n) {
    return RateAssignment(std::vector<Rat>(n, Rat(1)));
  }

  // x = (1, 2, 3, ...)
  static RateAssignment ramp(std::size_t n) {
    std::vector<Rat> x;
    for (std::size_t a = 1; a <= n; ++a) x.emplace_back(static_cast<unsigned long>(a));
    return RateAssignment(std::move(x));
  }
};

namespace detail {

// Shared transition scan. The master equation convention is d|P>/dt = M|P>,
// so columns are source configurations: a bond i with w_i < w_{i+1} moves
// probability out of column w into row swap(w) at rate x_{w_i}.
template <typename EmitOffDiag, typename EmitDiag>
void scan_transitions(const std::vector<Word>& words, EmitOffDiag&& off, EmitDiag&& diag) {
  const int L = words.empty() ? 0 : words.front().size();
  for (std::size_t col = 0; col < words.size(); ++col) {
    const Word& w = words[col];
    for (int i = 0; i < L; ++i) {
      const int inext = (i + 1) % L;
      const int a = w.letters[static_cast<std::size_t>(i)];
      const int b = w.letters[static_cast<std::size_t>(inext)];
      if (a >= b) continue;
      Word target = w;
      std::swap(target.letters[static_cast<std::size_t>(i)],
                target.letters[static_cast<std::size_t>(inext)]);
      off(col, static_cast<std::size_t>(word_index(words, target)), a);
      diag(col, a);
    }
  }
}

}  // namespace detail

// Sector-restricted generator M_m over the Laurent ring; rates appear as
// x_a = y_a^{-1}. `vars` may enlarge the ambient variable set so matrices of
// different levels can be mixed in one identity.
inline PolyMatrix build_generator(const Sector& m, std::size_t vars = 0) {
  require_basic(m, "build_generator");
  const auto words = enumerate_sector(m);
  const std::size_t nv = vars ? vars : static_cast<std::size_t>(m.parts() - 1);
  PolyMatrix gen(words, words, nv);
  detail::scan_transitions(
      words,
      [&](std::size_t col, std::size_t row, int a) {
        gen.add_entry(row, col, LaurentPoly::var(nv, a, -1));
      },
      [&](std::size_t col, int a) {
        gen.add_entry(col, col, -LaurentPoly::var(nv, a, -1));
      });
  return gen;
}

inline RatMatrix build_generator_at(const Sector& m, const RateAssignment& rates) {
  require_basic(m, "build_generator");
  if (rates.size() < static_cast<std::size_t>(m.parts() - 1))
    throw std::invalid_argument("build_generator: not enough rates for this sector");
  const auto words = enumerate_sector(m);
  RatMatrix gen(words, words);
  detail::scan_transitions(
      words,
      [&](std::size_t col, std::size_t row, int a) {
        gen.add_entry(row, col, rates.x[static_cast<std::size_t>(a) - 1]);
      },
      [&](std::size_t col, int a) {
        gen.add_entry(col, col, -rates.x[static_cast<std::size_t>(a) - 1]);
      });
  return gen;
}

// Entrywise evaluation at y values; substitution commutes with construction.
inline RatMatrix evaluate_matrix(const PolyMatrix& m, std::span<const Rat> y) {
  RatMatrix out(m.row_words(), m.col_words());
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    for (const auto& [c, p] : m.row(r))
      out.set_entry(r, static_cast<std::size_t>(c), p.eval(y));
  return out;
}

inline std::vector<Rat> evaluate_vector(const std::vector<LaurentPoly>& v,
                                        std::span<const Rat> y) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.eval(y));
  return out;
}

}  // namespace ntasep
