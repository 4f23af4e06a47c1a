#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntasep/fock.hpp"
#include "ntasep/generator.hpp"
#include "ntasep/parallel.hpp"
#include "ntasep/poly_matrix.hpp"

namespace ntasep {

namespace detail {

constexpr int kMaxComponents = 15;

struct TraceHit {
  FockState fixed_state;
  Monomial coefficient;
};

// Searches start states in [0, L]^{N-1} for the unique closed trajectory of
// the entry word, applied right to left. States are only bounded at the
// start: along the trajectory a component may legitimately pass L.
inline std::optional<TraceHit> trace_search(int level, const Word& upper,
                                            const Word& lower, std::size_t vars) {
  const int comps = level - 1;
  const int L = upper.size();
  if (comps > kMaxComponents)
    throw std::invalid_argument("trace_word: species level too large");

  std::array<std::int16_t, kMaxComponents> start{};
  std::array<std::int16_t, kMaxComponents> cur{};
  std::array<std::int32_t, kMaxComponents + 1> expo{};

  for (;;) {
    cur = start;
    expo.fill(0);
    bool alive = true;
    for (int i = L - 1; i >= 0; --i) {
      const int code = apply_entry_inplace(level, upper.letters[static_cast<std::size_t>(i)],
                                           lower.letters[static_cast<std::size_t>(i)], cur.data());
      if (code < 0) {
        alive = false;
        break;
      }
      if (code > 0) ++expo[static_cast<std::size_t>(code) - 1];
    }
    if (alive && cur == start) {
      Monomial coef(vars);
      for (int a = 1; a <= level; ++a)
        if (expo[static_cast<std::size_t>(a) - 1])
          coef.set_exponent(a, expo[static_cast<std::size_t>(a) - 1]);
      FockState fixed;
      fixed.mu.assign(start.begin(), start.begin() + comps);
      return TraceHit{std::move(fixed), std::move(coef)};
    }
    // next candidate
    int pos = 0;
    while (pos < comps && start[static_cast<std::size_t>(pos)] == L) {
      start[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == comps) return std::nullopt;
    ++start[static_cast<std::size_t>(pos)];
  }
}

}  // namespace detail

struct TraceResult {
  LaurentPoly value;
  std::optional<FockState> fixed_state;  // present iff the trace is nonzero
};

// Tr(a_{j_1 k_1} ... a_{j_L k_L}) at species level N. Zero unless the upper
// word lies in a basic sector m over N+1 letters and the lower word lies in
// the merged sector m' over N letters; otherwise the value is the monomial
// carried by the unique closed trajectory, or zero when none closes.
inline TraceResult trace_word_detailed(int level, const Word& upper, const Word& lower,
                                       std::size_t vars = 0) {
  if (level < 1) throw std::invalid_argument("trace_word: level must be >= 1");
  if (upper.size() != lower.size())
    throw std::invalid_argument("trace_word: words must have equal length");
  const std::size_t nv = vars ? vars : static_cast<std::size_t>(level);

  Word up = upper;
  up.alphabet = level + 1;
  Word low = lower;
  low.alphabet = level;
  TraceResult zero{LaurentPoly::zero(nv), std::nullopt};
  for (auto l : up.letters)
    if (l < 1 || l > level + 1) return zero;
  for (auto l : low.letters)
    if (l < 1 || l > level) return zero;

  const Sector m = sector_of(up);
  if (!m.is_basic()) return zero;
  if (!(sector_of(low) == merge_last(m))) return zero;

  auto hit = detail::trace_search(level, up, low, nv);
  if (!hit) return zero;
  return TraceResult{LaurentPoly::monomial(hit->coefficient), std::move(hit->fixed_state)};
}

inline LaurentPoly trace_word(int level, const Word& upper, const Word& lower,
                              std::size_t vars = 0) {
  return trace_word_detailed(level, upper, lower, vars).value;
}

// psi_m: rows indexed by the sector m, columns by merge_last(m); entry (j,k)
// is the trace of the corresponding entry word.
inline PolyMatrix conjugation_matrix(const Sector& m, std::size_t vars = 0) {
  require_basic(m, "conjugation_matrix");
  if (m.parts() < 2)
    throw std::invalid_argument("conjugation_matrix: sector needs at least two parts");
  const int level = m.parts() - 1;
  const std::size_t nv = vars ? vars : static_cast<std::size_t>(level);
  const auto rows = enumerate_sector(m);
  const auto cols = enumerate_sector(merge_last(m));

  std::vector<std::vector<std::pair<int, Monomial>>> found(rows.size());
  parallel_for(rows.size(), [&](std::size_t r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto hit = detail::trace_search(level, rows[r], cols[c], nv);
      if (hit) found[r].emplace_back(static_cast<int>(c), std::move(hit->coefficient));
    }
  });

  PolyMatrix psi(rows, cols, nv);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, mono] : found[r])
      psi.set_entry(r, static_cast<std::size_t>(c), LaurentPoly::monomial(mono));
  return psi;
}

namespace detail {

// Shared by both construction routes: the stationary vector is the product of
// conjugation matrices down to the one-species level, where each weight is
// y_1^{m_2} (the level-1 column is (1, y_1)).
template <typename PsiBuilder>
std::vector<LaurentPoly> stationary_product(const Sector& m, PsiBuilder&& build_psi) {
  require_basic(m, "stationary");
  const std::size_t nv = static_cast<std::size_t>(m.parts() - 1);
  if (m.parts() == 1) return {LaurentPoly::one(std::max<std::size_t>(nv, 1))};

  std::vector<Sector> chain{m};
  while (chain.back().parts() > 2) chain.push_back(merge_last(chain.back()));

  // level-1 vector over the two-letter sector (m_1, L - m_1)
  const Sector& base = chain.back();
  const auto base_words = enumerate_sector(base);
  std::vector<LaurentPoly> v(base_words.size(),
                             LaurentPoly::var(nv, 1, base.counts[1]));

  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    PolyMatrix psi = build_psi(chain[i], nv);
    v = psi.apply(v);
  }
  return v;
}

}  // namespace detail

// Unnormalized stationary weights over enumerate_sector(m), built through the
// trace route. All coefficients come out as nonnegative integers.
inline std::vector<LaurentPoly> stationary_mpa(const Sector& m) {
  return detail::stationary_product(
      m, [](const Sector& s, std::size_t nv) { return conjugation_matrix(s, nv); });
}

}  // namespace ntasep
