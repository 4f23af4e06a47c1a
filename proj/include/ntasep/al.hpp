#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntasep/mpa.hpp"

namespace ntasep {

// Upper line of the two-line picture: black boxes receive species 1..N,
// white boxes receive N+1.
struct BoxLine {
  std::vector<bool> white;

  int size() const { return static_cast<int>(white.size()); }
  int white_count() const {
    return static_cast<int>(std::count(white.begin(), white.end(), true));
  }
};

inline BoxLine parse_boxline(const std::string& text) {
  BoxLine c;
  for (char ch : text) {
    if (ch == 'B' || ch == 'b')
      c.white.push_back(false);
    else if (ch == 'W' || ch == 'w')
      c.white.push_back(true);
    else
      throw std::invalid_argument("box line must consist of B/W: " + text);
  }
  if (c.white.empty()) throw std::invalid_argument("empty box line");
  return c;
}

inline std::string format_boxline(const BoxLine& c) {
  std::string s;
  s.reserve(c.white.size());
  for (bool w : c.white) s.push_back(w ? 'W' : 'B');
  return s;
}

// Arrow from a lower-line occurrence at `from` to the black box `to` it
// claimed. `wraps` marks the fallback to the rightmost free box, which
// travels left through the periodic boundary.
struct Arrow {
  int from = 0;  // 1-based lower position
  int to = 0;    // 1-based upper position
  int value = 0; // species 1..N-1
  bool wraps = false;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowDiagram {
  std::vector<Arrow> arrows;

  // Vertical line i sits between sites i-1 and i. A non-wrapping arrow
  // (to <= from) covers lines to+1..from; a wrapping arrow travels leftward
  // through line 1, covering {1..from} and {to+1..L}.
  static bool crosses(const Arrow& a, int line) {
    if (!a.wraps) return a.to < line && line <= a.from;
    return line <= a.from || line > a.to;
  }

  // Smallest arrow value crossing the given line, or 0 when none does.
  int min_value_crossing(int line) const {
    int best = 0;
    for (const auto& a : arrows)
      if (crosses(a, line) && (best == 0 || a.value < best)) best = a.value;
    return best;
  }
};

struct ALResult {
  Word upper;
  ArrowDiagram diagram;
  Monomial weight;
};

namespace detail {

// Processing order hook for the occurrences of one species; the contract
// order is ascending position. Used by tests probing order sensitivity.
using OccurrenceOrder = std::vector<std::vector<int>>;  // per species 1..N-1, 1-based positions

inline ALResult al_construct_impl(const BoxLine& c, const Word& lower,
                                  const OccurrenceOrder* order, std::size_t vars) {
  const int L = c.size();
  if (L != lower.size())
    throw std::invalid_argument("al_construct: box line and word lengths differ");
  const int level = lower.alphabet;  // N
  const Sector lower_sector = sector_of(lower);
  if (!lower_sector.is_basic())
    throw std::invalid_argument("al_construct: lower word is not in a basic sector");

  int lighter = 0;  // particles of species < N
  for (int nu = 1; nu <= level - 1; ++nu) lighter += lower_sector.counts[static_cast<std::size_t>(nu) - 1];
  const int blacks = L - c.white_count();
  if (blacks - lighter < 1)
    throw std::invalid_argument("al_construct: box line leaves no room for species " +
                                std::to_string(level));
  if (c.white_count() < 1)
    throw std::invalid_argument("al_construct: box line has no white boxes");

  const std::size_t nv = vars ? vars : static_cast<std::size_t>(level);
  std::vector<int> placed(static_cast<std::size_t>(L) + 1, 0);  // upper line, 1-based
  std::vector<bool> free_black(static_cast<std::size_t>(L) + 1, false);
  for (int i = 1; i <= L; ++i) free_black[static_cast<std::size_t>(i)] = !c.white[static_cast<std::size_t>(i) - 1];

  ArrowDiagram diagram;
  for (int nu = 1; nu <= level - 1; ++nu) {
    std::vector<int> positions;
    if (order) {
      positions = (*order)[static_cast<std::size_t>(nu) - 1];
    } else {
      for (int i = 1; i <= L; ++i)
        if (lower.at(i) == nu) positions.push_back(i);
    }
    for (int p : positions) {
      int target = 0;
      for (int q = p; q >= 1; --q)
        if (free_black[static_cast<std::size_t>(q)]) {
          target = q;
          break;
        }
      bool wraps = false;
      if (target == 0) {
        for (int q = L; q > p; --q)
          if (free_black[static_cast<std::size_t>(q)]) {
            target = q;
            break;
          }
        wraps = true;
      }
      if (target == 0)
        throw std::logic_error("al_construct: no free black box; counts are inconsistent");
      free_black[static_cast<std::size_t>(target)] = false;
      placed[static_cast<std::size_t>(target)] = nu;
      diagram.arrows.push_back(Arrow{p, target, nu, wraps});
    }
  }
  for (int i = 1; i <= L; ++i)
    if (free_black[static_cast<std::size_t>(i)]) placed[static_cast<std::size_t>(i)] = level;
  for (int i = 1; i <= L; ++i)
    if (c.white[static_cast<std::size_t>(i) - 1]) placed[static_cast<std::size_t>(i)] = level + 1;

  Word upper;
  upper.alphabet = level + 1;
  upper.letters.reserve(static_cast<std::size_t>(L));
  for (int i = 1; i <= L; ++i)
    upper.letters.push_back(static_cast<std::uint8_t>(placed[static_cast<std::size_t>(i)]));

  // weight: each white site contributes y_l for the minimal arrow value
  // crossing its vertical line, y_N when no arrow crosses
  Monomial weight(nv);
  for (int i = 1; i <= L; ++i) {
    if (!c.white[static_cast<std::size_t>(i) - 1]) continue;
    const int v = diagram.min_value_crossing(i);
    const int a = v == 0 ? level : v;
    weight.set_exponent(a, weight.exponent(a) + 1);
  }
  return ALResult{std::move(upper), std::move(diagram), std::move(weight)};
}

}  // namespace detail

// Builds the upper configuration F(c, k) and its weight W: species are
// processed in increasing value, occurrences in ascending position; each
// occurrence claims the nearest free black box weakly to its left, falling
// back to the rightmost free black box across the boundary.
inline ALResult al_construct(const BoxLine& c, const Word& lower, std::size_t vars = 0) {
  return detail::al_construct_impl(c, lower, nullptr, vars);
}

namespace detail {

template <typename Visit>
void for_each_boxline(int length, int whites, Visit&& visit) {
  // combinations of white positions in lexicographic order
  std::vector<int> pos(static_cast<std::size_t>(whites));
  for (int i = 0; i < whites; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    BoxLine c;
    c.white.assign(static_cast<std::size_t>(length), false);
    for (int p : pos) c.white[static_cast<std::size_t>(p) - 1] = true;
    visit(c);
    int i = whites - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == length - (whites - 1 - i)) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < whites; ++j)
      pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace detail

// The conjugation matrix assembled by the graphical route: for each lower
// word k, every box line contributes its weight at row F(c, k). For fixed k
// the map c -> F(c, k) is injective (the white boxes are readable from F),
// so every entry is a single monomial.
inline PolyMatrix psi_al(const Sector& m, std::size_t vars = 0) {
  require_basic(m, "psi_al");
  if (m.parts() < 2) throw std::invalid_argument("psi_al: sector needs at least two parts");
  const int level = m.parts() - 1;
  const std::size_t nv = vars ? vars : static_cast<std::size_t>(level);
  const auto rows = enumerate_sector(m);
  const auto cols = enumerate_sector(merge_last(m));
  const int whites = m.counts.back();

  std::vector<std::vector<std::pair<int, Monomial>>> found(cols.size());
  parallel_for(cols.size(), [&](std::size_t cidx) {
    detail::for_each_boxline(m.length(), whites, [&](const BoxLine& c) {
      ALResult res = detail::al_construct_impl(c, cols[cidx], nullptr, nv);
      found[cidx].emplace_back(word_index(rows, res.upper), std::move(res.weight));
    });
  });

  PolyMatrix psi(rows, cols, nv);
  for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
    for (auto& [r, mono] : found[cidx]) {
      if (psi.entry(static_cast<std::size_t>(r), cidx))
        throw std::logic_error("psi_al: two box lines produced the same configuration");
      psi.set_entry(static_cast<std::size_t>(r), cidx, LaurentPoly::monomial(mono));
    }
  return psi;
}

// Stationary weights assembled by the graphical route; same contract as
// stationary_mpa.
inline std::vector<LaurentPoly> stationary_al(const Sector& m) {
  return detail::stationary_product(
      m, [](const Sector& s, std::size_t nv) { return psi_al(s, nv); });
}

}  // namespace ntasep
