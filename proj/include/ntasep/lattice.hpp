#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntasep/scalars.hpp"

namespace ntasep {

// A configuration of the ring: letters in 1..alphabet, site L+1 = site 1.
struct Word {
  std::vector<std::uint8_t> letters;
  int alphabet = 0;

  int size() const { return static_cast<int>(letters.size()); }
  int at(int site) const { return letters[static_cast<std::size_t>(site) - 1]; }  // 1-based

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet == b.alphabet && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Particle counts (m_1,...,m_{N+1}); a sector is basic when every count is
// positive. sector_of may produce non-basic sectors, everything downstream
// that needs irreducibility rejects them.
struct Sector {
  std::vector<int> counts;

  int parts() const { return static_cast<int>(counts.size()); }
  int length() const {
    int L = 0;
    for (int c : counts) L += c;
    return L;
  }
  bool is_basic() const {
    if (counts.empty()) return false;
    for (int c : counts)
      if (c < 1) return false;
    return true;
  }

  friend bool operator==(const Sector&, const Sector&) = default;
  friend bool operator<(const Sector& a, const Sector& b) { return a.counts < b.counts; }
};

inline void require_basic(const Sector& m, const char* where) {
  if (!m.is_basic())
    throw std::invalid_argument(std::string(where) + ": sector is not basic");
}

inline Sector sector_of(const Word& w) {
  Sector m;
  m.counts.assign(static_cast<std::size_t>(w.alphabet), 0);
  for (auto l : w.letters) {
    if (l < 1 || l > w.alphabet) throw std::invalid_argument("letter outside alphabet");
    ++m.counts[static_cast<std::size_t>(l) - 1];
  }
  return m;
}

// (m_1,...,m_N,m_{N+1}) -> (m_1,...,m_N+m_{N+1}): identify the two largest
// species, dropping one alphabet level.
inline Sector merge_last(const Sector& m) {
  if (m.parts() < 2) throw std::invalid_argument("merge_last: fewer than two parts");
  Sector out;
  out.counts.assign(m.counts.begin(), m.counts.end() - 1);
  out.counts.back() += m.counts.back();
  return out;
}

// All arrangements of the multiset given by m, ascending lexicographic.
inline std::vector<Word> enumerate_sector(const Sector& m) {
  require_basic(m, "enumerate_sector");
  std::vector<std::uint8_t> letters;
  letters.reserve(static_cast<std::size_t>(m.length()));
  for (int species = 1; species <= m.parts(); ++species)
    letters.insert(letters.end(), static_cast<std::size_t>(m.counts[species - 1]),
                   static_cast<std::uint8_t>(species));
  std::vector<Word> out;
  do {
    out.push_back(Word{letters, m.parts()});
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// Number of arrangements, L! / (m_1! ... m_{N+1}!).
inline Int sector_dimension(const Sector& m) {
  Int num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m.length()));
  for (int c : m.counts) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
    num /= f;
  }
  return num;
}

inline Word rotate(const Word& w, int s) {
  const int L = w.size();
  if (L == 0) return w;
  int shift = ((s % L) + L) % L;
  Word out = w;
  std::rotate_copy(w.letters.begin(), w.letters.begin() + shift, w.letters.end(),
                   out.letters.begin());
  return out;
}

// Binary search over a lexicographically sorted enumeration.
inline int word_index(const std::vector<Word>& sorted, const Word& w) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
  if (it == sorted.end() || !(*it == w))
    throw std::invalid_argument("word not found in sector enumeration");
  return static_cast<int>(it - sorted.begin());
}

// Compact digit string when the alphabet fits in one digit, otherwise
// comma-separated integers.
inline std::string format_word(const Word& w) {
  std::ostringstream os;
  if (w.alphabet <= 9) {
    for (auto l : w.letters) os << static_cast<int>(l);
  } else {
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) os << ",";
      os << static_cast<int>(w.letters[i]);
    }
  }
  return os.str();
}

// alphabet = 0 infers the alphabet as the largest letter present.
inline Word parse_word(const std::string& text, int alphabet = 0) {
  Word w;
  if (text.empty()) throw std::invalid_argument("empty word");
  if (text.find(',') == std::string::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("word digits must be in 1..9: " + text);
      w.letters.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  } else {
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
      int v;
      try {
        v = std::stoi(piece);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed word: " + text);
      }
      if (v < 1 || v > 255) throw std::invalid_argument("letter out of range: " + piece);
      w.letters.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (w.letters.size() < 2) throw std::invalid_argument("words must have length >= 2");
  int maxl = 0;
  for (auto l : w.letters) maxl = std::max(maxl, static_cast<int>(l));
  w.alphabet = alphabet > 0 ? alphabet : maxl;
  if (maxl > w.alphabet) throw std::invalid_argument("letter exceeds alphabet");
  return w;
}

inline std::string format_sector(const Sector& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.counts.size(); ++i) {
    if (i) os << ",";
    os << m.counts[i];
  }
  return os.str();
}

inline Sector parse_sector(const std::string& text) {
  Sector m;
  std::istringstream is(text);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    int v;
    try {
      v = std::stoi(piece);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed sector: " + text);
    }
    m.counts.push_back(v);
  }
  if (m.counts.empty()) throw std::invalid_argument("empty sector");
  return m;
}

// Every basic sector with species count N+1 <= maxN+1 and length in
// [N+1, maxL], ordered by (N, L, composition). Used by the sweep suites.
inline std::vector<Sector> all_basic_sectors(int max_n, int max_l) {
  std::vector<Sector> out;
  for (int n = 1; n <= max_n; ++n) {
    const int parts = n + 1;
    for (int L = parts; L <= max_l; ++L) {
      std::vector<int> comp(static_cast<std::size_t>(parts), 1);
      int rest = L - parts;
      // odometer over weak compositions of `rest` added on top of all-ones
      std::vector<int> extra(static_cast<std::size_t>(parts), 0);
      extra[0] = rest;
      for (;;) {
        Sector m;
        m.counts.resize(static_cast<std::size_t>(parts));
        for (int i = 0; i < parts; ++i) m.counts[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)] + extra[static_cast<std::size_t>(i)];
        out.push_back(m);
        // next weak composition in colex-style order
        int i = 0;
        while (i < parts && extra[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == parts - 1 || i == parts) break;
        const int v = extra[static_cast<std::size_t>(i)];
        extra[static_cast<std::size_t>(i)] = 0;
        extra[0] = v - 1;
        ++extra[static_cast<std::size_t>(i) + 1];
      }
    }
  }
  return out;
}

}  // namespace ntasep
