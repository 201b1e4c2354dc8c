#pragma once

// Reference implementations used only to cross-check the library.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace oracle {

using twobridge::Fraction;
using twobridge::Word;

// u_{q/p} letter by letter: the i-th letter has sign (-1)^(c - 1) where c is
// the least integer greater than (i - 1) q / p.
inline std::string upper_word_text(std::int64_t q, std::int64_t p) {
  std::string out;
  for (std::int64_t i = 1; i <= 2 * p; ++i) {
    const std::int64_t c = ((i - 1) * q) / p + 1;
    const bool positive = (c - 1) % 2 == 0;
    const bool is_a = i % 2 == 1;
    out += is_a ? (positive ? 'a' : 'A') : (positive ? 'b' : 'B');
  }
  return out;
}

// Euclid on q/p, 0 < q/p <= 1, normalized so the last term is at least 2.
inline std::vector<std::int64_t> expansion(std::int64_t q, std::int64_t p) {
  std::vector<std::int64_t> out;
  while (q != 0) {
    out.push_back(p / q);
    const std::int64_t rem = p % q;
    p = q;
    q = rem;
  }
  if (out.size() >= 2 && out.back() == 1) {
    out.pop_back();
    ++out.back();
  }
  return out;
}

// Lengths of maximal runs of letters with the same case.
inline std::vector<std::int64_t> runs(const std::string& w) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    const bool upper = std::isupper(static_cast<unsigned char>(w[i]));
    while (j < w.size() && static_cast<bool>(std::isupper(static_cast<unsigned char>(w[j]))) == upper) {
      ++j;
    }
    out.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return out;
}

inline std::string invert_text(const std::string& w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) {
    c = std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                    : static_cast<char>(std::toupper(c));
  }
  return out;
}

inline std::string reduce_text(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// Distinct rotations of u and u^-1.
inline std::vector<std::string> symmetrized(const std::string& u) {
  std::vector<std::string> out;
  for (const std::string& base : {u, invert_text(u)}) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::string rot = base.substr(i) + base.substr(0, i);
      if (std::find(out.begin(), out.end(), rot) == out.end()) {
        out.push_back(rot);
      }
    }
  }
  return out;
}

inline bool piece(const std::vector<std::string>& members, const std::string& w) {
  int count = 0;
  for (const std::string& m : members) {
    count += m.compare(0, w.size(), w) == 0;
  }
  return count >= 2;
}

inline std::vector<Fraction> proper_slopes(std::int64_t lo, std::int64_t hi) {
  std::vector<Fraction> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) {
        out.emplace_back(q, p);
      }
    }
  }
  return out;
}

inline Word random_word(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<twobridge::Letter> letters;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back(static_cast<twobridge::Letter>(d(rng)));
  }
  return Word(letters);
}

} // namespace oracle
