#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/seq.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge {

/// Letters are coded so that the natural order is a < A < b < B, where A and B
/// denote the inverses of a and b.
using Letter = std::uint8_t;

inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterAInv = 1;
inline constexpr Letter kLetterB = 2;
inline constexpr Letter kLetterBInv = 3;

inline constexpr Letter inverse(Letter x) { return x ^ 1; }
inline constexpr int sign(Letter x) { return (x & 1) ? -1 : 1; }
/// 0 for a, 1 for b.
inline constexpr int generator(Letter x) { return x >> 1; }

char letter_char(Letter x);
Letter parse_letter(char c);

/// A word in a, b and their inverses; not necessarily reduced.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts the letters a, A, b, B; "1" or "" is the empty word.
  static Word parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  void push_back(Letter x) { letters_.push_back(x); }

  /// Letters [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix_from(std::size_t pos) const { return sub(pos, size() - pos); }

  /// Cyclic subword of length len starting at pos (indices taken mod size).
  Word cyclic_sub(std::size_t pos, std::size_t len) const;

  /// The rotation starting at letter offset.
  Word rotation(std::size_t offset) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Formal inverse: reversed with every letter inverted.
Word inverse(const Word& w);

/// Juxtaposition without cancellation.
Word concat(const Word& x, const Word& y);

/// Product in the free group (concatenate, then reduce).
Word operator*(const Word& x, const Word& y);

/// w^n for n >= 0, reduced.
Word power(const Word& w, int n);

Word free_reduce(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Strips inverse letter pairs from the two ends of a reduced word. If
/// conjugator is given it receives c with free_reduce(w) = c * core * c^-1.
Word cyclic_reduce(const Word& w, Word* conjugator = nullptr);

/// A cyclically reduced word up to rotation, stored in its least rotation.
class CyclicWord {
public:
  CyclicWord() = default;
  /// Throws std::invalid_argument if w is not cyclically reduced.
  explicit CyclicWord(const Word& w);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  std::string to_string() const { return "(" + word_.to_string() + ")"; }
  CyclicWord inverse() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
  Word word_;
};

/// The alternating word u_{q/p} of length 2p. Slopes 0 and 1 are accepted.
Word upper_word(const Fraction& s);

/// Lengths of the maximal runs of letters of equal sign.
Seq s_sequence(const Word& v);

/// Sign runs of a cyclically reduced word read cyclically. A word with a
/// single sign gives the one-term sequence (|v|).
CyclicSeq cyclic_s_sequence(const Word& v);
CyclicSeq cyclic_s_sequence(const CyclicWord& v);

/// No rotation contains x^2 or x^-2 for a letter x.
bool is_cyclically_alternating(const Word& v);
bool is_cyclically_alternating(const CyclicWord& v);

/// Whether x occurs in some rotation of the cyclic word w.
bool is_cyclic_subword(const Word& x, const Word& w);

} // namespace twobridge

template <>
struct std::hash<twobridge::Word> {
  std::size_t operator()(const twobridge::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.letters()) {
      h = (h ^ x) * 1099511628211ull;
    }
    return h;
  }
};
