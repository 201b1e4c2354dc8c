#include "twobridge/words.hpp"

#include <ostream>
#include <stdexcept>

namespace twobridge {

char letter_char(Letter x) {
  static constexpr char chars[] = {'a', 'A', 'b', 'B'};
  return chars[x & 3];
}

Letter parse_letter(char c) {
  switch (c) {
  case 'a':
    return kLetterA;
  case 'A':
    return kLetterAInv;
  case 'b':
    return kLetterB;
  case 'B':
    return kLetterBInv;
  default:
    throw std::invalid_argument(std::string("not a letter: '") + c + "'");
  }
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text == "1") {
    return w;
  }
  for (char c : text) {
    if (c == ' ' || c == '.') {
      continue;
    }
    w.letters_.push_back(parse_letter(c));
  }
  return w;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) {
    out += letter_char(x);
  }
  return out;
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw std::out_of_range("subword out of range");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::cyclic_sub(std::size_t pos, std::size_t len) const {
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(letters_[(pos + i) % size()]);
  }
  return Word(std::move(out));
}

Word Word::rotation(std::size_t offset) const {
  if (empty()) {
    return *this;
  }
  return Word(rotated(letters_, offset % size()));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word inverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& x : out) {
    x = inverse(x);
  }
  return Word(std::move(out));
}

Word concat(const Word& x, const Word& y) {
  std::vector<Letter> out(x.letters());
  out.insert(out.end(), y.letters().begin(), y.letters().end());
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word operator*(const Word& x, const Word& y) { return free_reduce(concat(x, y)); }

Word power(const Word& w, int n) {
  if (n < 0) {
    return power(inverse(w), -n);
  }
  Word out;
  for (int i = 0; i < n; ++i) {
    out = out * w;
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse(w[i - 1])) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != inverse(w.back()));
}

Word cyclic_reduce(const Word& w, Word* conjugator) {
  Word r = free_reduce(w);
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == inverse(r[j - 1])) {
    ++i;
    --j;
  }
  if (conjugator) {
    *conjugator = r.prefix(i);
  }
  return r.sub(i, j - i);
}

CyclicWord::CyclicWord(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    throw std::invalid_argument("cyclic word must be cyclically reduced: " + w.to_string());
  }
  word_ = w.rotation(least_rotation(w.letters()));
}

CyclicWord CyclicWord::inverse() const { return CyclicWord(twobridge::inverse(word_)); }

Word upper_word(const Fraction& s) {
  if (s.is_infinite() || s.num() < 0 || s.num() > s.den()) {
    throw std::invalid_argument("upper word needs 0 <= s <= 1, got " + s.to_string());
  }
  const BigInt& q = s.num();
  const BigInt& p = s.den();
  if (p > 1'000'000) {
    throw std::invalid_argument("denominator too large for an upper word: " + s.to_string());
  }
  const auto n = p.convert_to<std::int64_t>() * 2;
  std::vector<Letter> out;
  out.reserve(n);
  for (std::int64_t i = 1; i <= n; ++i) {
    // The exponent of -1 is floor((i-1)q/p).
    BigInt e = (BigInt(i - 1) * q) / p;
    bool negative = (e & 1) != 0;
    Letter base = (i % 2 == 1) ? kLetterA : kLetterB;
    out.push_back(negative ? inverse(base) : base);
  }
  return Word(std::move(out));
}

Seq s_sequence(const Word& v) {
  if (v.empty()) {
    throw std::invalid_argument("S-sequence of the empty word");
  }
  Seq out{1};
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (sign(v[i]) == sign(v[i - 1])) {
      ++out.back();
    } else {
      out.push_back(1);
    }
  }
  return out;
}

CyclicSeq cyclic_s_sequence(const Word& v) {
  if (v.empty()) {
    throw std::invalid_argument("cyclic S-sequence of the empty word");
  }
  const std::size_t n = v.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (sign(v[i]) != sign(v[(i + n - 1) % n])) {
      start = i;
      break;
    }
  }
  if (start == n) {
    return CyclicSeq(Seq{static_cast<std::int64_t>(n)});
  }
  return CyclicSeq(s_sequence(v.rotation(start)));
}

CyclicSeq cyclic_s_sequence(const CyclicWord& v) { return cyclic_s_sequence(v.word()); }

bool is_cyclically_alternating(const Word& v) {
  const std::size_t n = v.size();
  if (n == 1) {
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (generator(v[i]) == generator(v[(i + 1) % n])) {
      return false;
    }
  }
  return true;
}

bool is_cyclically_alternating(const CyclicWord& v) { return is_cyclically_alternating(v.word()); }

bool is_cyclic_subword(const Word& x, const Word& w) {
  if (x.empty()) {
    return true;
  }
  if (w.empty()) {
    return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < x.size() && ok; ++j) {
      ok = x[j] == w[(i + j) % w.size()];
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

} // namespace twobridge
