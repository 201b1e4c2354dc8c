#include "twobridge/sequences.hpp"

#include <numeric>
#include <stdexcept>

#include "twobridge/words.hpp"

namespace twobridge {

namespace {

void require_unit_slope(const Fraction& r) {
  if (r.is_infinite() || r.num() <= 0 || r.num() > r.den()) {
    throw std::invalid_argument("slope must satisfy 0 < r <= 1, got " + r.to_string());
  }
}

bool is_palindrome(const Seq& s, std::size_t begin, std::size_t end) {
  while (begin + 1 < end) {
    if (s[begin] != s[end - 1]) {
      return false;
    }
    ++begin;
    --end;
  }
  return true;
}

void append_copies(Seq& out, std::int64_t count, std::int64_t value) {
  out.insert(out.end(), static_cast<std::size_t>(count), value);
}

// Interleaves runs: count_i copies of `run` separated by single `sep` terms,
// optionally bracketed by `sep` on both ends.
Seq interleave(const Seq& counts, std::int64_t run, std::int64_t sep, bool bracket) {
  Seq out;
  if (bracket) {
    out.push_back(sep);
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) {
      out.push_back(sep);
    }
    append_copies(out, counts[i], run);
  }
  if (bracket) {
    out.push_back(sep);
  }
  return out;
}

Decomposition decompose_terms(const std::vector<ContinuedFraction::Term>& m) {
  const std::int64_t m1 = m[0];
  if (m.size() == 1) {
    return {{}, {m1}};
  }
  if (m.size() == 2) {
    Seq s2;
    append_copies(s2, m[1] - 1, m1);
    return {{m1 + 1}, s2};
  }
  if (m[1] == 1 && m.size() == 3) {
    Seq s1;
    append_copies(s1, m[2], m1 + 1);
    return {s1, {m1}};
  }
  const auto reduced = reduce_step(ContinuedFraction(m));
  const Decomposition t = decompose_terms(reduced.terms());
  if (m[1] == 1) {
    return {interleave(t.s1, m1 + 1, m1, false), interleave(t.s2, m1 + 1, m1, true)};
  }
  return {interleave(t.s2, m1, m1 + 1, true), interleave(t.s1, m1, m1 + 1, false)};
}

} // namespace

Seq Decomposition::full() const {
  Seq out;
  for (int i = 0; i < 2; ++i) {
    out.insert(out.end(), s1.begin(), s1.end());
    out.insert(out.end(), s2.begin(), s2.end());
  }
  return out;
}

Seq s_sequence_of_slope(const Fraction& r) {
  require_unit_slope(r);
  return s_sequence(upper_word(r));
}

Seq s_sequence_recursive(const Fraction& r) { return decompose_recursive(r).full(); }

CyclicSeq cyclic_s_sequence_of_slope(const Fraction& r) { return CyclicSeq(s_sequence_of_slope(r)); }

Seq t_sequence(const Fraction& r) {
  require_unit_slope(r);
  const auto cf = to_continued_fraction(r);
  if (cf.size() < 2) {
    throw std::invalid_argument("T-sequence needs at least two continued fraction terms: " + r.to_string());
  }
  Seq s = s_sequence_of_slope(to_fraction(reduce_step(cf)));
  return cf[1] == 1 ? s : reversed(s);
}

Decomposition decompose(const Fraction& r) {
  require_unit_slope(r);
  const auto cf = to_continued_fraction(r);
  const std::int64_t m = cf[0];
  const Seq s = s_sequence_of_slope(r);
  const std::size_t half = s.size() / 2;
  if (cf.size() == 1) {
    return {{}, Seq(s.begin(), s.begin() + half)};
  }
  // The first half is (s1, s2); the split is the one making both parts
  // palindromes with the prescribed end terms.
  for (std::size_t j = 1; j < half; ++j) {
    if (s[0] != m + 1 || s[j - 1] != m + 1 || s[j] != m || s[half - 1] != m) {
      continue;
    }
    if (is_palindrome(s, 0, j) && is_palindrome(s, j, half)) {
      return {Seq(s.begin(), s.begin() + j), Seq(s.begin() + j, s.begin() + half)};
    }
  }
  throw std::logic_error("no palindromic split of S(" + r.to_string() + ")");
}

Decomposition decompose_recursive(const Fraction& r) {
  require_unit_slope(r);
  return decompose_terms(to_continued_fraction(r).terms());
}

Fraction recover_slope(const CyclicSeq& cs, const Decomposition& d) {
  if (CyclicSeq(d.full()) != cs) {
    throw std::invalid_argument("cyclic sequence " + cs.to_string() + " is not ((S1,S2,S1,S2)) for S1=" +
                                format_seq(d.s1) + ", S2=" + format_seq(d.s2));
  }
  const auto q = static_cast<long long>(d.s1.size() + d.s2.size());
  return Fraction(q, static_cast<long long>(sum(d.s1) + sum(d.s2)));
}

std::optional<Fraction> slope_of_cyclic_sequence(const CyclicSeq& cs) {
  const std::int64_t total = sum(cs.terms());
  if (cs.size() % 2 != 0 || total % 2 != 0 || cs.empty()) {
    return std::nullopt;
  }
  const auto q = static_cast<long long>(cs.size() / 2);
  const long long p = total / 2;
  if (q > p || std::gcd(q, p) != 1) {
    return std::nullopt;
  }
  Fraction s(q, p);
  if (cyclic_s_sequence_of_slope(s) != cs) {
    return std::nullopt;
  }
  return s;
}

bool contains_subsequence(const CyclicSeq& cs, const Seq& pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("empty pattern");
  }
  const auto& t = cs.terms();
  const std::size_t n = t.size();
  if (pattern.size() > n) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j < pattern.size() && t[(i + j) % n] == pattern[j]) {
      ++j;
    }
    if (j == pattern.size()) {
      return true;
    }
  }
  return false;
}

namespace {

bool block_at(const Seq& seq, const Seq& pattern, std::size_t i) {
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    if (seq[i + j] != pattern[j]) {
      return false;
    }
  }
  return true;
}

} // namespace

bool contains_block(const Seq& seq, const Seq& pattern) {
  if (pattern.size() > seq.size()) {
    return false;
  }
  for (std::size_t i = 0; i + pattern.size() <= seq.size(); ++i) {
    if (block_at(seq, pattern, i)) {
      return true;
    }
  }
  return false;
}

bool contains_interior_block(const Seq& seq, const Seq& pattern) {
  if (pattern.size() + 2 > seq.size()) {
    return false;
  }
  for (std::size_t i = 1; i + pattern.size() + 1 <= seq.size(); ++i) {
    if (block_at(seq, pattern, i)) {
      return true;
    }
  }
  return false;
}

bool connection_violation(const Fraction& r, const Fraction& s) {
  if (!in_open_unit_interval(r) || to_continued_fraction(r).size() < 2) {
    throw std::invalid_argument("connection test needs 0 < r < 1 with r != 1/p, got " + r.to_string());
  }
  require_unit_slope(s);
  const Decomposition d = decompose(r);
  const CyclicSeq cs = cyclic_s_sequence_of_slope(s);
  return contains_subsequence(cs, d.s1) && contains_subsequence(cs, d.s2);
}

} // namespace twobridge
