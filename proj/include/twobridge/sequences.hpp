#pragma once

#include <optional>

#include "twobridge/seq.hpp"
#include "twobridge/slopes.hpp"

namespace twobridge {

/// S(r) = (s1, s2, s1, s2) with s1, s2 palindromic; s1 is empty for r = 1/m.
struct Decomposition {
  Seq s1;
  Seq s2;

  Seq full() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// S(r), read off the upper word u_r. Requires 0 < r <= 1.
Seq s_sequence_of_slope(const Fraction& r);

/// S(r) assembled from the decomposition of the reduced slope, recursively.
Seq s_sequence_recursive(const Fraction& r);

CyclicSeq cyclic_s_sequence_of_slope(const Fraction& r);

/// T(r): S(r~) when m_2 = 1, otherwise S(r~) reversed. Requires k >= 2.
Seq t_sequence(const Fraction& r);

/// Splits the first half of S(r) into its two palindromic parts.
Decomposition decompose(const Fraction& r);

/// The same decomposition built level by level from the continued fraction.
Decomposition decompose_recursive(const Fraction& r);

/// q/p with p = sum(s1) + sum(s2) and q = |s1| + |s2|. Throws
/// std::invalid_argument unless cs = ((s1, s2, s1, s2)).
Fraction recover_slope(const CyclicSeq& cs, const Decomposition& d);

/// The slope whose cyclic S-sequence is cs, if there is one.
std::optional<Fraction> slope_of_cyclic_sequence(const CyclicSeq& cs);

/// Some rotation of cs begins with pattern; needs |pattern| <= |cs|.
bool contains_subsequence(const CyclicSeq& cs, const Seq& pattern);

/// pattern occurs as a contiguous block of seq.
bool contains_block(const Seq& seq, const Seq& pattern);

/// pattern occurs as a contiguous block of seq with at least one term of seq
/// on each side.
bool contains_interior_block(const Seq& seq, const Seq& pattern);

/// CS(s) contains both parts of the decomposition of r. Whenever this holds,
/// s lies outside I_1(r) and I_2(r).
bool connection_violation(const Fraction& r, const Fraction& s);

} // namespace twobridge
