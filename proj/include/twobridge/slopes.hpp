#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twobridge {

using BigInt = boost::multiprecision::cpp_int;

/// An exact element of Q ∪ {∞}.
///
/// Always stored in lowest terms with a non-negative denominator; the point at
/// infinity is the single value 1/0.
class Fraction {
public:
  Fraction() = default;
  Fraction(BigInt num, BigInt den = 1);
  Fraction(long long num, long long den = 1) : Fraction(BigInt(num), BigInt(den)) {}

  static Fraction infinity() { return Fraction(BigInt(1), BigInt(0)); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }

  /// Parses "q/p", "n" or "inf".
  static Fraction parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;

  /// Total order on Q ∪ {∞}, with ∞ placed above every finite value.
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

  friend Fraction operator+(const Fraction& x, const Fraction& y);
  friend Fraction operator-(const Fraction& x, const Fraction& y);
  friend Fraction operator*(const Fraction& x, const Fraction& y);
  friend Fraction operator/(const Fraction& x, const Fraction& y);
  Fraction operator-() const;

  /// Greatest integer not exceeding a finite value.
  BigInt floor() const;

private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// Normalized expansion [m_1, ..., m_k] of a slope in (0, 1].
class ContinuedFraction {
public:
  using Term = std::int64_t;

  /// Throws std::invalid_argument unless the terms are positive with m_k >= 2
  /// (a single term may be 1, encoding the value 1).
  explicit ContinuedFraction(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Term operator[](std::size_t i) const { return terms_[i]; }

  static ContinuedFraction parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

/// Value of 1/(t_0 + 1/(t_1 + ...)); the terms need not be normalized, and an
/// empty list evaluates to 0.
Fraction evaluate_expansion(const std::vector<ContinuedFraction::Term>& terms);

ContinuedFraction to_continued_fraction(const Fraction& r);
Fraction to_fraction(const ContinuedFraction& cf);

/// The slope obtained by stripping one level of the expansion:
/// [m_3, ..., m_k] when m_2 = 1, otherwise [m_2 - 1, m_3, ..., m_k].
ContinuedFraction reduce_step(const ContinuedFraction& cf);

/// Closed intervals I_1 = [0, r1] and I_2 = [r2, 1] cut out on the boundary by
/// the fundamental domain of the reflection group attached to r.
struct SlopeIntervals {
  Fraction r1;
  Fraction r2;
};

SlopeIntervals intervals(const Fraction& r);

bool contains(const SlopeIntervals& iv, const Fraction& s);

/// Every reduced fraction q/p with 0 <= q/p <= 1 and 1 <= p <= max_den, sorted.
std::vector<Fraction> slopes_up_to(std::int64_t max_den);

/// True iff 0 < r < 1.
bool in_open_unit_interval(const Fraction& r);

} // namespace twobridge
