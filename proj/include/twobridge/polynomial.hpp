#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twobridge/slopes.hpp"

namespace twobridge {

/// Polynomial in y with integer coefficients, lowest degree first and no
/// trailing zeros. The zero polynomial has no coefficients.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(const BigInt& c) { return IntPoly({c}); }
  /// The monomial y.
  static IntPoly y() { return IntPoly({0, 1}); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  /// Gcd of the coefficients, non-negative.
  BigInt content() const;
  /// Divided by its content, with a positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly derivative() const;

  /// Exponent of the largest power of y dividing this (nonzero) polynomial.
  int valuation() const;
  /// Divides by y^k; requires k <= valuation().
  IntPoly shift_down(int k) const;

  friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  BigInt evaluate(const BigInt& y) const;

  /// E.g. "y^4+2*y^3+2*y^2".
  std::string to_string() const;

private:
  std::vector<BigInt> coeffs_;
  void trim();
};

/// Greatest common divisor over Z[y], primitive with positive leading term.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// f / g when g divides f exactly over Z[y]; throws otherwise.
IntPoly exact_divide(const IntPoly& f, const IntPoly& g);

/// Squarefree part of a nonzero primitive polynomial.
IntPoly squarefree_part(const IntPoly& f);

/// Polynomials over F_p for a prime p < 2^31, lowest degree first.
class ModPoly {
public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static ModPoly from_int(std::uint64_t p, const IntPoly& f);

  std::uint64_t prime() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.back(); }

  ModPoly monic() const;
  ModPoly derivative() const;

  friend ModPoly operator+(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator-(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator*(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator%(const ModPoly& f, const ModPoly& g);
  friend ModPoly operator/(const ModPoly& f, const ModPoly& g);
  friend bool operator==(const ModPoly&, const ModPoly&) = default;

  std::uint64_t evaluate(std::uint64_t y) const;

private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
  void trim();
};

ModPoly gcd(ModPoly f, ModPoly g);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m);

/// Splits a monic squarefree f whose irreducible factors all have degree d
/// into those factors (Cantor-Zassenhaus with a fixed seed).
std::vector<ModPoly> equal_degree_factors(const ModPoly& f, int d);

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

} // namespace twobridge
