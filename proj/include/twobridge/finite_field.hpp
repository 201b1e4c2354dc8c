#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/polynomial.hpp"
#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// Arithmetic in F_p or F_{p^2} = F_p[t] / (t^2 - n), n the least non-residue.
class Field {
public:
  /// degree 1 or 2; p an odd prime below 2^31.
  Field(std::uint64_t p, int degree);

  struct Elem {
    std::uint64_t a = 0; // a + b t
    std::uint64_t b = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
  };

  std::uint64_t prime() const { return p_; }
  int degree() const { return degree_; }
  std::uint64_t non_residue() const { return nr_; }

  Elem from_int(std::int64_t x) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem inv(const Elem& x) const;
  /// A square root of a base-field element (it always has one in F_{p^2}).
  Elem sqrt_base(std::uint64_t x) const;

  /// "a" or "a+b*t".
  std::string format(const Elem& x) const;

private:
  std::uint64_t p_;
  int degree_;
  std::uint64_t nr_ = 0;
};

/// Square root mod p of a quadratic residue (Tonelli-Shanks).
std::uint64_t sqrt_mod(std::uint64_t x, std::uint64_t p);

using FieldMatrix = std::array<Field::Elem, 4>; // row-major

/// The Riley polynomial of r: with rho(a) = [[1,1],[0,1]] and
/// rho(b) = [[1,0],[y,1]], the primitive gcd of the entries of rho(u_r) - I.
IntPoly riley_polynomial(const Fraction& r);

/// A representation of G(K(r)) into SL(2) over a finite field, sending a and
/// b to parabolics.
class FiniteFieldRep {
public:
  FiniteFieldRep(Fraction r, Field field, Field::Elem y);

  const Fraction& slope() const { return r_; }
  const Field& field() const { return field_; }
  const Field::Elem& y() const { return y_; }
  const FieldMatrix& image_a() const { return a_; }
  const FieldMatrix& image_b() const { return b_; }

  FieldMatrix evaluate(const Word& w) const;
  Field::Elem trace(const Word& w) const;
  Field::Elem det(const FieldMatrix& m) const;
  FieldMatrix multiply(const FieldMatrix& x, const FieldMatrix& y) const;
  bool is_identity(const FieldMatrix& m) const;

  std::string describe() const;

private:
  Fraction r_;
  Field field_;
  Field::Elem y_;
  FieldMatrix a_, b_, a_inv_, b_inv_;
};

/// Every representation at this prime coming from a nonzero root of the Riley
/// polynomial in F_p or F_{p^2}. Empty when the prime is unusable (below 5,
/// dividing the leading coefficient or the discriminant).
std::vector<FiniteFieldRep> finite_reps(const Fraction& r, std::uint64_t prime);

/// The first representation at this prime, if any.
std::optional<FiniteFieldRep> finite_rep(const Fraction& r, std::uint64_t prime);

struct NonconjugacyEvidence {
  std::uint64_t prime = 0;
  int field_degree = 1;
  std::string y;
  std::string trace_u;
  std::string trace_v;
};

/// All representations for primes 5 <= p <= prime_budget, built once.
class RepresentationBank {
public:
  RepresentationBank(const Fraction& r, std::uint64_t prime_budget);

  const std::vector<FiniteFieldRep>& reps() const { return reps_; }

  /// A representation in which tr u differs from tr v (and hence from
  /// tr v^-1). Absence is inconclusive.
  std::optional<NonconjugacyEvidence> separate(const Word& u, const Word& v) const;

  /// Traces of w in every representation, in bank order.
  std::vector<Field::Elem> trace_signature(const Word& w) const;

private:
  std::vector<FiniteFieldRep> reps_;
};

std::optional<NonconjugacyEvidence> nonconjugacy_evidence(const Fraction& r, const Word& u, const Word& v,
                                                          std::uint64_t prime_budget);

} // namespace twobridge
