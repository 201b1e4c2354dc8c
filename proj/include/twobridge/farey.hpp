#pragma once

#include <set>
#include <string>
#include <vector>

#include "twobridge/slopes.hpp"

namespace twobridge {

/// An integral 2x2 matrix of determinant +-1 acting on Q ∪ {∞} by
/// x -> (a x + b) / (c x + d), taken up to sign.
class MobiusMap {
public:
  /// The identity.
  MobiusMap() : MobiusMap(1, 0, 0, 1) {}
  /// Throws std::invalid_argument unless the determinant is +-1.
  MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  BigInt det() const { return a_ * d_ - b_ * c_; }

  Fraction operator()(const Fraction& x) const;

  /// Composition: (f * g)(x) = f(g(x)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);
  MobiusMap inverse() const;

  /// "[[a,b],[c,d]]".
  std::string to_string() const;

  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
  BigInt a_, b_, c_, d_;
};

/// Reflection in the Farey edge joining x and y; requires |x_n y_d - y_n x_d| = 1.
MobiusMap edge_reflection(const Fraction& x, const Fraction& y);

/// x -> -x and x -> 2 - x.
std::vector<MobiusMap> gamma_inf_generators();

/// Reflections in the Farey edges <r, r1> and <r, r2>, where r1, r2 are the
/// interval endpoints of r.
std::vector<MobiusMap> gamma_r_generators(const Fraction& r);

/// x -> (3x - 1) / (8x - 3), exchanging ∞ and 3/8.
MobiusMap tau_involution();

/// Generator indices used in orbit words.
enum class OrbitGenerator : int {
  NegateInf = 0,      // x -> -x
  ReflectInfOne = 1,  // x -> 2 - x
  ReflectRR1 = 2,     // reflection in <r, r1>
  ReflectRR2 = 3,     // reflection in <r, r2>
  TranslateInf = 4,   // (x -> x + 2)^exponent
  TranslateR = 5,     // (ReflectRR1 ∘ ReflectRR2)^exponent
};

struct OrbitStep {
  OrbitGenerator generator;
  BigInt exponent = 1;

  friend bool operator==(const OrbitStep&, const OrbitStep&) = default;
};

struct OrbitReduction {
  Fraction s0;
  /// Applying these steps to s0, first to last, gives the input slope.
  std::vector<OrbitStep> word;
  /// Number of folding rounds performed.
  std::size_t steps = 0;
  /// True when the iteration cap was hit and the orbit search was used.
  bool used_search = false;
};

MobiusMap orbit_step_map(const Fraction& r, const OrbitStep& step);

/// Applies the recorded word to x.
Fraction replay(const Fraction& r, const std::vector<OrbitStep>& word, const Fraction& x);

/// True iff s lies in I_1(r) ∪ I_2(r) ∪ {∞, r}.
bool in_fundamental_domain(const Fraction& r, const Fraction& s);

/// The unique representative of s in I_1(r) ∪ I_2(r) ∪ {∞, r} under the group
/// generated by the reflections in Farey edges ending at ∞ or r.
OrbitReduction reduce_to_fundamental_domain(const Fraction& r, const Fraction& s);

/// Representative of x in [0, 1] ∪ {∞} modulo x -> 2n +- x.
Fraction fold_inf(const Fraction& x);

/// Orbit exploration independent of the reduction: the folded representatives
/// with denominator <= den_bound reachable from s through single reflections
/// whose intermediate denominators stay <= 4 den_bound.
std::set<Fraction> orbit_bfs(const Fraction& r, const Fraction& s, std::int64_t den_bound);

bool is_null_homotopic(const Fraction& r, const Fraction& s);

} // namespace twobridge
