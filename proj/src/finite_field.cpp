#include "twobridge/finite_field.hpp"

#include <stdexcept>

namespace twobridge {

namespace {

bool is_residue(std::uint64_t x, std::uint64_t p) { return x % p == 0 || mod_pow(x, (p - 1) / 2, p) == 1; }

} // namespace

std::uint64_t sqrt_mod(std::uint64_t x, std::uint64_t p) {
  x %= p;
  if (x == 0) {
    return 0;
  }
  if (!is_residue(x, p)) {
    throw std::invalid_argument("not a quadratic residue");
  }
  std::uint64_t q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_residue(z, p)) {
    ++z;
  }
  std::uint64_t m = s;
  std::uint64_t c = mod_pow(z, q, p);
  std::uint64_t t = mod_pow(x, q, p);
  std::uint64_t r = mod_pow(x, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) {
      b = b * b % p;
    }
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

Field::Field(std::uint64_t p, int degree) : p_(p), degree_(degree) {
  if (p < 3 || !is_prime(p) || p >= (1ull << 31)) {
    throw std::invalid_argument("field characteristic must be an odd prime below 2^31");
  }
  if (degree != 1 && degree != 2) {
    throw std::invalid_argument("field degree must be 1 or 2");
  }
  nr_ = 2;
  while (is_residue(nr_, p_)) {
    ++nr_;
  }
}

Field::Elem Field::from_int(std::int64_t x) const {
  std::int64_t m = x % static_cast<std::int64_t>(p_);
  if (m < 0) {
    m += static_cast<std::int64_t>(p_);
  }
  return {static_cast<std::uint64_t>(m), 0};
}

Field::Elem Field::add(const Elem& x, const Elem& y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }

Field::Elem Field::sub(const Elem& x, const Elem& y) const {
  return {(x.a + p_ - y.a) % p_, (x.b + p_ - y.b) % p_};
}

Field::Elem Field::neg(const Elem& x) const { return {(p_ - x.a) % p_, (p_ - x.b) % p_}; }

Field::Elem Field::mul(const Elem& x, const Elem& y) const {
  const std::uint64_t bd = x.b * y.b % p_;
  return {(x.a * y.a + bd * nr_) % p_, (x.a * y.b + x.b * y.a) % p_};
}

Field::Elem Field::inv(const Elem& x) const {
  // (a + bt)^-1 = (a - bt) / (a^2 - n b^2).
  const std::uint64_t norm = (x.a * x.a % p_ + p_ - x.b * x.b % p_ * nr_ % p_) % p_;
  const std::uint64_t ni = mod_inverse(norm, p_);
  return {x.a * ni % p_, (p_ - x.b) % p_ * ni % p_};
}

Field::Elem Field::sqrt_base(std::uint64_t x) const {
  x %= p_;
  if (is_residue(x, p_)) {
    return {sqrt_mod(x, p_), 0};
  }
  if (degree_ != 2) {
    throw std::invalid_argument("no square root in the prime field");
  }
  // (s t)^2 = s^2 n.
  return {0, sqrt_mod(x * mod_inverse(nr_, p_) % p_, p_)};
}

std::string Field::format(const Elem& x) const {
  if (x.b == 0) {
    return std::to_string(x.a);
  }
  return std::to_string(x.a) + "+" + std::to_string(x.b) + "*t";
}

IntPoly riley_polynomial(const Fraction& r) {
  if (!in_open_unit_interval(r)) {
    throw std::invalid_argument("Riley polynomial needs 0 < r < 1, got " + r.to_string());
  }
  using M = std::array<IntPoly, 4>;
  const IntPoly one = IntPoly::constant(1), zero, y = IntPoly::y();
  const IntPoly minus_one = IntPoly::constant(-1);
  const std::array<M, 4> images = {
      M{one, one, zero, one},       // a
      M{one, minus_one, zero, one}, // a^-1
      M{one, zero, y, one},         // b
      M{one, zero, zero - y, one},  // b^-1
  };
  M acc = {one, zero, zero, one};
  const Word u = upper_word(r);
  for (Letter x : u.letters()) {
    const M& g = images[x];
    acc = M{acc[0] * g[0] + acc[1] * g[2], acc[0] * g[1] + acc[1] * g[3], acc[2] * g[0] + acc[3] * g[2],
            acc[2] * g[1] + acc[3] * g[3]};
  }
  IntPoly g;
  for (const IntPoly& e : {acc[0] - one, acc[1], acc[2], acc[3] - one}) {
    g = gcd(g, e);
  }
  if (g.is_zero()) {
    throw std::logic_error("Riley polynomial vanished for " + r.to_string());
  }
  return g;
}

FiniteFieldRep::FiniteFieldRep(Fraction r, Field field, Field::Elem y)
    : r_(std::move(r)), field_(field), y_(y) {
  const Field::Elem one = field_.from_int(1), zero = field_.from_int(0);
  a_ = {one, one, zero, one};
  a_inv_ = {one, field_.neg(one), zero, one};
  b_ = {one, zero, y_, one};
  b_inv_ = {one, zero, field_.neg(y_), one};
}

FieldMatrix FiniteFieldRep::multiply(const FieldMatrix& x, const FieldMatrix& y) const {
  const Field& f = field_;
  return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
          f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
}

FieldMatrix FiniteFieldRep::evaluate(const Word& w) const {
  const Field::Elem one = field_.from_int(1), zero = field_.from_int(0);
  FieldMatrix acc = {one, zero, zero, one};
  for (Letter x : w.letters()) {
    const FieldMatrix* g = nullptr;
    switch (x) {
    case kLetterA:
      g = &a_;
      break;
    case kLetterAInv:
      g = &a_inv_;
      break;
    case kLetterB:
      g = &b_;
      break;
    default:
      g = &b_inv_;
      break;
    }
    acc = multiply(acc, *g);
  }
  return acc;
}

Field::Elem FiniteFieldRep::trace(const Word& w) const {
  FieldMatrix m = evaluate(w);
  return field_.add(m[0], m[3]);
}

Field::Elem FiniteFieldRep::det(const FieldMatrix& m) const {
  return field_.sub(field_.mul(m[0], m[3]), field_.mul(m[1], m[2]));
}

bool FiniteFieldRep::is_identity(const FieldMatrix& m) const {
  const Field::Elem one = field_.from_int(1), zero = field_.from_int(0);
  return m[0] == one && m[1] == zero && m[2] == zero && m[3] == one;
}

std::string FiniteFieldRep::describe() const {
  std::string field = field_.degree() == 1 ? "F_" + std::to_string(field_.prime())
                                           : "F_" + std::to_string(field_.prime()) + "^2";
  return field + " y=" + field_.format(y_);
}

namespace {

ModPoly monomial_y(std::uint64_t p) { return ModPoly(p, {0, 1}); }

} // namespace

std::vector<FiniteFieldRep> finite_reps(const Fraction& r, std::uint64_t prime) {
  std::vector<FiniteFieldRep> out;
  if (prime < 5 || !is_prime(prime)) {
    return out;
  }
  IntPoly f = riley_polynomial(r);
  // Roots at y = 0 give abelian representations; drop them.
  f = squarefree_part(f.shift_down(f.valuation()));
  if (f.degree() < 1 || f.leading() % prime == 0) {
    return out;
  }
  const ModPoly fp = ModPoly::from_int(prime, f).monic();
  if (gcd(fp, fp.derivative()).degree() > 0) {
    return out;
  }
  const ModPoly y = monomial_y(prime);
  const ModPoly linear = gcd(fp, powmod(y, BigInt(prime), fp) - y);
  const Field base(prime, 1);
  if (linear.degree() > 0) {
    for (const ModPoly& factor : equal_degree_factors(linear, 1)) {
      const std::uint64_t root = (prime - factor.coeffs()[0]) % prime;
      out.emplace_back(r, base, Field::Elem{root, 0});
    }
  }
  const ModPoly rest = (fp / linear).monic();
  if (rest.degree() >= 2) {
    const ModPoly quadratic = gcd(rest, powmod(y, BigInt(prime) * prime, rest) - y);
    if (quadratic.degree() >= 2) {
      const Field ext(prime, 2);
      for (const ModPoly& factor : equal_degree_factors(quadratic, 2)) {
        // Roots of y^2 + b y + c are (-b + sqrt(b^2 - 4c)) / 2; one of each
        // conjugate pair suffices.
        const std::uint64_t c = factor.coeffs()[0], b = factor.coeffs()[1];
        const std::uint64_t disc = (b * b % prime + prime - 4 * c % prime) % prime;
        Field::Elem root = ext.add(Field::Elem{(prime - b) % prime, 0}, ext.sqrt_base(disc));
        root = ext.mul(root, Field::Elem{mod_inverse(2, prime), 0});
        out.emplace_back(r, ext, root);
      }
    }
  }
  const Word u = upper_word(r);
  for (const auto& rep : out) {
    if (!rep.is_identity(rep.evaluate(u))) {
      throw std::logic_error("representation " + rep.describe() + " does not kill the relator");
    }
  }
  return out;
}

std::optional<FiniteFieldRep> finite_rep(const Fraction& r, std::uint64_t prime) {
  auto reps = finite_reps(r, prime);
  if (reps.empty()) {
    return std::nullopt;
  }
  return reps.front();
}

RepresentationBank::RepresentationBank(const Fraction& r, std::uint64_t prime_budget) {
  for (std::uint64_t p : primes_up_to(prime_budget)) {
    auto reps = finite_reps(r, p);
    reps_.insert(reps_.end(), reps.begin(), reps.end());
  }
}

std::optional<NonconjugacyEvidence> RepresentationBank::separate(const Word& u, const Word& v) const {
  for (const auto& rep : reps_) {
    const Field::Elem tu = rep.trace(u);
    const Field::Elem tv = rep.trace(v);
    if (tu != tv) {
      const Field& f = rep.field();
      return NonconjugacyEvidence{f.prime(), f.degree(), f.format(rep.y()), f.format(tu), f.format(tv)};
    }
  }
  return std::nullopt;
}

std::vector<Field::Elem> RepresentationBank::trace_signature(const Word& w) const {
  std::vector<Field::Elem> out;
  out.reserve(reps_.size());
  for (const auto& rep : reps_) {
    out.push_back(rep.trace(w));
  }
  return out;
}

std::optional<NonconjugacyEvidence> nonconjugacy_evidence(const Fraction& r, const Word& u, const Word& v,
                                                          std::uint64_t prime_budget) {
  return RepresentationBank(r, prime_budget).separate(u, v);
}

} // namespace twobridge
