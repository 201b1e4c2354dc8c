#include "twobridge/polynomial.hpp"

#include <random>
#include <stdexcept>

namespace twobridge {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
  }
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) {
    return *this;
  }
  BigInt c = content();
  if (leading() < 0) {
    c = -c;
  }
  std::vector<BigInt> out;
  for (const auto& x : coeffs_) {
    out.push_back(x / c);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * static_cast<long long>(i));
  }
  return IntPoly(std::move(out));
}

int IntPoly::valuation() const {
  if (is_zero()) {
    throw std::invalid_argument("valuation of the zero polynomial");
  }
  int k = 0;
  while (coeffs_[k] == 0) {
    ++k;
  }
  return k;
}

IntPoly IntPoly::shift_down(int k) const {
  if (k > valuation()) {
    throw std::invalid_argument("y^k does not divide the polynomial");
  }
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.coeff(i) + g.coeff(i);
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.coeff(i) - g.coeff(i);
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    return IntPoly();
  }
  std::vector<BigInt> out(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& y) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y + *it;
  }
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) {
      continue;
    }
    BigInt mag = abs(c);
    if (!out.empty()) {
      out += c < 0 ? "-" : "+";
    } else if (c < 0) {
      out += "-";
    }
    if (i == 0 || mag != 1) {
      out += mag.str();
      if (i > 0) {
        out += "*";
      }
    }
    if (i >= 1) {
      out += "y";
    }
    if (i >= 2) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const BigInt& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    std::vector<BigInt> term(shift + 1);
    term[shift] = a.leading();
    a = IntPoly::constant(lb) * a - IntPoly(term) * b;
  }
  return a;
}

} // namespace

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = f.primitive_part();
  IntPoly b = g.primitive_part();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
  }
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    b = r.primitive_part();
  }
  return a.primitive_part();
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  IntPoly rem = f;
  std::vector<BigInt> quot(std::max(0, f.degree() - g.degree() + 1));
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    if (rem.leading() % g.leading() != 0) {
      throw std::invalid_argument("polynomial division is not exact");
    }
    const int shift = rem.degree() - g.degree();
    BigInt q = rem.leading() / g.leading();
    quot[shift] = q;
    std::vector<BigInt> term(shift + 1);
    term[shift] = q;
    rem = rem - IntPoly(term) * g;
  }
  if (!rem.is_zero()) {
    throw std::invalid_argument("polynomial division is not exact");
  }
  return IntPoly(std::move(quot));
}

IntPoly squarefree_part(const IntPoly& f) {
  IntPoly d = f.derivative();
  if (d.is_zero()) {
    return f.primitive_part();
  }
  return exact_divide(f.primitive_part(), gcd(f, d)).primitive_part();
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) {
      r = r * b % p;
    }
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) {
    throw std::domain_error("zero has no inverse");
  }
  return mod_pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<char> composite(n + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) {
      continue;
    }
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) {
      composite[j] = 1;
    }
  }
  return out;
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p_ < 2 || p_ >= (1ull << 31)) {
    throw std::invalid_argument("modulus out of range");
  }
  for (auto& x : c_) {
    x %= p_;
  }
  trim();
}

ModPoly ModPoly::from_int(std::uint64_t p, const IntPoly& f) {
  std::vector<std::uint64_t> c;
  const BigInt bp(p);
  for (const auto& x : f.coeffs()) {
    BigInt m = x % bp;
    if (m < 0) {
      m += bp;
    }
    c.push_back(m.convert_to<std::uint64_t>());
  }
  return ModPoly(p, std::move(c));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

ModPoly ModPoly::monic() const {
  if (is_zero()) {
    return *this;
  }
  const std::uint64_t inv = mod_inverse(leading(), p_);
  std::vector<std::uint64_t> out(c_);
  for (auto& x : out) {
    x = x * inv % p_;
  }
  return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(c_[i] * (i % p_) % p_);
  }
  return ModPoly(p_, std::move(out));
}

ModPoly operator+(const ModPoly& f, const ModPoly& g) {
  std::vector<std::uint64_t> out(std::max(f.c_.size(), g.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t a = i < f.c_.size() ? f.c_[i] : 0;
    std::uint64_t b = i < g.c_.size() ? g.c_[i] : 0;
    out[i] = (a + b) % f.p_;
  }
  return ModPoly(f.p_, std::move(out));
}

ModPoly operator-(const ModPoly& f, const ModPoly& g) {
  std::vector<std::uint64_t> out(std::max(f.c_.size(), g.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t a = i < f.c_.size() ? f.c_[i] : 0;
    std::uint64_t b = i < g.c_.size() ? g.c_[i] : 0;
    out[i] = (a + f.p_ - b) % f.p_;
  }
  return ModPoly(f.p_, std::move(out));
}

ModPoly operator*(const ModPoly& f, const ModPoly& g) {
  if (f.is_zero() || g.is_zero()) {
    return ModPoly(f.p_, {});
  }
  std::vector<std::uint64_t> out(f.c_.size() + g.c_.size() - 1, 0);
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      out[i + j] = (out[i + j] + f.c_[i] * g.c_[j]) % f.p_;
    }
  }
  return ModPoly(f.p_, std::move(out));
}

namespace {

void divide(const ModPoly& f, const ModPoly& g, ModPoly* quot, ModPoly* rem) {
  if (g.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  const std::uint64_t p = f.prime();
  std::vector<std::uint64_t> r = f.coeffs();
  const auto& d = g.coeffs();
  const std::uint64_t inv = mod_inverse(g.leading(), p);
  std::vector<std::uint64_t> q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, 0);
  for (std::size_t i = r.size(); i >= d.size() && i > 0; --i) {
    const std::uint64_t c = r[i - 1] * inv % p;
    const std::size_t shift = i - d.size();
    q[shift] = c;
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
      r[shift + j] = (r[shift + j] + p - c * d[j] % p) % p;
    }
  }
  if (quot) {
    *quot = ModPoly(p, std::move(q));
  }
  if (rem) {
    r.resize(std::min(r.size(), d.size() - 1));
    *rem = ModPoly(p, std::move(r));
  }
}

} // namespace

ModPoly operator%(const ModPoly& f, const ModPoly& g) {
  ModPoly r(f.p_, {});
  divide(f, g, nullptr, &r);
  return r;
}

ModPoly operator/(const ModPoly& f, const ModPoly& g) {
  ModPoly q(f.p_, {});
  divide(f, g, &q, nullptr);
  return q;
}

std::uint64_t ModPoly::evaluate(std::uint64_t y) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = (acc * y + *it) % p_;
  }
  return acc;
}

ModPoly gcd(ModPoly f, ModPoly g) {
  while (!g.is_zero()) {
    ModPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& m) {
  ModPoly result(m.prime(), {1});
  result = result % m;
  ModPoly b = base % m;
  const std::size_t bits = e == 0 ? 0 : msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (bit_test(e, i)) {
      result = (result * b) % m;
    }
  }
  return result;
}

std::vector<ModPoly> equal_degree_factors(const ModPoly& f, int d) {
  if (f.degree() <= d) {
    return {f.monic()};
  }
  const std::uint64_t p = f.prime();
  std::mt19937_64 rng(0x5eed ^ p ^ (static_cast<std::uint64_t>(f.degree()) << 32));
  const BigInt e = (boost::multiprecision::pow(BigInt(p), d) - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<std::uint64_t> h(f.degree());
    for (auto& x : h) {
      x = rng() % p;
    }
    ModPoly hp(p, h);
    if (hp.degree() < 1) {
      continue;
    }
    ModPoly g = gcd(f, powmod(hp, e, f) - ModPoly(p, {1}));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factors(g, d);
      auto right = equal_degree_factors((f / g).monic(), d);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  throw std::runtime_error("equal-degree splitting did not converge");
}

} // namespace twobridge
