#include "twobridge/slopes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twobridge {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("expected an integer, got '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  return BigInt(s);
}

} // namespace

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) {
      throw std::invalid_argument("0/0 is not a slope");
    }
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "1/0") {
    return infinity();
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Fraction(parse_integer(text), BigInt(1));
  }
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den < 0) {
    throw std::invalid_argument("denominator must be non-negative: '" + std::string(text) + "'");
  }
  return Fraction(parse_integer(text.substr(0, slash)), den);
}

std::string Fraction::to_string() const {
  if (is_infinite()) {
    return "inf";
  }
  if (den_ == 1) {
    return num_.str() + "/1";
  }
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
  if (x.is_infinite() || y.is_infinite()) {
    return x.is_infinite() <=> y.is_infinite();
  }
  BigInt lhs = x.num_ * y.den_;
  BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void require_finite(const Fraction& x, const Fraction& y, const char* op) {
  if (x.is_infinite() || y.is_infinite()) {
    throw std::domain_error(std::string("arithmetic on inf: ") + op);
  }
}

} // namespace

Fraction operator+(const Fraction& x, const Fraction& y) {
  require_finite(x, y, "+");
  return Fraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Fraction operator-(const Fraction& x, const Fraction& y) {
  require_finite(x, y, "-");
  return Fraction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Fraction operator*(const Fraction& x, const Fraction& y) {
  require_finite(x, y, "*");
  return Fraction(x.num_ * y.num_, x.den_ * y.den_);
}

Fraction operator/(const Fraction& x, const Fraction& y) {
  require_finite(x, y, "/");
  if (y.num_ == 0) {
    throw std::domain_error("division by zero");
  }
  return Fraction(x.num_ * y.den_, x.den_ * y.num_);
}

Fraction Fraction::operator-() const {
  if (is_infinite()) {
    return *this;
  }
  return Fraction(-num_, den_);
}

BigInt Fraction::floor() const {
  if (is_infinite()) {
    throw std::domain_error("floor of inf");
  }
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) {
    q -= 1;
  }
  return q;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

ContinuedFraction::ContinuedFraction(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw std::invalid_argument("continued fraction needs at least one term");
  }
  for (Term t : terms_) {
    if (t < 1) {
      throw std::invalid_argument("continued fraction terms must be positive");
    }
  }
  if (terms_.size() >= 2 && terms_.back() < 2) {
    throw std::invalid_argument("last continued fraction term must be at least 2");
  }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::string s(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw std::invalid_argument("continued fraction must look like [m1,m2,...]: '" + s + "'");
  }
  std::vector<Term> terms;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    BigInt v = parse_integer(item);
    terms.push_back(v.convert_to<Term>());
  }
  return ContinuedFraction(std::move(terms));
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(terms_[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) { return os << cf.to_string(); }

Fraction evaluate_expansion(const std::vector<ContinuedFraction::Term>& terms) {
  // Evaluate from the tail: x <- 1/(t + x).
  BigInt num = 0;
  BigInt den = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    BigInt next_den = BigInt(*it) * den + num;
    num = den;
    den = next_den;
  }
  return Fraction(num, den);
}

ContinuedFraction to_continued_fraction(const Fraction& r) {
  if (r.is_infinite() || r.num() <= 0 || r.num() > r.den()) {
    throw std::invalid_argument("continued fraction expansion needs 0 < r <= 1, got " + r.to_string());
  }
  std::vector<ContinuedFraction::Term> terms;
  BigInt num = r.num();
  BigInt den = r.den();
  while (num != 0) {
    BigInt q = den / num;
    if (q > BigInt(std::numeric_limits<ContinuedFraction::Term>::max())) {
      throw std::overflow_error("continued fraction term too large");
    }
    terms.push_back(q.convert_to<ContinuedFraction::Term>());
    BigInt rem = den - q * num;
    den = num;
    num = rem;
  }
  // The Euclidean expansion already ends in a term >= 2 except for r = 1.
  return ContinuedFraction(std::move(terms));
}

Fraction to_fraction(const ContinuedFraction& cf) { return evaluate_expansion(cf.terms()); }

ContinuedFraction reduce_step(const ContinuedFraction& cf) {
  if (cf.size() < 2) {
    throw std::invalid_argument("reduce_step needs at least two terms, got " + cf.to_string());
  }
  const auto& m = cf.terms();
  if (m[1] == 1) {
    return ContinuedFraction(std::vector<ContinuedFraction::Term>(m.begin() + 2, m.end()));
  }
  std::vector<ContinuedFraction::Term> out(m.begin() + 1, m.end());
  out[0] -= 1;
  return ContinuedFraction(std::move(out));
}

bool in_open_unit_interval(const Fraction& r) {
  return !r.is_infinite() && r.num() > 0 && r.num() < r.den();
}

SlopeIntervals intervals(const Fraction& r) {
  if (!in_open_unit_interval(r)) {
    throw std::invalid_argument("intervals need 0 < r < 1, got " + r.to_string());
  }
  const auto cf = to_continued_fraction(r);
  const auto& m = cf.terms();
  std::vector<ContinuedFraction::Term> head(m.begin(), m.end() - 1);
  std::vector<ContinuedFraction::Term> lowered(m.begin(), m.end());
  lowered.back() -= 1;
  Fraction a = evaluate_expansion(head);
  Fraction b = evaluate_expansion(lowered);
  if (m.size() % 2 == 1) {
    return {a, b};
  }
  return {b, a};
}

bool contains(const SlopeIntervals& iv, const Fraction& s) {
  if (s.is_infinite()) {
    return false;
  }
  const Fraction zero(0), one(1);
  return (zero <= s && s <= iv.r1) || (iv.r2 <= s && s <= one);
}

std::vector<Fraction> slopes_up_to(std::int64_t max_den) {
  std::vector<Fraction> out;
  for (std::int64_t p = 1; p <= max_den; ++p) {
    for (std::int64_t q = 0; q <= p; ++q) {
      if (std::gcd(p, q) == 1) {
        out.emplace_back(q, p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace twobridge
