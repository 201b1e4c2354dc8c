#include "twobridge/decide.hpp"

#include <utility>

#include "twobridge/diagrams.hpp"
#include "twobridge/farey.hpp"

namespace twobridge {

std::string to_string(const Family& f) {
  const std::string n = std::to_string(f.parameter);
  switch (f.tag) {
  case FamilyTag::TorusOneOverP:
    return "1/p with p=" + n;
  case FamilyTag::TwoN1:
    return "[2,n] with n=" + n;
  case FamilyTag::TwoOneN:
    return "[2,1,n] with n=" + n;
  default:
    return "unsupported";
  }
}

UnsupportedFamily::UnsupportedFamily(const Fraction& r)
    : std::invalid_argument("slope " + r.to_string() + " is not of the form [p], [2,n] or [2,1,n]") {}

Family classify_family(const Fraction& r) {
  if (!in_open_unit_interval(r)) {
    throw std::invalid_argument("link slope must satisfy 0 < r < 1, got " + r.to_string());
  }
  const auto cf = to_continued_fraction(r);
  const auto& m = cf.terms();
  if (m.size() == 1) {
    return {FamilyTag::TorusOneOverP, m[0]};
  }
  if (m.size() == 2 && m[0] == 2 && m[1] >= 2) {
    return {FamilyTag::TwoN1, m[1]};
  }
  if (m.size() == 3 && m[0] == 2 && m[1] == 1 && m[2] >= 2) {
    return {FamilyTag::TwoOneN, m[2]};
  }
  return {FamilyTag::Unsupported, 0};
}

namespace {

Family supported_family(const Fraction& r) {
  const Family f = classify_family(r);
  if (f.tag == FamilyTag::Unsupported) {
    throw UnsupportedFamily(r);
  }
  return f;
}

void require_in_intervals(const Fraction& r, const Fraction& s) {
  if (!contains(intervals(r), s)) {
    throw std::invalid_argument("slope " + s.to_string() + " lies outside I_1 and I_2 of " + r.to_string());
  }
}

bool is_exceptional_pair(const Fraction& r, const Fraction& s, const Fraction& t) {
  if (r != Fraction(3, 8)) {
    return false;
  }
  const auto pair = [&](Fraction x, Fraction y) { return (s == x && t == y) || (s == y && t == x); };
  return pair(Fraction(1, 6), Fraction(3, 10)) || pair(Fraction(3, 4), Fraction(5, 12));
}

// A certificate carrying u_s to a conjugate of u_t, or u_t to a conjugate of
// u_s, read off a one-ring diagram. The search starts from the shorter word.
std::optional<RewriteCertificate> diagram_route(const Fraction& r, Fraction s, Fraction t) {
  if (t.den() < s.den()) {
    std::swap(s, t);
  }
  const Word u = upper_word(s);
  const CyclicWord target(u);
  for (const AnnularDiagram& d : search_one_layer(r, s, 4)) {
    if (inner_slope(d) != t || outer_label(d) != target) {
      continue;
    }
    const Word outer = outer_word(d);
    for (std::size_t i = 0; i < outer.size(); ++i) {
      if (outer.rotation(i) == u) {
        return diagram_certificate(d, i);
      }
    }
  }
  return std::nullopt;
}

std::optional<RewriteCertificate> search_route(const Fraction& r, const Fraction& s, const Fraction& t,
                                               const DecideOptions& options) {
  const Word u = upper_word(s), v = upper_word(t);
  for (const Word& target : {v, inverse(v)}) {
    if (auto c = conjugacy_search(r, u, target, options.max_conjugator_length, options.search)) {
      return c;
    }
  }
  return std::nullopt;
}

void attach_evidence(const Fraction& r, const Fraction& s, const Fraction& t, const DecideOptions& options,
                     Verdict& v) {
  if (!options.certify) {
    return;
  }
  if (v.homotopic) {
    std::optional<RewriteCertificate> c;
    if (r == Fraction(3, 8)) {
      c = diagram_route(r, s, t);
    }
    if (!c) {
      c = search_route(r, s, t, options);
    }
    if (c) {
      v.certificates.push_back(std::move(*c));
    }
  } else {
    v.evidence = nonconjugacy_evidence(r, upper_word(s), upper_word(t), options.prime_budget);
  }
}

} // namespace

Verdict decide_homotopic(const Fraction& r, const Fraction& s, const Fraction& s_prime,
                         const DecideOptions& options) {
  const Family family = supported_family(r);
  require_in_intervals(r, s);
  require_in_intervals(r, s_prime);
  if (s == s_prime) {
    throw std::invalid_argument("decide_homotopic needs distinct slopes");
  }
  Verdict v;
  switch (family.tag) {
  case FamilyTag::TorusOneOverP: {
    if (s.num() == 0 || s_prime.num() == 0) {
      throw std::invalid_argument("slope 0 is excluded for r = 1/p");
    }
    // q1 = q2 and q1/(p1 + p2) = 1/p.
    v.homotopic = s.num() == s_prime.num() && s.num() * family.parameter == s.den() + s_prime.den();
    v.rule = v.homotopic ? "torus link: q1 = q2 and q1/(p1+p2) = 1/p"
                         : "torus link: q1 = q2 and q1/(p1+p2) = 1/p fails";
    break;
  }
  case FamilyTag::TwoN1:
    v.homotopic = false;
    v.rule = "r = n/(2n+1): distinct slopes are never homotopic";
    break;
  case FamilyTag::TwoOneN:
    v.homotopic = is_exceptional_pair(r, s, s_prime);
    v.rule = v.homotopic ? "r = 3/8 exceptional pair" : "r = (n+1)/(3n+2): not an exceptional pair";
    break;
  default:
    throw UnsupportedFamily(r);
  }
  attach_evidence(r, s, s_prime, options, v);
  return v;
}

Verdict full_decision(const Fraction& r, const Fraction& s, const Fraction& s_prime, const DecideOptions& options) {
  supported_family(r);
  const Fraction a = reduce_to_fundamental_domain(r, s).s0;
  const Fraction b = reduce_to_fundamental_domain(r, s_prime).s0;
  const auto is_null = [&](const Fraction& x) { return x.is_infinite() || x == r; };
  Verdict v;
  if (is_null(a) && is_null(b)) {
    v.homotopic = true;
    v.rule = "both loops are null-homotopic";
    return v;
  }
  if (is_null(a) || is_null(b)) {
    v.homotopic = false;
    v.rule = "exactly one loop is null-homotopic";
    return v;
  }
  if (a == b) {
    v.homotopic = true;
    v.rule = "same orbit: both reduce to " + a.to_string();
    return v;
  }
  v = decide_homotopic(r, a, b, options);
  v.rule = "reduced to " + a.to_string() + " and " + b.to_string() + "; " + v.rule;
  return v;
}

Classification classify_loop(const Fraction& r, const Fraction& s, const DecideOptions& options) {
  const Family family = supported_family(r);
  if (family.tag != FamilyTag::TwoN1 && family.tag != FamilyTag::TwoOneN) {
    throw std::invalid_argument("classification is available for r = n/(2n+1) and (n+1)/(3n+2) only");
  }
  require_in_intervals(r, s);
  Classification c;
  if (family.tag == FamilyTag::TwoOneN) {
    c.rule = "r = (n+1)/(3n+2): every loop is non-peripheral and primitive";
    return c;
  }
  const std::int64_t n = family.parameter;
  const Word b = Word::parse("b");
  if (n == 2 && s == Fraction(1, 5)) {
    const Word w = Word::parse("BAB");
    c.peripheral = true;
    c.meridian = inverse(w) * b * w;
    c.rule = "r = 2/5, s = 1/5: commutes with a conjugate of b";
  } else if (s == Fraction(n + 1, 2 * n + 1)) {
    c.peripheral = true;
    c.meridian = b;
    c.rule = "s = (n+1)/(2n+1): commutes with b";
  }
  if (n == 2 && s == Fraction(2, 7)) {
    const Word ab = Word::parse("ab");
    c.power = PowerRoot{ab * Word::parse("ba") * inverse(ab), 3};
    c.rule = "r = 2/5, s = 2/7: a cube";
  } else if (n == 2 && s == Fraction(3, 4)) {
    const Word w = Word::parse("abA");
    c.power = PowerRoot{w * Word::parse("ABab") * inverse(w), 3};
    c.rule = "r = 2/5, s = 3/4: a cube";
  } else if (n == 3 && s == Fraction(2, 7)) {
    c.power = PowerRoot{Word::parse("abbaBAB"), 2};
    c.rule = "r = 3/7, s = 2/7: a square";
  }
  c.primitive = !c.power.has_value();
  if (!c.peripheral && c.primitive) {
    c.rule = "r = n/(2n+1): non-peripheral and primitive";
  }
  if (options.certify) {
    const Word u = upper_word(s);
    if (c.power) {
      if (auto cert = prove_equal(r, u, power(c.power->root, c.power->exponent), options.search)) {
        c.certificates.push_back(std::move(*cert));
      }
    }
    if (c.meridian) {
      if (auto cert = prove_commute(r, u, *c.meridian, options.search)) {
        c.certificates.push_back(std::move(*cert));
      }
    }
  }
  return c;
}

} // namespace twobridge
