#include "twobridge/farey.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace twobridge {

MobiusMap::MobiusMap(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  BigInt det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1) {
    throw std::invalid_argument("Mobius map must have determinant +-1, got " + det.str());
  }
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Fraction MobiusMap::operator()(const Fraction& x) const {
  return Fraction(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  return MobiusMap(f.a_ * g.a_ + f.b_ * g.c_, f.a_ * g.b_ + f.b_ * g.d_, f.c_ * g.a_ + f.d_ * g.c_,
                   f.c_ * g.b_ + f.d_ * g.d_);
}

MobiusMap MobiusMap::inverse() const {
  // Up to sign the inverse is the adjugate.
  return MobiusMap(d_, -b_, -c_, a_);
}

std::string MobiusMap::to_string() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

MobiusMap edge_reflection(const Fraction& x, const Fraction& y) {
  MobiusMap n(x.num(), y.num(), x.den(), y.den());
  return n * MobiusMap(-1, 0, 0, 1) * n.inverse();
}

std::vector<MobiusMap> gamma_inf_generators() { return {MobiusMap(-1, 0, 0, 1), MobiusMap(-1, 2, 0, 1)}; }

std::vector<MobiusMap> gamma_r_generators(const Fraction& r) {
  const SlopeIntervals iv = intervals(r);
  return {edge_reflection(r, iv.r1), edge_reflection(r, iv.r2)};
}

MobiusMap tau_involution() { return MobiusMap(3, -1, 8, -3); }

namespace {

// M'(∞) = r, M'(1) = r1, M'(0) = r2.
MobiusMap unfolding_map(const Fraction& r) {
  const SlopeIntervals iv = intervals(r);
  return MobiusMap(r.num(), iv.r1.num() - r.num(), r.den(), iv.r1.den() - r.den());
}

MobiusMap translation(const BigInt& k) { return MobiusMap(1, 2 * k, 0, 1); }

OrbitStep inverse_step(const OrbitStep& s) {
  if (s.generator == OrbitGenerator::TranslateInf || s.generator == OrbitGenerator::TranslateR) {
    return {s.generator, -s.exponent};
  }
  return s;
}

std::vector<OrbitStep> as_witness(const std::vector<OrbitStep>& forward) {
  std::vector<OrbitStep> out;
  out.reserve(forward.size());
  for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
    out.push_back(inverse_step(*it));
  }
  return out;
}

// Folds x into [0, 1] ∪ {∞} with x -> x + 2k and x -> 2 - x, recording the
// moves applied.
Fraction fold_with_moves(const Fraction& x, std::vector<OrbitStep>& moves) {
  if (x.is_infinite()) {
    return x;
  }
  BigInt k = Fraction(x.num(), 2 * x.den()).floor();
  Fraction y = x;
  if (k != 0) {
    y = Fraction(x.num() - 2 * k * x.den(), x.den());
    moves.push_back({OrbitGenerator::TranslateInf, -k});
  }
  if (y > Fraction(1)) {
    y = Fraction(2 * y.den() - y.num(), y.den());
    moves.push_back({OrbitGenerator::ReflectInfOne, 1});
  }
  return y;
}

OrbitGenerator conjugate_generator(OrbitGenerator g) {
  switch (g) {
  case OrbitGenerator::NegateInf:
    return OrbitGenerator::ReflectRR2;
  case OrbitGenerator::ReflectInfOne:
    return OrbitGenerator::ReflectRR1;
  case OrbitGenerator::TranslateInf:
    return OrbitGenerator::TranslateR;
  default:
    throw std::logic_error("generator has no conjugate");
  }
}

std::size_t bit_length(const BigInt& x) { return x == 0 ? 0 : msb(x) + 1; }

struct SearchEdge {
  Fraction parent;
  std::vector<OrbitStep> moves;
};

// Breadth-first exploration of folded representatives. When want_paths is set,
// parent links are kept so paths can be rebuilt.
std::map<Fraction, SearchEdge> explore(const Fraction& r, const Fraction& start, const BigInt& limit) {
  const auto gens = gamma_r_generators(r);
  const OrbitGenerator gen_ids[2] = {OrbitGenerator::ReflectRR1, OrbitGenerator::ReflectRR2};
  std::map<Fraction, SearchEdge> seen;
  std::deque<Fraction> frontier;
  seen.emplace(start, SearchEdge{start, {}});
  frontier.push_back(start);
  while (!frontier.empty()) {
    Fraction c = frontier.front();
    frontier.pop_front();
    for (int gi = 0; gi < 2; ++gi) {
      const MobiusMap& g = gens[gi];
      auto visit = [&](const Fraction& x, std::vector<OrbitStep> moves) {
        Fraction y = g(x);
        if (!y.is_infinite() && y.den() > limit) {
          return;
        }
        moves.push_back({gen_ids[gi], 1});
        Fraction folded = fold_with_moves(y, moves);
        if (seen.emplace(folded, SearchEdge{c, std::move(moves)}).second) {
          frontier.push_back(folded);
        }
      };
      if (c.is_infinite()) {
        visit(c, {});
        continue;
      }
      for (int sgn : {1, -1}) {
        // den(g(sgn c + 2k)) = |2 C d k + e|.
        const BigInt n = sgn * c.num();
        const BigInt& d = c.den();
        const BigInt slope = 2 * g.c() * d;
        const BigInt e = g.c() * n + g.d() * d;
        if (slope == 0) {
          continue;
        }
        BigInt lo = Fraction(-limit - e, slope).floor();
        BigInt hi = Fraction(limit - e, slope).floor() + 1;
        for (BigInt k = lo; k <= hi; ++k) {
          std::vector<OrbitStep> moves;
          if (sgn < 0) {
            moves.push_back({OrbitGenerator::NegateInf, 1});
          }
          if (k != 0) {
            moves.push_back({OrbitGenerator::TranslateInf, k});
          }
          visit(Fraction(n + 2 * k * d, d), std::move(moves));
        }
      }
    }
  }
  return seen;
}

OrbitReduction reduce_by_search(const Fraction& r, const Fraction& s) {
  std::vector<OrbitStep> forward;
  Fraction c = fold_with_moves(s, forward);
  BigInt limit = 4 * (s.is_infinite() ? BigInt(1) : s.den());
  auto seen = explore(r, c, limit);
  for (const auto& [x, edge] : seen) {
    if (!in_fundamental_domain(r, x)) {
      continue;
    }
    std::vector<std::vector<OrbitStep>> segments;
    for (Fraction y = x; y != c; y = seen.at(y).parent) {
      segments.push_back(seen.at(y).moves);
    }
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
      forward.insert(forward.end(), it->begin(), it->end());
    }
    OrbitReduction out{x, as_witness(forward), 0, true};
    return out;
  }
  throw std::logic_error("orbit search found no representative of " + s.to_string());
}

} // namespace

MobiusMap orbit_step_map(const Fraction& r, const OrbitStep& step) {
  switch (step.generator) {
  case OrbitGenerator::NegateInf:
    return MobiusMap(-1, 0, 0, 1);
  case OrbitGenerator::ReflectInfOne:
    return MobiusMap(-1, 2, 0, 1);
  case OrbitGenerator::ReflectRR1:
    return gamma_r_generators(r)[0];
  case OrbitGenerator::ReflectRR2:
    return gamma_r_generators(r)[1];
  case OrbitGenerator::TranslateInf:
    return translation(step.exponent);
  case OrbitGenerator::TranslateR: {
    MobiusMap m = unfolding_map(r);
    return m * translation(step.exponent) * m.inverse();
  }
  }
  throw std::invalid_argument("unknown orbit generator");
}

Fraction replay(const Fraction& r, const std::vector<OrbitStep>& word, const Fraction& x) {
  Fraction y = x;
  for (const auto& step : word) {
    y = orbit_step_map(r, step)(y);
  }
  return y;
}

bool in_fundamental_domain(const Fraction& r, const Fraction& s) {
  return s.is_infinite() || s == r || contains(intervals(r), s);
}

Fraction fold_inf(const Fraction& x) {
  std::vector<OrbitStep> moves;
  return fold_with_moves(x, moves);
}

OrbitReduction reduce_to_fundamental_domain(const Fraction& r, const Fraction& s) {
  if (!in_open_unit_interval(r)) {
    throw std::invalid_argument("reduction needs 0 < r < 1, got " + r.to_string());
  }
  const MobiusMap unfold = unfolding_map(r);
  const MobiusMap fold_in = unfold.inverse();
  std::vector<OrbitStep> forward;
  Fraction x = fold_with_moves(s, forward);
  const std::size_t cap = 10 * bit_length(x.is_infinite() ? BigInt(1) : x.den()) + 10;
  std::size_t rounds = 0;
  while (!in_fundamental_domain(r, x)) {
    if (++rounds > cap) {
      return reduce_by_search(r, s);
    }
    const BigInt before = x.den();
    std::vector<OrbitStep> inner;
    Fraction y = fold_with_moves(fold_in(x), inner);
    for (const auto& step : inner) {
      forward.push_back({conjugate_generator(step.generator), step.exponent});
    }
    x = fold_with_moves(unfold(y), forward);
    if (!x.is_infinite() && x.den() >= before) {
      return reduce_by_search(r, s);
    }
  }
  return OrbitReduction{x, as_witness(forward), rounds, false};
}

std::set<Fraction> orbit_bfs(const Fraction& r, const Fraction& s, std::int64_t den_bound) {
  if (!s.is_infinite() && s.den() > den_bound) {
    throw std::invalid_argument("orbit search bound is below the denominator of " + s.to_string());
  }
  auto seen = explore(r, fold_inf(s), BigInt(4 * den_bound));
  std::set<Fraction> out;
  for (const auto& entry : seen) {
    if (entry.first.is_infinite() || entry.first.den() <= den_bound) {
      out.insert(entry.first);
    }
  }
  return out;
}

bool is_null_homotopic(const Fraction& r, const Fraction& s) {
  const Fraction s0 = reduce_to_fundamental_domain(r, s).s0;
  return s0.is_infinite() || s0 == r;
}

} // namespace twobridge
