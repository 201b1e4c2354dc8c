#include "twobridge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <sstream>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/diagrams.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/finite_field.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/sequences.hpp"

namespace twobridge {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

template <typename Describe>
void expect(CriterionResult& res, bool ok, Describe describe) {
  ++res.checks;
  if (ok) {
    return;
  }
  ++res.failure_count;
  if (res.failures.size() < kMaxListedFailures) {
    res.failures.push_back(describe());
  }
}

// Reduced fractions q/p with 0 < q < p and lo <= p <= hi.
std::vector<Fraction> proper_slopes(std::int64_t lo, std::int64_t hi) {
  std::vector<Fraction> out;
  for (std::int64_t p = lo; p <= hi; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) {
        out.emplace_back(q, p);
      }
    }
  }
  return out;
}

bool is_palindrome(const Seq& s) { return s == reversed(s); }

bool occurs_in(const Seq& seq, const Seq& block) {
  if (block.size() > seq.size()) {
    return false;
  }
  for (std::size_t i = 0; i + block.size() <= seq.size(); ++i) {
    if (std::equal(block.begin(), block.end(), seq.begin() + i)) {
      return true;
    }
  }
  return false;
}

// Rotations of the cyclic sequence at which pattern starts.
std::size_t cyclic_occurrences(const Seq& cyclic, const Seq& pattern) {
  std::size_t count = 0;
  const std::size_t n = cyclic.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j < pattern.size() && cyclic[(i + j) % n] == pattern[j]) {
      ++j;
    }
    count += j == pattern.size();
  }
  return count;
}

void sequences_criterion(CriterionResult& res) {
  std::size_t slopes = 0;
  for (const Fraction& r : proper_slopes(2, 50)) {
    ++slopes;
    const std::string name = r.to_string();
    const Word u = upper_word(r);
    const Seq direct = s_sequence(u);
    expect(res, direct == s_sequence_recursive(r), [&] { return name + ": word route differs from recursion"; });
    expect(res, direct == s_sequence_of_slope(r), [&] { return name + ": s_sequence_of_slope differs"; });
    const CyclicSeq cs = cyclic_s_sequence_of_slope(r);
    expect(res, cs.is_symmetric(), [&] { return name + ": CS(r) is not symmetric"; });
    expect(res, cs == cyclic_s_sequence(u), [&] { return name + ": CS(r) differs from the word"; });

    const Decomposition d = decompose(r);
    expect(res, d == decompose_recursive(r), [&] { return name + ": decomposition routes differ"; });
    expect(res, d.full() == direct, [&] { return name + ": S(r) != (S1,S2,S1,S2)"; });
    expect(res, is_palindrome(d.s1) && is_palindrome(d.s2), [&] { return name + ": a part is not symmetric"; });
    const auto cf = to_continued_fraction(r);
    const std::int64_t m = cf[0];
    expect(res, !d.s2.empty() && d.s2.front() == m && d.s2.back() == m,
           [&] { return name + ": S2 does not begin and end with m"; });
    if (cf.size() == 1) {
      expect(res, d.s1.empty(), [&] { return name + ": S1 should be empty"; });
    } else {
      expect(res, !d.s1.empty() && d.s1.front() == m + 1 && d.s1.back() == m + 1,
             [&] { return name + ": S1 does not begin and end with m+1"; });
      expect(res, cyclic_occurrences(direct, d.s1) == 2, [&] { return name + ": S1 does not occur exactly twice"; });
    }
    expect(res, cyclic_occurrences(direct, d.s2) == 2, [&] { return name + ": S2 does not occur exactly twice"; });
    expect(res, recover_slope(cs, d) == r, [&] { return name + ": slope recovery failed"; });

    if (cf.size() >= 2) {
      const Fraction tilde = to_fraction(reduce_step(cf));
      expect(res, CyclicSeq(t_sequence(r)) == cyclic_s_sequence_of_slope(tilde),
             [&] { return name + ": CT(r) != CS(r~)"; });
      if (cf[1] == 1) {
        expect(res, occurs_in(d.s1, {m + 1, m + 1}), [&] { return name + ": (m+1,m+1) missing from S1"; });
      } else if (!(cf.size() == 2 && cf[1] == 2)) {
        expect(res, occurs_in(d.s2, {m, m}), [&] { return name + ": (m,m) missing from S2"; });
      }
    }
  }
  res.summary = std::to_string(slopes) + " slopes with denominator <= 50";
}

bool starts_with(const Seq& s, const Seq& prefix) {
  return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

bool ends_with(const Seq& s, const Seq& suffix) {
  return suffix.size() <= s.size() && std::equal(suffix.rbegin(), suffix.rend(), s.rbegin());
}

void pieces_criterion(CriterionResult& res) {
  std::size_t subwords = 0, patterns = 0;
  for (const Fraction& r : proper_slopes(2, 15)) {
    if (to_continued_fraction(r).size() < 2) {
      continue;
    }
    const SymmetrizedSet set(r);
    const Decomposition d = decompose(r);
    Seq s12 = d.s1, s21 = d.s2;
    s12.insert(s12.end(), d.s2.begin(), d.s2.end());
    s21.insert(s21.end(), d.s1.begin(), d.s1.end());
    const std::size_t n = set.relator_length();
    const Word u = upper_word(r);
    for (const Word& base : {u, inverse(u)}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t len = 1; len < n; ++len) {
          const Word w = base.cyclic_sub(i, len);
          ++subwords;
          const bool brute = is_piece_bruteforce(set, w).is_piece;
          const bool criterion = is_piece_criterion(r, w);
          expect(res, brute == criterion && brute == is_piece(set, w), [&] {
            return r.to_string() + ": " + w.to_string() + " brute=" + std::to_string(brute) +
                   " criterion=" + std::to_string(criterion);
          });
          const Seq runs = s_sequence(w);
          const bool initial = starts_with(runs, s12) && runs.size() > s12.size();
          const bool terminal = ends_with(runs, s21) && runs.size() > s21.size();
          if (initial || terminal) {
            ++patterns;
            expect(res, min_piece_count(set, w) >= 3,
                   [&] { return r.to_string() + ": " + w.to_string() + " is a product of two pieces"; });
          }
        }
      }
    }
  }
  res.summary = std::to_string(subwords) + " subwords, " + std::to_string(patterns) + " two-piece patterns";
}

void small_cancellation_criterion(CriterionResult& res) {
  std::size_t slopes = 0;
  for (const Fraction& r : proper_slopes(2, 20)) {
    ++slopes;
    const SmallCancellationReport rep = verify_c4_t4(r);
    expect(res, rep.c4 && rep.t4, [&] {
      return r.to_string() + ": " + (rep.violations.empty() ? std::string("failed") : rep.violations.front());
    });
  }
  res.summary = std::to_string(slopes) + " slopes with denominator <= 20";
}

void farey_criterion(CriterionResult& res) {
  const MobiusMap tau = tau_involution();
  expect(res, tau(Fraction::infinity()) == Fraction(3, 8), [] { return "tau(inf) != 3/8"; });
  expect(res, tau(Fraction(1, 6)) == Fraction(3, 10), [] { return "tau(1/6) != 3/10"; });
  expect(res, tau(Fraction(3, 4)) == Fraction(5, 12), [] { return "tau(3/4) != 5/12"; });
  std::size_t instances = 0, fallbacks = 0;
  std::set<Fraction> samples{Fraction::infinity()};
  for (const Fraction& x : slopes_up_to(40)) {
    for (int shift : {-1, 0, 1}) {
      samples.insert(x + Fraction(shift));
    }
  }
  for (const Fraction& r : {Fraction(2, 5), Fraction(3, 7), Fraction(3, 8), Fraction(5, 17)}) {
    for (const Fraction& s : samples) {
      ++instances;
      const std::string name = r.to_string() + ", " + s.to_string();
      const OrbitReduction red = reduce_to_fundamental_domain(r, s);
      fallbacks += red.used_search;
      expect(res, in_fundamental_domain(r, red.s0), [&] { return name + ": representative outside the domain"; });
      expect(res, replay(r, red.word, red.s0) == s, [&] { return name + ": witness replay mismatch"; });
      std::set<Fraction> in_domain;
      for (const Fraction& x : orbit_bfs(r, s, 40)) {
        if (in_fundamental_domain(r, x)) {
          in_domain.insert(x);
        }
      }
      expect(res, in_domain == std::set<Fraction>{red.s0}, [&] {
        return name + ": orbit search found " + std::to_string(in_domain.size()) + " representatives";
      });
    }
  }
  res.summary = std::to_string(instances) + " reductions, " + std::to_string(fallbacks) + " used the orbit search";
}

void exceptional_pairs_criterion(CriterionResult& res) {
  const Fraction r(3, 8);
  struct Target {
    Fraction s, t;
  };
  std::size_t diagrams = 0;
  for (const Target& target : {Target{Fraction(1, 6), Fraction(3, 10)}, Target{Fraction(3, 4), Fraction(5, 12)}}) {
    const std::string name = target.s.to_string() + " -> " + target.t.to_string();
    const Decomposition ds = decompose(target.s);
    const Word us = upper_word(target.s), ut = upper_word(target.t);
    bool hit = false, witnessed = false;
    for (const AnnularDiagram& d : search_one_layer(r, target.s, 4)) {
      ++diagrams;
      const ValidationReport rep = validate(d);
      expect(res, rep.valid, [&] { return name + ": returned diagram is invalid: " + rep.failures.front(); });
      expect(res, recover_slope(cyclic_s_sequence(outer_label(d)), ds) == target.s,
             [&] { return name + ": outer label does not recover s"; });
      if (inner_slope(d) != target.t || witnessed) {
        continue;
      }
      hit = true;
      const RewriteCertificate from_faces = diagram_certificate(d);
      expect(res, check_certificate(from_faces), [&] { return name + ": face certificate fails"; });
      // Base points where the boundary words are exactly u_s^±1 and u_t^±1.
      const Word outer = outer_word(d), inner = inner_path_word(d);
      std::size_t i = 0, j = 0;
      while (i < outer.size() && outer.rotation(i) != us && outer.rotation(i) != inverse(us)) {
        ++i;
      }
      while (j < inner.size() && inner.rotation(j) != ut && inner.rotation(j) != inverse(ut)) {
        ++j;
      }
      if (i == outer.size() || j == inner.size()) {
        continue;
      }
      const Word w = conjugacy_witness(d, i, j);
      const Word lhs = outer.rotation(i), rhs = w * inner.rotation(j) * inverse(w);
      const auto cert = prove_equal(r, lhs, rhs);
      witnessed = cert && check_certificate(*cert) && cert->start == free_reduce(lhs) && cert->end == free_reduce(rhs);
    }
    expect(res, hit, [&] { return name + ": no diagram with the expected inner slope"; });
    expect(res, witnessed, [&] { return name + ": witness not verified by the rewriting search"; });
  }
  const auto reach = [&](Fraction s) { return reachable_inner_slopes(r, s, 4); };
  expect(res, reach(Fraction(1, 6)) == std::set<Fraction>{Fraction(1, 6), Fraction(3, 10)},
         [] { return "reachable set from 1/6 is not {1/6, 3/10}"; });
  expect(res, reach(Fraction(3, 4)) == std::set<Fraction>{Fraction(3, 4), Fraction(5, 12)},
         [] { return "reachable set from 3/4 is not {3/4, 5/12}"; });
  res.summary = std::to_string(diagrams) + " diagrams validated";
}

void identities_criterion(CriterionResult& res) {
  const auto W = [](const char* s) { return Word::parse(s); };
  struct Identity {
    std::string name;
    Fraction r;
    Word lhs, rhs;
  };
  const Word ab = W("ab"), b = W("b");
  const Word u27 = upper_word(Fraction(2, 7)), u35 = upper_word(Fraction(3, 5));
  const Word w3 = W("abbaBAB");
  std::vector<Identity> ids{
      {"(ab)^-1 u_2/7 (ab) = (ba)^3 in G(2/5)", Fraction(2, 5), inverse(ab) * u27 * ab, power(W("ba"), 3)},
      {"u_2/7 = w^2 in G(3/7)", Fraction(3, 7), u27, power(w3, 2)},
      {"u_3/5 = b u_3/5 b^-1 in G(2/5)", Fraction(2, 5), u35, b * u35 * inverse(b)},
  };
  for (std::int64_t n : {3, 4}) {
    const Word u = upper_word(Fraction(n + 1, 2 * n + 1));
    ids.push_back({"u_s = b^-1 u_s b for n=" + std::to_string(n), Fraction(n, 2 * n + 1), u, inverse(b) * u * b});
  }
  for (const Identity& id : ids) {
    const auto cert = prove_equal(id.r, id.lhs, id.rhs);
    expect(res, cert && check_certificate(*cert) && cert->start == free_reduce(id.lhs) &&
                    cert->end == free_reduce(id.rhs),
           [&] { return id.name + ": no verified certificate"; });
  }
  const Word w = W("BAB");
  const Word conj = inverse(w) * b * w;
  const Word u15 = upper_word(Fraction(1, 5));
  const auto cert = prove_commute(Fraction(2, 5), u15, conj);
  expect(res, cert && check_certificate(*cert) && cert->end.empty() &&
                  cert->start == free_reduce(u15 * conj * inverse(u15) * inverse(conj)),
         [] { return "[u_1/5, w^-1 b w] = 1 in G(2/5): no verified certificate"; });
  res.summary = std::to_string(ids.size() + 1) + " identities";
}

void nonconjugacy_criterion(CriterionResult& res) {
  std::size_t negative = 0, separated = 0, positive = 0;
  std::ostringstream misses;
  for (const Fraction& r : {Fraction(2, 5), Fraction(3, 7), Fraction(3, 8)}) {
    const RepresentationBank bank(r, 500);
    const SlopeIntervals iv = intervals(r);
    std::vector<Fraction> slopes;
    for (const Fraction& s : slopes_up_to(12)) {
      if (contains(iv, s)) {
        slopes.push_back(s);
      }
    }
    for (std::size_t i = 0; i < slopes.size(); ++i) {
      for (std::size_t j = i + 1; j < slopes.size(); ++j) {
        const Fraction &s = slopes[i], &t = slopes[j];
        const Verdict v = decide_homotopic(r, s, t);
        const auto ev = bank.separate(upper_word(s), upper_word(t));
        if (v.homotopic) {
          ++positive;
          expect(res, !ev, [&] {
            return r.to_string() + ": traces separate the homotopic pair " + s.to_string() + ", " + t.to_string();
          });
          continue;
        }
        ++negative;
        if (ev) {
          ++separated;
        } else {
          misses << " " << r << ":(" << s << "," << t << ")";
        }
      }
    }
  }
  const double rate = negative ? static_cast<double>(separated) / static_cast<double>(negative) : 1.0;
  expect(res, rate >= 0.95, [&] { return "separation rate " + std::to_string(rate) + " below 0.95"; });
  res.summary = std::to_string(separated) + "/" + std::to_string(negative) + " non-homotopic pairs separated, " +
                std::to_string(positive) + " homotopic pairs unseparated as required; non-homotopic pairs left unseparated:" + misses.str();
}

void connection_criterion(CriterionResult& res) {
  std::size_t pairs = 0, triggered = 0;
  std::vector<Fraction> targets;
  for (const Fraction& s : slopes_up_to(30)) {
    if (s.num() > 0) {
      targets.push_back(s);
    }
  }
  for (const Fraction& r : proper_slopes(2, 30)) {
    if (to_continued_fraction(r).size() < 2) {
      continue;
    }
    const SlopeIntervals iv = intervals(r);
    for (const Fraction& s : targets) {
      ++pairs;
      if (connection_violation(r, s)) {
        ++triggered;
        expect(res, !contains(iv, s),
               [&] { return r.to_string() + ", " + s.to_string() + ": contains both parts yet lies in I_1 or I_2"; });
      }
    }
  }
  res.summary = std::to_string(pairs) + " pairs, " + std::to_string(triggered) + " contain both parts";
}

} // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "sequences", 5, sequences_criterion},
      {2, "pieces", 60, pieces_criterion},
      {3, "small-cancellation", 120, small_cancellation_criterion},
      {4, "farey", 60, farey_criterion},
      {5, "exceptional-pairs", 600, exceptional_pairs_criterion},
      {6, "identities", 300, identities_criterion},
      {7, "nonconjugacy", 600, nonconjugacy_criterion},
      {8, "connection", 60, connection_criterion},
  };
  return criteria;
}

CriterionResult run_criterion(const Criterion& c) {
  CriterionResult res;
  res.id = c.id;
  res.name = c.name;
  res.time_limit = c.time_limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(res);
  } catch (const std::exception& e) {
    ++res.failure_count;
    res.failures.push_back(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.seconds >= c.time_limit) {
    ++res.failure_count;
    res.failures.push_back("took " + std::to_string(res.seconds) + " s, limit " + std::to_string(c.time_limit) + " s");
  }
  res.passed = res.failure_count == 0;
  return res;
}

std::vector<CriterionResult> run_acceptance(const std::string& filter) {
  std::vector<CriterionResult> out;
  for (const Criterion& c : acceptance_criteria()) {
    if (filter.empty() || filter == c.name || filter == std::to_string(c.id)) {
      out.push_back(run_criterion(c));
    }
  }
  return out;
}

} // namespace twobridge
