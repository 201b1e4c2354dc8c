#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twobridge/finite_field.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

enum class FamilyTag { TorusOneOverP, TwoN1, TwoOneN, Unsupported };

/// The link families with a closed-form answer: 1/p = [p], n/(2n+1) = [2, n]
/// and (n+1)/(3n+2) = [2, 1, n]. parameter is p or n.
struct Family {
  FamilyTag tag = FamilyTag::Unsupported;
  std::int64_t parameter = 0;
  friend bool operator==(const Family&, const Family&) = default;
};

std::string to_string(const Family& f);

/// Raised for slopes outside the supported families.
class UnsupportedFamily : public std::invalid_argument {
public:
  explicit UnsupportedFamily(const Fraction& r);
};

Family classify_family(const Fraction& r);

struct DecideOptions {
  /// Attach certificates to positive answers and trace evidence to negative
  /// ones.
  bool certify = false;
  std::uint64_t prime_budget = 500;
  SearchOptions search;
  std::size_t max_conjugator_length = 4;
};

struct Verdict {
  bool homotopic = false;
  std::string rule;
  std::vector<RewriteCertificate> certificates;
  std::optional<NonconjugacyEvidence> evidence;
};

/// For distinct s, s' in I_1(r) and I_2(r). Throws UnsupportedFamily, or
/// std::invalid_argument when a slope is outside the intervals or, for
/// r = 1/p, equals 0.
Verdict decide_homotopic(const Fraction& r, const Fraction& s, const Fraction& s_prime,
                         const DecideOptions& options = {});

/// Arbitrary s, s' in Q and inf: both are first reduced to the fundamental
/// domain.
Verdict full_decision(const Fraction& r, const Fraction& s, const Fraction& s_prime,
                      const DecideOptions& options = {});

struct PowerRoot {
  Word root;
  int exponent = 1;
};

struct Classification {
  bool peripheral = false;
  bool primitive = true;
  std::optional<PowerRoot> power;
  /// A conjugate of the meridian b commuting with u_s, for peripheral loops.
  std::optional<Word> meridian;
  std::string rule;
  std::vector<RewriteCertificate> certificates;
};

/// Peripherality and primitivity of the loop of slope s in I_1(r) or I_2(r),
/// for r = n/(2n+1) or (n+1)/(3n+2).
Classification classify_loop(const Fraction& r, const Fraction& s, const DecideOptions& options = {});

} // namespace twobridge
