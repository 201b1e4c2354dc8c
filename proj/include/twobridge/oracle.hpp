#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/cancellation.hpp"
#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

enum class StepDirection { Insert, Delete };

/// Insert or delete the word c m c^-1 at a position, with m a member of the
/// symmetrized set of the slope.
struct RewriteStep {
  std::size_t position = 0;
  Word conjugator;
  std::size_t member = 0;
  StepDirection direction = StepDirection::Insert;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// A proof that start = end in G(K(r)): each step multiplies in a conjugate
/// of the relator or its inverse, and the word is freely reduced after every
/// step.
struct RewriteCertificate {
  Fraction slope;
  Word start;
  std::vector<RewriteStep> steps;
  Word end;

  friend bool operator==(const RewriteCertificate&, const RewriteCertificate&) = default;
};

/// Replays the certificate; true iff the freely reduced start is carried to
/// end exactly. On failure a reason is written to diagnostic when given.
bool check_certificate(const RewriteCertificate& c, std::string* diagnostic = nullptr);

/// The word after the first k steps, for k = 0..steps.size(). Throws
/// std::invalid_argument on a malformed step.
std::vector<Word> replay_certificate(const RewriteCertificate& c);

struct SearchOptions {
  /// Maximum number of relator applications.
  std::size_t depth = 24;
  /// Maximum number of states expanded.
  std::size_t max_nodes = 200000;
  /// Largest number of letters a replacement may fall short of half a relator.
  std::size_t max_slack = 2;
};

/// Semi-decision for w = 1 in G(K(r)). Repeatedly replaces a subword of the
/// cyclic core that covers at least half of a relator by the complementary
/// part, allowing a bounded number of replacements that do not shorten.
/// Absence proves nothing.
std::optional<RewriteCertificate> word_problem_search(const Fraction& r, const Word& w,
                                                      const SearchOptions& options);
std::optional<RewriteCertificate> word_problem_search(const Fraction& r, const Word& w, std::size_t depth);

/// A certificate carrying lhs to rhs, found by searching on lhs rhs^-1.
std::optional<RewriteCertificate> prove_equal(const Fraction& r, const Word& lhs, const Word& rhs,
                                              const SearchOptions& options = {});

/// A certificate with start = reduced (a b a^-1 b^-1) and end empty.
std::optional<RewriteCertificate> prove_commute(const Fraction& r, const Word& a, const Word& b,
                                                const SearchOptions& options = {});

/// Looks for g with |g| <= max_conjugator_length and g u g^-1 = v, proved by
/// word_problem_search. Returns the certificate for g u g^-1 -> v.
std::optional<RewriteCertificate> conjugacy_search(const Fraction& r, const Word& u, const Word& v,
                                                   std::size_t max_conjugator_length,
                                                   const SearchOptions& options = {});

} // namespace twobridge
