#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// All cyclic permutations of u_r and u_r^-1, without repeats. Members are
/// listed as the rotations of u_r by offsets 0, 1, ..., then those of u_r^-1.
class SymmetrizedSet {
public:
  explicit SymmetrizedSet(const Fraction& r);

  const Fraction& slope() const { return slope_; }
  const std::vector<Word>& members() const { return members_; }
  const Word& operator[](std::size_t i) const { return members_[i]; }
  std::size_t size() const { return members_.size(); }
  /// |u_r| = 2p.
  std::size_t relator_length() const { return members_.front().size(); }

  std::optional<std::size_t> index_of(const Word& w) const;
  /// Index of the rotation of member i by offset letters.
  std::size_t rotation_index(std::size_t i, std::size_t offset) const;
  /// Index of the inverse of member i.
  std::size_t inverse_index(std::size_t i) const { return inverse_[i]; }
  /// Longest prefix member i shares with a different member.
  std::size_t shared_prefix(std::size_t i) const { return shared_[i]; }

  /// Members beginning with w.
  std::vector<std::size_t> members_with_prefix(const Word& w) const;
  /// Some member beginning with w.
  std::optional<std::size_t> member_with_prefix(const Word& w) const;

  /// The cyclic subword of member i of length len starting at offset is a
  /// piece.
  bool is_piece_at(std::size_t i, std::size_t offset, std::size_t len) const {
    return len >= 1 && len <= shared_[rotation_index(i, offset)];
  }

private:
  Fraction slope_;
  std::vector<Word> members_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> shared_;
};

struct PieceVerdict {
  bool is_piece = false;
  /// Two distinct members both beginning with the word.
  std::optional<std::pair<std::size_t, std::size_t>> witnesses;
};

/// Scans every member for the prefix w.
PieceVerdict is_piece_bruteforce(const SymmetrizedSet& set, const Word& w);

/// Same answer from the precomputed shared-prefix table.
bool is_piece(const SymmetrizedSet& set, const Word& w);

/// For a subword of the cyclic word (u_r^±1) with r != 1/p: S(w) contains
/// neither S1 nor an interior occurrence of S2. Throws std::invalid_argument
/// when w is not such a subword.
bool is_piece_criterion(const Fraction& r, const Word& w);

/// Fewest pieces whose product is w; w must begin some member. The empty
/// word counts as 0 pieces.
std::size_t min_piece_count(const SymmetrizedSet& set, const Word& w);

/// Same for the subword of member i of length len starting at offset.
std::size_t min_piece_count_at(const SymmetrizedSet& set, std::size_t i, std::size_t offset, std::size_t len);

struct PositionedSubword {
  std::size_t start = 0;
  std::size_t length = 0;
  Word word;
};

/// For each start position in (u_r), the longest subword that is a product of
/// at most n pieces.
std::vector<PositionedSubword> maximal_pieces(const SymmetrizedSet& set, std::size_t n);

struct SmallCancellationReport {
  Fraction slope;
  bool c4 = false;
  bool t4 = false;
  std::vector<std::string> violations;
};

/// No member is a product of fewer than four pieces, and every triple of
/// members without an adjacent inverse pair has a product among w1w2, w2w3,
/// w3w1 that is reduced as written.
SmallCancellationReport verify_c4_t4(const Fraction& r);

} // namespace twobridge
