#include "twobridge/cancellation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "twobridge/sequences.hpp"

namespace twobridge {

SymmetrizedSet::SymmetrizedSet(const Fraction& r) : slope_(r) {
  if (!in_open_unit_interval(r)) {
    throw std::invalid_argument("symmetrized set needs 0 < r < 1, got " + r.to_string());
  }
  const Word u = upper_word(r);
  for (const Word& base : {u, inverse(u)}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word w = base.rotation(k);
      if (index_.emplace(w, members_.size()).second) {
        members_.push_back(std::move(w));
      }
    }
  }
  const std::size_t n = members_.size();
  const std::size_t len = relator_length();
  rotation_.assign(n, std::vector<std::size_t>(len));
  inverse_.resize(n);
  shared_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < len; ++k) {
      rotation_[i][k] = index_.at(members_[i].rotation(k));
    }
    inverse_[i] = index_.at(inverse(members_[i]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t l = 0;
      while (l < len && members_[i][l] == members_[j][l]) {
        ++l;
      }
      shared_[i] = std::max(shared_[i], l);
      shared_[j] = std::max(shared_[j], l);
    }
  }
}

std::optional<std::size_t> SymmetrizedSet::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t SymmetrizedSet::rotation_index(std::size_t i, std::size_t offset) const {
  return rotation_[i][offset % relator_length()];
}

std::vector<std::size_t> SymmetrizedSet::members_with_prefix(const Word& w) const {
  std::vector<std::size_t> out;
  if (w.size() > relator_length()) {
    return out;
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (std::equal(w.letters().begin(), w.letters().end(), members_[i].letters().begin())) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<std::size_t> SymmetrizedSet::member_with_prefix(const Word& w) const {
  if (w.size() > relator_length()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (std::equal(w.letters().begin(), w.letters().end(), members_[i].letters().begin())) {
      return i;
    }
  }
  return std::nullopt;
}

PieceVerdict is_piece_bruteforce(const SymmetrizedSet& set, const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("pieces are nonempty");
  }
  const auto hits = set.members_with_prefix(w);
  if (hits.size() < 2) {
    return {};
  }
  return {true, std::make_pair(hits[0], hits[1])};
}

bool is_piece(const SymmetrizedSet& set, const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("pieces are nonempty");
  }
  auto m = set.member_with_prefix(w);
  return m && w.size() <= set.shared_prefix(*m);
}

bool is_piece_criterion(const Fraction& r, const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("pieces are nonempty");
  }
  const Word u = upper_word(r);
  if (w.size() > u.size() || (!is_cyclic_subword(w, u) && !is_cyclic_subword(w, inverse(u)))) {
    throw std::invalid_argument(w.to_string() + " is not a subword of the cyclic word (u_r^+-1)");
  }
  const Decomposition d = decompose(r);
  if (d.s1.empty()) {
    throw std::invalid_argument("piece criterion needs r != 1/p");
  }
  const Seq s = s_sequence(w);
  return !contains_block(s, d.s1) && !contains_interior_block(s, d.s2);
}

std::size_t min_piece_count_at(const SymmetrizedSet& set, std::size_t i, std::size_t offset, std::size_t len) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(len + 1, kNone);
  best[0] = 0;
  for (std::size_t a = 0; a < len; ++a) {
    if (best[a] == kNone) {
      continue;
    }
    const std::size_t reach = set.shared_prefix(set.rotation_index(i, offset + a));
    for (std::size_t b = a + 1; b <= len && b - a <= reach; ++b) {
      best[b] = std::min(best[b], best[a] + 1);
    }
  }
  if (best[len] == kNone) {
    throw std::logic_error("single letters must be pieces");
  }
  return best[len];
}

std::size_t min_piece_count(const SymmetrizedSet& set, const Word& w) {
  auto m = set.member_with_prefix(w);
  if (!m) {
    throw std::invalid_argument(w.to_string() + " does not begin any relator");
  }
  return min_piece_count_at(set, *m, 0, w.size());
}

std::vector<PositionedSubword> maximal_pieces(const SymmetrizedSet& set, std::size_t n) {
  const std::size_t len = set.relator_length();
  std::vector<PositionedSubword> out;
  for (std::size_t start = 0; start < len; ++start) {
    std::size_t best = 0;
    for (std::size_t l = 1; l <= len; ++l) {
      if (min_piece_count_at(set, 0, start, l) > n) {
        break;
      }
      best = l;
    }
    out.push_back({start, best, set[0].cyclic_sub(start, best)});
  }
  return out;
}

SmallCancellationReport verify_c4_t4(const Fraction& r) {
  SymmetrizedSet set(r);
  SmallCancellationReport report;
  report.slope = r;
  report.c4 = true;
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::size_t c = min_piece_count_at(set, i, 0, set.relator_length());
    if (c < 4) {
      report.c4 = false;
      report.violations.push_back("C(4): " + set[i].to_string() + " is a product of " + std::to_string(c) +
                                  " pieces");
    }
  }
  report.t4 = true;
  const std::size_t n = set.size();
  // x y is reduced as written unless y starts with the inverse of x's last letter.
  std::vector<std::vector<char>> cancels(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cancels[i][j] = set[i].back() == inverse(set[j].front());
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (set.inverse_index(a) == b || !cancels[a][b]) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (set.inverse_index(b) == c || set.inverse_index(c) == a) {
          continue;
        }
        if (cancels[b][c] && cancels[c][a]) {
          report.t4 = false;
          if (report.violations.size() < 20) {
            report.violations.push_back("T(4): " + set[a].to_string() + ", " + set[b].to_string() + ", " +
                                        set[c].to_string());
          }
        }
      }
    }
  }
  return report;
}

} // namespace twobridge
