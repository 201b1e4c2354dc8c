#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twobridge {

/// A finite sequence of positive integers, e.g. an S- or T-sequence.
using Seq = std::vector<std::int64_t>;

/// "(4,3,4)"; the empty sequence prints as "()".
std::string format_seq(const Seq& s);

/// Parses "(4,3,4)" or "4,3,4".
Seq parse_seq(const std::string& text);

Seq reversed(const Seq& s);

std::int64_t sum(const Seq& s);

/// Index of the lexicographically least rotation of v.
template <typename T, typename Less = std::less<T>>
std::size_t least_rotation(const std::vector<T>& v, Less less = Less{}) {
  const std::size_t n = v.size();
  if (n < 2) {
    return 0;
  }
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T& x = v[(i + k) % n];
    const T& y = v[(j + k) % n];
    if (!less(x, y) && !less(y, x)) {
      ++k;
      continue;
    }
    if (less(y, x)) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

template <typename T>
std::vector<T> rotated(const std::vector<T>& v, std::size_t offset) {
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[(offset + i) % v.size()]);
  }
  return out;
}

/// A sequence up to rotation, stored in its least rotation.
class CyclicSeq {
public:
  CyclicSeq() = default;
  explicit CyclicSeq(Seq terms);

  const Seq& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// The same cyclic sequence read backwards.
  CyclicSeq reversed() const;
  bool is_symmetric() const { return reversed() == *this; }

  /// "((4,3,3,4,3,3))".
  std::string to_string() const;

  friend bool operator==(const CyclicSeq&, const CyclicSeq&) = default;
  friend auto operator<=>(const CyclicSeq&, const CyclicSeq&) = default;

private:
  Seq terms_;
};

} // namespace twobridge
