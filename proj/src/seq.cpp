#include "twobridge/seq.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twobridge {

std::string format_seq(const Seq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) {
      out += ",";
    }
    out += std::to_string(s[i]);
  }
  return out + ")";
}

Seq parse_seq(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') {
      body += c;
    }
  }
  Seq out;
  if (body.empty()) {
    return out;
  }
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty() || v <= 0) {
      throw std::invalid_argument("bad sequence term '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

Seq reversed(const Seq& s) { return Seq(s.rbegin(), s.rend()); }

std::int64_t sum(const Seq& s) { return std::accumulate(s.begin(), s.end(), std::int64_t{0}); }

CyclicSeq::CyclicSeq(Seq terms) {
  terms_ = rotated(terms, least_rotation(terms));
}

CyclicSeq CyclicSeq::reversed() const { return CyclicSeq(twobridge::reversed(terms_)); }

std::string CyclicSeq::to_string() const { return "(" + format_seq(terms_) + ")"; }

} // namespace twobridge
