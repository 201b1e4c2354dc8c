#include "twobridge/oracle.hpp"

#include <memory>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace twobridge {

std::vector<Word> replay_certificate(const RewriteCertificate& c) {
  const SymmetrizedSet set(c.slope);
  std::vector<Word> trace{free_reduce(c.start)};
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const RewriteStep& step = c.steps[k];
    const Word& current = trace.back();
    const std::string where = "step " + std::to_string(k + 1) + ": ";
    if (step.member >= set.size()) {
      throw std::invalid_argument(where + "member index " + std::to_string(step.member) + " out of range (" +
                                  std::to_string(set.size()) + " members)");
    }
    if (step.position > current.size()) {
      throw std::invalid_argument(where + "position " + std::to_string(step.position) +
                                  " beyond word length " + std::to_string(current.size()));
    }
    const Word factor = step.conjugator * set[step.member] * inverse(step.conjugator);
    const Word head = current.prefix(step.position);
    if (step.direction == StepDirection::Insert) {
      trace.push_back(free_reduce(concat(concat(head, factor), current.suffix_from(step.position))));
      continue;
    }
    if (step.position + factor.size() > current.size() ||
        current.sub(step.position, factor.size()) != factor) {
      throw std::invalid_argument(where + "deleted word " + factor.to_string() + " is not present at position " +
                                  std::to_string(step.position));
    }
    trace.push_back(free_reduce(concat(head, current.suffix_from(step.position + factor.size()))));
  }
  return trace;
}

bool check_certificate(const RewriteCertificate& c, std::string* diagnostic) {
  try {
    const Word last = replay_certificate(c).back();
    if (last != c.end) {
      if (diagnostic) {
        *diagnostic = "replay ends at " + (last.empty() ? std::string("1") : last.to_string()) + ", expected " +
                      (c.end.empty() ? std::string("1") : c.end.to_string());
      }
      return false;
    }
    return true;
  } catch (const std::invalid_argument& e) {
    if (diagnostic) {
      *diagnostic = e.what();
    }
    return false;
  }
}

namespace {

struct Node {
  Word core;
  Word h;
  std::vector<RewriteStep> path;
  std::size_t slack_used = 0;
};

struct NodeOrder {
  bool operator()(const Node* x, const Node* y) const {
    if (x->core.size() != y->core.size()) {
      return x->core.size() > y->core.size();
    }
    return x->path.size() > y->path.size();
  }
};

std::optional<std::vector<RewriteStep>> search_core(const SymmetrizedSet& set, const Word& w,
                                                    const SearchOptions& options) {
  const std::size_t len = set.relator_length();
  std::vector<std::unique_ptr<Node>> arena;
  std::priority_queue<Node*, std::vector<Node*>, NodeOrder> queue;
  std::unordered_set<Word> seen;

  Word h0;
  Word core0 = cyclic_reduce(w, &h0);
  arena.push_back(std::make_unique<Node>(Node{core0, h0, {}, 0}));
  queue.push(arena.back().get());
  seen.insert(core0.empty() ? core0 : CyclicWord(core0).word());

  std::size_t expanded = 0;
  while (!queue.empty() && expanded < options.max_nodes) {
    Node* node = queue.top();
    queue.pop();
    if (node->core.empty()) {
      return node->path;
    }
    ++expanded;
    if (node->path.size() >= options.depth) {
      continue;
    }
    const Word& c = node->core;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < set.size(); ++m) {
        const Word& member = set[m];
        std::size_t j = 0;
        while (j < len && j < n && c[(i + j) % n] == member[j]) {
          ++j;
        }
        // Replacing j letters by len - j letters.
        const std::size_t grows = (2 * j >= len) ? 0 : (len - 2 * j + 1) / 2;
        if (j == 0 || node->slack_used + grows > options.max_slack) {
          continue;
        }
        const Word rotated = c.rotation(i);
        const Word y = c.prefix(i);
        Word next = concat(inverse(member.suffix_from(j)), rotated.suffix_from(j));
        Word x;
        Word core = cyclic_reduce(next, &x);
        Word key = core.empty() ? core : CyclicWord(core).word();
        if (!seen.insert(key).second) {
          continue;
        }
        const Word conj = node->h * y;
        std::vector<RewriteStep> path = node->path;
        path.push_back({0, conj, set.inverse_index(m), StepDirection::Insert});
        arena.push_back(
            std::make_unique<Node>(Node{std::move(core), conj * x, std::move(path), node->slack_used + grows}));
        queue.push(arena.back().get());
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<RewriteCertificate> word_problem_search(const Fraction& r, const Word& w,
                                                      const SearchOptions& options) {
  const SymmetrizedSet set(r);
  auto steps = search_core(set, w, options);
  if (!steps) {
    return std::nullopt;
  }
  RewriteCertificate cert{r, w, std::move(*steps), Word()};
  std::string why;
  if (!check_certificate(cert, &why)) {
    throw std::logic_error("search produced an invalid certificate: " + why);
  }
  return cert;
}

std::optional<RewriteCertificate> word_problem_search(const Fraction& r, const Word& w, std::size_t depth) {
  SearchOptions options;
  options.depth = depth;
  return word_problem_search(r, w, options);
}

std::optional<RewriteCertificate> prove_equal(const Fraction& r, const Word& lhs, const Word& rhs,
                                              const SearchOptions& options) {
  auto found = word_problem_search(r, lhs * inverse(rhs), options);
  if (!found) {
    return std::nullopt;
  }
  // Each step multiplies on the left, so the same steps carry lhs to rhs.
  RewriteCertificate cert{r, lhs, std::move(found->steps), free_reduce(rhs)};
  std::string why;
  if (!check_certificate(cert, &why)) {
    throw std::logic_error("equality certificate failed to replay: " + why);
  }
  return cert;
}

std::optional<RewriteCertificate> prove_commute(const Fraction& r, const Word& a, const Word& b,
                                                const SearchOptions& options) {
  return word_problem_search(r, a * b * inverse(a) * inverse(b), options);
}

namespace {

void enumerate_reduced(std::size_t len, Word& prefix, std::vector<Word>& out) {
  if (prefix.size() == len) {
    out.push_back(prefix);
    return;
  }
  for (Letter x = 0; x < 4; ++x) {
    if (!prefix.empty() && prefix.back() == inverse(x)) {
      continue;
    }
    prefix.push_back(x);
    enumerate_reduced(len, prefix, out);
    prefix = prefix.prefix(prefix.size() - 1);
  }
}

} // namespace

std::optional<RewriteCertificate> conjugacy_search(const Fraction& r, const Word& u, const Word& v,
                                                   std::size_t max_conjugator_length,
                                                   const SearchOptions& options) {
  for (std::size_t len = 0; len <= max_conjugator_length; ++len) {
    std::vector<Word> candidates;
    Word prefix;
    enumerate_reduced(len, prefix, candidates);
    for (const Word& g : candidates) {
      if (auto cert = prove_equal(r, g * u * inverse(g), v, options)) {
        return cert;
      }
    }
  }
  return std::nullopt;
}

} // namespace twobridge
