#include "twobridge/diagrams.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "twobridge/sequences.hpp"

namespace twobridge {

std::string to_string(FaceMode m) { return m == FaceMode::B ? "B" : "C"; }

FaceMode parse_face_mode(const std::string& text) {
  if (text == "B") {
    return FaceMode::B;
  }
  if (text == "C") {
    return FaceMode::C;
  }
  throw std::invalid_argument("face mode must be B or C, got '" + text + "'");
}

namespace {

std::size_t cyc_dist(std::size_t from, std::size_t to, std::size_t n) { return (to + n - from % n) % n; }

Seq runs_of(const Word& w) { return w.empty() ? Seq{} : s_sequence(w); }

// Splits w as x v z where v covers runs [j, j + len) of S(w).
struct RunSplit {
  Word before, block, after;
};

RunSplit split_runs(const Word& w, const Seq& runs, std::size_t j, std::size_t len) {
  std::size_t a = 0;
  for (std::size_t i = 0; i < j; ++i) {
    a += runs[i];
  }
  std::size_t b = a;
  for (std::size_t i = j; i < j + len; ++i) {
    b += runs[i];
  }
  return {w.prefix(a), w.sub(a, b - a), w.suffix_from(b)};
}

std::vector<std::size_t> block_positions(const Seq& seq, const Seq& pattern, bool interior) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > seq.size()) {
    return out;
  }
  for (std::size_t i = 0; i + pattern.size() <= seq.size(); ++i) {
    if (interior && (i == 0 || i + pattern.size() == seq.size())) {
      continue;
    }
    if (std::equal(pattern.begin(), pattern.end(), seq.begin() + i)) {
      out.push_back(i);
    }
  }
  return out;
}

// The face splits as P = y w z on the outer path and Q = y' w' z' on the
// inner path, with S(w), S(w') the central block and the side words joined
// across the corners giving the other block.
bool face_fits_mode(const Word& outer, const Word& inner, const Decomposition& dec, FaceMode mode) {
  const Seq& central = mode == FaceMode::B ? dec.s1 : dec.s2;
  const Seq& sides = mode == FaceMode::B ? dec.s2 : dec.s1;
  const bool interior = mode == FaceMode::C;
  const Seq so = runs_of(outer), si = runs_of(inner);
  for (std::size_t j : block_positions(so, central, interior)) {
    const RunSplit p = split_runs(outer, so, j, central.size());
    for (std::size_t k : block_positions(si, central, interior)) {
      const RunSplit q = split_runs(inner, si, k, central.size());
      const Word left = concat(inverse(q.before), p.before);
      const Word right = concat(p.after, inverse(q.after));
      if (runs_of(left) == sides && runs_of(right) == sides) {
        return true;
      }
    }
  }
  return false;
}

std::optional<FaceMode> face_mode(const Word& outer, const Word& inner, const Decomposition& dec) {
  const bool b = face_fits_mode(outer, inner, dec, FaceMode::B);
  const bool c = face_fits_mode(outer, inner, dec, FaceMode::C);
  if (b == c) {
    return std::nullopt;
  }
  return b ? FaceMode::B : FaceMode::C;
}

struct Edge {
  std::size_t pos = 0;
  std::size_t len = 0;
};

// The four side edges in label order: e_{2i-1}, e_{2i}, e'_{2i}^-1, e'_{2i-1}^-1.
std::array<Edge, 4> edges_of(const FaceSplit& f, std::size_t n) {
  std::array<Edge, 4> out;
  for (int k = 0; k < 4; ++k) {
    out[k] = {f.cuts[k], cyc_dist(f.cuts[k], f.cuts[(k + 1) % 4], n)};
  }
  return out;
}

bool well_formed(const SymmetrizedSet& set, const FaceSplit& f) {
  const std::size_t n = set.relator_length();
  if (f.member >= set.size()) {
    return false;
  }
  std::size_t total = 0;
  for (const Edge& e : edges_of(f, n)) {
    if (f.cuts[0] >= n || e.pos >= n || e.len == 0) {
      return false;
    }
    total += e.len;
  }
  return total == n;
}

Word label_from(const SymmetrizedSet& set, const FaceSplit& f, std::size_t pos) {
  return set[f.member].rotation(pos % set.relator_length());
}

Word ring_outer(const SymmetrizedSet& set, const Layer& layer) {
  Word out;
  for (const FaceSplit& f : layer.faces) {
    out = concat(out, outer_path(set, f));
  }
  return out;
}

Word ring_inner(const SymmetrizedSet& set, const Layer& layer) {
  Word out;
  for (const FaceSplit& f : layer.faces) {
    out = concat(out, inner_path(set, f));
  }
  return out;
}

// First index at which consecutive paths cancel across a shared vertex.
std::optional<std::size_t> junction_cancellation(const std::vector<Word>& paths) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Word& x = paths[i];
    const Word& y = paths[(i + 1) % paths.size()];
    if (!x.empty() && !y.empty() && x.back() == inverse(y.front())) {
      return i;
    }
  }
  return std::nullopt;
}

void fail(ValidationReport& report, std::string message) {
  report.valid = false;
  report.failures.push_back(std::move(message));
}

std::string face_name(std::size_t ring, std::size_t face) {
  return "ring " + std::to_string(ring) + " face " + std::to_string(face);
}

void check_ring_boundary(const SymmetrizedSet& set, const Layer& layer, std::size_t ring, bool outer,
                         ValidationReport& report) {
  std::vector<Word> paths;
  for (std::size_t i = 0; i < layer.faces.size(); ++i) {
    const FaceSplit& f = layer.faces[i];
    const std::size_t n = set.relator_length();
    // The outer path spans label [c0, c2), the reversed inner path [c2, c0).
    const std::size_t from = outer ? f.cuts[0] : f.cuts[2];
    const std::size_t len = outer ? cyc_dist(f.cuts[0], f.cuts[2], n) : cyc_dist(f.cuts[2], f.cuts[0], n);
    if (set.is_piece_at(f.member, from, len)) {
      fail(report, face_name(ring, i) + ": the " + std::string(outer ? "outer" : "inner") +
                       " path is a single piece, so its two edges could be merged");
    }
    paths.push_back(outer ? outer_path(set, f) : inner_path(set, f));
  }
  if (auto i = junction_cancellation(paths)) {
    fail(report, "not reduced: " + face_name(ring, *i) + " and the next face cancel at their common " +
                     (outer ? "outer" : "inner") + " vertex");
  }
}

void check_between_rings(const SymmetrizedSet& set, const Layer& above, const Layer& below, std::size_t ring,
                         ValidationReport& report) {
  const std::size_t n = set.relator_length();
  const Word circle = ring_inner(set, above);
  const Word next = ring_outer(set, below);
  if (circle.size() != next.size() || circle.empty() || circle.rotation(below.offset % circle.size()) != next) {
    fail(report, "ring " + std::to_string(ring) + ": outer label does not match the inner label of ring " +
                     std::to_string(ring - 1));
    return;
  }
  // Edges of the ring above on the shared circle, keyed by circle position.
  struct Side {
    std::size_t face;
    std::size_t label_pos;
    std::size_t len;
    bool junction_start;
  };
  std::map<std::size_t, Side> upper;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < above.faces.size(); ++i) {
    const auto e = edges_of(above.faces[i], n);
    upper[pos] = {i, e[3].pos, e[3].len, true};
    upper[(pos + e[3].len) % circle.size()] = {i, e[2].pos, e[2].len, false};
    pos += e[3].len + e[2].len;
  }
  pos = below.offset % circle.size();
  for (std::size_t i = 0; i < below.faces.size(); ++i) {
    const auto e = edges_of(below.faces[i], n);
    for (int k = 0; k < 2; ++k) {
      auto it = upper.find(pos);
      if (it == upper.end() || it->second.len != e[k].len || it->second.junction_start == (k == 0)) {
        fail(report, face_name(ring, i) + ": vertices on the shared circle do not alternate between degree 2 "
                                          "and 4 in the two rings");
        return;
      }
      const Word here = label_from(set, below.faces[i], e[k].pos);
      const Word there = inverse(label_from(set, above.faces[it->second.face], it->second.label_pos));
      if (here == there.rotation((n - e[k].len) % n)) {
        fail(report, "not reduced: " + face_name(ring, i) + " mirrors " + face_name(ring - 1, it->second.face) +
                         " across their common edge");
      }
      pos = (pos + e[k].len) % circle.size();
    }
  }
}

} // namespace

Word outer_path(const SymmetrizedSet& set, const FaceSplit& f) {
  const std::size_t n = set.relator_length();
  return set[f.member].cyclic_sub(f.cuts[0], cyc_dist(f.cuts[0], f.cuts[2], n));
}

Word inner_path(const SymmetrizedSet& set, const FaceSplit& f) {
  const std::size_t n = set.relator_length();
  return inverse(set[f.member].cyclic_sub(f.cuts[2], cyc_dist(f.cuts[2], f.cuts[0], n)));
}

namespace {

ValidationReport validate_with(const SymmetrizedSet& set, const AnnularDiagram& d) {
  ValidationReport report;
  if (!in_open_unit_interval(d.slope)) {
    fail(report, "slope must lie strictly between 0 and 1");
    return report;
  }
  if (d.layers.empty()) {
    fail(report, "diagram has no rings");
    return report;
  }
  if (set.slope() != d.slope) {
    fail(report, "diagram slope does not match its relator set");
    return report;
  }
  const std::size_t n = set.relator_length();
  for (std::size_t ring = 0; ring < d.layers.size(); ++ring) {
    const Layer& layer = d.layers[ring];
    if (layer.faces.empty()) {
      fail(report, "ring " + std::to_string(ring) + " has no faces");
      return report;
    }
    for (std::size_t i = 0; i < layer.faces.size(); ++i) {
      const FaceSplit& f = layer.faces[i];
      if (!well_formed(set, f)) {
        fail(report, face_name(ring, i) + ": not a relator label with four corners in cyclic order");
        return report;
      }
      const auto e = edges_of(f, n);
      for (int k = 0; k < 4; ++k) {
        if (!set.is_piece_at(f.member, e[k].pos, e[k].len)) {
          fail(report, face_name(ring, i) + ": side " + std::to_string(k) + " label " +
                           set[f.member].cyclic_sub(e[k].pos, e[k].len).to_string() + " is not a piece");
        }
      }
    }
  }
  check_ring_boundary(set, d.layers.front(), 0, true, report);
  check_ring_boundary(set, d.layers.back(), d.layers.size() - 1, false, report);
  for (std::size_t ring = 1; ring < d.layers.size(); ++ring) {
    check_between_rings(set, d.layers[ring - 1], d.layers[ring], ring, report);
  }
  const Word inner = ring_inner(set, d.layers.back());
  if (!is_cyclically_reduced(inner)) {
    fail(report, "not reduced: the inner boundary label is not cyclically reduced");
  }
  const Word outer = ring_outer(set, d.layers.front());
  if (!is_cyclically_reduced(outer)) {
    fail(report, "not reduced: the outer boundary label is not cyclically reduced");
  }
  if (to_continued_fraction(d.slope).size() < 2) {
    fail(report, "face modes need a slope whose expansion has at least two terms");
    return report;
  }
  const Decomposition dec = decompose(d.slope);
  const Layer& top = d.layers.front();
  for (std::size_t i = 0; i < top.faces.size(); ++i) {
    const FaceSplit& f = top.faces[i];
    if (!face_fits_mode(outer_path(set, f), inner_path(set, f), dec, d.mode)) {
      fail(report, face_name(0, i) + ": does not split in mode " + to_string(d.mode));
    }
  }
  return report;
}

} // namespace

ValidationReport validate(const AnnularDiagram& d) {
  if (!in_open_unit_interval(d.slope)) {
    return {false, {"slope must lie strictly between 0 and 1"}};
  }
  return validate_with(SymmetrizedSet(d.slope), d);
}

Word outer_word(const AnnularDiagram& d) {
  const SymmetrizedSet set(d.slope);
  return ring_outer(set, d.layers.front());
}

Word inner_path_word(const AnnularDiagram& d) {
  const SymmetrizedSet set(d.slope);
  return ring_inner(set, d.layers.back());
}

CyclicWord outer_label(const AnnularDiagram& d) { return CyclicWord(outer_word(d)); }

CyclicWord inner_label(const AnnularDiagram& d) { return CyclicWord(inverse(inner_path_word(d))); }

std::optional<Fraction> inner_slope(const AnnularDiagram& d) {
  const CyclicWord label = inner_label(d);
  std::optional<Fraction> s = slope_of_cyclic_sequence(cyclic_s_sequence(label));
  if (!s && label.size() == 2) {
    s = Fraction(0);
  }
  if (!s) {
    return std::nullopt;
  }
  const CyclicWord u(upper_word(*s));
  if (u == label || u.inverse() == label) {
    return s;
  }
  return std::nullopt;
}

namespace {

struct FaceChoice {
  std::size_t member;
  std::size_t outer_len;
  std::vector<std::size_t> outer_cuts;
  std::vector<std::size_t> inner_cuts;
  Word inner;
  std::optional<FaceMode> mode;
};

// Faces whose outer path is exactly p: p must not be a piece, so it begins a
// unique member.
std::optional<FaceChoice> face_for(const SymmetrizedSet& set, const Decomposition& dec, const Word& p) {
  const std::size_t n = set.relator_length();
  if (p.size() < 2 || p.size() + 2 > n) {
    return std::nullopt;
  }
  const auto members = set.members_with_prefix(p);
  if (members.size() != 1) {
    return std::nullopt;
  }
  const std::size_t m = members.front();
  const std::size_t q = n - p.size();
  if (set.is_piece_at(m, p.size(), q)) {
    return std::nullopt;
  }
  FaceChoice c{m, p.size(), {}, {}, inverse(set[m].suffix_from(p.size())), std::nullopt};
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (set.is_piece_at(m, 0, k) && set.is_piece_at(m, k, p.size() - k)) {
      c.outer_cuts.push_back(k);
    }
  }
  for (std::size_t k = 1; k < q; ++k) {
    if (set.is_piece_at(m, p.size(), k) && set.is_piece_at(m, p.size() + k, q - k)) {
      c.inner_cuts.push_back(p.size() + k);
    }
  }
  if (c.outer_cuts.empty() || c.inner_cuts.empty()) {
    return std::nullopt;
  }
  c.mode = face_mode(p, c.inner, dec);
  if (!c.mode) {
    return std::nullopt;
  }
  return c;
}

std::vector<FaceSplit> canonical_ring(const std::vector<FaceSplit>& faces) {
  std::vector<FaceSplit> best = faces;
  for (std::size_t i = 1; i < faces.size(); ++i) {
    auto r = rotated(faces, i);
    if (r < best) {
      best = std::move(r);
    }
  }
  return best;
}

struct RingSearch {
  const SymmetrizedSet& set;
  const Decomposition& dec;
  std::size_t t_max;
  // table[start][len] for the cyclic word being searched.
  std::vector<std::vector<std::optional<FaceChoice>>> table;
  std::size_t origin = 0;
  std::vector<const FaceChoice*> chosen;
  std::set<std::vector<FaceSplit>> found;

  void load(const Word& cyclic) {
    const std::size_t n = cyclic.size();
    table.assign(n, std::vector<std::optional<FaceChoice>>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t len = 2; len <= n; ++len) {
        table[i][len] = face_for(set, dec, cyclic.cyclic_sub(i, len));
      }
    }
  }

  void run(std::size_t used) {
    const std::size_t n = table.size();
    if (used == n) {
      accept();
      return;
    }
    if (chosen.size() == t_max) {
      return;
    }
    for (std::size_t len = 2; used + len <= n; ++len) {
      if (const auto& c = table[(origin + used) % n][len]) {
        chosen.push_back(&*c);
        run(used + len);
        chosen.pop_back();
      }
    }
  }

  void accept() {
    std::vector<Word> inner;
    bool mixed = false;
    for (const FaceChoice* c : chosen) {
      inner.push_back(c->inner);
      mixed = mixed || *c->mode != *chosen.front()->mode;
    }
    if (junction_cancellation(inner)) {
      return;
    }
    if (mixed) {
      throw std::logic_error("ring mixes face modes B and C");
    }
    std::vector<FaceSplit> faces;
    expand_cuts(0, faces);
  }

  void expand_cuts(std::size_t i, std::vector<FaceSplit>& faces) {
    if (i == chosen.size()) {
      found.insert(canonical_ring(faces));
      return;
    }
    const FaceChoice& c = *chosen[i];
    for (std::size_t c1 : c.outer_cuts) {
      for (std::size_t c3 : c.inner_cuts) {
        faces.push_back({c.member, {0, c1, c.outer_len, c3}});
        expand_cuts(i + 1, faces);
        faces.pop_back();
      }
    }
  }
};

} // namespace

std::vector<AnnularDiagram> search_one_layer(const Fraction& r, const Fraction& s, std::size_t t_max) {
  if (t_max > 8) {
    throw std::invalid_argument("search_one_layer supports at most 8 faces");
  }
  if (!contains(intervals(r), s)) {
    throw std::invalid_argument("slope " + s.to_string() + " lies outside I_1 and I_2 of " + r.to_string());
  }
  const SymmetrizedSet set(r);
  const Decomposition dec = decompose(r);
  RingSearch search{set, dec, t_max, {}, 0, {}, {}};
  const Word u = upper_word(s);
  for (const Word& w : {u, inverse(u)}) {
    search.load(w);
    for (std::size_t o = 0; o < w.size(); ++o) {
      search.origin = o;
      search.run(0);
    }
  }
  std::vector<AnnularDiagram> out;
  for (const auto& faces : search.found) {
    AnnularDiagram d{r, FaceMode::B, {Layer{faces, 0}}};
    d.mode = *face_mode(outer_path(set, faces.front()), inner_path(set, faces.front()), dec);
    const ValidationReport report = validate_with(set, d);
    if (!report.valid) {
      throw std::logic_error("search produced an invalid diagram: " + report.failures.front());
    }
    out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(), [](const AnnularDiagram& x, const AnnularDiagram& y) {
    return x.layers.front().faces.size() < y.layers.front().faces.size();
  });
  return out;
}

std::set<Fraction> reachable_inner_slopes(const Fraction& r, const Fraction& s, std::size_t t_max) {
  std::set<Fraction> out{s};
  const SlopeIntervals iv = intervals(r);
  for (const AnnularDiagram& d : search_one_layer(r, s, t_max)) {
    if (auto t = inner_slope(d); t && contains(iv, *t)) {
      out.insert(*t);
    }
  }
  return out;
}

Word conjugacy_witness(const AnnularDiagram& d, std::size_t outer_base, std::size_t inner_base) {
  const SymmetrizedSet set(d.slope);
  const Word outer = ring_outer(set, d.layers.front());
  Word path = inverse(outer.prefix(outer_base % outer.size()));
  for (std::size_t ring = 1; ring < d.layers.size(); ++ring) {
    path = path * ring_inner(set, d.layers[ring - 1]).prefix(d.layers[ring].offset);
  }
  const Word inner = ring_inner(set, d.layers.back());
  return path * inner.prefix(inner_base % inner.size());
}

RewriteCertificate diagram_certificate(const AnnularDiagram& d, std::size_t outer_base) {
  if (d.layers.size() != 1) {
    throw std::invalid_argument("certificates are produced for one-ring diagrams only");
  }
  const SymmetrizedSet set(d.slope);
  const Layer& ring = d.layers.front();
  const Word outer = ring_outer(set, ring);
  const Word x = outer.prefix(outer_base % outer.size());
  RewriteCertificate c{d.slope, outer.rotation(outer_base % outer.size()), {}, {}};
  // Replace the outer paths by the inner ones from the last face backwards;
  // face k contributes (P_1...P_{k-1}) Q_k P_k^-1 (P_1...P_{k-1})^-1.
  std::vector<Word> prefixes{Word()};
  for (const FaceSplit& f : ring.faces) {
    prefixes.push_back(concat(prefixes.back(), outer_path(set, f)));
  }
  for (std::size_t k = ring.faces.size(); k-- > 0;) {
    const FaceSplit& f = ring.faces[k];
    const std::size_t member = set.inverse_index(set.rotation_index(f.member, f.cuts[0]));
    c.steps.push_back({0, inverse(x) * prefixes[k], member, StepDirection::Insert});
  }
  c.end = inverse(x) * ring_inner(set, ring) * x;
  return c;
}

} // namespace twobridge
