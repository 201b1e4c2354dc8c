#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twobridge/cancellation.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/slopes.hpp"
#include "twobridge/words.hpp"

namespace twobridge {

/// How a face meets the outer boundary of its layer: the outer path carries a
/// full copy of S1 (B) or an interior copy of S2 (C).
enum class FaceMode { B, C };

std::string to_string(FaceMode m);
FaceMode parse_face_mode(const std::string& text);

/// A quadrilateral face. Its boundary label is the member of the symmetrized
/// set read clockwise from the outer-left corner. cuts are the label positions
/// of the four corners in clockwise order: outer-left, outer-middle,
/// outer-right (which is also inner-right) and inner-middle. The outer path is
/// label[cuts[0], cuts[2]) and the inner path, reversed, is
/// label[cuts[2], cuts[0] + L), indices mod L.
struct FaceSplit {
  std::size_t member = 0;
  std::array<std::size_t, 4> cuts{};
  friend bool operator==(const FaceSplit&, const FaceSplit&) = default;
  friend auto operator<=>(const FaceSplit&, const FaceSplit&) = default;
};

/// One ring of faces. Consecutive faces meet at a single vertex lying on both
/// boundaries of the ring. offset is the position on the inner label of the
/// previous ring where this ring's outer label starts; it is 0 for the
/// outermost ring.
struct Layer {
  std::vector<FaceSplit> faces;
  std::size_t offset = 0;
  friend bool operator==(const Layer&, const Layer&) = default;
};

struct AnnularDiagram {
  Fraction slope;
  FaceMode mode = FaceMode::B;
  std::vector<Layer> layers;
  friend bool operator==(const AnnularDiagram&, const AnnularDiagram&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
};

ValidationReport validate(const AnnularDiagram& d);

/// Outer path of face f: the label of e_{2i-1} e_{2i}.
Word outer_path(const SymmetrizedSet& set, const FaceSplit& f);
/// Inner path of face f read in the same direction as the outer path.
Word inner_path(const SymmetrizedSet& set, const FaceSplit& f);

/// phi(alpha) read clockwise from the first vertex of the outermost ring.
Word outer_word(const AnnularDiagram& d);
/// phi(delta^-1) of the innermost ring, read from its first vertex.
Word inner_path_word(const AnnularDiagram& d);

CyclicWord outer_label(const AnnularDiagram& d);
/// phi(delta), the inner boundary read counterclockwise.
CyclicWord inner_label(const AnnularDiagram& d);

/// Slope s' with inner_label(d) equal to (u_s') or its inverse.
std::optional<Fraction> inner_slope(const AnnularDiagram& d);

/// Every one-ring diagram with at most t_max faces whose outer label is
/// (u_s) or (u_s^-1), each listed once up to the choice of first face.
/// Throws std::logic_error if a ring mixes modes B and C.
std::vector<AnnularDiagram> search_one_layer(const Fraction& r, const Fraction& s, std::size_t t_max);

/// Slopes of the inner labels over search_one_layer(r, s, t_max), restricted
/// to I_1(r) and I_2(r). s itself is always included.
std::set<Fraction> reachable_inner_slopes(const Fraction& r, const Fraction& s, std::size_t t_max);

/// Label of a path from the outer vertex at outer_base to the inner vertex at
/// inner_base in a one-ring diagram, so that the rotation of outer_word by
/// outer_base equals w * (rotation of inner_path_word by inner_base) * w^-1
/// in G(K(r)).
Word conjugacy_witness(const AnnularDiagram& d, std::size_t outer_base = 0, std::size_t inner_base = 0);

/// Certificate carrying the rotation of outer_word by outer_base to the
/// reduced form of x^-1 * inner_path_word * x, x the outer prefix of length
/// outer_base. Each face contributes one relator insertion.
RewriteCertificate diagram_certificate(const AnnularDiagram& d, std::size_t outer_base = 0);

} // namespace twobridge
