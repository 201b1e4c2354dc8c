#pragma once

#include <json.hpp>

#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/diagrams.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/finite_field.hpp"
#include "twobridge/oracle.hpp"

namespace twobridge {

using Json = nlohmann::json;

/// {"slope", "start", "end", "steps": [{"position", "conjugator", "member",
/// "direction"}]}, words in aAbB form with "1" for the empty word.
Json certificate_to_json(const RewriteCertificate& c);
/// Throws std::invalid_argument on a malformed document.
RewriteCertificate certificate_from_json(const Json& j);

/// {"slope", "mode", "faces": [{"member", "cuts"}], "layers"}, plus
/// "inner_rings": [{"offset", "faces"}] when there is more than one ring.
Json diagram_to_json(const AnnularDiagram& d);
AnnularDiagram diagram_from_json(const Json& j);

Json evidence_to_json(const NonconjugacyEvidence& e);
Json report_to_json(const SmallCancellationReport& r);
Json reduction_to_json(const OrbitReduction& red);

/// {"r", "s", "s_prime", "homotopic", "rule", "certificates", "evidence"}.
Json verdict_to_json(const Fraction& r, const Fraction& s, const Fraction& s_prime, const Verdict& v);
Json classification_to_json(const Fraction& r, const Fraction& s, const Classification& c);

} // namespace twobridge
