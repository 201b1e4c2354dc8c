#include "twobridge/serialize.hpp"

#include <stdexcept>

namespace twobridge {

namespace {

std::string word_text(const Word& w) { return w.empty() ? "1" : w.to_string(); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
  }
}

Json faces_to_json(const std::vector<FaceSplit>& faces) {
  Json out = Json::array();
  for (const FaceSplit& f : faces) {
    out.push_back({{"member", f.member}, {"cuts", f.cuts}});
  }
  return out;
}

std::vector<FaceSplit> faces_from_json(const Json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("faces must be an array");
  }
  std::vector<FaceSplit> out;
  for (const Json& f : j) {
    const auto cuts = field<std::vector<std::size_t>>(f, "cuts");
    if (cuts.size() != 4) {
      throw std::invalid_argument("a face needs exactly four cuts");
    }
    out.push_back({field<std::size_t>(f, "member"), {cuts[0], cuts[1], cuts[2], cuts[3]}});
  }
  return out;
}

} // namespace

Json certificate_to_json(const RewriteCertificate& c) {
  Json steps = Json::array();
  for (const RewriteStep& s : c.steps) {
    steps.push_back({{"position", s.position},
                     {"conjugator", word_text(s.conjugator)},
                     {"member", s.member},
                     {"direction", s.direction == StepDirection::Insert ? "insert" : "delete"}});
  }
  return {{"slope", c.slope.to_string()}, {"start", word_text(c.start)}, {"end", word_text(c.end)}, {"steps", steps}};
}

RewriteCertificate certificate_from_json(const Json& j) {
  RewriteCertificate c;
  c.slope = Fraction::parse(field<std::string>(j, "slope"));
  c.start = Word::parse(field<std::string>(j, "start"));
  c.end = Word::parse(field<std::string>(j, "end"));
  const Json steps = field<Json>(j, "steps");
  if (!steps.is_array()) {
    throw std::invalid_argument("steps must be an array");
  }
  for (const Json& s : steps) {
    RewriteStep step;
    step.position = field<std::size_t>(s, "position");
    step.conjugator = Word::parse(field<std::string>(s, "conjugator"));
    step.member = field<std::size_t>(s, "member");
    const auto dir = field<std::string>(s, "direction");
    if (dir == "insert") {
      step.direction = StepDirection::Insert;
    } else if (dir == "delete") {
      step.direction = StepDirection::Delete;
    } else {
      throw std::invalid_argument("direction must be insert or delete, got '" + dir + "'");
    }
    c.steps.push_back(std::move(step));
  }
  return c;
}

Json diagram_to_json(const AnnularDiagram& d) {
  Json j = {{"slope", d.slope.to_string()},
            {"mode", to_string(d.mode)},
            {"faces", d.layers.empty() ? Json::array() : faces_to_json(d.layers.front().faces)},
            {"layers", d.layers.size()}};
  if (d.layers.size() > 1) {
    Json rings = Json::array();
    for (std::size_t i = 1; i < d.layers.size(); ++i) {
      rings.push_back({{"offset", d.layers[i].offset}, {"faces", faces_to_json(d.layers[i].faces)}});
    }
    j["inner_rings"] = rings;
  }
  return j;
}

AnnularDiagram diagram_from_json(const Json& j) {
  AnnularDiagram d;
  d.slope = Fraction::parse(field<std::string>(j, "slope"));
  d.mode = parse_face_mode(field<std::string>(j, "mode"));
  d.layers.push_back({faces_from_json(field<Json>(j, "faces")), 0});
  const auto count = field<std::size_t>(j, "layers");
  if (count > 1) {
    for (const Json& ring : field<Json>(j, "inner_rings")) {
      d.layers.push_back({faces_from_json(field<Json>(ring, "faces")), field<std::size_t>(ring, "offset")});
    }
  }
  if (d.layers.size() != count) {
    throw std::invalid_argument("layer count does not match the rings given");
  }
  return d;
}

Json evidence_to_json(const NonconjugacyEvidence& e) {
  return {{"prime", e.prime}, {"field_degree", e.field_degree}, {"y", e.y}, {"trace_u", e.trace_u},
          {"trace_v", e.trace_v}};
}

Json report_to_json(const SmallCancellationReport& r) {
  return {{"slope", r.slope.to_string()}, {"c4", r.c4}, {"t4", r.t4}, {"violations", r.violations}};
}

Json reduction_to_json(const OrbitReduction& red) {
  Json word = Json::array();
  for (const OrbitStep& s : red.word) {
    word.push_back({{"generator", static_cast<int>(s.generator)}, {"exponent", s.exponent.str()}});
  }
  return {{"s0", red.s0.to_string()}, {"word", word}, {"steps", red.steps}, {"used_search", red.used_search}};
}

Json verdict_to_json(const Fraction& r, const Fraction& s, const Fraction& s_prime, const Verdict& v) {
  Json certs = Json::array();
  for (const auto& c : v.certificates) {
    certs.push_back(certificate_to_json(c));
  }
  Json j = {{"r", r.to_string()},  {"s", s.to_string()}, {"s_prime", s_prime.to_string()},
            {"homotopic", v.homotopic}, {"rule", v.rule},    {"certificates", certs}};
  j["evidence"] = v.evidence ? evidence_to_json(*v.evidence) : Json(nullptr);
  return j;
}

Json classification_to_json(const Fraction& r, const Fraction& s, const Classification& c) {
  Json certs = Json::array();
  for (const auto& x : c.certificates) {
    certs.push_back(certificate_to_json(x));
  }
  Json j = {{"r", r.to_string()},         {"s", s.to_string()}, {"peripheral", c.peripheral},
            {"primitive", c.primitive}, {"rule", c.rule},     {"certificates", certs}};
  j["power"] = c.power ? Json{{"root", word_text(c.power->root)}, {"exponent", c.power->exponent}} : Json(nullptr);
  j["meridian"] = c.meridian ? Json(word_text(*c.meridian)) : Json(nullptr);
  return j;
}

} // namespace twobridge
