#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "twobridge/acceptance.hpp"
#include "twobridge/cancellation.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/diagrams.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/sequences.hpp"
#include "twobridge/serialize.hpp"

using namespace twobridge;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

struct Globals {
  bool json = false;
  bool certify = false;
  std::size_t depth = 24;
  std::uint64_t prime_budget = 500;
  std::int64_t max_den = 40;

  DecideOptions decide_options() const {
    DecideOptions o;
    o.certify = certify;
    o.prime_budget = prime_budget;
    o.search.depth = depth;
    return o;
  }
};

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += c;
    }
  }
  return out;
}

std::string junit(const std::vector<CriterionResult>& results) {
  std::size_t failures = 0;
  double total = 0;
  for (const auto& r : results) {
    failures += !r.passed;
    total += r.seconds;
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<testsuite name=\"acceptance\" tests=\"" << results.size() << "\" failures=\"" << failures
      << "\" time=\"" << total << "\">\n";
  for (const auto& r : results) {
    out << "  <testcase classname=\"acceptance\" name=\"" << r.id << "-" << xml_escape(r.name) << "\" time=\""
        << r.seconds << "\">";
    if (!r.passed) {
      out << "\n    <failure message=\"" << r.failure_count << " failed checks\">";
      for (const auto& f : r.failures) {
        out << xml_escape(f) << "\n";
      }
      out << "</failure>\n  ";
    }
    out << "</testcase>\n";
  }
  out << "</testsuite>\n";
  return out.str();
}

Json result_json(const CriterionResult& r) {
  return {{"id", r.id},           {"name", r.name},         {"passed", r.passed},
          {"checks", r.checks},   {"failures", r.failures}, {"failure_count", r.failure_count},
          {"summary", r.summary}, {"seconds", r.seconds},   {"time_limit", r.time_limit}};
}

std::vector<RewriteCertificate> certificates_in(const Json& j) {
  std::vector<RewriteCertificate> out;
  if (j.is_array()) {
    for (const Json& x : j) {
      auto more = certificates_in(x);
      out.insert(out.end(), more.begin(), more.end());
    }
  } else if (j.is_object() && j.contains("certificates")) {
    return certificates_in(j.at("certificates"));
  } else if (j.is_object() && j.contains("diagrams")) {
    return certificates_in(j.at("diagrams"));
  } else if (j.is_object() && j.contains("certificate")) {
    return certificates_in(j.at("certificate"));
  } else {
    out.push_back(certificate_from_json(j));
  }
  return out;
}

std::string face_list(const AnnularDiagram& d) {
  std::string out;
  for (const FaceSplit& f : d.layers.front().faces) {
    out += " " + std::to_string(f.member) + ":" + std::to_string(f.cuts[0]) + "," + std::to_string(f.cuts[1]) + "," +
           std::to_string(f.cuts[2]) + "," + std::to_string(f.cuts[3]);
  }
  return out;
}

std::string diagram_line(const AnnularDiagram& d) {
  const auto s = inner_slope(d);
  return std::to_string(d.layers.front().faces.size()) + " faces, mode " + to_string(d.mode) + ", outer " +
         outer_label(d).to_string() + ", inner " + inner_label(d).to_string() + " " +
         cyclic_s_sequence(inner_label(d)).to_string() + (s ? ", slope " + s->to_string() : "") + ", faces" +
         face_list(d);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope words, sequences, orbit reduction and homotopy decisions for 2-bridge links"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--certify", g.certify, "Attach certificates or trace evidence");
  app.add_option("--depth", g.depth, "Rewriting search depth");
  app.add_option("--prime-budget", g.prime_budget, "Largest prime used for trace evidence");
  app.add_option("--max-den", g.max_den, "Denominator bound for the orbit cross-check");

  std::string r_text, s_text, t_text, file, suite, out_dir;
  std::size_t max_pieces = 1, faces = 4, limit = 10;
  int code = kTrue;
  std::function<int()> action;

  const auto slope_cmd = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("R", r_text, "Slope q/p")->required();
    return cmd;
  };

  slope_cmd("word", "Upper word u_R")->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      const Word u = upper_word(r);
      emit(g, {{"slope", r.to_string()}, {"word", u.to_string()}}, u.to_string());
      return kTrue;
    };
  });
  slope_cmd("sseq", "S-sequence of R")->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      const Seq s = s_sequence_of_slope(r);
      emit(g, {{"slope", r.to_string()}, {"sseq", s}, {"cyclic", cyclic_s_sequence_of_slope(r).to_string()}},
           format_seq(s));
      return kTrue;
    };
  });
  slope_cmd("tseq", "T-sequence of R")->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      if (to_continued_fraction(r).size() < 2) {
        throw std::invalid_argument("T-sequence needs an expansion with at least two terms");
      }
      const Seq t = t_sequence(r);
      emit(g, {{"slope", r.to_string()}, {"tseq", t}}, format_seq(t));
      return kTrue;
    };
  });
  slope_cmd("decompose", "Decomposition S(R) = (S1,S2,S1,S2)")->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      const Decomposition d = decompose(r);
      emit(g, {{"slope", r.to_string()}, {"s1", d.s1}, {"s2", d.s2}},
           "S1=" + format_seq(d.s1) + " S2=" + format_seq(d.s2));
      return kTrue;
    };
  });
  slope_cmd("intervals", "I_1(R) and I_2(R)")->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      const SlopeIntervals iv = intervals(r);
      emit(g, {{"slope", r.to_string()}, {"r1", iv.r1.to_string()}, {"r2", iv.r2.to_string()}},
           "I1=[0/1," + iv.r1.to_string() + "] I2=[" + iv.r2.to_string() + ",1/1]");
      return kTrue;
    };
  });

  auto* reduce = slope_cmd("reduce", "Representative of S in I_1 ∪ I_2 ∪ {inf, R}");
  reduce->add_option("S", s_text, "Slope")->required();
  reduce->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text), s = Fraction::parse(s_text);
      const OrbitReduction red = reduce_to_fundamental_domain(r, s);
      std::size_t in_domain = 0;
      for (const Fraction& x : orbit_bfs(r, s, g.max_den)) {
        in_domain += in_fundamental_domain(r, x);
      }
      Json j = reduction_to_json(red);
      j["slope"] = r.to_string();
      j["s"] = s.to_string();
      j["replay_ok"] = replay(r, red.word, red.s0) == s;
      j["orbit_representatives_in_domain"] = in_domain;
      emit(g, j, red.s0.to_string() + " (" + std::to_string(red.word.size()) + " orbit steps)");
      return kTrue;
    };
  });

  auto* null = slope_cmd("null", "Is the loop of slope S null-homotopic?");
  null->add_option("S", s_text, "Slope")->required();
  null->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text), s = Fraction::parse(s_text);
      const bool yes = is_null_homotopic(r, s);
      emit(g, {{"slope", r.to_string()}, {"s", s.to_string()}, {"null_homotopic", yes}},
           yes ? "null-homotopic" : "not null-homotopic");
      return yes ? kTrue : kFalse;
    };
  });

  auto* pieces = slope_cmd("pieces", "Longest products of at most N pieces at each position of u_R");
  pieces->add_option("--max", max_pieces, "Number of pieces N")->check(CLI::Range(1, 4));
  pieces->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text);
      const SymmetrizedSet set(r);
      Json list = Json::array();
      std::ostringstream text;
      for (const auto& p : maximal_pieces(set, max_pieces)) {
        list.push_back({{"start", p.start}, {"length", p.length}, {"word", p.word.to_string()}});
        text << p.start << " " << p.word.to_string() << " " << format_seq(s_sequence(p.word)) << "\n";
      }
      std::string t = text.str();
      if (!t.empty()) {
        t.pop_back();
      }
      emit(g, {{"slope", r.to_string()}, {"pieces", max_pieces}, {"subwords", list}}, t);
      return kTrue;
    };
  });

  slope_cmd("sc-verify", "Check C(4) and T(4) for the relator of R")->callback([&] {
    action = [&] {
      const SmallCancellationReport rep = verify_c4_t4(Fraction::parse(r_text));
      std::string text = std::string("C(4) ") + (rep.c4 ? "holds" : "fails") + ", T(4) " + (rep.t4 ? "holds" : "fails");
      for (const auto& v : rep.violations) {
        text += "\n" + v;
      }
      emit(g, report_to_json(rep), text);
      return rep.c4 && rep.t4 ? kTrue : kFalse;
    };
  });

  auto* decide = slope_cmd("decide", "Are the loops of slopes S and S' homotopic?");
  decide->add_option("S", s_text, "Slope")->required();
  decide->add_option("S'", t_text, "Slope")->required();
  decide->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text), s = Fraction::parse(s_text), t = Fraction::parse(t_text);
      const Verdict v = full_decision(r, s, t, g.decide_options());
      std::string text = std::string(v.homotopic ? "homotopic" : "not homotopic") + " (" + v.rule + ")";
      for (const auto& c : v.certificates) {
        text += "\ncertificate: " + c.start.to_string() + " -> " + c.end.to_string() + " in " +
                std::to_string(c.steps.size()) + " steps, " + (check_certificate(c) ? "checks" : "FAILS");
      }
      if (v.evidence) {
        text += "\nevidence: traces " + v.evidence->trace_u + " and " + v.evidence->trace_v + " over F_" +
                std::to_string(v.evidence->prime) + (v.evidence->field_degree == 2 ? "^2" : "");
      }
      emit(g, verdict_to_json(r, s, t, v), text);
      return v.homotopic ? kTrue : kFalse;
    };
  });

  auto* classify = slope_cmd("classify", "Peripherality and primitivity of the loop of slope S");
  classify->add_option("S", s_text, "Slope")->required();
  classify->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text), s = Fraction::parse(s_text);
      const Classification c = classify_loop(r, s, g.decide_options());
      std::string text = std::string(c.peripheral ? "peripheral" : "not peripheral") + ", " +
                         (c.primitive ? "primitive" : "imprimitive") + " (" + c.rule + ")";
      if (c.power) {
        text += "\nu_s is conjugate to (" + c.power->root.to_string() + ")^" + std::to_string(c.power->exponent);
      }
      if (c.meridian) {
        text += "\nu_s commutes with " + c.meridian->to_string();
      }
      emit(g, classification_to_json(r, s, c), text);
      return kTrue;
    };
  });

  auto* search = slope_cmd("search-diagram", "One-ring annular diagrams with outer label u_S");
  search->add_option("S", s_text, "Slope")->required();
  search->add_option("--faces", faces, "Largest number of faces")->check(CLI::Range(1, 8));
  search->add_option("--limit", limit, "Number of diagrams listed");
  search->callback([&] {
    action = [&] {
      const Fraction r = Fraction::parse(r_text), s = Fraction::parse(s_text);
      const auto diagrams = search_one_layer(r, s, faces);
      std::map<std::size_t, std::size_t> by_faces;
      std::set<Fraction> slopes{s};
      const SlopeIntervals iv = intervals(r);
      for (const auto& d : diagrams) {
        ++by_faces[d.layers.front().faces.size()];
        if (auto t = inner_slope(d); t && contains(iv, *t)) {
          slopes.insert(*t);
        }
      }
      Json listed = Json::array();
      std::string text = std::to_string(diagrams.size()) + " diagrams";
      for (auto [t, n] : by_faces) {
        text += ", " + std::to_string(n) + " with " + std::to_string(t) + " faces";
      }
      text += "\ninner slopes in I1 and I2:";
      Json slope_list = Json::array();
      for (const auto& x : slopes) {
        text += " " + x.to_string();
        slope_list.push_back(x.to_string());
      }
      for (std::size_t i = 0; i < diagrams.size() && i < limit; ++i) {
        Json dj = diagram_to_json(diagrams[i]);
        dj["inner_label"] = inner_label(diagrams[i]).to_string();
        if (g.certify) {
          dj["certificate"] = certificate_to_json(diagram_certificate(diagrams[i]));
        }
        listed.push_back(dj);
        text += "\n" + diagram_line(diagrams[i]);
      }
      emit(g, {{"slope", r.to_string()}, {"s", s.to_string()}, {"count", diagrams.size()},
               {"inner_slopes", slope_list}, {"diagrams", listed}},
           text);
      return diagrams.empty() ? kFalse : kTrue;
    };
  });

  auto* check = app.add_subcommand("check-cert", "Replay certificates stored as JSON");
  check->add_option("FILE", file, "Certificate, list of certificates, or a document with certificates or diagrams")
      ->required();
  check->callback([&] {
    action = [&] {
      std::ifstream in(file);
      if (!in) {
        throw std::invalid_argument("cannot read " + file);
      }
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("not JSON: ") + e.what());
      }
      const auto certs = certificates_in(doc);
      bool all = true;
      Json results = Json::array();
      std::string text;
      for (std::size_t i = 0; i < certs.size(); ++i) {
        std::string why;
        const bool ok = check_certificate(certs[i], &why);
        all = all && ok;
        results.push_back({{"index", i}, {"valid", ok}, {"diagnostic", why}});
        text += (i ? "\n" : "") + std::string("certificate ") + std::to_string(i) + ": " +
                (ok ? "valid" : "invalid: " + why);
      }
      if (certs.empty()) {
        text = "no certificates";
      }
      emit(g, {{"file", file}, {"valid", all}, {"results", results}}, text);
      return all ? kTrue : kFalse;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--suite", suite, "Criterion name or number");
  verify->add_option("--out", out_dir, "Directory for junit.xml and results.json");
  verify->callback([&] {
    action = [&] {
      const auto results = run_acceptance(suite);
      if (results.empty()) {
        throw std::invalid_argument("no criterion named '" + suite + "'");
      }
      bool all = true;
      Json detail = Json::array();
      std::ostringstream text;
      for (const auto& r : results) {
        all = all && r.passed;
        detail.push_back(result_json(r));
        text << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " (" << r.seconds
             << " s): " << r.summary << "\n";
        for (const auto& f : r.failures) {
          text << "    " << f << "\n";
        }
      }
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / "junit.xml") << junit(results);
        std::ofstream(std::filesystem::path(out_dir) / "results.json") << detail.dump(2) << "\n";
      }
      std::string t = text.str();
      t.pop_back();
      emit(g, {{"passed", all}, {"criteria", detail}}, t);
      return all ? kTrue : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kTrue : kError;
  }
  try {
    code = action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return code;
}
