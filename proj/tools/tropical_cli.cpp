#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tropical/suites.hpp"

using json = nlohmann::ordered_json;
using namespace trop;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kInvalid = 3, kRefused = 4 };

struct RunConfig {
  std::string poly;
  std::string fan;
  bool normal = false;
  bool bm = false, standard = false, both = false;
  std::string ring = "Z";
  std::vector<int> p, q;
  std::string out;
  int max_dim = 4;
  std::string format = "text";
  std::string suite = "all";
};

Ring parse_ring(const std::string& s) {
  if (s == "Z") return Ring::Z;
  if (s == "Q") return Ring::Q;
  return Ring::Z2;
}

// current names the file being read, for error locations
HypersurfacePair load(const RunConfig& c, std::string& current) {
  current = c.poly;
  auto f = parse_polynomial(read_text_file(c.poly));
  current = c.fan;
  FanSpec fan = c.normal ? normal_fan(newton_polytope(f)) : load_fan(read_text_file(c.fan));
  BuildOptions opt;
  opt.max_dim = c.max_dim;
  return build_pair(f, fan, opt);
}

std::string counts(const std::vector<long>& f) {
  static const char* names[] = {"vertices", "edges", "2-cells", "3-cells", "4-cells", "5-cells"};
  std::string s;
  for (size_t i = 0; i < f.size(); ++i)
    s += (i ? ", " : "") + std::to_string(f[i]) + " " + (i < 6 ? names[i] : std::to_string(i) + "-cells");
  return s;
}

json section_json(const Section& s) {
  json j;
  j["name"] = s.name;
  j["skipped"] = s.skipped;
  if (s.skipped) j["reason"] = s.reason;
  j["lines"] = s.lines;
  j["assertions"] = json::array();
  for (const auto& a : s.assertions) j["assertions"].push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
  return j;
}

json doc_json(const ReportDocument& d) {
  json j;
  j["sections"] = json::array();
  for (const auto& s : d.sections) j["sections"].push_back(section_json(s));
  j["ok"] = d.ok();
  return j;
}

std::string cmd_build(const RunConfig& c, const HypersurfacePair& pair) {
  std::ostringstream out;
  if (c.format == "json") {
    json j;
    j["subdivision"] = {{"maximal_cells", pair.subdivision.cells.size()}, {"dimension", pair.subdivision.dimension}};
    j["Y_refined"] = pair.ambient.f_vector();
    j["X"] = pair.X.f_vector();
    j["sections"] = {section_json(complex_stats_section(pair)), section_json(predicates_section(pair))};
    j["Y_refined_dump"] = dump_complex(pair.ambient, pair.Y);
    j["X_dump"] = dump_complex(pair.X, pair.Y);
    out << j.dump(2) << "\n";
    return out.str();
  }
  out << "Y refined: " << counts(pair.ambient.f_vector()) << "\n";
  out << "X: " << counts(pair.X.f_vector()) << "\n";
  ReportDocument d;
  d.sections = {complex_stats_section(pair), predicates_section(pair)};
  out << render_text(d).substr(0, render_text(d).rfind("result:"));
  out << "== Y refined cells\n" << dump_complex(pair.ambient, pair.Y);
  out << "== X cells\n" << dump_complex(pair.X, pair.Y);
  return out.str();
}

int cmd_homology(const RunConfig& c, const HypersurfacePair& pair, std::string& text) {
  if (!is_nonsingular(pair)) {
    std::cerr << "error: the hypersurface is singular (some dual cell is not a unimodular simplex), so F_p on X "
                 "is not the multi-tangent cosheaf of a smooth variety; homology is refused\n";
    return kRefused;
  }
  TableRequest req;
  req.ring = parse_ring(c.ring);
  req.p = c.p;
  req.q = c.q;
  if (c.bm && !c.standard)
    req.variants = {Variant::BorelMoore};
  else if (c.standard && !c.bm)
    req.variants = {Variant::Standard};
  else
    req.variants = {Variant::Standard, Variant::BorelMoore};
  std::vector<std::string> notes;
  auto rows = homology_rows(pair, req, &notes);
  const bool refused = req.variants.size() == 1 && req.variants[0] == Variant::Standard && !notes.empty();
  for (const auto& n : notes) std::cerr << "note: " << n << "\n";
  std::ostringstream out;
  if (c.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json t = json::array();
      for (const auto& x : r.torsion) t.push_back(x.get_str());
      j.push_back({{"space", r.space}, {"variant", to_string(r.variant)}, {"ring", to_string(r.ring)}, {"p", r.p},
                   {"q", r.q}, {"rank", r.rank}, {"torsion", t}});
    }
    out << json{{"rows", j}, {"notes", notes}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) out << format_row(r) << "\n";
  }
  text = out.str();
  return refused ? kRefused : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical homology of hypersurfaces in tropical toric varieties"};
  app.require_subcommand(1);
  RunConfig c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--poly", c.poly, "tropical polynomial file")->required()->check(CLI::ExistingFile);
    auto fan = s->add_option("--fan", c.fan, "fan file")->check(CLI::ExistingFile);
    auto nf = s->add_flag("--normal-fan", c.normal, "use the normal fan of the Newton polytope");
    fan->excludes(nf);
    nf->excludes(fan);
    s->add_option("--out", c.out, "write output here instead of stdout");
    s->add_option("--max-dim", c.max_dim, "largest ambient dimension accepted")->check(CLI::PositiveNumber);
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto* build = app.add_subcommand("build", "build the subdivision, X and the refined ambient");
  add_common(build);
  auto* hom = app.add_subcommand("homology", "integral homology tables");
  add_common(hom);
  hom->add_flag("--bm", c.bm, "Borel-Moore homology");
  hom->add_flag("--standard", c.standard, "standard homology");
  hom->add_flag("--both", c.both, "both variants (default)");
  hom->add_option("--ring", c.ring, "coefficients")->check(CLI::IsMember({"Z", "Q", "Z2"}));
  hom->add_option("--p", c.p, "p values")->delimiter(',');
  hom->add_option("--q", c.q, "q values")->delimiter(',');
  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_common(ver);
  std::vector<std::string> suites = kSuites;
  suites.push_back("all");
  ver->add_option("suite", c.suite, "suite name or all")->check(CLI::IsMember(suites));

  CLI11_PARSE(app, argc, argv);
  if (c.fan.empty() && !c.normal) {
    std::cerr << "error: give --fan PATH or --normal-fan\n";
    return kInvalid;
  }

  HypersurfacePair pair;
  std::string current;
  try {
    pair = load(c, current);
  } catch (const ParseError& e) {
    std::cerr << current << ":" << e.line() << ":" << e.column() << ": parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  std::string text;
  int code = kOk;
  try {
    if (build->parsed()) {
      text = cmd_build(c, pair);
    } else if (hom->parsed()) {
      code = cmd_homology(c, pair, text);
    } else {
      auto doc = verify(pair, c.suite);
      text = c.format == "json" ? doc_json(doc).dump(2) + "\n" : render_text(doc);
      code = doc.ok() ? kOk : kFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kInvalid;
    }
    f << text;
  }
  return code;
}
