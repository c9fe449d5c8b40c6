#include "tropical/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trop {

bool Section::ok() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return true;
}

bool ReportDocument::ok() const {
  for (const auto& s : sections)
    if (!s.ok()) return false;
  return true;
}

const std::vector<std::string> kSuites = {"lefschetz", "torsion", "vanishing", "chi-y", "duality", "toric"};

namespace {

std::string join(const std::vector<long>& v, const std::string& sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string torsion_string(const std::vector<Int>& t) {
  std::string out = "[";
  for (size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + t[i].get_str();
  return out + "]";
}

std::string rays_string(const ToricVariety& y, int cone) {
  std::string out = "{";
  const auto& r = y.cone_rays(cone);
  for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + std::to_string(r[i]);
  return out + "}";
}

std::string pq(int p, int q) { return "p=" + std::to_string(p) + " q=" + std::to_string(q); }

int hypersurface_dim(const HypersurfacePair& pair) { return pair.Y.dim() - 1; }

bool wanted(const std::vector<int>& filter, int v) {
  return filter.empty() || std::find(filter.begin(), filter.end(), v) != filter.end();
}

Section skipped(const std::string& name, const std::string& reason) {
  Section s;
  s.name = name;
  s.skipped = true;
  s.reason = reason;
  return s;
}

std::vector<HomologyRow> x_homology(const HypersurfacePair& pair, const Orientation& o, int p, Variant v, Ring r) {
  return homology(chain_complex(pair.X, o, multitangent(pair.X, pair.Y, p), v, r));
}

std::vector<HomologyRow> y_homology(const HypersurfacePair& pair, const Orientation& o, int p, Variant v, Ring r) {
  return homology(chain_complex(pair.ambient, o, ambient_on_cells(pair.ambient, pair.Y, p), v, r));
}

std::string failing_regions(const HypersurfacePair& pair) {
  auto a = combinatorial_ampleness(pair);
  std::string out;
  for (int g : a.failing) {
    out += (out.empty() ? "" : "; ") + std::string("region ") + std::to_string(g) + " meets cones";
    auto cones = gamma_open(pair, g).cones;
    std::sort(cones.begin(), cones.end());
    for (int c : cones) out += " " + rays_string(pair.Y, c);
  }
  return out;
}

}  // namespace

std::string format_row(const TableRow& r) {
  return "(" + r.space + ", " + to_string(r.variant) + ", " + to_string(r.ring) + ", " + std::to_string(r.p) + ", " +
         std::to_string(r.q) + ", " + std::to_string(r.rank) + ", torsion=" + torsion_string(r.torsion) + ")";
}

std::vector<TableRow> homology_rows(const HypersurfacePair& pair, const TableRequest& req,
                                    std::vector<std::string>* notes) {
  std::vector<TableRow> rows;
  const bool cellular = is_cellular_pair(pair) == Tri::Yes;
  auto ox = orient(pair.X, pair.Y);
  auto oy = orient(pair.ambient, pair.Y);
  for (const std::string space : {"X", "Y"}) {
    const int top = space == "X" ? hypersurface_dim(pair) : pair.Y.dim();
    for (Variant v : req.variants) {
      if (v == Variant::Standard && !cellular) {
        if (notes && space == "X")
          notes->push_back("standard homology refused: the pair is not known to be cellular (cellular-pair = " +
                           to_string(is_cellular_pair(pair)) + "); use --bm");
        continue;
      }
      for (int p = 0; p <= top; ++p) {
        if (!wanted(req.p, p)) continue;
        auto h = space == "X" ? x_homology(pair, ox, p, v, req.ring) : y_homology(pair, oy, p, v, req.ring);
        for (const auto& row : h) {
          if (!wanted(req.q, row.q)) continue;
          rows.push_back({space, v, req.ring, p, row.q, row.rank, row.torsion});
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::make_tuple(a.space, static_cast<int>(a.variant), static_cast<int>(a.ring), a.p, a.q) <
           std::make_tuple(b.space, static_cast<int>(b.variant), static_cast<int>(b.ring), b.p, b.q);
  });
  return rows;
}

Section complex_stats_section(const HypersurfacePair& pair) {
  Section s;
  s.name = "complex-stats";
  s.lines.push_back("ambient dimension " + std::to_string(pair.Y.dim()));
  s.lines.push_back("subdivision: " + std::to_string(pair.subdivision.cells.size()) + " maximal cells, polytope dimension " +
                    std::to_string(pair.subdivision.dimension));
  s.lines.push_back("fan: " + std::to_string(pair.Y.fan().rays.size()) + " rays, " + std::to_string(pair.Y.cone_count()) +
                    " cones");
  s.lines.push_back("Y refined f-vector: " + join(pair.ambient.f_vector()));
  s.lines.push_back("X f-vector: " + join(pair.X.f_vector()));
  long compact = 0;
  for (const auto& c : pair.X.cells) compact += c.compact;
  s.lines.push_back("X compact cells: " + std::to_string(compact) + " of " + std::to_string(pair.X.size()));
  if (pair.lineality_refined) s.lines.push_back("refined by max(0, x_1, ..., x_N) to remove lineality");
  return s;
}

Section predicates_section(const HypersurfacePair& pair) {
  Section s;
  s.name = "predicates";
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  s.lines.push_back("proper: " + yn(is_proper(pair)));
  s.lines.push_back("non-singular: " + yn(is_nonsingular(pair)));
  const bool ample = is_combinatorially_ample(pair);
  s.lines.push_back("combinatorially ample: " + yn(ample) + (ample ? "" : " (" + failing_regions(pair) + ")"));
  s.lines.push_back("cellular pair: " + to_string(is_cellular_pair(pair)));
  s.lines.push_back("full-dimensional Newton polytope: " + yn(newton_polytope_full(pair)));
  s.lines.push_back("compact ambient: " + yn(pair.Y.complete()));
  return s;
}

Section homology_section(const HypersurfacePair& pair, const TableRequest& req) {
  Section s;
  s.name = "homology-tables";
  std::vector<std::string> notes;
  auto rows = homology_rows(pair, req, &notes);
  for (const auto& n : notes) s.lines.push_back(n);
  for (const auto& r : rows) s.lines.push_back(format_row(r));
  return s;
}

Section lefschetz_suite(const HypersurfacePair& pair) {
  const std::string name = "lefschetz";
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  if (!is_combinatorially_ample(pair))
    return skipped(name, "not combinatorially ample: " + failing_regions(pair));
  Section s;
  s.name = name;
  const int n = hypersurface_dim(pair);
  std::vector<Variant> variants = {Variant::BorelMoore};
  if (is_cellular_pair(pair) == Tri::Yes && newton_polytope_full(pair))
    variants.push_back(Variant::Standard);
  else
    s.lines.push_back("standard variant not checked: needs cellular pair and full-dimensional Newton polytope");
  for (Variant v : variants)
    for (int p = 0; p <= n; ++p) {
      auto rows = induced_map(pair, p, v);
      for (const auto& r : rows) {
        if (p + r.q > n) continue;
        const bool need_iso = p + r.q < n;
        const bool pass = need_iso ? (r.injective && r.surjective) : r.surjective;
        s.assertions.push_back({to_string(v) + " " + pq(p, r.q) + (need_iso ? " iso" : " surjective"), pass,
                                r.classification() + " " + std::to_string(r.rank_source) + " -> " +
                                    std::to_string(r.rank_target)});
      }
    }
  return s;
}

Section torsion_suite(const HypersurfacePair& pair) {
  const std::string name = "torsion";
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  if (is_cellular_pair(pair) != Tri::Yes) return skipped(name, "pair is not known to be cellular");
  if (!newton_polytope_full(pair)) return skipped(name, "Newton polytope is not full-dimensional");
  auto oy = orient(pair.ambient, pair.Y);
  for (Variant v : {Variant::Standard, Variant::BorelMoore})
    for (int p = 0; p <= pair.Y.dim(); ++p)
      for (const auto& r : y_homology(pair, oy, p, v, Ring::Z))
        if (!r.torsion.empty()) return skipped(name, "toric variety has torsion in " + to_string(v) + " " + pq(p, r.q));
  Section s;
  s.name = name;
  auto ox = orient(pair.X, pair.Y);
  const int n = hypersurface_dim(pair);
  for (Variant v : {Variant::Standard, Variant::BorelMoore})
    for (int p = 0; p <= n; ++p) {
      auto hz = x_homology(pair, ox, p, v, Ring::Z);
      auto h2 = x_homology(pair, ox, p, v, Ring::Z2);
      for (size_t q = 0; q < hz.size(); ++q) {
        const std::string where = to_string(v) + " " + pq(p, static_cast<int>(q));
        s.assertions.push_back({where + " torsion free", hz[q].torsion.empty(), torsion_string(hz[q].torsion)});
        auto even = [&](size_t k) {
          long e = 0;
          if (k < hz.size())
            for (const auto& t : hz[k].torsion) e += (t % 2 == 0);
          return e;
        };
        const long want = hz[q].rank + even(q) + (q > 0 ? even(q - 1) : 0);
        s.assertions.push_back({where + " Z2 dimension", h2[q].rank == want,
                                std::to_string(h2[q].rank) + " vs " + std::to_string(want)});
      }
    }
  return s;
}

Section vanishing_suite(const HypersurfacePair& pair) {
  const std::string name = "vanishing";
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  if (!is_combinatorially_ample(pair))
    return skipped(name, "not combinatorially ample: " + failing_regions(pair));
  Section s;
  s.name = name;
  const bool standard = is_cellular_pair(pair) == Tri::Yes && newton_polytope_full(pair);
  if (!standard) s.lines.push_back("standard groups not checked: needs cellular pair and full-dimensional Newton polytope");
  for (int p = 0; p <= hypersurface_dim(pair); ++p) {
    auto r = verify_vanishing(pair, p, standard);
    std::string detail = std::to_string(r.checked.size()) + " groups checked";
    for (const auto& v : r.violations) detail += "; " + v;
    s.assertions.push_back({"p=" + std::to_string(p), r.ok(), detail});
  }
  return s;
}

Section chi_y_suite(const HypersurfacePair& pair) {
  const std::string name = "chi-y";
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  if (!is_proper(pair)) return skipped(name, "hypersurface does not meet the strata properly");
  Section s;
  s.name = name;
  auto a = chi_y_from_homology(pair);
  auto b = chi_y_from_f_vector(pair);
  s.lines.push_back("from homology: " + poly_to_string(a));
  s.lines.push_back("from f-vector: " + poly_to_string(b));
  s.assertions.push_back({"routes agree", a == b, poly_to_string(a) + " vs " + poly_to_string(b)});
  return s;
}

Section duality_suite(const HypersurfacePair& pair) {
  const std::string name = "duality";
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  if (!pair.Y.complete()) return skipped(name, "ambient is not compact");
  Section s;
  s.name = name;
  auto o = orient(pair.X, pair.Y);
  const int n = hypersurface_dim(pair);
  for (int p = 0; p <= n; ++p) {
    auto bm = x_homology(pair, o, p, Variant::BorelMoore, Ring::Z);
    auto co = cohomology(chain_complex(pair.X, o, multitangent(pair.X, pair.Y, n - p), Variant::Standard, Ring::Z));
    for (int q = 0; q <= n; ++q) {
      const long a = q < static_cast<int>(bm.size()) ? bm[q].rank : 0;
      const long b = n - q < static_cast<int>(co.size()) ? co[n - q].rank : 0;
      s.assertions.push_back({pq(p, q), a == b, std::to_string(a) + " vs " + std::to_string(b)});
    }
  }
  return s;
}

Section toric_suite(const HypersurfacePair& pair) {
  const std::string name = "toric";
  Section s;
  s.name = name;
  if (pair.Y.complete()) {
    auto r = toric_homology_report(pair.Y);
    s.lines.push_back("h-vector: " + join(r.h));
    s.lines.push_back("strata f-vector: " + join(r.f));
    bool fh = true;
    for (const auto& v : r.violations) fh = fh && v.rfind("f/h", 0) != 0;
    s.assertions.push_back({"f/h identity", fh, ""});
    for (size_t p = 0; p < r.table.size(); ++p)
      for (const auto& row : r.table[p]) {
        const long want = row.q == static_cast<int>(p) ? r.h[p] : 0;
        s.assertions.push_back({pq(static_cast<int>(p), row.q), row.rank == want && row.torsion.empty(),
                                std::to_string(row.rank) + " vs " + std::to_string(want)});
      }
    return s;
  }
  if (!is_nonsingular(pair)) return skipped(name, "hypersurface is singular");
  RankPrediction r;
  if (pair.Y.trivial()) {
    r = torus_bm_prediction(pair);
    s.lines.push_back("torus case");
  } else if (pair.Y.single_cone()) {
    r = affine_bm_prediction(pair);
    s.lines.push_back("affine case");
  } else {
    return skipped(name, "ambient is neither compact, the torus, nor a single cone");
  }
  if (r.table.empty()) return skipped(name, r.violations.empty() ? "no table" : r.violations.front());
  for (size_t p = 0; p < r.table.size(); ++p) {
    std::vector<long> line = r.table[p];
    s.lines.push_back("BM ranks p=" + std::to_string(p) + ": " + join(line));
  }
  std::string detail;
  for (const auto& v : r.violations) detail += (detail.empty() ? "" : "; ") + v;
  s.assertions.push_back({"predicted Borel-Moore ranks", r.ok(), detail});
  return s;
}

Section hodge_section(const HypersurfacePair& pair) {
  const std::string name = "hodge";
  RankTable t;
  try {
    t = hodge_table(pair);
  } catch (const ReportError& e) {
    return skipped(name, e.what());
  }
  Section s;
  s.name = name;
  const int n = static_cast<int>(t.size()) - 1;
  for (int p = 0; p <= n; ++p) s.lines.push_back("h^{" + std::to_string(p) + ",q}: " + join(t[p]));
  bool symmetric = true;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) symmetric = symmetric && t[p][q] == t[n - p][n - q];
  s.assertions.push_back({"symmetric under (p,q) -> (n-p,n-q)", symmetric, ""});
  return s;
}

ReportDocument verify(const HypersurfacePair& pair, const std::string& suite) {
  if (suite != "all" && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw std::invalid_argument("unknown suite " + suite);
  ReportDocument doc;
  doc.sections.push_back(complex_stats_section(pair));
  doc.sections.push_back(predicates_section(pair));
  const bool all = suite == "all";
  if (all) {
    TableRequest req;
    req.variants = {Variant::BorelMoore, Variant::Standard};
    if (is_nonsingular(pair)) doc.sections.push_back(homology_section(pair, req));
  }
  if (all || suite == "lefschetz") doc.sections.push_back(lefschetz_suite(pair));
  if (all || suite == "vanishing") doc.sections.push_back(vanishing_suite(pair));
  if (all || suite == "torsion") doc.sections.push_back(torsion_suite(pair));
  if (all || suite == "chi-y") doc.sections.push_back(chi_y_suite(pair));
  if (all) doc.sections.push_back(hodge_section(pair));
  if (all || suite == "duality") doc.sections.push_back(duality_suite(pair));
  if (all || suite == "toric") doc.sections.push_back(toric_suite(pair));
  return doc;
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  for (const auto& s : doc.sections) {
    out << "== " << s.name;
    if (s.skipped) out << " (skipped: " << s.reason << ")";
    out << "\n";
    for (const auto& l : s.lines) out << "  " << l << "\n";
    for (const auto& a : s.assertions)
      out << "  [" << (a.pass ? "PASS" : "FAIL") << "] " << a.name << (a.detail.empty() ? "" : "  " + a.detail) << "\n";
  }
  out << "result: " << (doc.ok() ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace trop
