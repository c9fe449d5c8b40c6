#pragma once

#include <string>
#include <vector>

#include "tropical/report.hpp"

namespace trop {

struct Assertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Section {
  std::string name;
  bool skipped = false;
  std::string reason;               // why the section was skipped
  std::vector<std::string> lines;   // informational output
  std::vector<Assertion> assertions;
  bool ok() const;
};

struct ReportDocument {
  std::vector<Section> sections;
  bool ok() const;
};

struct TableRequest {
  std::vector<Variant> variants = {Variant::Standard, Variant::BorelMoore};
  Ring ring = Ring::Z;
  std::vector<int> p;  // empty means all
  std::vector<int> q;
};

// One row per (space, variant, ring, p, q), sorted.
struct TableRow {
  std::string space;  // X or Y
  Variant variant;
  Ring ring;
  int p = 0;
  int q = 0;
  long rank = 0;
  std::vector<Int> torsion;
};
std::string format_row(const TableRow& r);

// Standard rows are left out (with a note) unless the pair is cellular.
std::vector<TableRow> homology_rows(const HypersurfacePair& pair, const TableRequest& req,
                                    std::vector<std::string>* notes = nullptr);

Section complex_stats_section(const HypersurfacePair& pair);
Section predicates_section(const HypersurfacePair& pair);
Section homology_section(const HypersurfacePair& pair, const TableRequest& req);
Section lefschetz_suite(const HypersurfacePair& pair);
Section torsion_suite(const HypersurfacePair& pair);
Section vanishing_suite(const HypersurfacePair& pair);
Section chi_y_suite(const HypersurfacePair& pair);
Section duality_suite(const HypersurfacePair& pair);
Section toric_suite(const HypersurfacePair& pair);
Section hodge_section(const HypersurfacePair& pair);

extern const std::vector<std::string> kSuites;  // lefschetz torsion vanishing chi-y duality toric
// suite is one of kSuites or "all"; throws std::invalid_argument otherwise
ReportDocument verify(const HypersurfacePair& pair, const std::string& suite);

std::string render_text(const ReportDocument& doc);

}  // namespace trop
