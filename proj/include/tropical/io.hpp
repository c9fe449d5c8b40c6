#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tropical/linalg.hpp"
#include "tropical/polyhedral.hpp"

namespace trop {

struct Term {
  ZVec exponent;
  Rat coefficient;
};

struct TropicalPolynomial {
  int n_vars = 0;
  std::vector<Term> terms;  // sorted by exponent
  bool operator==(const TropicalPolynomial& o) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class FanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TropicalPolynomial parse_polynomial(const std::string& text);
std::string print_polynomial(const TropicalPolynomial& f);
// Same polynomial viewed in n >= f.n_vars variables.
TropicalPolynomial with_vars(const TropicalPolynomial& f, int n);
LatticePolytope newton_polytope(const TropicalPolynomial& f);

struct FanSpec {
  int dim = 0;
  std::vector<ZVec> rays;
  std::vector<std::vector<int>> cones;  // maximal cones, sorted ray indices
};

FanSpec load_fan(const std::string& text);
std::string print_fan(const FanSpec& fan);
void validate_fan(const FanSpec& fan);
FanSpec normal_fan(const LatticePolytope& polytope);
FanSpec trivial_fan(int dim);

std::string read_text_file(const std::string& path);

}  // namespace trop
