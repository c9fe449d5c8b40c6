#include "tropical/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace trop {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool TropicalPolynomial::operator==(const TropicalPolynomial& o) const {
  if (n_vars != o.n_vars || terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].exponent != o.terms[i].exponent || terms[i].coefficient != o.terms[i].coefficient) return false;
  return true;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  TropicalPolynomial run() {
    skip();
    expect_word("max");
    skip();
    expect('(');
    std::vector<std::pair<std::map<int, Int>, Rat>> raw;
    std::vector<std::pair<int, int>> where;
    for (;;) {
      skip();
      where.push_back({line_, col_});
      raw.push_back(term());
      skip();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(')');
      break;
    }
    skip();
    if (pos_ < s_.size()) fail("unexpected trailing input");
    int n = 0;
    for (const auto& [mono, c] : raw)
      for (const auto& [v, e] : mono) n = std::max(n, v);
    TropicalPolynomial f;
    f.n_vars = n;
    std::map<ZVec, size_t> seen;
    for (size_t i = 0; i < raw.size(); ++i) {
      ZVec e(n);
      for (const auto& [v, k] : raw[i].first) e[v - 1] = k;
      if (seen.count(e))
        throw ParseError("duplicate exponent " + to_string(e), where[i].first, where[i].second);
      seen[e] = i;
      f.terms.push_back({e, raw[i].second});
    }
    std::sort(f.terms.begin(), f.terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    return f;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void expect_word(const std::string& w) {
    for (char c : w) {
      if (peek() != c) fail("expected '" + w + "'");
      advance();
    }
  }

  bool at_int() const {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c == '-' && pos_ + 1 < s_.size()) return std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    return false;
  }

  Int integer() {
    std::string digits;
    if (peek() == '-') {
      digits += '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Int(digits);
  }

  int variable() {
    if (peek() != 'x') fail("expected variable");
    advance();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
    Int idx = integer();
    if (idx < 1 || idx > 64) fail("variable index out of range");
    return static_cast<int>(idx.get_si());
  }

  void mono(std::map<int, Int>& m) {
    if (peek() == 'x') {
      m[variable()] += 1;
      return;
    }
    Int k = integer();
    skip();
    expect('*');
    skip();
    m[variable()] += k;
  }

  std::pair<std::map<int, Int>, Rat> term() {
    std::map<int, Int> m;
    Rat c = 0;
    if (at_int()) {
      size_t save = pos_;
      int sl = line_, sc = col_;
      Int a = integer();
      skip();
      if (peek() == '*') {
        pos_ = save;
        line_ = sl;
        col_ = sc;
        mono(m);
      } else if (peek() == '/') {
        advance();
        skip();
        Int b = integer();
        if (b == 0) fail("zero denominator");
        c = Rat(a, b);
        c.canonicalize();
      } else {
        c = a;
      }
    } else if (peek() == 'x') {
      mono(m);
    } else {
      fail("expected term");
    }
    for (;;) {
      skip();
      if (peek() != '+') break;
      advance();
      skip();
      mono(m);
    }
    return {m, c};
  }
};

}  // namespace

TropicalPolynomial parse_polynomial(const std::string& text) { return PolyParser(text).run(); }

std::string print_polynomial(const TropicalPolynomial& f) {
  std::ostringstream os;
  os << "max(";
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (i) os << ", ";
    const auto& t = f.terms[i];
    os << t.coefficient.get_str();
    for (int v = 0; v < f.n_vars; ++v) {
      bool last_var = v == f.n_vars - 1;
      // keep a zero exponent on the last variable so the variable count survives
      if (t.exponent[v] == 0 && !(last_var && i == 0)) continue;
      os << " + " << t.exponent[v].get_str() << "*x" << (v + 1);
    }
  }
  os << ")";
  return os.str();
}

TropicalPolynomial with_vars(const TropicalPolynomial& f, int n) {
  if (n < f.n_vars) throw std::invalid_argument("with_vars: cannot drop variables");
  TropicalPolynomial g = f;
  g.n_vars = n;
  for (auto& t : g.terms) t.exponent.resize(n, Int(0));
  return g;
}

LatticePolytope newton_polytope(const TropicalPolynomial& f) {
  std::vector<QVec> pts;
  for (const auto& t : f.terms) pts.push_back(QVec(t.exponent.begin(), t.exponent.end()));
  LatticePolytope p;
  p.ambient_dim = f.n_vars;
  if (pts.empty()) return p;
  auto hull = convex_hull(pts);
  for (const auto& v : hull.vertices()) {
    ZVec z;
    for (const auto& x : v) z.push_back(x.get_num());
    p.vertices.push_back(z);
  }
  return p;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

FanSpec load_fan(const std::string& text) {
  FanSpec fan;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  std::map<int, ZVec> rays;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    auto bad = [&](const std::string& msg) { throw ParseError(msg, lineno, 1); };
    if (key == "dim") {
      if (!(ls >> fan.dim) || fan.dim < 1) bad("expected positive dimension");
      have_dim = true;
    } else if (key == "ray") {
      if (!have_dim) bad("'dim' must precede rays");
      std::string idx;
      ls >> idx;
      if (idx.empty() || idx.back() != ':') bad("expected 'ray i:'");
      int i = -1;
      try {
        i = std::stoi(idx.substr(0, idx.size() - 1));
      } catch (...) {
        bad("bad ray index");
      }
      if (i < 0 || rays.count(i)) bad("bad or repeated ray index");
      ZVec v;
      std::string tok;
      while (ls >> tok) {
        try {
          v.push_back(Int(tok));
        } catch (...) {
          bad("bad ray coordinate '" + tok + "'");
        }
      }
      if (static_cast<int>(v.size()) != fan.dim) bad("ray has wrong length");
      rays[i] = v;
    } else if (key == "cone:") {
      std::vector<int> c;
      std::string tok;
      while (ls >> tok) {
        try {
          c.push_back(std::stoi(tok));
        } catch (...) {
          bad("bad ray index in cone");
        }
      }
      if (c.empty()) bad("empty cone");
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end()) bad("repeated ray in cone");
      fan.cones.push_back(c);
    } else {
      bad("unknown directive '" + key + "'");
    }
  }
  if (!have_dim) throw ParseError("missing 'dim'", lineno, 1);
  int expect = 0;
  for (const auto& [i, v] : rays) {
    if (i != expect) throw FanError("ray indices must be 0..k-1 without gaps");
    fan.rays.push_back(v);
    ++expect;
  }
  for (const auto& c : fan.cones)
    for (int i : c)
      if (i >= static_cast<int>(fan.rays.size())) throw FanError("cone refers to unknown ray " + std::to_string(i));
  std::sort(fan.cones.begin(), fan.cones.end());
  validate_fan(fan);
  return fan;
}

std::string print_fan(const FanSpec& fan) {
  std::ostringstream os;
  os << "dim " << fan.dim << "\n";
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    os << "ray " << i << ":";
    for (const auto& x : fan.rays[i]) os << " " << x.get_str();
    os << "\n";
  }
  for (const auto& c : fan.cones) {
    os << "cone:";
    for (int i : c) os << " " << i;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string ray_list(const FanSpec& fan, const std::vector<int>& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + to_string(fan.rays[c[i]]);
  return s + "}";
}

}  // namespace

void validate_fan(const FanSpec& fan) {
  for (size_t i = 0; i < fan.rays.size(); ++i) {
    Int g = content(fan.rays[i]);
    if (g == 0) throw FanError("ray " + std::to_string(i) + " is zero");
    if (g != 1) throw FanError("ray " + std::to_string(i) + " is not primitive");
  }
  for (const auto& c : fan.cones) {
    ZMatrix m(fan.dim, static_cast<int>(c.size()));
    for (size_t j = 0; j < c.size(); ++j)
      for (int i = 0; i < fan.dim; ++i) m(i, static_cast<int>(j)) = fan.rays[c[j]][i];
    auto f = invariant_factors(m);
    if (f.size() != c.size()) throw FanError("cone " + ray_list(fan, c) + " is not simplicial");
    Int idx = 1;
    for (const auto& x : f) idx *= x;
    if (idx != 1) {
      if (static_cast<int>(c.size()) == fan.dim)
        throw FanError("cone " + ray_list(fan, c) + " is not unimodular (determinant " + determinant(m).get_str() + ")");
      throw FanError("cone " + ray_list(fan, c) + " is not unimodular (index " + idx.get_str() + ")");
    }
  }
  // cone(A) and cone(B) meet in a common face iff no point of the intersection
  // uses a ray of A outside B
  for (size_t a = 0; a < fan.cones.size(); ++a)
    for (size_t b = a + 1; b < fan.cones.size(); ++b) {
      const auto& A = fan.cones[a];
      const auto& B = fan.cones[b];
      for (int pass = 0; pass < 2; ++pass) {
        const auto& P = pass == 0 ? A : B;
        const auto& Q = pass == 0 ? B : A;
        LinearProgram lp;
        lp.n = static_cast<int>(P.size() + Q.size());
        lp.nonneg.assign(lp.n, true);
        for (int i = 0; i < fan.dim; ++i) {
          QVec row;
          for (int r : P) row.push_back(fan.rays[r][i]);
          for (int r : Q) row.push_back(-fan.rays[r][i]);
          lp.E.push_back(row);
          lp.e.push_back(0);
        }
        lp.A.push_back(QVec(lp.n, Rat(1)));
        lp.b.push_back(1);
        lp.c.assign(lp.n, Rat(0));
        bool any = false;
        for (size_t j = 0; j < P.size(); ++j)
          if (!std::binary_search(Q.begin(), Q.end(), P[j])) {
            lp.c[j] = 1;
            any = true;
          }
        if (!any) continue;
        auto r = solve_lp(lp);
        if (r.status == LPResult::Optimal && r.value > 0)
          throw FanError("cones " + ray_list(fan, A) + " and " + ray_list(fan, B) +
                         " do not intersect in a common face");
      }
    }
}

FanSpec normal_fan(const LatticePolytope& polytope) {
  std::vector<QVec> pts;
  for (const auto& v : polytope.vertices) pts.push_back(QVec(v.begin(), v.end()));
  if (pts.empty()) throw FanError("normal fan of an empty polytope");
  auto hull = convex_hull(pts);
  if (hull.dim() != polytope.ambient_dim) throw FanError("normal fan needs a full-dimensional polytope");
  FanSpec fan;
  fan.dim = polytope.ambient_dim;
  std::vector<ZVec> normals;
  for (const auto& f : hull.facets()) normals.push_back(f.normal);
  std::vector<int> order(normals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return normals[a] < normals[b]; });
  std::vector<int> rank_of_facet(normals.size());
  for (size_t i = 0; i < order.size(); ++i) {
    fan.rays.push_back(normals[order[i]]);
    rank_of_facet[order[i]] = static_cast<int>(i);
  }
  for (const auto& v : hull.vertices()) {
    std::vector<int> c;
    for (size_t i = 0; i < hull.facets().size(); ++i) {
      Rat s = 0;
      for (int k = 0; k < fan.dim; ++k) s += hull.facets()[i].normal[k] * v[k];
      if (s == hull.facets()[i].offset) c.push_back(rank_of_facet[i]);
    }
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != fan.dim)
      throw FanError("normal cone at vertex " + to_string(v) + " is not simplicial: rays " + ray_list(fan, c));
    fan.cones.push_back(c);
  }
  std::sort(fan.cones.begin(), fan.cones.end());
  validate_fan(fan);
  return fan;
}

FanSpec trivial_fan(int dim) {
  FanSpec fan;
  fan.dim = dim;
  return fan;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace trop
