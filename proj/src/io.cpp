#include "gorlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gorlab::io {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
  auto k = s.find('#');
  return k == std::string::npos ? s : s.substr(0, k);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

// "key: rest" -> key, rest; returns false when the line has no header
bool header(const std::string& line, const std::string& key, std::string& rest) {
  if (line.compare(0, key.size(), key) != 0) return false;
  std::size_t k = key.size();
  while (k < line.size() && line[k] == ' ') ++k;
  if (k >= line.size() || line[k] != ':') return false;
  rest = trim(line.substr(k + 1));
  return true;
}

class PolyParser {
 public:
  PolyParser(const std::string& s, const VariableTable& t) : s_(s), t_(t) {}

  std::vector<Polynomial::Term> parse() {
    std::vector<Polynomial::Term> terms;
    skip();
    if (done()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (!done()) {
      Scalar sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw std::invalid_argument("expected '+' or '-' at column " + std::to_string(pos_ + 1));
      }
      first = false;
      auto t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip();
    }
    return terms;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Polynomial::Term term() {
    Scalar coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool any = false;
    while (true) {
      skip();
      if (done()) throw std::invalid_argument("dangling '*' or sign");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::string tok = variable_token();
        VarLabel lab = parse_variable(tok);
        auto id = t_.find(lab);
        if (!id) throw std::invalid_argument("unregistered variable " + lab.str());
        std::uint32_t e = 1;
        skip();
        if (!done() && peek() == '^') {
          ++pos_;
          skip();
          Scalar x = number();
          if (x.get_den() != 1 || x < 1) throw std::invalid_argument("exponent must be a positive integer");
          e = static_cast<std::uint32_t>(x.get_num().get_ui());
        }
        factors.push_back({*id, e});
      } else {
        throw std::invalid_argument(std::string("unexpected character '") + peek() + "' at column " +
                                    std::to_string(pos_ + 1));
      }
      any = true;
      skip();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw std::invalid_argument("empty term");
    std::sort(factors.begin(), factors.end(), [](auto& a, auto& b) { return a.var < b.var; });
    std::vector<Monomial::Factor> merged;
    for (auto f : factors) {
      if (!merged.empty() && merged.back().var == f.var)
        merged.back().exp += f.exp;
      else
        merged.push_back(f);
    }
    return {Monomial::from_factors(std::move(merged)), coeff};
  }

  Scalar number() {
    std::size_t a = pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    Scalar x;
    if (x.set_str(s_.substr(a, pos_ - a), 10) != 0) throw std::invalid_argument("bad number '" + s_.substr(a, pos_ - a) + "'");
    x.canonicalize();
    return x;
  }

  std::string variable_token() {
    std::size_t a = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (!done() && peek() == '[') {
      auto close = s_.find(']', pos_);
      if (close == std::string::npos) throw std::invalid_argument("unterminated '[' in variable");
      pos_ = close + 1;
    }
    return s_.substr(a, pos_ - a);
  }

  const std::string& s_;
  const VariableTable& t_;
  std::size_t pos_ = 0;
};

}  // namespace

VarLabel parse_variable(const std::string& token) {
  std::string tok = trim(token);
  auto lb = tok.find('[');
  VarLabel lab;
  lab.symbol = tok.substr(0, lb);
  if (lab.symbol.empty() || !(std::isalpha(static_cast<unsigned char>(lab.symbol[0])) || lab.symbol[0] == '_'))
    throw std::invalid_argument("bad variable name '" + tok + "'");
  for (char c : lab.symbol)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw std::invalid_argument("bad variable name '" + tok + "'");
  if (lb == std::string::npos) return lab;
  if (tok.back() != ']') throw std::invalid_argument("bad variable index in '" + tok + "'");
  std::string inside = tok.substr(lb + 1, tok.size() - lb - 2);
  std::stringstream ss(inside);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (part.empty()) throw std::invalid_argument("empty index in '" + tok + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad index '" + part + "' in '" + tok + "'");
    }
    if (used != part.size()) throw std::invalid_argument("bad index '" + part + "' in '" + tok + "'");
    lab.index.push_back(v);
  }
  return lab;
}

Polynomial parse_polynomial(const std::string& text, const VariableTable& table, const Field& field) {
  PolyParser p(text, table);
  return Polynomial::from_terms(p.parse(), field);
}

IdealFile parse_ideal(const std::string& text) {
  IdealFile out;
  std::istringstream is(text);
  std::string raw, rest;
  int lineno = 0;
  bool have_vars = false;
  std::vector<std::pair<int, std::string>> poly_lines;
  std::optional<std::pair<int, std::string>> order_line;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    try {
      if (header(line, "vars", rest)) {
        if (have_vars) throw std::invalid_argument("duplicate vars header");
        for (const auto& tok : split_ws(rest)) out.table.add(parse_variable(tok));
        have_vars = true;
      } else if (header(line, "order", rest)) {
        order_line = {lineno, rest};
      } else if (header(line, "field", rest)) {
        out.field = Field::parse(rest);
      } else {
        poly_lines.push_back({lineno, line});
      }
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!have_vars) throw ParseError(0, "missing 'vars:' header");
  for (const auto& [ln, line] : poly_lines) {
    try {
      out.polynomials.push_back(parse_polynomial(line, out.table, out.field));
    } catch (const std::exception& e) {
      throw ParseError(ln, e.what());
    }
  }
  if (order_line) {
    try {
      auto toks = split_ws(order_line->second);
      if (toks.empty()) throw std::invalid_argument("order needs a kind");
      OrderKind kind;
      if (toks[0] == "grevlex")
        kind = OrderKind::GradedRevLex;
      else if (toks[0] == "glex")
        kind = OrderKind::GradedLex;
      else
        throw std::invalid_argument("unknown order kind '" + toks[0] + "'");
      std::vector<VarId> prio;
      if (toks.size() == 1) {
        for (VarId v = 0; v < out.table.size(); ++v) prio.push_back(v);
      } else {
        for (std::size_t k = 1; k < toks.size(); ++k) prio.push_back(out.table.id(parse_variable(toks[k])));
      }
      out.order = TermOrder(kind, std::move(prio));
    } catch (const std::exception& e) {
      throw ParseError(order_line->first, e.what());
    }
  }
  return out;
}

std::string write_ideal(const VariableTable& table, const std::vector<Polynomial>& polys,
                        const std::optional<TermOrder>& order, const Field& field) {
  std::ostringstream os;
  os << "vars:";
  for (VarId v = 0; v < table.size(); ++v) os << ' ' << table.name(v);
  os << '\n';
  if (order) os << "order: " << order->str(table) << '\n';
  if (!field.is_rational()) os << "field: " << field.name() << '\n';
  for (const auto& p : polys) os << (order ? p.str(table, *order) : p.str(table)) << '\n';
  return os.str();
}

std::string write_monomial_ideal(const VariableTable& table, const MonomialIdeal& M) {
  std::vector<Polynomial> polys;
  for (const auto& m : M.generators()) polys.push_back(Polynomial::from_monomial(m));
  return write_ideal(table, polys);
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream is(text);
  std::string raw, rest;
  int lineno = 0;
  std::optional<std::vector<std::string>> vertices;
  std::vector<std::pair<int, std::vector<std::string>>> facets;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (header(line, "vertices", rest)) {
      if (vertices) throw ParseError(lineno, "duplicate vertices header");
      vertices = split_ws(rest);
      continue;
    }
    if (!vertices) throw ParseError(lineno, "facet before 'vertices:' header");
    if (line == "{}") {
      facets.push_back({lineno, {}});
      continue;
    }
    facets.push_back({lineno, split_ws(line)});
  }
  if (!vertices) throw ParseError(0, "missing 'vertices:' header");
  std::map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < vertices->size(); ++k)
    if (!idx.emplace((*vertices)[k], k).second) throw ParseError(0, "duplicate vertex '" + (*vertices)[k] + "'");
  if (vertices->size() > kMaxVertices) throw ParseError(0, "complexes are limited to 64 vertices");
  std::vector<Face> fs;
  for (const auto& [ln, f] : facets) {
    Face m = 0;
    for (const auto& v : f) {
      auto it = idx.find(v);
      if (it == idx.end()) throw ParseError(ln, "facet uses undeclared vertex '" + v + "'");
      m |= Face{1} << it->second;
    }
    fs.push_back(m);
  }
  try {
    return SimplicialComplex(*vertices, fs);
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_complex(const SimplicialComplex& D) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : D.vertices()) os << ' ' << v;
  os << '\n';
  for (Face f : D.facets()) {
    auto ls = D.labels_of(f);
    if (ls.empty()) {
      os << "{}\n";
      continue;
    }
    for (std::size_t k = 0; k < ls.size(); ++k) os << (k ? " " : "") << ls[k];
    os << '\n';
  }
  return os.str();
}

catalog::Poset parse_poset(const std::string& text) {
  std::istringstream is(text);
  std::string raw, rest;
  int lineno = 0;
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<int> cover_line;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (header(line, "elements", rest)) {
      if (elements) throw ParseError(lineno, "duplicate elements header");
      elements = split_ws(rest);
    } else if (header(line, "covers", rest)) {
      for (const auto& tok : split_ws(rest)) {
        auto k = tok.find('<');
        if (k == std::string::npos || k == 0 || k + 1 == tok.size())
          throw ParseError(lineno, "cover relation must look like a<b, got '" + tok + "'");
        covers.push_back({tok.substr(0, k), tok.substr(k + 1)});
        cover_line.push_back(lineno);
      }
    } else {
      throw ParseError(lineno, "expected 'elements:' or 'covers:'");
    }
  }
  if (!elements) throw ParseError(0, "missing 'elements:' header");
  std::set<std::string> known(elements->begin(), elements->end());
  for (std::size_t k = 0; k < covers.size(); ++k)
    for (const auto& e : {covers[k].first, covers[k].second})
      if (!known.count(e)) throw ParseError(cover_line[k], "cover uses undeclared element '" + e + "'");
  try {
    return catalog::Poset::from_covers(*elements, covers);
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gorlab::io
