#include "trif/polycore/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "trif/error.hpp"

namespace trif {
namespace {

// Parsed expression; variables are resolved once the variable list is known.
struct Node {
  enum Kind { number, variable, sum, product, power, negate } kind = number;

  explicit Node(Kind k) : kind(k) {}
  Node(Kind k, Node child, unsigned e = 0) : kind(k), exponent(e) { children.push_back(std::move(child)); }
  static Node constant(BigInt v) {
    Node n(number);
    n.value = std::move(v);
    return n;
  }

  BigInt value;
  std::string name;
  unsigned exponent = 0;
  std::vector<Node> children;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return n;
  }

 private:
  Node expr() {
    Node sum(Node::sum);
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      Node t = term();
      sum.children.push_back(negative ? Node(Node::negate, std::move(t)) : std::move(t));
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = take() == '-';
    }
    return sum;
  }

  Node term() {
    Node prod(Node::product);
    prod.children.push_back(power());
    while (true) {
      skip_ws();
      if (peek() == '*') {
        take();
      } else if (prod.children.back().kind != Node::number || !(is_var_start(peek()) || peek() == '(')) {
        break;  // a coefficient may be followed directly by a factor, as in 3x
      }
      prod.children.push_back(power());
    }
    return prod;
  }

  Node power() {
    Node base = primary();
    skip_ws();
    if (peek() != '^') return base;
    take();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const BigInt v = integer();
    if (!v.fits_uint_p() || v > 65535) fail("exponent too large");
    return Node(Node::power, std::move(base), static_cast<unsigned>(v.get_ui()));
  }

  Node primary() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Node::constant(integer());
    if (is_var_start(c)) {
      Node v(Node::variable);
      while (!at_end() && (std::islower(static_cast<unsigned char>(peek())) ||
                           std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
        v.name.push_back(take());
      }
      return v;
    }
    if (c == '(') {
      take();
      Node inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      take();
      return inner;
    }
    fail("expected a term");
  }

  BigInt integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
    return BigInt(digits, 10);
  }

  static bool is_var_start(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_names(const Node& n, std::vector<std::string>& seen) {
  if (n.kind == Node::variable && std::find(seen.begin(), seen.end(), n.name) == seen.end()) seen.push_back(n.name);
  for (const auto& c : n.children) collect_names(c, seen);
}

MultiPoly build(const Node& n, const Variables& vars) {
  switch (n.kind) {
    case Node::number:
      return MultiPoly::constant(vars, n.value);
    case Node::variable:
      vars.require(n.name);
      return MultiPoly::variable(vars, n.name);
    case Node::negate:
      return -build(n.children[0], vars);
    case Node::power:
      return build(n.children[0], vars).pow(n.exponent);
    case Node::sum: {
      MultiPoly acc(vars);
      for (const auto& c : n.children) acc = acc + build(c, vars);
      return acc;
    }
    case Node::product: {
      MultiPoly acc = MultiPoly::constant(vars, 1);
      for (const auto& c : n.children) acc = acc * build(c, vars);
      return acc;
    }
  }
  return MultiPoly(vars);
}

}  // namespace

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const BigInt mag = abs(t.coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) out << '*';
      out << p.vars()[i];
      if (t.mono[i] != 1) out << '^' << t.mono[i];
      wrote = true;
    }
  }
  return out.str();
}

MultiPoly parse_poly(std::string_view text, const Variables& vars) { return build(Parser(text).parse(), vars); }

MultiPoly parse_poly(std::string_view text) {
  const Node root = Parser(text).parse();
  static const std::vector<std::string> preferred = {"x", "y", "z", "t", "a", "b"};
  std::vector<std::string> seen;
  collect_names(root, seen);
  std::vector<std::string> names;
  for (const auto& v : preferred) {
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) names.push_back(v);
  }
  std::vector<std::string> rest;
  for (const auto& v : seen) {
    if (std::find(preferred.begin(), preferred.end(), v) == preferred.end()) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end());
  names.insert(names.end(), rest.begin(), rest.end());
  return build(root, Variables(std::move(names)));
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(t.mono.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i];
    terms.push_back({{"e", e}, {"c", t.coeff.get_str()}});
  }
  return {{"vars", p.vars().names()}, {"terms", terms}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  try {
    Variables vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("e").get<std::vector<unsigned>>();
      if (e.size() != vars.size()) throw ParseError("exponent vector length differs from variable count");
      const auto c = t.at("c").get<std::string>();
      BigInt coeff;
      if (coeff.set_str(c, 10) != 0) throw ParseError("malformed coefficient '" + c + "'");
      terms.push_back({Monomial(std::span<const unsigned>(e)), coeff});
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

}  // namespace trif
