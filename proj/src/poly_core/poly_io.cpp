#include "jetdisc/poly_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "jetdisc/errors.hpp"

namespace jetdisc {

namespace {

struct RawTerm {
  Scalar coef = 1;
  std::vector<std::pair<std::string, int>> powers;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected character '") + op + "'");
      terms.push_back(term(op == '-' ? -1 : 1));
    }
    return terms;
  }

 private:
  RawTerm term(int sign) {
    RawTerm t;
    t.coef = sign;
    factor(t);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    skip_ws();
    if (at_end()) fail("expected a factor");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = number();
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        take();
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        den = number();
        if (den == 0) fail("zero denominator");
      }
      Scalar q(num, den);
      q.canonicalize();
      t.coef *= q;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += take();
      int exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        take();
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        Integer e = number();
        if (!e.fits_sint_p() || e > 10000) fail("exponent too large");
        exp = static_cast<int>(e.get_si());
      }
      t.powers.emplace_back(std::move(name), exp);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  Integer number() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    return Integer(digits, 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Polynomial build(const std::vector<RawTerm>& raw, const VarSet& vars, bool strict) {
  std::vector<Term> terms;
  for (const auto& r : raw) {
    Monomial m(vars.size());
    for (const auto& [name, e] : r.powers) {
      auto k = vars.find(name);
      if (!k) {
        if (strict) throw ParseError("variable '" + name + "' is not in the VarSet");
        throw UnknownVariable(name);
      }
      m.set(*k, m[*k] + e);
    }
    terms.push_back({std::move(m), r.coef});
  }
  return Polynomial(vars, std::move(terms));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  auto raw = Parser(text).parse();
  std::vector<std::string> names;
  for (const auto& r : raw)
    for (const auto& pw : r.powers)
      if (std::find(names.begin(), names.end(), pw.first) == names.end()) names.push_back(pw.first);
  return build(raw, VarSet(std::move(names)), false);
}

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return build(Parser(text).parse(), vars, true);
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool negative = t.coef < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Scalar mag = abs(t.coef);
    bool need_star = false;
    if (mag != 1 || t.monomial.is_one()) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t k = 0; k < f.vars().size(); ++k) {
      int e = t.monomial[k];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << f.vars().name(k);
      if (e > 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

nlohmann::json to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"coef", t.coef.get_str()}, {"exps", t.monomial.exponents()}});
  return {{"vars", f.vars().names()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  try {
    VarSet vars(j.at("vars").get<std::vector<std::string>>());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exps").get<std::vector<int>>();
      if (exps.size() != vars.size()) throw ParseError("exponent vector length does not match vars");
      for (int e : exps)
        if (e < 0) throw ParseError("negative exponent");
      Scalar c = parse_scalar(t.at("coef").get<std::string>());
      if (c == 0) throw ParseError("zero coefficient in canonical JSON");
      terms.push_back({Monomial(std::move(exps)), std::move(c)});
    }
    return Polynomial(vars, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace jetdisc
