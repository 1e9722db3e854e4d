#include "destab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "destab/errors.hpp"

namespace destab {

namespace {

// Graded lexicographic descending: the canonical term order for storage and
// printing (independent of any Groebner order in use).
bool term_before(const Term& a, const Term& b) {
  int da = a.mono.degree(), db = b.mono.degree();
  if (da != db) return da > db;
  return b.mono < a.mono;  // lex descending within a degree
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::map<Monomial, Rational> merged;
  for (Term& t : terms) {
    if (t.mono.nvars() != nvars) throw InputError("term does not match the ring's variable count");
    auto [it, fresh] = merged.emplace(std::move(t.mono), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  Polynomial out(nvars);
  out.terms_.reserve(merged.size());
  for (auto& [mono, coeff] : merged) {
    if (coeff != 0) out.terms_.push_back({mono, coeff});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_before);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return from_terms(nvars, {{Monomial::one(nvars), c}});
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw InputError("variable index out of range");
  Monomial m = Monomial::one(nvars);
  m.exps[index] = 1;
  return from_terms(nvars, {{m, Rational(1)}});
}

Polynomial Polynomial::monomial(Monomial m, const Rational& c) {
  std::size_t nvars = m.nvars();
  return from_terms(nvars, {{std::move(m), c}});
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw InputError("polynomial sum across different rings");
  std::vector<Term> all = terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return from_terms(nvars_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (nvars_ != rhs.nvars_) throw InputError("polynomial product across different rings");
  std::vector<Term> all;
  all.reserve(terms_.size() * rhs.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : rhs.terms_) all.push_back({a.mono * b.mono, Rational(a.coeff * b.coeff)});
  return from_terms(nvars_, std::move(all));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial out(nvars_);
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(nvars_);
  if (m.nvars() != nvars_) throw InputError("monomial does not match the ring's variable count");
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono * m, Rational(t.coeff * c)});
  // Multiplying by a fixed monomial preserves the storage order.
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative polynomial power");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

namespace {

// Recursive-descent parser for exact polynomial expressions.
class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw InputError("unexpected trailing input at '" + text_.substr(pos_) + "'");
    return p;
  }

 private:
  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expression() {
    Polynomial acc(vars_.size());
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Polynomial first = product();
    acc = negate ? -first : first;
    while (true) {
      if (eat('+'))
        acc = acc + product();
      else if (eat('-'))
        acc = acc - product();
      else
        break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        // Juxtaposition, e.g. "2x" or "x(y+z)".
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (eat('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw InputError("exponent must be a nonnegative integer");
      int e = std::stoi(text_.substr(start, pos_ - start));
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw InputError("unexpected end of polynomial expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!eat(')')) throw InputError("missing closing parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw InputError(std::string("unexpected character '") + c + "' in polynomial expression");
  }

  Polynomial number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      throw InputError("floating-point literals are not accepted; use exact fractions");
    }
    std::string lit = text_.substr(start, pos_ - start);
    // Fraction literal p/q: only when the next character begins a digit run,
    // so "1/2" parses exactly while "x/y" stays a syntax error.
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_++;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) {
        pos_ = slash;
        throw InputError("expected denominator digits after '/'");
      }
      lit += "/" + text_.substr(dstart, pos_ - dstart);
    } else {
      pos_ = save;
    }
    return Polynomial::constant(vars_.size(), rat_parse(lit));
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
    }
    throw InputError("unknown variable '" + name + "' in polynomial expression");
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw InputError("polynomial ring needs at least one variable");
  for (const std::string& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("invalid variable name '" + v + "'");
  }
  return Parser(text, vars).parse();
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.nvars() != vars.size()) throw InputError("monomial does not match the variable names");
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string polynomial_str(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string ms = monomial_str(t.mono, vars);
    if (c != 1 || ms == "1") {
      out += rat_str(c);
      if (ms != "1") out += "*";
    }
    if (ms != "1") out += ms;
  }
  return out;
}

}  // namespace destab
