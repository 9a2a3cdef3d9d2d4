#include "lcylab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace lcylab::poly {

const char* to_string(PolyErrorKind kind) {
  switch (kind) {
    case PolyErrorKind::SyntaxError: return "SyntaxError";
    case PolyErrorKind::UnknownVariable: return "UnknownVariable";
    case PolyErrorKind::NegativeExponent: return "NegativeExponent";
    case PolyErrorKind::VariableMismatch: return "VariableMismatch";
    case PolyErrorKind::IncompleteParametrization: return "IncompleteParametrization";
    case PolyErrorKind::ArityMismatch: return "ArityMismatch";
    case PolyErrorKind::NotHomogeneous: return "NotHomogeneous";
    case PolyErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case PolyErrorKind::InvalidWeight: return "InvalidWeight";
    case PolyErrorKind::DuplicateVariable: return "DuplicateVariable";
  }
  return "PolyError";
}

unsigned long total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0UL);
}

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second) throw PolyError(PolyErrorKind::DuplicateVariable, v);
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::string_view name) {
  MultiPoly p(std::move(variables));
  Exponent e(p.arity(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

std::size_t MultiPoly::index_of(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw PolyError(PolyErrorKind::UnknownVariable, std::string(name));
  return static_cast<std::size_t>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw PolyError(PolyErrorKind::ArityMismatch, "exponent vector of wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_context(const MultiPoly& other) const {
  if (vars_ != other.vars_)
    throw PolyError(PolyErrorKind::VariableMismatch, "operands use different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_context(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_context(b);
  MultiPoly out(a.vars_);
  Exponent e(a.arity());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly subtract(const MultiPoly& p, const MultiPoly& q) { return p - q; }
MultiPoly multiply(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly power(const MultiPoly& p, unsigned long exponent) {
  MultiPoly result = MultiPoly::constant(p.variables(), 1);
  MultiPoly base = p;
  while (exponent) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError(PolyErrorKind::SyntaxError, what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc = product();
    while (true) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  MultiPoly product() {
    MultiPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  MultiPoly power_expr() {
    MultiPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) throw PolyError(PolyErrorKind::NegativeExponent, "negative exponent", at);
    skip_space();
    std::string digits = take_digits();
    if (digits.empty()) fail("expected a nonnegative integer exponent");
    if (digits.size() > 6) fail("exponent too large");
    return power(base, std::stoul(digits));
  }

  std::string take_digits() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(begin, pos_ - begin));
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  MultiPoly literal() {
    Integer num(take_digits(), 10);
    Integer den(1);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      std::string digits = take_digits();
      if (digits.empty()) fail("expected denominator");
      den = Integer(digits, 10);
      if (den == 0) fail("zero denominator");
    }
    reject_juxtaposition();
    return MultiPoly::constant(vars_, make_rational(num, den));
  }

  MultiPoly identifier() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(begin, pos_ - begin));
    if (std::find(vars_.begin(), vars_.end(), name) == vars_.end())
      throw PolyError(PolyErrorKind::UnknownVariable, name, begin);
    reject_juxtaposition();
    return MultiPoly::variable(vars_, name);
  }

  // "2x", "x y" and "x(y)" are errors: products need an explicit '*'.
  void reject_juxtaposition() {
    skip_space();
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
      fail("implicit multiplication is not allowed");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const std::vector<std::string>& vars, const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(p.variables(), e);
    if (mono.empty())
      out += lcylab::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += lcylab::to_string(mag) + "*" + mono;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Calculus and evaluation

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
  const std::size_t k = p.index_of(var);
  MultiPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponent d(e);
    d[k] -= 1;
    out.add_term(d, c * Rational(static_cast<unsigned long>(e[k])));
  }
  return out;
}

Parametrization make_parametrization(const std::vector<std::string>& parameters,
                                     const std::map<std::string, std::string>& images) {
  Parametrization param{parameters, {}};
  for (const auto& [var, text] : images) param.images.emplace(var, parse_poly(text, parameters));
  return param;
}

MultiPoly substitute(const MultiPoly& p, const Parametrization& param) {
  std::vector<const MultiPoly*> image(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    auto it = param.images.find(p.variables()[i]);
    if (it == param.images.end())
      throw PolyError(PolyErrorKind::IncompleteParametrization,
                      "no image for " + p.variables()[i]);
    if (it->second.variables() != param.parameters)
      throw PolyError(PolyErrorKind::VariableMismatch,
                      "image of " + p.variables()[i] + " is not over the parameters");
    image[i] = &it->second;
  }
  // powers[i][d] = image_i^d, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(p.arity());
  auto power_of = [&](std::size_t i, unsigned long d) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(param.parameters, 1));
    while (cache.size() <= d) cache.push_back(cache.back() * *image[i]);
    return cache[d];
  };
  MultiPoly out(param.parameters);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(param.parameters, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

namespace {

void require_arity(const MultiPoly& p, std::size_t n) {
  if (n != p.arity())
    throw PolyError(PolyErrorKind::ArityMismatch,
                    "expected " + std::to_string(p.arity()) + " coordinates, got " +
                        std::to_string(n));
}

void require_nonzero(const MultiPoly& p) {
  if (p.is_zero()) throw PolyError(PolyErrorKind::ZeroPolynomial, "polynomial is zero");
}

void require_weights(const MultiPoly& p, const std::vector<long>& weights) {
  require_arity(p, weights.size());
  for (long w : weights)
    if (w <= 0) throw PolyError(PolyErrorKind::InvalidWeight, "weights must be positive");
}

Integer weight_of(const Exponent& e, const std::vector<long>& weights) {
  Integer w(0);
  for (std::size_t i = 0; i < e.size(); ++i)
    w += Integer(weights[i]) * Integer(static_cast<unsigned long>(e[i]));
  return w;
}

}  // namespace

Rational evaluate_at(const MultiPoly& p, const std::vector<Rational>& point) {
  require_arity(p, point.size());
  Rational value(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned long d = 0; d < e[i]; ++d) term *= point[i];
    value += term;
  }
  return value;
}

bool is_homogeneous(const MultiPoly& p) {
  if (p.is_zero()) return true;
  const auto d = total_degree(p.terms().begin()->first);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

MultiPoly dehomogenize(const MultiPoly& p, std::string_view var) {
  const std::size_t k = p.index_of(var);
  if (!is_homogeneous(p))
    throw PolyError(PolyErrorKind::NotHomogeneous, to_string(p));
  std::vector<std::string> vars(p.variables());
  vars.erase(vars.begin() + static_cast<long>(k));
  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    Exponent d(e);
    d.erase(d.begin() + static_cast<long>(k));
    out.add_term(d, c);
  }
  return out;
}

MultiPoly translate(const MultiPoly& p, const std::vector<Rational>& point) {
  require_arity(p, point.size());
  Parametrization shift{p.variables(), {}};
  for (std::size_t i = 0; i < p.arity(); ++i)
    shift.images.emplace(p.variables()[i],
                         MultiPoly::variable(p.variables(), p.variables()[i]) +
                             MultiPoly::constant(p.variables(), point[i]));
  return substitute(p, shift);
}

unsigned long multiplicity_at_point(const MultiPoly& p, const std::vector<Rational>& point) {
  require_nonzero(p);
  require_arity(p, point.size());
  if (evaluate_at(p, point) != 0) return 0;
  const MultiPoly moved = translate(p, point);
  unsigned long lowest = total_degree(moved.terms().begin()->first);
  for (const auto& t : moved.terms()) lowest = std::min(lowest, total_degree(t.first));
  return lowest;
}

Integer weighted_multiplicity(const MultiPoly& p, const std::vector<long>& weights) {
  require_nonzero(p);
  require_weights(p, weights);
  Integer lowest = weight_of(p.terms().begin()->first, weights);
  for (const auto& t : p.terms()) {
    Integer w = weight_of(t.first, weights);
    if (w < lowest) lowest = w;
  }
  return lowest;
}

std::optional<Integer> is_weighted_homogeneous(const MultiPoly& p,
                                               const std::vector<long>& weights) {
  require_nonzero(p);
  require_weights(p, weights);
  const Integer w0 = weight_of(p.terms().begin()->first, weights);
  for (const auto& t : p.terms())
    if (weight_of(t.first, weights) != w0) return std::nullopt;
  return w0;
}

MultiPoly weighted_initial_form(const MultiPoly& p, const std::vector<long>& weights) {
  const Integer lowest = weighted_multiplicity(p, weights);
  MultiPoly out(p.variables());
  for (const auto& [e, c] : p.terms())
    if (weight_of(e, weights) == lowest) out.add_term(e, c);
  return out;
}

std::vector<Rational> gradient_at(const MultiPoly& p, const std::vector<Rational>& point) {
  require_arity(p, point.size());
  std::vector<Rational> g;
  for (const auto& v : p.variables()) g.push_back(evaluate_at(partial_derivative(p, v), point));
  return g;
}

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t hessian_rank_at(const MultiPoly& p, const std::vector<Rational>& point) {
  require_arity(p, point.size());
  const auto& vars = p.variables();
  std::vector<std::vector<Rational>> h(vars.size(), std::vector<Rational>(vars.size()));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const MultiPoly di = partial_derivative(p, vars[i]);
    for (std::size_t j = 0; j < vars.size(); ++j)
      h[i][j] = evaluate_at(partial_derivative(di, vars[j]), point);
  }
  return matrix_rank(std::move(h));
}

bool gradient_vanishes_on_curve(const MultiPoly& p, const Parametrization& param) {
  for (const auto& v : p.variables())
    if (!substitute(partial_derivative(p, v), param).is_zero()) return false;
  return true;
}

AffineChart affine_chart_at(const MultiPoly& p, const std::vector<Rational>& projective_point) {
  require_arity(p, projective_point.size());
  auto nonzero = std::find_if(projective_point.begin(), projective_point.end(),
                              [](const Rational& q) { return q != 0; });
  if (nonzero == projective_point.end())
    throw std::invalid_argument("projective point has all coordinates zero");
  const auto k = static_cast<std::size_t>(nonzero - projective_point.begin());
  AffineChart chart{p.variables()[k], dehomogenize(p, p.variables()[k]), {}};
  for (std::size_t i = 0; i < projective_point.size(); ++i)
    if (i != k) chart.point.push_back(projective_point[i] / projective_point[k]);
  return chart;
}

}  // namespace lcylab::poly
