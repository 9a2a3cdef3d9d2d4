#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Every polynomial carries its ordered variable list; binary operations
// require identical lists. Terms are kept in graded lexicographic order
// (highest first) with respect to the declared variable order, so printing
// is deterministic.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcylab/exact.hpp"

namespace lcylab::poly {

enum class PolyErrorKind {
  SyntaxError,
  UnknownVariable,
  NegativeExponent,
  VariableMismatch,
  IncompleteParametrization,
  ArityMismatch,
  NotHomogeneous,
  ZeroPolynomial,
  InvalidWeight,
  DuplicateVariable,
};

const char* to_string(PolyErrorKind kind);

class PolyError : public std::runtime_error {
 public:
  PolyError(PolyErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  PolyError(PolyErrorKind kind, const std::string& what, std::size_t position)
      : std::runtime_error(std::string(to_string(kind)) + " at position " +
                           std::to_string(position) + ": " + what),
        kind_(kind),
        position_(position) {}

  PolyErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  PolyErrorKind kind_;
  std::optional<std::size_t> position_;
};

using Exponent = std::vector<unsigned long>;

unsigned long total_degree(const Exponent& e);

/// Graded lex, larger first.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexDescending>;

  /// Zero polynomial. Throws PolyError(DuplicateVariable).
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  /// Throws PolyError(UnknownVariable).
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Index of a variable name; throws PolyError(UnknownVariable).
  std::size_t index_of(std::string_view name) const;

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_context(const MultiPoly& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly subtract(const MultiPoly& p, const MultiPoly& q);
MultiPoly multiply(const MultiPoly& p, const MultiPoly& q);
MultiPoly power(const MultiPoly& p, unsigned long exponent);

/// Grammar: sums and differences of products of powers; atoms are integer or
/// "a/b" literals, declared variable names, and parenthesised expressions.
/// Exponents are nonnegative integer literals. Juxtaposition is rejected.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Inverse of parse_poly; "0" for the zero polynomial.
std::string to_string(const MultiPoly& p);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);

/// Simultaneous substitution of each ambient variable by a polynomial in the
/// parameter variables.
struct Parametrization {
  std::vector<std::string> parameters;
  std::map<std::string, MultiPoly> images;
};

/// Builds a parametrization from "var -> expression" texts over the parameters.
Parametrization make_parametrization(const std::vector<std::string>& parameters,
                                     const std::map<std::string, std::string>& images);

/// Throws PolyError(IncompleteParametrization | VariableMismatch).
MultiPoly substitute(const MultiPoly& p, const Parametrization& param);

/// Throws PolyError(ArityMismatch).
Rational evaluate_at(const MultiPoly& p, const std::vector<Rational>& point);

bool is_homogeneous(const MultiPoly& p);

/// Sets var = 1 and drops it. Throws PolyError(NotHomogeneous | UnknownVariable).
MultiPoly dehomogenize(const MultiPoly& p, std::string_view var);

/// p(x + point) in the same variables.
MultiPoly translate(const MultiPoly& p, const std::vector<Rational>& point);

/// Order of vanishing at the point; 0 off the zero set.
/// Throws PolyError(ZeroPolynomial | ArityMismatch).
unsigned long multiplicity_at_point(const MultiPoly& p, const std::vector<Rational>& point);

/// min over terms of <weights, exponent>. Throws PolyError(ZeroPolynomial |
/// ArityMismatch | InvalidWeight).
Integer weighted_multiplicity(const MultiPoly& p, const std::vector<long>& weights);

/// The common weight of all terms, if there is one.
std::optional<Integer> is_weighted_homogeneous(const MultiPoly& p,
                                               const std::vector<long>& weights);

/// Terms of least weighted degree.
MultiPoly weighted_initial_form(const MultiPoly& p, const std::vector<long>& weights);

std::vector<Rational> gradient_at(const MultiPoly& p, const std::vector<Rational>& point);

/// Rank of a rational matrix by exact Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

std::size_t hessian_rank_at(const MultiPoly& p, const std::vector<Rational>& point);

/// True iff every partial derivative of p vanishes identically on the curve.
bool gradient_vanishes_on_curve(const MultiPoly& p, const Parametrization& param);

/// Affine chart containing a projective point: the chart variable is the
/// first nonzero coordinate, which is scaled to one and dropped.
struct AffineChart {
  std::string chart_variable;
  MultiPoly equation;
  std::vector<Rational> point;
};

/// Throws PolyError(ArityMismatch | NotHomogeneous), or std::invalid_argument
/// for the all-zero tuple.
AffineChart affine_chart_at(const MultiPoly& p, const std::vector<Rational>& projective_point);

}  // namespace lcylab::poly
