#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "kqsym/compositions.hpp"
#include "kqsym/rational.hpp"

namespace kqsym {

enum class Basis { Monomial, Fundamental };

const char* basis_letter(Basis b);  // "M" or "L"

/// Canonical term order within a fixed degree: descending descent mask, so the
/// finest composition (1,...,1) comes first and (n) comes last.
struct CanonicalOrder {
    bool operator()(const Composition& a, const Composition& b) const;
};

/// Homogeneous quasisymmetric function of a fixed degree, stored as a sparse
/// map from compositions to exact rationals in one basis. Zero coefficients are
/// never stored.
class QSym {
public:
    using Terms = std::map<Composition, Rational, CanonicalOrder>;

    QSym(int degree, Basis basis) : degree_(degree), basis_(basis) {}

    static QSym zero(int degree, Basis basis) { return QSym(degree, basis); }
    /// The degree-0 unit M_().
    static QSym one();
    /// A single basis element.
    static QSym basis_element(const Composition& alpha, Basis basis);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Composition& alpha) const;
    /// Adds c to the coefficient of alpha. Throws std::invalid_argument on a weight mismatch.
    void add(const Composition& alpha, const Rational& c);

    QSym& operator+=(const QSym& other);
    QSym& operator-=(const QSym& other);
    QSym& operator*=(const Rational& scalar);

    friend bool operator==(const QSym&, const QSym&) = default;

private:
    int degree_;
    Basis basis_;
    Terms terms_;
};

QSym operator+(QSym a, const QSym& b);
QSym operator-(QSym a, const QSym& b);
QSym operator*(const Rational& s, QSym a);

/// L_alpha = sum_{beta >= alpha} M_beta.
QSym l_to_m(const QSym& f);
/// Moebius inversion of l_to_m.
QSym m_to_l(const QSym& f);
QSym to_basis(const QSym& f, Basis basis);

/// Product in the monomial basis via quasi-shuffles. Fundamental inputs are
/// converted first; the result is always Monomial.
QSym multiply(const QSym& f, const QSym& g);

/// A pair of rearrangements of the same parts with different M-coefficients.
std::optional<std::pair<Composition, Composition>> symmetry_witness(const QSym& f);
bool is_symmetric(const QSym& f);

/// Dense polynomial in one variable with exact rational coefficients; index is
/// the power. The highest stored coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial x();
    /// binom(x, i) = x(x-1)...(x-i+1)/i!.
    static RationalPolynomial binomial(int i);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int power) const;
    Rational leading_coefficient() const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& s);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Horner evaluation; negative arguments allowed.
Rational evaluate(const RationalPolynomial& p, const Rational& x);
inline Rational evaluate(const RationalPolynomial& p, long long x) { return evaluate(p, Rational(x)); }

/// The unique polynomial of degree < points.size() through (x_i, y_i).
RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Principal specialization x_1 = ... = x_lambda = 1, rest 0:
/// sum_alpha [M_alpha]F * binom(lambda, l(alpha)).
RationalPolynomial specialize(const QSym& f);

/// "6*L[1,1,1,1] + 2*L[2,1,1]"; zero prints as "0".
std::string to_string(const QSym& f);
/// "a_0 + a_1*x + a_2*x^2" over nonzero terms; zero prints as "0".
std::string to_string(const RationalPolynomial& p);

/// {"degree", "basis", "terms": [[composition], numerator, denominator]}.
/// Integers that do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const QSym& f);
QSym qsym_from_json(const nlohmann::json& j);
/// {"terms": [[power, numerator, denominator], ...]}
nlohmann::json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace kqsym
