#include "kqsym/qsym.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace kqsym {

const char* basis_letter(Basis b) { return b == Basis::Monomial ? "M" : "L"; }

bool CanonicalOrder::operator()(const Composition& a, const Composition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.descent_mask() > b.descent_mask();
}

QSym QSym::one() {
    QSym f(0, Basis::Monomial);
    f.add(Composition{}, 1);
    return f;
}

QSym QSym::basis_element(const Composition& alpha, Basis basis) {
    QSym f(alpha.weight(), basis);
    f.add(alpha, 1);
    return f;
}

Rational QSym::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSym::add(const Composition& alpha, const Rational& c) {
    if (alpha.weight() != degree_)
        throw std::invalid_argument("composition " + to_string(alpha) + " does not have weight " +
                                    std::to_string(degree_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSym& QSym::operator+=(const QSym& other) {
    if (other.basis_ != basis_ || other.degree_ != degree_)
        throw std::invalid_argument("adding quasisymmetric functions of different basis or degree");
    for (const auto& [alpha, c] : other.terms_) add(alpha, c);
    return *this;
}

QSym& QSym::operator-=(const QSym& other) {
    if (other.basis_ != basis_ || other.degree_ != degree_)
        throw std::invalid_argument("subtracting quasisymmetric functions of different basis or degree");
    for (const auto& [alpha, c] : other.terms_) add(alpha, -c);
    return *this;
}

QSym& QSym::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= scalar;
    return *this;
}

QSym operator+(QSym a, const QSym& b) { return a += b; }
QSym operator-(QSym a, const QSym& b) { return a -= b; }
QSym operator*(const Rational& s, QSym a) { return a *= s; }

namespace {

// Shared walk over all supersets of each support mask inside [n-1].
template <typename Weight>
QSym superset_transform(const QSym& f, Basis target, Weight weight) {
    QSym out(f.degree(), target);
    const int n = f.degree();
    const std::uint64_t full = n > 0 ? (std::uint64_t{1} << (n - 1)) - 1 : 0;
    for (const auto& [alpha, c] : f.terms()) {
        const std::uint64_t a = alpha.descent_mask();
        for (std::uint64_t sup = a;; sup = (sup + 1) | a) {
            out.add(composition_from_mask(sup, n), weight(std::popcount(sup) - std::popcount(a)) * c);
            if (sup == full) break;
        }
    }
    return out;
}

}  // namespace

QSym l_to_m(const QSym& f) {
    if (f.basis() != Basis::Fundamental) throw std::invalid_argument("l_to_m expects the fundamental basis");
    return superset_transform(f, Basis::Monomial, [](int) { return Rational(1); });
}

QSym m_to_l(const QSym& f) {
    if (f.basis() != Basis::Monomial) throw std::invalid_argument("m_to_l expects the monomial basis");
    return superset_transform(f, Basis::Fundamental, [](int d) { return Rational(d % 2 ? -1 : 1); });
}

QSym to_basis(const QSym& f, Basis basis) {
    if (f.basis() == basis) return f;
    return basis == Basis::Monomial ? l_to_m(f) : m_to_l(f);
}

QSym multiply(const QSym& f, const QSym& g) {
    const QSym a = to_basis(f, Basis::Monomial);
    const QSym b = to_basis(g, Basis::Monomial);
    QSym out(a.degree() + b.degree(), Basis::Monomial);
    for (const auto& [alpha, c] : a.terms()) {
        for (const auto& [beta, d] : b.terms()) {
            const Rational cd = c * d;
            for (const auto& gamma : quasi_shuffles(alpha, beta)) out.add(gamma, cd);
        }
    }
    return out;
}

std::optional<std::pair<Composition, Composition>> symmetry_witness(const QSym& f) {
    const QSym m = to_basis(f, Basis::Monomial);
    for (const auto& [alpha, c] : m.terms()) {
        std::vector<int> parts = alpha.parts();
        std::sort(parts.begin(), parts.end());
        do {
            Composition beta(parts);
            if (m.coefficient(beta) != c) return std::pair{alpha, beta};
        } while (std::next_permutation(parts.begin(), parts.end()));
    }
    return std::nullopt;
}

bool is_symmetric(const QSym& f) { return !symmetry_witness(f).has_value(); }

// ---------------------------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::x() { return RationalPolynomial({Rational(0), Rational(1)}); }

RationalPolynomial RationalPolynomial::binomial(int i) {
    if (i < 0) throw std::invalid_argument("binomial: negative index");
    RationalPolynomial p = constant(1);
    for (int j = 0; j < i; ++j) p = p * RationalPolynomial({Rational(-j), Rational(1)});
    Integer fact = 1;
    for (int j = 2; j <= i; ++j) fact *= j;
    return Rational(1, fact) * p;
}

Rational RationalPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

Rational evaluate(const RationalPolynomial& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            if (points[j].first == points[i].first) throw std::invalid_argument("interpolate: repeated abscissa");
            basis = basis * RationalPolynomial({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        result += (points[i].second / denom) * basis;
    }
    return result;
}

RationalPolynomial specialize(const QSym& f) {
    const QSym m = to_basis(f, Basis::Monomial);
    std::map<int, Rational> by_length;
    for (const auto& [alpha, c] : m.terms()) by_length[alpha.length()] += c;
    RationalPolynomial p;
    for (const auto& [len, c] : by_length) p += c * RationalPolynomial::binomial(len);
    return p;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Term>
void append_signed(std::string& out, bool first, const Rational& c, const Term& term) {
    if (first) {
        out += to_string(c);
    } else {
        out += c < 0 ? " - " : " + ";
        out += to_string(c < 0 ? Rational(-c) : c);
    }
    out += term;
}

nlohmann::json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return numerator(parse_rational(j.get<std::string>()));
    throw std::invalid_argument("expected an integer or decimal string");
}

Rational rational_from_json(const nlohmann::json& num, const nlohmann::json& den) {
    Integer d = integer_from_json(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(integer_from_json(num), d);
}

}  // namespace

std::string to_string(const QSym& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : f.terms()) {
        append_signed(out, first, c, std::string("*") + basis_letter(f.basis()) + to_string(alpha));
        first = false;
    }
    return out;
}

std::string to_string(const RationalPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coefficient(i);
        if (c == 0) continue;
        std::string term = i == 0 ? "" : (i == 1 ? "*x" : "*x^" + std::to_string(i));
        append_signed(out, first, c, term);
        first = false;
    }
    return out;
}

nlohmann::json to_json(const QSym& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : f.terms())
        terms.push_back({alpha.parts(), integer_json(numerator(c)), integer_json(denominator(c))});
    return {{"degree", f.degree()}, {"basis", basis_letter(f.basis())}, {"terms", terms}};
}

QSym qsym_from_json(const nlohmann::json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b != "M" && b != "L") throw std::invalid_argument("unknown basis '" + b + "'");
    QSym f(j.at("degree").get<int>(), b == "M" ? Basis::Monomial : Basis::Fundamental);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [composition, num, den]");
        f.add(Composition(t[0].get<std::vector<int>>()), rational_from_json(t[1], t[2]));
    }
    return f;
}

nlohmann::json to_json(const RationalPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coefficient(i);
        if (c != 0) terms.push_back({i, integer_json(numerator(c)), integer_json(denominator(c))});
    }
    return {{"terms", terms}};
}

RationalPolynomial polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("term must be [power, num, den]");
        const int power = t[0].get<int>();
        if (power < 0) throw std::invalid_argument("negative power");
        if (static_cast<std::size_t>(power) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(power) + 1);
        coeffs[static_cast<std::size_t>(power)] += rational_from_json(t[1], t[2]);
    }
    return RationalPolynomial(std::move(coeffs));
}

}  // namespace kqsym
