#include "kqsym/rational.hpp"

#include <stdexcept>

namespace kqsym {

std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("empty integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad integer: '" + text + "'");
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(parse_integer(text.substr(0, slash)), den);
}

}  // namespace kqsym
