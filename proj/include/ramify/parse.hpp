#pragma once

// Text input: rational-function expressions in z (factored or expanded) and
// point lists. Literals: integers, rationals p/q, decimals, the imaginary
// unit i (also 2i, 3.5i), and `inf` for the point at infinity. Operators
// + - * / ^ with parentheses; / is ordinary division of rational functions,
// so both "3/4" and "(z-1)^3*(z+3)/z" fall out of the same grammar.

#include <cctype>
#include <string>
#include <vector>

#include "ramify/rational_map.hpp"

namespace ramify::parse {

namespace detail {

template <class K>
struct literal_builder;

template <>
struct literal_builder<Exact> {
    // int_part / frac_part are digit strings; the value is exact
    static Exact make(const std::string& int_part, const std::string& frac_part) {
        Rational v = int_part.empty() ? Rational(0) : Rational(BigInt(int_part));
        if (!frac_part.empty()) {
            BigInt den = 1;
            for (size_t k = 0; k < frac_part.size(); ++k) den *= 10;
            v += Rational(BigInt(frac_part), den);
        }
        return Exact(v);
    }
};

template <>
struct literal_builder<Approx> {
    static Approx make(const std::string& int_part, const std::string& frac_part) {
        std::string s = (int_part.empty() ? "0" : int_part);
        if (!frac_part.empty()) s += "." + frac_part;
        return Approx{std::stod(s), 0.0};
    }
};

template <class K>
struct RatFunc {
    Polynomial<K> num, den;

    static RatFunc constant(K v) {
        return {Polynomial<K>::constant(std::move(v)),
                Polynomial<K>::constant(scalar_traits<K>::from_long(1))};
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RatFunc operator-(const RatFunc& a) { return {-a.num, a.den}; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.num.is_zero()) throw ParseError("division by zero in expression");
        return {a.num * b.den, a.den * b.num};
    }
};

template <class K>
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunc<K> parse_expression() {
        RatFunc<K> v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::string rest() { return s_.substr(pos_, 12); }

    RatFunc<K> expr() {
        RatFunc<K> v = (peek() == '-' || peek() == '+') ? term_signed() : term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = v + term();
            } else if (c == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RatFunc<K> term_signed() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -term_signed();
        }
        if (c == '+') {
            ++pos_;
            return term_signed();
        }
        return term();
    }

    RatFunc<K> term() {
        RatFunc<K> v = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * factor();
            } else if (c == '/') {
                ++pos_;
                v = v / factor();
            } else {
                return v;
            }
        }
    }

    RatFunc<K> factor() {
        RatFunc<K> v = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("exponent must be an integer");
            long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 4 * kMaxDegree) throw ParseError("exponent too large");
                ++pos_;
            }
            RatFunc<K> p{v.num.pow(static_cast<int>(e)), v.den.pow(static_cast<int>(e))};
            if (neg) {
                if (p.num.is_zero()) throw ParseError("division by zero in expression");
                std::swap(p.num, p.den);
            }
            v = p;
        }
        return v;
    }

    RatFunc<K> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc<K> v = expr();
            if (peek() != ')') throw ParseError("missing ')' at '" + rest() + "'");
            ++pos_;
            return v;
        }
        if (c == '-' || c == '+') return term_signed();
        if (c == 'z') {
            ++pos_;
            return {Polynomial<K>::x(),
                    Polynomial<K>::constant(scalar_traits<K>::from_long(1))};
        }
        if (c == 'i' && !std::isalpha(static_cast<unsigned char>(look_ahead(1)))) {
            ++pos_;
            return RatFunc<K>::constant(imaginary_unit());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        throw ParseError("unexpected input at '" + rest() + "'");
    }

    char look_ahead(size_t k) { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

    static K imaginary_unit() {
        if constexpr (scalar_traits<K>::is_exact)
            return Exact(Rational(0), Rational(1));
        else
            return Approx{0.0, 1.0};
    }

    RatFunc<K> number() {
        std::string int_part, frac_part;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            int_part += s_[pos_++];
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                frac_part += s_[pos_++];
        }
        if (int_part.empty() && frac_part.empty())
            throw ParseError("malformed number at '" + rest() + "'");
        K v = literal_builder<K>::make(int_part, frac_part);
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            !std::isalpha(static_cast<unsigned char>(look_ahead(1)))) {
            ++pos_;
            v = v * imaginary_unit();
        }
        return RatFunc<K>::constant(std::move(v));
    }
};

} // namespace detail

template <class K>
RationalMap<K> parse_map(const std::string& text) {
    detail::RatFunc<K> rf = detail::Parser<K>(text).parse_expression();
    return RationalMap<K>(rf.num, rf.den);
}

template <class K>
SpherePoint<K> parse_point(std::string text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty point");
    text = text.substr(a, b - a + 1);
    if (text == "inf" || text == "Inf" || text == "INF")
        return SpherePoint<K>::infinity();
    detail::RatFunc<K> rf = detail::Parser<K>(text).parse_expression();
    if (rf.num.degree() > 0 || rf.den.degree() > 0)
        throw ParseError("a point must be a constant expression: " + text);
    if (rf.den.is_zero() || scalar_traits<K>::is_zero(rf.den.coeff(0), 0.0))
        throw ParseError("division by zero in point: " + text);
    if (rf.num.is_zero()) return SpherePoint<K>(scalar_traits<K>::from_long(0));
    return SpherePoint<K>(rf.num.coeff(0) / rf.den.coeff(0));
}

template <class K>
std::vector<SpherePoint<K>> parse_points(const std::string& text, char sep = ';') {
    std::vector<SpherePoint<K>> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(sep, start);
        std::string piece = text.substr(start, end == std::string::npos ? std::string::npos
                                                                        : end - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_point<K>(piece));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw ParseError("empty point list");
    return out;
}

} // namespace ramify::parse
