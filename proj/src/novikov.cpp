#include "qclass/novikov.hpp"

#include <cctype>
#include <sstream>

namespace qclass {

NovikovScalar::NovikovScalar(const Rational& coeff, long long q_exp, const Rational& t_exp) {
    if (coeff != 0) terms_[{q_exp, t_exp}] = coeff;
}

Rational NovikovScalar::coeff(long long q_exp, const Rational& t_exp) const {
    const auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

void NovikovScalar::add_term(const Rational& coeff, const NovikovMonomial& mono) {
    if (coeff == 0) return;
    const auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_[mono] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

NovikovScalar NovikovScalar::operator-() const {
    NovikovScalar out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = -c;
    return out;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(c, mono);
    return *this;
}

NovikovScalar& NovikovScalar::operator-=(const NovikovScalar& rhs) {
    for (const auto& [mono, c] : rhs.terms_) add_term(-c, mono);
    return *this;
}

NovikovScalar operator*(const NovikovScalar& lhs, const NovikovScalar& rhs) {
    NovikovScalar out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ca * cb, {ma.q_exp + mb.q_exp, ma.t_exp + mb.t_exp});
    return out;
}

Rational NovikovScalar::valuation() const {
    if (terms_.empty()) throw ZeroElement("valuation of the zero Novikov scalar");
    return terms_.begin()->first.t_exp;  // map order puts the largest t first
}

NovikovScalar NovikovScalar::truncated(const Rational& t_floor) const {
    NovikovScalar out;
    for (const auto& [mono, c] : terms_) {
        if (mono.t_exp < t_floor) break;  // descending t order
        out.terms_[mono] = c;
    }
    return out;
}

std::string NovikovScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(c) << " q^" << mono.q_exp << " t^{"
           << format_rational(mono.t_exp) << "}";
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError("expected '" + std::string(1, c) + "' in Novikov scalar at offset " +
                             std::to_string(i));
    }
    bool eat_word(const char* w) {
        skip_ws();
        size_t j = i;
        for (const char* p = w; *p; ++p, ++j)
            if (j >= s.size() || s[j] != *p) return false;
        i = j;
        return true;
    }
    // signed integer or p/q
    std::string read_rational_text() {
        skip_ws();
        size_t b = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (i == b) throw ParseError("expected a rational at offset " + std::to_string(b));
        return s.substr(b, i - b);
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

}  // namespace

NovikovScalar NovikovScalar::parse(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.eat('0')) {
        if (c.done()) return NovikovScalar();
        c.i = 0;  // real term starting with 0? canonical form never emits it; reparse
    }
    NovikovScalar out;
    while (true) {
        const Rational coeff = parse_rational(c.read_rational_text());
        if (!c.eat_word("q^")) throw ParseError("expected 'q^' in Novikov scalar");
        const bool braced = c.eat('{');
        const std::string q_text = c.read_rational_text();
        if (q_text.find('/') != std::string::npos)
            throw ParseError("q-exponent must be an integer: '" + q_text + "'");
        const long long q_exp = std::stoll(q_text);
        if (braced) c.expect('}');
        if (!c.eat_word("t^")) throw ParseError("expected 't^' in Novikov scalar");
        c.expect('{');
        const Rational t_exp = parse_rational(c.read_rational_text());
        c.expect('}');
        out.add_term(coeff, {q_exp, t_exp});
        if (c.done()) break;
        if (!c.eat('+')) throw ParseError("expected '+' between Novikov terms");
    }
    return out;
}

}  // namespace qclass
