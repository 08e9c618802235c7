#pragma once

#include <map>
#include <string>

#include "qclass/rational.hpp"

namespace qclass {

// One monomial q^l t^eps of the Novikov coefficient ring.  q carries
// homological degree 2, t carries degree 0 and a rational exponent.
struct NovikovMonomial {
    long long q_exp = 0;
    Rational t_exp = 0;

    friend bool operator==(const NovikovMonomial&, const NovikovMonomial&) = default;
};

// Canonical term order: t-exponent descending, then q-exponent ascending.
// Map iteration therefore matches the canonical serialization order.
struct NovikovTermOrder {
    bool operator()(const NovikovMonomial& a, const NovikovMonomial& b) const {
        if (a.t_exp != b.t_exp) return a.t_exp > b.t_exp;
        return a.q_exp < b.q_exp;
    }
};

// Finite sum  sum_i c_i q^{l_i} t^{eps_i}  with nonzero rational c_i.
// Value type: all operations return new scalars.
class NovikovScalar {
  public:
    using TermMap = std::map<NovikovMonomial, Rational, NovikovTermOrder>;

    NovikovScalar() = default;
    // c q^l t^eps; the zero coefficient gives the zero scalar.
    NovikovScalar(const Rational& coeff, long long q_exp, const Rational& t_exp);

    static NovikovScalar one() { return NovikovScalar(1, 0, 0); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Coefficient of q^l t^eps (zero when absent).
    Rational coeff(long long q_exp, const Rational& t_exp) const;

    void add_term(const Rational& coeff, const NovikovMonomial& mono);

    NovikovScalar operator-() const;
    NovikovScalar& operator+=(const NovikovScalar& rhs);
    NovikovScalar& operator-=(const NovikovScalar& rhs);

    friend NovikovScalar operator+(NovikovScalar lhs, const NovikovScalar& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend NovikovScalar operator-(NovikovScalar lhs, const NovikovScalar& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend NovikovScalar operator*(const NovikovScalar& lhs, const NovikovScalar& rhs);

    friend bool operator==(const NovikovScalar&, const NovikovScalar&) = default;

    // Largest t-exponent over the support; throws ZeroElement on the zero scalar.
    Rational valuation() const;

    // Drops every term with t-exponent strictly below the floor (terms exactly
    // at the floor are kept).
    NovikovScalar truncated(const Rational& t_floor) const;

    // Canonical text: terms in map order, "c q^l t^{eps}" joined by " + ";
    // the zero scalar prints as "0".
    std::string to_string() const;

    // Accepts exactly the grammar emitted by to_string (whitespace flexible,
    // braces around the q-exponent optional).
    static NovikovScalar parse(const std::string& text);

  private:
    TermMap terms_;
};

}  // namespace qclass
