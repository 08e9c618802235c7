#include <random>

#include "doctest.h"
#include "qclass/errors.hpp"
#include "qclass/quantum.hpp"
#include "test_util.hpp"

using namespace qclass;
using testutil::random_scalar;

namespace {

QuantumElement basis_elt(const ModelPtr& m, int i) {
    return QuantumElement(m, i, NovikovScalar::one());
}

QuantumElement monomial_elt(const ModelPtr& m, int i, const Rational& c, long long q,
                            const Rational& t) {
    return QuantumElement(m, i, NovikovScalar(c, q, t));
}

// The same basis presentation with every positive-area curve class removed:
// only classical triple intersections survive.
ModelPtr classical_part(int n) {
    auto m = std::make_shared<ManifoldModel>(*preset_cpn(n));
    m->classes.resize(1);
    std::vector<Gw3Entry> kept;
    for (const auto& e : m->gw3)
        if (e.cls == 0) kept.push_back(e);
    m->gw3 = std::move(kept);
    return m;
}

}  // namespace

TEST_CASE("sphere products match the three-point counts") {
    const ModelPtr m = preset_cpn(1);
    CHECK(qmul(basis_elt(m, 0), basis_elt(m, 0)) == monomial_elt(m, 1, 1, -2, -1));
    CHECK(qmul(basis_elt(m, 0), basis_elt(m, 1)) == basis_elt(m, 0));
    CHECK(qmul(basis_elt(m, 1), basis_elt(m, 1)) == basis_elt(m, 1));
}

TEST_CASE("projective plane products match the three-point counts") {
    const ModelPtr m = preset_cpn(2);
    CHECK(qmul(basis_elt(m, 1), basis_elt(m, 1)) == basis_elt(m, 0));
    CHECK(qmul(basis_elt(m, 1), basis_elt(m, 0)) == monomial_elt(m, 2, 1, -3, -1));
    CHECK(qmul(basis_elt(m, 0), basis_elt(m, 0)) == monomial_elt(m, 1, 1, -3, -1));
    CHECK(qmul(basis_elt(m, 2), basis_elt(m, 0)) == basis_elt(m, 0));
}

TEST_CASE("unit, commutativity and associativity hold exhaustively") {
    for (int n = 1; n <= 3; ++n) {
        const ModelPtr m = preset_cpn(n);
        const QuantumElement unit = QuantumElement::unit(m);
        const int nb = n + 1;
        for (int i = 0; i < nb; ++i) {
            CHECK(qmul(unit, basis_elt(m, i)) == basis_elt(m, i));
            for (int j = 0; j < nb; ++j) {
                CHECK(qmul(basis_elt(m, i), basis_elt(m, j)) ==
                      qmul(basis_elt(m, j), basis_elt(m, i)));
                for (int k = 0; k < nb; ++k)
                    CHECK(qmul(qmul(basis_elt(m, i), basis_elt(m, j)), basis_elt(m, k)) ==
                          qmul(basis_elt(m, i), qmul(basis_elt(m, j), basis_elt(m, k))));
            }
        }
    }
}

TEST_CASE("product is bilinear over the coefficient ring") {
    std::mt19937 rng(20240816);
    const ModelPtr m = preset_cpn(2);
    for (int trial = 0; trial < 50; ++trial) {
        QuantumElement a(m), b(m), c(m);
        for (int i = 0; i <= 2; ++i) {
            a.add_term(i, random_scalar(rng));
            b.add_term(i, random_scalar(rng));
            c.add_term(i, random_scalar(rng));
        }
        const NovikovScalar s = random_scalar(rng);
        CHECK(qmul(a + b, c) == qmul(a, c) + qmul(b, c));
        CHECK(qmul(a.scaled(s), b) == qmul(a, b).scaled(s));
    }
}

TEST_CASE("product degree drops by the dimension") {
    for (int n = 1; n <= 4; ++n) {
        const ModelPtr m = preset_cpn(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const QuantumElement prod = qmul(basis_elt(m, i), basis_elt(m, j));
                REQUIRE_FALSE(prod.is_zero());
                CHECK(qdegree(prod) == 2 * i + 2 * j - 2 * n);
            }
    }
}

TEST_CASE("removing curve classes leaves the classical ring") {
    const ModelPtr m = classical_part(2);
    CHECK(qmul(basis_elt(m, 1), basis_elt(m, 1)) == basis_elt(m, 0));
    CHECK(qmul(basis_elt(m, 2), basis_elt(m, 1)) == basis_elt(m, 1));
    CHECK(qmul(basis_elt(m, 0), basis_elt(m, 0)).is_zero());
    CHECK(qmul(basis_elt(m, 0), basis_elt(m, 1)).is_zero());
}

TEST_CASE("qdegree detects mixed terms and rejects zero") {
    const ModelPtr m = preset_cpn(2);
    QuantumElement mixed = basis_elt(m, 2);
    mixed += basis_elt(m, 0);
    CHECK_FALSE(qdegree(mixed).has_value());
    CHECK(qdegree(monomial_elt(m, 0, 1, 3, Rational(1, 2))) == 6);
    CHECK_THROWS_AS(qdegree(QuantumElement(m)), ZeroElement);
}

TEST_CASE("element valuation is the maximum over coefficients") {
    const ModelPtr m = preset_cpn(1);
    QuantumElement a = monomial_elt(m, 0, 1, 0, Rational(1, 2));
    a += monomial_elt(m, 1, -2, 1, 3);
    CHECK(a.valuation() == 3);
    CHECK_THROWS_AS(QuantumElement(m).valuation(), ZeroElement);
}

TEST_CASE("element text round-trips") {
    const ModelPtr m = preset_cpn(2);
    QuantumElement a = monomial_elt(m, 0, Rational(-1, 2), 2, Rational(3, 2));
    a += monomial_elt(m, 2, 1, 0, 0);
    a += monomial_elt(m, 0, 5, -1, 0);
    CHECK(QuantumElement::parse(m, a.to_string()) == a);
    CHECK(QuantumElement(m).to_string() == "0");
    CHECK(QuantumElement::parse(m, "0").is_zero());
    CHECK_THROWS_AS(QuantumElement::parse(m, "p0 (1 q^0 t^{0})"), ParseError);
    CHECK_THROWS_AS(QuantumElement::parse(m, "p9 ⊗ (1 q^0 t^{0})"), ModelMismatch);
}

TEST_CASE("products over different models are rejected") {
    const ModelPtr a = preset_cpn(1);
    const ModelPtr b = preset_cpn(1);
    CHECK_THROWS_AS(qmul(basis_elt(a, 0), basis_elt(b, 0)), ModelMismatch);
}

TEST_CASE("unit inverts to itself") {
    const ModelPtr m = preset_cpn(2);
    CHECK(qinvert(QuantumElement::unit(m), 0) == QuantumElement::unit(m));
}

TEST_CASE("rotation element is its own inverse") {
    const ModelPtr m = preset_cpn(1);
    const QuantumElement s = monomial_elt(m, 0, 1, 1, Rational(1, 2));
    const QuantumElement inv = qinvert(s, -3);
    CHECK(inv == s);
    CHECK(qmul(s, inv) == QuantumElement::unit(m));
}

TEST_CASE("inverse of a unit-plus-point truncates the geometric series") {
    const ModelPtr m = preset_cpn(1);
    QuantumElement a = QuantumElement::unit(m);
    a += basis_elt(m, 0);
    const Rational floor = -2;
    const QuantumElement b = qinvert(a, floor);
    const QuantumElement residue = qmul(a, b) - QuantumElement::unit(m);
    REQUIRE_FALSE(residue.is_zero());
    for (const auto& [idx, s] : residue.coeffs()) CHECK(s.truncated(floor).is_zero());
    // the series 1 - p + p^2 - ... collapses to six monomials in the window
    CHECK(b.coeff(1).coeff(0, 0) == 1);
    CHECK(b.coeff(0).coeff(0, 0) == -1);
    CHECK(b.coeff(1).coeff(-2, -1) == 1);
    CHECK(b.coeff(0).coeff(-2, -1) == -1);
    CHECK(b.coeff(1).coeff(-4, -2) == 1);
    CHECK(b.coeff(0).coeff(-4, -2) == -1);
}

TEST_CASE("nilpotent elements are not invertible") {
    auto m = std::make_shared<ManifoldModel>();
    m->name = "nilpotent";
    m->dim = 2;
    m->basis = {{"x", 0}, {"m", 2}};
    m->pairing = {{0, 1}, {1, 0}};
    m->classes = {{"0L", 0, 0}};
    m->gw3 = {{0, {0, 1, 1}, 1}};  // only the unit relation: x*x = 0
    REQUIRE(validate_model(*m).ok());
    const ModelPtr mp = m;
    CHECK(qmul(basis_elt(mp, 0), basis_elt(mp, 0)).is_zero());
    CHECK_THROWS_AS(qinvert(basis_elt(mp, 0), 0), NotInvertibleAtFloor);
    CHECK_THROWS_AS(qinvert(QuantumElement(mp), 0), ZeroElement);
}

TEST_CASE("paired inverses certify a product identity") {
    const ModelPtr m = preset_cpn(1);
    const QuantumElement s = monomial_elt(m, 0, 1, 1, Rational(1, 2));
    CHECK(seidel_product_check(s, s, QuantumElement::unit(m)));
    CHECK_FALSE(seidel_product_check(s, s, s));
}
