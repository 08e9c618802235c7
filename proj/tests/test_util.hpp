#pragma once

#include <random>

#include "qclass/qcalg.hpp"

// Seeded generators shared by the property suites.  Every test fixes its
// own seed so failures reproduce exactly.
namespace testutil {

using namespace qclass;

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    Rational r = 0;
    while (r == 0) r = random_rational(rng);
    return r;
}

inline NovikovMonomial random_monomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> qe(-3, 3);
    std::uniform_int_distribution<int> tnum(-4, 4);
    std::uniform_int_distribution<int> tden(1, 2);
    return {qe(rng), Rational(tnum(rng), tden(rng))};
}

inline NovikovScalar random_scalar(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    NovikovScalar s;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) s.add_term(random_rational(rng), random_monomial(rng));
    return s;
}

inline NovikovScalar random_nonzero_scalar(std::mt19937& rng, int max_terms = 3) {
    NovikovScalar s;
    while (s.is_zero()) s = random_scalar(rng, max_terms);
    return s;
}

inline QCClass random_qcclass(std::mt19937& rng, const BaseModel& base, const ModelPtr& model,
                              int max_terms = 3) {
    QCClass out(base, model);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> bidx(0, static_cast<int>(base.homology_basis().size()) - 1);
    std::uniform_int_distribution<int> fidx(0, static_cast<int>(model->basis.size()) - 1);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) out.add_term(bidx(rng), fidx(rng), random_scalar(rng));
    return out;
}

}  // namespace testutil
