#include "qclass/seidel.hpp"

#include <numeric>
#include <sstream>

#include "qclass/errors.hpp"

namespace qclass {

long long CircleAction::m_max() const {
    return std::accumulate(weights_at_max.begin(), weights_at_max.end(), 0LL);
}

bool CircleAction::semifree() const {
    for (long long w : weights_at_max)
        if (w != 0 && w != -1) return false;
    return true;
}

void validate_action(const CircleAction& action) {
    if (!action.model) throw InvalidAction("action '" + action.name + "' has no model");
    for (long long w : action.weights_at_max)
        if (w > 0)
            throw InvalidAction("action '" + action.name + "' has a positive weight at the " +
                                "maximum: " + std::to_string(w));
    if (action.f_max_class.is_zero())
        throw InvalidAction("action '" + action.name + "' has a zero maximum fixed-set class");
    if (action.f_max_class.model() != action.model)
        throw InvalidAction("action '" + action.name + "' has f_max over a different model");
    if (action.corrections)
        for (const auto& corr : *action.corrections)
            if (!corr.a_B.is_zero() && corr.a_B.model() != action.model)
                throw InvalidAction("action '" + action.name +
                                    "' has a correction class over a different model");
}

QuantumElement seidel_leading(const CircleAction& action) {
    validate_action(action);
    QuantumElement out(action.model);
    const NovikovScalar lead(1, -action.m_max(), action.h_max);
    for (const auto& [idx, c] : action.f_max_class.coeffs())
        out.add_term(idx, lead * NovikovScalar(c, 0, 0));
    return out;
}

QuantumElement seidel_full(const CircleAction& action) {
    QuantumElement out = seidel_leading(action);
    if (!action.corrections) return out;
    const long long m = action.m_max();
    for (const auto& corr : *action.corrections) {
        if (corr.omegaB <= 0)
            throw CorrectionOrderViolation("correction with omegaB = " +
                                           format_rational(corr.omegaB) +
                                           " <= 0 in action '" + action.name + "'");
        const NovikovScalar twist(1, -m - corr.c1B, action.h_max - corr.omegaB);
        for (const auto& [idx, c] : corr.a_B.coeffs())
            out.add_term(idx, twist * NovikovScalar(c, 0, 0));
    }
    return out;
}

Rational loop_hofer_bound(const CircleAction& action) {
    return seidel_full(action).valuation();
}

std::string SeidelDegreeReport::to_string() const {
    std::ostringstream os;
    os << "expected degree " << expected << ", leading term degree ";
    if (actual) os << *actual;
    else os << "inhomogeneous";
    os << (matches ? " (matches)" : " (flagged: differs)");
    return os.str();
}

SeidelDegreeReport seidel_degree_report(const CircleAction& action) {
    SeidelDegreeReport rep;
    rep.expected = action.model->dim;
    rep.actual = qdegree(seidel_leading(action));
    rep.matches = rep.actual && *rep.actual == rep.expected;
    return rep;
}

}  // namespace qclass
