#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclass/quantum.hpp"

namespace qclass {

// One lower-order contribution a_B q^{-m_max - c1B} t^{h_max - omegaB}
// supplied as input data (the artifact never derives corrections).
struct SeidelCorrection {
    HomologyClass a_B;
    long long c1B = 0;
    Rational omegaB = 0;
};

// A Hamiltonian circle action described by its fixed-point data at the
// maximum: normal weights (all <= 0), the class of the maximum fixed set,
// and the normalized maximum Hamiltonian value h_max (input data).
// corrections == nullopt marks "leading term only known".
struct CircleAction {
    std::string name;
    ModelPtr model;
    std::vector<long long> weights_at_max;
    HomologyClass f_max_class;
    Rational h_max = 0;
    std::optional<std::vector<SeidelCorrection>> corrections;

    long long m_max() const;  // sum of the weights
    bool semifree() const;    // every nonzero weight equals -1
};

// Throws InvalidAction on positive weights, a zero or mismatched
// f_max_class, or a mismatched correction class.
void validate_action(const CircleAction& action);

// [F_max] q^{-m_max} t^{h_max}.
QuantumElement seidel_leading(const CircleAction& action);

// Leading term plus every declared correction; an absent corrections list
// is treated as empty (leading-term-only data).  Throws
// CorrectionOrderViolation when a correction has omegaB <= 0.
QuantumElement seidel_full(const CircleAction& action);

// Valuation of the full Seidel element; equals h_max whenever the
// corrections obey the positive-area constraint.
Rational loop_hofer_bound(const CircleAction& action);

// Degree 2n is checked, not enforced: non-semifree weight data may produce
// leading terms of other degrees.
struct SeidelDegreeReport {
    long long expected = 0;
    std::optional<long long> actual;
    bool matches = false;

    std::string to_string() const;
};

SeidelDegreeReport seidel_degree_report(const CircleAction& action);

}  // namespace qclass
