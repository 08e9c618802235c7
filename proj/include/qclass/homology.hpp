#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qclass/rational.hpp"

namespace qclass {

struct BasisClass {
    std::string label;
    int degree = 0;  // even, between 0 and dim
};

// A spherical curve class with its first Chern number and symplectic area.
// The zero class (c1 = 0, omega = 0) carries the classical triple
// intersections; every other class must have omega > 0.
struct CurveClass {
    std::string label;
    long long c1 = 0;
    Rational omega = 0;

    bool is_zero_class() const { return c1 == 0 && omega == 0; }
};

// One raw structure-constant entry GW(e_i, e_j, e_k; A) = value.  Entries
// are kept exactly as constructed so validation can flag asymmetric tables;
// lookups match index triples as multisets.
struct Gw3Entry {
    int cls = 0;  // index into classes
    std::array<int, 3> idx{};
    Rational value = 0;
};

// Finite exact model of the even homology of a closed symplectic manifold
// together with its genus-zero three-point invariants.  Immutable once
// validated; shared by every element built over it.
struct ManifoldModel {
    std::string name;
    int dim = 0;  // real dimension 2n
    std::vector<BasisClass> basis;
    Matrix pairing;  // intersection numbers over the basis
    std::vector<CurveClass> classes;
    std::vector<Gw3Entry> gw3;

    int half_dim() const { return dim / 2; }

    // Index helpers throw ModelMismatch on unknown labels.
    int basis_index(const std::string& label) const;
    int class_index(const std::string& label) const;

    // Multiset-matched lookup; deterministic (first stored entry wins) and
    // invariant under the six permutations of (i, j, k).
    Rational gw3_value(int cls, int i, int j, int k) const;

    // Unique degree-0 / degree-dim basis positions; throw NoFundamentalClass
    // when absent or ambiguous (validation reports the same condition).
    int point_class_index() const;
    int fundamental_class_index() const;
};

using ModelPtr = std::shared_ptr<const ManifoldModel>;

// Formal rational combination of basis classes of one model.
class HomologyClass {
  public:
    HomologyClass() = default;
    explicit HomologyClass(ModelPtr model) : model_(std::move(model)) {}
    HomologyClass(ModelPtr model, int basis_idx, const Rational& coeff = 1);

    const ModelPtr& model() const { return model_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int basis_idx) const;
    void add(int basis_idx, const Rational& coeff);

    // Common degree of the support, or nullopt when mixed; throws
    // ZeroElement on the zero class.
    std::optional<int> degree() const;
    bool is_point_class() const;

    HomologyClass& operator+=(const HomologyClass& rhs);
    HomologyClass operator*(const Rational& scalar) const;
    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

    std::string to_string() const;

  private:
    ModelPtr model_;
    std::map<int, Rational> coeffs_;
};

// Intersection pairing of two classes over the same model.
Rational pairing_eval(const HomologyClass& a, const HomologyClass& b);

// Basis {e_i^*} with pairing_eval(e_i, e_j^*) = delta_ij, from the exact
// inverse of the pairing matrix.  Throws SingularPairing.
std::vector<HomologyClass> dual_basis(const ModelPtr& model);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Report-style structural audit: degrees, pairing support and
// nondegeneracy, curve-class positivity, gw3 symmetry and degree
// constraint, unit compatibility of the zero class.
ValidationReport validate_model(const ManifoldModel& model);

// Quantum model of CP^n: basis p_0..p_n with deg p_i = 2i, anti-diagonal
// pairing, curve classes d*L (c1 = d(n+1), omega = d) and the standard
// three-point counts: gw3(dL, i, j, k) = 1 exactly when i+j+k = 2n - d(n+1).
ModelPtr preset_cpn(int n);

// Resolves "cpn:N" preset references.
ModelPtr resolve_preset(const std::string& ref);

}  // namespace qclass
