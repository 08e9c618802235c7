#pragma once

#include <map>
#include <optional>
#include <string>

#include "qclass/homology.hpp"
#include "qclass/novikov.hpp"

namespace qclass {

// Element of the quantum homology module: a finite Novikov-scalar
// combination of basis classes of one manifold model.
class QuantumElement {
  public:
    QuantumElement() = default;
    explicit QuantumElement(ModelPtr model) : model_(std::move(model)) {}
    QuantumElement(ModelPtr model, int basis_idx, NovikovScalar scalar);

    // The multiplicative unit: the fundamental class with coefficient 1.
    static QuantumElement unit(const ModelPtr& model);
    // Classical inclusion: each homology coefficient times q^0 t^0.
    static QuantumElement from_homology(const HomologyClass& h);

    const ModelPtr& model() const { return model_; }
    const std::map<int, NovikovScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    NovikovScalar coeff(int basis_idx) const;
    void add_term(int basis_idx, const NovikovScalar& scalar);

    QuantumElement& operator+=(const QuantumElement& rhs);
    QuantumElement& operator-=(const QuantumElement& rhs);
    friend QuantumElement operator+(QuantumElement lhs, const QuantumElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend QuantumElement operator-(QuantumElement lhs, const QuantumElement& rhs) {
        lhs -= rhs;
        return lhs;
    }
    // Module action of the Novikov ring.
    QuantumElement scaled(const NovikovScalar& s) const;

    friend bool operator==(const QuantumElement&, const QuantumElement&) = default;

    // Largest t-exponent over every coefficient; throws ZeroElement.
    Rational valuation() const;

    // One line per basis class, canonical order:
    //   label (x) (Novikov scalar text)
    // with the tensor glyph between the parts; zero prints "0".
    std::string to_string() const;
    static QuantumElement parse(const ModelPtr& model, const std::string& text);

  private:
    ModelPtr model_;
    std::map<int, NovikovScalar> coeffs_;
};

// Quantum product: bilinear over the Novikov ring, structure constants from
// the model's three-point table resolved against the dual basis, each curve
// class A contributing with the twist q^{-c1(A)} t^{-omega(A)}.
QuantumElement qmul(const QuantumElement& a, const QuantumElement& b);

// Product of basis classes e_i * e_j restricted to one curve class, as a
// homology class (no Novikov twist).  Shared by qmul and qinvert.
HomologyClass basis_product_part(const ModelPtr& model,
                                 const std::vector<HomologyClass>& duals, int cls, int i, int j);

// Common degree deg(e_i) + 2 l over the support, nullopt when mixed
// ("inhomogeneous"); throws ZeroElement on the zero element.
std::optional<long long> qdegree(const QuantumElement& a);

// Inverse of a up to the stated t-floor: returns b with
// truncate(a*b - unit, t_floor) = 0.  The finite monomial window is derived
// by backward closure from the unit monomial through the (gw3, dual basis,
// curve class) couplings, with b-monomial t-exponents confined to
// [t_floor - nu(a), max_A omega(A) - min_t(a)]; the resulting exact linear
// system is solved by row reduction with free variables pinned to zero.
// Throws NotInvertibleAtFloor when the system is unsolvable (or the window
// budget is exceeded).
QuantumElement qinvert(const QuantumElement& a, const Rational& t_floor);

// Exact check qmul(s1, s2) == expected.
bool seidel_product_check(const QuantumElement& s1, const QuantumElement& s2,
                          const QuantumElement& expected);

}  // namespace qclass
