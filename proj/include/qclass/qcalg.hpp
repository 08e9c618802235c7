#pragma once

#include <map>
#include <string>
#include <utility>

#include "qclass/obstruction.hpp"
#include "qclass/quantum.hpp"

namespace qclass {

struct CircleAction;  // seidel.hpp

// Rational combination of base homology basis classes.
using BaseClass = std::map<int, Rational>;

BaseClass base_fundamental(const BaseModel& base);
BaseClass base_point_class(const BaseModel& base);

// Quantum characteristic class: Novikov-scalar coefficients on the Kunneth
// basis (base class x fiber class) of one base model and one fiber model.
// `complete` records whether lower-order terms were dropped; it propagates
// through products and evaluations.
class QCClass {
  public:
    QCClass() = default;
    QCClass(BaseModel base, ModelPtr model, bool complete = true)
        : base_(std::move(base)), model_(std::move(model)), complete_(complete) {}

    // [B] x [M] with coefficient 1: the cup-product unit.
    static QCClass unit(const BaseModel& base, const ModelPtr& model);

    const BaseModel& base() const { return base_; }
    const ModelPtr& model() const { return model_; }
    bool complete() const { return complete_; }
    void set_complete(bool complete) { complete_ = complete; }

    const std::map<std::pair<int, int>, NovikovScalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    NovikovScalar coeff(int base_idx, int fiber_idx) const;
    void add_term(int base_idx, int fiber_idx, const NovikovScalar& scalar);

    QCClass& operator+=(const QCClass& rhs);
    QCClass scaled(const NovikovScalar& s) const;

    friend bool operator==(const QCClass&, const QCClass&) = default;

    // Largest t-exponent over every coefficient; throws ZeroElement.
    Rational valuation() const;

    // Coefficient lines "base_label (x) fiber_label (x) (scalar)".
    std::string to_string() const;
    // "complete: true|false" line followed by the coefficient lines.
    std::string serialize() const;
    static QCClass parse(const BaseModel& base, const ModelPtr& model, const std::string& text);

  private:
    BaseModel base_;
    ModelPtr model_;
    std::map<std::pair<int, int>, NovikovScalar> coeffs_;
    bool complete_ = true;
};

// The class as a functional on base homology: contraction of a homogeneous
// base class through the base intersection pairing and the fiber dual basis.
QuantumElement eval_functional(const QCClass& c, const BaseClass& a);

// Cup product: base intersection product tensor fiber quantum product,
// bilinear over the Novikov ring.  ModelMismatch unless base and fiber
// models agree.
QCClass qc_cup(const QCClass& x, const QCClass& y);

// Whitney sum formula: the total class of a sum is the cup product of the
// total classes.
QCClass whitney_total(const QCClass& p1, const QCClass& p2);

// Left multiplication x -> qc_cup(c, x); composition mirrors qc_cup.
class MultOperator {
  public:
    explicit MultOperator(QCClass c) : c_(std::move(c)) {}
    QCClass operator()(const QCClass& x) const { return qc_cup(c_, x); }
    const QCClass& characteristic_class() const { return c_; }

  private:
    QCClass c_;
};

MultOperator mult_operator(const QCClass& c);

struct MarkedQuantumElement {
    QuantumElement value;
    bool complete = true;
};

// Evaluation at the base fundamental class; the homomorphism to quantum
// homology.  Throws NoFundamentalClass when the base lacks one.
QuantumElement psi(const QCClass& c);
MarkedQuantumElement psi_marked(const QCClass& c);

// The product on the image of psi: the quantum product itself.
QuantumElement pontryagin_psi(const QuantumElement& a, const QuantumElement& b);

// Pullback of a point-base class to a larger base (the point factor is
// replaced by the fundamental class).  Used for product-base checks.
QCClass base_extend(const QCClass& point_class, const BaseModel& target);

// Whether two independently supplied classes evaluate to the same quantum
// element under psi.
bool psi_agreement(const QCClass& a, const QCClass& b);

struct DegreeAuditReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks deg(base) + deg(fiber) = 2n + m - 2 q_exp on every stored term.
DegreeAuditReport degree_audit(const QCClass& c);

enum class BoundKind { HomotopyClass, BordismClass };

struct HoferCertificate {
    Rational bound = 0;
    BoundKind kind = BoundKind::HomotopyClass;
    std::string source;

    std::string kind_name() const;
    std::string to_string() const;
};

// Lower bound for the positive Hofer length: the valuation of the class
// (homotopy kind) or of its psi image (bordism kind).  ZeroElement when the
// relevant element vanishes.
HoferCertificate hofer_bound(const QCClass& c, BoundKind kind);

// Leading term of the quantum characteristic class of the cycle family:
// the Poincare dual of the obstruction Euler class (eK substituted by
// euler_of_Y), carried by f_max in the fiber, twisted by
// q^{-m_max} t^{h_max}.  The result is marked incomplete: lower t-order
// terms are not derived.  Throws UnsupportedFmax unless f_max is a point
// class.
QCClass leading_qc_class(const CircleAction& action, const BaseModel& base,
                         const std::vector<Rational>& eL);

}  // namespace qclass
