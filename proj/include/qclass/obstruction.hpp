#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qclass/homology.hpp"

namespace qclass {

enum class BaseKind { Point, Sphere, Projective };

// Cohomology class of a base model in even degrees: slot j holds the
// coefficient of the canonical degree-2j generator power.
using BaseCohom = std::vector<Rational>;

// The cycle-space model: a point, an even sphere, or a complex projective
// space, with its homology presentation and the Euler class of the
// evaluation bundle Y over it (a rational multiple of the degree-2
// generator; zero for bases without one).
struct BaseModel {
    BaseKind kind = BaseKind::Point;
    int k = 0;  // dim = 2k
    Rational euler_of_Y = 0;

    int dim() const { return 2 * k; }
    std::string kind_name() const;
    std::string describe() const;  // e.g. "sphere(2)"

    // Homology presentation.
    std::vector<BasisClass> homology_basis() const;
    Matrix homology_pairing() const;
    int fundamental_index() const;
    int point_index() const;
    // Intersection product of two homology basis classes.
    std::vector<std::pair<int, Rational>> intersect(int i, int j) const;

    // Cohomology presentation: slots 0..k; a slot may be structurally
    // absent (the middle of a sphere of dimension >= 4).
    int cohom_slots() const { return k + 1; }
    bool slot_valid(int j) const;
    bool has_degree2() const { return k >= 1 && slot_valid(1); }

    friend bool operator==(const BaseModel&, const BaseModel&) = default;
};

BaseModel base_point();
BaseModel base_sphere(int dim);       // even dim >= 2
BaseModel base_projective(int k);     // complex dimension k >= 1
// Builds a base of the given kind, validating euler_of_Y against the
// available degree-2 cohomology.
BaseModel make_base(BaseKind kind, int dim, const Rational& euler_of_Y);

BaseCohom cohom_zero(const BaseModel& base);
BaseCohom cohom_unit(const BaseModel& base);
// c times the degree-2 generator; rejects nonzero c when the base has none.
BaseCohom cohom_gen2(const BaseModel& base, const Rational& c);
BaseCohom cohom_add(const BaseCohom& a, const BaseCohom& b);
BaseCohom cohom_scale(const BaseCohom& a, const Rational& c);
BaseCohom cohom_mul(const BaseModel& base, const BaseCohom& a, const BaseCohom& b);
bool cohom_is_zero(const BaseCohom& a);
std::string cohom_to_string(const BaseModel& base, const BaseCohom& a);
// Poincare duality: cohomology slots to homology coefficients.
std::map<int, Rational> poincare_dual(const BaseModel& base, const BaseCohom& a);

// Homogeneous polynomial in the formal degree-2 variable eK with
// coefficients in the base cohomology ring (the eL generators are
// substituted and reduced at construction time; eK substitution is
// deferred so the expansion by eK powers stays available).
class ObstructionRingElement {
  public:
    explicit ObstructionRingElement(BaseModel base) : base_(std::move(base)) {}

    static ObstructionRingElement unit(const BaseModel& base);

    const BaseModel& base() const { return base_; }
    const std::map<int, BaseCohom>& powers() const { return by_power_; }
    bool is_zero() const { return by_power_.empty(); }

    void add_term(int eK_power, const BaseCohom& coeff);

    ObstructionRingElement operator*(const ObstructionRingElement& rhs) const;
    friend bool operator==(const ObstructionRingElement&, const ObstructionRingElement&) = default;

    // Substitutes eK by the base's euler_of_Y and reduces.
    BaseCohom substitute_eK() const;

    // Total degree when homogeneous (2*power + slot degree), else nullopt.
    std::optional<int> degree() const;

    std::string to_string() const;

  private:
    BaseModel base_;
    std::map<int, BaseCohom> by_power_;
};

// Sum over the negative weights of 2(|k_i| - 1); throws PositiveWeightAtMax.
long long virtual_index(const std::vector<long long>& weights);

// The obstruction Euler product: for each weight k_i with n_i = -k_i - 2 >= 0
// the factor prod_{j=0}^{n_i} ((j+1) eK + eL_i); weights -1 and 0 contribute
// the empty factor.  eL entries are coefficients on the base's degree-2
// generator, one per weight (ArityMismatch otherwise).
ObstructionRingElement euler_obstruction(const std::vector<long long>& weights,
                                         const BaseModel& base,
                                         const std::vector<Rational>& eL);

// Expansion by eK powers, leading power first, zero coefficients omitted.
std::vector<std::pair<int, BaseCohom>> expand_euler(const ObstructionRingElement& e);

// The top expansion coefficient prod (n_i + 1)! predicted by the free-stage
// product; exposed for cross-checks.
Rational euler_top_coefficient(const std::vector<long long>& weights);

struct MinimalityCertificate {
    bool certified = false;
    long long index = 0;
    int base_dim = 0;
    bool euler_power_nonzero = false;  // vacuous when base_dim == 0
    Rational bound = 0;                // h_max of the certified action
    std::vector<std::string> facts;

    std::string to_string() const;
};

struct CircleAction;  // seidel.hpp

// Certifies essentialness and length minimality: the virtual index must
// equal dim B and (for positive-dimensional B) the (dim B / 2)-th power of
// euler_of_Y must be nonzero.  The certified bound is h_max.
MinimalityCertificate minimality_certificate(const CircleAction& action, const BaseModel& base);

}  // namespace qclass
