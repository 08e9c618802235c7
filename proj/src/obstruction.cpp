#include "qclass/obstruction.hpp"

#include <sstream>

#include "qclass/errors.hpp"
#include "qclass/qcalg.hpp"
#include "qclass/seidel.hpp"

namespace qclass {

std::string BaseModel::kind_name() const {
    switch (kind) {
        case BaseKind::Point: return "point";
        case BaseKind::Sphere: return "sphere";
        case BaseKind::Projective: return "projective";
    }
    return "?";
}

std::string BaseModel::describe() const {
    if (kind == BaseKind::Point) return "point";
    if (kind == BaseKind::Sphere) return "sphere(" + std::to_string(dim()) + ")";
    return "projective(" + std::to_string(k) + ")";
}

std::vector<BasisClass> BaseModel::homology_basis() const {
    switch (kind) {
        case BaseKind::Point: return {{"pt", 0}};
        case BaseKind::Sphere: return {{"pt", 0}, {"S", dim()}};
        case BaseKind::Projective: {
            std::vector<BasisClass> out;
            for (int j = 0; j <= k; ++j)
                out.push_back({"h" + std::to_string(j), 2 * (k - j)});
            return out;
        }
    }
    return {};
}

Matrix BaseModel::homology_pairing() const {
    switch (kind) {
        case BaseKind::Point: return {{1}};
        case BaseKind::Sphere: return {{0, 1}, {1, 0}};
        case BaseKind::Projective: {
            Matrix p(k + 1, std::vector<Rational>(k + 1, 0));
            for (int i = 0; i <= k; ++i) p[i][k - i] = 1;
            return p;
        }
    }
    return {};
}

int BaseModel::fundamental_index() const {
    switch (kind) {
        case BaseKind::Point: return 0;
        case BaseKind::Sphere: return 1;
        case BaseKind::Projective: return 0;  // h0 = [B]
    }
    return 0;
}

int BaseModel::point_index() const {
    switch (kind) {
        case BaseKind::Point: return 0;
        case BaseKind::Sphere: return 0;
        case BaseKind::Projective: return k;  // hk = pt
    }
    return 0;
}

std::vector<std::pair<int, Rational>> BaseModel::intersect(int i, int j) const {
    switch (kind) {
        case BaseKind::Point:
            return {{0, 1}};
        case BaseKind::Sphere: {
            if (i == 1 && j == 1) return {{1, 1}};          // [S] is the unit
            if (i + j == 1) return {{0, 1}};                // [S] . pt = pt
            return {};                                      // pt . pt = 0
        }
        case BaseKind::Projective: {
            const int s = i + j;
            if (s <= k) return {{s, 1}};
            return {};
        }
    }
    return {};
}

bool BaseModel::slot_valid(int j) const {
    if (j < 0 || j > k) return false;
    if (kind == BaseKind::Sphere) return j == 0 || j == k;
    if (kind == BaseKind::Point) return j == 0;
    return true;
}

BaseModel base_point() { return BaseModel{BaseKind::Point, 0, 0}; }

BaseModel base_sphere(int dim) {
    if (dim < 2 || dim % 2 != 0)
        throw ValidationError("sphere base needs positive even dimension, got " +
                              std::to_string(dim));
    return BaseModel{BaseKind::Sphere, dim / 2, 0};
}

BaseModel base_projective(int k) {
    if (k < 1) throw ValidationError("projective base needs k >= 1");
    return BaseModel{BaseKind::Projective, k, 0};
}

BaseModel make_base(BaseKind kind, int dim, const Rational& euler_of_Y) {
    BaseModel base;
    switch (kind) {
        case BaseKind::Point:
            if (dim != 0) throw ValidationError("point base must have dim 0");
            base = base_point();
            break;
        case BaseKind::Sphere: base = base_sphere(dim); break;
        case BaseKind::Projective:
            if (dim < 2 || dim % 2 != 0)
                throw ValidationError("projective base needs positive even dimension");
            base = base_projective(dim / 2);
            break;
    }
    if (euler_of_Y != 0 && !base.has_degree2())
        throw ValidationError("base " + base.describe() +
                              " has no degree-2 cohomology; euler_of_Y must be 0");
    base.euler_of_Y = euler_of_Y;
    return base;
}

BaseCohom cohom_zero(const BaseModel& base) { return BaseCohom(base.cohom_slots(), 0); }

BaseCohom cohom_unit(const BaseModel& base) {
    BaseCohom c = cohom_zero(base);
    c[0] = 1;
    return c;
}

BaseCohom cohom_gen2(const BaseModel& base, const Rational& c) {
    BaseCohom out = cohom_zero(base);
    if (c == 0) return out;
    if (!base.has_degree2())
        throw ValidationError("base " + base.describe() +
                              " has no degree-2 cohomology; expression must be 0");
    out[1] = c;
    return out;
}

BaseCohom cohom_add(const BaseCohom& a, const BaseCohom& b) {
    BaseCohom out = a;
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

BaseCohom cohom_scale(const BaseCohom& a, const Rational& c) {
    BaseCohom out = a;
    for (auto& x : out) x *= c;
    return out;
}

BaseCohom cohom_mul(const BaseModel& base, const BaseCohom& a, const BaseCohom& b) {
    BaseCohom out = cohom_zero(base);
    const int slots = base.cohom_slots();
    for (int i = 0; i < slots; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < slots && i + j < slots; ++j) {
            if (b[j] == 0) continue;
            if (!base.slot_valid(i + j)) continue;  // relation ideal kills it
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

bool cohom_is_zero(const BaseCohom& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::string cohom_to_string(const BaseModel& base, const BaseCohom& a) {
    if (cohom_is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < base.cohom_slots(); ++j) {
        if (a[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << format_rational(a[j]);
        if (j == 1) os << " h";
        else if (j > 1) os << " h^" << j;
    }
    return os.str();
}

std::map<int, Rational> poincare_dual(const BaseModel& base, const BaseCohom& a) {
    std::map<int, Rational> out;
    for (int j = 0; j < base.cohom_slots(); ++j) {
        if (a[j] == 0) continue;
        int idx = -1;
        switch (base.kind) {
            case BaseKind::Point: idx = 0; break;
            case BaseKind::Sphere: idx = (j == 0) ? 1 : 0; break;
            case BaseKind::Projective: idx = j; break;
        }
        out[idx] += a[j];
    }
    return out;
}

ObstructionRingElement ObstructionRingElement::unit(const BaseModel& base) {
    ObstructionRingElement e(base);
    e.add_term(0, cohom_unit(base));
    return e;
}

void ObstructionRingElement::add_term(int eK_power, const BaseCohom& coeff) {
    if (cohom_is_zero(coeff)) return;
    auto it = by_power_.find(eK_power);
    if (it == by_power_.end()) {
        by_power_[eK_power] = coeff;
        return;
    }
    it->second = cohom_add(it->second, coeff);
    if (cohom_is_zero(it->second)) by_power_.erase(it);
}

ObstructionRingElement ObstructionRingElement::operator*(
    const ObstructionRingElement& rhs) const {
    if (!(base_ == rhs.base_))
        throw ModelMismatch("obstruction ring elements over different bases");
    ObstructionRingElement out(base_);
    for (const auto& [pa, ca] : by_power_)
        for (const auto& [pb, cb] : rhs.by_power_)
            out.add_term(pa + pb, cohom_mul(base_, ca, cb));
    return out;
}

BaseCohom ObstructionRingElement::substitute_eK() const {
    const BaseCohom e = cohom_gen2(base_, base_.euler_of_Y);
    BaseCohom out = cohom_zero(base_);
    for (const auto& [p, c] : by_power_) {
        BaseCohom power = cohom_unit(base_);
        for (int i = 0; i < p; ++i) power = cohom_mul(base_, power, e);
        out = cohom_add(out, cohom_mul(base_, power, c));
    }
    return out;
}

std::optional<int> ObstructionRingElement::degree() const {
    std::optional<int> deg;
    for (const auto& [p, c] : by_power_)
        for (int j = 0; j < base_.cohom_slots(); ++j) {
            if (c[j] == 0) continue;
            const int d = 2 * p + 2 * j;
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    return deg;
}

std::string ObstructionRingElement::to_string() const {
    if (by_power_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = by_power_.rbegin(); it != by_power_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << cohom_to_string(base_, it->second) << ")";
        if (it->first == 1) os << " eK";
        else if (it->first > 1) os << " eK^" << it->first;
    }
    return os.str();
}

long long virtual_index(const std::vector<long long>& weights) {
    long long index = 0;
    for (long long w : weights) {
        if (w > 0)
            throw PositiveWeightAtMax("weight " + std::to_string(w) +
                                      " > 0 at the maximum fixed set");
        if (w <= -1) index += 2 * (-w - 1);
    }
    return index;
}

ObstructionRingElement euler_obstruction(const std::vector<long long>& weights,
                                         const BaseModel& base,
                                         const std::vector<Rational>& eL) {
    if (eL.size() != weights.size())
        throw ArityMismatch("need one eL expression per weight: " +
                            std::to_string(weights.size()) + " weights, " +
                            std::to_string(eL.size()) + " expressions");
    virtual_index(weights);  // rejects positive weights
    ObstructionRingElement out = ObstructionRingElement::unit(base);
    for (size_t i = 0; i < weights.size(); ++i) {
        const long long n_i = -weights[i] - 2;
        if (n_i < 0) continue;
        const BaseCohom eLi = cohom_gen2(base, eL[i]);
        for (long long j = 0; j <= n_i; ++j) {
            ObstructionRingElement factor(base);
            factor.add_term(1, cohom_scale(cohom_unit(base), Rational(j + 1)));
            factor.add_term(0, eLi);
            out = out * factor;
        }
    }
    return out;
}

std::vector<std::pair<int, BaseCohom>> expand_euler(const ObstructionRingElement& e) {
    std::vector<std::pair<int, BaseCohom>> out;
    for (auto it = e.powers().rbegin(); it != e.powers().rend(); ++it)
        out.emplace_back(it->first, it->second);
    return out;
}

Rational euler_top_coefficient(const std::vector<long long>& weights) {
    Rational top = 1;
    for (long long w : weights) {
        const long long n_i = -w - 2;
        for (long long j = 2; j <= n_i + 1; ++j) top *= j;
    }
    return top;
}

std::string MinimalityCertificate::to_string() const {
    std::ostringstream os;
    os << (certified ? "CERTIFIED" : "NOT CERTIFIED") << ":";
    for (size_t i = 0; i < facts.size(); ++i) os << (i ? "; " : " ") << facts[i];
    return os.str();
}

QCClass leading_qc_class(const CircleAction& action, const BaseModel& base,
                         const std::vector<Rational>& eL) {
    validate_action(action);
    if (!action.f_max_class.is_point_class())
        throw UnsupportedFmax("leading term needs a point-class maximum fixed set, got " +
                              action.f_max_class.to_string());
    const ObstructionRingElement e = euler_obstruction(action.weights_at_max, base, eL);
    const BaseCohom reduced = e.substitute_eK();
    const std::map<int, Rational> dual = poincare_dual(base, reduced);
    // Lower t-order terms are never derived here, so the class is marked
    // incomplete even when the reduced Euler class vanishes.
    QCClass out(base, action.model, false);
    const NovikovScalar twist(1, -action.m_max(), action.h_max);
    for (const auto& [bidx, bc] : dual)
        for (const auto& [fidx, fc] : action.f_max_class.coeffs())
            out.add_term(bidx, fidx, twist * NovikovScalar(bc * fc, 0, 0));
    return out;
}

MinimalityCertificate minimality_certificate(const CircleAction& action, const BaseModel& base) {
    MinimalityCertificate cert;
    cert.index = virtual_index(action.weights_at_max);
    cert.base_dim = base.dim();
    cert.bound = action.h_max;

    const bool index_matches = cert.index == cert.base_dim;
    if (base.dim() == 0) {
        cert.euler_power_nonzero = true;  // vacuous
    } else {
        BaseCohom power = cohom_unit(base);
        const BaseCohom e = cohom_gen2(base, base.euler_of_Y);
        for (int i = 0; i < base.k; ++i) power = cohom_mul(base, power, e);
        cert.euler_power_nonzero = !cohom_is_zero(power);
    }
    cert.certified = index_matches && cert.euler_power_nonzero;

    if (index_matches)
        cert.facts.push_back("I(gamma) = " + std::to_string(cert.index) + " = dim B");
    else
        cert.facts.push_back("I(gamma) = " + std::to_string(cert.index) + " != dim B = " +
                             std::to_string(cert.base_dim));
    if (base.dim() == 0)
        cert.facts.push_back("dim B = 0, Euler condition vacuous");
    else if (cert.euler_power_nonzero)
        cert.facts.push_back("e^" + std::to_string(base.k) + " != 0");
    else
        cert.facts.push_back("e^" + std::to_string(base.k) + " = 0");
    if (cert.certified)
        cert.facts.push_back("bound L+ >= " + format_rational(cert.bound));
    return cert;
}

}  // namespace qclass
