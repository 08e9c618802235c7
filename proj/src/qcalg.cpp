#include "qclass/qcalg.hpp"

#include <sstream>

#include "qclass/errors.hpp"
#include "qclass/seidel.hpp"

namespace qclass {

BaseClass base_fundamental(const BaseModel& base) { return {{base.fundamental_index(), 1}}; }

BaseClass base_point_class(const BaseModel& base) { return {{base.point_index(), 1}}; }

QCClass QCClass::unit(const BaseModel& base, const ModelPtr& model) {
    QCClass out(base, model);
    out.add_term(base.fundamental_index(), model->fundamental_class_index(),
                 NovikovScalar::one());
    return out;
}

NovikovScalar QCClass::coeff(int base_idx, int fiber_idx) const {
    const auto it = coeffs_.find({base_idx, fiber_idx});
    return it == coeffs_.end() ? NovikovScalar() : it->second;
}

void QCClass::add_term(int base_idx, int fiber_idx, const NovikovScalar& scalar) {
    if (scalar.is_zero()) return;
    const std::pair<int, int> key{base_idx, fiber_idx};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_[key] = scalar;
        return;
    }
    it->second += scalar;
    if (it->second.is_zero()) coeffs_.erase(it);
}

QCClass& QCClass::operator+=(const QCClass& rhs) {
    if (rhs.coeffs_.empty() && !rhs.model_) return *this;
    if (!model_) {
        base_ = rhs.base_;
        model_ = rhs.model_;
    }
    if (!(base_ == rhs.base_) || model_ != rhs.model_)
        throw ModelMismatch("QC classes over different base or fiber models");
    complete_ = complete_ && rhs.complete_;
    for (const auto& [key, s] : rhs.coeffs_) add_term(key.first, key.second, s);
    return *this;
}

QCClass QCClass::scaled(const NovikovScalar& s) const {
    QCClass out(base_, model_, complete_);
    for (const auto& [key, c] : coeffs_) out.add_term(key.first, key.second, c * s);
    return out;
}

Rational QCClass::valuation() const {
    if (coeffs_.empty()) throw ZeroElement("valuation of the zero QC class");
    bool first = true;
    Rational best = 0;
    for (const auto& [key, s] : coeffs_) {
        const Rational v = s.valuation();
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

std::string QCClass::to_string() const {
    if (coeffs_.empty()) return "0";
    const auto blabels = base_.homology_basis();
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, s] : coeffs_) {
        if (!first) os << "\n";
        first = false;
        os << blabels[key.first].label << " ⊗ " << model_->basis[key.second].label
           << " ⊗ (" << s.to_string() << ")";
    }
    return os.str();
}

std::string QCClass::serialize() const {
    return std::string("complete: ") + (complete_ ? "true" : "false") + "\n" + to_string();
}

QCClass QCClass::parse(const BaseModel& base, const ModelPtr& model, const std::string& text) {
    QCClass out(base, model);
    const auto blabels = base.homology_basis();
    auto base_index = [&](const std::string& label) {
        for (size_t i = 0; i < blabels.size(); ++i)
            if (blabels[i].label == label) return static_cast<int>(i);
        throw ParseError("unknown base class '" + label + "'");
    };
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line == "0") continue;
        if (line.rfind("complete:", 0) == 0) {
            const std::string v = line.substr(9);
            const auto vb = v.find_first_not_of(" \t");
            const std::string val = vb == std::string::npos ? "" : v.substr(vb);
            if (val == "true") out.set_complete(true);
            else if (val == "false") out.set_complete(false);
            else throw ParseError("bad completeness marker: '" + line + "'");
            continue;
        }
        const std::string sep = " ⊗ ";
        const size_t p1 = line.find(sep);
        if (p1 == std::string::npos)
            throw ParseError("QC class line without tensor separator: '" + line + "'");
        const size_t p2 = line.find(sep, p1 + sep.size());
        if (p2 == std::string::npos)
            throw ParseError("QC class line needs two tensor separators: '" + line + "'");
        const std::string blabel = line.substr(0, p1);
        const std::string flabel = line.substr(p1 + sep.size(), p2 - p1 - sep.size());
        std::string rest = line.substr(p2 + sep.size());
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw ParseError("QC class scalar must be parenthesized: '" + rest + "'");
        rest = rest.substr(1, rest.size() - 2);
        out.add_term(base_index(blabel), model->basis_index(flabel), NovikovScalar::parse(rest));
    }
    return out;
}

QuantumElement eval_functional(const QCClass& c, const BaseClass& a) {
    const BaseModel& base = c.base();
    const ModelPtr& model = c.model();
    if (!model) throw ModelMismatch("eval_functional on an unbound QC class");
    const auto bbasis = base.homology_basis();
    for (const auto& [idx, coeff] : a)
        if (idx < 0 || idx >= static_cast<int>(bbasis.size()))
            throw ModelMismatch("base class index out of range");
    // homogeneity of the argument
    std::optional<int> adeg;
    for (const auto& [idx, coeff] : a) {
        if (coeff == 0) continue;
        if (!adeg) adeg = bbasis[idx].degree;
        else if (*adeg != bbasis[idx].degree)
            throw ValidationError("eval_functional needs a homogeneous base class");
    }
    const Matrix bp = base.homology_pairing();
    const auto duals = dual_basis(model);
    QuantumElement out(model);
    for (const auto& [key, s] : c.coeffs()) {
        const auto& [bidx, fidx] = key;
        Rational pb = 0;
        for (const auto& [aidx, ac] : a) pb += bp[bidx][aidx] * ac;
        if (pb == 0) continue;
        const HomologyClass fiber(model, fidx);
        for (size_t i = 0; i < model->basis.size(); ++i) {
            const Rational w = pairing_eval(fiber, duals[i]);
            if (w == 0) continue;
            out.add_term(static_cast<int>(i), s * NovikovScalar(pb * w, 0, 0));
        }
    }
    return out;
}

QCClass qc_cup(const QCClass& x, const QCClass& y) {
    if (!x.model() || x.model() != y.model() || !(x.base() == y.base()))
        throw ModelMismatch("cup product of QC classes over different base or fiber models");
    const BaseModel& base = x.base();
    const ModelPtr& model = x.model();
    const auto duals = dual_basis(model);
    QCClass out(base, model, x.complete() && y.complete());
    for (const auto& [kx, sx] : x.coeffs()) {
        for (const auto& [ky, sy] : y.coeffs()) {
            const auto base_parts = base.intersect(kx.first, ky.first);
            if (base_parts.empty()) continue;
            const NovikovScalar s = sx * sy;
            for (size_t cls = 0; cls < model->classes.size(); ++cls) {
                const HomologyClass part =
                    basis_product_part(model, duals, static_cast<int>(cls), kx.second, ky.second);
                if (part.is_zero()) continue;
                const CurveClass& A = model->classes[cls];
                const NovikovScalar st = s * NovikovScalar(1, -A.c1, -A.omega);
                for (const auto& [bidx, bc] : base_parts)
                    for (const auto& [fidx, fc] : part.coeffs())
                        out.add_term(bidx, fidx, st * NovikovScalar(bc * fc, 0, 0));
            }
        }
    }
    return out;
}

QCClass whitney_total(const QCClass& p1, const QCClass& p2) { return qc_cup(p1, p2); }

MultOperator mult_operator(const QCClass& c) { return MultOperator(c); }

QuantumElement psi(const QCClass& c) { return psi_marked(c).value; }

MarkedQuantumElement psi_marked(const QCClass& c) {
    const auto bbasis = c.base().homology_basis();
    bool has_fundamental = false;
    for (const auto& b : bbasis)
        if (b.degree == c.base().dim()) has_fundamental = true;
    if (!has_fundamental)
        throw NoFundamentalClass("base " + c.base().describe() + " has no fundamental class");
    return {eval_functional(c, base_fundamental(c.base())), c.complete()};
}

QuantumElement pontryagin_psi(const QuantumElement& a, const QuantumElement& b) {
    return qmul(a, b);
}

QCClass base_extend(const QCClass& point_class, const BaseModel& target) {
    if (point_class.base().kind != BaseKind::Point)
        throw ModelMismatch("base_extend needs a point-base class");
    QCClass out(target, point_class.model(), point_class.complete());
    const int fund = target.fundamental_index();
    for (const auto& [key, s] : point_class.coeffs()) out.add_term(fund, key.second, s);
    return out;
}

bool psi_agreement(const QCClass& a, const QCClass& b) { return psi(a) == psi(b); }

std::string DegreeAuditReport::to_string() const {
    if (ok()) return "degree audit clean";
    std::ostringstream os;
    for (const auto& v : violations) os << "degree violation: " << v << "\n";
    return os.str();
}

DegreeAuditReport degree_audit(const QCClass& c) {
    DegreeAuditReport report;
    if (!c.model()) return report;
    const auto bbasis = c.base().homology_basis();
    const int expected_base = 2 * c.model()->half_dim() + c.base().dim();
    for (const auto& [key, s] : c.coeffs()) {
        const int bdeg = bbasis[key.first].degree;
        const int fdeg = c.model()->basis[key.second].degree;
        for (const auto& [mono, coeff] : s.terms()) {
            const long long expected = expected_base - 2 * mono.q_exp;
            if (bdeg + fdeg != expected)
                report.violations.push_back(
                    bbasis[key.first].label + " ⊗ " + c.model()->basis[key.second].label +
                    " ⊗ q^" + std::to_string(mono.q_exp) + ": degree " +
                    std::to_string(bdeg + fdeg) + " != " + std::to_string(expected));
        }
    }
    return report;
}

std::string HoferCertificate::kind_name() const {
    return kind == BoundKind::HomotopyClass ? "homotopy-class" : "bordism-class";
}

std::string HoferCertificate::to_string() const {
    return "L+ >= " + format_rational(bound) + " (" + kind_name() + " bound, from " + source + ")";
}

HoferCertificate hofer_bound(const QCClass& c, BoundKind kind) {
    HoferCertificate cert;
    cert.kind = kind;
    if (kind == BoundKind::HomotopyClass) {
        cert.bound = c.valuation();
        cert.source = "valuation of the characteristic class";
    } else {
        const QuantumElement image = psi(c);
        if (image.is_zero())
            throw ZeroElement("bordism bound of a class with zero fundamental evaluation");
        cert.bound = image.valuation();
        cert.source = "valuation of the fundamental-class evaluation";
    }
    return cert;
}

}  // namespace qclass
