#include "qclass/quantum.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "qclass/errors.hpp"

namespace qclass {

QuantumElement::QuantumElement(ModelPtr model, int basis_idx, NovikovScalar scalar)
    : model_(std::move(model)) {
    add_term(basis_idx, scalar);
}

QuantumElement QuantumElement::unit(const ModelPtr& model) {
    return QuantumElement(model, model->fundamental_class_index(), NovikovScalar::one());
}

QuantumElement QuantumElement::from_homology(const HomologyClass& h) {
    QuantumElement out(h.model());
    for (const auto& [idx, c] : h.coeffs()) out.add_term(idx, NovikovScalar(c, 0, 0));
    return out;
}

NovikovScalar QuantumElement::coeff(int basis_idx) const {
    const auto it = coeffs_.find(basis_idx);
    return it == coeffs_.end() ? NovikovScalar() : it->second;
}

void QuantumElement::add_term(int basis_idx, const NovikovScalar& scalar) {
    if (scalar.is_zero()) return;
    auto it = coeffs_.find(basis_idx);
    if (it == coeffs_.end()) {
        coeffs_[basis_idx] = scalar;
        return;
    }
    it->second += scalar;
    if (it->second.is_zero()) coeffs_.erase(it);
}

QuantumElement& QuantumElement::operator+=(const QuantumElement& rhs) {
    if (rhs.coeffs_.empty()) return *this;
    if (!model_) model_ = rhs.model_;
    if (model_ != rhs.model_) throw ModelMismatch("quantum elements over different models");
    for (const auto& [idx, s] : rhs.coeffs_) add_term(idx, s);
    return *this;
}

QuantumElement& QuantumElement::operator-=(const QuantumElement& rhs) {
    if (rhs.coeffs_.empty()) return *this;
    if (!model_) model_ = rhs.model_;
    if (model_ != rhs.model_) throw ModelMismatch("quantum elements over different models");
    for (const auto& [idx, s] : rhs.coeffs_) add_term(idx, -s);
    return *this;
}

QuantumElement QuantumElement::scaled(const NovikovScalar& s) const {
    QuantumElement out(model_);
    for (const auto& [idx, c] : coeffs_) out.add_term(idx, c * s);
    return out;
}

Rational QuantumElement::valuation() const {
    if (coeffs_.empty()) throw ZeroElement("valuation of the zero quantum element");
    bool first = true;
    Rational best = 0;
    for (const auto& [idx, s] : coeffs_) {
        const Rational v = s.valuation();
        if (first || v > best) best = v;
        first = false;
    }
    return best;
}

std::string QuantumElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, s] : coeffs_) {
        if (!first) os << "\n";
        first = false;
        os << model_->basis[idx].label << " ⊗ (" << s.to_string() << ")";
    }
    return os.str();
}

QuantumElement QuantumElement::parse(const ModelPtr& model, const std::string& text) {
    QuantumElement out(model);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        // trim
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line == "0") continue;
        const std::string sep = " ⊗ ";
        const size_t pos = line.find(sep);
        if (pos == std::string::npos)
            throw ParseError("quantum element line without tensor separator: '" + line + "'");
        const std::string label = line.substr(0, pos);
        std::string rest = line.substr(pos + sep.size());
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw ParseError("quantum element scalar must be parenthesized: '" + rest + "'");
        rest = rest.substr(1, rest.size() - 2);
        out.add_term(model->basis_index(label), NovikovScalar::parse(rest));
    }
    return out;
}

HomologyClass basis_product_part(const ModelPtr& model,
                                 const std::vector<HomologyClass>& duals, int cls, int i, int j) {
    HomologyClass part(model);
    for (size_t k = 0; k < model->basis.size(); ++k) {
        const Rational g = model->gw3_value(cls, i, j, static_cast<int>(k));
        if (g == 0) continue;
        part += duals[k] * g;
    }
    return part;
}

QuantumElement qmul(const QuantumElement& a, const QuantumElement& b) {
    if (!a.model() || a.model() != b.model())
        throw ModelMismatch("quantum product of elements over different models");
    const ModelPtr& model = a.model();
    const auto duals = dual_basis(model);
    QuantumElement out(model);
    for (const auto& [i, sa] : a.coeffs()) {
        for (const auto& [j, sb] : b.coeffs()) {
            const NovikovScalar s = sa * sb;
            for (size_t cls = 0; cls < model->classes.size(); ++cls) {
                const HomologyClass part =
                    basis_product_part(model, duals, static_cast<int>(cls), i, j);
                if (part.is_zero()) continue;
                const CurveClass& A = model->classes[cls];
                const NovikovScalar twist(1, -A.c1, -A.omega);
                const NovikovScalar st = s * twist;
                for (const auto& [m, c] : part.coeffs())
                    out.add_term(m, st * NovikovScalar(c, 0, 0));
            }
        }
    }
    return out;
}

std::optional<long long> qdegree(const QuantumElement& a) {
    if (a.is_zero()) throw ZeroElement("degree of the zero quantum element");
    std::optional<long long> deg;
    for (const auto& [idx, s] : a.coeffs()) {
        for (const auto& [mono, c] : s.terms()) {
            const long long d = a.model()->basis[idx].degree + 2 * mono.q_exp;
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    }
    return deg;
}

namespace {

// A single unknown or output monomial of the inversion window.
struct Mono {
    int idx;
    long long q;
    Rational t;

    bool operator<(const Mono& o) const {
        if (t != o.t) return t > o.t;
        if (q != o.q) return q < o.q;
        return idx < o.idx;
    }
    bool operator==(const Mono& o) const { return idx == o.idx && q == o.q && t == o.t; }
};

constexpr size_t kWindowBudget = 100000;

}  // namespace

QuantumElement qinvert(const QuantumElement& a, const Rational& t_floor) {
    if (a.is_zero()) throw ZeroElement("cannot invert the zero quantum element");
    const ModelPtr& model = a.model();
    const auto duals = dual_basis(model);
    const size_t nb = model->basis.size();
    const size_t nc = model->classes.size();

    // Resolved basis products e_i *_A e_j, indexed [cls][i][j].
    std::vector<std::vector<std::vector<HomologyClass>>> parts(
        nc, std::vector<std::vector<HomologyClass>>(nb, std::vector<HomologyClass>(nb)));
    for (size_t cls = 0; cls < nc; ++cls)
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = 0; j < nb; ++j)
                parts[cls][i][j] =
                    basis_product_part(model, duals, static_cast<int>(cls), static_cast<int>(i),
                                       static_cast<int>(j));

    // Flattened terms of a.
    struct ATerm {
        int idx;
        long long q;
        Rational t;
        Rational c;
    };
    std::vector<ATerm> aterms;
    Rational a_min_t = 0, a_max_t = 0;
    bool first = true;
    for (const auto& [idx, s] : a.coeffs()) {
        for (const auto& [mono, c] : s.terms()) {
            aterms.push_back({idx, mono.q_exp, mono.t_exp, c});
            if (first || mono.t_exp < a_min_t) a_min_t = mono.t_exp;
            if (first || mono.t_exp > a_max_t) a_max_t = mono.t_exp;
            first = false;
        }
    }

    Rational omega_max = 0;
    for (const auto& A : model->classes)
        if (A.omega > omega_max) omega_max = A.omega;
    const Rational b_t_hi = omega_max - a_min_t;
    const Rational b_t_lo = t_floor - a_max_t;

    const Mono unit_mono{model->fundamental_class_index(), 0, 0};

    std::set<Mono> unknowns, outputs;
    outputs.insert(unit_mono);
    std::vector<Mono> frontier{unit_mono};

    // Everything (cls, a-term, j -> k) that can land on a given output.
    auto preimages_of = [&](const Mono& o, std::vector<Mono>& sink) {
        for (size_t cls = 0; cls < nc; ++cls) {
            const CurveClass& A = model->classes[cls];
            for (const auto& at : aterms) {
                const Rational t = o.t - at.t + A.omega;
                if (t < b_t_lo || t > b_t_hi) continue;
                const long long q = o.q - at.q + A.c1;
                for (size_t j = 0; j < nb; ++j)
                    if (parts[cls][at.idx][j].coeff(o.idx) != 0)
                        sink.push_back({static_cast<int>(j), q, t});
            }
        }
    };
    auto outputs_of = [&](const Mono& u, std::vector<Mono>& sink) {
        for (size_t cls = 0; cls < nc; ++cls) {
            const CurveClass& A = model->classes[cls];
            for (const auto& at : aterms) {
                const Rational t = at.t + u.t - A.omega;
                if (t < t_floor) continue;
                const long long q = at.q + u.q - A.c1;
                for (const auto& [k, c] : parts[cls][at.idx][u.idx].coeffs())
                    sink.push_back({k, q, t});
            }
        }
    };

    while (!frontier.empty()) {
        std::vector<Mono> new_unknowns;
        for (const auto& o : frontier) preimages_of(o, new_unknowns);
        std::vector<Mono> added_u;
        for (const auto& u : new_unknowns)
            if (unknowns.insert(u).second) added_u.push_back(u);
        std::vector<Mono> new_outputs;
        for (const auto& u : added_u) outputs_of(u, new_outputs);
        frontier.clear();
        for (const auto& o : new_outputs)
            if (outputs.insert(o).second) frontier.push_back(o);
        if (unknowns.size() + outputs.size() > kWindowBudget)
            throw NotInvertibleAtFloor("inversion window budget exceeded at floor " +
                                       format_rational(t_floor));
    }

    std::vector<Mono> ulist(unknowns.begin(), unknowns.end());
    std::vector<Mono> olist(outputs.begin(), outputs.end());
    std::map<Mono, size_t> orow;
    for (size_t r = 0; r < olist.size(); ++r) orow[olist[r]] = r;

    Matrix sys(olist.size(), std::vector<Rational>(ulist.size(), 0));
    for (size_t col = 0; col < ulist.size(); ++col) {
        const Mono& u = ulist[col];
        for (size_t cls = 0; cls < nc; ++cls) {
            const CurveClass& A = model->classes[cls];
            for (const auto& at : aterms) {
                const Rational t = at.t + u.t - A.omega;
                if (t < t_floor) continue;
                const long long q = at.q + u.q - A.c1;
                for (const auto& [k, c] : parts[cls][at.idx][u.idx].coeffs()) {
                    const auto it = orow.find({k, q, t});
                    if (it != orow.end()) sys[it->second][col] += at.c * c;
                }
            }
        }
    }
    std::vector<Rational> rhs(olist.size(), 0);
    rhs[orow[unit_mono]] = 1;

    std::vector<Rational> solution;
    if (!solve_linear_system(sys, rhs, solution))
        throw NotInvertibleAtFloor("no inverse exists within the window at floor " +
                                   format_rational(t_floor));

    QuantumElement b(model);
    for (size_t col = 0; col < ulist.size(); ++col)
        if (solution[col] != 0)
            b.add_term(ulist[col].idx, NovikovScalar(solution[col], ulist[col].q, ulist[col].t));

    const QuantumElement residue = qmul(a, b) - QuantumElement::unit(model);
    for (const auto& [idx, s] : residue.coeffs())
        if (!s.truncated(t_floor).is_zero())
            throw NotInvertibleAtFloor("inversion residue above the floor " +
                                       format_rational(t_floor));
    return b;
}

bool seidel_product_check(const QuantumElement& s1, const QuantumElement& s2,
                          const QuantumElement& expected) {
    return qmul(s1, s2) == expected;
}

}  // namespace qclass
