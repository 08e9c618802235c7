#include "qclass/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qclass/errors.hpp"

namespace qclass {

namespace {

std::array<int, 3> sorted(std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

int ManifoldModel::basis_index(const std::string& label) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].label == label) return static_cast<int>(i);
    throw ModelMismatch("unknown basis class '" + label + "' in model " + name);
}

int ManifoldModel::class_index(const std::string& label) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].label == label) return static_cast<int>(i);
    throw ModelMismatch("unknown curve class '" + label + "' in model " + name);
}

Rational ManifoldModel::gw3_value(int cls, int i, int j, int k) const {
    const std::array<int, 3> key = sorted({i, j, k});
    for (const auto& e : gw3)
        if (e.cls == cls && sorted(e.idx) == key) return e.value;
    return 0;
}

int ManifoldModel::point_class_index() const {
    int found = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree != 0) continue;
        if (found >= 0) throw NoFundamentalClass("model " + name + " has several degree-0 classes");
        found = static_cast<int>(i);
    }
    if (found < 0) throw NoFundamentalClass("model " + name + " has no degree-0 class");
    return found;
}

int ManifoldModel::fundamental_class_index() const {
    int found = -1;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree != dim) continue;
        if (found >= 0)
            throw NoFundamentalClass("model " + name + " has several top-degree classes");
        found = static_cast<int>(i);
    }
    if (found < 0) throw NoFundamentalClass("model " + name + " has no top-degree class");
    return found;
}

HomologyClass::HomologyClass(ModelPtr model, int basis_idx, const Rational& coeff)
    : model_(std::move(model)) {
    add(basis_idx, coeff);
}

Rational HomologyClass::coeff(int basis_idx) const {
    const auto it = coeffs_.find(basis_idx);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void HomologyClass::add(int basis_idx, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = coeffs_.find(basis_idx);
    if (it == coeffs_.end()) {
        coeffs_[basis_idx] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
}

std::optional<int> HomologyClass::degree() const {
    if (coeffs_.empty()) throw ZeroElement("degree of the zero homology class");
    std::optional<int> deg;
    for (const auto& [idx, c] : coeffs_) {
        const int d = model_->basis[idx].degree;
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

bool HomologyClass::is_point_class() const {
    if (coeffs_.empty()) return false;
    const auto d = degree();
    return d && *d == 0;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& rhs) {
    if (rhs.coeffs_.empty()) return *this;
    if (!model_) model_ = rhs.model_;
    if (model_ != rhs.model_) throw ModelMismatch("homology classes live over different models");
    for (const auto& [idx, c] : rhs.coeffs_) add(idx, c);
    return *this;
}

HomologyClass HomologyClass::operator*(const Rational& scalar) const {
    HomologyClass out(model_);
    if (scalar == 0) return out;
    for (const auto& [idx, c] : coeffs_) out.coeffs_[idx] = c * scalar;
    return out;
}

std::string HomologyClass::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << format_rational(c) << " " << model_->basis[idx].label;
    }
    return os.str();
}

Rational pairing_eval(const HomologyClass& a, const HomologyClass& b) {
    if (!a.model() || !b.model() || a.model() != b.model())
        throw ModelMismatch("pairing of classes over different models");
    Rational out = 0;
    for (const auto& [i, ca] : a.coeffs())
        for (const auto& [j, cb] : b.coeffs()) out += ca * cb * a.model()->pairing[i][j];
    return out;
}

std::vector<HomologyClass> dual_basis(const ModelPtr& model) {
    const Matrix inv = invert_matrix(model->pairing);
    std::vector<HomologyClass> duals;
    duals.reserve(model->basis.size());
    for (size_t j = 0; j < model->basis.size(); ++j) {
        HomologyClass d(model);
        for (size_t i = 0; i < model->basis.size(); ++i) d.add(static_cast<int>(i), inv[i][j]);
        duals.push_back(std::move(d));
    }
    return duals;
}

std::string ValidationReport::to_string() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << "violation: " << v << "\n";
    return os.str();
}

ValidationReport validate_model(const ManifoldModel& m) {
    ValidationReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

    if (m.dim <= 0 || m.dim % 2 != 0)
        flag("dim must be a positive even integer, got " + std::to_string(m.dim));
    if (m.basis.empty()) flag("basis is empty");

    std::set<std::string> labels;
    for (const auto& b : m.basis) {
        if (b.label.empty()) flag("basis class with empty label");
        if (!labels.insert(b.label).second) flag("duplicate basis label '" + b.label + "'");
        if (b.degree < 0 || b.degree > m.dim || b.degree % 2 != 0)
            flag("basis class '" + b.label + "' has degree " + std::to_string(b.degree) +
                 " outside the even range [0, " + std::to_string(m.dim) + "]");
    }
    int deg0 = 0, degtop = 0;
    for (const auto& b : m.basis) {
        if (b.degree == 0) ++deg0;
        if (b.degree == m.dim) ++degtop;
    }
    if (deg0 != 1) flag("expected exactly one degree-0 basis class, found " + std::to_string(deg0));
    if (degtop != 1)
        flag("expected exactly one top-degree basis class, found " + std::to_string(degtop));

    const size_t nb = m.basis.size();
    bool pairing_shape_ok = m.pairing.size() == nb;
    for (const auto& row : m.pairing)
        if (row.size() != nb) pairing_shape_ok = false;
    if (!pairing_shape_ok) {
        flag("pairing matrix shape does not match the basis");
    } else {
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = 0; j < nb; ++j) {
                if (m.pairing[i][j] != m.pairing[j][i]) {
                    flag("pairing is not symmetric at (" + m.basis[i].label + ", " +
                         m.basis[j].label + ")");
                }
                if (m.pairing[i][j] != 0 && m.basis[i].degree + m.basis[j].degree != m.dim)
                    flag("pairing support violation at (" + m.basis[i].label + ", " +
                         m.basis[j].label + "): degrees do not sum to dim");
            }
        try {
            invert_matrix(m.pairing);
        } catch (const SingularPairing&) {
            flag("pairing matrix is singular");
        }
    }

    std::set<std::string> class_labels;
    int zero_classes = 0;
    for (const auto& c : m.classes) {
        if (!class_labels.insert(c.label).second)
            flag("duplicate curve class label '" + c.label + "'");
        if (c.omega < 0)
            flag("curve class '" + c.label + "' has negative omega " + format_rational(c.omega));
        if (c.is_zero_class()) ++zero_classes;
        else if (c.omega == 0)
            flag("curve class '" + c.label + "' has omega = 0 but c1 != 0");
    }
    if (zero_classes != 1)
        flag("expected exactly one zero curve class (c1 = 0, omega = 0), found " +
             std::to_string(zero_classes));

    // gw3 entries: index range, degree constraint, permutation consistency.
    std::map<std::pair<int, std::array<int, 3>>, Rational> canon;
    for (const auto& e : m.gw3) {
        if (e.cls < 0 || e.cls >= static_cast<int>(m.classes.size())) {
            flag("gw3 entry references an unknown curve class index");
            continue;
        }
        bool in_range = true;
        for (int idx : e.idx)
            if (idx < 0 || idx >= static_cast<int>(nb)) in_range = false;
        if (!in_range) {
            flag("gw3 entry has a basis index out of range");
            continue;
        }
        if (e.value != 0) {
            const int degsum =
                m.basis[e.idx[0]].degree + m.basis[e.idx[1]].degree + m.basis[e.idx[2]].degree;
            const long long expected = 2LL * m.dim - 2LL * m.classes[e.cls].c1;
            if (degsum != expected)
                flag("gw3(" + m.classes[e.cls].label + "; " + m.basis[e.idx[0]].label + ", " +
                     m.basis[e.idx[1]].label + ", " + m.basis[e.idx[2]].label +
                     ") violates the degree constraint");
        }
        std::array<int, 3> key = e.idx;
        std::sort(key.begin(), key.end());
        const auto [it, inserted] = canon.insert({{e.cls, key}, e.value});
        if (!inserted && it->second != e.value)
            flag("gw3 table is asymmetric at class " + m.classes[e.cls].label + ", indices (" +
                 std::to_string(e.idx[0]) + "," + std::to_string(e.idx[1]) + "," +
                 std::to_string(e.idx[2]) + ")");
    }

    // Unit compatibility: against the zero class, multiplying by the
    // fundamental class must reproduce the intersection pairing.
    if (zero_classes == 1 && deg0 == 1 && degtop == 1 && pairing_shape_ok) {
        int zero_cls = -1;
        for (size_t i = 0; i < m.classes.size(); ++i)
            if (m.classes[i].is_zero_class()) zero_cls = static_cast<int>(i);
        try {
            const int top = m.fundamental_class_index();
            for (size_t i = 0; i < nb; ++i)
                for (size_t j = i; j < nb; ++j)
                    if (m.gw3_value(zero_cls, top, static_cast<int>(i), static_cast<int>(j)) !=
                        m.pairing[i][j])
                        flag("zero-class gw3 with the fundamental class disagrees with the "
                             "pairing at (" +
                             m.basis[i].label + ", " + m.basis[j].label + ")");
        } catch (const NoFundamentalClass&) {
            // already flagged above
        }
    }
    return report;
}

ModelPtr preset_cpn(int n) {
    if (n < 1) throw ValidationError("cpn preset needs n >= 1");
    auto m = std::make_shared<ManifoldModel>();
    m->name = "cpn:" + std::to_string(n);
    m->dim = 2 * n;
    for (int i = 0; i <= n; ++i) m->basis.push_back({"p" + std::to_string(i), 2 * i});
    m->pairing.assign(n + 1, std::vector<Rational>(n + 1, 0));
    for (int i = 0; i <= n; ++i) m->pairing[i][n - i] = 1;
    for (int d = 0; d <= n; ++d)
        m->classes.push_back({std::to_string(d) + "L", static_cast<long long>(d) * (n + 1),
                              Rational(d)});
    for (int d = 0; d <= n; ++d) {
        const long long target = 2LL * n - static_cast<long long>(d) * (n + 1);
        if (target < 0) continue;
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = j; k <= n; ++k)
                    if (i + j + k == target) m->gw3.push_back({d, {i, j, k}, 1});
    }
    return m;
}

ModelPtr resolve_preset(const std::string& ref) {
    const std::string prefix = "cpn:";
    if (ref.rfind(prefix, 0) == 0) {
        const std::string arg = ref.substr(prefix.size());
        try {
            return preset_cpn(std::stoi(arg));
        } catch (const std::exception&) {
            throw ParseError("bad cpn preset reference '" + ref + "'");
        }
    }
    throw ParseError("unknown manifold preset '" + ref + "'");
}

}  // namespace qclass
