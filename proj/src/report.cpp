#include "qclass/report.hpp"

#include <sstream>

#include "qclass/errors.hpp"

namespace qclass {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string rat(const Rational& x, const ReportOptions& opt) {
    std::string out = format_rational(x);
    if (opt.decimal && denominator(x) != 1) out += " (~" + decimal_approx(x) + ")";
    return out;
}

std::string join_weights(const std::vector<long long>& weights) {
    std::ostringstream os;
    for (size_t i = 0; i < weights.size(); ++i) os << (i ? " " : "") << weights[i];
    return os.str();
}

// Shared gate: every task requires a valid manifold model.
bool model_gate(const Scene& scene, CommandResult& result) {
    const ValidationReport report = validate_model(*scene.model);
    if (report.ok()) return true;
    std::ostringstream os;
    os << "scene: " << scene.name << "\nmodel validation failed\n" << report.to_string();
    result.exit_code = 1;
    result.text = os.str();
    result.doc = ordered_json{{"scene", scene.name}, {"violations", report.violations}};
    return false;
}

ordered_json quantum_json(const QuantumElement& a) {
    ordered_json terms = ordered_json::array();
    for (const auto& [idx, s] : a.coeffs())
        terms.push_back({{"class", a.model()->basis[idx].label}, {"scalar", s.to_string()}});
    return terms;
}

ordered_json qcclass_json(const QCClass& c) {
    const auto blabels = c.base().homology_basis();
    ordered_json terms = ordered_json::array();
    for (const auto& [key, s] : c.coeffs())
        terms.push_back({{"base", blabels[key.first].label},
                         {"fiber", c.model()->basis[key.second].label},
                         {"scalar", s.to_string()}});
    return ordered_json{{"complete", c.complete()}, {"terms", terms}};
}

}  // namespace

std::string quantum_line(const QuantumElement& a) {
    std::string s = a.to_string();
    std::string::size_type pos = 0;
    while ((pos = s.find('\n', pos)) != std::string::npos) {
        s.replace(pos, 1, " + ");
        pos += 3;
    }
    return s;
}

CommandResult cmd_validate(const Scene& scene) {
    CommandResult result;
    std::ostringstream os;
    os << "scene: " << scene.name << "\n";
    os << "manifold: " << scene.manifold_ref << " (" << scene.model->name << ")\n";
    const ValidationReport report = validate_model(*scene.model);
    bool ok = report.ok();
    os << "model validation: " << (report.ok() ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations) os << "violation: " << v << "\n";

    std::string action_state = "absent";
    if (scene.action) {
        try {
            validate_action(*scene.action);
            action_state = "valid";
            os << "action: " << scene.action->name << " (valid)\n";
        } catch (const Error& e) {
            ok = false;
            action_state = e.what();
            os << "action: " << scene.action->name << " invalid: " << e.what() << "\n";
        }
    }
    if (scene.base) os << "base: " << scene.base->describe() << "\n";
    os << "eL expressions: " << scene.eL.size() << "\n";
    os << (ok ? "OK" : "FAILED") << "\n";

    result.exit_code = ok ? 0 : 1;
    result.text = os.str();
    result.doc = ordered_json{{"scene", scene.name},
                              {"manifold", scene.model->name},
                              {"violations", report.violations},
                              {"action", action_state},
                              {"ok", ok}};
    return result;
}

CommandResult cmd_qmul_table(const ModelPtr& model, const ReportOptions&) {
    CommandResult result;
    const ValidationReport report = validate_model(*model);
    if (!report.ok()) {
        result.exit_code = 1;
        result.text = "model validation failed\n" + report.to_string();
        result.doc = ordered_json{{"violations", report.violations}};
        return result;
    }
    std::ostringstream os;
    os << "quantum products for " << model->name << " (commutative; pairs i <= j)\n";
    ordered_json rows = ordered_json::array();
    const size_t nb = model->basis.size();
    for (size_t i = 0; i < nb; ++i) {
        for (size_t j = i; j < nb; ++j) {
            const QuantumElement prod =
                qmul(QuantumElement(model, static_cast<int>(i), NovikovScalar::one()),
                     QuantumElement(model, static_cast<int>(j), NovikovScalar::one()));
            const std::string line = quantum_line(prod);
            os << model->basis[i].label << " * " << model->basis[j].label << " = " << line
               << "\n";
            rows.push_back({{"left", model->basis[i].label},
                            {"right", model->basis[j].label},
                            {"product", line}});
        }
    }
    result.text = os.str();
    result.doc = ordered_json{{"model", model->name}, {"products", rows}};
    return result;
}

CommandResult cmd_index(const std::vector<long long>& weights) {
    CommandResult result;
    const long long index = virtual_index(weights);
    std::ostringstream os;
    os << "weights: " << join_weights(weights) << "\n";
    os << "I(gamma) = " << index << "\n";
    result.text = os.str();
    result.doc = ordered_json{{"weights", weights}, {"virtual_index", index}};
    return result;
}

CommandResult cmd_seidel(const Scene& scene, const ReportOptions& opt) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    const CircleAction& action = scene.require_action();
    const QuantumElement leading = seidel_leading(action);
    const QuantumElement full = seidel_full(action);
    const SeidelDegreeReport degree = seidel_degree_report(action);
    const Rational bound = loop_hofer_bound(action);

    std::ostringstream os;
    os << "action: " << action.name << "\n";
    os << "weights: " << join_weights(action.weights_at_max) << "\n";
    os << "m_max = " << action.m_max() << "\n";
    os << "semifree: " << (action.semifree() ? "yes" : "no") << "\n";
    os << "leading term:\n" << leading.to_string() << "\n";
    if (action.corrections)
        os << "full element (corrections declared: " << action.corrections->size()
           << " terms):\n";
    else os << "full element (corrections: none declared; leading term only):\n";
    os << full.to_string() << "\n";
    os << "degree: " << degree.to_string() << "\n";
    os << "loop bound: L+ >= " << rat(bound, opt) << "\n";

    result.text = os.str();
    result.doc = ordered_json{
        {"action", action.name},
        {"weights", action.weights_at_max},
        {"m_max", action.m_max()},
        {"semifree", action.semifree()},
        {"leading", quantum_json(leading)},
        {"full", quantum_json(full)},
        {"corrections_declared", action.corrections.has_value()},
        {"degree_matches", degree.matches},
        {"loop_bound", format_rational(bound)}};
    return result;
}

CommandResult cmd_euler(const Scene& scene, const ReportOptions&) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    const CircleAction& action = scene.require_action();
    const BaseModel& base = scene.require_base();
    const long long index = virtual_index(action.weights_at_max);
    const ObstructionRingElement e = euler_obstruction(action.weights_at_max, base, scene.eL);
    const auto expansion = expand_euler(e);
    const Rational top = euler_top_coefficient(action.weights_at_max);
    const BaseCohom reduced = e.substitute_eK();

    std::ostringstream os;
    os << "weights: " << join_weights(action.weights_at_max) << "\n";
    os << "virtual index I = " << index << "\n";
    os << "base: " << base.describe() << "\n";
    os << "euler product e(E) = " << e.to_string() << "\n";
    os << "expansion by eK powers:\n";
    ordered_json terms = ordered_json::array();
    for (const auto& [p, coeff] : expansion) {
        os << "  eK^" << p << ": " << cohom_to_string(base, coeff) << "\n";
        terms.push_back({{"power", p}, {"coefficient", cohom_to_string(base, coeff)}});
    }
    if (expansion.empty()) os << "  (zero)\n";
    os << "top coefficient = " << format_rational(top) << " (product of (n_i + 1)!)\n";
    os << "reduced e(E) (eK -> " << cohom_to_string(base, cohom_gen2(base, base.euler_of_Y))
       << "): " << cohom_to_string(base, reduced) << "\n";

    result.text = os.str();
    result.doc = ordered_json{{"weights", action.weights_at_max},
                              {"virtual_index", index},
                              {"base", base.describe()},
                              {"euler_product", e.to_string()},
                              {"expansion", terms},
                              {"top_coefficient", format_rational(top)},
                              {"reduced", cohom_to_string(base, reduced)}};
    return result;
}

CommandResult cmd_qcclass(const Scene& scene, const ReportOptions&) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    const QCClass c = leading_qc_class(scene.require_action(), scene.require_base(), scene.eL);
    const DegreeAuditReport audit = degree_audit(c);

    std::ostringstream os;
    os << "leading term of the quantum characteristic class:\n";
    os << c.serialize() << "\n";
    if (c.is_zero()) os << "note: leading term vanishes after reduction\n";
    os << "degree audit: " << (audit.ok() ? "clean" : "violations") << "\n";
    for (const auto& v : audit.violations) os << "  " << v << "\n";

    result.text = os.str();
    result.doc = qcclass_json(c);
    result.doc["degree_audit_clean"] = audit.ok();
    return result;
}

CommandResult cmd_psi(const Scene& scene, const ReportOptions&) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    const QCClass c = leading_qc_class(scene.require_action(), scene.require_base(), scene.eL);
    const MarkedQuantumElement image = psi_marked(c);

    std::ostringstream os;
    const auto blabels = scene.require_base().homology_basis();
    os << "psi (evaluation at [" << blabels[scene.require_base().fundamental_index()].label
       << "]):\n";
    os << "complete: " << (image.complete ? "true" : "false") << "\n";
    os << image.value.to_string() << "\n";
    if (!image.value.is_zero()) {
        const auto deg = qdegree(image.value);
        os << "qdegree = ";
        if (deg) os << *deg;
        else os << "inhomogeneous";
        os << "\n";
    }
    result.text = os.str();
    result.doc = ordered_json{{"complete", image.complete}, {"value", quantum_json(image.value)}};
    return result;
}

CommandResult cmd_bound(const Scene& scene, const ReportOptions& opt) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    std::ostringstream os;
    ordered_json doc;
    if (scene.action) {
        const Rational loop = loop_hofer_bound(*scene.action);
        os << "loop bound from the action: L+ >= " << rat(loop, opt) << "\n";
        doc["loop_bound"] = format_rational(loop);
    }
    if (scene.base) {
        const QCClass c = leading_qc_class(scene.require_action(), *scene.base, scene.eL);
        if (opt.bound_kind == "homotopy" || opt.bound_kind == "both") {
            const HoferCertificate cert = hofer_bound(c, BoundKind::HomotopyClass);
            os << cert.to_string() << (opt.decimal ? " (~" + decimal_approx(cert.bound) + ")" : "")
               << "\n";
            doc["homotopy_bound"] = format_rational(cert.bound);
        }
        if (opt.bound_kind == "bordism" || opt.bound_kind == "both") {
            const HoferCertificate cert = hofer_bound(c, BoundKind::BordismClass);
            os << cert.to_string() << (opt.decimal ? " (~" + decimal_approx(cert.bound) + ")" : "")
               << "\n";
            doc["bordism_bound"] = format_rational(cert.bound);
        }
    }
    if (os.str().empty()) throw ValidationError("scene declares neither [action] nor [base]");
    result.text = os.str();
    result.doc = doc;
    return result;
}

CommandResult cmd_certify(const Scene& scene, const ReportOptions& opt) {
    CommandResult result;
    if (!model_gate(scene, result)) return result;
    const MinimalityCertificate cert =
        minimality_certificate(scene.require_action(), scene.require_base());
    std::ostringstream os;
    os << cert.to_string() << "\n";
    if (opt.decimal && cert.certified)
        os << "bound decimal: ~" << decimal_approx(cert.bound) << "\n";
    result.text = os.str();
    result.doc = ordered_json{{"certified", cert.certified},
                              {"virtual_index", cert.index},
                              {"base_dim", cert.base_dim},
                              {"euler_power_nonzero", cert.euler_power_nonzero},
                              {"bound", format_rational(cert.bound)},
                              {"facts", cert.facts}};
    return result;
}

}  // namespace qclass
