#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qclass/qcalg.hpp"
#include "qclass/scene.hpp"

namespace qclass {

struct ReportOptions {
    bool decimal = false;             // append labeled decimal approximations
    std::string bound_kind = "both";  // homotopy | bordism | both
};

// What one subcommand produces: process exit code, the stdout text, and the
// structured document written by --out.
struct CommandResult {
    int exit_code = 0;
    std::string text;
    nlohmann::ordered_json doc;
};

CommandResult cmd_validate(const Scene& scene);
CommandResult cmd_qmul_table(const ModelPtr& model, const ReportOptions& opt);
CommandResult cmd_index(const std::vector<long long>& weights);
CommandResult cmd_seidel(const Scene& scene, const ReportOptions& opt);
CommandResult cmd_euler(const Scene& scene, const ReportOptions& opt);
CommandResult cmd_qcclass(const Scene& scene, const ReportOptions& opt);
CommandResult cmd_psi(const Scene& scene, const ReportOptions& opt);
CommandResult cmd_bound(const Scene& scene, const ReportOptions& opt);
CommandResult cmd_certify(const Scene& scene, const ReportOptions& opt);

// Single-line rendering of a quantum element (terms joined by " + ").
std::string quantum_line(const QuantumElement& a);

}  // namespace qclass
