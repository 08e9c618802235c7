#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclass/errors.hpp"
#include "qclass/report.hpp"

namespace {

using namespace qclass;

std::vector<long long> parse_weight_list(const std::string& arg) {
    std::vector<long long> out;
    std::string tok;
    std::istringstream is(arg);
    while (std::getline(is, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad weight '" + tok + "' in list '" + arg + "'");
        }
    }
    if (out.empty()) throw ParseError("empty weight list");
    return out;
}

int finish(const CommandResult& result, const std::string& out_path) {
    std::cout << result.text;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        file << result.doc.dump(2) << "\n";
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum characteristic class calculator"};
    app.require_subcommand(1);

    std::string scene_arg, out_path, weights_arg;
    ReportOptions opt;

    auto add_common = [&](CLI::App* cmd, bool needs_scene) {
        if (needs_scene) cmd->add_option("scene", scene_arg, "scene file or preset name")->required();
        cmd->add_option("--out", out_path, "write a structured report to this file");
        cmd->add_flag("--decimal", opt.decimal, "append decimal approximations");
        return cmd;
    };

    auto* validate = add_common(app.add_subcommand("validate", "check a scene's model data"), true);
    auto* qmul_table = add_common(
        app.add_subcommand("qmul-table", "print the full basis quantum product table"), true);
    auto* seidel =
        add_common(app.add_subcommand("seidel", "leading and full Seidel element"), true);
    auto* index = add_common(
        app.add_subcommand("index", "virtual index of a weight list or scene action"), false);
    index->add_option("scene", scene_arg, "scene file or preset name");
    index->add_option("--weights", weights_arg, "comma-separated weights, e.g. -1,-1,-1");
    auto* euler = add_common(
        app.add_subcommand("euler", "obstruction Euler class and its expansion"), true);
    auto* qcclass_cmd = add_common(
        app.add_subcommand("qcclass", "leading term of the quantum characteristic class"), true);
    auto* psi_cmd =
        add_common(app.add_subcommand("psi", "fundamental-class evaluation of the leading term"),
                   true);
    auto* bound = add_common(app.add_subcommand("bound", "positive Hofer length bounds"), true);
    bound->add_option("--kind", opt.bound_kind, "homotopy | bordism | both")
        ->check(CLI::IsMember({"homotopy", "bordism", "both"}));
    auto* certify =
        add_common(app.add_subcommand("certify", "essentialness and minimality certificate"),
                   true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (index->parsed() && !weights_arg.empty())
            return finish(cmd_index(parse_weight_list(weights_arg)), out_path);

        if (qmul_table->parsed() && scene_arg.rfind("cpn:", 0) == 0)
            return finish(cmd_qmul_table(resolve_preset(scene_arg), opt), out_path);

        if (scene_arg.empty()) {
            std::cerr << "error: a scene argument (or --weights) is required\n";
            return 64;
        }
        const Scene scene = load_scene(resolve_scene_path(scene_arg));

        if (validate->parsed()) return finish(cmd_validate(scene), out_path);
        if (qmul_table->parsed()) return finish(cmd_qmul_table(scene.model, opt), out_path);
        if (seidel->parsed()) return finish(cmd_seidel(scene, opt), out_path);
        if (index->parsed())
            return finish(cmd_index(scene.require_action().weights_at_max), out_path);
        if (euler->parsed()) return finish(cmd_euler(scene, opt), out_path);
        if (qcclass_cmd->parsed()) return finish(cmd_qcclass(scene, opt), out_path);
        if (psi_cmd->parsed()) return finish(cmd_psi(scene, opt), out_path);
        if (bound->parsed()) return finish(cmd_bound(scene, opt), out_path);
        if (certify->parsed()) return finish(cmd_certify(scene, opt), out_path);
        std::cerr << "error: no subcommand\n";
        return 64;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
