#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// End-to-end tests: run the installed binary through a shell, capture stdout
// and stderr together, and compare against golden transcripts.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v != nullptr, name, " must be set by the test harness");
    return v;
}

std::string bin() { return env_or_fail("QCLASS_BIN"); }
std::string scene(const std::string& name) {
    return env_or_fail("QCLASS_SCENE_DIR") + ("/" + name);
}

RunResult run_shell(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE_MESSAGE(pipe != nullptr, "popen failed for: ", cmd);
    std::array<char, 4096> buf;
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    result.exit_code = WEXITSTATUS(status);
    return result;
}

RunResult run(const std::string& args) { return run_shell(bin() + " " + args); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot read ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void check_golden(const std::string& golden, const std::string& args, int expected_exit) {
    const RunResult r = run(args);
    INFO("command: ", args, "\noutput:\n", r.output);
    CHECK(r.exit_code == expected_exit);
    CHECK(r.output == slurp(env_or_fail("QCLASS_GOLDEN_DIR") + ("/" + golden)));
}

std::string temp_json(int tag) {
    return "/tmp/qclass_cli_" + std::to_string(getpid()) + "_" + std::to_string(tag) + ".json";
}

}  // namespace

TEST_CASE("golden transcripts for every subcommand") {
    check_golden("validate_inline_cp1.txt", "validate " + scene("inline_cp1.scene"), 0);
    check_golden("validate_corrupt_gw3.txt", "validate " + scene("corrupt_gw3.scene"), 1);
    check_golden("qmul_table_cpn2.txt", "qmul-table cpn:2", 0);
    check_golden("seidel_cp1_rotation.txt", "seidel " + scene("cp1_rotation.scene"), 0);
    check_golden("seidel_trivial_cp2.txt", "seidel " + scene("trivial_cp2.scene"), 0);
    check_golden("index_weights.txt", "index --weights=-1,-1,-1", 0);
    check_golden("index_su2_cp2.txt", "index " + scene("su2_cp2.scene"), 0);
    check_golden("euler_su2_cp2.txt", "euler " + scene("su2_cp2.scene"), 0);
    check_golden("qcclass_su2_cp2.txt", "qcclass " + scene("su2_cp2.scene"), 0);
    check_golden("psi_su2_cp2.txt", "psi " + scene("su2_cp2.scene"), 0);
    check_golden("bound_cp1_rotation.txt", "bound " + scene("cp1_rotation.scene"), 0);
    check_golden("certify_su2_cp2.txt", "certify " + scene("su2_cp2.scene"), 0);
    check_golden("certify_su2_cp3.txt", "certify " + scene("su2_cp3.scene"), 0);
    check_golden("certify_semifree_sphere.txt", "certify " + scene("semifree_sphere.scene"), 0);
    check_golden("certify_zero_euler_cp2.txt", "certify " + scene("zero_euler_cp2.scene"), 0);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run("").exit_code == 64);
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run("seidel").exit_code == 64);              // missing required scene
    CHECK(run("bound --kind=nope x").exit_code == 64);
    const RunResult help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("quantum characteristic class calculator") != std::string::npos);
}

TEST_CASE("input problems exit 1, computation failures exit 2") {
    const RunResult missing = run("validate definitely_not_a_scene");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("error:") != std::string::npos);

    const RunResult positive = run("index --weights=1,2");
    CHECK(positive.exit_code == 2);
    CHECK(positive.output.find("error:") != std::string::npos);

    const RunResult gated = run("seidel " + scene("corrupt_gw3.scene"));
    CHECK(gated.exit_code == 1);
    CHECK(gated.output.find("model validation failed") != std::string::npos);
}

TEST_CASE("scene names resolve through QCLASS_PRESET_DIR") {
    const std::string dir = env_or_fail("QCLASS_SCENE_DIR");
    const RunResult named =
        run_shell("QCLASS_PRESET_DIR=" + dir + " " + bin() + " seidel cp1_rotation");
    CHECK(named.exit_code == 0);
    CHECK(named.output == slurp(env_or_fail("QCLASS_GOLDEN_DIR") + "/seidel_cp1_rotation.txt"));
}

TEST_CASE("bound kinds and decimal rendering") {
    const RunResult homotopy = run("bound " + scene("cp1_rotation.scene") + " --kind=homotopy");
    CHECK(homotopy.exit_code == 0);
    CHECK(homotopy.output.find("homotopy-class") != std::string::npos);
    CHECK(homotopy.output.find("bordism") == std::string::npos);

    const RunResult decimal = run("bound " + scene("cp1_rotation.scene") + " --decimal");
    CHECK(decimal.exit_code == 0);
    CHECK(decimal.output.find("(~0.500000)") != std::string::npos);

    const RunResult cert = run("certify " + scene("su2_cp2.scene") + " --decimal");
    CHECK(cert.exit_code == 0);
    CHECK(cert.output.find("bound decimal: ~1.000000") != std::string::npos);
}

TEST_CASE("--out writes a parseable report and runs are byte-identical") {
    const std::string out1 = temp_json(1);
    const std::string out2 = temp_json(2);
    const RunResult r1 = run("qmul-table cpn:3 --out " + out1);
    const RunResult r2 = run("qmul-table cpn:3 --out " + out2);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    CHECK(r1.output == r2.output);
    CHECK(slurp(out1) == slurp(out2));

    const auto doc = nlohmann::json::parse(slurp(out1));
    CHECK(doc.at("model") == "cpn:3");
    REQUIRE(doc.at("products").is_array());
    CHECK(doc.at("products").size() == 10);  // 4 basis classes, unordered pairs
    CHECK(doc.at("products")[0].at("left") == "p0");

    const std::string out3 = temp_json(3);
    const RunResult v = run("validate " + scene("corrupt_gw3.scene") + " --out " + out3);
    CHECK(v.exit_code == 1);
    const auto vdoc = nlohmann::json::parse(slurp(out3));
    CHECK(vdoc.at("ok") == false);
    CHECK(vdoc.at("violations").size() == 3);

    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove(out3.c_str());
}
