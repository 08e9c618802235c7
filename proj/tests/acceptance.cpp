// Acceptance gate: one check per shipped guarantee, one PASS/FAIL line each.
// Exits nonzero when any check fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qclass/qcalg.hpp"
#include "qclass/scene.hpp"
#include "qclass/seidel.hpp"
#include "test_util.hpp"

using namespace qclass;

namespace {

std::string g_scene_dir;

Scene load(const std::string& name) { return load_scene(g_scene_dir + "/" + name + ".scene"); }

// Throws std::runtime_error with a diagnostic when the condition fails.
void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CircleAction su2_action(int n) {
    CircleAction action;
    action.name = "su2_cp" + std::to_string(n);
    action.model = preset_cpn(n);
    action.weights_at_max = {-2};
    for (int i = 1; i < n; ++i) action.weights_at_max.push_back(-1);
    action.h_max = 1;
    action.f_max_class = HomologyClass(action.model, 0);
    return action;
}

// Rank-2 obstruction actions on cpn:2..4: exact index, leading class, and
// certificate, all inside the one-second budget.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 4; ++n) {
        const CircleAction action = su2_action(n);
        require(virtual_index(action.weights_at_max) == 2,
                "virtual index != 2 for n = " + std::to_string(n));
        require(action.m_max() == -(n + 1), "m_max != -(n+1) for n = " + std::to_string(n));

        const BaseModel base = make_base(BaseKind::Sphere, 2, -1);
        const std::vector<Rational> eL(action.weights_at_max.size(), 0);
        const QCClass c = leading_qc_class(action, base, eL);
        QCClass expected(base, action.model, false);
        expected.add_term(base.point_index(), 0, NovikovScalar(-1, n + 1, 1));
        require(c == expected, "leading class != (-[pt] x [pt]) q^{n+1} t^{h_max} for n = " +
                                   std::to_string(n));

        const MinimalityCertificate cert = minimality_certificate(action, base);
        require(cert.certified, "certificate not CERTIFIED for n = " + std::to_string(n));
        require(cert.bound == 1, "certified bound != h_max for n = " + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    require(dt < 1.0, "runtime " + std::to_string(dt) + " s exceeds 1 s");
}

// Exhaustive ring axioms on the projective-space presets.
void criterion2() {
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 4; ++n) {
        const ModelPtr model = preset_cpn(n);
        const int nb = static_cast<int>(model->basis.size());
        std::vector<QuantumElement> e;
        for (int i = 0; i < nb; ++i) e.emplace_back(model, i, NovikovScalar::one());
        const QuantumElement unit = QuantumElement::unit(model);
        for (int i = 0; i < nb; ++i)
            require(qmul(unit, e[i]) == e[i] && qmul(e[i], unit) == e[i],
                    "unit law fails on cpn:" + std::to_string(n));
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                require(qmul(e[i], e[j]) == qmul(e[j], e[i]),
                        "commutativity fails on cpn:" + std::to_string(n));
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j)
                for (int k = 0; k < nb; ++k)
                    require(qmul(qmul(e[i], e[j]), e[k]) == qmul(e[i], qmul(e[j], e[k])),
                            "associativity fails on cpn:" + std::to_string(n));
    }
    const double dt = seconds_since(t0);
    require(dt < 10.0, "runtime " + std::to_string(dt) + " s exceeds 10 s");
}

// The rotation element of the sphere squares to the fundamental class.
void criterion3() {
    const ModelPtr model = preset_cpn(1);
    CircleAction action;
    action.name = "rotation";
    action.model = model;
    action.weights_at_max = {-1};
    action.h_max = Rational(1, 2);
    action.f_max_class = HomologyClass(model, 0);
    const QuantumElement s = seidel_leading(action);
    QuantumElement expected(model, 0, NovikovScalar(1, 1, Rational(1, 2)));
    require(s == expected, "rotation element != [pt] q t^{1/2}");
    require(qmul(s, s) == QuantumElement::unit(model), "s * s != [M]");
}

// Multiplication operators respect cup products on random classes.
void criterion4() {
    std::mt19937 rng(20240826);
    const std::vector<BaseModel> bases = {base_point(), base_sphere(2), base_projective(2)};
    const std::vector<ModelPtr> fibers = {preset_cpn(1), preset_cpn(2)};
    for (int trial = 0; trial < 200; ++trial) {
        const BaseModel& base = bases[trial % bases.size()];
        const ModelPtr& fiber = fibers[(trial / 3) % fibers.size()];
        const QCClass x = testutil::random_qcclass(rng, base, fiber);
        const QCClass y = testutil::random_qcclass(rng, base, fiber);
        const MultOperator both = mult_operator(qc_cup(x, y));
        const MultOperator mx = mult_operator(x);
        const MultOperator my = mult_operator(y);
        for (int probe = 0; probe < 20; ++probe) {
            const QCClass z = testutil::random_qcclass(rng, base, fiber);
            require(both(z) == mx(my(z)), "operator composition fails at trial " +
                                              std::to_string(trial));
        }
    }
}

// Degree bookkeeping on every shipped leading class, plus the degree shift
// of the fundamental-class evaluation.
void criterion5() {
    const std::vector<std::string> names = {"cp1_rotation",    "su2_cp2",        "su2_cp3",
                                            "su2_cp4",         "semifree_sphere", "zero_euler_cp2",
                                            "inline_cp1"};
    for (const auto& name : names) {
        const Scene scene = load(name);
        if (!scene.action || !scene.base) continue;
        const QCClass c = leading_qc_class(*scene.action, *scene.base, scene.eL);
        require(degree_audit(c).ok(), "degree audit fails on " + name);
        const QuantumElement image = psi(c);
        if (image.is_zero()) continue;
        const auto deg = qdegree(image);
        require(deg.has_value(), "psi image inhomogeneous on " + name);
        require(*deg == scene.model->dim + scene.base->dim(),
                "qdegree(psi) != 2n + k on " + name);
    }
}

// Valuation of the full element and of the evaluated leading class equals
// h_max; valuation laws hold on random scalars.
void criterion6() {
    const std::vector<std::string> names = {"cp1_rotation",    "su2_cp2",        "su2_cp3",
                                            "su2_cp4",         "trivial_cp2",    "semifree_sphere",
                                            "zero_euler_cp2",  "inline_cp1"};
    for (const auto& name : names) {
        const Scene scene = load(name);
        if (!scene.action) continue;
        require(seidel_full(*scene.action).valuation() == scene.action->h_max,
                "valuation of the full element != h_max on " + name);
        if (!scene.base) continue;
        const QCClass c = leading_qc_class(*scene.action, *scene.base, scene.eL);
        if (c.is_zero()) continue;
        const QuantumElement image = psi(c);
        if (image.is_zero()) continue;
        require(image.valuation() == scene.action->h_max,
                "valuation of psi(leading class) != h_max on " + name);
    }

    std::mt19937 rng(20240827);
    for (int trial = 0; trial < 1000; ++trial) {
        const NovikovScalar x = testutil::random_nonzero_scalar(rng);
        const NovikovScalar y = testutil::random_nonzero_scalar(rng);
        require((x * y).valuation() == x.valuation() + y.valuation(),
                "valuation not multiplicative at trial " + std::to_string(trial));
        const NovikovScalar sum = x + y;
        const Rational cap = std::max(x.valuation(), y.valuation());
        if (!sum.is_zero())
            require(sum.valuation() <= cap, "valuation not subadditive at trial " +
                                                std::to_string(trial));
        if (x.valuation() != y.valuation())
            require(sum.valuation() == cap, "valuation drops on distinct-valuation sum at trial " +
                                                std::to_string(trial));
    }
}

// Euler expansion invariants over random weight lists.
void criterion7() {
    std::mt19937 rng(20240828);
    const BaseModel base = base_projective(2);
    std::uniform_int_distribution<int> len_dist(1, 5);
    std::uniform_int_distribution<long long> weight_dist(-5, 0);

    const auto factorial = [](long long m) {
        Rational f = 1;
        for (long long i = 2; i <= m; ++i) f *= i;
        return f;
    };

    for (int trial = 0; trial < 100; ++trial) {
        const int len = len_dist(rng);
        std::vector<long long> weights;
        std::vector<Rational> eL;
        for (int i = 0; i < len; ++i) {
            weights.push_back(weight_dist(rng));
            eL.push_back(testutil::random_rational(rng));
        }
        const ObstructionRingElement e = euler_obstruction(weights, base, eL);
        const auto expansion = expand_euler(e);
        require(!expansion.empty(), "euler product vanished at trial " + std::to_string(trial));

        Rational top = 1;
        for (long long w : weights)
            if (w <= -2) top *= factorial(-w - 1);
        require(euler_top_coefficient(weights) == top,
                "predicted top coefficient mismatch at trial " + std::to_string(trial));
        require(expansion.front().first == virtual_index(weights) / 2,
                "leading power != I/2 at trial " + std::to_string(trial));
        require(expansion.front().second == cohom_scale(cohom_unit(base), top),
                "leading coefficient != prod (n_i + 1)! at trial " + std::to_string(trial));

        ObstructionRingElement rebuilt(base);
        for (const auto& [p, coeff] : expansion) rebuilt.add_term(p, coeff);
        require(rebuilt == e, "expansion does not reassemble at trial " + std::to_string(trial));
    }

    std::uniform_int_distribution<int> flag(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int len = len_dist(rng);
        std::vector<long long> weights;
        for (int i = 0; i < len; ++i) weights.push_back(flag(rng) ? -1 : 0);
        const std::vector<Rational> eL(weights.size(), 0);
        require(virtual_index(weights) == 0, "semifree index != 0");
        require(euler_obstruction(weights, base, eL) == ObstructionRingElement::unit(base),
                "semifree euler product != 1");
    }
}

// Negative controls: broken hypotheses are reported, never certified.
void criterion8() {
    const Scene mismatch = load("semifree_sphere");
    require(!minimality_certificate(mismatch.require_action(), mismatch.require_base()).certified,
            "index-mismatch scene was certified");

    const Scene zero_euler = load("zero_euler_cp2");
    require(
        !minimality_certificate(zero_euler.require_action(), zero_euler.require_base()).certified,
        "zero-Euler scene was certified");

    const Scene corrupt = load("corrupt_gw3");
    require(!validate_model(*corrupt.model).ok(), "corrupted invariant table validated");

    bool threw = false;
    try {
        NovikovScalar().valuation();
    } catch (const ZeroElement&) {
        threw = true;
    }
    require(threw, "zero scalar valuation did not throw");

    threw = false;
    try {
        QuantumElement(preset_cpn(1)).valuation();
    } catch (const ZeroElement&) {
        threw = true;
    }
    require(threw, "zero quantum element valuation did not throw");

    threw = false;
    try {
        QCClass(base_point(), preset_cpn(1)).valuation();
    } catch (const ZeroElement&) {
        threw = true;
    }
    require(threw, "zero characteristic class valuation did not throw");
}

struct Criterion {
    int id;
    const char* label;
    std::function<void()> check;
};

}  // namespace

int main() {
    const char* dir = std::getenv("QCLASS_SCENE_DIR");
    if (!dir) {
        std::cerr << "QCLASS_SCENE_DIR must point at the shipped scenes\n";
        return 2;
    }
    g_scene_dir = dir;

    const std::vector<Criterion> criteria = {
        {1, "rank-2 obstruction example: index, leading class, certificate", criterion1},
        {2, "quantum ring axioms, exhaustive on cpn:1..4", criterion2},
        {3, "rotation element squares to the fundamental class", criterion3},
        {4, "multiplication operators respect cup products (200 random pairs)", criterion4},
        {5, "degree audits and the 2n + k shift across shipped scenes", criterion5},
        {6, "valuation equals h_max; valuation laws (1000 random pairs)", criterion6},
        {7, "euler expansion: top coefficient, reassembly, semifree (100 lists)", criterion7},
        {8, "negative controls stay uncertified and zero valuations throw", criterion8},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.check();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = std::string(": ") + e.what();
            ++failures;
        }
        std::cout << "criterion " << c.id << " " << verdict << " " << c.label << detail << "\n";
    }
    return failures == 0 ? 0 : 1;
}
