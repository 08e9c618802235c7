#include "qclass/scene.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "qclass/errors.hpp"

namespace qclass {

namespace {

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& text) {
    try {
        size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + text + "'");
    }
}

const Section* find_section(const std::vector<Section>& sections, const std::string& name) {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace

const CircleAction& Scene::require_action() const {
    if (!action) throw ValidationError("scene '" + name + "' declares no [action]");
    return *action;
}

const BaseModel& Scene::require_base() const {
    if (!base) throw ValidationError("scene '" + name + "' declares no [base]");
    return *base;
}

HomologyClass parse_class_expr(const ModelPtr& model, const std::string& text) {
    HomologyClass out(model);
    for (const auto& tok : split_ws(text)) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw ParseError("class term '" + tok + "' is not label:coeff");
        out.add(model->basis_index(tok.substr(0, colon)),
                parse_rational(tok.substr(colon + 1)));
    }
    return out;
}

Rational parse_gen2_expr(const std::string& text) {
    const auto toks = split_ws(text);
    if (toks.size() == 1 && toks[0] == "0") return 0;
    if (toks.size() == 2 && toks[1] == "h") return parse_rational(toks[0]);
    throw ParseError("degree-2 expression must be '0' or '<rational> h', got '" + text + "'");
}

ModelPtr parse_manifold_sections(const std::vector<Section>& sections) {
    const Section* manifold = find_section(sections, "manifold");
    const Section* basis = find_section(sections, "basis");
    const Section* pairing = find_section(sections, "pairing");
    const Section* classes = find_section(sections, "classes");
    const Section* gw3 = find_section(sections, "gw3");
    if (!manifold || !basis || !pairing || !classes || !gw3)
        throw ParseError("inline manifold needs [manifold], [basis], [pairing], [classes], [gw3]");

    auto m = std::make_shared<ManifoldModel>();
    m->name = manifold->get_or("name", "inline");
    m->dim = static_cast<int>(parse_int(manifold->get("dim")));

    for (const auto& [label, deg] : basis->entries)
        m->basis.push_back({label, static_cast<int>(parse_int(deg))});

    const size_t nb = m->basis.size();
    m->pairing.assign(nb, std::vector<Rational>(nb, 0));
    for (const auto& [key, value] : pairing->entries) {
        const auto labels = split_ws(key);
        if (labels.size() != 2)
            throw ParseError("pairing row '" + key + "' needs exactly two labels");
        const int i = m->basis_index(labels[0]);
        const int j = m->basis_index(labels[1]);
        const Rational v = parse_rational(value);
        m->pairing[i][j] = v;
        m->pairing[j][i] = v;  // symmetric fill
    }

    for (const auto& [label, value] : classes->entries) {
        CurveClass c;
        c.label = label;
        for (const auto& tok : split_ws(value)) {
            if (tok.rfind("c1:", 0) == 0) c.c1 = parse_int(tok.substr(3));
            else if (tok.rfind("omega:", 0) == 0) c.omega = parse_rational(tok.substr(6));
            else throw ParseError("curve class field '" + tok + "' is not c1:/omega:");
        }
        m->classes.push_back(c);
    }

    for (const auto& [key, value] : gw3->entries) {
        const auto toks = split_ws(key);
        if (toks.size() != 4)
            throw ParseError("gw3 row '" + key + "' needs: class i j k");
        Gw3Entry e;
        e.cls = m->class_index(toks[0]);
        for (int t = 0; t < 3; ++t) e.idx[t] = m->basis_index(toks[1 + t]);
        e.value = parse_rational(value);
        m->gw3.push_back(e);
    }
    return m;
}

Scene scene_from_sections(const std::vector<Section>& sections) {
    Scene scene;
    const Section* head = find_section(sections, "scene");
    if (!head) throw ParseError("missing [scene] section");
    scene.name = head->get_or("name", "unnamed");
    scene.requested = split_ws(head->get_or("tasks", ""));

    scene.manifold_ref = head->get("manifold");
    if (scene.manifold_ref == "inline") scene.model = parse_manifold_sections(sections);
    else scene.model = resolve_preset(scene.manifold_ref);

    if (const Section* act = find_section(sections, "action")) {
        CircleAction action;
        action.name = act->get_or("name", scene.name);
        action.model = scene.model;
        for (const auto& tok : split_ws(act->get("weights")))
            action.weights_at_max.push_back(parse_int(tok));
        action.h_max = parse_rational(act->get("h_max"));
        action.f_max_class = parse_class_expr(scene.model, act->get("f_max"));
        std::optional<std::vector<SeidelCorrection>> corrections;
        if (act->get_or("corrections", "") == "exact")
            corrections.emplace();  // declared complete, no terms
        for (const auto& s : sections) {
            if (s.name != "correction") continue;
            if (!corrections) corrections.emplace();
            SeidelCorrection corr;
            corr.a_B = parse_class_expr(scene.model, s.get("a_B"));
            corr.c1B = parse_int(s.get("c1B"));
            corr.omegaB = parse_rational(s.get("omegaB"));
            corrections->push_back(std::move(corr));
        }
        action.corrections = std::move(corrections);
        scene.action = std::move(action);
    }

    if (const Section* bs = find_section(sections, "base")) {
        const std::string kind = bs->get("kind");
        BaseKind bk;
        if (kind == "point") bk = BaseKind::Point;
        else if (kind == "sphere") bk = BaseKind::Sphere;
        else if (kind == "projective") bk = BaseKind::Projective;
        else throw ParseError("unknown base kind '" + kind + "'");
        const int dim = static_cast<int>(parse_int(bs->get_or("dim", "0")));
        scene.base = make_base(bk, dim, parse_gen2_expr(bs->get_or("euler_of_Y", "0")));
    }

    if (const Section* el = find_section(sections, "eL"))
        for (const auto& [key, value] : el->entries) scene.eL.push_back(parse_gen2_expr(value));

    return scene;
}

Scene load_scene(const std::string& path) { return scene_from_sections(load_sections(path)); }

std::string resolve_scene_path(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    if (const char* dir = std::getenv("QCLASS_PRESET_DIR")) {
        const fs::path base(dir);
        for (const auto& candidate : {base / arg, base / (arg + ".scene")})
            if (fs::exists(candidate)) return candidate.string();
    }
    throw ParseError("scene '" + arg + "' not found");
}

}  // namespace qclass
