#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclass/obstruction.hpp"
#include "qclass/sectionfile.hpp"
#include "qclass/seidel.hpp"

namespace qclass {

// Everything one input file describes: the fiber manifold model (preset
// reference or inline sections), optionally a circle action, a base model
// with its eL expressions, and a default task list.
struct Scene {
    std::string name;
    std::string manifold_ref;  // "cpn:N" or "inline"
    ModelPtr model;
    std::optional<CircleAction> action;
    std::optional<BaseModel> base;
    std::vector<Rational> eL;
    std::vector<std::string> requested;

    const CircleAction& require_action() const;
    const BaseModel& require_base() const;
};

// Parses "label:coeff label:coeff ..." against the model basis.
HomologyClass parse_class_expr(const ModelPtr& model, const std::string& text);

// Parses "0" or "<rational> h" (a degree-2 cohomology expression).
Rational parse_gen2_expr(const std::string& text);

// Builds a manifold model from inline [manifold]/[basis]/[pairing]/
// [classes]/[gw3] sections.  Parse-level only: structural validation is
// validate_model's job.
ModelPtr parse_manifold_sections(const std::vector<Section>& sections);

Scene scene_from_sections(const std::vector<Section>& sections);
Scene load_scene(const std::string& path);

// Resolves a scene argument: an existing path as-is, otherwise a name
// looked up in QCLASS_PRESET_DIR (with and without the .scene suffix).
std::string resolve_scene_path(const std::string& arg);

}  // namespace qclass
