#pragma once

#include <string>

#include "platek/optree.hpp"

namespace platek {

/// One record per node in pre-order of ids.  Field order is fixed:
///   node <id> parent <pid|-> kind <kind> outcome <outcome> term <"..."> ann <"..."|->
/// Outcomes render as value:<n>, novalue:<consumed>, refusal:<oracle>,
/// stuck, or pending for unrecorded subtrees.
std::string export_tree_text(const CompTree& tree);

/// nlohmann-style JSON document {"root": id, "nodes": [...]}.
std::string export_tree_json(const CompTree& tree);

/// Graphviz dot for external visualizers.
std::string export_tree_dot(const CompTree& tree);

}  // namespace platek
