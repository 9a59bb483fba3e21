#include "platek/treeio.hpp"

#include <json.hpp>

namespace platek {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  out += "\"";
  return out;
}

std::string outcome_field(const Outcome& o, bool truncated) {
  if (truncated) return "pending";
  switch (o.kind) {
    case OutcomeKind::Value:
      return "value:" + std::to_string(o.value);
    case OutcomeKind::NoValue:
      return "novalue:" + std::to_string(o.consumed);
    case OutcomeKind::Refusal:
      return "refusal:" + o.oracle;
    case OutcomeKind::Stuck:
      return "stuck";
  }
  return "?";
}

}  // namespace

std::string export_tree_text(const CompTree& tree) {
  std::string out = "# platek computation tree v1\n";
  for (const CompNode& n : tree.nodes) {
    out += "node " + std::to_string(n.id);
    out += " parent ";
    out += n.parent ? std::to_string(*n.parent) : std::string("-");
    out += " kind " + node_kind_name(n.kind);
    out += " outcome " + outcome_field(n.outcome, n.truncated);
    out += " term " + quote(n.term_text);
    out += " ann ";
    out += n.annotation.empty() ? std::string("-") : quote(n.annotation);
    out += "\n";
  }
  return out;
}

std::string export_tree_json(const CompTree& tree) {
  nlohmann::json doc;
  doc["root"] = tree.root;
  doc["nodes"] = nlohmann::json::array();
  for (const CompNode& n : tree.nodes) {
    nlohmann::json jn;
    jn["id"] = n.id;
    if (n.parent)
      jn["parent"] = *n.parent;
    else
      jn["parent"] = nullptr;
    jn["kind"] = node_kind_name(n.kind);
    jn["outcome"] = outcome_field(n.outcome, n.truncated);
    jn["outcome_detail"] = n.outcome.to_string();
    jn["term"] = n.term_text;
    jn["annotation"] = n.annotation;
    jn["truncated"] = n.truncated;
    jn["children"] = n.children;
    doc["nodes"].push_back(std::move(jn));
  }
  return doc.dump(2) + "\n";
}

std::string export_tree_dot(const CompTree& tree) {
  std::string out = "digraph comptree {\n  node [shape=box,fontname=\"monospace\"];\n";
  for (const CompNode& n : tree.nodes) {
    std::string label = node_kind_name(n.kind) + "\\n" +
                        outcome_field(n.outcome, n.truncated);
    out += "  n" + std::to_string(n.id) + " [label=\"" + label + "\"];\n";
  }
  for (const CompNode& n : tree.nodes) {
    if (n.parent)
      out += "  n" + std::to_string(*n.parent) + " -> n" +
             std::to_string(n.id) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace platek
