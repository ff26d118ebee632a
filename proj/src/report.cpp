#include "ginv/report.hpp"

#include <algorithm>

namespace ginv {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::JSON;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  if (name == "dot") return ReportFormat::DOT;
  throw Error(Errc::InvalidFormat, "unknown report format: " + name);
}

json claim_result_to_json(const ClaimResult& r) {
  json doc{{"claim", r.claim_id},
           {"ring", r.ring_id},
           {"checked", r.elements_checked}};
  switch (r.verdict) {
    case ClaimResult::Verdict::Pass: doc["verdict"] = "pass"; break;
    case ClaimResult::Verdict::Counterexample: {
      doc["verdict"] = "counterexample";
      doc["tuple"] = r.tuple;
      json truths = json::array();
      for (const auto& [id, v] : r.condition_truths)
        truths.push_back(json{{"condition", id}, {"holds", v}});
      doc["conditions"] = truths;
      break;
    }
    case ClaimResult::Verdict::Skipped:
      doc["verdict"] = "skipped";
      doc["reason"] = r.skip_reason;
      break;
  }
  return doc;
}

json schema_to_json(const RelationSchema& s) {
  json classes = json::array();
  for (int i = 0; i < kSchemaClassCount; ++i)
    classes.push_back(schema_class_name(static_cast<SchemaClass>(i)));
  json edges = json::array();
  for (const auto& e : s.edges)
    edges.push_back(json{{"from", schema_class_name(e.from)},
                         {"to", schema_class_name(e.to)},
                         {"confirmed", e.confirmed}});
  json non_edges = json::array();
  for (const auto& e : s.non_edges)
    non_edges.push_back(json{{"from", schema_class_name(e.from)},
                             {"to", schema_class_name(e.to)},
                             {"witness", e.witness},
                             {"ring", e.ring_id},
                             {"at_bound", e.at_bound}});
  json elements = json::array();
  for (const auto& el : s.elements) {
    json member = json::object();
    for (int i = 0; i < kSchemaClassCount; ++i) {
      const char* v = el.member[i] == Membership::In
                          ? "in"
                          : (el.member[i] == Membership::Out ? "out" : "out-at-bound");
      member[schema_class_name(static_cast<SchemaClass>(i))] = v;
    }
    elements.push_back(json{{"ring", el.ring_id}, {"element", el.element}, {"member", member}});
  }
  return json{{"rings", s.rings},
              {"classes", classes},
              {"edges", edges},
              {"non_edges", non_edges},
              {"elements", elements}};
}

namespace {

// Groups classes with identical In-sets; the implication relation between
// groups is set inclusion, so its Hasse diagram is well defined.
struct DotLayout {
  std::vector<std::vector<int>> groups;           // class indices, ordered
  std::vector<std::vector<char>> in_sets;         // per group, over elements
  std::vector<std::pair<int, int>> hasse;         // group edges (from, to)
};

DotLayout layout_schema(const RelationSchema& s) {
  DotLayout out;
  const std::size_t n = s.elements.size();
  std::vector<std::vector<char>> class_sets(kSchemaClassCount, std::vector<char>(n, 0));
  for (int c = 0; c < kSchemaClassCount; ++c)
    for (std::size_t i = 0; i < n; ++i)
      class_sets[c][i] = s.elements[i].member[c] == Membership::In ? 1 : 0;

  std::vector<int> group_of(kSchemaClassCount, -1);
  for (int c = 0; c < kSchemaClassCount; ++c) {
    if (group_of[c] >= 0) continue;
    group_of[c] = static_cast<int>(out.groups.size());
    out.groups.push_back({c});
    out.in_sets.push_back(class_sets[c]);
    for (int d = c + 1; d < kSchemaClassCount; ++d)
      if (group_of[d] < 0 && class_sets[d] == class_sets[c]) {
        group_of[d] = group_of[c];
        out.groups[group_of[c]].push_back(d);
      }
  }

  auto subset = [&](int g1, int g2) {
    for (std::size_t i = 0; i < n; ++i)
      if (out.in_sets[g1][i] && !out.in_sets[g2][i]) return false;
    return true;
  };
  const int g = static_cast<int>(out.groups.size());
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b) {
      if (a == b || !subset(a, b)) continue;
      bool covered = false;
      for (int m = 0; m < g && !covered; ++m)
        covered = m != a && m != b && subset(a, m) && subset(m, b) && !subset(m, a) &&
                  !subset(b, m);
      if (!covered) out.hasse.emplace_back(a, b);
    }
  std::sort(out.hasse.begin(), out.hasse.end());
  return out;
}

std::string group_label(const DotLayout& l, int g) {
  std::string label;
  for (std::size_t i = 0; i < l.groups[g].size(); ++i) {
    if (i > 0) label += " = ";
    label += schema_class_name(static_cast<SchemaClass>(l.groups[g][i]));
  }
  return label;
}

}  // namespace

std::string schema_to_dot(const RelationSchema& s) {
  DotLayout l = layout_schema(s);
  std::string dot = "digraph relation_schema {\n";
  dot += "  rankdir=BT;\n";
  dot += "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t g = 0; g < l.groups.size(); ++g)
    dot += "  g" + std::to_string(g) + " [label=\"" + group_label(l, g) + "\"];\n";
  for (const auto& [from, to] : l.hasse)
    dot += "  g" + std::to_string(from) + " -> g" + std::to_string(to) + ";\n";
  // failed converses of drawn implications, with their separating witnesses
  for (const auto& [from, to] : l.hasse) {
    const SchemaNonEdge* ne = nullptr;
    for (int cb : l.groups[to]) {
      for (int ca : l.groups[from]) {
        ne = s.find_non_edge(static_cast<SchemaClass>(cb), static_cast<SchemaClass>(ca));
        if (ne) break;
      }
      if (ne) break;
    }
    if (!ne) continue;
    std::string label = ne->witness + " in " + ne->ring_id;
    if (ne->at_bound) label += " (at bound)";
    for (char& ch : label)
      if (ch == '"') ch = '\'';
    dot += "  g" + std::to_string(to) + " -> g" + std::to_string(from) +
           " [style=dashed, color=red, constraint=false, label=\"" + label + "\"];\n";
  }
  dot += "}\n";
  return dot;
}

std::string emit_report(const std::vector<ClaimResult>& results, const RelationSchema* schema,
                        ReportFormat format) {
  switch (format) {
    case ReportFormat::JSON: {
      json claims = json::array();
      for (const auto& r : results) claims.push_back(claim_result_to_json(r));
      json doc{{"claims", claims}};
      doc["schema"] = schema ? schema_to_json(*schema) : json::object();
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Markdown: {
      std::string md = "# Verification report\n\n";
      md += "| claim | ring | checked | verdict |\n";
      md += "|-------|------|---------|---------|\n";
      for (const auto& r : results) {
        std::string verdict;
        switch (r.verdict) {
          case ClaimResult::Verdict::Pass: verdict = "pass"; break;
          case ClaimResult::Verdict::Skipped: verdict = "skipped (" + r.skip_reason + ")"; break;
          case ClaimResult::Verdict::Counterexample: {
            verdict = "counterexample at (";
            for (std::size_t i = 0; i < r.tuple.size(); ++i)
              verdict += (i ? ", " : "") + r.tuple[i];
            verdict += ")";
            break;
          }
        }
        md += "| " + r.claim_id + " | " + r.ring_id + " | " +
              std::to_string(r.elements_checked) + " | " + verdict + " |\n";
      }
      if (schema) {
        md += "\n## Relation schema\n\nAudited rings: ";
        for (std::size_t i = 0; i < schema->rings.size(); ++i)
          md += (i ? ", " : "") + schema->rings[i];
        md += "\n\nSeparations:\n\n";
        for (const auto& ne : schema->non_edges) {
          md += std::string("- ") + schema_class_name(ne.from) + " does not imply " +
                schema_class_name(ne.to) + ": witness " + ne.witness + " in " + ne.ring_id;
          if (ne.at_bound) md += " (at solver bound)";
          md += "\n";
        }
      }
      return md;
    }
    case ReportFormat::DOT: {
      if (!schema) throw Error(Errc::InvalidFormat, "DOT output needs a schema");
      return schema_to_dot(*schema);
    }
  }
  throw Error(Errc::InvalidFormat, "unhandled report format");
}

}  // namespace ginv
