#pragma once

// Deterministic report emission: identical inputs give byte-identical
// documents in every format.

#include <string>
#include <vector>

#include "ginv/claims.hpp"
#include "ginv/schema.hpp"

namespace ginv {

enum class ReportFormat { JSON, Markdown, DOT };
ReportFormat parse_report_format(const std::string& name);  // "json"|"md"|"markdown"|"dot"

std::string emit_report(const std::vector<ClaimResult>& results, const RelationSchema* schema,
                        ReportFormat format);

json claim_result_to_json(const ClaimResult& r);
json schema_to_json(const RelationSchema& s);
std::string schema_to_dot(const RelationSchema& s);

}  // namespace ginv
