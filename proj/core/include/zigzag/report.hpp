#pragma once

#include <string>
#include <vector>

#include "zigzag/classify.hpp"
#include "zigzag/embedded_graph.hpp"
#include "zigzag/surgery.hpp"
#include "zigzag/tables.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag::report {

// Structured JSON documents, schema "zigzag-report/1".  Field order is
// fixed so output is byte-deterministic.

std::string validation(const EmbeddedGraph& g, const ValidationReport& rep);
std::string graph_file(const EmbeddedGraph& g);
std::string zigzags(const EmbeddedGraph& g, const ZigzagSet& zs);
std::string classification(const EmbeddedGraph& g, const ZigzagSet& zs);
std::string audit(const EmbeddedGraph& left, int left_face, const EmbeddedGraph& right,
                  int right_face, const AuditReport& rep);
std::string tables(const std::vector<TableRowResult>& rows);

}  // namespace zigzag::report
