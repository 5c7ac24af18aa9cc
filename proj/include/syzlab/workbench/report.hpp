#pragma once

#include <string>
#include <vector>

#include "syzlab/workbench/problem.hpp"

namespace syzlab::workbench {

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    json header = json::object();
    json result = json::object();
    std::vector<Table> tables;
    json findings = json::array();
};

json report_to_json(const Report& report);
Report report_from_json(const json& doc);

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& text);

/// Deterministic: keys sorted, rationals as [num, den], no timings.
std::string emit_report(const Report& report, Format format);

}  // namespace syzlab::workbench
