#include "syzlab/workbench/report.hpp"

#include <sstream>

namespace syzlab::workbench {

json report_to_json(const Report& report) {
    // an array keeps the tables in emission order
    json tables = json::array();
    for (const auto& t : report.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
    json out{{"header", report.header}, {"result", report.result}, {"tables", tables}};
    if (!report.findings.empty()) out["findings"] = report.findings;
    return out;
}

Report report_from_json(const json& doc) {
    Report r;
    r.header = doc.at("header");
    r.result = doc.at("result");
    for (const auto& t : doc.at("tables"))
        r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                            t.at("rows").get<std::vector<std::vector<std::string>>>()});
    if (doc.contains("findings")) r.findings = doc.at("findings");
    return r;
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "markdown") return Format::Markdown;
    throw InputError("unknown format '" + text + "' (expected json, csv or markdown)");
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void markdown_value(std::ostringstream& os, const std::string& key, const json& v, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    if (v.is_object() && !v.empty()) {
        os << indent << "- " << key << ":\n";
        for (const auto& [k, x] : v.items()) markdown_value(os, k, x, depth + 1);
    } else {
        os << indent << "- " << key << ": " << scalar_text(v) << "\n";
    }
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::Json:
            os << report_to_json(report).dump(2) << "\n";
            break;
        case Format::Csv: {
            // tabular sections only
            bool first = true;
            for (const auto& t : report.tables) {
                if (!first) os << "\n";
                first = false;
                if (report.tables.size() > 1) os << "# " << t.name << "\n";
                for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
                os << "\n";
                for (const auto& row : t.rows) {
                    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
                    os << "\n";
                }
            }
            break;
        }
        case Format::Markdown: {
            os << "# syzlab " << scalar_text(report.header.value("task", json("report"))) << "\n\n";
            for (const auto& [k, v] : report.header.items()) markdown_value(os, k, v, 0);
            os << "\n## Result\n\n";
            for (const auto& [k, v] : report.result.items()) markdown_value(os, k, v, 0);
            for (const auto& t : report.tables) {
                os << "\n## " << t.name << "\n\n|";
                for (const auto& c : t.columns) os << " " << c << " |";
                os << "\n|";
                for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
                os << "\n";
                for (const auto& row : t.rows) {
                    os << "|";
                    for (const auto& cell : row) os << " " << cell << " |";
                    os << "\n";
                }
            }
            if (!report.findings.empty()) {
                os << "\n## FINDINGS\n\n";
                for (const auto& f : report.findings) os << "- " << f.dump() << "\n";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace syzlab::workbench
