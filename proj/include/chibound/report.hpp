#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace chibound {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Json, Csv };

ReportFormat parse_report_format(const std::string& name);

/// Machine and human report shared by every CLI command:
/// {command, params, rows[], violations[], stats}. Key order is insertion
/// order so identical inputs serialise byte-identically.
struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Json> rows;
    std::vector<Json> violations;
    Json stats = Json::object();
    std::vector<std::string> notes; // text format only

    Json to_json() const;
};

/// Text: aligned tables for rows and violations, then stats and notes.
/// CSV: the rows table only. Nested values are omitted from text and CSV.
std::string render(const Report& report, ReportFormat format);

} // namespace chibound
