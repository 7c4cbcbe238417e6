#include "chibound/report.hpp"

#include "chibound/error.hpp"

#include <algorithm>
#include <sstream>

namespace chibound {

ReportFormat parse_report_format(const std::string& name)
{
    if (name == "text")
        return ReportFormat::Text;
    if (name == "json")
        return ReportFormat::Json;
    if (name == "csv")
        return ReportFormat::Csv;
    throw Error(Errc::InvalidParams, "unknown report format " + name);
}

Json Report::to_json() const
{
    Json out;
    out["command"] = command;
    out["params"] = params;
    out["rows"] = rows;
    out["violations"] = violations;
    out["stats"] = stats;
    return out;
}

namespace {

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

std::string cell(const Json& v)
{
    if (v.is_null())
        return "-";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

std::vector<std::string> scalar_columns(const std::vector<Json>& rows)
{
    std::vector<std::string> cols;
    for (const auto& row : rows)
        for (const auto& [key, value] : row.items())
            if (is_scalar(value) && std::find(cols.begin(), cols.end(), key) == cols.end())
                cols.push_back(key);
    return cols;
}

void write_table(std::ostream& os, const std::vector<Json>& rows)
{
    const auto cols = scalar_columns(rows);
    if (cols.empty())
        return;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], cell(row.value(cols[c], Json())).size());
    }
    auto line = [&](auto&& value_of) {
        std::string text;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string v = value_of(c);
            if (c > 0)
                text += "  ";
            text += std::string(width[c] - v.size(), ' ') + v;
        }
        os << text << '\n';
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& row : rows)
        line([&](std::size_t c) { return cell(row.value(cols[c], Json())); });
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

std::string render(const Report& report, ReportFormat format)
{
    std::ostringstream os;
    switch (format) {
    case ReportFormat::Json:
        os << report.to_json().dump(2) << '\n';
        break;
    case ReportFormat::Csv: {
        const auto cols = scalar_columns(report.rows);
        for (std::size_t c = 0; c < cols.size(); ++c)
            os << (c ? "," : "") << csv_escape(cols[c]);
        if (!cols.empty())
            os << '\n';
        for (const auto& row : report.rows) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const Json v = row.value(cols[c], Json());
                os << (c ? "," : "") << (v.is_null() ? "" : csv_escape(cell(v)));
            }
            os << '\n';
        }
        break;
    }
    case ReportFormat::Text: {
        os << "# " << report.command;
        for (const auto& [key, value] : report.params.items())
            os << "  " << key << "=" << cell(value);
        os << '\n';
        write_table(os, report.rows);
        if (!report.violations.empty()) {
            os << "\nviolations:\n";
            write_table(os, report.violations);
        }
        if (!report.stats.empty()) {
            os << '\n';
            for (const auto& [key, value] : report.stats.items())
                os << key << ": " << (is_scalar(value) ? cell(value) : value.dump()) << '\n';
        }
        for (const auto& note : report.notes)
            os << note << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace chibound
