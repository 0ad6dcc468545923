#include "pps/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "pps/error.hpp"

namespace pps {

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "tsv") return OutputFormat::Tsv;
    if (name == "json") return OutputFormat::Json;
    throw Error(ErrorCode::InvalidConfig, "unknown output format '" + std::string(name) + "'");
}

const char* to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Tsv: return "tsv";
        case OutputFormat::Json: return "json";
    }
    return "csv";
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", kDecimals, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

namespace {

std::string cell_text(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) return format_real(*d);
    return std::get<std::string>(cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
    if (const auto* d = std::get_if<double>(&cell)) return std::strtod(format_real(*d).c_str(), nullptr);
    return std::get<std::string>(cell);
}

void emit_delimited(std::ostream& out, const Table& table, char sep) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out << sep;
        out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << sep;
            out << cell_text(row[c]);
        }
        out << '\n';
    }
}

}  // namespace

void emit(std::ostream& out, const Table& table, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: emit_delimited(out, table, ','); return;
        case OutputFormat::Tsv: emit_delimited(out, table, '\t'); return;
        case OutputFormat::Json: {
            nlohmann::ordered_json doc;
            doc["meta"] = table.meta;
            auto data = nlohmann::ordered_json::array();
            for (const auto& row : table.rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c)
                    obj[table.columns[c]] = cell_json(row[c]);
                data.push_back(std::move(obj));
            }
            doc["data"] = std::move(data);
            out << doc.dump(2) << '\n';
            return;
        }
    }
}

}  // namespace pps
