#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace pps {

enum class OutputFormat { Csv, Tsv, Json };

OutputFormat parse_format(std::string_view name);
const char* to_string(OutputFormat format);

/// Reals print with exactly this many decimals in every encoding.
inline constexpr int kDecimals = 4;

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rows of named columns plus free-form metadata (JSON only).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// Fixed-point rendering with `kDecimals` places; -0.0000 renders as 0.0000.
std::string format_real(double value);

/// Delimited text with a header row, or `{"meta": ..., "data": [{...}]}`.
/// For JSON, reals are the numeric value of their fixed-point rendering so
/// that every encoding carries identical numbers.
void emit(std::ostream& out, const Table& table, OutputFormat format);

}  // namespace pps
