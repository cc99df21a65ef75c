#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhm/transform.hpp"

namespace hhm::cli {

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view text);

/// Shortest decimal representation that reads back to the same double.
std::string format_number(double x);

/// Quote a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

/// "a:b:step" -> {a, a+step, ..., <= b}. Throws DomainError on malformed or
/// non-monotone specs.
std::vector<double> parse_grid(std::string_view spec);

/// Strict double parse of the whole string. Throws DomainError.
double parse_number(std::string_view text);

/// "bump:R=2" or "zero:R=2".
RadialProfile parse_profile_spec(std::string_view spec);

/// CSV with a header row followed by "r,F(r)" rows.
RadialProfile read_profile_csv(std::istream& in);

/// Simple left-aligned table with a header row.
void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace hhm::cli
