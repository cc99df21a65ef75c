#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "hhm/errors.hpp"

namespace hhm::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_grid(std::string_view spec) {
  const auto first = spec.find(':');
  const auto second = first == std::string_view::npos ? first : spec.find(':', first + 1);
  if (second == std::string_view::npos || spec.find(':', second + 1) != std::string_view::npos) {
    throw DomainError("grid must have the form a:b:step, got '" + std::string(spec) + "'");
  }
  const double a = parse_number(spec.substr(0, first));
  const double b = parse_number(spec.substr(first + 1, second - first - 1));
  const double step = parse_number(spec.substr(second + 1));
  if (!std::isfinite(a) || !std::isfinite(b) || !(step > 0.0) || !std::isfinite(step)) {
    throw DomainError("grid needs finite bounds and a positive step");
  }
  if (b < a) throw DomainError("grid end lies before its start");
  const double count = std::floor((b - a) / step + 1e-9) + 1.0;
  if (count > 1e7) throw DomainError("grid has more than 1e7 points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < static_cast<long>(count); ++i) grid.push_back(a + static_cast<double>(i) * step);
  return grid;
}

RadialProfile parse_profile_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw DomainError("profile must look like bump:R=2");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (arg.substr(0, 2) != "R=") throw DomainError("profile argument must be R=<radius>");
  const double radius = parse_number(arg.substr(2));
  if (kind == "bump") return bump_profile(radius);
  if (kind == "zero") return zero_profile(radius);
  throw DomainError("unknown profile kind '" + std::string(kind) + "'");
}

RadialProfile read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("profile file is empty");
  std::vector<double> radii;
  std::vector<double> values;
  while (std::getline(in, line)) {
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos) throw DomainError("profile row needs two columns: '" + line + "'");
    radii.push_back(parse_number(row.substr(0, comma)));
    values.push_back(parse_number(row.substr(comma + 1)));
  }
  RadialProfile profile = sampled_profile(std::move(radii), std::move(values));
  profile.description = "file";
  return profile;
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size() && j < width.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      out << cells[j];
      if (j + 1 < cells.size()) out << std::string(width[j] - cells[j].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j > 0) out << ',';
      out << csv_field(cells[j]);
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace hhm::cli
