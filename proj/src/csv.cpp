#include "nbl/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace nbl {

void write_csv(std::ostream& os, const WaveformTable& table) {
  require_same_length(table.names.size(), table.columns.size(), "csv columns");
  const std::size_t steps = table.steps();
  for (const auto& c : table.columns) {
    require_same_length(c.size(), steps, "csv column");
  }
  os << "step";
  for (const auto& n : table.names) os << ',' << n;
  os << '\n';
  for (std::size_t t = 0; t < steps; ++t) {
    os << t;
    for (const auto& c : table.columns) os << ',' << c[t];
    os << '\n';
  }
}

std::string to_csv(const WaveformTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Level parse_level(const std::string& field, std::size_t row) {
  Level v{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw Error(Errc::invalid_argument, "csv row " + std::to_string(row) +
                                            ": bad value '" + field + "'");
  }
  return v;
}

}  // namespace

WaveformTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw Error(Errc::invalid_argument, "csv: missing header");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_fields(line);
  if (header.empty() || header.front() != "step") {
    throw Error(Errc::invalid_argument, "csv: header must start with 'step'");
  }
  WaveformTable table;
  table.names.assign(header.begin() + 1, header.end());
  std::vector<std::vector<Level>> cols(table.names.size());
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw Error(Errc::invalid_argument,
                  "csv row " + std::to_string(row) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    if (parse_level(fields[0], row) != static_cast<Level>(row)) {
      throw Error(Errc::length_mismatch,
                  "csv row " + std::to_string(row) + ": step index out of order");
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      cols[c].push_back(parse_level(fields[c + 1], row));
    }
    ++row;
  }
  for (auto& c : cols) table.columns.emplace_back(std::move(c));
  return table;
}

}  // namespace nbl
