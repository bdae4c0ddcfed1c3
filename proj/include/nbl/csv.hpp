#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nbl/signal.hpp"

namespace nbl {

/// Named waveform columns in the shared CSV layout:
///
///     step,<name1>,<name2>,...
///     0,1,-1,...
///
/// One row per clock step, values as decimal integers.
struct WaveformTable {
  std::vector<std::string> names;
  std::vector<Waveform> columns;

  template <class Levels>
  void add(std::string name, const Signal<Levels>& s) {
    names.push_back(std::move(name));
    columns.emplace_back(s);
  }

  std::size_t steps() const noexcept {
    return columns.empty() ? 0 : columns.front().size();
  }
};

void write_csv(std::ostream& os, const WaveformTable& table);
std::string to_csv(const WaveformTable& table);

/// Parses the CSV layout back. Throws `Error(invalid_argument)` on a
/// malformed header, a ragged row, or a non-integer field, and
/// `Error(length_mismatch)` if step indices are not 0,1,2,...
WaveformTable read_csv(std::istream& is);

}  // namespace nbl
