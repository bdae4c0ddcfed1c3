#include "nbl/signal.hpp"

#include <algorithm>

namespace nbl {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_config: return "invalid-config";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::family_mismatch: return "family-mismatch";
    case Errc::invalid_level: return "invalid-level";
    case Errc::invalid_logic_value: return "invalid-logic-value";
    case Errc::orthogonality_violation: return "orthogonality-violation";
    case Errc::not_divisible: return "not-divisible";
    case Errc::generation_failed: return "generation-failed";
    case Errc::parse_error: return "parse-error";
    case Errc::missing_input: return "missing-input";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::ambiguous_window: return "ambiguous-window";
  }
  return "unknown";
}

const char* family_name(Family f) noexcept {
  return f == Family::rtw ? "rtw" : "spike";
}

void require_same_length(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw Error(Errc::length_mismatch, std::string(where) + ": lengths " +
                                           std::to_string(a) + " and " +
                                           std::to_string(b) + " differ");
  }
}

namespace {

template <class Op>
Waveform zip(std::span<const Level> a, std::span<const Level> b,
             const char* where, Op op) {
  require_same_length(a.size(), b.size(), where);
  std::vector<Level> out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), op);
  return Waveform(std::move(out));
}

}  // namespace

Waveform add(std::span<const Level> a, std::span<const Level> b) {
  return zip(a, b, "add", [](Level x, Level y) { return x + y; });
}

Waveform sub(std::span<const Level> a, std::span<const Level> b) {
  return zip(a, b, "sub", [](Level x, Level y) { return x - y; });
}

Waveform mul(std::span<const Level> a, std::span<const Level> b) {
  return zip(a, b, "mul", [](Level x, Level y) { return x * y; });
}

Waveform scale_quarter(std::span<const Level> a) {
  std::vector<Level> out(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] % 4 != 0) {
      throw Error(Errc::not_divisible, "scale_quarter: value " +
                                           std::to_string(a[t]) +
                                           " at step " + std::to_string(t) +
                                           " is not a multiple of 4");
    }
    out[t] = a[t] / 4;
  }
  return Waveform(std::move(out));
}

RtwSignal mul(const RtwSignal& a, const RtwSignal& b) {
  return RtwSignal(mul(a.values(), b.values()));
}

std::size_t spike_count(const SpikeTrain& s) noexcept {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), 1));
}

std::size_t zero_count(std::span<const Level> a) noexcept {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), 0));
}

}  // namespace nbl
