#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbl/error.hpp"

namespace nbl {

/// One clock-step value. All waveform arithmetic is exact integer math.
using Level = std::int32_t;

enum class Family { rtw, spike };

const char* family_name(Family f) noexcept;

namespace levels {

/// Unconstrained integers (intermediate products such as the AND cube).
struct Any {
  static constexpr const char* name = "waveform";
  static constexpr bool valid(Level) noexcept { return true; }
};

/// Bipolar telegraph values, -1 or +1.
struct Bipolar {
  static constexpr const char* name = "RTW signal";
  static constexpr bool valid(Level v) noexcept { return v == -1 || v == 1; }
};

/// Five-level additive intermediates in [-2, +2].
struct MultiLevel {
  static constexpr const char* name = "multi-level signal";
  static constexpr bool valid(Level v) noexcept { return v >= -2 && v <= 2; }
};

/// Unipolar spike indicator, 0 or 1.
struct Unipolar {
  static constexpr const char* name = "spike train";
  static constexpr bool valid(Level v) noexcept { return v == 0 || v == 1; }
};

}  // namespace levels

/// Immutable clocked waveform whose step values are constrained by `Levels`.
/// Construction validates every element and throws `Error(invalid_level)`
/// on violation.
template <class Levels>
class Signal {
 public:
  using levels_type = Levels;

  Signal() = default;

  explicit Signal(std::vector<Level> values) : values_(std::move(values)) {
    validate();
  }

  Signal(std::initializer_list<Level> values) : values_(values) { validate(); }

  /// Re-typing conversion; validates against the target level set.
  template <class Other>
  explicit Signal(const Signal<Other>& other)
      : Signal(std::vector<Level>(other.values().begin(),
                                  other.values().end())) {}

  static Signal filled(std::size_t steps, Level value) {
    return Signal(std::vector<Level>(steps, value));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Level operator[](std::size_t t) const noexcept { return values_[t]; }
  std::span<const Level> values() const noexcept { return values_; }
  const std::vector<Level>& vector() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  template <class Other>
  bool same_values(const Signal<Other>& other) const noexcept {
    return std::equal(values_.begin(), values_.end(), other.values().begin(),
                      other.values().end());
  }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  void validate() const {
    for (std::size_t t = 0; t < values_.size(); ++t) {
      if (!Levels::valid(values_[t])) {
        throw Error(Errc::invalid_level,
                    std::string(Levels::name) + ": value " +
                        std::to_string(values_[t]) + " not allowed at step " +
                        std::to_string(t));
      }
    }
  }

  std::vector<Level> values_;
};

using Waveform = Signal<levels::Any>;
using RtwSignal = Signal<levels::Bipolar>;
using MultiLevelSignal = Signal<levels::MultiLevel>;
using SpikeTrain = Signal<levels::Unipolar>;

/// Throws `Error(length_mismatch)` unless `a` and `b` have equal length.
void require_same_length(std::size_t a, std::size_t b, const char* where);

// Exact elementwise arithmetic.
Waveform add(std::span<const Level> a, std::span<const Level> b);
Waveform sub(std::span<const Level> a, std::span<const Level> b);
Waveform mul(std::span<const Level> a, std::span<const Level> b);
/// Divides every element by 4; throws `Error(not_divisible)` if any element
/// is not a multiple of 4.
Waveform scale_quarter(std::span<const Level> a);

/// Product of two bipolar waves stays bipolar.
RtwSignal mul(const RtwSignal& a, const RtwSignal& b);

/// Number of steps with a spike.
std::size_t spike_count(const SpikeTrain& s) noexcept;
std::size_t zero_count(std::span<const Level> a) noexcept;

}  // namespace nbl
