#pragma once

#include "nbl/reference.hpp"

namespace nbl::rtw {

/// Read-only gate context: the reference pair plus the universe U = H + L
/// and the raw difference D = H - L, both cached once.
class GateContext {
 public:
  explicit GateContext(RtwPair pair);

  const RtwPair& pair() const noexcept { return pair_; }
  const RtwSignal& h() const noexcept { return pair_.h; }
  const RtwSignal& l() const noexcept { return pair_.l; }
  const MultiLevelSignal& universe() const noexcept { return universe_; }
  /// H - L, values in {-2, 0, +2}.
  const MultiLevelSignal& difference() const noexcept { return difference_; }
  std::size_t size() const noexcept { return pair_.size(); }

  /// Throws `Error(invalid_logic_value)` unless x equals H or L exactly.
  void require_logic_value(const RtwSignal& x, const char* where) const;

 private:
  RtwPair pair_;
  MultiLevelSignal universe_;
  MultiLevelSignal difference_;
};

/// NOT as U - x. Only closed over logic values, so x must be H or L.
RtwSignal not_additive(const GateContext& ctx, const RtwSignal& x);

/// NOT as x·H·L. Closed over every ±1 waveform; only length is checked.
RtwSignal not_multiplicative(const GateContext& ctx, const RtwSignal& x);

/// AND as ¼·(H−L)(x1−L)(x2−L) + L with exact integer arithmetic. Inputs
/// must be logic values.
RtwSignal and_gate(const GateContext& ctx, const RtwSignal& x1,
                   const RtwSignal& x2);

// Derived gates, composed from not_multiplicative and and_gate:
//   OR(a,b)  = NOT(AND(NOT a, NOT b))
//   NAND     = NOT ∘ AND
//   NOR      = NOT ∘ OR
//   XOR(a,b) = OR(AND(a, NOT b), AND(NOT a, b))
//   XNOR     = NOT ∘ XOR
RtwSignal or_gate(const GateContext& ctx, const RtwSignal& a, const RtwSignal& b);
RtwSignal nand_gate(const GateContext& ctx, const RtwSignal& a, const RtwSignal& b);
RtwSignal nor_gate(const GateContext& ctx, const RtwSignal& a, const RtwSignal& b);
RtwSignal xor_gate(const GateContext& ctx, const RtwSignal& a, const RtwSignal& b);
RtwSignal xnor_gate(const GateContext& ctx, const RtwSignal& a, const RtwSignal& b);

}  // namespace nbl::rtw
