#include "nbl/rtw_gates.hpp"

namespace nbl::rtw {

GateContext::GateContext(RtwPair pair)
    : pair_(std::move(pair)),
      universe_(universe_rtw(pair_)),
      difference_(sub(pair_.h.values(), pair_.l.values())) {
  require_same_length(pair_.h.size(), pair_.l.size(), "rtw gate context");
}

void GateContext::require_logic_value(const RtwSignal& x,
                                      const char* where) const {
  require_same_length(x.size(), size(), where);
  if (!is_logic_value(x, pair_)) {
    throw Error(Errc::invalid_logic_value,
                std::string(where) + ": input equals neither H nor L");
  }
}

RtwSignal not_additive(const GateContext& ctx, const RtwSignal& x) {
  ctx.require_logic_value(x, "not_additive");
  return RtwSignal(sub(ctx.universe().values(), x.values()));
}

RtwSignal not_multiplicative(const GateContext& ctx, const RtwSignal& x) {
  require_same_length(x.size(), ctx.size(), "not_multiplicative");
  const auto& h = ctx.h();
  const auto& l = ctx.l();
  std::vector<Level> out(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) out[t] = x[t] * h[t] * l[t];
  return RtwSignal(std::move(out));
}

RtwSignal and_gate(const GateContext& ctx, const RtwSignal& x1,
                   const RtwSignal& x2) {
  ctx.require_logic_value(x1, "and_gate");
  ctx.require_logic_value(x2, "and_gate");
  const auto& d = ctx.difference();
  const auto& l = ctx.l();
  std::vector<Level> out(x1.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    const Level cube = d[t] * (x1[t] - l[t]) * (x2[t] - l[t]);
    // Each factor is in {-2, 0, 2}, so the product is a multiple of 4
    // whenever the inputs are logic values.
    if (cube % 4 != 0) {
      throw Error(Errc::not_divisible,
                  "and_gate: cube not divisible by 4 at step " +
                      std::to_string(t));
    }
    out[t] = cube / 4 + l[t];
  }
  return RtwSignal(std::move(out));
}

RtwSignal or_gate(const GateContext& ctx, const RtwSignal& a,
                  const RtwSignal& b) {
  return not_multiplicative(
      ctx, and_gate(ctx, not_multiplicative(ctx, a), not_multiplicative(ctx, b)));
}

RtwSignal nand_gate(const GateContext& ctx, const RtwSignal& a,
                    const RtwSignal& b) {
  return not_multiplicative(ctx, and_gate(ctx, a, b));
}

RtwSignal nor_gate(const GateContext& ctx, const RtwSignal& a,
                   const RtwSignal& b) {
  return not_multiplicative(ctx, or_gate(ctx, a, b));
}

RtwSignal xor_gate(const GateContext& ctx, const RtwSignal& a,
                   const RtwSignal& b) {
  return or_gate(ctx, and_gate(ctx, a, not_multiplicative(ctx, b)),
                 and_gate(ctx, not_multiplicative(ctx, a), b));
}

RtwSignal xnor_gate(const GateContext& ctx, const RtwSignal& a,
                    const RtwSignal& b) {
  return not_multiplicative(ctx, xor_gate(ctx, a, b));
}

}  // namespace nbl::rtw
