#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nbl/error.hpp"

namespace nbl::netlist {

enum class GateKind : std::uint8_t { NOT, AND, OR, NAND, NOR, XOR, XNOR, BUF };

inline constexpr std::size_t kGateKindCount = 8;

std::string_view gate_name(GateKind k) noexcept;
std::optional<GateKind> gate_from_name(std::string_view name) noexcept;
std::size_t gate_arity(GateKind k) noexcept;

/// One `wire` or `output` statement.
struct Statement {
  std::string name;
  GateKind kind = GateKind::BUF;
  std::vector<std::string> args;
  bool is_output = false;
  std::size_t line = 0;
};

/// Parsed netlist. Statements appear in source order; every argument names
/// an input or an earlier statement, so the order is already topological.
struct NetlistAst {
  std::vector<std::string> inputs;
  std::vector<std::size_t> input_lines;
  std::vector<Statement> statements;

  /// Output names in declaration order.
  std::vector<std::string> outputs() const;
};

/// Line-oriented grammar:
///
///     input a b c
///     wire n1 = AND a b
///     output y = XOR n1 c     # comment
///
/// Throws `ParseError` with the offending line for lexical errors, unknown
/// gates, undefined or redefined names, arity mismatches, and a netlist
/// without outputs.
NetlistAst parse(std::string_view text);

/// Canonical text form; parse(print(ast)) reproduces the same statements.
std::string print(const NetlistAst& ast);

/// Positional input assignment, one value per `NetlistAst::inputs` entry.
using InputVector = std::vector<bool>;
using NamedAssignment = std::map<std::string, bool>;

/// Reorders a named assignment into input order; throws
/// `Error(missing_input)` for an unbound input and `Error(invalid_argument)`
/// for a name that is not an input.
InputVector bind_inputs(const std::vector<std::string>& inputs,
                        const NamedAssignment& assignment);

/// Enumeration order used throughout: input 0 is the most significant bit.
InputVector assignment_from_index(std::size_t n_inputs, std::uint64_t index);

/// Values of every input and statement wire, keyed by name.
NamedAssignment eval_boolean(const NetlistAst& ast, const InputVector& inputs);
NamedAssignment eval_boolean(const NetlistAst& ast, const NamedAssignment& inputs);

// --- Lowering to the {NOT, AND} basis -------------------------------------

enum class PrimOp : std::uint8_t { NOT, AND };

std::string_view prim_name(PrimOp op) noexcept;

using WireId = std::uint32_t;

/// Wire numbering: wires [0, inputs) are the primary inputs in order; gate
/// g drives wire inputs + g.
struct Primitive {
  PrimOp op = PrimOp::NOT;
  std::array<WireId, 2> args{};
  /// Index of the source statement that produced this primitive.
  std::uint32_t source = 0;

  std::size_t arity() const noexcept { return op == PrimOp::NOT ? 1 : 2; }
};

struct NamedWire {
  std::string name;
  WireId wire = 0;
};

struct CompiledNetwork {
  std::vector<std::string> inputs;
  std::vector<NamedWire> outputs;
  /// Every statement's result wire, in statement order (outputs included).
  std::vector<NamedWire> statements;
  std::vector<Primitive> gates;

  std::size_t wire_count() const noexcept { return inputs.size() + gates.size(); }
  WireId gate_wire(std::size_t g) const noexcept {
    return static_cast<WireId>(inputs.size() + g);
  }
  /// Readable name for any wire: the input or statement name when the wire
  /// is one, otherwise `<statement>.<k>` for the k-th internal primitive.
  std::vector<std::string> wire_names() const;
};

/// One primitive step of a gate expansion. Operand codes: `kOperandA` and
/// `kOperandB` are the gate's own arguments, a value k >= 0 is the result
/// of step k of the same recipe. The last step is the gate's result.
struct RecipeStep {
  PrimOp op;
  std::array<int, 2> operands;
};

inline constexpr int kOperandA = -1;
inline constexpr int kOperandB = -2;

using Recipe = std::vector<RecipeStep>;
using ExpansionTable = std::array<Recipe, kGateKindCount>;

/// Fixed expansions:
///
///   | gate | primitives                                        | count |
///   |------|---------------------------------------------------|-------|
///   | NOT  | NOT a                                             | 1     |
///   | AND  | AND a b                                           | 1     |
///   | OR   | NOT a, NOT b, AND, NOT                            | 4     |
///   | NAND | AND a b, NOT                                      | 2     |
///   | NOR  | OR expansion, NOT                                 | 5     |
///   | XOR  | NOT b, AND a ~b, NOT a, AND ~a b, OR expansion    | 8     |
///   | XNOR | XOR expansion, NOT                                | 9     |
///   | BUF  | NOT a, NOT                                        | 2     |
const ExpansionTable& canonical_expansions();

CompiledNetwork lower(const NetlistAst& ast);
/// Lowering with a caller-supplied table, e.g. a deliberately wrong one for
/// fault-injection tests.
CompiledNetwork lower(const NetlistAst& ast, const ExpansionTable& table);

/// Evaluates every wire of the network. Throws `Error(missing_input)` if
/// the input vector is short.
std::vector<bool> eval_wires(const CompiledNetwork& net, const InputVector& inputs);
/// Output values in declaration order.
std::vector<bool> eval_outputs(const CompiledNetwork& net, const InputVector& inputs);
NamedAssignment eval_boolean(const CompiledNetwork& net, const NamedAssignment& inputs);

/// Throws `Error(invalid_argument)` if any operand does not precede its
/// gate or any referenced wire is out of range.
void check_topological(const CompiledNetwork& net);

}  // namespace nbl::netlist
