#include "nbl/netlist.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nbl::netlist {

namespace {

constexpr std::array<std::string_view, kGateKindCount> kGateNames = {
    "NOT", "AND", "OR", "NAND", "NOR", "XOR", "XNOR", "BUF"};

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_keyword(std::string_view w) {
  return w == "input" || w == "wire" || w == "output" || gate_from_name(w);
}

std::vector<std::string> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '=') {
      tokens.emplace_back("=");
      ++i;
      continue;
    }
    if (!is_ident_start(c)) {
      throw ParseError(lineno, std::string("unexpected character '") + c + "'");
    }
    std::size_t j = i + 1;
    while (j < line.size() && is_ident_char(line[j])) ++j;
    tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

void check_name(const std::string& name, std::size_t lineno) {
  if (name == "=" ) throw ParseError(lineno, "expected a name, got '='");
  if (is_keyword(name)) {
    throw ParseError(lineno, "'" + name + "' is a reserved word");
  }
}

}  // namespace

std::string_view gate_name(GateKind k) noexcept {
  return kGateNames[static_cast<std::size_t>(k)];
}

std::optional<GateKind> gate_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

std::size_t gate_arity(GateKind k) noexcept {
  return (k == GateKind::NOT || k == GateKind::BUF) ? 1 : 2;
}

std::vector<std::string> NetlistAst::outputs() const {
  std::vector<std::string> out;
  for (const auto& s : statements) {
    if (s.is_output) out.push_back(s.name);
  }
  return out;
}

NetlistAst parse(std::string_view text) {
  NetlistAst ast;
  std::unordered_set<std::string> defined;
  std::size_t lineno = 0;
  std::size_t last_content = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = text.substr(start, end - start);
    ++lineno;
    start = end + 1;

    const auto tokens = tokenize(line, lineno);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_content = lineno;
    const std::string& head = tokens[0];
    if (head == "input") {
      if (tokens.size() < 2) throw ParseError(lineno, "input needs at least one name");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        check_name(tokens[i], lineno);
        if (!defined.insert(tokens[i]).second) {
          throw ParseError(lineno, "redefinition of '" + tokens[i] + "'");
        }
        ast.inputs.push_back(tokens[i]);
        ast.input_lines.push_back(lineno);
      }
    } else if (head == "wire" || head == "output") {
      if (tokens.size() < 4 || tokens[2] != "=") {
        throw ParseError(lineno, "expected '" + head + " <name> = <GATE> <args>'");
      }
      Statement st;
      st.name = tokens[1];
      st.is_output = head == "output";
      st.line = lineno;
      check_name(st.name, lineno);
      const auto kind = gate_from_name(tokens[3]);
      if (!kind) throw ParseError(lineno, "unknown gate '" + tokens[3] + "'");
      st.kind = *kind;
      st.args.assign(tokens.begin() + 4, tokens.end());
      if (st.args.size() != gate_arity(st.kind)) {
        throw ParseError(lineno, std::string(gate_name(st.kind)) + " takes " +
                                     std::to_string(gate_arity(st.kind)) +
                                     " argument(s), got " +
                                     std::to_string(st.args.size()));
      }
      for (const auto& a : st.args) {
        check_name(a, lineno);
        if (!defined.count(a)) {
          throw ParseError(lineno, "undefined name '" + a + "'");
        }
      }
      if (!defined.insert(st.name).second) {
        throw ParseError(lineno, "redefinition of '" + st.name + "'");
      }
      ast.statements.push_back(std::move(st));
    } else {
      throw ParseError(lineno, "expected 'input', 'wire' or 'output', got '" + head + "'");
    }
    if (end == text.size()) break;
  }
  if (ast.outputs().empty()) {
    throw ParseError(std::max<std::size_t>(last_content, 1), "netlist declares no outputs");
  }
  return ast;
}

std::string print(const NetlistAst& ast) {
  std::ostringstream os;
  if (!ast.inputs.empty()) {
    os << "input";
    for (const auto& n : ast.inputs) os << ' ' << n;
    os << '\n';
  }
  for (const auto& s : ast.statements) {
    os << (s.is_output ? "output " : "wire ") << s.name << " = "
       << gate_name(s.kind);
    for (const auto& a : s.args) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

InputVector bind_inputs(const std::vector<std::string>& inputs,
                        const NamedAssignment& assignment) {
  for (const auto& [name, value] : assignment) {
    if (std::find(inputs.begin(), inputs.end(), name) == inputs.end()) {
      throw Error(Errc::invalid_argument, "'" + name + "' is not an input");
    }
  }
  InputVector out;
  out.reserve(inputs.size());
  for (const auto& n : inputs) {
    const auto it = assignment.find(n);
    if (it == assignment.end()) {
      throw Error(Errc::missing_input, "no value bound for input '" + n + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

InputVector assignment_from_index(std::size_t n_inputs, std::uint64_t index) {
  InputVector v(n_inputs);
  for (std::size_t i = 0; i < n_inputs; ++i) {
    v[i] = ((index >> (n_inputs - 1 - i)) & 1U) != 0;
  }
  return v;
}

namespace {

bool apply_gate(GateKind k, bool a, bool b) {
  switch (k) {
    case GateKind::NOT: return !a;
    case GateKind::BUF: return a;
    case GateKind::AND: return a && b;
    case GateKind::OR: return a || b;
    case GateKind::NAND: return !(a && b);
    case GateKind::NOR: return !(a || b);
    case GateKind::XOR: return a != b;
    case GateKind::XNOR: return a == b;
  }
  return false;
}

}  // namespace

NamedAssignment eval_boolean(const NetlistAst& ast, const InputVector& inputs) {
  if (inputs.size() < ast.inputs.size()) {
    throw Error(Errc::missing_input, "assignment covers " +
                                         std::to_string(inputs.size()) + " of " +
                                         std::to_string(ast.inputs.size()) +
                                         " inputs");
  }
  NamedAssignment values;
  for (std::size_t i = 0; i < ast.inputs.size(); ++i) values[ast.inputs[i]] = inputs[i];
  for (const auto& s : ast.statements) {
    const bool a = values.at(s.args[0]);
    const bool b = s.args.size() > 1 ? values.at(s.args[1]) : false;
    values[s.name] = apply_gate(s.kind, a, b);
  }
  return values;
}

NamedAssignment eval_boolean(const NetlistAst& ast, const NamedAssignment& inputs) {
  return eval_boolean(ast, bind_inputs(ast.inputs, inputs));
}

std::string_view prim_name(PrimOp op) noexcept {
  return op == PrimOp::NOT ? "NOT" : "AND";
}

const ExpansionTable& canonical_expansions() {
  using enum PrimOp;
  constexpr int A = kOperandA;
  constexpr int B = kOperandB;
  static const ExpansionTable table = [] {
    ExpansionTable t;
    const Recipe or_recipe = {{NOT, {A, 0}}, {NOT, {B, 0}}, {AND, {0, 1}}, {NOT, {2, 0}}};
    // AND(a, ~b) and AND(~a, b), then the OR expansion shifted by 4.
    const Recipe xor_recipe = {{NOT, {B, 0}}, {AND, {A, 0}}, {NOT, {A, 0}},
                               {AND, {2, B}}, {NOT, {1, 0}}, {NOT, {3, 0}},
                               {AND, {4, 5}}, {NOT, {6, 0}}};
    t[static_cast<std::size_t>(GateKind::NOT)] = {{NOT, {A, 0}}};
    t[static_cast<std::size_t>(GateKind::AND)] = {{AND, {A, B}}};
    t[static_cast<std::size_t>(GateKind::OR)] = or_recipe;
    t[static_cast<std::size_t>(GateKind::NAND)] = {{AND, {A, B}}, {NOT, {0, 0}}};
    Recipe nor = or_recipe;
    nor.push_back({NOT, {3, 0}});
    t[static_cast<std::size_t>(GateKind::NOR)] = nor;
    t[static_cast<std::size_t>(GateKind::XOR)] = xor_recipe;
    Recipe xnor = xor_recipe;
    xnor.push_back({NOT, {7, 0}});
    t[static_cast<std::size_t>(GateKind::XNOR)] = xnor;
    t[static_cast<std::size_t>(GateKind::BUF)] = {{NOT, {A, 0}}, {NOT, {0, 0}}};
    return t;
  }();
  return table;
}

CompiledNetwork lower(const NetlistAst& ast) {
  return lower(ast, canonical_expansions());
}

CompiledNetwork lower(const NetlistAst& ast, const ExpansionTable& table) {
  CompiledNetwork net;
  net.inputs = ast.inputs;
  std::unordered_map<std::string, WireId> wire_of;
  for (std::size_t i = 0; i < ast.inputs.size(); ++i) {
    wire_of[ast.inputs[i]] = static_cast<WireId>(i);
  }
  for (std::size_t si = 0; si < ast.statements.size(); ++si) {
    const auto& s = ast.statements[si];
    const Recipe& recipe = table[static_cast<std::size_t>(s.kind)];
    if (recipe.empty()) {
      throw Error(Errc::invalid_argument,
                  "no expansion for gate " + std::string(gate_name(s.kind)));
    }
    const WireId a = wire_of.at(s.args[0]);
    const WireId b = s.args.size() > 1 ? wire_of.at(s.args[1]) : a;
    std::vector<WireId> step_wire;
    step_wire.reserve(recipe.size());
    auto resolve = [&](int code) -> WireId {
      if (code == kOperandA) return a;
      if (code == kOperandB) return b;
      return step_wire.at(static_cast<std::size_t>(code));
    };
    for (const auto& step : recipe) {
      Primitive p;
      p.op = step.op;
      p.source = static_cast<std::uint32_t>(si);
      p.args[0] = resolve(step.operands[0]);
      p.args[1] = step.op == PrimOp::AND ? resolve(step.operands[1]) : 0;
      step_wire.push_back(net.gate_wire(net.gates.size()));
      net.gates.push_back(p);
    }
    wire_of[s.name] = step_wire.back();
    net.statements.push_back({s.name, step_wire.back()});
    if (s.is_output) net.outputs.push_back({s.name, step_wire.back()});
  }
  return net;
}

std::vector<std::string> CompiledNetwork::wire_names() const {
  std::vector<std::string> names(wire_count());
  for (std::size_t i = 0; i < inputs.size(); ++i) names[i] = inputs[i];
  std::vector<std::size_t> seen(statements.size(), 0);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const auto src = gates[g].source;
    names[gate_wire(g)] =
        statements[src].name + "." + std::to_string(seen[src]++);
  }
  for (const auto& s : statements) names[s.wire] = s.name;
  return names;
}

void check_topological(const CompiledNetwork& net) {
  for (std::size_t g = 0; g < net.gates.size(); ++g) {
    const auto& p = net.gates[g];
    for (std::size_t k = 0; k < p.arity(); ++k) {
      if (p.args[k] >= net.gate_wire(g)) {
        throw Error(Errc::invalid_argument,
                    "gate " + std::to_string(g) + " reads wire " +
                        std::to_string(p.args[k]) + " before it is driven");
      }
    }
  }
  for (const auto& o : net.outputs) {
    if (o.wire >= net.wire_count()) {
      throw Error(Errc::invalid_argument, "output '" + o.name + "' out of range");
    }
  }
}

std::vector<bool> eval_wires(const CompiledNetwork& net, const InputVector& inputs) {
  if (inputs.size() < net.inputs.size()) {
    throw Error(Errc::missing_input, "assignment covers " +
                                         std::to_string(inputs.size()) + " of " +
                                         std::to_string(net.inputs.size()) +
                                         " inputs");
  }
  std::vector<bool> w(net.wire_count());
  for (std::size_t i = 0; i < net.inputs.size(); ++i) w[i] = inputs[i];
  for (std::size_t g = 0; g < net.gates.size(); ++g) {
    const auto& p = net.gates[g];
    w[net.gate_wire(g)] =
        p.op == PrimOp::NOT ? !w[p.args[0]] : (w[p.args[0]] && w[p.args[1]]);
  }
  return w;
}

std::vector<bool> eval_outputs(const CompiledNetwork& net, const InputVector& inputs) {
  const auto w = eval_wires(net, inputs);
  std::vector<bool> out;
  out.reserve(net.outputs.size());
  for (const auto& o : net.outputs) out.push_back(w[o.wire]);
  return out;
}

NamedAssignment eval_boolean(const CompiledNetwork& net, const NamedAssignment& inputs) {
  const auto w = eval_wires(net, bind_inputs(net.inputs, inputs));
  NamedAssignment out;
  for (std::size_t i = 0; i < net.inputs.size(); ++i) out[net.inputs[i]] = w[i];
  for (const auto& s : net.statements) out[s.name] = w[s.wire];
  return out;
}

}  // namespace nbl::netlist
