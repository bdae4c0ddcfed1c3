#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nbl/netlist.hpp"
#include "nbl/report.hpp"
#include "random_netlist.hpp"

using namespace nbl;
using namespace nbl::netlist;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

std::size_t primitive_count(GateKind k) {
  const std::string text = std::string("input a b\noutput y = ") +
                           std::string(gate_name(k)) +
                           (gate_arity(k) == 1 ? " a\n" : " a b\n");
  return lower(parse(text)).gates.size();
}

}  // namespace

TEST_CASE("parse the full adder") {
  const auto ast = parse(read_file(NBL_TEST_DATA_DIR "/full_adder.net"));
  CHECK(ast.inputs == std::vector<std::string>{"a", "b", "cin"});
  CHECK(ast.outputs() == std::vector<std::string>{"sum", "cout"});
  for (std::uint64_t k = 0; k < 8; ++k) {
    const auto in = assignment_from_index(3, k);
    const auto v = eval_boolean(ast, in);
    const int total = in[0] + in[1] + in[2];
    CHECK(v.at("sum") == (total % 2 == 1));
    CHECK(v.at("cout") == (total >= 2));
  }
}

TEST_CASE("comments, blank lines and multiple input lines") {
  const auto ast = parse(
      "# header\n"
      "\n"
      "input a   # first\n"
      "input b\n"
      "wire n = NAND a b\n"
      "output y = NOT n\n");
  CHECK(ast.inputs.size() == 2);
  CHECK(ast.statements.size() == 2);
  CHECK(ast.statements[1].line == 6);
  CHECK(eval_boolean(ast, NamedAssignment{{"a", true}, {"b", true}}).at("y"));
}

TEST_CASE("parse errors report the offending line") {
  CHECK(parse_error_line("input a\noutput y = FOO a\n") == 2);
  CHECK(parse_error_line("input a\noutput y = AND a\n") == 2);
  CHECK(parse_error_line("input a\nwire n = NOT a\noutput y = NOT q\n") == 3);
  CHECK(parse_error_line("input a\nwire a = NOT a\noutput y = NOT a\n") == 2);
  CHECK(parse_error_line("input a\noutput y NOT a\n") == 2);
  CHECK(parse_error_line("input a\noutput y = NOT a$\n") == 2);
  CHECK(parse_error_line("input AND\noutput y = NOT AND\n") == 1);
  CHECK(parse_error_line("input a\nwire y = NOT a\n") == 2);
  CHECK(parse_error_line("gate y = NOT a\n") == 1);
  CHECK(parse_error_line("input a\noutput y = NOT y\n") == 2);
  try {
    parse("input a\nwire y = NOT a\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("no outputs") != std::string::npos);
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("print/parse fixed point") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto text = testing::random_netlist(seed);
    const auto ast = parse(text);
    const auto printed = print(ast);
    const auto again = parse(printed);
    CHECK(print(again) == printed);
    CHECK(again.inputs == ast.inputs);
    REQUIRE(again.statements.size() == ast.statements.size());
    for (std::size_t i = 0; i < ast.statements.size(); ++i) {
      CHECK(again.statements[i].name == ast.statements[i].name);
      CHECK(again.statements[i].kind == ast.statements[i].kind);
      CHECK(again.statements[i].args == ast.statements[i].args);
      CHECK(again.statements[i].is_output == ast.statements[i].is_output);
    }
  }
}

TEST_CASE("input binding") {
  const std::vector<std::string> in = {"a", "b"};
  CHECK(bind_inputs(in, {{"b", true}, {"a", false}}) == InputVector{false, true});
  try {
    bind_inputs(in, {{"a", true}});
    FAIL("expected missing input");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_input);
  }
  try {
    bind_inputs(in, {{"a", true}, {"b", true}, {"c", true}});
    FAIL("expected unknown input");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  CHECK(assignment_from_index(3, 4) == InputVector{true, false, false});
  CHECK(assignment_from_index(3, 1) == InputVector{false, false, true});
}

TEST_CASE("expansion sizes") {
  CHECK(primitive_count(GateKind::NOT) == 1);
  CHECK(primitive_count(GateKind::AND) == 1);
  CHECK(primitive_count(GateKind::OR) == 4);
  CHECK(primitive_count(GateKind::NAND) == 2);
  CHECK(primitive_count(GateKind::NOR) == 5);
  CHECK(primitive_count(GateKind::XOR) == 8);
  CHECK(primitive_count(GateKind::XNOR) == 9);
  CHECK(primitive_count(GateKind::BUF) == 2);
  const auto& table = canonical_expansions();
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    CHECK(table[k].size() == primitive_count(static_cast<GateKind>(k)));
  }
}

TEST_CASE("each gate lowers to its truth table") {
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    const auto kind = static_cast<GateKind>(k);
    const std::string text = std::string("input a b\noutput y = ") +
                             std::string(gate_name(kind)) +
                             (gate_arity(kind) == 1 ? " a\n" : " a b\n");
    const auto ast = parse(text);
    const auto net = lower(ast);
    for (std::uint64_t i = 0; i < 4; ++i) {
      const auto in = assignment_from_index(2, i);
      CAPTURE(gate_name(kind));
      CAPTURE(i);
      CHECK(eval_outputs(net, in)[0] == eval_boolean(ast, in).at("y"));
    }
  }
}

TEST_CASE("lowering is sound on random netlists") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto ast = parse(testing::random_netlist(seed));
    const auto net = lower(ast);
    CHECK_NOTHROW(check_topological(net));
    for (const auto& g : net.gates) {
      CHECK((g.op == PrimOp::NOT || g.op == PrimOp::AND));
    }
    const auto n = ast.inputs.size();
    for (std::uint64_t i = 0; i < (1ULL << n); ++i) {
      const auto in = assignment_from_index(n, i);
      const auto oracle = eval_boolean(ast, in);
      const auto got = eval_outputs(net, in);
      for (std::size_t o = 0; o < net.outputs.size(); ++o) {
        REQUIRE(got[o] == oracle.at(net.outputs[o].name));
      }
      // Every named statement wire must carry its Boolean value too.
      const auto wires = eval_wires(net, in);
      for (const auto& s : net.statements) REQUIRE(wires[s.wire] == oracle.at(s.name));
    }
  }
}

TEST_CASE("layered 8-input depth-6 netlist over all assignments") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ast = parse(testing::layered_netlist(seed, 8, 6, 5));
    const auto net = lower(ast);
    for (std::uint64_t i = 0; i < 256; ++i) {
      const auto in = assignment_from_index(8, i);
      REQUIRE(eval_outputs(net, in)[0] == eval_boolean(ast, in).at(net.outputs[0].name));
    }
  }
}

TEST_CASE("topological check rejects forward references") {
  auto net = lower(parse("input a b\noutput y = AND a b\n"));
  CHECK_NOTHROW(check_topological(net));
  net.gates[0].args[1] = net.gate_wire(0);
  CHECK_THROWS_AS(check_topological(net), Error);
  net.gates[0].args[1] = 99;
  CHECK_THROWS_AS(check_topological(net), Error);
}

TEST_CASE("wire names") {
  const auto net = lower(parse("input a b\noutput y = OR a b\n"));
  const auto names = net.wire_names();
  REQUIRE(names.size() == 6);
  CHECK(names[0] == "a");
  CHECK(names[2] == "y.0");
  CHECK(names[5] == "y");
}

TEST_CASE("network json") {
  const auto net = lower(parse("input a b\noutput y = NAND a b\n"));
  const auto j = nlohmann::json::parse(report::network_json(net));
  CHECK(j["inputs"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["outputs"][0]["name"] == "y");
  CHECK(j["outputs"][0]["wire"] == 3);
  REQUIRE(j["gates"].size() == 2);
  CHECK(j["gates"][0]["op"] == "AND");
  CHECK(j["gates"][0]["args"] == nlohmann::json::array({0, 1}));
  CHECK(j["gates"][1]["op"] == "NOT");
  CHECK(j["gates"][1]["src"] == "y");
}
