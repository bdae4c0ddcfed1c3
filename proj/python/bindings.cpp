#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nbl/hyperspace.hpp"
#include "nbl/netlist.hpp"
#include "nbl/report.hpp"
#include "nbl/rtw_gates.hpp"
#include "nbl/simulator.hpp"
#include "nbl/spike_gates.hpp"

namespace py = pybind11;

namespace {

using Levels = std::vector<nbl::Level>;

Levels levels(const auto& s) { return s.vector(); }

nbl::RtwPair rtw_pair(const Levels& h, const Levels& l) {
  return nbl::make_rtw_pair(nbl::RtwSignal(h), nbl::RtwSignal(l));
}

nbl::SpikePair spike_pair(const Levels& h, const Levels& l) {
  return nbl::make_spike_pair(nbl::SpikeTrain(h), nbl::SpikeTrain(l));
}

py::tuple classification(const nbl::Classification& c) {
  return py::make_tuple(nbl::logic_name(c.value),
                        c.decided_at ? py::cast(*c.decided_at) : py::none(),
                        c.diagnostic);
}

nbl::rtw::GateContext rtw_ctx(const Levels& h, const Levels& l) {
  return nbl::rtw::GateContext(rtw_pair(h, l));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Noise-based logic: telegraph-wave and spike-train gates, netlist "
            "lowering and equivalence checking.";

  auto base = py::register_exception<nbl::Error>(m, "NblError", PyExc_ValueError);
  py::register_exception<nbl::ParseError>(m, "ParseError", base.ptr());

  py::class_<nbl::GeneratorConfig>(m, "GeneratorConfig")
      .def(py::init([](std::uint64_t seed, std::size_t steps, double rate_h,
                       double rate_l) {
             nbl::GeneratorConfig c{seed, steps, rate_h, rate_l};
             c.validate();
             return c;
           }),
           py::arg("seed") = 0, py::arg("steps") = 256, py::arg("rate_h") = 0.25,
           py::arg("rate_l") = 0.25)
      .def_readwrite("seed", &nbl::GeneratorConfig::seed)
      .def_readwrite("steps", &nbl::GeneratorConfig::steps)
      .def_readwrite("rate_h", &nbl::GeneratorConfig::rate_h)
      .def_readwrite("rate_l", &nbl::GeneratorConfig::rate_l);

  m.def("gen_rtw", [](const nbl::GeneratorConfig& c) { return levels(nbl::gen_rtw(c)); });
  m.def("gen_rtw_pair", [](const nbl::GeneratorConfig& c) {
    const auto p = nbl::gen_rtw_pair(c);
    return py::make_tuple(levels(p.h), levels(p.l));
  });
  m.def("gen_orthogonal_spike_pair", [](const nbl::GeneratorConfig& c) {
    const auto p = nbl::gen_orthogonal_spike_pair(c);
    return py::make_tuple(levels(p.h), levels(p.l));
  });
  m.def("universe_rtw", [](const Levels& h, const Levels& l) {
    return levels(nbl::universe_rtw(rtw_pair(h, l)));
  });
  m.def("universe_spike", [](const Levels& h, const Levels& l) {
    return levels(nbl::universe_spike(nbl::SpikeTrain(h), nbl::SpikeTrain(l)));
  });
  m.def("classify_rtw", [](const Levels& x, const Levels& h, const Levels& l) {
    return classification(nbl::classify(nbl::RtwSignal(x), rtw_pair(h, l)));
  });
  m.def("classify_spike", [](const Levels& x, const Levels& h, const Levels& l) {
    return classification(nbl::classify(nbl::SpikeTrain(x), spike_pair(h, l)));
  });

  m.def("rtw_not_additive", [](const Levels& h, const Levels& l, const Levels& x) {
    return levels(nbl::rtw::not_additive(rtw_ctx(h, l), nbl::RtwSignal(x)));
  });
  m.def("rtw_not_multiplicative", [](const Levels& h, const Levels& l, const Levels& x) {
    return levels(nbl::rtw::not_multiplicative(rtw_ctx(h, l), nbl::RtwSignal(x)));
  });
  m.def("rtw_and", [](const Levels& h, const Levels& l, const Levels& a, const Levels& b) {
    return levels(nbl::rtw::and_gate(rtw_ctx(h, l), nbl::RtwSignal(a), nbl::RtwSignal(b)));
  });

  m.def("neuron", [](const Levels& e, const Levels& i) {
    return levels(nbl::spike::neuron_eval(nbl::SpikeTrain(e), nbl::SpikeTrain(i)));
  });
  m.def("orthon", [](const Levels& a, const Levels& b) {
    const auto o = nbl::spike::orthon_eval(nbl::SpikeTrain(a), nbl::SpikeTrain(b));
    return py::make_tuple(levels(o.ab), levels(o.a_not_b));
  });
  m.def("spike_not", [](const Levels& h, const Levels& l, const Levels& x) {
    return levels(nbl::spike::spike_not(spike_pair(h, l), nbl::SpikeTrain(x)));
  });
  m.def("spike_and", [](const Levels& h, const Levels& l, const Levels& a, const Levels& b) {
    return levels(nbl::spike::spike_and(spike_pair(h, l), nbl::SpikeTrain(a),
                                        nbl::SpikeTrain(b)));
  });
  m.def("decision_step", [](const Levels& h, const Levels& l, const Levels& y) {
    return nbl::spike::decision_step(spike_pair(h, l), nbl::SpikeTrain(y));
  });

  m.def("normalize_netlist", [](const std::string& text) {
    return nbl::netlist::print(nbl::netlist::parse(text));
  }, "Parse a netlist and return its canonical text form.");
  m.def("compile_netlist_json", [](const std::string& text) {
    return nbl::report::network_json(nbl::netlist::lower(nbl::netlist::parse(text)));
  });
  m.def("eval_boolean", [](const std::string& text, const nbl::netlist::NamedAssignment& a) {
    return nbl::netlist::eval_boolean(nbl::netlist::parse(text), a);
  });
  m.def("simulate_json", [](const std::string& text, const std::string& backend,
                            const nbl::netlist::NamedAssignment& a,
                            const nbl::GeneratorConfig& c) {
    const auto net = nbl::netlist::lower(nbl::netlist::parse(text));
    py::gil_scoped_release release;
    return nbl::report::simulation_json(
        net, nbl::sim::run(net, nbl::sim::parse_backend(backend), a, c));
  });
  m.def("verify_json", [](const std::string& text, const std::string& backend,
                          const nbl::GeneratorConfig& c) {
    const auto ast = nbl::netlist::parse(text);
    const auto net = nbl::netlist::lower(ast);
    py::gil_scoped_release release;
    const nbl::sim::EquivalenceReport r[] = {
        nbl::sim::verify_equivalence(ast, net, nbl::sim::parse_backend(backend), c)};
    return nbl::report::equivalence_json(net, r);
  });

  m.def("ambiguity_analytic", &nbl::sim::ambiguity_analytic, py::arg("n"));
  m.def("min_steps_for", &nbl::sim::min_steps_for, py::arg("epsilon"));
  m.attr("QUOTED_STEPS_FOR_1E25") = nbl::sim::kQuotedStepsFor1e25;
  m.def("stats_json", [](std::size_t n, std::uint64_t trials, std::uint64_t seed,
                         std::vector<double> epsilons) {
    py::gil_scoped_release release;
    const auto r = nbl::sim::ambiguity_monte_carlo(n, trials, seed);
    return nbl::report::reliability_json(r, nbl::report::steps_table(epsilons));
  }, py::arg("n"), py::arg("trials"), py::arg("seed") = 0,
     py::arg("epsilons") = std::vector<double>{1e-25});
  m.def("hyperspace_json", [](const std::string& family, const std::string& bits,
                              const nbl::GeneratorConfig& c) {
    nbl::Family f;
    if (family == "rtw") {
      f = nbl::Family::rtw;
    } else if (family == "spike") {
      f = nbl::Family::spike;
    } else {
      throw nbl::Error(nbl::Errc::invalid_argument, "family must be rtw or spike");
    }
    return nbl::report::hyperspace_json(
        nbl::report::hyperspace_demo(f, nbl::hyper::parse_bits(bits), c));
  });
}
