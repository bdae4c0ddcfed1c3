"""Noise-based logic toolkit: Python bindings for the C++ core."""

import json as _json

from ._core import (  # noqa: F401
    GeneratorConfig,
    NblError,
    ParseError,
    QUOTED_STEPS_FOR_1E25,
    ambiguity_analytic,
    classify_rtw,
    classify_spike,
    compile_netlist_json,
    decision_step,
    eval_boolean,
    gen_orthogonal_spike_pair,
    gen_rtw,
    gen_rtw_pair,
    min_steps_for,
    neuron,
    normalize_netlist,
    orthon,
    rtw_and,
    rtw_not_additive,
    rtw_not_multiplicative,
    spike_and,
    spike_not,
    universe_rtw,
    universe_spike,
)
from . import _core


def compile_netlist(text):
    """Lower a netlist to NOT/AND primitives; returns the network as a dict."""
    return _json.loads(_core.compile_netlist_json(text))


def simulate(text, assignment, backend="rtw-multiplicative-not", config=None):
    return _json.loads(
        _core.simulate_json(text, backend, assignment, config or GeneratorConfig())
    )


def verify(text, backend="rtw-multiplicative-not", config=None):
    return _json.loads(_core.verify_json(text, backend, config or GeneratorConfig()))


def stats(n, trials, seed=0, epsilons=(1e-25,)):
    return _json.loads(_core.stats_json(n, trials, seed, list(epsilons)))


def hyperspace(family, bits, config=None):
    return _json.loads(_core.hyperspace_json(family, bits, config or GeneratorConfig()))
