"""Hypothesis strategies for terms over the test signature."""

from hypothesis import strategies as st

import oracles


@st.composite
def raw_terms(draw, max_start=3, max_layers=6):
    """A raw term: start wires plus a list of (position, core) layers."""
    start = tuple(draw(st.lists(st.sampled_from("fg"), max_size=max_start)))
    wires, layers = start, []
    for _ in range(draw(st.integers(0, max_layers))):
        p, core = draw(st.sampled_from(oracles.raw_layers(wires)))
        layers.append((p, core))
        wires = oracles.apply_raw(wires, p, core)
    return start, tuple(layers)


@st.composite
def terms(draw, max_start=3, max_layers=6):
    return oracles.to_term(draw(raw_terms(max_start, max_layers)))
