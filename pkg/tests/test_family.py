import random

import pytest
from hypothesis import given, settings, strategies as st

from dendroid import (
    AlphabetSpec,
    FDPerm,
    RadiusError,
    auto_radius,
    core_graph,
    cycle_diagram_oracle,
    fin,
    is_dendroid_family,
    ray,
)
from dendroid.family import TailVertex, tree_check

from conftest import random_finite_family

ALPHA = AlphabetSpec(fin_letters=["*"], rays=["z"])
STAR, Z0 = fin("*"), ray("z", 0)


def example_family():
    g = FDPerm(ALPHA, ray_shift={"z": 1})
    h = FDPerm(ALPHA, patch={STAR: Z0, Z0: STAR})
    return [g, h]


def swap01_family(copies=2):
    alpha = AlphabetSpec(fin_letters=["0", "1"])
    swap = {fin("0"): fin("1"), fin("1"): fin("0")}
    return [FDPerm(alpha, dict(swap)) for _ in range(copies)]


def cycle_family(n):
    alpha = AlphabetSpec(fin_letters=[f"x{i}" for i in range(n)])
    letters = alpha.window(0)
    patch = {letters[i]: letters[(i + 1) % n] for i in range(n)}
    return [FDPerm(alpha, patch)]


def test_example_core_graph_is_a_tree():
    family = example_family()
    graph = core_graph(family, auto_radius(family), names=("g", "h"))
    verdict = tree_check(graph)
    assert verdict.is_dendroid
    assert verdict.certificate.kind == "tree"
    # path along the ray (condensed at both ends) plus the * -- z:0 edge
    assert len(graph.edges) == len(graph.vertices) - 1
    assert (STAR, "h", Z0) in graph.edges
    assert sum(isinstance(v, TailVertex) for v in graph.vertices) == 2


def test_double_swap_core_graph_has_parallel_edges():
    verdict = is_dendroid_family(swap01_family())
    assert not verdict.is_dendroid
    assert verdict.certificate.kind == "cycle"
    assert len(verdict.certificate.edges) == 2


def test_singleton_identity_is_a_tree():
    alpha = AlphabetSpec(fin_letters=["x"])
    verdict = is_dendroid_family([FDPerm(alpha)])
    assert verdict.is_dendroid


def test_example_family_is_dendroid():
    assert is_dendroid_family(example_family(), names=("g", "h")).is_dendroid


def test_single_n_cycles_are_dendroid():
    for n in range(1, 9):
        family = cycle_family(n)
        assert is_dendroid_family(family).is_dendroid
        assert cycle_diagram_oracle(family)


def test_radius_too_small_names_requirement():
    family = example_family()
    need = auto_radius(family)
    with pytest.raises(RadiusError) as err:
        core_graph(family, need - 1)
    assert err.value.required == need


def test_tail_conflict_rejected_with_witness():
    g1 = FDPerm(ALPHA, ray_shift={"z": 1})
    g2 = FDPerm(ALPHA, ray_shift={"z": -1})
    verdict = is_dendroid_family([g1, g2], names=("p", "q"))
    assert not verdict.is_dendroid
    assert verdict.certificate.kind == "tail-conflict"
    assert "ray 'z'" in verdict.certificate.detail


def test_identity_on_two_letters_is_disconnected():
    alpha = AlphabetSpec(fin_letters=["a", "b"])
    verdict = is_dendroid_family([FDPerm(alpha)])
    assert not verdict.is_dendroid
    assert verdict.certificate.kind == "disconnected"
    assert not cycle_diagram_oracle([FDPerm(alpha)])


def test_oracle_trivial_cases():
    alpha = AlphabetSpec(fin_letters=["0", "1"])
    swap = FDPerm(alpha, {fin("0"): fin("1"), fin("1"): fin("0")})
    assert cycle_diagram_oracle([swap])
    assert not cycle_diagram_oracle(swap01_family())


def test_oracle_two_transpositions_sharing_a_point():
    alpha = AlphabetSpec(fin_letters=["0", "1", "2"])
    a = FDPerm(alpha, {fin("0"): fin("1"), fin("1"): fin("0")})
    b = FDPerm(alpha, {fin("0"): fin("2"), fin("2"): fin("0")})
    assert cycle_diagram_oracle([a, b])
    assert is_dendroid_family([a, b]).is_dendroid


def test_oracle_rejects_rays():
    with pytest.raises(ValueError):
        cycle_diagram_oracle(example_family())


def test_oracle_agreement_random_sample():
    rng = random.Random(20240817)
    for _ in range(120):
        family = random_finite_family(rng)
        assert is_dendroid_family(family).is_dendroid == cycle_diagram_oracle(family)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=3))
def test_radius_stability(seed, bump):
    rng = random.Random(seed)
    family = random_finite_family(rng, max_letters=5, max_gens=2)
    base = auto_radius(family)
    v1 = tree_check(core_graph(family, base)).is_dendroid
    v2 = tree_check(core_graph(family, base + bump)).is_dendroid
    assert v1 == v2


def test_radius_stability_with_rays():
    family = example_family()
    base = auto_radius(family)
    verdicts = {tree_check(core_graph(family, base + k)).is_dendroid for k in range(4)}
    assert verdicts == {True}


def test_certificate_dot_marks_witness():
    verdict = is_dendroid_family(swap01_family())
    text = verdict.certificate.to_dot(verdict.graph)
    assert "penwidth=2" in text and 'color="red"' in text
    tree = is_dendroid_family(example_family(), names=("g", "h"))
    text = tree.certificate.to_dot(tree.graph)
    assert "graph core {" in text and "red" not in text
