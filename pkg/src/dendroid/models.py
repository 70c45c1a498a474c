"""Built-in automata used throughout the tests and the CLI."""

from __future__ import annotations

from .alphabet import AlphabetSpec, Letter
from .automaton import GroupAutomaton
from .permutation import FDPerm


def example_1mz_expz() -> GroupAutomaton:
    """Two-state dendroid automaton over {*} and one integer ray.

    g shifts the ray and swaps nothing; h swaps * with z:0.  The only
    nontrivial restrictions sit at *: g restricts to h there, h to g.
    This is the self-similar recursion of the entire map (1-z)*exp(z).
    """
    alpha = AlphabetSpec(fin_letters=["*"], rays=["z"])
    star = Letter("*")
    z0 = Letter("z", 0)
    g = FDPerm(alpha, ray_shift={"z": 1})
    h = FDPerm(alpha, patch={star: z0, z0: star})
    return GroupAutomaton(
        input_states=["g", "h"],
        output_states=["g", "h"],
        alphabet=alpha,
        perm={"g": g, "h": h},
        restrictions={("g", star): "h", ("h", star): "g"},
    )


def binary_odometer() -> GroupAutomaton:
    """The add-one-with-carry automaton on {0, 1}."""
    alpha = AlphabetSpec(fin_letters=["0", "1"])
    zero, one = Letter("0"), Letter("1")
    a = FDPerm(alpha, patch={zero: one, one: zero})
    return GroupAutomaton(
        input_states=["a"],
        output_states=["a"],
        alphabet=alpha,
        perm={"a": a},
        restrictions={("a", one): "a"},
    )


MODELS = {
    "example": (example_1mz_expz, "two generators over {*} + ray z: g shifts, h swaps * and z:0"),
    "odometer": (binary_odometer, "binary odometer on {0, 1}"),
}


def get_model(name: str) -> GroupAutomaton:
    try:
        builder, _ = MODELS[name]
    except KeyError:
        raise KeyError(f"unknown model {name!r}; known: {', '.join(sorted(MODELS))}") from None
    return builder()
