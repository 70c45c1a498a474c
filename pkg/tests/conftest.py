import random

import pytest

from dendroid import AlphabetSpec, FDPerm, Tower, binary_odometer, example_1mz_expz


@pytest.fixture
def example_aut():
    return example_1mz_expz()


@pytest.fixture
def example_tower(example_aut):
    return Tower.repeat(example_aut)


@pytest.fixture
def odometer_aut():
    return binary_odometer()


@pytest.fixture
def odometer_tower(odometer_aut):
    return Tower.repeat(odometer_aut)


def random_fdperm(rng: random.Random, alphabet: AlphabetSpec, max_window: int = 2) -> FDPerm:
    """Random valid FDPerm: a random eventual shift composed with a random
    finite rearrangement of a window (always a bijection by construction)."""
    shifts = {r: rng.choice([-1, 0, 1]) for r in alphabet.sorted_rays}
    base = FDPerm(alphabet, {}, shifts)
    w = rng.randint(0, max_window)
    letters = alphabet.window(w)
    shuffled = letters[:]
    rng.shuffle(shuffled)
    sigma = dict(zip(letters, shuffled))
    patch = {}
    for x in alphabet.window(w + 1):
        y = base.apply(x)
        z = sigma.get(y, y)
        if z != y:
            patch[x] = z
    return FDPerm(alphabet, patch, shifts)


def random_finite_family(rng: random.Random, max_letters: int = 6, max_gens: int = 3):
    """Random family over a finite alphabet (used against the 2-complex oracle)."""
    n = rng.randint(1, max_letters)
    alphabet = AlphabetSpec(fin_letters=[f"x{i}" for i in range(n)])
    letters = alphabet.window(0)
    family = []
    for _ in range(rng.randint(1, max_gens)):
        shuffled = letters[:]
        rng.shuffle(shuffled)
        family.append(FDPerm(alphabet, dict(zip(letters, shuffled))))
    return family
