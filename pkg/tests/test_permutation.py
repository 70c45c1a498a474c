import random

import pytest
from hypothesis import given, settings, strategies as st

from dendroid import AlphabetSpec, DomainError, FDPerm, fin, identity_perm, ray

from conftest import random_fdperm

ALPHA = AlphabetSpec(fin_letters=["*"], rays=["z"])
STAR, Z0 = fin("*"), ray("z", 0)


def shift_g() -> FDPerm:
    return FDPerm(ALPHA, ray_shift={"z": 1})


def swap_h() -> FDPerm:
    return FDPerm(ALPHA, patch={STAR: Z0, Z0: STAR})


def test_apply_matches_transition_rules():
    assert shift_g().apply(ray("z", 5)) == ray("z", 6)
    assert swap_h().apply(STAR) == Z0
    assert swap_h().apply(ray("z", 7)) == ray("z", 7)
    ident = identity_perm(ALPHA)
    for x in ALPHA.window(3):
        assert ident.apply(x) == x


def test_apply_outside_alphabet_is_domain_error():
    with pytest.raises(DomainError):
        shift_g().apply(fin("nope"))


def test_invert_shift():
    g = shift_g()
    assert g.invert().apply(ray("z", 6)) == ray("z", 5)
    assert g.invert().apply(g.apply(ray("z", 5))) == ray("z", 5)


def test_invert_involution_is_itself():
    h = swap_h()
    inv = h.invert()
    for x in ALPHA.window(3):
        assert inv.apply(x) == h.apply(x)
        assert h.apply(h.apply(x)) == x


def test_invert_identity():
    ident = identity_perm(ALPHA)
    assert ident.invert() == ident


def test_validation_rejects_non_bijections():
    with pytest.raises(ValueError):
        # z:0 collides with the incoming shift of z:-1
        FDPerm(ALPHA, patch={STAR: STAR, Z0: Z0}, ray_shift={"z": 1})
    with pytest.raises(ValueError):
        FDPerm(ALPHA, patch={STAR: Z0})  # two letters map to z:0
    with pytest.raises(ValueError):
        FDPerm(ALPHA, ray_shift={"z": 2})  # unit shifts only
    with pytest.raises(DomainError):
        FDPerm(ALPHA, ray_shift={"w": 1})


def test_orbits_of_shift():
    dec = shift_g().orbits()
    assert [o.letters for o in dec.finite] == [(STAR,)]
    assert len(dec.infinite) == 1
    orb = dec.infinite[0]
    assert (orb.ray, orb.shift, orb.exceptional) == ("z", 1, ())
    assert dec.implicitly_fixed_rays == ()


def test_orbits_of_swap():
    dec = swap_h().orbits()
    assert [o.letters for o in dec.finite] == [(STAR, Z0)]
    assert dec.infinite == ()
    assert dec.implicitly_fixed_rays == ("z",)
    assert swap_h().classify(ray("z", 12)) == ("fixed", ray("z", 12))


def test_orbits_identity_on_two_letters():
    alpha = AlphabetSpec(fin_letters=["a", "b"])
    dec = identity_perm(alpha).orbits()
    assert [o.letters for o in dec.finite] == [(fin("a"),), (fin("b"),)]


def test_orbit_with_spliced_fin_letter():
    # ... z:-1 z:0 * z:1 z:2 ... one infinite orbit with * spliced in
    p = FDPerm(ALPHA, patch={Z0: STAR, STAR: ray("z", 1)}, ray_shift={"z": 1})
    dec = p.orbits()
    assert dec.finite == ()
    assert len(dec.infinite) == 1
    assert dec.infinite[0].exceptional == (STAR,)
    assert p.classify(STAR) == ("infinite", "z")
    assert p.classify(ray("z", -40)) == ("infinite", "z")


def test_classify_matches_orbit_lists():
    p = swap_h()
    assert p.classify(STAR) == ("finite", STAR)
    assert p.classify(Z0) == ("finite", STAR)
    g = shift_g()
    assert g.classify(ray("z", 3)) == ("infinite", "z")
    assert g.classify(STAR) == ("finite", STAR)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_apply_invert_round_trip_on_window(seed):
    rng = random.Random(seed)
    alpha = AlphabetSpec(fin_letters=["*", "o"], rays=["z", "y"])
    p = random_fdperm(rng, alpha)
    inv = p.invert()
    radius = p.window_bound + 3
    for x in alpha.window(radius):
        assert inv.apply(p.apply(x)) == x
        assert p.apply(inv.apply(x)) == x


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_orbits_partition_window(seed):
    rng = random.Random(seed)
    alpha = AlphabetSpec(fin_letters=["*"], rays=["z"])
    p = random_fdperm(rng, alpha)
    dec = p.orbits()
    finite_letters = [x for orbit in dec.finite for x in orbit.letters]
    assert len(finite_letters) == len(set(finite_letters)), "finite orbits overlap"
    for x in alpha.window(p.window_bound + 2):
        kind, key = p.classify(x)
        if kind == "finite":
            assert any(x in orbit.letters for orbit in dec.finite) or p.apply(x) == x
        elif kind == "infinite":
            assert any(orb.ray == key for orb in dec.infinite)
        else:
            assert p.apply(x) == x and x.name in dec.implicitly_fixed_rays


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_zero_shift_moved_letters_sit_in_patch(seed):
    rng = random.Random(seed)
    alpha = AlphabetSpec(fin_letters=["*"], rays=["z", "y"])
    p = random_fdperm(rng, alpha)
    for x in p.moved_window_letters():
        if x.index is not None and p.ray_shift.get(x.name, 0) == 0:
            assert x in p.patch


def test_serialization_shape():
    p = FDPerm(ALPHA, patch={STAR: Z0, Z0: STAR}, ray_shift={"z": 0})
    assert p.to_json_dict() == {
        "patch": [["*", "z:0"], ["z:0", "*"]],
        "ray_shift": {},
        "window": 0,
    }
