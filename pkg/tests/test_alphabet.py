import pytest
from hypothesis import given, strategies as st

from dendroid import AlphabetSpec, DomainError, Letter, fin, parse_letter, ray


def test_window_int_line_with_star():
    alpha = AlphabetSpec(fin_letters=["*"], rays=["z"])
    assert alpha.window(1) == [fin("*"), ray("z", -1), ray("z", 0), ray("z", 1)]


def test_window_no_rays_ignores_radius():
    alpha = AlphabetSpec(fin_letters=["a", "b"])
    assert alpha.window(5) == [fin("a"), fin("b")]


def test_window_two_rays_radius_zero():
    alpha = AlphabetSpec(rays=["p", "q"])
    assert alpha.window(0) == [ray("p", 0), ray("q", 0)]


def test_letter_order_fin_before_ray():
    letters = [ray("z", -2), fin("b"), ray("a", 5), fin("z")]
    ordered = sorted(letters, key=lambda x: x.sort_key())
    assert ordered == [fin("b"), fin("z"), ray("a", 5), ray("z", -2)]


def test_letter_serialization_round_trip():
    for text in ["*", "z:-3", "a", "ray:12"]:
        assert str(parse_letter(text)) == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_letter("")
    with pytest.raises(ValueError):
        parse_letter(":3")
    with pytest.raises(ValueError):
        parse_letter("z:x")


def test_alphabet_rejects_overlap_and_empty():
    with pytest.raises(ValueError):
        AlphabetSpec(fin_letters=["a"], rays=["a"])
    with pytest.raises(ValueError):
        AlphabetSpec()
    with pytest.raises(ValueError):
        AlphabetSpec(fin_letters=["bad:name"])


def test_require_raises_domain_error():
    alpha = AlphabetSpec(fin_letters=["*"], rays=["z"])
    with pytest.raises(DomainError):
        alpha.require(fin("missing"))
    with pytest.raises(DomainError):
        alpha.require(ray("y", 0))
    assert alpha.require(ray("z", 99)) == Letter("z", 99)


@given(st.integers(min_value=0, max_value=30))
def test_window_nesting_and_size(radius):
    alpha = AlphabetSpec(fin_letters=["*", "o"], rays=["z", "y"])
    small = set(alpha.window(radius))
    large = set(alpha.window(radius + 1))
    assert small <= large
    assert len(small) == 2 + 2 * (2 * radius + 1)
