import json

import pytest

from dendroid import (
    DomainError,
    FormatError,
    binary_odometer,
    dumps,
    example_1mz_expz,
    fin,
    loads,
    ray,
    subshift_window_automaton,
    universal_word,
)

STAR, Z0, Z3 = fin("*"), ray("z", 0), ray("z", 3)


def test_step_matches_example_transitions(example_aut):
    assert example_aut.step("g", STAR) == (STAR, "h")
    assert example_aut.step("h", Z0) == (STAR, None)
    assert example_aut.step("h", STAR) == (Z0, "g")
    assert example_aut.step("g", ray("z", 5)) == (ray("z", 6), None)
    assert example_aut.step("Id", ray("z", 7)) == (ray("z", 7), None)
    assert example_aut.step(None, STAR) == (STAR, None)


def test_step_unknown_state(example_aut):
    with pytest.raises(DomainError):
        example_aut.step("nope", STAR)
    with pytest.raises(DomainError):
        example_aut.step("g", fin("missing"))


def test_inverse_step_examples(example_aut):
    assert example_aut.inverse_step("h", Z0) == (STAR, ("g", -1))
    assert example_aut.inverse_step("g", ray("z", 6)) == (ray("z", 5), None)
    assert example_aut.inverse_step("g", STAR) == (STAR, ("h", -1))


def test_step_then_inverse_step_round_trip(example_aut):
    for a in example_aut.input_states:
        for x in example_aut.alphabet.window(4):
            y, _ = example_aut.step(a, x)
            back, _ = example_aut.inverse_step(a, y)
            assert back == x


def test_example_is_dendroid(example_aut):
    report = example_aut.validate_dendroid()
    assert report.is_dendroid
    assert (report.condition1, report.condition2, report.condition3) == (True, True, True)
    assert report.witnesses == []


def test_extra_restriction_breaks_condition2(example_aut):
    pert = example_aut.with_restrictions(
        {("g", STAR): "h", ("g", Z3): "h", ("h", STAR): "g"}
    )
    report = pert.validate_dendroid()
    assert report.condition1
    assert not report.condition2
    assert any("occurs 2 times" in w for w in report.witnesses)
    # z:3 sits on g's infinite orbit, so condition 3 necessarily fails too.
    assert not report.condition3


def test_moved_restriction_breaks_exactly_condition3(example_aut):
    pert = example_aut.with_restrictions({("g", Z3): "h", ("h", STAR): "g"})
    report = pert.validate_dendroid()
    assert (report.condition1, report.condition2, report.condition3) == (True, True, False)
    assert any("infinite orbit" in w for w in report.witnesses)


def test_two_restrictions_on_one_finite_orbit(example_aut):
    # * and z:0 lie on the same finite h-orbit
    pert = example_aut.with_restrictions({("h", STAR): "g", ("h", Z0): "h"})
    report = pert.validate_dendroid()
    assert not report.condition3
    assert any("share one finite orbit" in w for w in report.witnesses)


def test_dendroid_automaton_has_exactly_b_restrictions(example_aut, odometer_aut):
    for aut in (example_aut, odometer_aut):
        assert aut.validate_dendroid().is_dendroid
        assert len(aut.restrictions) == len(aut.output_states)


def test_odometer_is_dendroid(odometer_aut):
    assert odometer_aut.validate_dendroid().is_dendroid


def test_reserved_identity_name(example_aut):
    with pytest.raises(ValueError):
        example_aut.with_restrictions({("g", STAR): "Id"})


def test_save_is_canonical(example_aut):
    text = dumps(example_aut)
    assert text == dumps(loads(text))
    data = example_aut.to_json_dict()
    assert data["restrictions"] == [["g", "*", "h"], ["h", "*", "g"]]
    assert data["alphabet"] == {"fin": ["*"], "rays": ["z"]}


def test_round_trip_all_models(example_aut, odometer_aut):
    for aut in (example_aut, odometer_aut, subshift_window_automaton(universal_word(2))):
        again = loads(dumps(aut))
        assert again.to_json_dict() == aut.to_json_dict()
        assert again.input_states == aut.input_states
        assert again.perm == aut.perm
        assert again.restrictions == aut.restrictions


def test_load_duplicate_restriction_reports_field():
    data = example_1mz_expz().to_json_dict()
    data["restrictions"].append(["g", "*", "g"])
    with pytest.raises(FormatError) as err:
        loads(json.dumps(data))
    assert "duplicate restriction" in str(err.value)
    assert "$.restrictions" in str(err.value)


def test_load_rejects_bad_schema():
    with pytest.raises(FormatError) as err:
        loads("{")
    assert "line 1" in str(err.value)
    with pytest.raises(FormatError):
        loads("[]")
    with pytest.raises(FormatError) as err:
        loads('{"alphabet": {"fin": ["*"], "rays": []}, "input_states": ["g"], '
              '"output_states": ["g"], "perms": {}}')
    assert "missing permutation" in str(err.value)
    with pytest.raises(FormatError) as err:
        loads('{"alphabet": {"fin": ["*"], "rays": []}, "input_states": ["g"], '
              '"output_states": ["g"], "perms": {"g": {"patch": [["*", "oops"]]}}}')
    assert "$.perms.g.patch[0]" in str(err.value)


def test_validation_rejects_unknown_restriction_targets(example_aut):
    with pytest.raises(DomainError):
        example_aut.with_restrictions({("g", STAR): "mystery"})
    with pytest.raises(DomainError):
        example_aut.with_restrictions({("g", fin("w")): "h"})


def test_odometer_structure(odometer_aut):
    zero, one = fin("0"), fin("1")
    assert odometer_aut.step("a", zero) == (one, None)
    assert odometer_aut.step("a", one) == (zero, "a")
