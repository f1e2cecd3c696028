import json

import pytest

from hopfinv import (
    GF,
    QQ,
    build_graded,
    cyclic_group_table,
    group_algebra,
    instance_digest,
    instance_from_data,
    instance_to_data,
    make_algebra,
    parse_instance,
    serialize_instance,
    sweedler_hopf,
    trivial_coaction,
    write_instance,
)
from hopfinv.instances import InstanceError

from conftest import FIXTURE_DIR, NEGATIVE_NAMES, POSITIVE_NAMES, fixture_path


def test_fixture_files_round_trip_bit_exactly():
    for name in POSITIVE_NAMES:
        path = fixture_path(name)
        raw = path.read_text(encoding="utf-8")
        C = parse_instance(path)
        assert serialize_instance(C) == raw, name


def test_serialization_is_canonical_and_stable():
    for name in POSITIVE_NAMES:
        C = parse_instance(fixture_path(name))
        once = serialize_instance(C)
        again = serialize_instance(instance_from_data(json.loads(once)))
        assert once == again
        assert instance_digest(C) == instance_digest(instance_from_data(json.loads(once)))


def test_digest_distinguishes_fixtures():
    digests = {instance_digest(parse_instance(fixture_path(n))) for n in POSITIVE_NAMES}
    assert len(digests) == len(POSITIVE_NAMES)


def test_negative_fixture_diagnostics():
    expected = {
        "bad_coaction": "comodule axiom violated: coaction not multiplicative at (x, x)",
        "bad_counit": "Hopf axiom violated: counit not multiplicative at (g, g)",
        "bad_field": "not a prime: 4",
        "bad_scalar": "malformed algebra block: not a rational scalar: 'one half'",
    }
    for name in NEGATIVE_NAMES:
        with pytest.raises(InstanceError) as info:
            parse_instance(fixture_path(name))
        assert str(info.value) == expected[name], name


def test_negative_fixture_parses_without_validation():
    # the two axiom-level negatives are structurally fine, so skipping
    # validation must let them through; the other two fail at parse time
    parse_instance(fixture_path("bad_coaction"), validate=False)
    parse_instance(fixture_path("bad_counit"), validate=False)
    for name in ("bad_field", "bad_scalar"):
        with pytest.raises(InstanceError):
            parse_instance(fixture_path(name), validate=False)


def test_write_and_reload(tmp_path):
    F = GF(3)
    A = make_algebra(F, ("e0", "e1"), (F.one, F.one),
                     [(0, 0, [(0, F.one)]), (1, 1, [(1, F.one)])])
    C = trivial_coaction(A, group_algebra(F, cyclic_group_table(2)))
    path = tmp_path / "inst.json"
    write_instance(C, path)
    D = parse_instance(path)
    assert serialize_instance(C) == serialize_instance(D)
    assert D.algebra.labels == A.labels
    assert D.field.char == 3


def test_builder_shorthand_blocks():
    data = {
        "format": "hopfinv-instance",
        "version": 1,
        "field": "Q",
        "algebra": {"labels": ["one", "x"], "unit": ["1", "0"],
                    "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"],
                            [1, 0, 1, "1"], [1, 1, 0, "1"]]},
        "hopf": {"builder": "group_algebra", "cyclic": 2},
        "coaction": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
    }
    C = instance_from_data(data)
    assert C.hopf.dim == 2
    # canonical form expands the builder to explicit tensors
    assert "builder" not in instance_to_data(C)["hopf"]

    # swapping in the four-dimensional builder still validates: the g there
    # is grouplike, so the same rows define a grading by it
    data["hopf"] = {"builder": "sweedler"}
    assert instance_from_data(data).hopf.dim == 4

    data["coaction"] = [[0, 0, 0, "1"], [1, 1, 9, "1"]]
    with pytest.raises(InstanceError):
        instance_from_data(data)  # coaction index out of range

    data["hopf"] = {"builder": "nonesuch"}
    with pytest.raises(InstanceError, match="unknown Hopf builder"):
        instance_from_data(data)

    data["hopf"] = {"builder": "group_algebra"}
    with pytest.raises(InstanceError, match="needs"):
        instance_from_data(data)


def test_format_envelope_rejections():
    with pytest.raises(InstanceError, match="JSON object"):
        instance_from_data([1, 2, 3])
    with pytest.raises(InstanceError, match="not a hopfinv-instance"):
        instance_from_data({"format": "something"})
    with pytest.raises(InstanceError, match="unsupported version"):
        instance_from_data({"format": "hopfinv-instance", "version": 99})


def test_parse_bad_paths(tmp_path):
    with pytest.raises(InstanceError, match="cannot read"):
        parse_instance(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(InstanceError, match="not valid JSON"):
        parse_instance(bad)


def test_sweedler_instance_round_trip():
    F = QQ
    A = make_algebra(F, ("one", "u"), (F.one, F.zero),
                     [(0, 0, [(0, F.one)]), (0, 1, [(1, F.one)]),
                      (1, 0, [(1, F.one)]), (1, 1, [])])
    H = sweedler_hopf(F)
    lab = {l: i for i, l in enumerate(H.alg.labels)}
    from hopfinv import make_comodule
    rows = [[((0, lab["1"]), F.one)],
            [((1, lab["g"]), F.one), ((0, lab["gx"]), F.one)]]
    C = make_comodule(A, H, rows)
    D = instance_from_data(json.loads(serialize_instance(C)))
    assert serialize_instance(D) == serialize_instance(C)
