import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from toricpvf.fan import (Fan, FanError, FanValidationError, parse_fan,
                          require_valid, serialize_fan, validate,
                          validate_complete, validate_smooth)
from toricpvf.generators import hirzebruch, projective_space

from conftest import TEST_FANS, random_unimodular

P2_DOC = b'{"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [2, 0]]}'


def test_p2_smooth_and_complete():
    fan = parse_fan(P2_DOC)
    assert validate_smooth(fan)[0]
    assert validate_complete(fan)[0]


def test_index_two_cone_not_smooth():
    fan = Fan(2, ((1, 0), (1, 2)), ((0, 1),))
    ok, diags = validate_smooth(fan)
    assert not ok
    assert "det| = 2" in diags[0]["reason"]


@pytest.mark.parametrize("a", range(6))
def test_hirzebruch_smooth(a):
    assert validate(hirzebruch(a)).ok


def test_p2_missing_cone_not_complete():
    fan = Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2)))
    ok, diags = validate_complete(fan)
    assert not ok
    assert any("ridge in one cone" in d["reason"] for d in diags)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_complete(n):
    assert validate_complete(projective_space(n))[0]


def test_one_dimensional_incomplete():
    fan = Fan(1, ((1,),), ((0,),))
    assert not validate_complete(fan)[0]


def test_multiple_cover_rejected():
    # 8 rays by angle; joining every third one winds around the origin three
    # times, yet every ridge lies in two cones and the dual graph is a cycle
    rays = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
    seq = [(3 * i) % 8 for i in range(8)]
    cones = tuple((seq[i], seq[(i + 1) % 8]) for i in range(8))
    ok, diags = validate_complete(Fan(2, rays, cones))
    assert not ok
    assert "covered by 3 cones" in diags[0]["reason"]


def test_overlapping_fold_rejected():
    # two cones on the same side of their shared ridge
    rays = ((1, 0), (0, 1), (1, 1), (-1, -1))
    fan = Fan(2, rays, ((0, 1), (0, 2), (1, 3), (2, 3)))
    report = validate(fan)
    assert not report.complete


def test_structural_errors():
    with pytest.raises(FanError, match="repeated"):
        Fan(2, ((1, 0), (0, 1)), ((0, 0),))
    with pytest.raises(FanError, match="non-primitive"):
        Fan(2, ((2, 0), (0, 1)), ((0, 1),))
    with pytest.raises(FanError, match="missing ray"):
        Fan(2, ((1, 0), (0, 1)), ((0, 5),))
    with pytest.raises(FanError, match="duplicate rays"):
        Fan(2, ((1, 0), (1, 0)), ((0, 1),))
    with pytest.raises(FanError, match="expected 2"):
        Fan(2, ((1, 0), (0, 1), (1, 1)), ((0, 1, 2),))


def test_require_valid_raises():
    fan = Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2)))
    with pytest.raises(FanValidationError):
        require_valid(fan)


# -- file format ---------------------------------------------------------------

def test_parse_p1():
    fan = parse_fan(b'{"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]}')
    assert fan == Fan(1, ((1,), (-1,)), ((0,), (1,)))


def test_non_primitive_ray():
    doc = b'{"dim": 2, "rays": [[2, 4], [0, 1]], "max_cones": [[0, 1]]}'
    with pytest.raises(FanError, match="non-primitive ray"):
        parse_fan(doc)
    assert parse_fan(doc, normalize=True).rays[0] == (1, 2)
    flagged = b'{"dim": 2, "rays": [[2, 4], [0, 1]], "max_cones": [[0, 1]], "normalize": true}'
    assert parse_fan(flagged).rays[0] == (1, 2)


@pytest.mark.parametrize("doc", [
    b"not json",
    b"[1, 2]",
    b'{"dim": 2, "rays": [[1, 0]]}',
    b'{"dim": 2, "rays": [[1, 0, 0]], "max_cones": []}',
    b'{"dim": 2, "rays": [[1, "a"]], "max_cones": [[0]]}',
    b'{"dim": 2, "rays": [], "max_cones": [], "extra": 1}',
    b'{"dim": true, "rays": [], "max_cones": []}',
    b'\xff\xfe',
])
def test_malformed(doc):
    with pytest.raises(FanError):
        parse_fan(doc)


def test_round_trip_p2():
    fan = parse_fan(P2_DOC)
    assert parse_fan(serialize_fan(fan)) == fan
    assert json.loads(serialize_fan(fan)) == json.loads(P2_DOC)


@pytest.mark.parametrize("name", sorted(TEST_FANS))
def test_round_trip_test_fans(name):
    fan = TEST_FANS[name]()
    assert parse_fan(serialize_fan(fan)) == fan


# -- invariance ----------------------------------------------------------------

def _permuted(fan, rng):
    perm = list(range(len(fan.rays)))
    rng.shuffle(perm)
    where = {old: new for new, old in enumerate(perm)}
    rays = tuple(fan.rays[old] for old in perm)
    cones = [tuple(where[i] for i in c) for c in fan.max_cones]
    rng.shuffle(cones)
    return Fan(fan.dim, rays, tuple(cones))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(TEST_FANS)), st.integers(0, 10**6))
def test_validation_invariant(name, seed):
    rng = random.Random(seed)
    fan = TEST_FANS[name]()
    moved = _permuted(fan.transform(random_unimodular(fan.dim, rng)), rng)
    assert validate(moved).ok


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(TEST_FANS)), st.integers(0, 10**6))
def test_broken_fan_stays_broken(name, seed):
    rng = random.Random(seed)
    fan = TEST_FANS[name]()
    broken = Fan(fan.dim, fan.rays, fan.max_cones[1:])
    moved = _permuted(broken.transform(random_unimodular(fan.dim, rng)), rng)
    assert not validate(moved).complete
    assert validate(moved).smooth
