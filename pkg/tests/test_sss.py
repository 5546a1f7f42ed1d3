import random

import pytest

from cubicode.sss import (
    ab_condition,
    access_structure,
    massey_shares,
    minimal_codewords,
    reconstruct,
)
from cubicode.trace_code import CodeSpec, build_code
from cubicode.weight_dist import formula_distribution


def test_ab_condition():
    assert ab_condition({0: 1, 1296: 720, 1458: 8})
    assert not ab_condition({0: 1, 18: 24, 27: 2})  # boundary: 54 == 54
    assert ab_condition({0: 1, 18954: 19656, 19683: 26})


def test_minimality_census_m1():
    for kind in ("lprime", "units"):
        code = build_code(CodeSpec(m=1, set_kind=kind))
        report, support = minimal_codewords(code)
        assert not report.ab_ratio_holds
        assert report.minimal_count == 12
        assert report.non_minimal_classes == (13,)
        # the covered class is exactly the full-support one
        full = (1 << code.length) - 1
        assert support[13] == full
        assert all(support[i] != full for i in support if i != 13)


def test_minimality_census_m2():
    report, _ = minimal_codewords(build_code(CodeSpec(m=2, set_kind="units")))
    assert report.ab_ratio_holds
    assert report.minimal_count == 364
    assert report.non_minimal_classes == ()

    report, support = minimal_codewords(build_code(CodeSpec(m=2, set_kind="lprime")))
    assert not report.ab_ratio_holds
    assert report.minimal_count == 362
    assert len(report.non_minimal_classes) == 2
    full = (1 << 972) - 1
    assert all(support[i] == full for i in report.non_minimal_classes)


def test_minimality_guard():
    with pytest.raises(ValueError):
        minimal_codewords(build_code(CodeSpec(m=3)))


def test_access_structure_m1_lprime():
    acc = access_structure(build_code(CodeSpec(m=1, set_kind="lprime")))
    assert acc.secret_position == 0
    assert len(acc.minimal_access_sets) == 8
    assert acc.dictators == (10, 23)
    for group in acc.minimal_access_sets:
        assert 0 not in group
        assert all(1 <= p <= 26 for p in group)
        assert set(acc.dictators) <= set(group)


def test_dictator_columns_are_proportional_to_the_secret_column():
    # a dictator's share is a fixed nonzero multiple of the secret, because
    # the Gray image repeats the secret column up to scalar at u x and u^2 x
    code = build_code(CodeSpec(m=1, set_kind="lprime"))
    G = code.generators.astype(int)
    acc = access_structure(code)
    col0 = G[:, 0]
    for p in acc.dictators:
        col = G[:, p]
        assert any(((lam * col0) % 3 == col).all() for lam in (1, 2))
        assert reconstruct_single(code, p)


def reconstruct_single(code, party):
    shares = massey_shares(code, 1, seed=0)
    return reconstruct({party: shares[party]}, code) == 1


def test_massey_shares_deterministic_and_complete():
    code = build_code(CodeSpec(m=1, set_kind="units"))
    a = massey_shares(code, 2, seed=99)
    b = massey_shares(code, 2, seed=99)
    assert a == b
    assert sorted(a) == list(range(1, code.length))
    assert set(a.values()) <= {0, 1, 2}
    assert massey_shares(code, 2, seed=100) != a
    with pytest.raises(ValueError):
        massey_shares(code, 3)


def test_round_trip_every_access_set():
    rng = random.Random(2024)
    for kind in ("lprime", "units"):
        code = build_code(CodeSpec(m=1, set_kind=kind))
        acc = access_structure(code)
        assert acc.minimal_access_sets
        for group in acc.minimal_access_sets:
            for _ in range(5):
                secret = rng.randrange(3)
                shares = massey_shares(code, secret, seed=rng.randrange(1 << 30))
                picked = {p: shares[p] for p in group}
                assert reconstruct(picked, code) == secret


def test_reconstruct_rejects_unqualified_sets():
    code = build_code(CodeSpec(m=1, set_kind="lprime"))
    shares = massey_shares(code, 1, seed=1)
    with pytest.raises(ValueError):
        reconstruct({1: shares[1]}, code)
    with pytest.raises(ValueError):
        reconstruct({}, code)
    with pytest.raises(ValueError):
        reconstruct({0: 1}, code)
    with pytest.raises(ValueError):
        reconstruct({1: 5}, code)
    # the full party set always reconstructs
    assert reconstruct(shares, code) == 1


def test_superset_of_minimal_set_reconstructs():
    code = build_code(CodeSpec(m=1, set_kind="lprime"))
    acc = access_structure(code)
    group = set(acc.minimal_access_sets[0]) | {1, 2, 3}
    shares = massey_shares(code, 2, seed=7)
    assert reconstruct({p: shares[p] for p in sorted(group)}, code) == 2


def test_ab_screen_consistent_with_census_at_m3_arithmetic():
    # exact arithmetic on the closed form: the screen holds at m=3 lprime
    entries = formula_distribution(CodeSpec(m=3, set_kind="lprime")).entries
    assert ab_condition(entries)
