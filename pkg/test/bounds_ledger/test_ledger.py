import dataclasses
from fractions import Fraction

import pytest

import pybicorn
import pybicorn.bounds_ledger as bl
from pybicorn.bounds_ledger import (ENTRIES, ceil_log, ceil_log2, entry, evaluate, ledger, ledger_table,
                                    replay, replay_ledger, replay_problems, solve_self_bound)

def _brute(a, c, s, o, kmax=10**4):
    best = 0
    for k in range(1, kmax + 1):
        arg = a*k + c
        if arg > 0 and k <= s*(arg - 1).bit_length() + o:
            best = k
    return best

@pytest.mark.parametrize("args, expected", [
    ((8, 2, 2, -1), 13),
    ((4, -2, 1, 0), 5),
    ((4, -2, 2, -1), 11),
    ((6, 0, 1, 0), 6),
    ((6, 0, 2, -1), 13),
    ((8, 0, 1, 1), 7),
])
def test_solve_self_bound(args, expected):
    assert solve_self_bound(*args) == expected
    assert _brute(*args) == expected

def test_solve_self_bound_monotone():
    for a in (1, 4, 8):
        for c in (-2, 0, 2):
            for s in (1, 2, 3):
                row = [solve_self_bound(a, c, s, o) for o in range(-2, 5)]
                assert row == sorted(row)
            for o in (-1, 0, 1, 3):
                col = [solve_self_bound(a, c, s, o) for s in (1, 2, 3)]
                assert col == sorted(col)

def test_solve_self_bound_errors():
    with pytest.raises(ValueError):
        solve_self_bound(0, 2, 1, 0)
    with pytest.raises(ValueError):
        solve_self_bound(1, 0, 0, 0)
    with pytest.raises(ValueError):
        solve_self_bound(1, 0, 1, 100, limit=50)

def test_ceil_log():
    assert ceil_log2(1) == 0
    assert ceil_log2(8) == 3
    assert ceil_log2(9) == 4
    assert ceil_log(9, 3) == 2
    assert ceil_log(10, 3) == 3
    assert ceil_log2(Fraction(1, 2)) == -1
    assert ceil_log2(Fraction(1, 3)) == -1
    for x in range(1, 2000):
        assert ceil_log2(x) == (x - 1).bit_length()
    with pytest.raises(ValueError):
        ceil_log2(0)
    with pytest.raises(ValueError):
        ceil_log(5, 1)

def test_evaluate():
    names = {"a": Fraction(3), "b": Fraction(4)}.__getitem__
    assert evaluate("a * b - 2", names) == 10
    assert evaluate("(a + b) / 2", names) == Fraction(7, 2)
    assert evaluate("2 ** a + max(a, b)", names) == 12
    assert evaluate("ceil(a / 2)", names) == 2
    assert evaluate("1 <= a < b", names) is True
    for bad in ("a.real", "1.5 + a", "__import__('os')", "a +", "[a]"):
        with pytest.raises(ValueError):
            evaluate(bad, names)

def test_ledger_results():
    results = {e.name: e.result for e in ledger() if e.name != "short_geodesic_margin"}
    assert results == {
        "bicorn_neighborhood": 13, "hyperbolicity": 15, "hausdorff_geodesic_to_bicorn": 26,
        "hausdorff_via_augmented": 34, "dist_bc_bound": 5, "dist_bc_aug_bound": 4,
        "small_intersection_distance": 4, "bgit_far_away": 3, "bgit_nonannular_cases": 32,
        "webb_transfer": 8, "annular_step": 8, "bgit_annular": 52, "retraction_bound": 64,
        "aug_bicorn_neighborhood": 7, "aug_hyperbolicity": 8, "aug_geodesic_to_bicorn": 14,
        "log3_at_4": 4, "log3_base_margin": 180, "nonorientable_genus3": -1}
    for v in results.values():
        assert isinstance(v, int)

def test_step_values():
    assert [s.value for s in entry("bgit_nonannular_cases").steps] == [36, 20, 26, 32, 29, 26, 32]
    assert [s.value for s in entry("bgit_far_away").steps] == [5, 9, 5, 3]
    assert [s.value for s in entry("hausdorff_geodesic_to_bicorn").steps] == [28, 14, 26]
    assert [s.value for s in entry("aug_geodesic_to_bicorn").steps] == [15, 14]

def test_bicorn_neighborhood_flags_both_readings():
    e = entry("bicorn_neighborhood")
    assert [s.value for s in e.steps] == [5, 11, 6, 13, 13, 13]
    assert e.flags == ("both endpoints near: as written gives 5, with 2⌈·⌉-1 gives 11",
                       "one endpoint near: as written gives 6, with 2⌈·⌉-1 gives 13")

def test_every_step_quotes_its_statement():
    for e in ledger():
        for s in e.steps:
            assert "“" in s.anchor and "”" in s.anchor, "%s.%s" %(e.name, s.label)

def test_dependencies_are_recorded():
    assert entry("hyperbolicity").depends == {"bicorn_neighborhood": 13}
    assert entry("bgit_annular").depends == {"hausdorff_via_augmented": 34, "annular_step": 8}
    assert entry("retraction_bound").depends == {"bgit_nonannular_cases": 32}

def test_every_entry_replays():
    entries = ledger()
    assert len(entries) == len(ENTRIES) + 4
    for e in entries:
        assert replay(e), replay_problems(e)
    assert replay_ledger(entries) == {}

def test_replay_recomputes_each_step():
    e = entry("hyperbolicity")
    wrong = dataclasses.replace(e.steps[-1], value=16)
    forged = dataclasses.replace(e, steps=e.steps[:-1] + (wrong,), result=16)
    assert not replay(forged)
    assert "neighborhood + 2 = 15, recorded 16" in replay_problems(forged)[0]

    forged = dataclasses.replace(e, result=14)
    assert not replay(forged)

def test_replay_ledger_follows_dependencies():
    entries = ledger()
    j = next(j for j, e in enumerate(entries) if e.name == "bicorn_neighborhood")
    e = entries[j]
    last = dataclasses.replace(e.steps[-1], value=14)
    entries[j] = dataclasses.replace(e, steps=e.steps[:-1] + (last,), result=14)
    failed = replay_ledger(entries)
    assert {"bicorn_neighborhood", "hyperbolicity", "hausdorff_geodesic_to_bicorn", "bgit_far_away"} <= set(failed)
    assert "aug_hyperbolicity" not in failed

def test_constants_follow_their_inputs(monkeypatch):
    monkeypatch.setattr(bl, "solve_self_bound", lambda a, c, s, o: 14 if (a, c, s, o) == (8, 2, 2, -1) else 7)
    assert entry("bicorn_neighborhood").result == 14
    assert entry("hyperbolicity").result == 16
    assert entry("hausdorff_geodesic_to_bicorn").result == 27
    # 18 - 14 no longer exceeds the small-intersection distance
    with pytest.raises(ValueError):
        entry("bgit_far_away")

def test_parametric_entries():
    assert entry("dist_bc_bound", m=2).result == 1
    assert entry("dist_bc_bound", m=9).result == 7
    assert entry("dist_bc_aug_bound", m=16).result == 5
    assert entry("webb_transfer", L=10).result == 14
    assert replay(entry("webb_transfer", L=10))
    with pytest.raises(ValueError):
        entry("dist_bc_bound", m=1)
    with pytest.raises(ValueError):
        entry("dist_bc_bound", t=5)
    with pytest.raises(ValueError):
        entry("no_such_entry")

def test_short_geodesic_margin():
    margins = {t: entry("short_geodesic_margin", t=t) for t in range(4, 9)}
    assert margins[4].result == 7
    for t in range(5, 9):
        assert margins[t].result == 5
    assert all(not e.flags for e in margins.values())
    for t in (3, 9):
        with pytest.raises(ValueError):
            entry("short_geodesic_margin", t=t)

def test_nonorientable_genus3_is_flagged():
    assert entry("nonorientable_genus3").flags == ("χ = -1 lies outside χ <= -2",)

def test_module_is_not_shadowed():
    assert bl.__name__ == "pybicorn.bounds_ledger"
    assert pybicorn.ledger is bl.ledger

def test_to_dict_and_table():
    entries = ledger()
    d = entries[0].to_dict()
    assert list(d) == ["name", "result", "params", "chain", "flags", "depends"]
    assert d["result"] == "13"
    assert d["chain"][-1]["label"] == "radius"
    table = ledger_table(entries)
    assert "hyperbolicity" in table
    assert "short_geodesic_margin(t=8)" in table
    assert "neighborhood + 2" in table
