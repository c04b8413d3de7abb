import pytest

import exclcs


def test_counterexample():
    out = exclcs.solve("abbb", "aab", "ab")
    assert out["length"] == 1
    assert out["best_state"] == 0
    assert out["witness"] in ("a", "b")
    assert out["algorithm"] == "optimized"
    assert exclcs.solve("abbb", "aab", "ab", algorithm="naive")["length"] == 1
    assert exclcs.solve("abbb", "aab", "ab", algorithm="chen-chao-2")["length"] == 2


def test_length_only():
    out = exclcs.solve("abc", "abc", "b", witness=False)
    assert out["length"] == 2
    assert out["witness"] is None


def test_brute_force():
    assert exclcs.brute_force("abc", "abc", "b") == (2, "ac")
    with pytest.raises(exclcs.OracleSizeError):
        exclcs.brute_force("a" * 16, "a" * 15, "b")


def test_empty_pattern():
    with pytest.raises(exclcs.InfeasiblePattern, match="empty constraint pattern is infeasible"):
        exclcs.solve("abc", "abc", "")
    with pytest.raises(ValueError):
        exclcs.solve("abc", "abc", "")


def test_automaton():
    assert exclcs.prefix_function("ababaa") == [-1, 0, 0, 1, 2, 3, 1]
    table = exclcs.transition_table("ab", "abz")
    assert table == {"a": [1, 1], "b": [0, 2], "z": [0, 0]}
    assert exclcs.sigma("aaba", "aabaaab") == 3


def test_state_tensor():
    f = exclcs.state_tensor("abbb", "aab", "ab")
    assert len(f) == 5 and len(f[0]) == 4 and len(f[0][0]) == 2
    assert [row[0] for row in f[4]] == [0, 0, 0, 1]
    assert exclcs.state_tensor("abbb", "aab", "ab", "naive") == f
    L = exclcs.state_tensor("abbb", "aab", "ab", "chen-chao-1")
    assert L[4][3][2] == 2


def test_plain_lcs():
    assert exclcs.plain_lcs("ABCBDAB", "BDCABA") == 4


def test_diff_and_shrink():
    clean = exclcs.diff(trials=300, seed=1)
    assert clean["trials"] == 300
    assert clean["discrepancies"] == [] and clean["witness_failures"] == []

    found = exclcs.diff(trials=500, alphabet="ab", max_n=6, max_m=6, max_r=3, solvers=["chen-chao-2"])
    assert found["discrepancies"]
    first = found["discrepancies"][0]
    assert first["reported"]["chen-chao-2"] != first["expected"]

    small = exclcs.shrink("xabbbx", "xaabx", "ab", ["chen-chao-1"])
    assert small["reproduced"] and small["minimized"]
    assert small["reported"]["chen-chao-1"] != small["expected"]

    with pytest.raises(ValueError):
        exclcs.diff(solvers=["bogus"])
