"""Acceptance criteria, one test per criterion.

A per-criterion PASS/FAIL line is printed in the terminal summary.
"""

import json
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from hpade.cli import main
from hpade.errors import DegenerateError
from hpade.oracle import hp_nullspace, proportional
from hpade.poly import Polynomial
from hpade.samples import exp_prefix, geometric_prefix, in_general_position, random_suite
from hpade.series import (
    apply_start_permutation,
    from_coefficients,
    residual_coefficients,
    residual_order,
    step,
)
from hpade.verify import (
    determinant,
    last_row_pattern,
    monomial_info,
    pade_staircase,
    m2_table_consistent,
    m2_degree_table,
)
from hpade.viskovatov import (
    hermite_pade,
    iter_hermite_pade,
    iter_row_states,
    multiindex_for_step,
    pade_approximant,
)

SEED = 20200707
COUNT = 100
N_MAX = 15
LENGTH = N_MAX + 2
MS = (1, 2, 3, 4)


@pytest.fixture(scope="module")
def suite():
    return {m: random_suite(COUNT, m, LENGTH, SEED) for m in MS}


@pytest.fixture(scope="module")
def results(suite):
    t0 = time.perf_counter()
    out = {m: [list(iter_hermite_pade(t, N_MAX)) for t in suite[m]] for m in MS}
    return out, time.perf_counter() - t0


@pytest.fixture(scope="module")
def row_states(suite):
    return {m: [[s for s, _ in iter_row_states(t, N_MAX)] for t in suite[m]] for m in MS}


@pytest.mark.criterion(1, "tangency order is exactly n+1 (m=1..4, n=m-1..15, 100 tuples)")
def test_criterion_1_tangency_order(suite, results):
    res, elapsed = results
    failures = []
    for m in MS:
        for t, per_level in zip(suite[m], res[m]):
            assert [r.level for r in per_level] == list(range(m - 1, N_MAX + 1))
            for r in per_level:
                order = residual_order(t, r.polys)
                if type(order) is not int or order != r.level + 1:
                    failures.append((m, r.level, order))
    print(f"criterion 1: {sum(len(x) for m in MS for x in res[m])} results in {elapsed:.1f}s")
    assert not failures, failures[:10]
    assert elapsed < 60


@pytest.mark.criterion(2, "recurrence output proportional to the 1-dim oracle kernel (m=1..3, n<=12)")
def test_criterion_2_oracle_equivalence(suite, results):
    res, _ = results
    failures = []
    for m in (1, 2, 3):
        for t, per_level in zip(suite[m], res[m]):
            for r in per_level:
                if r.level > 12:
                    continue
                ref, dim = hp_nullspace(t, multiindex_for_step(r.level, m))
                if dim != 1 or not proportional(r.polys, ref):
                    failures.append((m, r.level, dim))
    assert not failures, failures[:10]


@pytest.mark.criterion(3, "degree staircases: m=1 staircase, m=2 table, general formula (m=3,4)")
def test_criterion_3_degree_staircases(suite, results, row_states):
    res, _ = results
    failures = []
    for idx in range(COUNT):
        for r, state in zip(res[1][idx], row_states[1][idx]):
            q_row = pade_staircase(r.level)
            if state.rows[0].degrees != q_row or r.degrees != q_row[::-1]:
                failures.append((1, idx, r.level))
        for r, state in zip(res[2][idx], row_states[2][idx][1:]):
            n = r.level
            table = m2_degree_table(n)
            observed = {"Q": state.rows[0].degrees, "R": state.rows[1].degrees}
            if any(observed[key] != val for key, val in table.items()):
                failures.append((2, idx, n, "table"))
            if not m2_table_consistent(n):
                failures.append((2, idx, n, "table vs formula"))
            if r.degrees != multiindex_for_step(n, 2).degrees:
                failures.append((2, idx, n))
        for m in (3, 4):
            for r in res[m][idx]:
                if r.degrees != multiindex_for_step(r.level, m).degrees:
                    failures.append((m, idx, r.level))
    assert not failures, failures[:10]


@pytest.mark.criterion(4, "m=2: |k[n]| = n-1 for every tested n")
def test_criterion_4_multiindex_total(results):
    res, _ = results
    for per_level in res[2]:
        for r in per_level:
            assert r.multiindex.total == r.level - 1
            assert sum(r.degrees) == r.level - 1


@pytest.mark.criterion(5, "Pade: geometric series reproduced for n=1..10; exp prefix matches oracle n<=9")
def test_criterion_5_classical_pade():
    one_minus_z = Polynomial((1, -1))
    geometric = {}
    for n in range(1, 11):
        try:
            P, Q = pade_approximant(geometric_prefix(12), n)
        except DegenerateError as exc:
            geometric[n] = f"DEGENERATE level {exc.level} slot {exc.slot}"
            continue
        identity = P * one_minus_z - Q
        geometric[n] = "ok" if identity.is_zero() else f"P(1-z)-Q = {identity!r}"

    e = exp_prefix(11)
    t = from_coefficients([[1] + [0] * 11, e])
    exp_ok = {}
    for n in range(0, 10):
        P, Q = pade_approximant(e, n)
        ref, dim = hp_nullspace(t, multiindex_for_step(n, 1))
        exp_ok[n] = dim == 1 and proportional(type(ref)((-P, Q)), ref)
    print("criterion 5 geometric:", geometric)
    print("criterion 5 exp:", exp_ok)
    assert all(exp_ok.values()), exp_ok
    assert all(v == "ok" for v in geometric.values()), geometric


@pytest.mark.criterion(6, "row degrees monotone (j=2..m+1, n>=m-1) and last row pattern")
def test_criterion_6_row_monotonicity(row_states):
    failures = []
    for m in MS:
        for states in row_states[m]:
            for state in states:
                n = state.level
                if n < m - 1:
                    continue
                degs = [r.degrees for r in state.full_rows()]
                for j in range(2, m + 2):
                    if any(a < b for a, b in zip(degs[j - 2], degs[j - 1])):
                        failures.append((m, n, j, degs[j - 2], degs[j - 1]))
                if degs[-1] != last_row_pattern(n, m):
                    failures.append((m, n, "last row", degs[-1]))
    levels = sorted({(f[0], f[1]) for f in failures})
    print(f"criterion 6: {len(failures)} violations at (m, n) = {levels}")
    assert not failures, failures[:5]


@pytest.mark.criterion(7, "det A[n] is a monomial +-z^(n+1) (m=1..3, n<=8); sign law recorded")
def test_criterion_7_determinant(row_states):
    signs = {}
    for m in (1, 2, 3):
        for states in row_states[m]:
            for state in states[:9]:
                n = state.level
                info = monomial_info(determinant(state.full_rows()))
                assert info is not None, (m, n)
                degree, c = info
                assert degree == n + 1
                assert abs(c) == 1
                signs.setdefault((m, n), set()).add(int(c))
    assert all(len(s) == 1 for s in signs.values())
    law = {key: s.pop() for key, s in signs.items()}
    print("criterion 7 observed sign of det A[n] by (m, n):", law)


@pytest.mark.criterion(8, "start permutations s=0,1,2 (m=2) rotate the increment order, residuals hold")
def test_criterion_8_start_permutation(suite):
    # general position depends on the processing order, so the degree pattern
    # is only claimed where the oracle certifies the permuted tuple; the
    # residual check covers every (tuple, s) pair
    m = 2
    excluded = []
    for idx, t in enumerate(suite[m]):
        for s in range(m + 1):
            tp = apply_start_permutation(t, s)
            generic = in_general_position(tp, N_MAX)
            if not generic:
                excluded.append((idx, s))
            prev = None
            for r in iter_hermite_pade(tp, N_MAX, check=False):
                n = r.level
                assert residual_order(t, r.polys) == n + 1
                assert residual_order(tp, r.polys) == n + 1
                if generic and prev is not None:
                    diff = [a - b for a, b in zip(r.degrees, prev)]
                    expected = [0] * (m + 1)
                    expected[(s + n - m) % (m + 1)] = 1
                    assert diff == expected, (idx, s, n, r.degrees, prev)
                prev = r.degrees
    print(f"criterion 8: degree pattern skipped for non-generic (tuple, s) pairs {excluded}")
    assert len(excluded) <= 0.05 * 3 * COUNT


@pytest.mark.criterion(9, "concurrent slot evaluation is bit-identical to sequential")
def test_criterion_9_parallel_determinism(suite):
    with ThreadPoolExecutor(max_workers=4) as pool:
        for m in MS:
            for t in suite[m]:
                seq = par = t
                for _ in range(N_MAX):
                    seq, a_seq = step(seq)
                    par, a_par = step(par, executor=pool)
                    assert seq == par
                    assert a_seq == a_par
                    assert [s.coeffs for s in seq.series] == [s.coeffs for s in par.series]


@pytest.mark.criterion(10, "float backend on exp prefix: residual <= 1e-6 relative (m=1, n<=8)")
def test_criterion_10_floating_sanity():
    e = exp_prefix(11)
    t = from_coefficients([[1] + [0] * 11, e], "float", 1e-10)
    for n in range(0, 9):
        r = hermite_pade(t, n, check=False)
        scale = max(abs(c) for p in r.polys for c in p.coeffs)
        res = residual_coefficients(t, r.polys)[: n + 1]
        assert max(abs(x) for x in res) <= 1e-6 * scale, (n, res)


@pytest.mark.criterion(11, "degenerate tuples raise DEGENERATE with level/slot; CLI exit 2, no polys")
def test_criterion_11_degeneracy(suite, capsys):
    for t in suite[1][:20]:
        f = t.series[1].coeffs
        twin = from_coefficients([f, f])
        with pytest.raises(DegenerateError) as info:
            hermite_pade(twin, 3)
        assert (info.value.level, info.value.slot) == (1, 0)

    cases = [
        ([[0, 1, 2, 3], [1, 2, 3, 4]], 0),
        ([[1, 1, 2, 3], [0, 2, 3, 4]], 1),
        ([[1, 1, 2, 3], [0, 2, 3, 4], [3, 1, 1, 1]], 1),
        ([[1, 1, 2, 3], [2, 2, 3, 4], [0, 1, 1, 1]], 2),
    ]
    for rows, slot in cases:
        with pytest.raises(DegenerateError) as info:
            hermite_pade(from_coefficients(rows), 2)
        assert (info.value.level, info.value.slot) == (0, slot)
        series = ";".join(",".join(str(c) for c in r) for r in rows)
        capsys.readouterr()
        assert main(["--series", series, "--steps", "2"]) == 2
        doc = json.loads(capsys.readouterr().out)
        assert "polys" not in doc
        assert doc["error"]["code"] == "DEGENERATE"
        assert (doc["error"]["level"], doc["error"]["slot"]) == (0, slot)

    capsys.readouterr()
    assert main(["--series", "1,2,3,4;1,2,3,4", "--steps", "1"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert "polys" not in doc and doc["error"]["level"] == 1
