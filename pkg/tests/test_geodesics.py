from collections import Counter

import numpy as np
import pytest

from multifilar.errors import InversionInconsistency, NonIntegral, OverflowGuard
from multifilar.geodesics import (
    count_short_cycles_bruteforce,
    length_spectrum,
    multiplicities_from_spectrum,
    nb_matrix,
    nb_trace,
    nb_traces,
    primitive_counts,
)
from multifilar.graph_core import from_edges
from multifilar.spectral import summarize, summarize_eigenvalues

from conftest import family


def closed_nb_walks(g, length):
    """Closed non-backtracking walks with a marked starting arc, by exhaustion."""
    count = 0

    def walk(first, prev, cur, steps):
        nonlocal count
        if steps == length:
            # the closing step must be non-backtracking too
            if cur == first[0] and first[1] != prev:
                count += 1
            return
        for w in g.neighbors[cur]:
            if w != prev:
                walk(first, cur, w, steps + 1)

    for u in range(g.n):
        for v in g.neighbors[u]:
            walk((u, v), u, v, 1)
    return count


def test_nb_matrix_row_sums(named):
    b = nb_matrix(named["petersen"])
    assert b.dim == 30
    assert np.all(b.matrix.sum(axis=1) == 2)


def test_nb_trace_k4(named):
    assert nb_trace(named["k4"], 3) == 24 == closed_nb_walks(named["k4"], 3)


@pytest.mark.parametrize("length", [1, 2, 3, 4, 5, 6, 7])
def test_nb_trace_matches_walk_enumeration(named, length):
    for g in named.values():
        assert nb_trace(g, length) == closed_nb_walks(g, length)


def test_petersen_short_traces(named):
    assert nb_trace(named["petersen"], 3) == 0
    assert nb_trace(named["petersen"], 4) == 0


def test_traces_below_one_and_two_vanish():
    for g in family(8):
        assert nb_traces(g, 2) == [0, 0]


def test_length_spectrum_examples(named):
    assert length_spectrum(named["k4"], 3)[3] == 4
    p = length_spectrum(named["petersen"], 5)
    assert (p[3], p[4], p[5]) == (0, 0, 12)
    assert p.girth() == 5
    k = length_spectrum(named["k33"], 4)
    assert (k[3], k[4]) == (0, 9)


def test_multiplicities_from_spectrum_examples(named):
    assert multiplicities_from_spectrum(summarize(named["k4"]))[:2] == (4, 3)
    assert multiplicities_from_spectrum(summarize(named["petersen"]))[:2] == (0, 0)
    s = summarize(named["petersen"])
    assert s.power_sum(4) == pytest.approx(150, abs=1e-9)


def test_multiplicities_nonintegral():
    s = summarize_eigenvalues(np.array([3.0, -1.0, -1.0, -0.9]), 3)
    with pytest.raises(NonIntegral):
        multiplicities_from_spectrum(s)


def test_bruteforce_examples(named):
    assert count_short_cycles_bruteforce(named["k4"], 3) == 4
    assert count_short_cycles_bruteforce(named["petersen"], 5) == 12
    assert count_short_cycles_bruteforce(named["k33"], 4) == 9
    with pytest.raises(ValueError):
        count_short_cycles_bruteforce(named["k4"], 7)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_three_way_agreement(n):
    for g in family(n):
        spec = length_spectrum(g, 5)
        brute = [count_short_cycles_bruteforce(g, k) for k in (3, 4, 5)]
        assert [spec[3], spec[4], spec[5]] == brute
        m3, m4, _ = multiplicities_from_spectrum(summarize(g))
        assert (m3, m4) == (spec[3], spec[4])


@pytest.mark.parametrize("n", [8, 10])
def test_inversion_round_trip(n):
    for g in family(n):
        traces = nb_traces(g, 16)
        c = primitive_counts(traces)
        assert all(x >= 0 and x % 2 == 0 for x in c)
        for length in range(1, 17):
            rebuilt = sum(e * c[e - 1] for e in range(1, length + 1) if length % e == 0)
            assert rebuilt == traces[length - 1]


def test_girth_invariant():
    for g in family(10):
        spec = length_spectrum(g, 8)
        girth = spec.girth()
        assert all(spec[k] == 0 for k in range(3, girth))


def test_inversion_detects_bad_traces():
    with pytest.raises(InversionInconsistency):
        primitive_counts([0, 0, 7])
    with pytest.raises(InversionInconsistency):
        primitive_counts([0, 0, 3])


def test_overflow_guard():
    # 8-regular K9: q = 7, so 7^(l-1) outgrows int64 quickly
    from itertools import combinations

    g = from_edges(9, combinations(range(9), 2))
    nb_traces(g, 10)
    with pytest.raises(OverflowGuard):
        nb_traces(g, 40)


def test_n10_case_study():
    rows = []
    for g in family(10):
        spec = length_spectrum(g, 5)
        rows.append((spec[3], spec[4], spec[5]))
    assert Counter(r[0] for r in rows) == {0: 6, 1: 3, 2: 5, 3: 2, 4: 3}
    assert sorted(r[1] for r in rows if r[0] == 0) == [0, 2, 3, 5, 5, 6]
    assert sorted(r[2] for r in rows if r[:2] == (0, 5)) == [0, 2]
    # the two graphs with four triangles and two quadrangles
    assert sorted(r[2] for r in rows if r[:2] == (4, 2)) == [2, 4]
