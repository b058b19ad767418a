import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multifilar.errors import (
    Disconnected,
    InfeasibleParameters,
    MalformedGraph6,
    NotRegular,
    NotSimple,
    OddHandshake,
    SizeLimitExceeded,
    UnsupportedLength,
)
from multifilar.geodesics import count_short_cycles_bruteforce
from multifilar.graph_core import (
    Provenance,
    by_name,
    canonical_form,
    enumerate_regular,
    graph6_decode,
    graph6_encode,
    k4,
    petersen,
    read_graph6,
    string_of_diamonds,
    validate,
    write_graph6,
)

from conftest import family


def test_validate_k4():
    g = validate(np.ones((4, 4), dtype=int) - np.eye(4, dtype=int))
    assert (g.n, g.d) == (4, 3)


def test_validate_path_is_not_regular():
    a = np.zeros((4, 4), dtype=int)
    for i in range(3):
        a[i, i + 1] = a[i + 1, i] = 1
    with pytest.raises(NotRegular) as exc:
        validate(a)
    assert exc.value.vertex == 0 or exc.value.degree in (1, 2)


def test_validate_two_k4_blocks_disconnected():
    block = np.ones((4, 4), dtype=int) - np.eye(4, dtype=int)
    a = np.zeros((8, 8), dtype=int)
    a[:4, :4] = block
    a[4:, 4:] = block
    with pytest.raises(Disconnected):
        validate(a)


def test_validate_loop_and_weights():
    a = np.ones((4, 4), dtype=int) - np.eye(4, dtype=int)
    a[0, 0] = 1
    with pytest.raises(NotSimple):
        validate(a)
    b = 2 * (np.ones((4, 4), dtype=int) - np.eye(4, dtype=int))
    with pytest.raises(NotSimple):
        validate(b)


def test_validate_odd_handshake():
    triangle = [[1, 2], [0, 2], [0, 1]]
    with pytest.raises(OddHandshake):
        validate(triangle, d=3)
    assert validate(triangle).d == 2


def test_validate_accepts_neighbor_lists():
    g = validate([[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])
    assert g.neighbors == k4().neighbors


# graph6 ---------------------------------------------------------------------

def test_graph6_k4():
    g = graph6_decode("C~")
    assert canonical_form(g) == canonical_form(k4())
    assert graph6_encode(g) == "C~"


def test_graph6_header_for_n10():
    assert graph6_encode(petersen())[0] == "I"
    for g in family(10):
        assert graph6_encode(g)[0] == chr(63 + 10)


def test_graph6_matches_networkx():
    for g in family(10):
        ours = graph6_encode(g)
        ref = nx.to_graph6_bytes(nx.Graph(g.edges()), nodes=range(g.n), header=False).decode().strip()
        assert ours == ref


@pytest.mark.parametrize("n", [8, 10, 12])
def test_graph6_round_trip_enumerated(n):
    for g in family(n):
        s = graph6_encode(g)
        assert graph6_decode(s) == g
        assert graph6_encode(graph6_decode(s)) == s


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "C}"])
def test_graph6_malformed(bad):
    with pytest.raises((MalformedGraph6, NotRegular)):
        graph6_decode(bad)


def test_graph6_long_form_unsupported():
    with pytest.raises(UnsupportedLength):
        graph6_decode("~??~" + "?" * 10)


def test_graph6_file_round_trip(tmp_path):
    path = tmp_path / "g.g6"
    write_graph6(family(8), path)
    raw = path.read_bytes()
    assert raw.endswith(b"\n") and b"\r" not in raw
    assert tuple(read_graph6(path)) == family(8).graphs


# canonical form -------------------------------------------------------------

def test_canonical_k4_permuted():
    g = k4()
    assert canonical_form(g) == canonical_form(g.relabel([2, 0, 3, 1]))


def test_canonical_k33_vs_prism():
    assert canonical_form(by_name("k33")) != canonical_form(by_name("prism:3"))


def test_canonical_petersen_vs_triangle_graphs():
    p = canonical_form(petersen())
    with_triangles = [g for g in family(10) if count_short_cycles_bruteforce(g, 3) > 0]
    assert with_triangles
    assert all(canonical_form(g) != p for g in with_triangles)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 18), st.randoms(use_true_random=False))
def test_canonical_invariant_under_relabelling(idx, rnd):
    g = family(10)[idx]
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_canonical_agrees_with_networkx_isomorphism():
    graphs = family(10).graphs
    for a, b in itertools.combinations(graphs[:10], 2):
        iso = nx.is_isomorphic(nx.Graph(a.edges()), nx.Graph(b.edges()))
        assert iso == (canonical_form(a) == canonical_form(b))


# enumeration ----------------------------------------------------------------

def _bruteforce_cubic(n):
    """All connected 3-regular graphs on n vertices up to isomorphism, by exhaustion."""
    pairs = list(itertools.combinations(range(n), 2))
    classes = []
    for edges in itertools.combinations(pairs, 3 * n // 2):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if any(x != 3 for x in deg):
            continue
        es = set(edges)
        if not nx.is_connected(nx.Graph(edges)):
            continue
        for rep in classes:
            if any(
                {tuple(sorted((p[u], p[v]))) for u, v in edges} == rep
                for p in itertools.permutations(range(n))
            ):
                break
        else:
            classes.append(es)
    return classes


def test_enumerate_n6_matches_bruteforce():
    assert len(_bruteforce_cubic(6)) == 2
    assert len(enumerate_regular(6, 3)) == 2


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)])
def test_enumerate_counts(n, count):
    fam = enumerate_regular(n, 3)
    assert len(fam) == count
    assert fam.provenance is Provenance.ENUMERATED
    assert (fam.n, fam.d) == (n, 3)


def test_enumerate_k4():
    (g,) = enumerate_regular(4, 3)
    assert canonical_form(g) == canonical_form(k4())


@pytest.mark.parametrize("n, count", [(5, 1), (6, 1), (7, 2), (8, 6), (9, 16)])
def test_enumerate_quartic(n, count):
    assert len(enumerate_regular(n, 4)) == count


@pytest.mark.parametrize("n", [8, 10, 12])
def test_enumerated_family_properties(n):
    fam = family(n)
    forms = [canonical_form(g) for g in fam]
    assert len(set(forms)) == len(forms)
    assert forms == sorted(forms)
    for g in fam:
        assert validate(list(g.neighbors), 3) == g


def test_enumeration_is_deterministic():
    assert enumerate_regular(10, 3).graphs == enumerate_regular(10, 3).graphs


@pytest.mark.parametrize("n, d", [(5, 3), (3, 3), (7, 3), (2, 2)])
def test_enumerate_infeasible(n, d):
    with pytest.raises(InfeasibleParameters):
        enumerate_regular(n, d)


def test_enumerate_size_guard():
    with pytest.raises(SizeLimitExceeded):
        enumerate_regular(16, 3)
    with pytest.raises(SizeLimitExceeded):
        enumerate_regular(18, 3, allow_long_runs=True)


# constructions ---------------------------------------------------------------

@pytest.mark.parametrize("n, triangles", [(8, 4), (10, 4), (12, 6), (14, 6), (16, 8), (18, 8)])
def test_string_of_diamonds(n, triangles):
    g = string_of_diamonds(n)
    assert validate(list(g.neighbors), 3) == g
    assert count_short_cycles_bruteforce(g, 3) == triangles == 2 * (n // 4)


@pytest.mark.parametrize("n", [4, 6, 7, 9])
def test_string_of_diamonds_rejects(n):
    with pytest.raises(InfeasibleParameters):
        string_of_diamonds(n)


def test_petersen_is_kneser():
    g = petersen()
    assert nx.is_isomorphic(nx.Graph(g.edges()), nx.petersen_graph())


def test_by_name():
    assert by_name("diamond-string:12").n == 12
    with pytest.raises(KeyError):
        by_name("dodecahedron")


@pytest.mark.parametrize("n", [8, 10, 12])
def test_triangle_bound(n):
    bound = 2 * (n // 4)
    assert all(count_short_cycles_bruteforce(g, 3) <= bound for g in family(n))
