import numpy as np
import pytest

from qspec.canon import is_isomorphic
from qspec.families import (FamilyParams, build_complement, build_family, class_sizes,
                            eigen_system, live_quotient, named_graph, quotient_matrix,
                            system_quotient, vertex_classes)
from qspec.graph import (BGraph, Theta, classify_base, complement, is_bicyclic,
                         is_connected, star_plus_2e)
from qspec.spectra import complement_q, spectrum

ALL = [FamilyParams(f, p, q) for f in ("G1", "G2", "G4")
       for s in range(5, 12) for p, q in [(s - k, k) for k in range(s + 1)]
       if FamilyParams(f, p, q).n >= 12]


@pytest.mark.parametrize("params", ALL[::3], ids=str)
def test_shape(params):
    g = build_family(params)
    assert g.n == params.n and g.m == g.n + 1
    assert is_bicyclic(g)
    assert is_connected(complement(g))


@pytest.mark.parametrize("family,base", [
    ("G1", Theta(2, 2, 2)), ("G2", Theta(1, 2, 3)), ("G4", BGraph(3, 3, 2))])
def test_base_kind(family, base):
    assert classify_base(build_family(FamilyParams(family, 4, 3))) == base


def test_extreme_orders():
    assert build_family(FamilyParams.extreme("G1", 12)).m == 13
    assert FamilyParams.extreme("G4", 12) == FamilyParams("G4", 5, 0)


@pytest.mark.parametrize("params", ALL[::5], ids=str)
def test_partition_is_equitable(params):
    gc = build_complement(params)
    deg, counts = eigen_system(params)
    classes = vertex_classes(params)
    where = {v: i for i, cls in enumerate(classes) for v in cls}
    for v in range(gc.n):
        i = where[v]
        assert gc.degree(v) == deg[i]
        seen = [0] * 7
        for w in gc.adj[v]:
            seen[where[w]] += 1
        live = [j for j in range(7) if class_sizes(params)[j]]
        assert [seen[j] for j in live] == [counts[i][j] for j in live]


@pytest.mark.parametrize("params", ALL[::4], ids=str)
def test_displayed_quotient_matches_system(params):
    np.testing.assert_array_equal(quotient_matrix(params), system_quotient(params))


@pytest.mark.parametrize("params", ALL[::4], ids=str)
def test_quotient_eigenvalues_lift(params):
    full = spectrum(complement_q(build_family(params)))
    for mu in np.linalg.eigvals(live_quotient(params).astype(float)).real:
        assert np.min(np.abs(full - mu)) < 1e-6


def test_empty_class_row():
    # with q = 0 the last class is empty; its row only adds its diagonal entry
    # as an extra root, which happens to equal the pendant-clique eigenvalue p + 2
    params = FamilyParams("G1", 7, 0)
    full = np.sort(np.linalg.eigvals(quotient_matrix(params).astype(float)).real)
    live = np.linalg.eigvals(live_quotient(params).astype(float)).real
    np.testing.assert_allclose(full, np.sort(np.append(live, 9.0)), atol=1e-9)
    assert live_quotient(params).shape == (6, 6)
    assert np.min(np.abs(spectrum(complement_q(build_family(params))) - 9.0)) < 1e-9


def test_g1_and_g4_symmetric_in_p_q():
    for fam in ("G1", "G4"):
        assert is_isomorphic(build_family(FamilyParams(fam, 2, 5)),
                             build_family(FamilyParams(fam, 5, 2)))
    assert not is_isomorphic(build_family(FamilyParams("G2", 2, 5)),
                             build_family(FamilyParams("G2", 5, 2)))


def test_min_degree_of_g1_complement():
    for p, q in [(5, 2), (4, 3), (6, 1)]:
        assert build_complement(FamilyParams("G1", p, q)).min_degree() == q + 1


def test_bad_params():
    with pytest.raises(ValueError):
        FamilyParams("G3", 1, 1)
    with pytest.raises(ValueError):
        FamilyParams("G1", -1, 2)
    with pytest.raises(ValueError):
        build_family(FamilyParams("G1", 1, 0))


def test_named_graphs():
    assert named_graph("g1", p=7, q=0).n == 12
    assert named_graph("star2e", n=12) == star_plus_2e(12)
    assert named_graph("theta", a=1, b=2, c=2).n == 4
    assert classify_base(named_graph("infinity", a=3, b=5)).__class__.__name__ == "Infinity"
    with pytest.raises(ValueError):
        named_graph("h1")
