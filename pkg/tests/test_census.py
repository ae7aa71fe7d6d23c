import json

import pytest

from qspec.census import (_canon_trees, bicyclic_census, bicyclic_classes, disconnected_classes,
                          extremal_search, read_csv, records_for, star2e_forms,
                          star2e_is_only_disconnected, tree_chord_candidates, write_csv)
from qspec.formats import from_graph6
from qspec.graph import GraphError, classify_base, is_connected, path_graph
from qspec.trees import free_trees

# connected bicyclic graphs on n vertices
KNOWN = {5: 5, 6: 19, 7: 67, 8: 236, 9: 797}


@pytest.mark.parametrize("n", sorted(KNOWN))
def test_counts(n):
    assert len(bicyclic_classes(n)) == KNOWN[n]


def test_records_are_valid():
    recs = list(bicyclic_census(7))
    assert len({r.canonical for r in recs}) == len(recs)
    for r in recs:
        g = r.graph
        assert is_connected(g) and g.m == g.n + 1
        assert r.base == classify_base(g)
        if r.complement_connected:
            assert r.lambda_c >= -1e-8
            if r.complement_bipartite:
                assert r.lambda_c <= 1e-6
        else:
            assert r.lambda_c is None


def test_candidates_per_tree():
    # P4 has 3 non-edges, hence 3 chord pairs
    assert len(list(tree_chord_candidates(path_graph(4)))) == 3


def test_workers_do_not_change_result():
    assert bicyclic_classes(8, workers=2) == bicyclic_classes(8)


def test_checkpoint_and_resume(tmp_path):
    ck = tmp_path / "c.json"
    full = bicyclic_classes(7, checkpoint=str(ck))
    state = json.loads(ck.read_text())
    assert state["n"] == 7 and len(state["classes"]) == len(full)
    # the state a run interrupted after five trees would have left behind
    part, count = _canon_trees([t.masks for t in list(free_trees(7))[:5]])
    state.update(next_tree=5, candidates=count, classes=sorted(c.decode() for c in part))
    ck.write_text(json.dumps(state))
    assert bicyclic_classes(7, checkpoint=str(ck), resume=True) == full
    with pytest.raises(ValueError):
        bicyclic_classes(8, checkpoint=str(ck), resume=True)


def test_range():
    with pytest.raises(GraphError):
        bicyclic_classes(4)
    with pytest.raises(GraphError):
        bicyclic_classes(15)
    with pytest.raises(GraphError):
        extremal_search(11)


def test_csv_round_trip(tmp_path):
    recs = records_for(bicyclic_classes(6))
    path = tmp_path / "c6.csv"
    write_csv(recs, str(path))
    rows = read_csv(str(path))
    assert [k for k in rows[0]] == ["canonical", "n", "base_kind", "lambda_c", "complement_connected"]
    lams = [float(r["lambda_c"]) for r in rows if r["lambda_c"]]
    assert lams == sorted(lams)
    assert {r["canonical"] for r in rows} == {r.canonical for r in recs}
    assert all(from_graph6(r["canonical"]).n == 6 for r in rows)


def test_extremal_small_order():
    res = extremal_search(9, list(bicyclic_census(9)))
    assert res.unique and res.matches_g1


def test_two_dominating_vertex_classes():
    # both ways of adding two leaf edges to a star leave the centre isolated
    # in the complement, and nothing else does
    recs = list(bicyclic_census(8))
    assert disconnected_classes(recs) == sorted(star2e_forms(8).values())
    assert not star2e_is_only_disconnected(recs)
