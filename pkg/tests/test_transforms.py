import random

import numpy as np
import pytest

from qspec.graph import Graph, cycle_graph, distance, path_graph
from qspec.spectra import SpectralVector, complement_eigenpair, rayleigh
from qspec.transforms import (TransformError, lemma21_max_bound, t1_closure, t1_step,
                              t2_candidates, t2_step, trace_lines)
from qspec.verify import random_bicyclic


def test_lemma21_examples():
    assert lemma21_max_bound(0.2, 0.1, 0.9, -0.8)
    assert lemma21_max_bound(-0.5, -0.5, 0.3, -0.5)


def test_t1_on_path():
    # top at 0, bottom at 5: path 0-1-2-...-5
    g = path_graph(6)
    x = SpectralVector([0.9, 0.1, 0.0, 0.0, -0.1, -0.8])
    h, step = t1_step(g, x)
    assert step.deleted_edge == (1, 2)
    # (0.9 + 0)^2 >= (-0.8 + 0.1)^2, so the top branch wins
    assert step.added_edge == (0, 2)
    assert h.m == g.m
    assert rayleigh(h, x, exact=True) >= rayleigh(g, x, exact=True)
    assert distance(h, 0, 5) == distance(g, 0, 5) - 1


def test_t1_branch_choice():
    g = path_graph(6)
    x = SpectralVector([0.7, 0.6, -0.1, 0.0, 0.0, -0.9])
    _, step = t1_step(g, x)
    # lhs = (0.7 - 0.1)^2 = 0.36, rhs = (-0.9 + 0.6)^2 = 0.09
    assert step.added_edge == (0, 2)
    x = SpectralVector([0.2, 0.1, 0.1, 0.0, 0.0, -0.9])
    _, step = t1_step(g, x)
    # lhs = 0.09, rhs = 0.64
    assert step.added_edge == (1, 5)


def test_t1_needs_distance_three():
    x = SpectralVector([0.5, 0.0, -0.5])
    with pytest.raises(TransformError):
        t1_step(path_graph(3), x)


def test_t1_needs_sign_split():
    with pytest.raises(TransformError):
        t1_step(path_graph(5), SpectralVector([1, 2, 3, 4, 5]))


def test_t2_moves_pendant():
    # pendant 4 hangs off 3; extremes are 0 and 2
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])
    x = SpectralVector([0.8, 0.1, -0.6, 0.05, 0.3])
    assert t2_candidates(g, x) == [4]
    h, step = t2_step(g, x)
    assert step.deleted_edge == (3, 4) and step.added_edge == (0, 4)
    assert rayleigh(h, x, exact=True) >= rayleigh(g, x, exact=True)
    with pytest.raises(TransformError):
        t2_step(g, x, pendant=1)


def test_closure_reaches_distance_two():
    g = path_graph(8)
    x = SpectralVector(np.linspace(0.6, -0.6, 8))
    h, steps = t1_closure(g, x)
    assert distance(h, 0, 7) <= 2
    lines = trace_lines(g, x, steps)
    assert len(lines) == len(steps) > 0
    assert lines[0].startswith("step 1: del ")
    sums = [float(s.split("rayleigh=")[1]) for s in lines]
    assert sums == sorted(sums)


def test_closure_cap():
    x = SpectralVector(np.linspace(0.6, -0.6, 8))
    with pytest.raises(TransformError) as info:
        t1_closure(path_graph(8), x, max_steps=1)
    assert len(info.value.trace) == 1


@pytest.mark.parametrize("seed", range(5))
def test_random_steps_raise_edge_sum(seed):
    rng = random.Random(seed)
    done = 0
    while done < 20:
        g = random_bicyclic(rng.randint(7, 12), rng)
        x = complement_eigenpair(g).vector
        if not x[x.top] > 0 > x[x.bottom]:
            continue
        for step in (t1_step, t2_step):
            try:
                h, _ = step(g, x)
            except TransformError:
                continue
            assert rayleigh(h, x, exact=True) >= rayleigh(g, x, exact=True)
            assert h.m == g.m
            done += 1


def test_cycle_sanity():
    # distance from top to bottom on C6 is at most 3
    g = cycle_graph(6)
    x = SpectralVector([0.5, 0.2, -0.1, -0.5, -0.1, 0.2])
    h, _ = t1_step(g, x)
    assert h.m == 6
