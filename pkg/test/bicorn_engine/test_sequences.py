import numpy as np
import pytest

from pybicorn.bicorns import (bicorn_sequence, enumerate_bicorns, extend_to_sequence, sandwiched,
                              sequence_problems, shared_arc_witness)
from pybicorn.surface.reduction import reduced_intersection

@pytest.mark.parametrize("k", [3, 4, 5, 7, 10, 16, 25, 50])
def test_grid_sequence(grid, k):
    config = grid(k)
    seq = bicorn_sequence(config, 0, 1)
    assert seq[0].key() == ("curve", 0)
    assert seq[-1].key() == ("curve", 1)
    assert sequence_problems(config, seq) == []
    assert len(seq.witnesses) == len(seq) - 1
    for (x, y), w in zip(zip(seq.items, seq.items[1:]), seq.witnesses):
        assert w == shared_arc_witness(x, y)
        assert w
        assert reduced_intersection(config, x, y)[0] <= 1
    assert seq.reduced_beta[0] == k and seq.reduced_beta[-1] == 0

@pytest.mark.parametrize("k", [5, 12, 30])
def test_sandwich(grid, k):
    config = grid(k)
    seq = bicorn_sequence(config, 0, 1)
    rng = np.random.RandomState(918)
    triples = np.sort(rng.randint(0, len(seq), size=(1000, 3)), axis=1)
    for j, i, l in triples:
        assert sandwiched(config, seq, int(j), int(i), int(l))

def test_sandwich_order(grid):
    seq = bicorn_sequence(grid(4), 0, 1)
    with pytest.raises(ValueError):
        sandwiched(grid(4), seq, 2, 1, 3)

def test_two_crossings(fix_t2):
    seq = bicorn_sequence(fix_t2, 0, 1)
    assert len(seq) == 3
    assert seq[1].whole_curve is None
    assert max(seq.reduced_beta[1:]) <= 1
    assert sequence_problems(fix_t2, seq) == []

def test_disjoint_pair(fix_p):
    config, _ = fix_p
    messages = []
    seq = bicorn_sequence(config, 2, 5, log=messages.append)
    assert len(seq) == 2
    assert seq.diagnostics and messages

def test_extend_through_bicorn(grid):
    config = grid(6)
    proper = enumerate_bicorns(config, 0, 1)[1:-1]
    for g in (proper[0], proper[len(proper)//2], proper[-1]):
        seq = extend_to_sequence(config, g)
        assert seq[seq.anchor].key() == g.key()
        assert seq.index(g) == seq.anchor
        assert seq[0].key() == ("curve", 0) and seq[-1].key() == ("curve", 1)
        assert sequence_problems(config, seq, adjacency=False) == []
        assert seq.reduced_alpha is not None and seq.reduced_alpha[0] == 0

def test_extend_whole_curve(grid):
    config = grid(5)
    alpha = enumerate_bicorns(config, 0, 1)[0]
    assert [b.key() for b in extend_to_sequence(config, alpha)] == [b.key() for b in bicorn_sequence(config, 0, 1)]

def test_sequence_dict(grid):
    d = bicorn_sequence(grid(4), 0, 1).to_dict()
    assert d["host"] == [0, 1]
    assert len(d["sequence"]) == len(d["reduced_beta"])
