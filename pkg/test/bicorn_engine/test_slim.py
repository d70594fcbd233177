from itertools import permutations

import pytest

from pybicorn.bicorns import enumerate_bicorns, slim_step, slim_triple
from pybicorn.surface.cycles import check_bicorn
from pybicorn.surface.generators import SurfaceSpec, generate_family
from pybicorn.surface.reduction import intersection_number

# 34 configurations in all six role orders
TRIPLES = [(k, None) for k in range(3, 21)] + [(k, s) for s in (SurfaceSpec(-3, False), SurfaceSpec(-4, True)) for k in range(3, 11)]

@pytest.fixture(scope="module")
def triple():
    cache = {}
    def make(k, surface=None):
        if (k, surface) not in cache:
            cache[(k, surface)] = generate_family("triple-%d" %k, surface)
        return cache[(k, surface)]
    return make

@pytest.mark.parametrize("k, surface", TRIPLES)
@pytest.mark.parametrize("roles", list(permutations((0, 1, 2))))
def test_slim_triple(triple, k, surface, roles):
    config = triple(k, surface)
    a, b, d = roles
    cert = slim_triple(config, a, b, d)
    assert cert.eta.hosts == (a, d)
    assert cert.epsilon.hosts == (b, d)
    assert cert.theta.hosts == (a, b)
    assert cert.intersections["eta_epsilon"] <= 2
    assert min(cert.intersections["eta_theta"], cert.intersections["epsilon_theta"]) <= 2
    assert cert.intersections["%s_theta" %cert.side] <= 2

def test_slim_step(triple):
    config = triple(5)
    tried = 0
    for g in enumerate_bicorns(config, 0, 1)[1:-1]:
        if intersection_number(config, g, 2) < 3:
            continue
        h = slim_step(config, g, 2)
        check_bicorn(config, h)
        assert 2 in h.hosts
        assert intersection_number(config, g, h) <= 2
        tried += 1
        if tried == 12:
            break
    assert tried > 0

def test_slim_step_rejects(triple):
    config = triple(4)
    alpha = enumerate_bicorns(config, 0, 1)[0]
    with pytest.raises(ValueError):
        slim_step(config, alpha, 0)

def test_slim_triple_needs_three_curves(triple):
    with pytest.raises(ValueError):
        slim_triple(triple(3), 0, 1, 1)
