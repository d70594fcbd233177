from dataclasses import replace

import pytest

from pybicorn.certify import certified_distance_upper, replay_certificate, small_case_certificate
from pybicorn.surface.cycles import BicornCurve
from pybicorn.surface.reduction import intersection_number

def test_two_crossings(fix_t2):
    cert = certified_distance_upper(fix_t2, 0, 1)
    assert cert.complete
    assert cert.total == 2
    assert cert.steps[0].kind == "exterior"
    assert cert.steps[0].witness is not None
    assert replay_certificate(cert) == []

def test_crosscap_goes_through_a_bicorn(fix_n):
    cert = certified_distance_upper(fix_n, 0, 1)
    assert cert.complete
    assert cert.total <= 3
    assert replay_certificate(cert) == []
    middle = [s.target for s in cert.steps if isinstance(s.target, BicornCurve)]
    assert middle
    s = cert.steps[0]
    g = middle[0]
    assert min(intersection_number(s.config, g, c) for c in g.hosts) == 0

@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8])
def test_at_most_eight_crossings(grid, k):
    cert = certified_distance_upper(grid(k), 0, 1)
    assert cert.complete
    assert cert.total <= 4
    assert replay_certificate(cert) == []

def test_grid9_curve_graph(grid):
    cert = certified_distance_upper(grid(9), 0, 1)
    assert cert.complete
    assert cert.total <= 5
    assert cert.bounds["holds"]
    assert replay_certificate(cert) == []

def test_grid9_augmented(grid):
    cert = certified_distance_upper(grid(9), 0, 1, "augmented_k", 2)
    assert cert.complete
    assert cert.total <= 3
    assert cert.bounds["stated"] == 3
    assert cert.bounds["stated_holds"] and cert.bounds["derived_holds"]
    assert replay_certificate(cert) == []

def test_identical_curves(grid):
    cert = certified_distance_upper(grid(4), 1, 1)
    assert cert.total == 0
    assert cert.path == ["curve 1"]

def test_graph_names(grid):
    with pytest.raises(ValueError):
        certified_distance_upper(grid(4), 0, 1, "pants")
    with pytest.raises(ValueError):
        certified_distance_upper(grid(4), 0, 1, "aug", 1)
    with pytest.raises(ValueError):
        certified_distance_upper(grid(4), 0, 7)

def test_small_case(fix_t2, grid):
    cert = small_case_certificate(fix_t2, 0, 1)
    assert cert.bounds == {"stated": 2, "holds": True}
    with pytest.raises(ValueError):
        small_case_certificate(grid(9), 0, 1)

def test_tampered_certificate(grid):
    cert = certified_distance_upper(grid(6), 0, 1)
    step = cert.steps[0]
    cert.steps[0] = replace(step, intersection=step.intersection + 1)
    assert replay_certificate(cert)

def test_certificate_dict(grid):
    d = certified_distance_upper(grid(5), 0, 1).to_dict()["certificate"]
    for key in ("graph", "path", "witnesses", "total"):
        assert key in d
    assert d["path"][0] == "curve 0" and d["path"][-1] == "curve 1"

def test_three_crossings_end_the_curve_graph_recursion(grid):
    cert = certified_distance_upper(grid(3), 0, 1)
    assert len(cert.steps) == 1
    assert cert.steps[0].intersection == 3
    assert cert.steps[0].kind == "exterior"
    assert cert.total == 2
    assert replay_certificate(cert) == []
