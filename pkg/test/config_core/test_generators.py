from fractions import Fraction

import pytest

from pybicorn.surface.generators import (SurfaceSpec, TorusCurve, generate_family, grid_curves,
                                         insert_bigon, realize_torus, torus_crossings)
from pybicorn.surface.topology import validate

def test_torus_crossings_count():
    curves = grid_curves(7)
    assert len(torus_crossings(curves)) == 7

def test_parallel_curves_are_disjoint():
    a = TorusCurve.line(0, (0, Fraction(1, 3)), (1, 0))
    b = TorusCurve.line(1, (0, Fraction(2, 3)), (1, 0))
    assert torus_crossings([a, b]) == []

def test_overlapping_curves_rejected():
    a = TorusCurve.line(0, (0, Fraction(1, 3)), (1, 0))
    with pytest.raises(ValueError):
        torus_crossings([a, TorusCurve.line(1, (Fraction(1, 2), Fraction(1, 3)), (1, 0))])

def test_realized_torus_has_requested_surface():
    config = realize_torus(grid_curves(5), "largest", SurfaceSpec(-4, True).handle_topology())
    report = validate(config)
    assert report.valid, report.problems
    assert report.euler_char == -4

def test_insert_bigon_adds_two_crossings():
    curves = insert_bigon(grid_curves(3), 1, 0)
    assert len(torus_crossings(curves)) == 5
    with pytest.raises(ValueError):
        insert_bigon(grid_curves(3), 0, 1)

def test_triple_counts():
    config = generate_family("triple-4")
    assert config.intersection(0, 1) == 4
    assert config.intersection(0, 2) == 3
    assert config.intersection(1, 2) == 7

@pytest.mark.parametrize("pattern", ["grid-0", "grid-x", "ring-3", "figure2"])
def test_unknown_patterns(pattern):
    with pytest.raises(ValueError):
        generate_family(pattern)

def test_figure1_needs_nonorientable():
    with pytest.raises(ValueError):
        generate_family("figure1", SurfaceSpec(-2, True))
