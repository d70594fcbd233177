import pytest

from pybicorn.bicorns import enumerate_bicorns
from pybicorn.surface.configuration import ConfigurationError, Crossing, CurveConfiguration, CurveCycle, Face
from pybicorn.surface.generators import SurfaceSpec, generate_family, grid_configuration, grid_curves, realize_torus
from pybicorn.surface.overlay import extract_subconfiguration
from pybicorn.surface.topology import exterior_essential_witness, surface_orientable, validate
from pybicorn.surface.unionfind import ParityUnionFind

@pytest.mark.parametrize("k", [1, 2, 3, 5, 9])
def test_grid_counts(grid, k):
    config = grid(k)
    assert len(config.crossings) == k
    assert config.n_edges == 2*k
    assert len(config.faces) == k
    assert config.intersection(0, 1) == k
    assert config.euler_characteristic() == -2

def test_validate_fixtures(fix_t2, fix_n):
    report = validate(fix_t2)
    assert report.valid, report.problems
    assert str(report) == "valid, χ = -2"
    report = validate(fix_n)
    assert report.valid, report.problems
    assert report.orientable is False

def test_validate_nonorientable_grid():
    config = grid_configuration(4, SurfaceSpec(-3, False))
    report = validate(config)
    assert report.valid, report.problems
    assert report.euler_char == -3
    assert not surface_orientable(config)

def test_surface_spec_rejects():
    with pytest.raises(ValueError):
        SurfaceSpec(-3, True).handle_topology()
    with pytest.raises(ValueError):
        SurfaceSpec(-1, False).handle_topology()
    assert SurfaceSpec(-4, True).handle_topology() == (True, 2)

def test_validate_reports_small_surface(grid):
    torus = grid(3).with_face(0, True, 0)
    report = validate(torus)
    assert not report.valid
    assert any("> -2" in p for p in report.problems)

def test_validate_reports_bigon():
    report = validate(generate_family("bigon-3"))
    assert not report.valid
    assert any("not minimal position" in p for p in report.problems)

def test_self_crossing_rejected():
    crossings = [Crossing(0, (0, 1, 2, 3), (0, 0, 0, 0))]
    with pytest.raises(ConfigurationError, match="self-crossing"):
        CurveConfiguration(crossings, [CurveCycle(0, ((0, 2), (1, 3)))], [])

def test_uncovered_side_rejected(grid):
    config = grid(3)
    with pytest.raises(ConfigurationError):
        CurveConfiguration(config.crossings, config.curves, config.faces[1:], True)

def test_unknown_curve(grid):
    with pytest.raises(ValueError, match="Unknown curve"):
        grid(3).curve(7)

def test_handle_witness(fix_t2):
    w = exterior_essential_witness(fix_t2)
    assert w is not None
    assert w.kind == "handle-core"

def test_faces_keep_topology(grid):
    config = grid(4)
    assert config.faces[0].topology.genus == 1
    assert all(f.topology.is_disk for f in config.faces[1:])
    assert isinstance(config.faces[0], Face)

def test_parity_union_find():
    uf = ParityUnionFind()
    assert uf.union("a", "b", 1)
    assert uf.union("b", "c", 1)
    ra, pa = uf.find("a")
    rc, pc = uf.find("c")
    assert ra == rc and pa == pc
    assert not uf.union("a", "c", 1)
    assert "a" in uf and "z" not in uf

def test_filling_curves_have_no_exterior_witness():
    torus = realize_torus(grid_curves(3), topology=(True, 0))
    assert all(f.topology.is_disk for f in torus.faces)
    assert exterior_essential_witness(torus) is None

def test_mobius_witness(fix_n):
    w = exterior_essential_witness(fix_n)
    assert w is not None
    assert w.kind == "möbius-core"
    assert not fix_n.faces[w.face].orientable

def test_subconfiguration_keeps_euler_characteristic(fix_t2, fix_n):
    for config in (fix_t2, fix_n):
        chi = config.euler_characteristic()
        alone = extract_subconfiguration(config, [0])
        assert [c.id for c in alone.curves] == [0]
        assert not alone.crossings
        assert alone.euler_characteristic() == chi
        assert alone.orientable == config.orientable
        both = extract_subconfiguration(config, [0, 1])
        assert len(both.crossings) == config.intersection(0, 1)
        assert both.euler_characteristic() == chi

def test_subconfiguration_with_a_bicorn(fix_t2):
    b = next(b for b in enumerate_bicorns(fix_t2, 0, 1) if b.whole_curve is None)
    sub = extract_subconfiguration(fix_t2, [0, b])
    assert [c.id for c in sub.curves] == [0, fix_t2.max_curve_id() + 1]
    assert sub.euler_characteristic() == fix_t2.euler_characteristic()
