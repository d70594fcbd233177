import pytest

from pybicorn.bicorns import bicorn_sequence, enumerate_bicorns
from pybicorn.projection import (SubsurfaceContext, boundary_crossings, cuts, projection_arcs,
                                 projection_transfer_pair, shared_projection_witness)
from pybicorn.surface.arcs import ArcSpan

# In the projection pattern F' is the complement of the thin annulus between
# curves 2 and 3; curve 4 lies in the annulus and curve 5 in F'.

def test_context(fix_p):
    config, ctx = fix_p
    assert ctx.boundary == (2, 3)
    assert ctx.euler_char == -2
    assert ctx.to_dict() == {"subsurface": {"boundary": [2, 3], "inside": [[2, -1], [3, 1]]}}

def test_annulus_is_rejected(fix_p):
    config, _ = fix_p
    with pytest.raises(ValueError):
        SubsurfaceContext(config, (2, 3), {2: 1, 3: -1})

def test_context_errors(fix_p):
    config, _ = fix_p
    with pytest.raises(ValueError):
        SubsurfaceContext(config, (), {})
    with pytest.raises(ValueError):
        SubsurfaceContext(config, (2, 3), {2: -1})
    with pytest.raises(ValueError):
        SubsurfaceContext(config, (0, 2), {0: 1, 2: -1})
    with pytest.raises(ValueError):
        SubsurfaceContext.from_dict(config, {"boundary": [2, 3], "inside": [[2, -1], [3, 1]], "holes": 2})

def test_curves_inside_and_outside(fix_p):
    _, ctx = fix_p
    arcs = projection_arcs(ctx, 5)
    assert len(arcs) == 1 and arcs[0].is_full
    assert projection_arcs(ctx, 4) == []
    assert cuts(ctx, 5) and not cuts(ctx, 4)
    with pytest.raises(ValueError):
        projection_arcs(ctx, 2)

def test_alpha_is_cut_into_twelve_arcs(fix_p):
    _, ctx = fix_p
    arcs = projection_arcs(ctx, 0)
    assert len(arcs) == 12
    for a in arcs:
        assert not a.is_full
        assert set(a.end_curves) == {2, 3}

def test_witness_iff_three_crossings(fix_p):
    config, ctx = fix_p
    host_arcs = projection_arcs(ctx, 0)
    seen = {True: 0, False: 0}
    for g in enumerate_bicorns(config, 0, 1):
        count = boundary_crossings(ctx, g.alpha_arc, 2)
        w = shared_projection_witness(ctx, g, "alpha", 2)
        assert (w is None) == (count < 3)
        seen[w is not None] += 1
        if w is None:
            continue
        assert 2 in w.end_curves
        assert any(w.within(p) for p in host_arcs)
        assert any(w.within(p) for p in projection_arcs(ctx, g))
    assert seen[True] and seen[False]

def test_witness_arguments(fix_p):
    config, ctx = fix_p
    g = enumerate_bicorns(config, 0, 1)[0]
    with pytest.raises(ValueError):
        shared_projection_witness(ctx, g, "gamma")
    with pytest.raises(ValueError):
        shared_projection_witness(ctx, g, "alpha", 5)

def test_boundary_crossings_full_and_empty(fix_p):
    _, ctx = fix_p
    assert boundary_crossings(ctx, ArcSpan.full(0), 2) == 12
    assert boundary_crossings(ctx, ArcSpan.full(1), 3) == 18
    assert boundary_crossings(ctx, ArcSpan.empty(1), 3) == 0

def test_transfer_pair(fix_p):
    config, ctx = fix_p
    seq = bicorn_sequence(config, 0, 1)
    transfer = projection_transfer_pair(ctx, seq)
    assert transfer is not None
    assert transfer.index == 0
    x, y = seq[0], seq[1]
    assert boundary_crossings(ctx, x.alpha_arc, 2) >= 3
    assert boundary_crossings(ctx, y.beta_arc, 2) >= 3
    assert any(transfer.witness.within(p) for p in projection_arcs(ctx, x))
    assert any(transfer.next_witness.within(p) for p in projection_arcs(ctx, y))
    assert transfer.to_dict()["index"] == 0
