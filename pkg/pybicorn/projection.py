from dataclasses import dataclass
from typing import Optional, Tuple

from .surface.arcs import ArcSpan, arc_edges, span
from .surface.configuration import LoopSide
from .surface.cycles import BicornCurve, check_bicorn
from .surface.generators import PROJECTION_INSIDE, projection_configuration
from .surface.unionfind import ParityUnionFind

# =====================================================================================================
# Subsurface projections.
#
# A subsurface F' is given by a set of pairwise disjoint boundary curves and,
# for each of them, the side (+1 left, -1 right of its first edge) that faces
# F'. The side is carried along the curve, flipping across twisted edges, and
# spread to every face through the edges of the other curves.
# =====================================================================================================

@dataclass(frozen=True)
class ProjectionArc:
    """A maximal piece of a cycle inside F', cut at the boundary curves.

    pieces are the host-curve arcs the piece runs along (two of them when it
    turns at a bicorn corner); edges are the (curve, edge index) pairs it
    covers; ends are its two boundary crossings, None for a whole curve.
    """
    pieces: Tuple[ArcSpan, ...]
    edges: Tuple[Tuple[int, int], ...]
    ends: Optional[Tuple[int, int]] = None
    end_curves: Optional[Tuple[int, int]] = None

    @property
    def is_full(self):
        return self.ends is None

    def within(self, other):
        return set(self.edges) <= set(other.edges)

    def to_dict(self):
        return {"pieces": [p.to_list() for p in self.pieces],
                "ends": None if self.ends is None else list(self.ends),
                "boundary": None if self.end_curves is None else list(self.end_curves)}

class SubsurfaceContext:
    """A subsurface F' of the surface of a configuration.

    Parameters
    ----------
    config : CurveConfiguration
    boundary : iterable of int
        Curve ids of ∂F', pairwise disjoint
    inside : dict
        Boundary curve id -> side (+1 or -1) of its first edge lying in F'

    Raises
    ------
    ValueError
        If the boundary curves meet, a boundary curve is one-sided, the
        side labels contradict each other, or F' has χ >= 0 (a disk, an
        annulus or a Möbius band)
    """

    def __init__(self, config, boundary, inside):
        self.config = config
        self.boundary = tuple(boundary)
        self.inside = {int(k): int(v) for k, v in dict(inside).items()}
        if not self.boundary:
            raise ValueError("A subsurface needs at least one boundary curve")
        if set(self.inside) != set(self.boundary):
            raise ValueError(f"Inside sides {sorted(self.inside)} do not match the boundary {sorted(self.boundary)}")
        for b in self.boundary:
            config.curve(b)
            if self.inside[b] not in (1, -1):
                raise ValueError(f"Inside side of curve {b} must be +1 or -1")
        for i, b1 in enumerate(self.boundary):
            for b2 in self.boundary[i + 1:]:
                if config.intersection(b1, b2):
                    raise ValueError(f"Boundary curves {b1} and {b2} intersect")
        self._label_faces()
        self.euler_char = self._euler_char()
        if self.euler_char >= 0:
            raise ValueError(f"Subsurface has χ = {self.euler_char} >= 0: it is a disk, an annulus or a Möbius band")

    def _label_faces(self):
        config, g = self.config, self.config.graph
        uf = ParityUnionFind()
        for b in self.boundary:
            side = self.inside[b]
            curve = config.curve(b)
            if curve.is_loop:
                if config.is_one_sided_loop(b):
                    raise ValueError(f"Boundary curve {b} is one-sided")
                self._union_label(uf, config.face_of(LoopSide(b, side)), 0, b)
                self._union_label(uf, config.face_of(LoopSide(b, -side)), 1, b)
                continue
            s = 1
            for o, i in curve.edges:
                self._union_label(uf, config.face_of((o, side*s)), 0, b)
                self._union_label(uf, config.face_of((o, -side*s)), 1, b)
                if g.is_twisted(o):
                    s = -s
            if s != 1:
                raise ValueError(f"Boundary curve {b} is one-sided")
        for c in config.curves:
            if c.id in self.inside:
                continue
            if c.is_loop:
                if not config.is_one_sided_loop(c.id):
                    uf.union(("face", config.face_of(LoopSide(c.id, 1))), ("face", config.face_of(LoopSide(c.id, -1))))
                continue
            for o, i in c.edges:
                if not uf.union(("face", config.face_of((o, 1))), ("face", config.face_of((o, -1)))):
                    raise ValueError(f"Inconsistent sides: curve {c.id} joins inside and outside faces")
        self.face_inside = {}
        for fi in range(len(config.faces)):
            node = ("face", fi)
            if node not in uf or uf.find(node)[0] != uf.find("in")[0]:
                raise ValueError(f"Face {fi} is on neither side of the boundary")
            self.face_inside[fi] = uf.find(node)[1] == uf.find("in")[1]

    @staticmethod
    def _union_label(uf, fi, parity, b):
        if not uf.union(("face", fi), "in", parity):
            raise ValueError(f"Inconsistent sides along boundary curve {b}: face {fi} is inside and outside")

    def _euler_char(self):
        config = self.config
        V = sum(1 for x in config.crossings
                if not set(x.curve_pair()) & set(self.boundary) and self.face_inside[config.face_of((x.slots[0], 1))])
        E = sum(1 for c in config.curves if c.id not in self.inside
                for j in range(len(c.edges)) if self.edge_inside(c.id, j))
        F = sum(f.euler_char for fi, f in enumerate(config.faces) if self.face_inside[fi])
        return V - E + F

    def edge_inside(self, curve, j):
        return self.face_inside[self.config.face_of((self.config.out_half(curve, j), 1))]

    def is_boundary_crossing(self, x):
        return bool(set(self.config.crossing(x).curve_pair()) & set(self.boundary))

    def boundary_curve_at(self, x):
        pair = self.config.crossing(x).curve_pair()
        return next(c for c in pair if c in self.inside)

    def to_dict(self):
        return {"subsurface": {"boundary": list(self.boundary),
                               "inside": [[b, self.inside[b]] for b in self.boundary]}}

    @classmethod
    def from_dict(cls, config, d):
        if not isinstance(d, dict):
            raise ValueError("A subsurface must be a JSON object")
        d = d.get("subsurface", d)
        if not isinstance(d, dict):
            raise ValueError("A subsurface must be a JSON object")
        unknown = set(d) - {"boundary", "inside"}
        if unknown:
            raise ValueError(f"Unknown subsurface keys {sorted(unknown)}")
        missing = {"boundary", "inside"} - set(d)
        if missing:
            raise ValueError(f"Subsurface is missing the keys {sorted(missing)}")
        try:
            boundary = [int(b) for b in d["boundary"]]
            inside = {int(b): int(s) for b, s in d["inside"]}
        except (TypeError, ValueError):
            raise ValueError(f"Malformed subsurface {d}") from None
        return cls(config, boundary, inside)

def projection_fixture(surface=None):
    """The projection pattern and its subsurface: the complement of the annulus between curves 2 and 3."""
    config = projection_configuration(surface)
    return config, SubsurfaceContext(config, tuple(PROJECTION_INSIDE), PROJECTION_INSIDE)

# =====================================================================================================
# WALKS
# A walk is a list of steps (curve, edge index, direction, from crossing, to crossing).
# =====================================================================================================

def _arc_walk(config, arc, reverse=False):
    stations = config.stations(arc.curve)
    n = len(stations)
    steps = [(arc.curve, j, 1, stations[j], stations[(j + 1) % n]) for j in arc_edges(config, arc)]
    if reverse:
        steps = [(c, j, -1, y, x) for c, j, _, x, y in reversed(steps)]
    return steps

def _cycle_walk(ctx, cycle):
    """The closed walk of a curve or bicorn and whether it is a whole curve."""
    config = ctx.config
    if isinstance(cycle, BicornCurve):
        check_bicorn(config, cycle)
        if cycle.whole_curve is not None:
            cycle = cycle.whole_curve
        else:
            for c in cycle.hosts:
                if c in ctx.inside:
                    raise ValueError(f"Curve {c} is a boundary curve of the subsurface")
            a, b = cycle.alpha_arc, cycle.beta_arc
            first = _arc_walk(config, a)
            return first + _arc_walk(config, b, reverse=(b.start == a.end)), False
    if cycle in ctx.inside:
        raise ValueError(f"Curve {cycle} is a boundary curve of the subsurface")
    return _arc_walk(config, ArcSpan.full(cycle)), True

def _pieces(config, steps):
    """Group consecutive steps along one curve into ArcSpans."""
    pieces = []
    run = [steps[0]]
    for st in steps[1:]:
        if st[0] == run[-1][0] and st[2] == run[-1][2]:
            run.append(st)
        else:
            pieces.append(run)
            run = [st]
    pieces.append(run)
    return tuple(span(config, r[0][0], r[0][3], r[-1][4], r[0][2]) for r in pieces)

def _make_arc(ctx, steps):
    x, y = steps[0][3], steps[-1][4]
    return ProjectionArc(_pieces(ctx.config, steps), tuple((c, j) for c, j, _, _, _ in steps),
                         (x, y), (ctx.boundary_curve_at(x), ctx.boundary_curve_at(y)))

def _split(ctx, steps, closed):
    """Cut a walk at boundary crossings; returns the segments and which ones touch a boundary at both ends."""
    cuts = [k for k, st in enumerate(steps) if ctx.is_boundary_crossing(st[3])]
    if not cuts:
        return [], []
    if closed:
        k0 = cuts[0]
        steps = steps[k0:] + steps[:k0]
        cuts = [k - k0 for k in cuts]
    segments, inner = [], []
    if not closed and cuts[0] > 0:
        segments.append(steps[:cuts[0]])
        inner.append(False)
    bounds = cuts + [len(steps)]
    for k, l in zip(bounds[:-1], bounds[1:]):
        segments.append(steps[k:l])
        inner.append(closed or l < len(steps))
    return segments, inner

def projection_arcs(ctx, cycle):
    """π_F'(c): the pieces of a curve or bicorn inside F', cut at ∂F'.

    Returns
    -------
    list of ProjectionArc
        Empty if c misses F'; one whole-curve arc if c lies in F' without
        crossing ∂F'

    Raises
    ------
    ValueError
        If c is a boundary curve
    """
    steps, whole = _cycle_walk(ctx, cycle)
    segments, _ = _split(ctx, steps, True)
    if not segments:
        c, j = steps[0][0], steps[0][1]
        if not ctx.edge_inside(c, j):
            return []
        if whole:
            return [ProjectionArc((ArcSpan.full(c),), tuple((c, j) for c, j, _, _, _ in steps))]
        return [ProjectionArc(_pieces(ctx.config, steps), tuple((c, j) for c, j, _, _, _ in steps))]
    return [_make_arc(ctx, seg) for seg in segments if ctx.edge_inside(seg[0][0], seg[0][1])]

def cuts(ctx, cycle):
    """Whether the cycle cuts F'."""
    return bool(projection_arcs(ctx, cycle))

def boundary_crossings(ctx, arc, boundary):
    """Number of crossings of a host arc with a boundary curve."""
    config = ctx.config
    if arc.is_empty:
        return 0
    common = set(config.common_crossings(arc.curve, boundary))
    if arc.is_full:
        return len(common)
    stations = config.stations(arc.curve)
    n = len(stations)
    points = {stations[j] for j in arc_edges(config, arc)} | {stations[(arc_edges(config, arc)[-1] + 1) % n]}
    return len(points & common)

def shared_projection_witness(ctx, bicorn, side="alpha", boundary=None):
    """An arc of F' shared by the projections of a bicorn and of one of its hosts.

    When the selected host arc crosses the boundary curve at least three
    times, some piece of it between two boundary crossings lies inside F'
    and ends on that curve; that piece belongs to both projections.

    Parameters
    ----------
    ctx : SubsurfaceContext
    bicorn : BicornCurve
    side : str
        "alpha" or "beta", the host arc examined
    boundary : int, optional
        Boundary curve counted; the first one by default

    Returns
    -------
    ProjectionArc or None
        None when the arc crosses the boundary curve at most twice
    """
    check_bicorn(ctx.config, bicorn)
    if side not in ("alpha", "beta"):
        raise ValueError(f"side must be 'alpha' or 'beta', got {side}")
    boundary = ctx.boundary[0] if boundary is None else boundary
    if boundary not in ctx.inside:
        raise ValueError(f"Curve {boundary} is not a boundary curve of the subsurface")
    arc = bicorn.alpha_arc if side == "alpha" else bicorn.beta_arc
    if arc.curve in ctx.inside:
        raise ValueError(f"Curve {arc.curve} is a boundary curve of the subsurface")
    if boundary_crossings(ctx, arc, boundary) < 3:
        return None
    segments, inner = _split(ctx, _arc_walk(ctx.config, arc), arc.is_full)
    for seg, ok in zip(segments, inner):
        if not ok or not ctx.edge_inside(seg[0][0], seg[0][1]):
            continue
        if boundary in (ctx.boundary_curve_at(seg[0][3]), ctx.boundary_curve_at(seg[-1][4])):
            return _make_arc(ctx, seg)
    return None

@dataclass
class ProjectionTransfer:
    index: int
    witness: ProjectionArc          # from the α-arc of item K
    next_witness: ProjectionArc     # from the β-arc of item K+1
    common: int                     # crossings shared by the two witnesses

    def to_dict(self):
        return {"index": self.index, "witness": self.witness.to_dict(),
                "next_witness": self.next_witness.to_dict(), "common": self.common}

def projection_transfer_pair(ctx, seq, boundary=None):
    """First consecutive pair of a bicorn sequence whose arcs both cross a boundary curve three times.

    Returns
    -------
    ProjectionTransfer or None
        None if no item's α-arc and the next item's β-arc reach three
        crossings together

    Raises
    ------
    ValueError
        If some item of the sequence misses the boundary curve
    """
    boundary = ctx.boundary[0] if boundary is None else boundary
    for k, g in enumerate(seq.items):
        if boundary_crossings(ctx, g.alpha_arc, boundary) + boundary_crossings(ctx, g.beta_arc, boundary) == 0:
            raise ValueError(f"Sequence item {k} ({g}) does not cross boundary curve {boundary}")
    for K in range(len(seq.items) - 1):
        x, y = seq.items[K], seq.items[K + 1]
        if boundary_crossings(ctx, x.alpha_arc, boundary) < 3 or boundary_crossings(ctx, y.beta_arc, boundary) < 3:
            continue
        w, w1 = shared_projection_witness(ctx, x, "alpha", boundary), shared_projection_witness(ctx, y, "beta", boundary)
        if w is None or w1 is None:
            continue
        common = _arc_points(ctx.config, w) & _arc_points(ctx.config, w1)
        return ProjectionTransfer(K, w, w1, len(common))
    return None

def _arc_points(config, parc):
    points = set()
    for c, j in parc.edges:
        stations = config.stations(c)
        points.update((stations[j], stations[(j + 1) % len(stations)]))
    return points
