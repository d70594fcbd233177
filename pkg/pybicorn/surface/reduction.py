import copy
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import numpy as np

from .overlay import BandPass, Route, build_overlay, canonical_lane, curve_route, overlay
from .configuration import is_loop_side
from .cycles import as_cycle, cycle_key

# Unseeded reductions kept per configuration, least recently used dropped first
REDUCED_CACHE_SIZE = 1024

@dataclass(frozen=True)
class Bigon:
    """A disk face bounded by one edge of each of two curves."""
    face: int
    corners: Tuple[int, int]
    flags: Tuple[Tuple[int, int], Tuple[int, int]]

    def to_dict(self):
        return {"face": self.face, "corners": list(self.corners)}

@dataclass(frozen=True)
class BigonRecord:
    corners: Tuple[int, int]   # base crossings carrying the two corners
    pushed: int                # overlay id of the curve pushed across

@dataclass
class ReductionTrace:
    initial: int
    final: int = 0
    bigons: List[BigonRecord] = field(default_factory=list)
    corner_sides: List[Tuple[int, int]] = field(default_factory=list)

    def to_dict(self):
        return {"initial": self.initial,
                "final": self.final,
                "bigons": [{"corners": list(b.corners), "pushed": b.pushed} for b in self.bigons],
                "corner_sides": [list(c) for c in self.corner_sides]}

@dataclass
class ReducedPair:
    overlay: object
    ids: Tuple[int, int]
    trace: ReductionTrace

    @property
    def count(self):
        return len(self.overlay.config.crossings)

def find_bigons(config, c1, c2):
    """Every bigon face between curves c1 and c2 of a configuration."""
    g = config.graph
    pair = {c1, c2}
    found = []
    for fi, face in enumerate(config.faces):
        if not face.topology.is_disk:
            continue
        circuit = face.circuits[0]
        if len(circuit) != 2 or any(is_loop_side(x) for x in circuit):
            continue
        (h0, s0), (h1, s1) = circuit
        u, v = g.crossing_of(h0), g.crossing_of(h1)
        if u == v:
            continue
        if {g.curve_of(h0), g.curve_of(h1)} != pair:
            continue
        found.append(Bigon(fi, (u, v), ((h0, s0), (h1, s1))))
    return found

def is_minimal_position(config, c1, c2):
    """Whether two curves are in minimal position, with a bigon as witness if not.

    Returns
    -------
    (bool, Bigon or None)
        The bigon lives in the overlay of {c1, c2}; its corners are given
        as crossings of `config`.
    """
    if c1 == c2:
        raise ValueError("is_minimal_position needs two distinct curves")
    config.curve(c1), config.curve(c2)
    ov = overlay(config, [c1, c2])
    bigons = find_bigons(ov.config, *ov.curve_ids)
    if not bigons:
        return True, None
    b = bigons[0]
    return False, Bigon(b.face, tuple(ov.provenance[x] for x in b.corners), b.flags)

def push_across(ov, bigon, pushed):
    """Isotope curve `pushed` across a bigon, removing its two corners."""
    config = ov.config
    g = config.graph
    ids = ov.curve_ids
    other = ids[1] if pushed == ids[0] else ids[0]
    (h0, _), (h1, _) = bigon.flags
    halves = [h0, g.mate(h0), h1, g.mate(h1)]
    g_half = next(h for h in (h0, h1) if g.curve_of(h) == pushed)
    cid, j = config.edge_of(g_half)
    o, i = config.curve(cid).edges[j]
    u = g.crossing_of(o)
    f_u = next(h for h in halves if g.curve_of(h) == other and g.crossing_of(h) == u)
    if o == g.next(f_u):
        t = -1
    elif o == g.prev(f_u):
        t = 1
    else:
        raise RuntimeError(f"Bigon corner at crossing {u} is not a corner")

    passes = list(curve_route(config, pushed).passes)
    passes[j] = BandPass(f_u, g.mate(f_u), canonical_lane(g, f_u, t))
    routes = [Route(pushed, tuple(passes)), curve_route(config, other)]
    if ids[0] != pushed:
        routes.reverse()
    new = build_overlay(config, routes, (), ids)
    new.provenance = {x: ov.provenance[y] for x, y in new.provenance.items()}
    return new

def reduce_pair(config, c1, c2, rng=None):
    """Overlay two cycles and remove bigons until none is left.

    Parameters
    ----------
    config : CurveConfiguration
    c1, c2 : int or BicornCurve
    rng : numpy.random.RandomState, optional
        Picks the bigon and the curve to push at each step. Without it the
        first bigon is removed by pushing the first cycle.

    Returns
    -------
    ReducedPair
    """
    c1, c2 = as_cycle(c1), as_cycle(c2)
    if cycle_key(c1) == cycle_key(c2):
        raise ValueError(f"Cannot reduce a cycle against itself ({cycle_key(c1)})")
    ov = overlay(config, [c1, c2])
    trace = ReductionTrace(initial=len(ov.config.crossings))
    for route in ov.routes:
        for corner, lane in route.corners:
            trace.corner_sides.append((corner, lane))
    while True:
        bigons = find_bigons(ov.config, *ov.curve_ids)
        if not bigons:
            break
        if rng is None:
            idx, which = 0, 0
        else:
            idx, which = rng.randint(len(bigons)), rng.randint(2)
        b = bigons[idx]
        pushed = ov.curve_ids[which]
        trace.bigons.append(BigonRecord(tuple(ov.provenance[x] for x in b.corners), pushed))
        ov = push_across(ov, b, pushed)
    trace.final = len(ov.config.crossings)
    return ReducedPair(ov, tuple(ov.curve_ids), trace)

def reduced_intersection(config, c1, c2, seed=None):
    """Geometric intersection number of two cycles of a configuration.

    Bicorns are pushed off their hosts, the pair is overlaid and every
    bigon is removed; the number of crossings left does not depend on the
    removal order.

    Parameters
    ----------
    config : CurveConfiguration
    c1, c2 : int or BicornCurve
    seed : int, optional
        Seed of a random bigon-removal order. Seeded reductions are not cached.

    Returns
    -------
    count : int
    trace : ReductionTrace
        A copy owned by the caller
    """
    if seed is not None:
        red = reduce_pair(config, c1, c2, np.random.RandomState(seed))
        return red.count, red.trace
    cache = config._memo.setdefault("reduced", OrderedDict())
    key = (cycle_key(as_cycle(c1)), cycle_key(as_cycle(c2)))
    if key in cache:
        cache.move_to_end(key)
    else:
        red = reduce_pair(config, c1, c2)
        cache[key] = (red.count, red.trace)
        if len(cache) > REDUCED_CACHE_SIZE:
            cache.popitem(last=False)
    count, trace = cache[key]
    return count, copy.deepcopy(trace)

def intersection_number(config, c1, c2):
    """i(c1, c2), with i(c, c) = 0."""
    if cycle_key(as_cycle(c1)) == cycle_key(as_cycle(c2)):
        return 0
    return reduced_intersection(config, c1, c2)[0]
