from dataclasses import dataclass, field
from typing import Dict, Tuple

from .configuration import (CurveConfiguration, Crossing, CurveCycle, Face, LoopSide,
                            RibbonGraph, euler_characteristic, is_loop_side, reverse_circuit)
from .arcs import arc_edges
from .cycles import BicornCurve, as_cycle, check_bicorn, cycle_key
from .unionfind import ParityUnionFind

# ======================================================================
# Overlay engine: realize a set of cycles (curves and bicorns of a base
# configuration) as a new configuration in which every other curve has
# been erased.
#
# Each kept cycle is written as a route: a cyclic list of band passes,
# one per base edge it runs along. Inside a band the strands are ordered
# by (lane, route, pass); lane 0 is the base curve itself and a bicorn
# runs on lane +1 or -1 (the side of the host it was pushed to).
#
# The square of a base crossing is drawn as a circle with integer
# coordinates 0..63 counterclockwise:
#   slot i strand of local rank r  ->  16*i + 2 + 2*r
#   slot i port segment s          ->  16*i + 1 + 2*s
#   corner between slots i, i+1    ->  16*i + 15
# A route crossing the square is a chord between two strand points; two
# chords cross iff their endpoints interleave, and each crossing becomes
# a crossing of the overlay.
#
# Faces of the overlay are found by gluing pieces: cells of the squares,
# sub-bands between strands, and the base faces (plus erased crossing-free
# curves). The gluing carries a Z/2 frame label so that orientability of
# every region comes out of the same union-find. A region's Euler
# characteristic is
#   #cells + #sub-bands - #port segments + sum of base face chi,
# and the result must satisfy V - E + sum chi = chi(F) again.
# ======================================================================

@dataclass(frozen=True)
class BandPass:
    start: int
    end: int
    lane: int = 0

@dataclass(frozen=True)
class Route:
    curve: int
    passes: Tuple[BandPass, ...]
    corners: Tuple = ()

@dataclass
class Overlay:
    """An overlay configuration and how it relates to its base.

    curve_ids[i] is the id of the i-th kept cycle in the overlay (base
    curves keep their ids, bicorns get max_curve_id + 1, + 2, ...) and
    provenance maps each overlay crossing to the base crossing whose
    square it sits in.
    """
    config: CurveConfiguration
    curve_ids: Tuple[int, ...]
    provenance: Dict[int, int]
    routes: Tuple[Route, ...] = field(default=())

def canonical_lane(graph, start, t):
    """Lane of a strand leaving along `start` on side t, in the band's canonical frame."""
    if start < graph.mate(start) or graph.is_twisted(start):
        return t
    return -t

def curve_route(config, cid, curve=None):
    edges = config.curve(cid).edges
    if not edges:
        raise ValueError(f"Curve {cid} has no crossings, it is kept as a loop")
    return Route(cid if curve is None else curve, tuple(BandPass(o, i, 0) for o, i in edges))

def bicorn_route(config, bicorn, curve):
    """Route of a bicorn pushed off its hosts so that it hugs the corner at p.

    The route runs along the alpha arc from p to q and back along the beta
    arc from q to p. At p the strand leaves alpha on the side of the beta
    slot it came in on (and symmetrically on beta), and the side is carried
    along each arc, flipping across twisted bands.
    """
    check_bicorn(config, bicorn)
    g = config.graph
    a, b = bicorn.alpha_arc, bicorn.beta_arc
    alpha_edges = config.curve(a.curve).edges
    beta_edges = config.curve(b.curve).edges
    a_passes = [alpha_edges[j] for j in arc_edges(config, a)]
    b_list = [beta_edges[j] for j in arc_edges(config, b)]
    if b.start == a.end:
        b_passes = list(b_list)
    else:
        b_passes = [(i, o) for o, i in reversed(b_list)]

    ha_p = a_passes[0][0]
    hb_p = b_passes[-1][1]
    if hb_p not in (g.next(ha_p), g.prev(ha_p)):
        raise ValueError(f"Bicorn arcs do not meet at corner {a.start}")

    lanes_a = []
    t = 1 if hb_p == g.next(ha_p) else -1
    for s, _ in a_passes:
        lanes_a.append(canonical_lane(g, s, t))
        if g.is_twisted(s):
            t = -t

    lanes_b = [0]*len(b_passes)
    t = 1 if ha_p == g.next(hb_p) else -1
    for k in reversed(range(len(b_passes))):
        e = b_passes[k][1]
        lanes_b[k] = canonical_lane(g, e, t)
        if g.is_twisted(e):
            t = -t

    passes = [BandPass(s, e, l) for (s, e), l in zip(a_passes, lanes_a)]
    passes += [BandPass(s, e, l) for (s, e), l in zip(b_passes, lanes_b)]
    corners = ((a.start, lanes_a[0]), (a.end, lanes_b[0]))
    return Route(curve, tuple(passes), corners)

def overlay(config, keep):
    """Overlay of the kept cycles (curve ids or BicornCurves) of a configuration.

    Raises
    ------
    ValueError
        If nothing is kept, a cycle is given twice, or a bicorn is not
        embedded in the configuration
    """
    cycles = [as_cycle(c) for c in keep]
    if not cycles:
        raise ValueError("At least one cycle must be kept")
    keys = [cycle_key(c) for c in cycles]
    if len(set(keys)) != len(keys):
        raise ValueError("The same cycle is kept twice")
    next_id = config.max_curve_id() + 1
    routes, kept_loops, ids = [], [], []
    for c in cycles:
        if isinstance(c, BicornCurve):
            routes.append(bicorn_route(config, c, next_id))
            ids.append(next_id)
            next_id += 1
        else:
            c = int(c)
            if config.curve(c).is_loop:
                kept_loops.append(c)
            else:
                routes.append(curve_route(config, c))
            ids.append(c)
    return build_overlay(config, routes, kept_loops, ids)

def extract_subconfiguration(config, keep):
    """The configuration obtained by erasing every curve except the kept cycles.

    Parameters
    ----------
    config : CurveConfiguration
    keep : iterable
        Curve ids and/or BicornCurves. Bicorns get ids above config.max_curve_id(),
        in the order given.

    Returns
    -------
    CurveConfiguration
        Same surface, same Euler characteristic
    """
    return overlay(config, keep).config

def build_overlay(config, routes, kept_loops=(), curve_ids=None):
    g = config.graph
    routes = tuple(routes)
    kept_set = set(kept_loops)

    # =====================================================================================================
    # Strands in bands
    # =====================================================================================================
    strands = {}
    for r, route in enumerate(routes):
        L = len(route.passes)
        if L == 0:
            raise ValueError(f"Route of curve {route.curve} is empty")
        for k, p in enumerate(route.passes):
            if g.mate(p.start) != p.end:
                raise ValueError(f"Route of curve {route.curve}: pass {k} does not follow an edge")
            nxt = route.passes[(k + 1) % L]
            if g.crossing_of(nxt.start) != g.crossing_of(p.end) or nxt.start == p.end:
                raise ValueError(f"Route of curve {route.curve} breaks after pass {k}")
            c = min(p.start, p.end)
            strands.setdefault(c, []).append((p.lane, r, k))
    rank, width = {}, {}
    for c, lst in strands.items():
        lst.sort()
        width[c] = len(lst)
        for rho, (_, r, k) in enumerate(lst):
            rank[(r, k)] = rho

    def local_rank(h, r, k):
        rho = rank[(r, k)]
        if h < g.mate(h) or g.is_twisted(h):
            return rho
        return width[min(h, g.mate(h))] - 1 - rho

    def strand_coord(h, rho):
        return 16*g.position(h) + 2 + 2*rho

    # =====================================================================================================
    # Chords in squares and the crossings of the overlay
    # =====================================================================================================
    chords = {}
    for r, route in enumerate(routes):
        L = len(route.passes)
        for k, p in enumerate(route.passes):
            nxt = route.passes[(k + 1) % L]
            X = g.crossing_of(p.end)
            x_in = strand_coord(p.end, local_rank(p.end, r, k))
            x_out = strand_coord(nxt.start, local_rank(nxt.start, r, (k + 1) % L))
            chords.setdefault(X, []).append((r, k, x_in, x_out))
    for X, lst in chords.items():
        if len(lst) > 2:
            raise ValueError(f"More than two strands run through crossing {X}")

    def interleave(c1, c2):
        lo, hi = sorted(c1[2:])
        return (lo < c2[2] < hi) != (lo < c2[3] < hi)

    vertex_squares = sorted(X for X, lst in chords.items() if len(lst) == 2 and interleave(*lst))
    provenance, new_crossings, event = {}, [], {}
    for n, X in enumerate(vertex_squares):
        c1, c2 = chords[X]
        if c1[0] == c2[0]:
            raise ValueError(f"Curve {routes[c1[0]].curve} crosses itself at crossing {X}")
        coords = sorted([c1[2], c1[3], c2[2], c2[3]])
        curves = [None]*4
        for (r, k, xi, xo) in (c1, c2):
            si, so = coords.index(xi), coords.index(xo)
            curves[si] = curves[so] = routes[r].curve
            event[(r, k)] = (n, 4*n + si, 4*n + so, X, xi, xo)
        new_crossings.append(Crossing(n, tuple(4*n + s for s in range(4)), tuple(curves)))
        provenance[n] = X

    new_curves, twisted = [], {}
    for r, route in enumerate(routes):
        L = len(route.passes)
        ks = [k for k in range(L) if (r, k) in event]
        edges = []
        for idx, k in enumerate(ks):
            k2 = ks[(idx + 1) % len(ks)]
            steps = (k2 - k) % L or L
            tw = False
            for d in range(1, steps + 1):
                tw ^= g.is_twisted(route.passes[(k + d) % L].start)
            out_h, in_h = event[(r, k)][2], event[(r, k2)][1]
            edges.append((out_h, in_h))
            if tw:
                twisted[min(out_h, in_h)] = True
        new_curves.append(CurveCycle(route.curve, tuple(edges)))

    # =====================================================================================================
    # Regions: glue cells, sub-bands and base faces
    # =====================================================================================================
    uf = ParityUnionFind()
    spans = {X: [tuple(sorted(c[2:])) for c in lst] for X, lst in chords.items()}
    cells = set()

    def cell(X, x):
        return ("cell", X, tuple(lo < x < hi for lo, hi in spans.get(X, ())))

    def new_cell(X, x):
        a = cell(X, x)
        cells.add(a)
        return a

    subbands = []
    for h in g.half_edges():
        o = g.mate(h)
        if h > o:
            continue
        n = width.get(h, 0)
        tw = g.is_twisted(h)
        for s in range(n + 1):
            atom = ("band", h, s)
            subbands.append(atom)
            uf.union(atom, new_cell(g.crossing_of(h), 16*g.position(h) + 1 + 2*s), 0)
            s2 = s if tw else n - s
            uf.union(atom, new_cell(g.crossing_of(o), 16*g.position(o) + 1 + 2*s2), 1 if tw else 0)

    to_flag = []
    for fi, face in enumerate(config.faces):
        fa = ("face", fi)
        uf.add(fa)
        if not face.orientable:
            to_flag.append(fa)
        for circuit in face.circuits:
            for x in circuit:
                if is_loop_side(x):
                    if x.curve in kept_set:
                        continue
                    la = ("loop", x.curve)
                    if x.side == 0:
                        uf.union(fa, la, 0)
                        to_flag.append(la)
                    else:
                        uf.union(fa, la, 0 if x.side*x.direction == 1 else 1)
                    continue
                h, s = x
                pos = g.position(h)
                corner = 16*pos + 15 if s > 0 else 16*((pos - 1) % 4) + 15
                uf.union(fa, new_cell(g.crossing_of(h), corner), 0 if s > 0 else 1)
    for a in to_flag:
        uf.flag(a)

    chi = {}
    for a in cells:
        root = uf.find(a)[0]
        chi[root] = chi.get(root, 0) + 1
    for a in subbands:
        root = uf.find(a)[0]
        chi[root] = chi.get(root, 0) - 1
    for fi, face in enumerate(config.faces):
        root = uf.find(("face", fi))[0]
        chi[root] = chi.get(root, 0) + face.euler_char

    # =====================================================================================================
    # Face circuits of the overlay
    # =====================================================================================================
    ng = RibbonGraph(new_crossings, [e for c in new_curves for e in c.edges], twisted)
    coord_of = {}
    for (n, hi, ho, X, xi, xo) in event.values():
        coord_of[hi] = (X, xi)
        coord_of[ho] = (X, xo)

    def flag_region(f):
        h, s = f
        X, x = coord_of[h]
        return uf.find(cell(X, x + s))

    regions = {}
    for circ in ng.trace_circuits():
        if len({flag_region(f)[0] for f in circ}) != 1:
            raise RuntimeError("An overlay face walk leaves its region")
        root, p = flag_region(circ[0])
        if uf.consistent(root) and (circ[0][1] > 0) == (p == 1):
            circ = reverse_circuit(ng, circ)
        regions.setdefault(root, []).append(tuple(circ))

    for r, route in enumerate(routes):
        if new_curves[r].edges:
            continue
        p0 = route.passes[0]
        c = min(p0.start, p0.end)
        rho = rank[(r, 0)]
        left, right = (rho + 1, rho) if p0.start == c else (rho, rho + 1)
        tw = False
        for p in route.passes:
            tw ^= g.is_twisted(p.start)
        if tw:
            root, _ = uf.find(("band", c, left))
            regions.setdefault(root, []).append((LoopSide(route.curve, 0, 1),))
        else:
            root, pl = uf.find(("band", c, left))
            regions.setdefault(root, []).append((LoopSide(route.curve, 1, 1 if pl == 0 else -1),))
            root, pr = uf.find(("band", c, right))
            regions.setdefault(root, []).append((LoopSide(route.curve, -1, -1 if pr == 0 else 1),))

    for fi, face in enumerate(config.faces):
        for circuit in face.circuits:
            x = circuit[0]
            if is_loop_side(x) and x.curve in kept_set:
                root, p = uf.find(("face", fi))
                d = x.direction if (p == 0 or x.side == 0) else -x.direction
                regions.setdefault(root, []).append((LoopSide(x.curve, x.side, d),))

    face_roots = {uf.find(("face", fi))[0] for fi in range(len(config.faces))}
    if face_roots - set(regions):
        raise RuntimeError("An overlay region has no boundary circuit")

    def circuit_key(circ):
        x = circ[0]
        if is_loop_side(x):
            return (1, x.curve, x.side, 0)
        return (0, x[0], x[1], 0)

    faces = []
    for root in sorted(regions, key=lambda rt: min(circuit_key(c) for c in regions[rt])):
        circs = sorted(regions[root], key=circuit_key)
        b, x = len(circs), chi[root]
        orientable = uf.consistent(root)
        if orientable:
            if (2 - b - x) % 2:
                raise RuntimeError(f"Orientable overlay region with chi = {x} and {b} boundary circuits")
            genus = (2 - b - x)//2
        else:
            genus = 2 - b - x
        if genus < 0 or (not orientable and genus < 1):
            raise RuntimeError(f"Overlay region with chi = {x}, {b} boundary circuits has no surface type")
        faces.append(Face(tuple(circs), orientable, genus))

    chi_base = euler_characteristic(config)
    new_curves += [CurveCycle(c, ()) for c in kept_loops]
    result = CurveConfiguration(new_crossings, new_curves, faces, config.orientable, chi_base)
    if euler_characteristic(result) != chi_base:
        raise RuntimeError("Overlay changed the Euler characteristic: %d != %d" %(euler_characteristic(result), chi_base))

    if curve_ids is None:
        curve_ids = [route.curve for route in routes] + list(kept_loops)
    return Overlay(result, tuple(curve_ids), provenance, routes)
