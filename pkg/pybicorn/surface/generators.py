import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple
import numpy as np

from .configuration import CurveConfiguration, Crossing, CurveCycle, Face, RibbonGraph

# ======================================================================
# Test-corpus generators.
#
# Most families are drawn as straight (or polygonal) closed curves on the
# flat torus R^2 / Z^2, with exact rational coordinates. The crossings and
# the rotation at each crossing come from the geometry; the faces are the
# counterclockwise face walks. One face then receives the extra topology
# (a handle, or cross-caps) that turns the torus into the requested
# surface:
#   orientable, χ = -2h     ->  one face of genus h
#   non-orientable, χ = -c  ->  one face with c cross-caps
#
# grid-k and figure1 are written down directly as combinatorial maps.
# ======================================================================

Point = Tuple[Fraction, Fraction]

def _point(p):
    return (Fraction(p[0]), Fraction(p[1]))

@dataclass(frozen=True)
class SurfaceSpec:
    euler_char: int = -2
    orientable: bool = True

    def handle_topology(self):
        """(orientable, genus) of the one face that carries the topology beyond the torus."""
        if self.euler_char > -2:
            raise ValueError(f"Surface with χ = {self.euler_char} > -2 is not supported")
        if self.orientable:
            if self.euler_char % 2:
                raise ValueError(f"No closed orientable surface has odd χ = {self.euler_char}")
            return True, -self.euler_char//2
        return False, -self.euler_char

@dataclass(frozen=True)
class TorusCurve:
    """A closed polygonal curve on the torus, lifted to the plane.

    The last point is the first one translated by the homology class.
    """
    id: int
    points: Tuple[Point, ...]

    @classmethod
    def line(cls, id, start, direction):
        s = _point(start)
        return cls(id, (s, (s[0] + int(direction[0]), s[1] + int(direction[1]))))

    @property
    def homology(self):
        (x0, y0), (x1, y1) = self.points[0], self.points[-1]
        return (x1 - x0, y1 - y0)

    def segments(self):
        return list(zip(self.points[:-1], self.points[1:]))

def _segment_hits(P0, P1, Q0, Q1):
    """Intersections of segment P with every integer translate of segment Q.

    Yields (s, t, m, n) with P0 + s(P1-P0) = Q0 + (m,n) + t(Q1-Q0), or
    (None, None, m, n) when a translate is collinear with P.
    """
    u = (P1[0] - P0[0], P1[1] - P0[1])
    v = (Q1[0] - Q0[0], Q1[1] - Q0[1])
    det = v[0]*u[1] - u[0]*v[1]
    mlo = math.floor(min(P0[0], P1[0]) - max(Q0[0], Q1[0])) - 1
    mhi = math.ceil(max(P0[0], P1[0]) - min(Q0[0], Q1[0])) + 1
    nlo = math.floor(min(P0[1], P1[1]) - max(Q0[1], Q1[1])) - 1
    nhi = math.ceil(max(P0[1], P1[1]) - min(Q0[1], Q1[1])) + 1
    for m in range(mlo, mhi + 1):
        for n in range(nlo, nhi + 1):
            w = (Q0[0] + m - P0[0], Q0[1] + n - P0[1])
            if det == 0:
                if u[0]*w[1] - u[1]*w[0] == 0:
                    uu = u[0]*u[0] + u[1]*u[1]
                    a = (w[0]*u[0] + w[1]*u[1])/uu
                    b = ((w[0] + v[0])*u[0] + (w[1] + v[1])*u[1])/uu
                    if max(a, b) >= 0 and min(a, b) <= 1:
                        yield (None, None, m, n)
                continue
            s = (v[0]*w[1] - v[1]*w[0])/det
            t = (u[0]*w[1] - u[1]*w[0])/det
            if 0 <= s <= 1 and 0 <= t <= 1:
                yield (s, t, m, n)

def _check_curve(c):
    if len(c.points) < 2:
        raise ValueError(f"Torus curve {c.id} needs at least two points")
    p, q = c.homology
    if p.denominator != 1 or q.denominator != 1 or (p == 0 and q == 0):
        raise ValueError(f"Torus curve {c.id} does not close up on the torus")
    if math.gcd(int(p), int(q)) != 1:
        raise ValueError(f"Torus curve {c.id} with class ({p}, {q}) is not simple")

def torus_crossings(curves):
    """Transverse crossings of a family of torus curves.

    Raises
    ------
    ValueError
        On self-crossings, overlaps, crossings at polyline vertices and
        triple points
    """
    hits = []
    for ia, A in enumerate(curves):
        for B in curves[ia:]:
            same = A.id == B.id
            for i, (P0, P1) in enumerate(A.segments()):
                for j, (Q0, Q1) in enumerate(B.segments()):
                    if same and j < i:
                        continue
                    for s, t, m, n in _segment_hits(P0, P1, Q0, Q1):
                        if s is None:
                            if not same:
                                raise ValueError(f"Torus curves {A.id} and {B.id} overlap")
                            continue
                        if same:
                            if (i == j and (m, n) == (0, 0)) or s in (0, 1) or t in (0, 1):
                                continue
                            raise ValueError(f"Torus curve {A.id} crosses itself")
                        if s in (0, 1) or t in (0, 1):
                            raise ValueError(f"Torus curves {A.id} and {B.id} meet at a polyline vertex")
                        x = P0[0] + s*(P1[0] - P0[0])
                        y = P0[1] + s*(P1[1] - P0[1])
                        hits.append({"a": A.id, "b": B.id, "pos_a": (i, s), "pos_b": (j, t),
                                     "dir_a": (P1[0] - P0[0], P1[1] - P0[1]),
                                     "dir_b": (Q1[0] - Q0[0], Q1[1] - Q0[1]),
                                     "point": (x - math.floor(x), y - math.floor(y))})
    points = [h["point"] for h in hits]
    if len(set(points)) != len(points):
        raise ValueError("Three torus curves pass through one point")
    hits.sort(key=lambda h: (h["a"], h["pos_a"]))
    return hits

def realize_torus(curves, handle="largest", topology=(True, 1)):
    """Build the configuration of a family of torus curves.

    Parameters
    ----------
    curves : list of TorusCurve
    handle : "largest", int or ("side", curve id, side)
        Face receiving the extra topology: the face with the longest
        boundary, a face index, or the face on a given side of the first
        edge of a curve
    topology : (bool, int)
        (orientable, genus) of that face; (True, 0) keeps the torus

    Returns
    -------
    CurveConfiguration
    """
    curves = sorted(curves, key=lambda c: c.id)
    if len({c.id for c in curves}) != len(curves):
        raise ValueError("Torus curve ids must be unique")
    for c in curves:
        _check_curve(c)
    hits = torus_crossings(curves)

    crossings, half = [], {}
    for xid, h in enumerate(hits):
        vectors = {"a_out": h["dir_a"], "b_out": h["dir_b"],
                   "a_in": (-h["dir_a"][0], -h["dir_a"][1]), "b_in": (-h["dir_b"][0], -h["dir_b"][1])}
        angle = {k: np.arctan2(float(v[1]), float(v[0])) for k, v in vectors.items()}
        base = angle["a_out"]
        order = sorted(vectors, key=lambda k: (angle[k] - base) % (2*np.pi))
        for pos, name in enumerate(order):
            half[(xid, name)] = 4*xid + pos
        crossings.append(Crossing(xid, tuple(4*xid + pos for pos in range(4)),
                                  tuple(h["a"] if name[0] == "a" else h["b"] for name in order)))

    stations = {c.id: [] for c in curves}
    for xid, h in enumerate(hits):
        stations[h["a"]].append((h["pos_a"], xid, "a"))
        stations[h["b"]].append((h["pos_b"], xid, "b"))
    cycles = []
    for c in curves:
        st = sorted(stations[c.id])
        if not st:
            raise ValueError(f"Torus curve {c.id} crosses no other curve")
        edges = tuple((half[(st[j][1], st[j][2] + "_out")], half[(st[(j + 1) % len(st)][1], st[(j + 1) % len(st)][2] + "_in")])
                      for j in range(len(st)))
        cycles.append(CurveCycle(c.id, edges))

    graph = RibbonGraph(crossings, [e for c in cycles for e in c.edges])
    circuits = graph.trace_circuits([(h, 1) for h in graph.half_edges()])
    if len(crossings) - len(graph.half_edges())//2 + len(circuits) != 0:
        raise ValueError("The torus curves do not fill the torus")

    torus = CurveConfiguration(crossings, cycles, [Face((c,)) for c in circuits], True, 0)
    orientable, genus = topology
    if orientable and genus == 0:
        return torus
    if handle == "largest":
        index = max(range(len(circuits)), key=lambda i: (len(circuits[i]), -i))
    elif isinstance(handle, tuple) and handle[0] == "side":
        _, cid, side = handle
        index = torus.face_of((torus.out_half(cid, 0), side))
    else:
        index = int(handle)
    faces = list(torus.with_face(index, orientable, genus).faces)
    config = CurveConfiguration(crossings, cycles, faces, orientable)
    config.declared_euler_char = config.euler_characteristic()
    return config

def insert_bigon(curves, moving, across):
    """Replace a straight crossing of two torus curves by a zig-zag.

    The first crossing of the straight curve `moving` with the horizontal
    curve `across` becomes three crossings, adding two bigons between them.
    """
    curves = list(curves)
    byid = {c.id: c for c in curves}
    mc, ac = byid[moving], byid[across]
    if len(ac.points) != 2 or ac.homology != (1, 0):
        raise ValueError(f"Curve {across} must be a horizontal straight line")
    if len(mc.points) != 2:
        raise ValueError(f"Curve {moving} must be a straight line")
    p, q = (int(x) for x in mc.homology)
    if p == 0 or q == 0:
        raise ValueError(f"Curve {moving} must cross {across} obliquely")
    level = ac.points[0][1]
    P0 = mc.points[0]
    tau = ((level - P0[1]) % 1)/q if q > 0 else ((P0[1] - level) % 1)/(-q)
    if tau == 0:
        tau = Fraction(1, abs(q))
    eps = Fraction(1, 50*(abs(p) + abs(q))**2)
    X = (P0[0] + tau*p, P0[1] + tau*q)
    S = (X[0] - eps*p, X[1] - eps*q)
    E = (X[0] + eps*p, X[1] + eps*q)
    M1 = (S[0] + Fraction(2, 3)*eps*p, S[1] + Fraction(2, 3)*eps*q + 2*eps*q)
    M2 = (S[0] + Fraction(4, 3)*eps*p, S[1] + Fraction(4, 3)*eps*q - 2*eps*q)
    zigzag = TorusCurve(moving, (P0, S, M1, M2, E, mc.points[1]))
    return [zigzag if c.id == moving else c for c in curves]

# =====================================================================================================
# FAMILIES
# =====================================================================================================

ALPHA_START = (0, Fraction(3, 10))
BETA_START = (Fraction(1, 7), 0)

def grid_curves(k):
    """α of class (1,0) and β of class (1,k) on the torus: i(α, β) = k."""
    return [TorusCurve.line(0, ALPHA_START, (1, 0)), TorusCurve.line(1, BETA_START, (1, k))]

def grid_configuration(k, surface=None, handle_face=0):
    """β wraps k times across α, with the extra topology in one square face.

    Crossing j has slots [αE, βN, αW, βS] = [4j, 4j+1, 4j+2, 4j+3];
    α runs 4j -> 4(j+1)+2 and β runs 4j+1 -> 4(j+1)+3, and face j is
    the square [(4j,+), (βN of j+1,+), (αW of j+2,+), (βS of j+1,+)].
    """
    k = int(k)
    if k < 1:
        raise ValueError(f"grid-k needs k >= 1, got {k}")
    orientable, genus = (surface or SurfaceSpec()).handle_topology()
    if not 0 <= handle_face < k:
        raise ValueError(f"Handle face {handle_face} does not exist in grid-{k}")
    crossings = [Crossing(j, (4*j, 4*j + 1, 4*j + 2, 4*j + 3), (0, 1, 0, 1)) for j in range(k)]
    alpha = CurveCycle(0, tuple((4*j, 4*((j + 1) % k) + 2) for j in range(k)))
    beta = CurveCycle(1, tuple((4*j + 1, 4*((j + 1) % k) + 3) for j in range(k)))
    faces = []
    for j in range(k):
        circuit = ((4*j, 1), (4*((j + 1) % k) + 1, 1), (4*((j + 2) % k) + 2, 1), (4*((j + 1) % k) + 3, 1))
        if j == handle_face:
            faces.append(Face((circuit,), orientable, genus))
        else:
            faces.append(Face((circuit,)))
    config = CurveConfiguration(crossings, [alpha, beta], faces, orientable)
    config.declared_euler_char = config.euler_characteristic()
    return config

def crosscap_configuration(surface=None):
    """Two curves meeting three times whose union has a non-orientable neighborhood.

    grid-3 with the β edge from crossing 2 to crossing 0 twisted. The two
    faces are a square and a face with cross-caps.
    """
    target = surface or SurfaceSpec(-2, False)
    if target.orientable:
        raise ValueError("figure1 needs a non-orientable surface")
    if target.euler_char > -2:
        raise ValueError(f"Surface with χ = {target.euler_char} > -2 is not supported")
    crosscaps = -1 - target.euler_char
    crossings = [Crossing(j, (4*j, 4*j + 1, 4*j + 2, 4*j + 3), (0, 1, 0, 1)) for j in range(3)]
    alpha = CurveCycle(0, ((0, 6), (4, 10), (8, 2)))
    beta = CurveCycle(1, ((1, 7), (5, 11), (9, 3)))
    square = ((0, 1), (5, 1), (10, 1), (7, 1))
    capped = ((4, 1), (9, 1), (0, -1), (7, -1), (2, -1), (9, -1), (2, 1), (11, 1))
    faces = [Face((square,)), Face((capped,), False, crosscaps)]
    return CurveConfiguration(crossings, [alpha, beta], faces, False, target.euler_char)

def triple_curves(k):
    """grid-k plus δ of class (-1,3): i(α, δ) = 3 and i(β, δ) = k + 3."""
    return grid_curves(k) + [TorusCurve.line(2, (Fraction(2, 11), Fraction(1, 13)), (-1, 3))]

def projection_curves():
    """α, β = (1,6) and four parallel curves of class (1,-12).

    Curves 2 and 3 bound a thin annulus holding curve 4; curve 5 is a
    parallel copy outside the annulus. α meets each of them 12 times and
    β 18 times.
    """
    half = Fraction(1, 2)
    return [TorusCurve.line(0, ALPHA_START, (1, 0)),
            TorusCurve.line(1, BETA_START, (1, 6)),
            TorusCurve.line(2, (0, half), (1, -12)),
            TorusCurve.line(3, (Fraction(1, 1000), half), (1, -12)),
            TorusCurve.line(4, (Fraction(1, 2000), half), (1, -12)),
            TorusCurve.line(5, (Fraction(1, 24), half), (1, -12))]

# boundary curve -> side of it (relative to its direction) facing away from the annulus
PROJECTION_INSIDE = {2: -1, 3: 1}

def projection_configuration(surface=None):
    target = surface or SurfaceSpec()
    return realize_torus(projection_curves(), ("side", 2, PROJECTION_INSIDE[2]), target.handle_topology())

PATTERN = re.compile(r"(grid|triple|bigon)-(\d+)$")

def generate_family(pattern, surface=None, handle_face=0):
    """Generate a corpus configuration.

    Parameters
    ----------
    pattern : str
        grid-K, triple-K, bigon-K, genus2-i2, figure1 or projection
    surface : SurfaceSpec, optional
        Target surface; each pattern has a default
    handle_face : int
        Face of grid-K carrying the extra topology

    Returns
    -------
    CurveConfiguration

    Raises
    ------
    ValueError
        For an unknown pattern or an unsatisfiable surface
    """
    if pattern == "genus2-i2":
        return grid_configuration(2, surface or SurfaceSpec(-2, True))
    if pattern == "figure1":
        return crosscap_configuration(surface)
    if pattern == "projection":
        return projection_configuration(surface)
    m = PATTERN.match(pattern)
    if m is None:
        raise ValueError(f"Unknown pattern {pattern}")
    kind, k = m.group(1), int(m.group(2))
    if k < 1:
        raise ValueError(f"Pattern {pattern} needs k >= 1")
    if kind == "grid":
        return grid_configuration(k, surface, handle_face)
    topology = (surface or SurfaceSpec()).handle_topology()
    if kind == "triple":
        return realize_torus(triple_curves(k), "largest", topology)
    return realize_torus(insert_bigon(grid_curves(k), 1, 0), "largest", topology)
