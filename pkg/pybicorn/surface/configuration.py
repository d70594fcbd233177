from dataclasses import dataclass, replace
from typing import NamedTuple, Optional, Tuple, Union

# ======================================================================
# Curve configurations on a closed surface, stored as 4-valent ribbon
# graphs with explicit face topology.
#
# -- Half-edges and crossings --
# Every crossing owns 4 half-edge ids, listed counterclockwise in its
# local frame ("slots"). Opposite slots (0,2) and (1,3) carry the same
# curve. A curve edge joins two half-edges; the edge is "twisted" when
# the frames at its two ends disagree (only possible on a non-orientable
# surface or across a non-orientable face).
#
# -- Flags (edge sides) --
# A flag (h, s) is the side of the edge leaving along h that lies toward
# the counterclockwise-next slot (s = +1) or the clockwise-next slot
# (s = -1). A face boundary circuit is the orbit of a flag under the face
# permutation step(). Each edge has two sides; a side is seen once from
# each end, and reverse() maps one view to the other.
#
# -- Loops --
# A curve with no crossings has no half-edges. Its sides are written
# LoopSide(curve, side, direction): side is +1/-1 for the left/right of a
# two-sided curve and 0 for a one-sided curve, direction is the walking
# direction along the curve that keeps the face on the left (in the
# face's orientation).
#
# Twists are not stored: they follow from consecutive flags of the face
# circuits and must agree on every edge.
# ======================================================================

class ConfigurationError(ValueError):
    """A custom exception used to report a broken ribbon-graph structure"""

class LoopSide(NamedTuple):
    curve: int
    side: int
    direction: int = 1

Flag = Tuple[int, int]
Side = Union[Flag, LoopSide]

def is_loop_side(x):
    return isinstance(x, LoopSide)

@dataclass(frozen=True)
class Crossing:
    id: int
    slots: Tuple[int, int, int, int]
    curves: Tuple[int, int, int, int]

    def curve_pair(self):
        return (self.curves[0], self.curves[1])

@dataclass(frozen=True)
class CurveCycle:
    id: int
    edges: Tuple[Tuple[int, int], ...] = ()

    @property
    def is_loop(self):
        return len(self.edges) == 0

    def __len__(self):
        return len(self.edges)

@dataclass(frozen=True)
class FaceTopology:
    boundary_circuits: int
    orientable: bool = True
    genus: int = 0

    @property
    def euler_char(self):
        if self.orientable:
            return 2 - 2*self.genus - self.boundary_circuits
        return 2 - self.genus - self.boundary_circuits

    @property
    def is_disk(self):
        return self.orientable and self.genus == 0 and self.boundary_circuits == 1

    @property
    def is_moebius(self):
        return (not self.orientable) and self.genus == 1 and self.boundary_circuits == 1

@dataclass(frozen=True)
class Face:
    circuits: Tuple[Tuple[Side, ...], ...]
    orientable: bool = True
    genus: int = 0

    @property
    def topology(self):
        return FaceTopology(len(self.circuits), self.orientable, self.genus)

    @property
    def euler_char(self):
        return self.topology.euler_char

class RibbonGraph:
    """The 4-valent ribbon graph of a configuration.

    Parameters
    ----------
    crossings : iterable of Crossing
    edges : iterable of (int, int)
        Half-edge pairs joined by a curve edge
    twisted : dict, optional
        Maps min(h, mate(h)) to True for twisted edges
    """

    def __init__(self, crossings, edges, twisted=None):
        self.crossings = {}
        self._where = {}
        for c in crossings:
            if c.id in self.crossings:
                raise ConfigurationError(f"Duplicate crossing id {c.id}")
            if len(c.slots) != 4 or len(c.curves) != 4:
                raise ConfigurationError(f"Crossing {c.id} must have exactly 4 slots")
            self.crossings[c.id] = c
            for pos, h in enumerate(c.slots):
                if h in self._where:
                    raise ConfigurationError(f"Half-edge {h} appears at two slots")
                self._where[h] = (c.id, pos)

        twisted = {} if twisted is None else twisted
        self._mate = {}
        self._twisted = {}
        for a, b in edges:
            for h in (a, b):
                if h not in self._where:
                    raise ConfigurationError(f"Edge ({a}, {b}) uses unknown half-edge {h}")
                if h in self._mate:
                    raise ConfigurationError(f"Half-edge {h} is used by two edges")
            if a == b:
                raise ConfigurationError(f"Edge ({a}, {b}) joins a half-edge to itself")
            self._mate[a] = b
            self._mate[b] = a
            tw = bool(twisted.get(min(a, b), False))
            self._twisted[a] = tw
            self._twisted[b] = tw

        missing = sorted(set(self._where) - set(self._mate))
        if missing:
            raise ConfigurationError(f"Half-edges {missing} belong to no curve edge")

    def half_edges(self):
        return sorted(self._where)

    def crossing_of(self, h):
        return self._where[h][0]

    def position(self, h):
        return self._where[h][1]

    def curve_of(self, h):
        cid, pos = self._where[h]
        return self.crossings[cid].curves[pos]

    def _rotate(self, h, k):
        cid, pos = self._where[h]
        return self.crossings[cid].slots[(pos + k) % 4]

    def next(self, h):
        return self._rotate(h, 1)

    def prev(self, h):
        return self._rotate(h, -1)

    def opposite(self, h):
        return self._rotate(h, 2)

    def mate(self, h):
        return self._mate[h]

    def is_twisted(self, h):
        return self._twisted[h]

    def twists(self):
        return {min(h, m): self._twisted[h] for h, m in self._mate.items() if self._twisted[h]}

    def step(self, flag):
        """Face permutation: the next flag along the face boundary."""
        h, s = flag
        m = self._mate[h]
        s2 = s if self._twisted[h] else -s
        if s2 > 0:
            return (self.next(m), -1)
        return (self.prev(m), 1)

    def reverse(self, flag):
        """The same edge side, seen from the other end of the edge."""
        h, s = flag
        return (self._mate[h], s if self._twisted[h] else -s)

    def side_key(self, flag):
        return min(tuple(flag), self.reverse(flag))

    def trace_circuits(self, start_flags=None):
        """Face boundary circuits, traced from the flags in the given order.

        Each circuit starts at the first of its flags met in start_flags;
        flags already seen (or whose reverse was seen) are skipped.
        """
        if start_flags is None:
            start_flags = [(h, s) for h in self.half_edges() for s in (1, -1)]
        visited = set()
        circuits = []
        for f in start_flags:
            f = tuple(f)
            if f in visited:
                continue
            circuit = []
            g = f
            while True:
                circuit.append(g)
                visited.add(g)
                visited.add(self.reverse(g))
                g = self.step(g)
                if g == f:
                    break
                if g in visited:
                    raise ConfigurationError(f"Face walk from {f} does not close up")
            circuits.append(tuple(circuit))
        return circuits

def reverse_circuit(graph, circuit):
    """The circuit walked the other way round (the face then lies on the right)."""
    rev = [graph.reverse(f) for f in reversed(circuit)]
    k = rev.index(min(rev))
    return tuple(rev[k:] + rev[:k])

class CurveConfiguration:
    """A finite set of simple closed curves on a closed surface.

    Parameters
    ----------
    crossings : iterable of Crossing
    curves : iterable of CurveCycle
    faces : iterable of Face
    orientable : bool
        Orientability of the ambient surface
    euler_char : int, optional
        Declared Euler characteristic (checked by validate, not here)

    Raises
    ------
    ConfigurationError
        If the ribbon-graph structure is broken: unknown half-edges,
        non-transverse crossings, curves that do not close up, twists that
        disagree, or edge sides not covered exactly once by the faces.
    """

    def __init__(self, crossings, curves, faces, orientable=True, euler_char=None):
        self.crossings = tuple(sorted(crossings, key=lambda c: c.id))
        self.curves = tuple(sorted(curves, key=lambda c: c.id))
        self.faces = tuple(faces)
        self.orientable = bool(orientable)
        self.declared_euler_char = euler_char
        self._memo = {}

        self._curve_index = {}
        for c in self.curves:
            if c.id in self._curve_index:
                raise ConfigurationError(f"Duplicate curve id {c.id}")
            self._curve_index[c.id] = c
        self._check_crossings()

        edges = [e for c in self.curves for e in c.edges]
        untwisted = RibbonGraph(self.crossings, edges)
        self.graph = RibbonGraph(self.crossings, edges, self._derive_twists(untwisted))
        self._check_curves()
        self._check_faces()

    # =====================================================================================================
    # STRUCTURE CHECKS (PRIVATE)
    # =====================================================================================================

    def _check_crossings(self):
        for c in self.crossings:
            if len(c.curves) != 4 or c.curves[0] != c.curves[2] or c.curves[1] != c.curves[3]:
                raise ConfigurationError(f"Crossing {c.id}: opposite slots must carry the same curve")
            if c.curves[0] == c.curves[1]:
                raise ConfigurationError(f"Crossing {c.id} is a self-crossing of curve {c.curves[0]}")
            for cid in c.curves:
                if cid not in self._curve_index:
                    raise ConfigurationError(f"Crossing {c.id} refers to unknown curve {cid}")

    def _derive_twists(self, graph):
        twists = {}
        for fi, face in enumerate(self.faces):
            for circuit in face.circuits:
                flags = [x for x in circuit if not is_loop_side(x)]
                if flags and len(flags) != len(circuit):
                    raise ConfigurationError(f"Face {fi}: a loop side must form a circuit on its own")
                for a, b in zip(flags, flags[1:] + flags[:1]):
                    h, s = a
                    g, t = b
                    if h not in graph._where or g not in graph._where:
                        raise ConfigurationError(f"Face {fi}: unknown half-edge in flags {a}, {b}")
                    m = graph.mate(h)
                    if g == graph.next(m) and t == -1:
                        s2 = 1
                    elif g == graph.prev(m) and t == 1:
                        s2 = -1
                    else:
                        raise ConfigurationError(f"Face {fi}: flags {tuple(a)} and {tuple(b)} are not consecutive along a face")
                    tw = (s2 == s)
                    key = min(h, m)
                    if twists.setdefault(key, tw) != tw:
                        raise ConfigurationError(f"Edge at half-edge {key} is both twisted and untwisted")
        return twists

    def _check_curves(self):
        self._edge_of = {}
        for c in self.curves:
            n = len(c.edges)
            for j, (o, i) in enumerate(c.edges):
                for h in (o, i):
                    if self.graph.curve_of(h) != c.id:
                        raise ConfigurationError(f"Curve {c.id}: half-edge {h} sits on a slot of another curve")
                nxt = c.edges[(j + 1) % n][0]
                if self.graph.opposite(i) != nxt:
                    raise ConfigurationError(f"Curve {c.id}: edge {j} does not continue straight through crossing {self.graph.crossing_of(i)}")
                self._edge_of[o] = (c.id, j)
                self._edge_of[i] = (c.id, j)
            stations = [self.graph.crossing_of(o) for o, _ in c.edges]
            if len(set(stations)) != len(stations):
                raise ConfigurationError(f"Curve {c.id} visits a crossing twice")

    def _check_faces(self):
        self._face_of = {}
        for fi, face in enumerate(self.faces):
            if face.genus < 0 or (not face.orientable and face.genus < 1):
                raise ConfigurationError(f"Face {fi}: genus {face.genus} is impossible")
            if not face.circuits:
                raise ConfigurationError(f"Face {fi} has no boundary circuit")
            for circuit in face.circuits:
                if not circuit:
                    raise ConfigurationError(f"Face {fi} has an empty circuit")
                for x in circuit:
                    key = self._side_key(x, fi)
                    if key in self._face_of:
                        raise ConfigurationError(f"Edge side {key} lies on two face circuits")
                    self._face_of[key] = fi

        expected = set()
        for h in self.graph.half_edges():
            expected.add(self.graph.side_key((h, 1)))
            expected.add(self.graph.side_key((h, -1)))
        for c in self.curves:
            if c.is_loop:
                sides = {k[2] for k in self._face_of if k[0] == "loop" and k[1] == c.id}
                if sides == {0}:
                    expected.add(("loop", c.id, 0))
                else:
                    expected.add(("loop", c.id, 1))
                    expected.add(("loop", c.id, -1))
        missing = expected - set(self._face_of)
        extra = set(self._face_of) - expected
        if missing:
            raise ConfigurationError(f"Edge sides {sorted(missing, key=repr)} lie on no face")
        if extra:
            raise ConfigurationError(f"Face circuits list unexpected sides {sorted(extra, key=repr)}")

    def _side_key(self, x, fi):
        if is_loop_side(x):
            if x.curve not in self._curve_index or not self._curve_index[x.curve].is_loop:
                raise ConfigurationError(f"Face {fi}: loop side of curve {x.curve}, which is not a crossing-free curve")
            if x.side not in (-1, 0, 1) or x.direction not in (-1, 1):
                raise ConfigurationError(f"Face {fi}: malformed loop side {tuple(x)}")
            return ("loop", x.curve, x.side)
        h, s = x
        if s not in (-1, 1) or h not in self.graph._where:
            raise ConfigurationError(f"Face {fi}: malformed flag {tuple(x)}")
        return self.graph.side_key((h, s))

    # =====================================================================================================
    # QUERIES
    # =====================================================================================================

    def __eq__(self, other):
        if not isinstance(other, CurveConfiguration):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.crossings, self.curves, self.faces, self.orientable, self.declared_euler_char)

    def __repr__(self):
        return "CurveConfiguration(V=%d, E=%d, faces=%d, curves=%s)" %(
            len(self.crossings), self.n_edges, len(self.faces), self.curve_ids)

    @property
    def curve_ids(self):
        return [c.id for c in self.curves]

    @property
    def n_edges(self):
        return sum(len(c.edges) for c in self.curves)

    def has_curve(self, cid):
        return cid in self._curve_index

    def curve(self, cid):
        try:
            return self._curve_index[cid]
        except KeyError:
            raise ValueError(f"Unknown curve id {cid}") from None

    def crossing(self, xid):
        return self.graph.crossings[xid]

    def stations(self, cid):
        """Crossing ids met along a curve, in its own order."""
        return [self.graph.crossing_of(o) for o, _ in self.curve(cid).edges]

    def station_index(self, cid, xid):
        key = ("stations", cid)
        if key not in self._memo:
            self._memo[key] = {x: j for j, x in enumerate(self.stations(cid))}
        try:
            return self._memo[key][xid]
        except KeyError:
            raise ValueError(f"Crossing {xid} is not on curve {cid}") from None

    def out_half(self, cid, j):
        return self.curve(cid).edges[j][0]

    def in_half(self, cid, j):
        """Half-edge at which the curve arrives at station j."""
        edges = self.curve(cid).edges
        return edges[(j - 1) % len(edges)][1]

    def edge_of(self, h):
        """(curve id, edge index) of the edge containing half-edge h."""
        return self._edge_of[h]

    def common_crossings(self, c1, c2):
        self.curve(c1), self.curve(c2)
        pair = {c1, c2}
        return [c.id for c in self.crossings if set(c.curve_pair()) == pair]

    def intersection(self, c1, c2):
        return len(self.common_crossings(c1, c2))

    def face_of(self, x):
        """Index of the face whose boundary contains the given flag or loop side."""
        if is_loop_side(x):
            return self._face_of[("loop", x.curve, x.side)]
        return self._face_of[self.graph.side_key(x)]

    def is_one_sided_loop(self, cid):
        return ("loop", cid, 0) in self._face_of

    def euler_characteristic(self):
        return euler_characteristic(self)

    def max_curve_id(self):
        return max(self._curve_index) if self._curve_index else -1

    def with_face(self, index, orientable=None, genus=None):
        """Copy of the configuration with one face's topology relabeled."""
        faces = list(self.faces)
        f = faces[index]
        faces[index] = replace(f,
                               orientable=f.orientable if orientable is None else orientable,
                               genus=f.genus if genus is None else genus)
        return CurveConfiguration(self.crossings, self.curves, faces, self.orientable, self.declared_euler_char)

def euler_characteristic(config):
    """χ(F) = V - E + sum of the face Euler characteristics

    Parameters
    ----------
    config : CurveConfiguration

    Returns
    -------
    chi : int
    """
    return len(config.crossings) - config.n_edges + sum(f.euler_char for f in config.faces)
