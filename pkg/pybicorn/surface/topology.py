from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Tuple, Union
import numpy as np
import scipy.sparse as sps
from scipy.sparse.csgraph import connected_components

from .configuration import euler_characteristic, is_loop_side
from .overlay import extract_subconfiguration
from .reduction import is_minimal_position
from .unionfind import ParityUnionFind

@dataclass(frozen=True)
class EssentialCurveWitness:
    """An essential simple closed curve disjoint from every curve of a configuration.

    kind is one of
      face-boundary : a curve parallel to boundary circuit `circuit` of face `face`
      circuit-band  : a curve in a planar face enclosing the circuits listed in `circuit`
      handle-core   : a non-separating curve inside an orientable face of positive genus
      möbius-core   : the core of a cross-cap of a non-orientable face
    """
    face: int
    circuit: Union[None, int, Tuple[int, ...]]
    kind: str

    def to_dict(self):
        circuit = list(self.circuit) if isinstance(self.circuit, tuple) else self.circuit
        return {"face": self.face, "circuit": circuit, "kind": self.kind}

@dataclass
class ValidationReport:
    euler_char: int
    orientable: bool
    problems: List[str] = field(default_factory=list)

    @property
    def valid(self):
        return not self.problems

    def __str__(self):
        if self.valid:
            return "valid, χ = %d" %self.euler_char
        return "invalid: " + "; ".join(self.problems)

    def to_dict(self):
        return {"valid": self.valid, "euler_char": self.euler_char,
                "orientable": self.orientable, "problems": list(self.problems)}

def surface_orientable(config):
    """Orientability of the surface, read off the twists and the face labels."""
    g = config.graph
    uf = ParityUnionFind()
    ok = True
    for h in g.half_edges():
        m = g.mate(h)
        if h < m:
            ok &= uf.union(("x", g.crossing_of(h)), ("x", g.crossing_of(m)), 1 if g.is_twisted(h) else 0)
    for fi, face in enumerate(config.faces):
        if not face.orientable:
            return False
        fa = ("face", fi)
        for circuit in face.circuits:
            for x in circuit:
                if is_loop_side(x):
                    if x.side == 0:
                        return False
                    ok &= uf.union(fa, ("loop", x.curve), 0 if x.side*x.direction == 1 else 1)
                else:
                    ok &= uf.union(fa, ("x", g.crossing_of(x[0])), 0 if x[1] > 0 else 1)
    return bool(ok)

def ribbon_orientable(config):
    """Orientability of a regular neighborhood of the union of the curves."""
    g = config.graph
    uf = ParityUnionFind()
    for c in config.curves:
        if c.is_loop and config.is_one_sided_loop(c.id):
            return False
    for h in g.half_edges():
        m = g.mate(h)
        if h < m and not uf.union(g.crossing_of(h), g.crossing_of(m), 1 if g.is_twisted(h) else 0):
            return False
    return True

def graph_components(config):
    """Connected components of the union of the curves.

    Returns
    -------
    label : dict
        ("x", crossing id) or ("loop", curve id) -> component label
    chi : np.ndarray
        Euler characteristic (V - E) of each component
    """
    g = config.graph
    nodes = [("x", c.id) for c in config.crossings] + [("loop", c.id) for c in config.curves if c.is_loop]
    index = {a: i for i, a in enumerate(nodes)}
    rows, cols = [], []
    for h in g.half_edges():
        m = g.mate(h)
        if h < m:
            rows.append(index[("x", g.crossing_of(h))])
            cols.append(index[("x", g.crossing_of(m))])
    n = len(nodes)
    adjacency = sps.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    ncomp, labels = connected_components(adjacency, directed=False)
    chi = np.zeros(ncomp, dtype=int)
    for a, i in index.items():
        if a[0] == "x":
            chi[labels[i]] += 1
    for r in rows:
        chi[labels[r]] -= 1
    return {a: int(labels[i]) for a, i in index.items()}, chi

def exterior_essential_witness(config):
    """An essential curve in the complement of the configuration, if any.

    Non-disk faces are examined in order. A face of positive genus holds an
    essential core curve. In a planar face, a boundary circuit is used
    unless it cuts off a disk or a Möbius band; if every circuit does, a
    curve enclosing several circuits at once is tried.

    Parameters
    ----------
    config : CurveConfiguration

    Returns
    -------
    EssentialCurveWitness or None
        None iff every face is a disk, i.e. the curves fill the surface
    """
    chi_F = euler_characteristic(config)
    labels, comp_chi = graph_components(config)
    g = config.graph

    def component(circuit):
        x = circuit[0]
        if is_loop_side(x):
            return labels[("loop", x.curve)]
        return labels[("x", g.crossing_of(x[0]))]

    for fi, face in enumerate(config.faces):
        if face.topology.is_disk:
            continue
        if not face.orientable:
            return EssentialCurveWitness(fi, None, "möbius-core")
        if face.genus >= 1:
            return EssentialCurveWitness(fi, None, "handle-core")

        # planar face with at least two boundary circuits
        uf = ParityUnionFind()
        for fj, other in enumerate(config.faces):
            if fj == fi:
                continue
            for circuit in other.circuits:
                uf.union(("face", fj), ("comp", component(circuit)))
        groups = uf.classes()
        side_chi = []
        for ci, circuit in enumerate(face.circuits):
            root = uf.find(("comp", component(circuit)))[0]
            others = [cj for cj, c in enumerate(face.circuits) if cj != ci and uf.find(("comp", component(c)))[0] == root]
            if others:
                return EssentialCurveWitness(fi, ci, "face-boundary")
            chi_K = 0
            for a in groups.get(root, [("comp", component(circuit))]):
                if a[0] == "comp":
                    chi_K += int(comp_chi[a[1]])
                else:
                    chi_K += config.faces[a[1]].euler_char
            side_chi.append(chi_K)
            if chi_K not in (0, 1) and chi_F - chi_K not in (0, 1):
                return EssentialCurveWitness(fi, ci, "face-boundary")

        b = len(face.circuits)
        for size in range(2, b - 1):
            for subset in combinations(range(b), size):
                inner = 1 - size + sum(side_chi[i] for i in subset)
                if inner <= -1 and chi_F - inner <= -1:
                    return EssentialCurveWitness(fi, subset, "circuit-band")
    return None

def validate(config):
    """Check the standing hypotheses on a configuration.

    Every problem found is listed in the report; nothing is raised.

    Parameters
    ----------
    config : CurveConfiguration

    Returns
    -------
    ValidationReport
    """
    chi = euler_characteristic(config)
    try:
        orientable = surface_orientable(config)
    except Exception as e:
        return ValidationReport(chi, config.orientable, [f"orientability check failed: {e}"])
    report = ValidationReport(chi, orientable)

    if config.declared_euler_char is not None and config.declared_euler_char != chi:
        report.problems.append(f"declared euler_char {config.declared_euler_char} differs from χ(F) = {chi}")
    if chi > -2:
        report.problems.append(f"χ(F) = {chi} > -2 violation")
    if config.orientable and not orientable:
        report.problems.append("surface declared orientable but its faces and twists are not")
    if not config.orientable and orientable:
        report.problems.append("surface declared non-orientable but its faces and twists are orientable")

    ids = config.curve_ids
    for a, b in combinations(ids, 2):
        if config.intersection(a, b) == 0:
            continue
        try:
            minimal, bigon = is_minimal_position(config, a, b)
        except (ValueError, RuntimeError) as e:
            report.problems.append(f"curves {a} and {b}: overlay failed ({e})")
            continue
        if not minimal:
            report.problems.append("curves %d and %d: not minimal position (bigon at crossings %d, %d)"
                                   %(a, b, bigon.corners[0], bigon.corners[1]))

    for c in ids:
        try:
            alone = extract_subconfiguration(config, [c])
        except (ValueError, RuntimeError) as e:
            report.problems.append(f"curve {c}: overlay failed ({e})")
            continue
        if alone.is_one_sided_loop(c):
            continue
        for face in alone.faces:
            top = face.topology
            if top.is_disk:
                report.problems.append(f"curve {c} is inessential: it bounds a disk")
            elif top.is_moebius:
                report.problems.append(f"curve {c} is inessential: it bounds a Möbius band")
    return report
