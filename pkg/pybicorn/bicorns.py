from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .surface.arcs import ArcSpan, arc_crossings, arc_length, contains, interior, span, sub_arc
from .surface.cycles import BicornCurve, check_bicorn
from .surface.reduction import intersection_number

# =====================================================================================================
# Bicorn curves of two curves α, β in minimal position.
#
# A bicorn is stored as BicornCurve(alpha_arc, beta_arc). The whole curve α
# is (FULL, EMPTY) and β is (EMPTY, FULL). Γ_α(β) is the cycle of the
# α ∩ β crossings in the order in which β meets them.
# =====================================================================================================

def alpha_whole(alpha, beta):
    return BicornCurve(ArcSpan.full(alpha), ArcSpan.empty(beta))

def beta_whole(alpha, beta):
    return BicornCurve(ArcSpan.empty(alpha), ArcSpan.full(beta))

def gamma_vertices(config, alpha, beta):
    """Vertices of Γ_α(β): the crossings of α and β in β's order."""
    common = set(config.common_crossings(alpha, beta))
    return [x for x in config.stations(beta) if x in common]

def _is_simple(config, a, b, common):
    return not (set(interior(config, a)) & set(interior(config, b)) & common)

def _distinct(alpha, beta, config):
    config.curve(alpha), config.curve(beta)
    if alpha == beta:
        raise ValueError(f"Bicorns need two distinct curves, got {alpha} twice")

def enumerate_bicorns(config, alpha, beta, log=None):
    """Every (α, β)-bicorn curve, α and β included.

    Parameters
    ----------
    config : CurveConfiguration
    alpha, beta : int
        Curve ids, assumed in minimal position
    log : callable, optional
        Receives a diagnostic when α and β are disjoint

    Returns
    -------
    list of BicornCurve
        α first, then the proper bicorns sorted by their arcs, then β
    """
    _distinct(alpha, beta, config)
    common = set(config.common_crossings(alpha, beta))
    if not common and log is not None:
        log(f"curves {alpha} and {beta} are disjoint: their only bicorns are the curves themselves")
    found = {}
    for p, q in combinations(sorted(common), 2):
        for a in (span(config, alpha, p, q), span(config, alpha, q, p)):
            for b in (span(config, beta, p, q), span(config, beta, q, p)):
                if _is_simple(config, a, b, common):
                    bc = BicornCurve(a, b)
                    found.setdefault(bc.key(), bc)
    proper = [found[k] for k in sorted(found)]
    return [alpha_whole(alpha, beta)] + proper + [beta_whole(alpha, beta)]

# =====================================================================================================
# THIRD REDUCTION
# =====================================================================================================

@dataclass
class ThirdReductionResult:
    bicorn: BicornCurve
    intersection: int                      # i(β, bicorn)
    candidates: List[Tuple[BicornCurve, int, int]] = field(default_factory=list)   # (γ, i(α,γ), i(β,γ))

    def to_dict(self):
        return {"bicorn": self.bicorn.to_dict(),
                "intersection": self.intersection,
                "candidates": [{"bicorn": g.to_dict(), "i_alpha": ia, "i_beta": ib}
                               for g, ia, ib in self.candidates]}

def third_reduction(config, alpha, beta):
    """A bicorn meeting α at most twice and β at most i(α, β)/3 times.

    Two consecutive edges e1, e2 of Γ_α(β) give the β-arcs e1, e2 and
    e1 ∪ e2; each is closed up by the arc of α that avoids the third
    vertex of e1 ∪ e2. The candidate with the fewest crossings with β
    wins, ties going to the smallest corners.

    Returns
    -------
    ThirdReductionResult

    Raises
    ------
    ValueError
        If i(α, β) < 3
    RuntimeError
        If the chosen curve misses the bounds
    """
    _distinct(alpha, beta, config)
    V = gamma_vertices(config, alpha, beta)
    n = len(V)
    if n < 3:
        raise ValueError(f"third_reduction needs i(α, β) >= 3, got {n}")
    j = min(range(n), key=lambda j: V[j])
    v0, v1, v2 = V[j], V[(j + 1) % n], V[(j + 2) % n]
    pieces = [((v0, v1), v2), ((v1, v2), v0), ((v0, v2), v1)]
    candidates = []
    for (x, y), avoid in pieces:
        b = span(config, beta, x, y)
        a = next(a for a in (span(config, alpha, x, y), span(config, alpha, y, x))
                 if avoid not in interior(config, a))
        g = BicornCurve(a, b)
        candidates.append((g, intersection_number(config, alpha, g), intersection_number(config, beta, g)))
    best = min(candidates, key=lambda c: (c[2], c[0].corners))
    g, ia, ib = best
    if ia > 2 or 3*ib > n:
        raise RuntimeError(f"third_reduction: {g} has i(α,γ) = {ia}, i(β,γ) = {ib} for i(α,β) = {n}")
    return ThirdReductionResult(g, ib, candidates)

# =====================================================================================================
# BICORN SEQUENCES
# =====================================================================================================

@dataclass
class BicornSequence:
    alpha: int
    beta: int
    items: List[BicornCurve]
    witnesses: List[Tuple[ArcSpan, ...]] = field(default_factory=list)
    reduced_beta: List[int] = field(default_factory=list)
    reduced_alpha: Optional[List[int]] = None
    anchor: int = 0
    diagnostics: List[str] = field(default_factory=list)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def index(self, bicorn):
        return [b.key() for b in self.items].index(bicorn.key())

    def to_dict(self):
        d = {"host": [self.alpha, self.beta],
             "sequence": [b.to_dict() for b in self.items],
             "witnesses": [[a.to_list() for a in w] for w in self.witnesses],
             "reduced_beta": list(self.reduced_beta),
             "anchor": self.anchor,
             "diagnostics": list(self.diagnostics)}
        if self.reduced_alpha is not None:
            d["reduced_alpha"] = list(self.reduced_alpha)
        return d

def shared_arc_witness(x, y):
    """The arcs forming γ_x ∩ γ_y for consecutive items of a sequence."""
    return tuple(a for a in (y.alpha_arc, x.beta_arc) if not a.is_empty)

def _grow_steps(config, p, q, a, b):
    """Grow the q-arc b to the nearest vertex of Γ_p(q) inside a, until a holds none.

    Returns the list of (a, b) pairs produced after the starting one.
    """
    V = gamma_vertices(config, p, q)
    m = len(V)
    where = {x: i for i, x in enumerate(V)}
    steps = []
    while True:
        inside = set(interior(config, a)) & set(V)
        if not inside:
            return steps
        s, t = b.start, b.end
        choice = None
        for k in range(1, m):
            ahead, behind = V[(where[t] + k) % m], V[(where[s] - k) % m]
            options = [(v, d) for v, d in ((ahead, 1), (behind, -1)) if v in inside]
            if options:
                choice = min(options, key=lambda o: (o[0], -o[1]))
                break
        if choice is None:
            raise RuntimeError(f"No vertex of Γ_{p}({q}) found inside {a}")
        v, d = choice
        if d == 1:
            b, a = span(config, q, s, v), sub_arc(config, a, s, v)
        else:
            b, a = span(config, q, v, t), sub_arc(config, a, v, t)
        steps.append((a, b))

def _starting_bicorn(config, alpha, beta):
    V = gamma_vertices(config, alpha, beta)
    n = len(V)
    j = min(range(n), key=lambda j: (min(V[j], V[(j + 1) % n]), max(V[j], V[(j + 1) % n])))
    s, t = V[j], V[(j + 1) % n]
    near = {V[(j - 1) % n], V[(j + 2) % n]}
    options = [a for a in (span(config, alpha, s, t), span(config, alpha, t, s))
               if near & set(interior(config, a))]
    a = min(options, key=lambda a: arc_length(config, a))
    return BicornCurve(a, span(config, beta, s, t))

def _record_progress(seq, curve, steps, strict, log):
    """Check that i(curve, ·) drops by at least one along `steps`, a list of (index, value)."""
    for (j, u), (i, v) in zip(steps[:-1], steps[1:]):
        if v > u - 1:
            msg = "bicorn sequence %d->%d: i(%d, γ_%d) = %d does not drop below i(%d, γ_%d) = %d" %(
                seq.alpha, seq.beta, curve, i, v, curve, j, u)
            if strict:
                raise RuntimeError(msg)
            seq.diagnostics.append(msg)
            if log is not None:
                log(msg)

def _assemble(config, alpha, beta, items, anchor=0, both=False, strict=False, log=None, check=True):
    seq = BicornSequence(alpha, beta, items, anchor=anchor)
    seq.witnesses = [shared_arc_witness(x, y) for x, y in zip(items[:-1], items[1:])]
    seq.reduced_beta = [intersection_number(config, beta, g) for g in items]
    if both:
        seq.reduced_alpha = [intersection_number(config, alpha, g) for g in items]
    if check:
        indexed = list(enumerate(seq.reduced_beta))
        _record_progress(seq, beta, indexed[anchor:], strict, log)
        if both:
            _record_progress(seq, alpha, list(enumerate(seq.reduced_alpha))[anchor::-1], strict, log)
    return seq

def bicorn_sequence(config, alpha, beta, strict=False, log=None):
    """An (α, β)-bicorn sequence from α to β.

    The α-arcs shrink and the β-arcs grow along the sequence, and
    consecutive items meet at most once. The drop of i(β, ·) at every step
    is checked on the reduced intersection numbers; a failure is recorded
    in `diagnostics` (or raised when `strict`).

    Parameters
    ----------
    config : CurveConfiguration
    alpha, beta : int
    strict : bool
        Raise RuntimeError instead of recording a diagnostic
    log : callable, optional

    Returns
    -------
    BicornSequence
    """
    _distinct(alpha, beta, config)
    A, B = alpha_whole(alpha, beta), beta_whole(alpha, beta)
    V = gamma_vertices(config, alpha, beta)
    n = len(V)
    if n <= 1:
        seq = _assemble(config, alpha, beta, [A, B], check=False)
        msg = f"curves {alpha} and {beta} meet {n} time(s): the sequence is the pair itself"
        seq.diagnostics.append(msg)
        if log is not None:
            log(msg)
        return seq
    if n == 2:
        p, q = V
        candidates = sorted((BicornCurve(a, b)
                             for a in (span(config, alpha, p, q), span(config, alpha, q, p))
                             for b in (span(config, beta, p, q), span(config, beta, q, p))),
                            key=lambda g: g.key())
        for g in candidates:
            if intersection_number(config, alpha, g) <= 1 and intersection_number(config, beta, g) <= 1:
                return _assemble(config, alpha, beta, [A, g, B], strict=strict, log=log)
        raise RuntimeError(f"No bicorn of curves {alpha}, {beta} meets both at most once")

    start = _starting_bicorn(config, alpha, beta)
    steps = _grow_steps(config, alpha, beta, start.alpha_arc, start.beta_arc)
    items = [A, start] + [BicornCurve(a, b) for a, b in steps] + [B]
    return _assemble(config, alpha, beta, items, strict=strict, log=log)

def extend_to_sequence(config, bicorn, strict=False, log=None):
    """An (α, β)-bicorn sequence passing through a given bicorn.

    From the bicorn, the β-arc is grown toward β and, with the roles of
    the curves swapped, the α-arc is grown toward α.

    Raises
    ------
    ValueError
        If the bicorn is not embedded in the configuration
    """
    check_bicorn(config, bicorn)
    alpha, beta = bicorn.hosts
    if bicorn.whole_curve is not None:
        return bicorn_sequence(config, alpha, beta, strict, log)
    forward = _grow_steps(config, alpha, beta, bicorn.alpha_arc, bicorn.beta_arc)
    backward = _grow_steps(config, beta, alpha, bicorn.beta_arc, bicorn.alpha_arc)
    before = [BicornCurve(a, b) for b, a in reversed(backward)]
    items = [alpha_whole(alpha, beta)] + before + [bicorn] + [BicornCurve(a, b) for a, b in forward] + [beta_whole(alpha, beta)]
    return _assemble(config, alpha, beta, items, anchor=len(before) + 1, both=True, strict=strict, log=log)

def sequence_problems(config, seq, adjacency=True):
    """Violations of nesting and adjacency in a bicorn sequence (empty if none)."""
    problems = []
    items = seq.items
    if items[0].key() != ("curve", seq.alpha) or items[-1].key() != ("curve", seq.beta):
        problems.append("sequence does not run from α to β")
    for i, (x, y) in enumerate(zip(items[:-1], items[1:])):
        if not contains(config, x.alpha_arc, y.alpha_arc):
            problems.append(f"α-arc of item {i + 1} is not inside the α-arc of item {i}")
        if not contains(config, y.beta_arc, x.beta_arc):
            problems.append(f"β-arc of item {i} is not inside the β-arc of item {i + 1}")
        if adjacency:
            k = intersection_number(config, x, y)
            if k > 1:
                problems.append(f"items {i} and {i + 1} meet {k} times")
    return problems

def sandwiched(config, seq, j, i, k):
    """Whether item i is a (γ_j, γ_k)-bicorn: its α-arc lies in a_j and its β-arc in b_k."""
    if not j <= i <= k:
        raise ValueError(f"Need j <= i <= k, got {j}, {i}, {k}")
    x, y, z = seq[j], seq[i], seq[k]
    return contains(config, x.alpha_arc, y.alpha_arc) and contains(config, z.beta_arc, y.beta_arc)

# =====================================================================================================
# SLIM TRIPLES
# =====================================================================================================

def _delta_labels(config, bicorn, delta):
    """Γ_γ(δ): δ's crossings with γ, labeled by the arc of γ they lie on."""
    a, b = bicorn.alpha_arc, bicorn.beta_arc
    on_a = set(interior(config, a)) & set(config.common_crossings(a.curve, delta))
    on_b = set(interior(config, b)) & set(config.common_crossings(b.curve, delta))
    labels = []
    for x in config.stations(delta):
        if x in on_a:
            labels.append((x, "a"))
        elif x in on_b:
            labels.append((x, "b"))
    return labels

def _short_delta_arc(labels, mine):
    """First minimal arc of Γ_γ(δ) with both ends and no interior vertex on `mine`
    and at most one interior vertex on the other arc."""
    m = len(labels)
    for i, (x, lx) in enumerate(labels):
        if lx != mine:
            continue
        y, ly = labels[(i + 1) % m]
        if ly == mine:
            return x, y
        z, lz = labels[(i + 2) % m]
        if m >= 3 and lz == mine and z != x:
            return x, z
    return None

def slim_step(config, bicorn, delta, log=None):
    """A bicorn with δ meeting the (α, β)-bicorn γ at most twice.

    The result is an (α, δ)-bicorn whose α-arc lies in the interior of
    γ's α-arc, or a (β, δ)-bicorn whose β-arc lies in the interior of γ's
    β-arc.

    Raises
    ------
    ValueError
        If i(γ, δ) <= 2; γ itself is then close enough to δ
    RuntimeError
        If the constructed curve meets γ more than twice
    """
    check_bicorn(config, bicorn)
    config.curve(delta)
    if delta in bicorn.hosts:
        raise ValueError(f"δ = {delta} is a host curve of {bicorn}")
    k = intersection_number(config, bicorn, delta)
    if k <= 2:
        raise ValueError(f"i(γ, δ) = {k} <= 2: use γ directly")
    labels = _delta_labels(config, bicorn, delta)
    for mine, host in (("a", bicorn.alpha_arc), ("b", bicorn.beta_arc)):
        ends = _short_delta_arc(labels, mine)
        if ends is None:
            continue
        x, y = ends
        d = span(config, delta, x, y)
        g = BicornCurve(sub_arc(config, host, x, y), d)
        check_bicorn(config, g)
        meet = intersection_number(config, bicorn, g)
        if meet > 2:
            raise RuntimeError(f"slim_step: {g} meets {bicorn} {meet} times")
        if log is not None:
            log(f"slim_step: {g} meets {bicorn} {meet} times")
        return g
    raise RuntimeError(f"slim_step: no short arc of δ = {delta} found against {bicorn}")

@dataclass
class SlimTripleCertificate:
    eta: BicornCurve
    epsilon: BicornCurve
    theta: BicornCurve
    side: str                      # "eta" or "epsilon": the one meeting θ at most twice
    case: str
    index: Optional[int] = None    # position K of θ's transition in the (α, β)-sequence
    intersections: Dict[str, int] = field(default_factory=dict)

    def to_dict(self):
        return {"eta": self.eta.to_dict(), "epsilon": self.epsilon.to_dict(),
                "theta": self.theta.to_dict(), "side": self.side, "case": self.case,
                "index": self.index, "intersections": dict(self.intersections)}

def _delta_whole(host, delta):
    return BicornCurve(ArcSpan.empty(host), ArcSpan.full(delta))

def _attached(config, item, host, delta, cache):
    """The (host, δ)-bicorn close to a sequence item, or None if it pairs with the other host."""
    key = item.key()
    if key not in cache:
        if intersection_number(config, item, delta) <= 2:
            cache[key] = None
        else:
            cache[key] = slim_step(config, item, delta)
    g = cache[key]
    if g is None:
        return _delta_whole(host, delta)
    return g if g.alpha == host else None

def _surgery(config, host_arc, delta_arc):
    """Bicorn of host_arc's curve and δ from a minimal sub-arc of host_arc between two points of delta_arc."""
    common = set(config.common_crossings(host_arc.curve, delta_arc.curve))
    on_delta = set(arc_crossings(config, delta_arc)) & common
    points = [x for x in arc_crossings(config, host_arc) if x in on_delta]
    x, y = points[0], points[1]
    return BicornCurve(sub_arc(config, host_arc, x, y), sub_arc(config, delta_arc, x, y))

def slim_triple(config, alpha, beta, delta, strict=False, log=None):
    """An (α, δ)-bicorn η and a (β, δ)-bicorn ε meeting at most twice, one of
    them meeting an (α, β)-bicorn θ at most twice.

    The (α, β)-bicorn sequence is scanned from α for the first pair
    γ_K, γ_K+1 with γ_K close to an (α, δ)-bicorn and γ_K+1 close to a
    (β, δ)-bicorn; η and ε are then read off from those two curves.

    Returns
    -------
    SlimTripleCertificate

    Raises
    ------
    ValueError
        If two of the curves coincide
    RuntimeError
        If the certificate fails its bounds
    """
    ids = [alpha, beta, delta]
    for c in ids:
        config.curve(c)
    if len(set(ids)) != 3:
        raise ValueError(f"slim_triple needs three distinct curves, got {ids}")

    if config.intersection(alpha, delta) == 0 and config.intersection(beta, delta) == 0:
        eta, eps, theta = _delta_whole(alpha, delta), _delta_whole(beta, delta), alpha_whole(alpha, beta)
        cert = SlimTripleCertificate(eta, eps, theta, "eta", "disjoint")
    else:
        seq = bicorn_sequence(config, alpha, beta, strict, log)
        cache = {}
        K = None
        for i in range(len(seq) - 1):
            near_a = _attached(config, seq[i], alpha, delta, cache)
            near_b = _attached(config, seq[i + 1], beta, delta, cache)
            if near_a is not None and near_b is not None:
                K = i
                break
        if K is None:
            raise RuntimeError(f"No transition found in the bicorn sequence of {alpha}, {beta} against {delta}")
        a_K, d_K = near_a.alpha_arc, near_a.beta_arc
        b_K1, d_K1 = near_b.alpha_arc, near_b.beta_arc
        db = set(arc_crossings(config, d_K)) & set(arc_crossings(config, b_K1)) & set(config.common_crossings(beta, delta))
        da = set(arc_crossings(config, d_K1)) & set(arc_crossings(config, a_K)) & set(config.common_crossings(alpha, delta))
        if len(db) >= 2:
            cert = SlimTripleCertificate(near_a, _surgery(config, b_K1, d_K), seq[K], "eta", "beta-surgery", K)
        elif len(da) >= 2:
            cert = SlimTripleCertificate(_surgery(config, a_K, d_K1), near_b, seq[K + 1], "epsilon", "alpha-surgery", K)
        else:
            cert = SlimTripleCertificate(near_a, near_b, seq[K], "eta", "direct", K)

    cert.intersections = {"eta_epsilon": intersection_number(config, cert.eta, cert.epsilon),
                          "eta_theta": intersection_number(config, cert.eta, cert.theta),
                          "epsilon_theta": intersection_number(config, cert.epsilon, cert.theta)}
    if cert.intersections["%s_theta" %cert.side] > 2:
        other = "epsilon" if cert.side == "eta" else "eta"
        if cert.intersections["%s_theta" %other] <= 2:
            cert.side = other
    if cert.intersections["eta_epsilon"] > 2 or min(cert.intersections["eta_theta"], cert.intersections["epsilon_theta"]) > 2:
        raise RuntimeError(f"slim_triple({alpha}, {beta}, {delta}) failed: {cert.intersections}")
    if log is not None:
        log(f"slim_triple({alpha}, {beta}, {delta}): case {cert.case}, {cert.intersections}")
    return cert
