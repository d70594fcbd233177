from dataclasses import dataclass

from .arcs import ArcSpan, interior

@dataclass(frozen=True)
class BicornCurve:
    """A closed curve made of an arc of one curve and an arc of another.

    The arcs share their two endpoints (the corners) and nothing else among
    the crossings of the two host curves. A whole host curve is the
    degenerate bicorn with a FULL arc on it and an EMPTY arc on the other.
    """
    alpha_arc: ArcSpan
    beta_arc: ArcSpan

    @property
    def alpha(self):
        return self.alpha_arc.curve

    @property
    def beta(self):
        return self.beta_arc.curve

    @property
    def hosts(self):
        return (self.alpha, self.beta)

    @classmethod
    def whole(cls, curve, other):
        """The curve `curve` seen as a bicorn of the pair (curve, other)."""
        return cls(ArcSpan.full(curve), ArcSpan.empty(other))

    @property
    def whole_curve(self):
        if self.alpha_arc.is_full:
            return self.alpha
        if self.beta_arc.is_full:
            return self.beta
        return None

    @property
    def corners(self):
        return self.alpha_arc.endpoints

    def swapped(self):
        return BicornCurve(self.beta_arc, self.alpha_arc)

    def key(self):
        w = self.whole_curve
        if w is not None:
            return ("curve", w)
        return ("bicorn",) + tuple(sorted([tuple(self.alpha_arc.to_list()), tuple(self.beta_arc.to_list())]))

    def to_dict(self):
        return {"host": [self.alpha, self.beta],
                "alpha_arc": self.alpha_arc.to_list(),
                "beta_arc": self.beta_arc.to_list()}

    @classmethod
    def from_dict(cls, d):
        unknown = set(d) - {"host", "alpha_arc", "beta_arc"}
        if unknown:
            raise ValueError(f"Unknown bicorn keys {sorted(unknown)}")
        b = cls(ArcSpan.from_list(d["alpha_arc"]), ArcSpan.from_list(d["beta_arc"]))
        if "host" in d and list(d["host"]) != [b.alpha, b.beta]:
            raise ValueError("Bicorn host does not match its arcs")
        return b

    def __str__(self):
        w = self.whole_curve
        if w is not None:
            return "curve %d" %w
        a, b = self.alpha_arc, self.beta_arc
        return "bicorn[%d:%d->%d | %d:%d->%d]" %(a.curve, a.start, a.end, b.curve, b.start, b.end)

def cycle_key(c):
    if isinstance(c, BicornCurve):
        return c.key()
    return ("curve", int(c))

def as_cycle(c):
    """Reduce a bicorn that is a whole curve to that curve's id."""
    if isinstance(c, BicornCurve) and c.whole_curve is not None:
        return c.whole_curve
    return c

def check_bicorn(config, bicorn):
    """Raise ValueError unless the bicorn is realized inside the configuration.

    Parameters
    ----------
    config : CurveConfiguration
    bicorn : BicornCurve
    """
    a, b = bicorn.alpha_arc, bicorn.beta_arc
    config.curve(a.curve), config.curve(b.curve)
    if a.curve == b.curve:
        raise ValueError("A bicorn needs two distinct host curves")
    if bicorn.whole_curve is not None:
        other = b if a.is_full else a
        if not other.is_empty:
            raise ValueError("A whole-curve bicorn must have an EMPTY second arc")
        return
    if a.is_empty or b.is_empty or a.is_full or b.is_full:
        raise ValueError("Bicorn arcs must both be proper arcs")
    if set(a.endpoints) != set(b.endpoints):
        raise ValueError(f"Bicorn arcs do not share their endpoints: {a.endpoints} vs {b.endpoints}")
    common = set(config.common_crossings(a.curve, b.curve))
    for x in a.endpoints:
        if x not in common:
            raise ValueError(f"Bicorn corner {x} is not a crossing of curves {a.curve} and {b.curve}")
    clash = set(interior(config, a)) & set(interior(config, b)) & common
    if clash:
        raise ValueError(f"Bicorn is not embedded: crossings {sorted(clash)} are interior to both arcs")
