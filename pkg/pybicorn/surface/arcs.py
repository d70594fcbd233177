from dataclasses import dataclass
from typing import Optional

@dataclass(frozen=True)
class ArcSpan:
    """A sub-arc of a curve between two of its crossings.

    Spans are stored normalized: they run forward along the curve from
    start to end (direction +1). FULL is the whole curve (direction +1,
    no endpoints) and EMPTY is no arc at all (direction 0).
    """
    curve: int
    start: Optional[int] = None
    end: Optional[int] = None
    direction: int = 1

    @classmethod
    def full(cls, curve):
        return cls(curve, None, None, 1)

    @classmethod
    def empty(cls, curve):
        return cls(curve, None, None, 0)

    @property
    def is_full(self):
        return self.start is None and self.direction == 1

    @property
    def is_empty(self):
        return self.start is None and self.direction == 0

    @property
    def endpoints(self):
        return () if self.start is None else (self.start, self.end)

    def to_list(self):
        return [self.curve, self.start, self.end, self.direction]

    @classmethod
    def from_list(cls, l):
        curve, start, end, direction = l
        if start is None or end is None:
            if start is not None or end is not None or direction not in (0, 1):
                raise ValueError(f"Malformed arc {l}")
            return cls(int(curve), None, None, int(direction))
        if direction == -1:
            return cls(int(curve), int(end), int(start), 1)
        if direction != 1:
            raise ValueError(f"Malformed arc {l}")
        return cls(int(curve), int(start), int(end), 1)

def span(config, curve, a, b, direction=1):
    """The arc of `curve` from crossing a to crossing b.

    With direction = -1 the arc runs backward from a to b, which is stored
    as the forward arc from b to a.
    """
    if a == b:
        raise ValueError(f"An arc needs two distinct endpoints, got {a} twice")
    config.station_index(curve, a), config.station_index(curve, b)
    if direction == 1:
        return ArcSpan(curve, a, b, 1)
    if direction == -1:
        return ArcSpan(curve, b, a, 1)
    raise ValueError(f"Direction must be +1 or -1, got {direction}")

def arc_edges(config, arc):
    """Indices of the curve edges covered by the arc, in order."""
    n = len(config.curve(arc.curve).edges)
    if arc.is_empty:
        return []
    if arc.is_full:
        return list(range(n))
    s = config.station_index(arc.curve, arc.start)
    t = config.station_index(arc.curve, arc.end)
    return [(s + k) % n for k in range((t - s) % n)]

def arc_crossings(config, arc):
    """Crossing ids met along the arc, endpoints included."""
    stations = config.stations(arc.curve)
    edges = arc_edges(config, arc)
    if arc.is_full:
        return list(stations)
    if not edges:
        return []
    n = len(stations)
    return [stations[j] for j in edges] + [stations[(edges[-1] + 1) % n]]

def interior(config, arc):
    """Crossing ids strictly inside the arc (every station for FULL)."""
    if arc.is_full:
        return list(config.stations(arc.curve))
    return arc_crossings(config, arc)[1:-1]

def arc_length(config, arc):
    return len(arc_edges(config, arc))

def contains(config, outer, inner):
    """True if the arc `inner` is a sub-arc of `outer`."""
    if inner.is_empty:
        return True
    if outer.curve != inner.curve or outer.is_empty:
        return False
    if outer.is_full:
        return True
    if inner.is_full:
        return False
    return set(arc_edges(config, inner)) <= set(arc_edges(config, outer))

def sub_arc(config, arc, x, y):
    """The part of `arc` between two of its crossings x and y."""
    points = arc_crossings(config, arc)
    if arc.is_full:
        return span(config, arc.curve, x, y)
    try:
        ix, iy = points.index(x), points.index(y)
    except ValueError:
        raise ValueError(f"Crossings {x}, {y} are not both on {arc}") from None
    if ix < iy:
        return ArcSpan(arc.curve, x, y, 1)
    return ArcSpan(arc.curve, y, x, 1)

def complement(config, arc):
    """The other arc of the curve with the same endpoints."""
    if arc.is_full:
        return ArcSpan.empty(arc.curve)
    if arc.is_empty:
        return ArcSpan.full(arc.curve)
    return ArcSpan(arc.curve, arc.end, arc.start, 1)

def arcs_between(config, curve, a, b):
    """The two arcs of `curve` joining crossings a and b."""
    return [span(config, curve, a, b), span(config, curve, b, a)]

def common_points(config, arc1, arc2, among=None):
    """Crossings lying on both arcs (optionally restricted to a set)."""
    pts = set(arc_crossings(config, arc1)) & set(arc_crossings(config, arc2))
    if among is not None:
        pts &= set(among)
    return pts
