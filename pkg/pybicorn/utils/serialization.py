import json

from ..surface.arcs import ArcSpan
from ..surface.configuration import (CurveConfiguration, Crossing, CurveCycle, Face, LoopSide,
                                     is_loop_side)
from ..surface.cycles import BicornCurve

# Configuration documents are JSON objects with the keys below, in this
# order. A document may carry one bicorn, one bicorn sequence and one
# subsurface next to the configuration it refers to.
CONFIG_KEYS = ("surface", "crossings", "curves", "faces")
EXTRA_KEYS = ("bicorn", "sequence", "subsurface")

def _reject_unknown(d, allowed, where):
    if not isinstance(d, dict):
        raise ValueError(f"{where} must be a JSON object")
    unknown = [k for k in d if k not in allowed]
    if unknown:
        raise ValueError(f"Unknown keys in {where}: {unknown}")

def _side_to_json(x):
    if is_loop_side(x):
        return ["loop", x.curve, x.side, x.direction]
    h, s = x
    return [h, s]

def _side_from_json(x):
    if isinstance(x, list) and len(x) == 4 and x[0] == "loop":
        return LoopSide(*(_int(v, "loop side") for v in x[1:]))
    if isinstance(x, list) and len(x) == 2:
        return (_int(x[0], "edge side"), _int(x[1], "edge side"))
    raise ValueError(f"Malformed edge side {x}")

def configuration_to_dict(config):
    euler = config.declared_euler_char
    if euler is None:
        euler = config.euler_characteristic()
    return {
        "surface": {"orientable": config.orientable, "euler_char": euler},
        "crossings": [{"id": c.id, "slots": list(c.slots), "curves": list(c.curves)}
                      for c in config.crossings],
        "curves": [{"id": c.id, "edges": [list(e) for e in c.edges]} for c in config.curves],
        "faces": [{"circuits": [[_side_to_json(x) for x in circuit] for circuit in f.circuits],
                   "orientable": f.orientable, "genus": f.genus} for f in config.faces],
    }

def _require(d, key, where):
    if key not in d:
        raise ValueError(f"{where} is missing the key {key}")
    return d[key]

def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ValueError(f"{where} must be an integer, got {x!r}")
    return x

def _list(x, where, length=None):
    if not isinstance(x, list):
        raise ValueError(f"{where} must be a JSON list, got {x!r}")
    if length is not None and len(x) != length:
        raise ValueError(f"{where} must have {length} entries, got {len(x)}")
    return x

def configuration_from_dict(d):
    """Build a configuration from its JSON form.

    Raises
    ------
    ValueError
        For unknown or missing keys and malformed entries
    ConfigurationError
        If the entries parse but do not form a ribbon graph
    """
    _reject_unknown(d, CONFIG_KEYS + EXTRA_KEYS, "configuration")
    for key in CONFIG_KEYS:
        _require(d, key, "configuration")
    surface = d["surface"]
    _reject_unknown(surface, ("orientable", "euler_char"), "surface")

    crossings = []
    for c in _list(d["crossings"], "crossings"):
        _reject_unknown(c, ("id", "slots", "curves"), "crossing")
        where = f"crossing {c.get('id')}"
        slots = _list(_require(c, "slots", where), where + " slots", 4)
        curves = _list(_require(c, "curves", where), where + " curves", 4)
        crossings.append(Crossing(_int(_require(c, "id", "crossing"), "crossing id"),
                                  tuple(_int(h, where + " slot") for h in slots),
                                  tuple(_int(k, where + " curve") for k in curves)))
    curves = []
    for c in _list(d["curves"], "curves"):
        _reject_unknown(c, ("id", "edges"), "curve")
        cid = _int(_require(c, "id", "curve"), "curve id")
        where = f"curve {cid}"
        edges = []
        for e in _list(_require(c, "edges", where), where + " edges"):
            e = _list(e, where + " edge", 2)
            edges.append((_int(e[0], where + " edge"), _int(e[1], where + " edge")))
        curves.append(CurveCycle(cid, tuple(edges)))
    faces = []
    for j, f in enumerate(_list(d["faces"], "faces")):
        _reject_unknown(f, ("circuits", "orientable", "genus"), "face")
        where = f"face {j}"
        circuits = tuple(tuple(_side_from_json(x) for x in _list(circuit, where + " circuit"))
                         for circuit in _list(_require(f, "circuits", where), where + " circuits"))
        faces.append(Face(circuits, bool(f.get("orientable", True)), _int(f.get("genus", 0), where + " genus")))

    euler = surface.get("euler_char")
    return CurveConfiguration(crossings, curves, faces, bool(surface.get("orientable", True)),
                              None if euler is None else _int(euler, "euler_char"))

def _arc_list(l, where):
    l = _list(l, where, 4)
    _int(l[0], where + " curve")
    for x in l[1:3]:
        if x is not None:
            _int(x, where + " end")
    _int(l[3], where + " direction")
    return l

def bicorn_from_dict(d):
    _reject_unknown(d, ("host", "alpha_arc", "beta_arc"), "bicorn")
    for key in ("alpha_arc", "beta_arc"):
        _arc_list(_require(d, key, "bicorn"), "bicorn " + key)
    if "host" in d:
        _list(d["host"], "bicorn host", 2)
    return BicornCurve.from_dict(d)

def sequence_from_list(items):
    """The bicorns of a serialized sequence, in order."""
    if not isinstance(items, list):
        raise ValueError("A sequence must be a JSON list of bicorns")
    return [bicorn_from_dict(b) for b in items]

def arc_from_list(l):
    return ArcSpan.from_list(_arc_list(l, "arc"))

def dumps(d):
    """Deterministic JSON text: fixed key order, two-space indent, UTF-8 kept."""
    return json.dumps(d, indent=2, ensure_ascii=False) + "\n"

def document(config, bicorn=None, sequence=None, subsurface=None):
    """A configuration document, optionally carrying a bicorn, a sequence and a subsurface."""
    d = configuration_to_dict(config)
    if bicorn is not None:
        d["bicorn"] = bicorn.to_dict()
    if sequence is not None:
        d["sequence"] = [b.to_dict() for b in sequence]
    if subsurface is not None:
        d["subsurface"] = subsurface.to_dict()["subsurface"]
    return d

def parse_document(text):
    """Parse a configuration document.

    Returns
    -------
    config : CurveConfiguration
    extras : dict
        Parsed "bicorn" (BicornCurve), "sequence" (list of BicornCurve) and
        raw "subsurface" entries, for those present
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValueError(f"Not a JSON document: {err}") from None
    config = configuration_from_dict(d)
    extras = {}
    if "bicorn" in d:
        extras["bicorn"] = bicorn_from_dict(d["bicorn"])
    if "sequence" in d:
        extras["sequence"] = sequence_from_list(d["sequence"])
    if "subsurface" in d:
        extras["subsurface"] = d["subsurface"]
    return config, extras

def load_document(path):
    with open(path, "r", encoding="utf-8") as f:
        return parse_document(f.read())

def save_document(d, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(d))
