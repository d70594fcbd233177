import json

import pytest

from pybicorn.bicorns import enumerate_bicorns
from pybicorn.projection import SubsurfaceContext
from pybicorn.surface.generators import generate_family
from pybicorn.utils.serialization import (configuration_from_dict, configuration_to_dict, document, dumps,
                                          load_document, parse_document, save_document)

PATTERNS = ["genus2-i2", "figure1", "projection", "grid-5", "triple-4", "bigon-3"]

@pytest.mark.parametrize("pattern", PATTERNS)
def test_serialize_parse_identity(pattern):
    config = generate_family(pattern)
    text = dumps(configuration_to_dict(config))
    again, extras = parse_document(text)
    assert again == config
    assert extras == {}
    assert dumps(configuration_to_dict(again)) == text

def test_key_order(fix_n):
    d = configuration_to_dict(fix_n)
    assert list(d) == ["surface", "crossings", "curves", "faces"]
    assert d["surface"] == {"orientable": False, "euler_char": -2}
    assert [c["id"] for c in d["crossings"]] == sorted(c["id"] for c in d["crossings"])

def test_unknown_keys_rejected(grid):
    d = configuration_to_dict(grid(3))
    d["colour"] = "blue"
    with pytest.raises(ValueError, match="Unknown keys"):
        configuration_from_dict(d)
    d = configuration_to_dict(grid(3))
    d["crossings"][0]["weight"] = 1
    with pytest.raises(ValueError, match="Unknown keys"):
        configuration_from_dict(d)

def test_not_json():
    with pytest.raises(ValueError):
        parse_document("{not json")

def test_document_extras(tmp_path, fix_p):
    config, ctx = fix_p
    bicorns = enumerate_bicorns(config, 0, 1)
    path = tmp_path / "doc.json"
    save_document(document(config, bicorn=bicorns[1], sequence=bicorns[:3], subsurface=ctx), str(path))
    again, extras = load_document(str(path))
    assert again == config
    assert extras["bicorn"] == bicorns[1]
    assert extras["sequence"] == bicorns[:3]
    sub = SubsurfaceContext.from_dict(again, extras["subsurface"])
    assert sub.boundary == ctx.boundary and sub.inside == ctx.inside
    assert json.loads(path.read_text(encoding="utf-8"))["bicorn"]["host"] == [0, 1]

def _damaged(grid, damage):
    d = configuration_to_dict(grid(3))
    damage(d)
    return d

@pytest.mark.parametrize("damage", [
    lambda d: d["crossings"][0].pop("curves"),
    lambda d: d["crossings"][0].pop("id"),
    lambda d: d["crossings"][0].update(slots=5),
    lambda d: d["crossings"][0].update(slots=[0, 1, 2]),
    lambda d: d["crossings"][0].update(curves=[0, "one", 0, 1]),
    lambda d: d["curves"][0].pop("edges"),
    lambda d: d["curves"][0].update(edges=[[0, 1, 2]]),
    lambda d: d["curves"][0].update(id=None),
    lambda d: d["faces"][0].pop("circuits"),
    lambda d: d["faces"][0].update(circuits=7),
    lambda d: d["faces"][0]["circuits"][0].append([None, 1]),
    lambda d: d.update(crossings={"0": 1}),
    lambda d: d.pop("faces"),
    lambda d: d.update(surface=[]),
])
def test_malformed_entries_raise_value_error(grid, damage):
    with pytest.raises(ValueError):
        configuration_from_dict(_damaged(grid, damage))

def test_malformed_extras_raise_value_error(fix_p):
    config, ctx = fix_p
    d = document(config, bicorn=enumerate_bicorns(config, 0, 1)[0], subsurface=ctx)
    for damage in (lambda e: e["bicorn"].pop("beta_arc"), lambda e: e["bicorn"].update(alpha_arc=3),
                   lambda e: e["bicorn"].update(host=1), lambda e: e["bicorn"]["alpha_arc"].__setitem__(0, None)):
        e = json.loads(dumps(d))
        damage(e)
        with pytest.raises(ValueError):
            parse_document(dumps(e))
    for sub in ({"boundary": [2, 3]}, {"boundary": 2, "inside": [[2, -1]]}, {"boundary": [2, 3], "inside": [2, 3]}, []):
        with pytest.raises(ValueError):
            SubsurfaceContext.from_dict(config, sub)
