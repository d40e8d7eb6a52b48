import json
import os
import pathlib

import pytest

import pseudoassoc as pa

DATA = pathlib.Path(os.environ.get("PSEUDOASSOC_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_square():
    g = DATA / "d2.json"
    assert pa.info(g)["dimension"] == 2
    assert pa.fvector(g) == [4, 4]
    assert len(pa.tubes(g)) == 4
    assert len(pa.maximal_tubings(g)) == 4


def test_input_forms_agree():
    text = (DATA / "path3.json").read_text()
    assert pa.fvector(text) == pa.fvector(json.loads(text)) == pa.fvector(str(DATA / "path3.json")) == [5, 5]
    assert pa.load(text) == pa.catalog("path", 3)


def test_poset():
    p = pa.poset(DATA / "edge-loop.json")
    assert p["dimension"] == 2
    assert len(p["faces"]) == 8
    assert sum(1 for f in p["faces"] if f["rank"] == 1 and f["compact"]) == 2


def test_realization():
    r = pa.realize(DATA / "d2.json")
    assert r["c"] == 16
    points = sorted(tuple(v["coords"]) for v in r["vertices"])
    assert points == sorted((a, 256 - a, b, 256 - b) for a in (25, 231) for b in (17, 239))
    cone = pa.realize(DATA / "edge-loop.json", hrep=True)
    assert len(cone["vertices"]) == 3
    assert sum(1 for h in cone["halfspaces"] if h["removed"]) == 1


def test_maps():
    d = pa.delete(DATA / "cycle3.json", "e1_3")
    assert (d["source_vertices"], d["target_vertices"]) == (6, 5)
    assert d["surjective"] and d["order_preserving"]
    assert pa.contract(DATA / "path3.json", "e1_2")["target_faces"] == 3
    t = pa.tonks(4)
    assert (t["source_vertices"], t["target_vertices"]) == (24, 14)


def test_verify():
    report = pa.verify(DATA / "path3.json")
    assert all(r["pass"] for r in report)


def test_errors():
    with pytest.raises(ValueError):
        pa.fvector('{"nodes": [')
    with pytest.raises(ValueError):
        pa.delete(DATA / "path3.json", "nope")
    with pytest.raises(pa.TooManyFaces):
        pa.fvector(pa.catalog("complete", 5), max_faces=10)
