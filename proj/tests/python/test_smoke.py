import math

import pytest

import simploc


def test_dwheel_is_not_7_located_but_its_cone_is():
    p = simploc.dwheel(5, 5)
    report = simploc.is_m_located(p, 7)
    assert report["verdict"] is False
    assert len(report["witnesses"][0]["boundary"]) == 6
    assert simploc.is_m_located(simploc.cone(p), 7)["verdict"] is True


def test_complex_round_trip():
    x = simploc.FlagComplex(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert len(x) == 4
    assert x.edge_count == 4
    assert not simploc.is_k_large(x, 5)
    y = simploc.FlagComplex.from_json(x.to_json())
    assert sorted(y.edges()) == sorted(x.edges())
    with pytest.raises(ValueError):
        simploc.FlagComplex.from_json({"vertices": [1, 2], "edges": [[1, 3]]})


def test_lws_fixtures():
    assert simploc.is_locally_weakly_systolic(simploc.hex_disc(2).skeleton())
    assert not simploc.check_w5hat(simploc.extended_five_wheel())["verdict"]
    assert simploc.check_w5hat(simploc.cone(simploc.extended_five_wheel()))["verdict"]


def test_metric():
    d = simploc.hex_disc(2)
    m = simploc.metrize(d)
    assert m["cat0"] is True
    assert math.isclose(m["metric_area"], 24 * math.sqrt(3) / 4)
    assert simploc.is_cat0(simploc.random_7_located_disc(30, 4))
    assert math.isclose(simploc.isoperimetric_bound(10), 100 / math.pi)
    assert "<svg" in simploc.export_svg(d)
    two = simploc.Disc([[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 5, 6], [1, 6, 7], [1, 7, 2]],
                       [2, 3, 4, 5, 6, 7])
    with pytest.raises(simploc.MetricUndefined):
        simploc.metrize(two)


def test_oracle_and_reduce():
    w = simploc.wheel(5)
    r = simploc.minimal_diagrams(w, ["v1", "v2", "v3", "v4", "v5"])
    assert r["status"] == "FOUND"
    assert r["minimal_area"] == 5
    out = simploc.reduce(r["diagrams"][0], w)
    assert out["trace"] == []
    with pytest.raises(ValueError):
        simploc.minimal_diagrams(w, ["v1", "v3", "v5"])
