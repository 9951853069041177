import pytest

import pongalg


def test_bigon_differential():
    f = pongalg.LiftedPermutation(3, [2], [-1])
    assert f.crossing_count() == 1
    assert f.diff() == [(pongalg.LiftedPermutation(3, [2], [2]), [[1, 1, 0]])]


def test_asteroids_example():
    f = pongalg.CyclicLiftedPermutation(3, [1, 2], [6, 1])
    assert f.crossing_count() == 2
    assert f.weight_doubled() == [1, 3, 2]
    d = f.diff()
    assert len(d) == 2
    assert all(monos == [[0, 1, 0]] for _, monos in d)


def test_generators_are_values():
    gens = pongalg.enumerate_generators(2, 1, 2)
    assert len(gens) == 5
    assert gens == sorted(gens)
    assert len(set(gens)) == 5
    assert gens[0](gens[0].domain[0]) == gens[0].values[0]


def test_products():
    e = pongalg.LiftedPermutation(3, [2], [2])
    assert e * e == (e, [0, 0, 0])
    assert pongalg.LiftedPermutation(3, [1], [1]) * e is None


def test_json_round_trip():
    record = {"algebra": "pong", "m": 3, "k": 1, "domain": [2], "values": [-1]}
    assert pongalg.diff(record) == {
        "terms": [
            {
                "generator": {"algebra": "pong", "m": 3, "k": 1, "domain": [2], "values": [2]},
                "monomials": [[1, 1, 0]],
            }
        ]
    }
    unit = {"algebra": "pong", "m": 3, "k": 1, "domain": [2], "values": [2]}
    assert pongalg.mul(unit, unit)["terms"][0]["generator"] == unit


def test_verify():
    report = pongalg.verify("dga", 3, 1, 2)
    assert report["passed"]
    assert report["checks_run"] > 0
    assert "dga" in pongalg.suite_names


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError):
        pongalg.LiftedPermutation(3, [1, 2], [1, 1])
    with pytest.raises(pongalg.InvalidArgument):
        pongalg.verify("dga", 1, 1, 1)
    with pytest.raises(ValueError):
        pongalg.diff({"algebra": "pong", "m": 3})
