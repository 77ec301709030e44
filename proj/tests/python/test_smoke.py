import pytest

import galecubic as gc

F = "prime:97"


@pytest.fixture(scope="module")
def a4():
    return gc.a4_emit(F)


def test_a4_pair_is_gale(a4):
    x_e, x_f = a4["equations"]
    assert gc.is_gale_pair(F, x_e, x_f)
    dual = gc.gale_dual(F, x_e)
    assert dual["sign"] == -x_e["sign"]
    assert gc.is_gale_pair(F, x_e, dual)


def test_lagrangian_and_sextic(a4):
    x_e = a4["equations"][0]
    res = gc.lagrangian_from_gale(F, x_e, 0)
    cols = res["lagrangian"]
    assert len(cols) == 10 and all(len(c) == 20 for c in cols)
    check = gc.check_lagrangian(F, cols)
    assert check["ok"] and check["dim_E"] == 4 and check["dim_F"] == 4
    pts = gc.harvest_epw_points(F, cols, 3, seed=7)
    assert len(pts) == 3
    for p in pts:
        member, nullity = gc.epw_contains(F, cols, p)
        assert member and nullity >= 1


def test_lines_roundtrip(a4):
    x_e = a4["equations"][0]
    cols = gc.lagrangian_from_gale(F, x_e, 0)["lagrangian"]
    done = 0
    for p in gc.harvest_epw_points(F, cols, 20, seed=3):
        r = gc.epw_to_lines(F, x_e, 0, p)
        if not r["split"]:
            continue
        back = gc.line_to_epw(F, x_e, 0, r["lines"][0])
        # Projective equality: the 2 x 2 minors vanish mod 97.
        assert all((back[i] * p[j] - back[j] * p[i]) % 97 == 0 for i in range(6) for j in range(6))
        done += 1
    assert done > 0


def test_cubic_and_smoothness(a4):
    x_e = a4["equations"][0]
    terms = gc.cubic_polynomial(F, x_e)
    assert terms and all(sum(e) == 3 for _, e in terms)
    assert gc.smooth_check(F, x_e)


def test_rational_encoding_roundtrip():
    inst = gc.a4_emit("cyclo3:rational", ["1", "2", "1", "1", "1"])
    assert inst["field"] == "cyclo3:rational"
    assert gc.roundtrip_instance(inst) == inst
    assert all("/" in c for row in inst["equations"][0]["M"] for pair in row for c in pair)
    with pytest.raises(gc.InvalidInput):
        gc.a4_emit("rational")


def test_lattice():
    assert gc.lattice_count() == 24
    sizes, _ = gc.lattice_orbits()
    assert sum(sizes) == 24


def test_invalid_input_raises():
    bad = {"sign": 1, "M": [[1, 0, 0, 0, 0, 0]] * 9, "L": [[1, 0, 0, 0, 0, 0]] * 3}
    with pytest.raises(gc.InvalidInput):
        gc.gale_dual("prime:101", bad)
    with pytest.raises(ValueError):
        gc.check_lagrangian(F, [[0] * 19])


def test_acceptance_subset():
    res = gc.run_acceptance(ids=[5, 12])
    assert [r["id"] for r in res] == [5, 12]
    assert all(r["pass"] for r in res)
