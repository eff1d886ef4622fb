import math

import pytest

import affhecke


def test_presets():
    assert affhecke.presets() == ["sl2", "pgl2", "gl2", "sl3", "c2"]
    assert affhecke.validate_datum("c2")["weyl_group_order"] == 8


def test_pgl2_lengths():
    g = affhecke.AffineWeylGroup("pgl2")
    for m in range(-5, 6):
        assert g.length({"t": [m], "w": []}) == abs(m)
        assert g.length({"t": [m], "w": [1]}) == abs(m - 1)
    assert g.generators() == ["s", "s0"]
    assert len(g.length_zero_elements(4)) == 2
    assert len(g.reduced_word({"t": [2], "w": []})["word"]) == 2


def test_quadratic_relation():
    h = affhecke.HeckeAlgebra("sl2")
    assert h.mul("δ_s", "δ_s") == [
        {"elt": {"t": [0], "w": []}, "coeff": {"0": 1}},
        {"elt": {"t": [0], "w": [1]}, "coeff": {"-1": 1, "1": -1}},
    ]


def test_kl_and_bar():
    h = affhecke.HeckeAlgebra("sl3")
    b = h.kl("s1 s2 s1")
    assert len(b) == 6
    assert h.bar(b) == b
    assert h.is_central(h.center([1, 1]))


def scale(elt, factor):
    out = []
    for term in elt:
        coeff = {}
        for e, c in term["coeff"].items():
            for f, d in factor.items():
                k = str(int(e) + int(f))
                coeff[k] = coeff.get(k, 0) + c * d
        out.append({"elt": term["elt"], "coeff": coeff})
    return out


def test_bernstein_pgl2():
    h = affhecke.HeckeAlgebra("pgl2")
    # delta_s theta_{-varpi} = theta_varpi delta_s + (v - v^-1) theta_varpi
    lhs = h.mul("δ_s", "θ_[-1]")
    rhs = h.mul("θ_[1]", "δ_s") + scale(h.theta([1]), {"1": 1, "-1": -1})
    assert h.equal(lhs, rhs)


def test_modules():
    h = affhecke.HeckeAlgebra("sl2")
    assert affhecke.dl_action("sl2", 1, "θ_[1]") == h.act("b_s", "θ_[1]")
    assert h.act("b_s", "θ_[0]") == []
    sweep = affhecke.intertwiner_sweep("sl3", 1)
    assert [k for k, ok in sweep.items() if ok] == ["rho-,alpha+"]


def test_characters():
    chi = affhecke.weyl_character("sl2", [2])
    assert [t["vector"] for t in chi] == [[-2], [0], [2]]


def test_springer():
    assert affhecke.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    rows = affhecke.springer_table(4)
    assert [r["dim_orbit"] for r in rows] == [12, 10, 8, 6, 0]
    assert [r["fiber_dim"] for r in rows] == [0, 1, 2, 3, 6]
    assert sum(affhecke.syt_count(p) ** 2 for p in affhecke.partitions(6)) == math.factorial(6)
    assert affhecke.rs([1, 2, 3]) == ([[1, 2, 3]], [[1, 2, 3]])


def test_errors():
    with pytest.raises(ValueError):
        affhecke.AffineWeylGroup("nope")
    with pytest.raises(ValueError):
        affhecke.HeckeAlgebra("sl2").center([-1])
    with pytest.raises(ValueError):
        affhecke.rs([1, 1])
