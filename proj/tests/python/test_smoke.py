import json

import pytest

import wpoly

TREFOIL = json.dumps({"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 3}]})


def test_bracket_formulations_agree():
    values = {wpoly.bracket(TREFOIL, f) for f in ("subset", "delcon", "spantree", "oracle")}
    assert values == {"A^7 - A^3 - A^-5"}


def test_single_sheaf_twist_polynomial():
    g = json.dumps({"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 1}]})
    p = wpoly.twist_polynomial(g)
    assert set(p) == {(0,), (1,)}
    assert wpoly.specialize_twist(g, [3]) == wpoly.bracket(TREFOIL)


def test_family_closed_form_matches_bracket():
    for n in range(1, 4):
        base = {"vertices": 2, "edges": [], "marked": [0, 1]}
        glued = wpoly.family_bracket(n, name="twist")
        assert glued == wpoly.family_bracket(
            n,
            base=json.dumps(base),
            tangle=json.dumps({**base, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 2}]}),
        )
    form = wpoly.family_form(name="2-1")
    assert form["lambda1"] == "A^8 - A^4 + 1"


def test_certificates():
    c = wpoly.certify(name="2-1")
    assert c["verdict"] == "DIVERGES"
    assert abs(c["z"]) > 1.01
    assert wpoly.certify(name="twist")["verdict"] == "NO CERTIFICATE"


def test_mahler_and_roots():
    assert wpoly.mahler("-A^2 - A^-2") == pytest.approx(1.0, abs=1e-9)
    assert wpoly.mahler("2*A - 1") == pytest.approx(2.0)
    assert sorted(abs(z) for z in wpoly.roots("A^2 - 4")) == pytest.approx([2.0, 2.0])


def test_errors_raise():
    with pytest.raises(wpoly.WpolyError):
        wpoly.bracket('{"vertices": 1, "edges": [{"u": 0, "v": 3, "color": "chain", "t": 1}]}')
    with pytest.raises(ValueError):
        wpoly.family_bracket(2, name="no-such-family")
