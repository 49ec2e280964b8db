import pytest

import aubertcalc as ac


def test_golden_decomposition():
    s = ac.jacquet_str("d[-1,0] |x sigma", "1")
    assert s == (
        "rho (x) nu^{-1} rho (x) sigma + rho (x) nu rho (x) sigma"
        " + 2·nu rho (x) rho (x) sigma"
    )
    terms = ac.jacquet("d[-1,0] |x sigma", "1")["terms"]
    coeffs = {tuple(t["word"]): t["coeff"] for t in terms}
    assert coeffs == {("0", "-1"): 1, ("0", "1"): 1, ("1", "0"): 2}


def test_parameter_maps():
    assert ac.a_to_l("phi*S3*S2 + bg") == "bg + nu^{-1/2} phi*S3 + nu^{1/2} phi*S3"
    assert ac.swap_sl2("phi*S3*S2 + bg") == "bg + phi*S2*S3"
    assert ac.is_image_of_a("phi*S3 + phi*S1 + bg") == "bg + phi*S1*S1 + phi*S3*S1"
    assert (
        ac.is_image_of_a("nu^{3/2} phi*S2 + nu^{-3/2} phi*S2 + phi*S3 + phi*S1 + bg")
        is None
    )


def test_duality():
    assert ac.dual(3, "1/2") == "A: bg + phi*S2*S3"
    assert ac.dual(4, "1").startswith("L: ")
    assert ac.dual_data(2, "1") == "Ls(tau+)"
    assert ac.dual_data(1, "0") is None
    assert ac.base_point(2) == "Ls(d[-1,0], sigma)"
    assert ac.symmetry(3, "1/2") is True
    assert ac.symmetry(4, "1/2") is False
    assert ac.symmetry(2, "0") is True


def test_multiplicity_and_closure():
    assert (
        ac.multiplicity(
            "d[-1,0] |x sigma", "nu rho (x) rho (x) sigma", "1"
        )
        == 2
    )
    closed = ac.closure("rho (x) nu^{-1} rho (x) sigma", "0")
    assert "rho (x) nu rho (x) sigma" in closed


def test_verify():
    claims = ac.verify("1/2", max_m=2)
    assert len(claims) == 8
    assert all(c["pass"] for c in claims)


def test_parse_error():
    with pytest.raises(ValueError):
        ac.jacquet_str("d[0,-1] |x sigma", "1")
