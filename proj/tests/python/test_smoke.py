import pytest

import demflag


def polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def test_qpoly_roundtrip():
    p = demflag.QPoly.parse("1 + 2*q^3 - q^5")
    assert str(p) == "1 + 2*q^3 - q^5"
    assert p.terms() == [(0, 1), (3, 2), (5, -1)]
    assert p.eval_one() == 2
    assert demflag.QPoly.parse("q") * demflag.QPoly.parse("q^-1") == demflag.QPoly(1)


def test_multiplicities():
    assert str(demflag.mult(1, 3, 2, 1)) == "q^8"
    assert str(demflag.mult(2, 5, 2, 5)) == "1"
    assert demflag.weighted_mult(1, 3, 2, 2)[0] == 3
    assert demflag.mult_parts([2, 2, 1], 3, 1) == demflag.mult(2, 3, 3, 1)
    assert demflag.cf_2to3(6, 1) == demflag.mult(2, 7, 3, 6)
    with pytest.raises(ValueError):
        demflag.mult(3, 1, 2, 1)


def test_series_and_closed_forms():
    assert demflag.series_A_q1(1, 2, 0, 4) == [1, 1, 1, 1]
    assert all(c.is_zero() for c in demflag.series_A(2, 3, 0, 6, parity=1))
    num, den = demflag.closed_A_1m(3, 0)
    # num/den == 1/(1 - x - x^2)
    assert polymul(num, [1, -1, -1]) == polymul(den, [1])
    assert demflag.d_poly(3, 1) == [1, 1]
    assert str(demflag.mock_theta(0, 9)) == "1 + q + q^2 + q^4 + q^5 + q^7 + q^8"


def test_characters():
    assert demflag.dim_demazure(2, 3) == 12
    assert demflag.dim_demazure(1, 40) == 3**40
    assert demflag.graded_character(2, 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert demflag.char_product_D11(2, 2) == [(3, 1), (2, 1)]


def test_verify_small():
    results = demflag.verify("base", 4)
    assert results and all(r["passed"] for r in results)
    with pytest.raises(ValueError):
        demflag.verify("bogus")
