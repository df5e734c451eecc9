import pytest

import kickbasis as kb


def test_shape_round_trip():
    s = kb.Shape.parse("2,2,1")
    assert str(s) == "2,2,1"
    assert s.n == 5
    assert s.is_two_column()
    assert not s.is_hook()


def test_fillings_in_order():
    fills = kb.fillings("2,1")
    assert len(fills) == 6
    assert fills[0] == "1,3/2"
    assert fills[-1] == "2,1/3"


def test_basis_rows():
    rows = kb.basis("2,1")
    assert rows[0] == ("1,3/2", "()", 0, 0)
    assert rows[-1] == ("2,1/3", "(x3-a1)(y1-b1)", 1, 1)


def test_phi_single_filling():
    assert kb.phi("3,1/2") == "(y1-b1)"
    assert kb.phi("2,1", family="hook") == "(y2-b2)"


def test_hilbert_polynomial():
    f = kb.hilbert("2,1")
    assert str(f) == "1 + 2*q + 2*t + q*t"
    assert f.coeff(1, 1) == 1
    assert f.eval_one_one() == 6
    assert f.max_degrees() == (1, 1)
    assert kb.symmetric("2,1")


def test_certify_nonsingular():
    report = kb.certify("2,1")
    assert report["nonsingular"]
    assert report["kernel"] == []
    seeded = kb.certify("2,1", seed=2)
    assert seeded["nonsingular"]


def test_refined_polynomials_agree():
    for a in range(1, 4):
        for b in range(a + 1):
            for m in range(b + 1):
                r1 = kb.j_recurrence_first(a, b, m)
                assert r1 == kb.j_recurrence_second(a, b, m)
                assert r1 == kb.j_enumerated(a, b, m)
    assert str(kb.j_reduced(1, 1, 0)) == "1 + q"


def test_oracle_matches():
    assert str(kb.harmonic_hilbert("2,1")) == "1 + 2*q + 2*t + q*t"
    assert kb.harmonic_hilbert("2,1") == kb.hilbert("2,1")


def test_cap_is_exposed():
    with pytest.raises(kb.CapExceeded):
        kb.fillings("2,2,2,2,2")


def test_verify_suite_trimmed():
    rows = kb.verify_all(nmax=3)
    assert len(rows) == 10
    assert all(passed for _, passed, _ in rows)
