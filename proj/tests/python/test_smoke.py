import json
from fractions import Fraction as F

import pytest

import newtonkit as nk


def test_coweights_are_fractions():
    a3 = nk.build_datum("A", 3)
    assert a3.fundamental_coweights[0] == [F(3, 4), F(-1, 4), F(-1, 4), F(-1, 4)]
    assert a3.label == "A3"
    assert nk.special_roots(nk.build_datum("E", 7)) == [6]


def test_bgmu_c2():
    c2 = nk.build_datum("C", 2)
    elements = nk.enumerate_bgmu(c2, ["1/2", "1/2"])
    assert [e["nu"] for e in elements] == [[0, 0], [F(1, 2), 0], [F(1, 2), F(1, 2)]]
    member = nk.is_in_bgmu(c2, [F(1, 2), 0], [F(1, 2), F(1, 2)])
    assert member["member"] and member["c"] == [0, F(1, 2)]
    assert not nk.is_in_bgmu(c2, [F(1, 4), F(1, 4)], [F(1, 2), F(1, 2)])["member"]


def test_maximal_below_top_b3():
    b3 = nk.build_datum("B", 3)
    top = nk.maximal_elements(b3, b3.fundamental_coweights[0], exclude_top=True)
    assert [e["nu"] for e in top] == [[F(1, 2), F(1, 2), 0]]


def test_newton_order_and_galois_average():
    a2 = nk.build_datum("A", 2)
    w = a2.fundamental_coweights
    assert not nk.newton_leq(a2, w[0], w[1])
    flip = nk.build_datum("A", 3, sigma="flip")
    assert nk.galois_average(flip, flip.fundamental_coweights[0]) == [F(1, 2), 0, 0, F(-1, 2)]


def test_degrees():
    p = nk.SlopeProfile([1, F(1, 2), 0], [1, 2, 1], polarized=True)
    dd = nk.degrees(p)
    assert dd["d"] == [1, 2, 2]
    assert dd["delta"] == F(1, 8)
    assert nk.max_degree_bound(p, 2) == F(3, 2)
    assert nk.check_uniqueness(p, 0)
    split = nk.next_to_max_profile(nk.SlopeProfile([1, 0], [2, 2], True), 0, 1)
    assert split == p


def test_hecke():
    assert nk.m_epsilon_valuation([0, 0, 1, 1], 1, group="sp") == 3
    assert nk.m_epsilon_valuation([1, 0], 0) == 1
    assert nk.epsilon_prime(2, F(3, 2), 4) == [F(3, 2), 1, F(-1, 2), 0]
    assert nk.n_g_constant([(1, 1)], 2) == 1
    assert nk.hasse_number(2, 3) == 8
    assert nk.lambda_g_valuation([0, 1], 1) == 1


def test_errors_raise_domain_error():
    with pytest.raises(nk.DomainError):
        nk.build_datum("B", 1)
    with pytest.raises(ValueError):
        nk.hasse_number(1, 4)
    with pytest.raises(nk.DomainError):
        nk.m_epsilon_valuation([0, 1], 0, x=[1, 0])


def test_cli_roundtrip():
    code, out, _ = nk.run_cli(["hasse", "--w", "3", "--p", "5"])
    assert code == 0
    assert json.loads(out)["payload"]["value"] == 124
    assert nk.run_cli(["nope"])[0] == 1
