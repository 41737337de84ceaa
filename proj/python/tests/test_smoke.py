import json
from fractions import Fraction

import pytest

import matrix_census as mc


def test_field_construction():
    f4 = mc.Field(4)
    assert (f4.order, f4.characteristic, f4.degree) == (4, 2, 2)
    assert f4.modulus == [1, 1, 1]
    assert mc.Field(2, 2) == f4
    assert repr(mc.Field(9)) == "GF(3^2)"
    with pytest.raises(mc.DomainError):
        mc.Field(6)


def test_counts_match_small_census():
    f2 = mc.Field(2)
    assert mc.census(f2, 2) == {"x^2": 4, "x^2+x": 6, "x^2+1": 4, "x^2+x+1": 2}
    for poly, count in mc.census(f2, 3, threads=2).items():
        assert mc.count_with_charpoly(f2, poly) == count
    assert mc.count_irreducible_case(2, 3) == 24
    assert mc.gl_order(2, 3) == 168
    assert mc.f_product(2, 2) == Fraction(3, 8)
    assert mc.verify_partition(mc.Field(3), 3)


def test_big_counts_are_python_ints():
    value = mc.count_irreducible_case(9, 12)
    assert isinstance(value, int)
    assert value > 2**64
    assert mc.gl_order(9, 12) == value * (9**12 - 1)


def test_factor_and_structure():
    f2 = mc.Field(2)
    assert mc.factor(f2, "x^4+x^2+1") == (1, [("x^2+x+1", 2)])
    assert mc.is_irreducible(f2, "x^2+x+1")
    assert mc.count_monic_irreducibles(f2, 3) == 2
    assert mc.charpoly(f2, "0,1;1,1") == "x^2+x+1"
    assert mc.rcf(f2, "0,1;1,1") == {"blocks": ["x^2+x+1"], "transition": "1,0;0,1"}
    assert mc.are_similar(f2, "0,1;1,1", "1,1;1,0")
    c = mc.centralizer(f2, "0,1;1,1")
    assert (c["dimension"], c["order"], c["units"]) == (2, 4, 3)
    nil = mc.centralizer(f2, "0,1;0,0")
    assert nil["is_polynomial_centralizer"] and not mc.is_irreducible(f2, "x^2")
    orbit = mc.orbit_stabilizer(f2, "0,1;1,1")
    assert (orbit["orbit_size"], orbit["stabilizer_order"], orbit["consistent"]) == (2, 3, True)


def test_errors_map_to_exceptions():
    f3 = mc.Field(3)
    with pytest.raises(mc.ParseError):
        mc.charpoly(f3, "0,1;1")
    with pytest.raises(mc.DomainError):
        mc.orbit_stabilizer(mc.Field(2), "0,1;0,0")
    with pytest.raises(mc.BudgetExceeded):
        mc.census(mc.Field(2), 9)
    assert issubclass(mc.DomainError, mc.Error)


def test_cli_envelope():
    code, out, err = mc.run_cli(["count", "--q", "2", "--n", "2", "--poly", "x^2", "--no-timing"])
    assert code == 0 and err == ""
    envelope = json.loads(out)
    assert envelope["schema_version"] == "1"
    assert envelope["result"]["count"] == "4"
    code, out, err = mc.run_cli(["verify", "--q", "2", "--n", "9", "--mode", "bruteforce"])
    assert code == 3 and out == ""
    assert json.loads(err)["error"]["code"] == "budget_exceeded"
