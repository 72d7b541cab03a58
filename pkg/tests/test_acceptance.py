"""Acceptance gate: one test per shipped guarantee, all comparisons exact.

Each test prints a single PASS line with the measured values, so running
``pytest -v -s tests/test_acceptance.py`` reads as a checklist.  Everything
here is integer or rational equality; there are no tolerances anywhere.
"""

from __future__ import annotations

import itertools
import json
import random
from math import gcd

from quiverkac import (
    Box,
    TruncatedSeries,
    builtin_quiver,
    count_absolutely_indecomposable,
    euler_characteristic,
    kac_polynomial,
    kac_series,
    peterson,
    plethystic_exp,
    plethystic_log,
    poincare_via_kac,
    profile_via_hausel,
    weight_mult_framed,
    weight_mult_freudenthal,
    weight_mult_via_betti,
)
from quiverkac.cli import main as cli_main

from conftest import random_box, random_series

POINT = builtin_quiver("a1")
A2 = builtin_quiver("a2")


def test_criterion_1_oracle_equivalence():
    checked = 0
    for name in ("a2", "kronecker2", "kronecker3"):
        quiver = builtin_quiver(name)
        for alpha in Box((1, 1)).exponents():
            poly = kac_polynomial(quiver, alpha)
            for p in (2, 3, 5):
                assert poly.eval_at(p) == count_absolutely_indecomposable(
                    quiver, alpha, p
                ), (name, alpha, p)
                checked += 1
    assert kac_polynomial(builtin_quiver("kronecker2"), (1, 1)).coeffs == (1, 1)
    assert count_absolutely_indecomposable(builtin_quiver("kronecker2"), (1, 1), 2) == 3
    assert kac_polynomial(builtin_quiver("kronecker3"), (1, 1)).coeffs == (1, 1, 1)
    assert count_absolutely_indecomposable(builtin_quiver("kronecker3"), (1, 1), 2) == 7
    print(
        f"\nPASS criterion 1: polynomial = finite-field count on {checked} "
        "(quiver, alpha, p) triples; kronecker2 (1,1) -> 1+q (count 3 at p=2), "
        "kronecker3 -> 1+q+q^2 (count 7)"
    )


def test_criterion_2_finite_type_root_systems():
    cases = [("a2", (1, 1), 3), ("a3", (1, 1, 1), 6), ("d4", (1, 1, 1, 2), 12)]
    for name, bound, expected in cases:
        quiver = builtin_quiver(name)
        series = kac_series(quiver, Box(bound))
        support = {
            e for e in Box(bound).exponents() if not series.coefficient(e).is_zero()
        }
        support.discard((0,) * len(bound))
        assert len(support) == expected, name
        for e in support:
            assert series.coefficient(e).as_int_polynomial() == (1,), (name, e)
        roots = peterson(quiver, bound).positive_roots()
        assert support == {beta for beta, _ in roots}, name
        assert all(m == 1 for _, m in roots), name
    print(
        "\nPASS criterion 2: A2/A3/D4 have 3/6/12 nonzero Kac polynomials, "
        "all equal to 1, on exactly the Peterson root sets"
    )


def test_criterion_3_weight_multiplicity_triple_agreement():
    checked = 0
    for n in (1, 2, 3, 4):
        lam = (n,)
        freudenthal = weight_mult_freudenthal(POINT, lam, (n + 2,))
        for v in range(n + 3):
            drop = (v,)
            a = weight_mult_framed(POINT, lam, drop)
            b = freudenthal.multiplicity(drop)
            c = weight_mult_via_betti(poincare_via_kac(POINT, drop, lam))
            assert a == b == c, (lam, drop, a, b, c)
            checked += 1
    lam = (1, 1)
    freudenthal = weight_mult_freudenthal(A2, lam, (2, 2))
    for drop in Box((2, 2)).exponents():
        a = weight_mult_framed(A2, lam, drop)
        b = freudenthal.multiplicity(drop)
        c = weight_mult_via_betti(poincare_via_kac(A2, drop, lam))
        assert a == b == c, (lam, drop, a, b, c)
        checked += 1
    flagship = weight_mult_framed(A2, (1, 1), (1, 1))
    assert flagship == 2
    print(
        f"\nPASS criterion 3: framed, Freudenthal and Betti routes agree on "
        f"{checked} weights; sl3 adjoint zero weight = {flagship} on all three"
    )


def test_criterion_4_hausel_kac_agreement():
    checked = 0
    cases = [
        (POINT, (2,), Box((3,))),
        (POINT, (3,), Box((3,))),
        (A2, (1, 1), Box((2, 2))),
    ]
    for quiver, lam, box in cases:
        for alpha in box.exponents():
            via_kac = poincare_via_kac(quiver, alpha, lam, box)
            via_hausel = profile_via_hausel(quiver, alpha, lam, box)
            assert via_kac == via_hausel, (lam, alpha)
            poly = via_kac.poly
            assert all(isinstance(c, int) and c >= 0 for c in poly)
            if poly:
                d = via_kac.d
                low = next(i for i, c in enumerate(poly) if c)
                assert d <= low and len(poly) - 1 <= 2 * d, (lam, alpha)
            checked += 1
    print(
        f"\nPASS criterion 4: series-quotient and Log routes give identical "
        f"Betti polynomials on {checked} (alpha, lambda) pairs, all with "
        "non-negative integer coefficients supported in [d, 2d]"
    )


def test_criterion_5_projective_space_profiles():
    for lam, expected, euler in (((2,), (0, 1, 1), 2), ((3,), (0, 0, 1, 1, 1), 3)):
        via_kac = poincare_via_kac(POINT, (1,), lam)
        via_hausel = profile_via_hausel(POINT, (1,), lam)
        assert via_kac.poly == via_hausel.poly == expected, lam
        assert euler_characteristic(via_kac) == euler, lam
    print(
        "\nPASS criterion 5: cotangent bundles of P^1 and P^2 have Poincare "
        "polynomials q+q^2 and q^2+q^3+q^4, Euler characteristics 2 and 3, "
        "by both methods"
    )


def test_criterion_6_constant_terms_are_root_multiplicities():
    quiver = builtin_quiver("kronecker2")
    bound = (3, 3)
    series = kac_series(quiver, Box(bound))
    table = peterson(quiver, bound)
    indivisible = 0
    for beta, mult in table.positive_roots():
        coeffs = series.coefficient(beta).as_int_polynomial()
        assert coeffs and coeffs[0] == mult, (beta, coeffs, mult)
        if gcd(*beta) == 1:
            indivisible += 1
    delta = series.coefficient((1, 1)).as_int_polynomial()
    two_delta = series.coefficient((2, 2)).as_int_polynomial()
    assert delta[0] == 1 == table.multiplicity((1, 1))
    assert two_delta[0] == 1 == table.multiplicity((2, 2))
    print(
        f"\nPASS criterion 6: a_beta(0) = Peterson multiplicity for all "
        f"{len(table.positive_roots())} roots of kronecker2 up to (3,3) "
        f"({indivisible} indivisible), including delta and 2*delta"
    )


def test_criterion_7_lambda_ring_laws():
    rng = random.Random(20260814)
    instances = 200
    for _ in range(instances):
        box = random_box(rng)
        f = random_series(rng, box)
        g = random_series(rng, box)
        one = TruncatedSeries.one(box)
        assert plethystic_exp(plethystic_log(one + f)) == one + f
        assert plethystic_log(plethystic_exp(f)) == f
        assert plethystic_exp(f + g) == plethystic_exp(f) * plethystic_exp(g)
        k, m = rng.randint(1, 3), rng.randint(1, 3)
        assert f.adams(k).adams(m) == f.adams(k * m)
    print(
        f"\nPASS criterion 7: Exp/Log inversion, Exp additivity and Adams "
        f"composition hold on {instances} random series over boxes with "
        "entries <= 3"
    )


def test_criterion_8_orientation_independence():
    box = Box((2, 2))
    for name in ("a2", "kronecker3"):
        quiver = builtin_quiver(name)
        assert kac_series(quiver, box) == kac_series(quiver.reversed(), box), name
    print(
        "\nPASS criterion 8: reversing every arrow of a2 and kronecker3 "
        "leaves all Kac polynomials in box (2,2) unchanged"
    )


def test_criterion_9_degenerate_inputs(tmp_path, capsys):
    profile = poincare_via_kac(POINT, (2,), (1,))
    assert profile.empty and profile.poly == ()
    assert weight_mult_via_betti(profile) == 0
    loop = tmp_path / "loop.json"
    loop.write_text(
        json.dumps({"vertices": ["1"], "arrows": [{"from": "1", "to": "1"}]})
    )
    code = cli_main(["kac", "--quiver", str(loop), "--dim", "1"])
    capsys.readouterr()
    assert code == 2
    print(
        "\nPASS criterion 9: non-root (alpha, 1) reports an empty variety "
        "with the zero polynomial, and a loop quiver file exits with code 2"
    )
