import random
from fractions import Fraction

import pytest

from kippenhahn.groebner import (
    Ideal,
    NonPrincipalIdealError,
    ResourceLimitError,
    buchberger,
    dual_curve,
    eliminate,
    normal_form,
)
from kippenhahn.mpoly import (
    MultiPoly,
    elimination_order,
    grevlex_order,
    lex_order,
    parse_poly,
)

V3 = ("x0", "x1", "x2")

APPENDIX_P = "x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 - 21/16*x2^2*x0 + 55/64*x2^3 - 3/2*x1^2*x2"
APPENDIX_Q = (
    "1485*y0^6 - 3672*y2*y0^5 - 15282*y1^2*y0^4 - 2448*y2^2*y0^4 + 12032*y2^3*y0^3"
    " - 19872*y1^2*y2*y0^3 + 9504*y1^4*y0^2 - 5376*y2^4*y0^2 + 21312*y1^2*y2^2*y0^2"
    " - 6144*y2^5*y0 + 13824*y1^2*y2^3*y0 + 27648*y1^4*y2*y0 + 864*y1^6 + 4096*y2^6"
    " - 4608*y1^2*y2^4 + 13824*y1^4*y2^2"
)
VY = ("y0", "y1", "y2")


def twisted_cubic_ideal():
    lex = lex_order(3)
    f1 = parse_poly("x0^2 - x1", V3).with_order(lex)
    f2 = parse_poly("x0^3 - x2", V3).with_order(lex)
    return Ideal([f1, f2], lex)


class TestBuchberger:
    def test_twisted_cubic_contains_eliminant(self):
        gb = buchberger(twisted_cubic_ideal())
        target = parse_poly("x1^3 - x2^2", V3)
        assert any(g.proportional_to(target) for g in gb)

    def test_principal_ideal(self):
        f = parse_poly("x0^2 - x1^2 - x2^2", V3)
        gb = buchberger(Ideal([f]))
        assert len(gb) == 1 and gb[0].proportional_to(f)

    def test_unit_ideal(self):
        gb = buchberger(
            Ideal(
                [
                    parse_poly("x0", V3),
                    parse_poly("x1", V3),
                    MultiPoly.constant(V3, 1),
                ]
            )
        )
        assert len(gb) == 1 and gb[0] == MultiPoly.constant(V3, 1)

    def test_spolynomials_reduce_to_zero(self):
        for ideal in (
            twisted_cubic_ideal(),
            Ideal(
                [
                    parse_poly("x0^2 + x1^2 + x2^2 - 1", V3),
                    parse_poly("x0 - x1^2", V3),
                ]
            ),
        ):
            gb = buchberger(ideal)
            order = ideal.order
            for i in range(len(gb)):
                for j in range(i + 1, len(gb)):
                    ei, ci = gb[i].leading_term(order)
                    ej, cj = gb[j].leading_term(order)
                    lcm = tuple(max(a, b) for a, b in zip(ei, ej))
                    mi = {tuple(a - b for a, b in zip(lcm, ei)): 1 / ci}
                    mj = {tuple(a - b for a, b in zip(lcm, ej)): 1 / cj}
                    s = MultiPoly(gb[i].variables, mi, order) * gb[i] - MultiPoly(
                        gb[j].variables, mj, order
                    ) * gb[j]
                    if s.is_zero:
                        continue
                    assert normal_form(s, list(gb), order).is_zero

    def test_reduced_basis_shape(self):
        gb = buchberger(twisted_cubic_ideal())
        order = gb.order
        lms = [g.leading_term(order)[0] for g in gb]
        # monic leading coefficients, no leading monomial divides another
        for g in gb:
            assert g.leading_term(order)[1] == 1
        for i, a in enumerate(lms):
            for j, b in enumerate(lms):
                if i != j:
                    assert not all(x <= y for x, y in zip(a, b))

    def test_determinism(self):
        a = buchberger(twisted_cubic_ideal())
        b = buchberger(twisted_cubic_ideal())
        assert [g.terms for g in a] == [g.terms for g in b]

    def test_resource_cap(self):
        gens = [
            parse_poly("x0^4 + x1^3 - x2", V3),
            parse_poly("x0^3*x1 + x2^3 - x1", V3),
            parse_poly("x1^4 - x0*x2 - x2^2", V3),
        ]
        with pytest.raises(ResourceLimitError):
            buchberger(Ideal(gens), max_terms=8)


class TestEliminate:
    def test_twisted_cubic(self):
        order = elimination_order(3, 1)
        f1 = parse_poly("x0^2 - x1", V3).with_order(order)
        f2 = parse_poly("x0^3 - x2", V3).with_order(order)
        basis = eliminate(Ideal([f1, f2], order), [0])
        assert len(basis) == 1
        assert basis[0].proportional_to(parse_poly("x1^3 - x2^2", V3))

    def test_eliminate_nothing(self):
        gb = eliminate(twisted_cubic_ideal(), [])
        assert len(gb) >= 2

    def test_unit_ideal(self):
        order = elimination_order(3, 1)
        basis = eliminate(
            Ideal([MultiPoly.constant(V3, 1, order)], order), [0]
        )
        assert len(basis) == 1 and basis[0] == MultiPoly.constant(V3, 1)

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            eliminate(twisted_cubic_ideal(), [0])


def random_conic(rng):
    while True:
        entries = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        Q = [[entries[i][j] + entries[j][i] for j in range(3)] for i in range(3)]
        det = _det3(Q)
        if det != 0:
            return Q


def _det3(Q):
    return (
        Q[0][0] * (Q[1][1] * Q[2][2] - Q[1][2] * Q[2][1])
        - Q[0][1] * (Q[1][0] * Q[2][2] - Q[1][2] * Q[2][0])
        + Q[0][2] * (Q[1][0] * Q[2][1] - Q[1][1] * Q[2][0])
    )


def _adjugate3(Q):
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [
                [Q[r][c] for c in range(3) if c != j] for r in range(3) if r != i
            ]
            cof[i][j] = (-1) ** (i + j) * (sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0])
    return [[cof[j][i] for j in range(3)] for i in range(3)]


def quadratic_form(Q, variables):
    terms = {}
    for i in range(3):
        for j in range(3):
            exp = [0, 0, 0]
            exp[i] += 1
            exp[j] += 1
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(Q[i][j])
    return MultiPoly(variables, terms)


class TestDualCurve:
    def test_conic_self_dual_diagonal(self):
        q = dual_curve(parse_poly("x0^2 - x1^2 - x2^2", V3))
        assert q.proportional_to(parse_poly("y0^2 - y1^2 - y2^2", VY))

    def test_random_conics_match_adjugate_oracle(self):
        rng = random.Random(101)
        for _ in range(6):
            Q = random_conic(rng)
            p = quadratic_form(Q, V3)
            if not p.squarefree_part().proportional_to(p):
                continue
            q = dual_curve(p)
            # dual of x^T Q x is y^T Q^{-1} y, proportional to y^T adj(Q) y
            expected = quadratic_form(_adjugate3(Q), VY)
            assert q.proportional_to(expected)

    def test_biduality_on_conics(self):
        rng = random.Random(202)
        for _ in range(4):
            Q = random_conic(rng)
            p = quadratic_form(Q, V3).normalized()
            if not p.squarefree_part().proportional_to(p):
                continue
            dd = dual_curve(dual_curve(p))
            assert dd.proportional_to(p)

    def test_gradient_points_lie_on_dual(self):
        # rational points on the parabola pencil curve: (1, t, t^2 - 1)
        p = parse_poly("x0^2 + x0*x2 - x1^2", V3)
        q = dual_curve(p)
        rng = random.Random(303)
        for _ in range(25):
            t = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            x = (Fraction(1), t, t * t - 1)
            assert p.evaluate(x) == 0
            grad = tuple(p.diff(i).evaluate(x) for i in range(3))
            assert q.evaluate(grad) == 0

    def test_appendix_cubic_golden(self):
        q = dual_curve(parse_poly(APPENDIX_P, V3))
        assert q == parse_poly(APPENDIX_Q, VY).normalized()

    def test_dual_vanishes_on_gradient_image_exactly(self):
        # q(grad p) must be divisible by p: an oracle fully independent of
        # the elimination path
        p = parse_poly(APPENDIX_P, V3)
        q = dual_curve(p)
        composed = q.rename_variables(V3).evaluate(
            [p.diff(0), p.diff(1), p.diff(2)]
        )
        assert normal_form(composed, [p]).is_zero

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            dual_curve(parse_poly("x0^2 - x1", V3))

    def test_rejects_nonsquarefree(self):
        f = parse_poly("x0 + x1", V3)
        with pytest.raises(ValueError):
            dual_curve(f * f)

    def test_line_pair_not_principal(self):
        # dual variety of two lines is two points: codimension 2
        with pytest.raises(NonPrincipalIdealError):
            dual_curve(parse_poly("x0^2 - x1^2", V3))
