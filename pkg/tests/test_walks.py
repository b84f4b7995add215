import pytest

from braidwalks import (
    BraidWord,
    CrossingWord,
    LaurentPolynomial,
    NotAKnotError,
    OperatorMonomial,
    OperatorPolynomial,
    cancellation_pairing,
    enumerate_paths,
    enumerate_walks,
    evaluate_monomial,
    evaluate_series,
    op_mul,
    parse_braid,
    series_terms,
    walk_sum_C,
    walk_weight,
)

FIG8 = parse_braid("1 -2 1 -2", 3)
ONE = LaurentPolynomial.one()
Q = LaurentPolynomial.term(1)


def fig8_walks():
    walks = enumerate_walks(FIG8, simple_only=True)
    assert len(walks) == 2
    a = next(w for w in walks if w.J == (3,))
    b = next(w for w in walks if w.J == (2, 3))
    return a, b


class TestPaths:
    def test_empty_braid_trivial_path(self):
        paths = enumerate_paths(BraidWord(3, ()), 2)
        assert len(paths) == 1
        p = paths[0]
        assert (p.start, p.end) == (2, 2)
        assert p.letters == ()
        assert p.footprint == ((0, 2),)

    def test_single_positive_crossing_from_2(self):
        b = parse_braid("1", 2)
        paths = enumerate_paths(b, 2)
        assert len(paths) == 1
        assert paths[0].end == 1
        assert paths[0].letters == ((1, "b"),)

    def test_fig8_from_2_contains_reference_path(self):
        paths = enumerate_paths(FIG8, 2)
        wanted = [p for p in paths if dict(p.letters) == {4: "b", 2: "a"}]
        assert len(wanted) == 1
        assert wanted[0].end == 3

    def test_footprints_are_valid_trajectories(self):
        for start in (1, 2, 3):
            for p in enumerate_paths(FIG8, start):
                gaps = [cell[0] for cell in p.footprint]
                assert gaps == list(range(len(FIG8), -1, -1))
                assert p.footprint[0] == (len(FIG8), start)
                assert p.footprint[-1] == (0, p.end)

    def test_rejects_bad_start(self):
        with pytest.raises(ValueError):
            enumerate_paths(FIG8, 4)


class TestWalks:
    def test_fig8_two_simple_walks(self):
        a, b = fig8_walks()
        assert a.pi == {3: 3}
        assert b.pi == {2: 3, 3: 2}
        assert b.inversions() == 1

    def test_single_positive_crossing_no_walks(self):
        assert enumerate_walks(parse_braid("1", 2), simple_only=False) == []

    def test_empty_braid_no_walks(self):
        assert enumerate_walks(BraidWord(3, ()), simple_only=False) == []


class TestWalkWeight:
    def test_walk_A(self):
        a, _ = fig8_walks()
        weight = walk_weight(a, FIG8)
        assert weight.coeff == Q
        assert weight.words == {
            2: CrossingWord(-1, "a"),
            4: CrossingWord(-1, "a"),
        }

    def test_walk_B(self):
        _, b = fig8_walks()
        weight = walk_weight(b, FIG8)
        assert weight.coeff == LaurentPolynomial.term(3)
        assert weight.words == {
            1: CrossingWord(1, "c"),
            2: CrossingWord(-1, "a"),
            3: CrossingWord(1, "b"),
            4: CrossingWord(-1, "bc"),
        }

    def test_single_path_walk_coeff_is_q(self):
        walks = enumerate_walks(parse_braid("-1", 2), simple_only=True)
        assert len(walks) == 1
        assert walk_weight(walks[0], parse_braid("-1", 2)).coeff == Q


class TestOperatorAlgebra:
    def test_AB_equals_q_BA(self):
        a, b = fig8_walks()
        A = OperatorPolynomial.from_monomial(walk_weight(a, FIG8))
        B = OperatorPolynomial.from_monomial(walk_weight(b, FIG8))
        assert op_mul(A, B) == op_mul(B, A).scaled(Q)

    def test_identity_is_unit(self):
        _, b = fig8_walks()
        B = OperatorPolynomial.from_monomial(walk_weight(b, FIG8))
        one = OperatorPolynomial.one()
        assert op_mul(one, B) == B
        assert op_mul(B, one) == B

    def test_square_is_bilinear(self):
        a, b = fig8_walks()
        A = OperatorPolynomial.from_monomial(walk_weight(a, FIG8))
        B = OperatorPolynomial.from_monomial(walk_weight(b, FIG8))
        total = A + B
        expanded = (
            op_mul(A, A) + op_mul(A, B) + op_mul(B, A) + op_mul(B, B)
        )
        assert op_mul(total, total) == expanded


class TestWalkSum:
    def test_fig8_C_has_two_monomials(self):
        C = walk_sum_C(FIG8, simple_only=True)
        assert len(C) == 2
        a, b = fig8_walks()
        expected = OperatorPolynomial.from_monomial(
            walk_weight(a, FIG8)
        ) + OperatorPolynomial.from_monomial(walk_weight(b, FIG8))
        assert C == expected

    def test_single_positive_crossing_C_is_zero(self):
        assert not walk_sum_C(parse_braid("1", 2))


class TestEvaluation:
    def test_E2_of_walk_A(self):
        a, _ = fig8_walks()
        value = evaluate_monomial(walk_weight(a, FIG8), 2)
        assert value == Q * (ONE - LaurentPolynomial.term(-1)) ** 2

    def test_E2_of_walk_B(self):
        _, b = fig8_walks()
        value = evaluate_monomial(walk_weight(b, FIG8), 2)
        assert value == LaurentPolynomial.term(3) * (ONE - LaurentPolynomial.term(-1))

    def test_empty_monomial(self):
        assert evaluate_monomial(OperatorMonomial(ONE, {}), 2) == ONE


class TestSeries:
    def test_fig8_N2_series(self):
        C = walk_sum_C(FIG8)
        qinv = LaurentPolynomial.term(-1)
        expected = (
            ONE
            + Q * (ONE - qinv) ** 2
            + LaurentPolynomial.term(3) * (ONE - qinv)
        )
        assert evaluate_series(C, FIG8, 2) == expected

    def test_fig8_terms_vanish_from_N(self):
        C = walk_sum_C(FIG8)
        for N in (2, 3, 4):
            terms = series_terms(C, FIG8, N, 2 * (N - 1))
            for n, term in enumerate(terms):
                if n >= N:
                    assert term.is_zero()

    def test_zero_C_gives_one(self):
        b = parse_braid("1", 2)
        assert evaluate_series(OperatorPolynomial.zero(), b, 2) == ONE

    def test_rejects_non_knot(self):
        hopf = parse_braid("1 1", 2)
        with pytest.raises(NotAKnotError):
            evaluate_series(walk_sum_C(hopf), hopf, 2)


class TestCancellation:
    @pytest.mark.parametrize(
        "text,strands",
        [("1 -2 1 -2", 3), ("1 1 1", 2), ("", 1), ("1 2 1 2", 3), ("-1 2 -1 2", 3)],
    )
    def test_pairing(self, text, strands):
        assert cancellation_pairing(parse_braid(text, strands))
