import random

import pytest

from floerchains.arith import LaurentPoly
from floerchains.covers import (
    CoverHomology,
    SeifertData,
    branched_cover_h1,
    cup_form,
    grading_shift_delta,
    seifert_h1_order,
)


class TestBranchedCoverH1:
    def test_unknot(self):
        hom = branched_cover_h1(LaurentPoly.constant(1))
        assert (hom.b1, hom.h1_order) == (0, 1)

    def test_trefoil(self):
        hom = branched_cover_h1(LaurentPoly({1: 1, 0: -1, -1: 1}))
        assert (hom.b1, hom.h1_order) == (0, 3)

    def test_zero_surgery_branch(self):
        # a two-component link polynomial vanishing at -1
        hom = branched_cover_h1(LaurentPoly({1: 1, 0: 2, -1: 1}))
        assert hom.b1 == 1 and hom.h1_order is None

    def test_order_is_odd_for_knot_polynomials(self):
        rng = random.Random(1)
        for _ in range(60):
            coeffs = {}
            for e in range(1, rng.randint(2, 5)):
                c = rng.randint(-3, 3)
                coeffs[e] = c
                coeffs[-e] = c
            tail = 2 * sum(coeffs.get(e, 0) for e in range(1, 6))
            coeffs[0] = (1 if rng.random() < 0.5 else -1) - tail
            delta = LaurentPoly(coeffs)
            assert abs(delta(1)) == 1
            hom = branched_cover_h1(delta)
            assert hom.h1_order % 2 == 1


class TestCupFormAndDelta:
    @pytest.mark.parametrize("lk,want", [(1, 1), (0, 0), (4, 0)])
    def test_cup_examples(self, lk, want):
        assert cup_form(lk) == want

    @pytest.mark.parametrize("lk,want", [(1, 0), (4, 1), (0, 1)])
    def test_delta_examples(self, lk, want):
        assert grading_shift_delta(lk) == want

    def test_complementary_parities(self):
        for lk in range(-7, 8):
            assert grading_shift_delta(lk) + cup_form(lk) == 1


class TestSeifertH1Order:
    def test_examples(self):
        assert seifert_h1_order(SeifertData(((2, -1), (3, 1), (3, 1)))) == 3
        assert seifert_h1_order(SeifertData(((2, 1), (3, -1), (6, -1)))) == 0
        assert seifert_h1_order(SeifertData(((2, 1), (3, 1), (5, -4)))) == 1

    def test_normalization_invariance(self):
        rng = random.Random(2)
        for _ in range(100):
            pairs = []
            for _ in range(rng.randint(1, 4)):
                a = rng.randint(1, 9)
                b = rng.choice([b for b in range(-9, 10) if b and __import__("math").gcd(a, b) == 1])
                pairs.append((a, b))
            data = SeifertData(tuple(pairs))
            i = rng.randrange(len(pairs))
            moved = list(pairs)
            moved[i] = (pairs[i][0], pairs[i][1] + pairs[i][0])
            moved.append((1, -1))
            assert seifert_h1_order(SeifertData(tuple(moved))) == seifert_h1_order(data)

    def test_validation(self):
        with pytest.raises(ValueError):
            SeifertData(((4, 2),))
        with pytest.raises(ValueError):
            SeifertData(())
        with pytest.raises(ValueError):
            SeifertData(((0, 1),))


class TestCoverHomologyType:
    def test_marker_consistency(self):
        with pytest.raises(ValueError):
            CoverHomology(b1=1, h1_order=5)
        with pytest.raises(ValueError):
            CoverHomology(b1=0, h1_order=None)
