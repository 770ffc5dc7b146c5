import pytest

from floerchains.arith import LaurentPoly
from floerchains.complexes import (
    ABSOLUTE,
    CYCLIC,
    ChainRanks,
    casson_from_alexander,
    euler_characteristic,
    montesinos_knot_complex,
    montesinos_link_complex,
    special_montesinos_complex,
    torus_alexander,
    torus_complex,
    torus_even_seifert_data,
    two_bridge_complex,
    two_bridge_generators,
)
from floerchains.covers import SeifertData
from floerchains.errors import (
    FlatCobordismError,
    InconsistentLkError,
    NotCoprimeError,
    NotHomologyS1xS2Error,
)
from floerchains.signatures import torus_signature


class TestTwoBridgeComplex:
    def test_figure_eight(self):
        ranks = two_bridge_complex(5, 3)
        assert ranks.r == (1, 1, 2, 1)
        assert ranks.anchoring == ABSOLUTE

    def test_trefoil(self):
        ranks = two_bridge_complex(3, 1)
        assert ranks.total == 3
        assert euler_characteristic(ranks).value == 1
        special = next(
            e for e in two_bridge_generators(3, 1).entries if e.origin == "special"
        )
        assert special.grading == 2

    def test_unknot(self):
        assert two_bridge_complex(1, 1).r == (1, 0, 0, 0)

    def test_generator_structure(self):
        gens = two_bridge_generators(5, 3)
        assert sum(1 for e in gens.entries if e.origin == "special") == 1
        circle_ids = {e.class_id for e in gens.entries if e.origin == "reducible"}
        assert circle_ids == {1, 2}


class TestSpecialMontesinos:
    def test_examples(self):
        assert special_montesinos_complex(2, 3, 7).r == (3, 2, 2, 2)
        assert special_montesinos_complex(2, 3, 5).r == (3, 2, 2, 2)
        assert special_montesinos_complex(1, 1, 1).r == (1, 0, 0, 0)

    def test_euler_characteristic_is_one(self):
        for pqr in [(2, 3, 7), (2, 3, 11), (3, 4, 5)]:
            assert euler_characteristic(special_montesinos_complex(*pqr)).value == 1


class TestMontesinosKnotComplex:
    def test_worked_example_with_pin(self):
        data = SeifertData(((2, -1), (3, 1), (3, 1)))
        gens = montesinos_knot_complex(data, -6, (2, 0, 0, 2))
        assert gens.ranks().r == (2, 1, 2, 2)
        assert euler_characteristic(gens.ranks()).value == 1
        special = [e for e in gens.entries if e.origin == "special"]
        assert len(special) == 1 and special[0].grading == 2
        reducible = sorted(e.grading for e in gens.entries if e.origin == "reducible")
        assert reducible == [1, 2]

    def test_without_pin_is_partial(self):
        data = SeifertData(((2, -1), (3, 1), (3, 1)))
        gens = montesinos_knot_complex(data, -6)
        assert gens.ranks() is None
        assert gens.unknown == 4
        assert any("unknown gradings" in w for w in gens.warnings)

    def test_homology_sphere_matches_brieskorn_route(self):
        data = SeifertData(((2, 1), (3, 1), (7, -6)))
        gens = montesinos_knot_complex(data, -8)
        assert gens.ranks().r == special_montesinos_complex(2, 3, 7).r

    def test_flat_cobordism_violation(self):
        with pytest.raises(FlatCobordismError):
            montesinos_knot_complex(SeifertData(((3, 1), (3, 1), (3, 1))), 0)

    def test_even_fiber_grading_flag(self):
        # |H1| = 3, flat, and the character is nontrivial on the 6-fiber
        data = SeifertData(((6, -1), (3, 1), (5, -1)))
        gens = montesinos_knot_complex(data, 0)
        reducible = [e for e in gens.entries if e.origin == "reducible"]
        assert all(e.grading is None for e in reducible)
        assert any("even-multiplicity fiber" in w for w in gens.warnings)

    def test_block_validation(self):
        data = SeifertData(((2, -1), (3, 1), (3, 1)))
        with pytest.raises(ValueError):
            montesinos_knot_complex(data, -6, (1, 0, 0, 2))
        with pytest.raises(ValueError):
            montesinos_knot_complex(data, -6, (2, 0, 2))
        # right total but not decomposable into mu, mu+1 class pairs
        with pytest.raises(ValueError):
            montesinos_knot_complex(data, -6, (4, 0, 0, 0))
        with pytest.raises(ValueError):
            montesinos_knot_complex(data, -6, (1, 1, 1, 1))
        for good in ((2, 0, 0, 2), (2, 2, 0, 0), (0, 2, 2, 0), (0, 0, 2, 2)):
            assert montesinos_knot_complex(data, -6, good).ranks() is not None


class TestTorusComplex:
    def test_3_5(self):
        result = torus_complex(3, 5)
        assert result.total_rank == 9
        assert result.ranks.r == (3, 2, 2, 2)
        assert result.ranks.conjectural
        assert result.special_grading == 0

    def test_3_7(self):
        result = torus_complex(3, 7)
        assert result.total_rank == 1 + 4 * (-torus_signature(3, 7) // 4) == 9

    def test_even_q_routed_through_seifert_data(self):
        data = torus_even_seifert_data(3, 4)
        from floerchains.seifert import absorb_trivial_fibers

        assert absorb_trivial_fibers(data).pairs in (
            ((2, -1), (3, 1), (3, 1)),
            ((3, -2), (3, 1), (2, 1)),
        )
        gens = montesinos_knot_complex(data, torus_signature(3, 4), (2, 0, 0, 2))
        assert gens.ranks().r == (2, 1, 2, 2)

    def test_rejects_even_input(self):
        with pytest.raises(ValueError):
            torus_complex(3, 4)


class TestMontesinosLinkComplex:
    def test_pretzel_2_m3_m6(self):
        data = SeifertData(((2, 1), (3, -1), (6, -1)))
        result = montesinos_link_complex(data, 4)
        assert result.ranks.anchoring == CYCLIC
        assert result.ranks.r == (0, 2, 0, 2)
        assert result.so3_classes == 1
        assert result.su2_classes == 2
        assert result.split in ((1, 0), (0, 1))

    def test_montesinos_link_2_5_10(self):
        data = SeifertData(((2, 1), (5, -2), (10, -1)))
        result = montesinos_link_complex(data, 4)
        assert result.ranks.r == (2, 4, 2, 4)
        assert result.so3_classes == 3

    def test_ambiguous_without_lk(self):
        data = SeifertData(((2, 1), (5, -2), (10, -1)))
        result = montesinos_link_complex(data)
        assert result.ambiguous
        assert result.ranks is None
        assert all(c.total == 12 for c in result.candidates)
        assert any("ambiguous split" in w for w in result.warnings)

    def test_inconsistent_lk(self):
        data = SeifertData(((2, 1), (3, -1), (6, -1)))
        with pytest.raises(InconsistentLkError):
            montesinos_link_complex(data, 2)
        with pytest.raises(InconsistentLkError):
            montesinos_link_complex(data, 12)

    def test_requires_zero_euler_number(self):
        with pytest.raises(NotHomologyS1xS2Error):
            montesinos_link_complex(SeifertData(((2, 1), (3, 1), (7, -6))), 4)

    def test_total_matches_alexander_route(self):
        data = SeifertData(((2, 1), (5, -2), (10, -1)))
        result = montesinos_link_complex(data, 4)
        lam = casson_from_alexander(torus_alexander(2, 5))
        assert result.so3_classes == -lam

    def test_trefoil_surgery_route(self):
        data = SeifertData(((2, 1), (3, -1), (6, -1)))
        result = montesinos_link_complex(data, 4)
        lam = casson_from_alexander(torus_alexander(2, 3))
        assert result.so3_classes == -lam == 1


class TestEulerCharacteristic:
    def test_examples(self):
        assert euler_characteristic(ChainRanks((1, 1, 2, 1))).value == 1
        assert euler_characteristic(ChainRanks((3, 2, 2, 2))).value == 1
        chi = euler_characteristic(ChainRanks((2, 0, 2, 0), CYCLIC))
        assert abs(chi.value) == 4
        assert chi.up_to_sign


class TestAlexanderRoutes:
    def test_torus_alexander(self):
        assert torus_alexander(2, 3) == LaurentPoly({1: 1, 0: -1, -1: 1})
        assert torus_alexander(2, 5) == LaurentPoly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1})
        assert torus_alexander(1, 5) == LaurentPoly.constant(1)

    def test_casson_from_alexander(self):
        assert casson_from_alexander(torus_alexander(2, 3)) == -1
        assert casson_from_alexander(torus_alexander(2, 5)) == -3
        assert casson_from_alexander(LaurentPoly.constant(1)) == 0

    def test_rejects_common_factor(self):
        with pytest.raises(NotCoprimeError):
            torus_alexander(4, 6)

    def test_symmetric_normalized_family(self):
        for p, q in [(2, 7), (3, 4), (3, 5), (4, 5), (5, 6)]:
            delta = torus_alexander(p, q)
            assert delta(1) == 1
            assert delta.is_symmetric()


class TestChainRanksType:
    def test_validation(self):
        with pytest.raises(ValueError):
            ChainRanks((1, 2, 3))
        with pytest.raises(ValueError):
            ChainRanks((1, -1, 0, 0))
        with pytest.raises(ValueError):
            ChainRanks((1, 0, 0, 0), "diagonal")
