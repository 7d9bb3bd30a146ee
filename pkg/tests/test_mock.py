"""Mock theta coefficient streams: incremental vs reference route, frozen
head coefficients, valuation schedules, structural relations.
"""

import pytest

from qseries.mock import (
    MockThetaId,
    mock_coefficient,
    mock_series,
    mock_series_reference,
    valuation_schedule,
)
from qseries.products import eta_quotient, pochhammer, PochhammerSpec
from qseries.series import TruncatedSeries

# frozen from the reference (from-scratch Pochhammer) route
HEADS = {
    MockThetaId.MU: [1, -1, 1, 2, -1, -4, 1, 5, -2, -5, 4, 7, -4, -11, 3, 13],
    MockThetaId.SIGMA: [0, 1, 1, 2, 3, 3, 5, 7, 8, 11, 14, 17, 22, 28, 33, 41],
    MockThetaId.BETA: [0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 7, 10, 11, 14, 15, 19],
    MockThetaId.LAMBDA: [1, -1, 3, -5, 6, -7, 11, -16, 18, -21, 30, -40, 47, -56, 72, -92],
    MockThetaId.V: [0, 1, 1, 1, 2, 3, 3, 4, 5, 6, 8, 9, 11, 14, 16, 19],
    MockThetaId.NU: [0, 1, 3, 5, 8, 14, 22, 33, 51, 74, 105, 151, 210, 289, 398, 537],
    MockThetaId.PHI6: [1, -1, 2, -1, 1, -3, 3, -3, 4, -4, 6, -6, 5, -9, 11, -10],
    MockThetaId.PSI6: [0, 1, -1, 1, -2, 3, -2, 2, -4, 5, -5, 5, -7, 9, -8, 9],
}


@pytest.mark.parametrize("mock_id", list(MockThetaId))
def test_frozen_heads(mock_id):
    assert mock_series(mock_id, 16).coefficients() == HEADS[mock_id]


@pytest.mark.parametrize("mock_id", list(MockThetaId))
def test_incremental_matches_reference(mock_id):
    assert mock_series(mock_id, 100) == mock_series_reference(mock_id, 100)


@pytest.mark.parametrize("mock_id", list(MockThetaId))
@pytest.mark.parametrize("big,small", [(50, 17), (200, 50)])
def test_truncation_stability(mock_id, big, small):
    assert mock_series(mock_id, big).truncate(small) == mock_series(mock_id, small)


class TestValuationSchedule:
    def test_examples(self):
        assert valuation_schedule(MockThetaId.V, 3) == 16
        assert valuation_schedule(MockThetaId.BETA, 0) == 1
        assert valuation_schedule(MockThetaId.LAMBDA, 7) == 7

    @pytest.mark.parametrize("mock_id", list(MockThetaId))
    def test_strictly_increasing(self, mock_id):
        values = [valuation_schedule(mock_id, n) for n in range(50)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError):
            valuation_schedule(MockThetaId.MU, -1)


class TestAccessors:
    def test_name_lookup(self):
        assert MockThetaId.from_name("LAMBDA") is MockThetaId.LAMBDA
        with pytest.raises(KeyError):
            MockThetaId.from_name("omega")

    def test_coefficient_convention(self):
        assert mock_coefficient("v", -3) == 0
        assert mock_coefficient("v", 5) == 3

    def test_cache_grows_consistently(self):
        # requests in any order must agree; the memo only ever grows
        a = mock_series("nu", 37)
        b = mock_series("nu", 120)
        c = mock_series("nu", 80)
        assert b.truncate(37) == a
        assert b.truncate(80) == c


class TestStructuralRelations:
    def test_mu_shifted_plus_four_v(self):
        # mu(-q^2) + 4 v(q) as two Pochhammer-product terms
        order = 400

        def poch(sign, a, step):
            return pochhammer(PochhammerSpec(sign, a, step), order)

        lhs = mock_series("mu", order // 2).alternate().substitute(2) + mock_series(
            "v", order
        ).scale(4)
        t1 = (
            poch(1, 4, 4) * poch(-1, 2, 4) ** 3
            / (poch(1, 2, 4) ** 2 * poch(-1, 4, 4) ** 2)
        )
        t2 = (
            poch(1, 8, 8) * poch(-1, 4, 4) / (poch(1, 4, 8) * poch(1, 2, 4))
        ).shift(1).scale(4)
        agree, diff = lhs.agrees_with(t1 + t2, upto=order)
        assert agree, diff

    def test_nu_even_part_vs_sigma_twist(self):
        order = 400
        lhs = mock_series("nu", order // 2).substitute(2) - mock_series(
            "sigma", order
        ).alternate()
        rhs = eta_quotient({4: 2, 12: 2, 2: -2, 6: -1}, order - 1).shift(1)
        agree, diff = lhs.agrees_with(rhs, upto=order - 1)
        assert agree, diff

    def test_sixth_order_triple_relation(self):
        order = 400
        sub = -(-order // 3) + 1
        lhs = (
            mock_series("phi6", sub).substitute(3)
            + mock_series("psi6", sub).substitute(3).shift(-1).scale(2)
            + mock_series("beta", order).scale(2)
        )
        rhs = eta_quotient({2: 1, 3: 5, 1: -2, 6: -3}, order)
        agree, diff = lhs.agrees_with(rhs, upto=order - 1)
        assert agree, diff

    def test_twist_matches_resummation(self):
        # sign twisting the finished series equals summing with -q substituted
        order = 60
        twisted = mock_series("sigma", order).alternate()
        resummed = TruncatedSeries.zero(order)
        n = 0
        while valuation_schedule(MockThetaId.SIGMA, n) < order:
            # sigma(-q) term n: (-q)^((n+1)(n+2)/2) (q... with alternating signs
            # handled by building the term at q and twisting it; independence
            # comes from the reference Pochhammer route
            from qseries.mock import mock_term_reference

            resummed = resummed + mock_term_reference(
                MockThetaId.SIGMA, n, order
            ).alternate()
            n += 1
        assert twisted == resummed
