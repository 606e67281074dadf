import math
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from parafermions import coset as co
from parafermions import fullcft as fc
from parafermions import fusion as fu
from parafermions import smatrix as sm
from parafermions.errors import LabelError, NonIntegerFusionError, VacuumError

DELTA = (1 + math.sqrt(5)) / 2


def w(mu, nu, k=3):
    return sm.CosetWeight(mu, nu, k)


class TestVerlinde:
    def test_su2_2(self):
        ring = fu.verlinde(sm.s_su2k(2))
        assert ring.product(1, 1) == Counter({0: 1, 2: 1})

    def test_vacuum_is_identity(self):
        ring = fu.verlinde(co.coset_s_compact(3).s)
        vac = ring.labels[ring.vacuum_index]
        for lab in ring.labels:
            assert ring.product(vac, lab) == Counter({lab: 1})

    def test_epsilon_squared_hits_both_orbits(self):
        ring = fu.verlinde(co.coset_s_compact(3).s)
        dec = sm.orbit_decomposition_suk2(3)
        outcome_orbits = sorted(dec.orbit_of(x)[0]
                                for x in ring.product(w(0, 1), w(0, 1)))
        assert outcome_orbits == [0, 1]  # one vacuum-orbit, one eps-orbit

    def test_non_integer_rejected(self):
        bad = sm.SMatrix((0, 1), np.array([[0.8, 0.6], [0.6, -0.8]]))
        with pytest.raises((NonIntegerFusionError, VacuumError)):
            fu.verlinde(bad)

    @pytest.mark.parametrize("k", range(2, 7))
    def test_axioms(self, k):
        fu.verlinde(co.coset_s_compact(k).s).check_axioms()


class TestClosedForms:
    def test_su2k_simple_current(self):
        assert fu.fusion_su2k_closed(3, 1, 3) == {2}

    def test_su2k_k2(self):
        assert fu.fusion_su2k_closed(1, 1, 2) == {0, 2}

    def test_su2k_vacuum(self):
        for l2 in range(4):
            assert fu.fusion_su2k_closed(0, l2, 3) == {l2}

    def test_su2k_out_of_range(self):
        with pytest.raises(LabelError):
            fu.fusion_su2k_closed(4, 0, 3)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_su2k_matches_verlinde(self, k):
        ring = fu.verlinde(sm.s_su2k(k))
        for a in range(k + 1):
            for b in range(k + 1):
                closed = {c: 1 for c in fu.fusion_su2k_closed(a, b, k)}
                assert closed == dict(ring.product(a, b))

    def test_sigma2_squared(self):
        # k=3: (Lam0+Lam2) x (Lam0+Lam2) = (Lam2+Lam2) + (Lam0+Lam1)
        got = fu.fusion_coset_closed(w(0, 2), w(0, 2))
        assert got == Counter({w(2, 2): 1, w(0, 1): 1})

    @pytest.mark.parametrize("k", range(2, 7))
    def test_simple_current_action(self, k):
        j = sm.CosetWeight(1, 1, k)
        for weight in sm.canonical_weights(k):
            expected = sm.CosetWeight(weight.mu + 1, weight.nu + 1, k)
            assert fu.fusion_coset_closed(j, weight) == Counter({expected: 1})

    @pytest.mark.parametrize("k", range(2, 7))
    def test_coset_matches_verlinde(self, k):
        ring = fu.verlinde(co.coset_s_compact(k).s)
        for a in ring.labels:
            for b in ring.labels:
                assert fu.fusion_coset_closed(a, b) == ring.product(a, b)


class TestQuantumDimensions:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_su2k_simple_current_dimension(self, k):
        dims = fu.quantum_dimensions(sm.s_su2k(k))
        assert dims[k] == pytest.approx(1.0)

    def test_k3_coset(self):
        s = co.coset_s_compact(3).s
        dims = fu.quantum_dimensions(s)
        assert dims[w(0, 1)] == pytest.approx(DELTA, abs=1e-7)
        assert sorted(round(d, 7) for d in dims.values()) == \
            [1.0, 1.0, 1.0] + [round(DELTA, 7)] * 3
        assert fu.total_quantum_dimension(s) == pytest.approx(
            math.sqrt(3 * (DELTA + 2)), abs=1e-10)

    @pytest.mark.parametrize("k", range(2, 7))
    def test_dimension_homomorphism(self, k):
        for s in (co.coset_s_compact(k).s, fc.full_s_product(k)):
            ring = fu.verlinde(s)
            dims = fu.quantum_dimensions(s)
            d = np.array([dims[lab] for lab in ring.labels])
            lhs = np.einsum("abc,c->ab", ring.tensor, d)
            rhs = np.outer(d, d)
            assert np.max(np.abs(lhs - rhs)) < 1e-8


class TestModularRelations:
    @pytest.mark.parametrize("k", range(2, 7))
    def test_su2k(self, k):
        s = sm.s_su2k(k)
        t = fu.TData({l: sm.dim_su2k(l, k) for l in s.labels},
                     Fraction(3 * k, k + 2))
        report = fu.verify_modular_relations(s, t)
        assert report.passed
        # su(2)_k is self-conjugate: C must be the identity
        assert np.all(fu.charge_conjugation(s) == np.eye(k + 1))

    @pytest.mark.parametrize("k", range(2, 7))
    def test_coset(self, k):
        data = co.coset_s_compact(k)
        report = fu.verify_modular_relations(
            data.s, fu.TData(data.dims, data.central_charge))
        assert report.passed

    def test_t_phases_unimodular(self):
        data = co.coset_s_compact(4)
        t = fu.TData(data.dims, data.central_charge)
        for lab in data.s.labels:
            assert abs(abs(t.phase(lab)) - 1) < 1e-12
