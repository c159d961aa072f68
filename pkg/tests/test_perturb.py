import numpy as np
import pytest

from framekit import constructions as cons
from framekit import outer, perturb
from framekit.frame import Frame, gram, riesz_bounds
from framekit.errors import (
    BadParam,
    BudgetTooLarge,
    NotIndependent,
    NotUnitNorm,
    SingularOperator,
    TooMany,
)

from oracles import eig_desc, random_unit_vec


def test_perturbed_riesz_bounds():
    assert perturb.perturbed_riesz_bounds(1.0, 1.0, 0.0) == (1.0, 1.0)
    lo, hi = perturb.perturbed_riesz_bounds(1.0, 4.0, 0.25)
    assert (lo, hi) == (0.25, 6.25)
    with pytest.raises(BudgetTooLarge):
        perturb.perturbed_riesz_bounds(1.0, 4.0, 1.0)
    with pytest.raises(BadParam):
        perturb.perturbed_riesz_bounds(-1.0, 4.0, 0.1)


def test_perturbed_bounds_envelope_fuzz():
    rng = np.random.default_rng(61)
    for _ in range(40):
        v = rng.standard_normal((3, 3))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        f = Frame.from_vectors(v)
        g = gram(f)
        w = eig_desc(g)
        if w[-1] < 0.05:
            continue
        rb = riesz_bounds(f)
        noise = rng.standard_normal((3, 3))
        noise *= np.sqrt(0.5 * rb.lower) / np.linalg.norm(noise)
        lo, hi = perturb.perturbed_riesz_bounds(rb.lower, rb.upper,
                                                float(np.linalg.norm(noise)) ** 2)
        wp = eig_desc(gram(Frame.from_vectors(v + noise)))
        assert wp[-1] >= lo - 1e-9 and wp[0] <= hi + 1e-9


def test_outer_distance():
    e1 = np.array([1.0, 0.0])
    assert perturb.outer_distance(e1, e1) == 0.0
    assert perturb.outer_distance(e1, [0.0, 1.0]) == pytest.approx(2.0)
    mix = np.array([1.0, 1.0]) / np.sqrt(2)
    assert perturb.outer_distance(e1, mix) == pytest.approx(1.0)
    assert 2 * np.linalg.norm(e1 - mix) ** 2 == pytest.approx(2 * (2 - np.sqrt(2)))
    with pytest.raises(NotUnitNorm):
        perturb.outer_distance([2.0, 0.0], e1)


def test_outer_distance_closed_form_inequality():
    rng = np.random.default_rng(62)
    for cplx in (False, True):
        for _ in range(100):
            phi = random_unit_vec(rng, 3, cplx)
            psi = random_unit_vec(rng, 3, cplx)
            d = perturb.outer_distance(phi, psi)
            direct = np.linalg.norm(np.outer(phi, phi.conj()) - np.outer(psi, psi.conj())) ** 2
            assert abs(d - direct) <= 1e-12
            assert d <= 2 * np.linalg.norm(phi - psi) ** 2 + 1e-12


def test_independence_radius():
    assert perturb.independence_radius(outer.induce(cons.orthonormal(2))) == pytest.approx(0.5)
    assert perturb.independence_radius(
        outer.induce(cons.epsilon_pair(0.25))) == pytest.approx(0.375)
    with pytest.raises(NotIndependent):
        perturb.independence_radius(outer.induce(cons.biangular(3)))


def test_radius_protects_independence():
    rng = np.random.default_rng(63)
    for trial in range(60):
        f = cons.random_unit(2, 3, 6300 + trial)
        os_ = outer.induce(f)
        if os_.rank < 3:
            continue
        radius = perturb.independence_radius(os_)
        noise = rng.standard_normal((3, 2))
        noise *= 0.9 * np.sqrt(radius) / np.linalg.norm(noise)
        moved = f.vectors + noise
        moved /= np.linalg.norm(moved, axis=1, keepdims=True)
        if np.sum(np.abs(moved - f.vectors) ** 2) >= radius:
            continue
        assert outer.induce(Frame.from_vectors(moved)).rank == 3


def test_rescale_invariance():
    assert perturb.rescale_invariance_check(cons.eij_basis(3), np.eye(3))
    assert perturb.rescale_invariance_check(cons.eij_basis(3), np.diag([1.0, 1e-3, 1e-3]))
    rng = np.random.default_rng(64)
    for trial in range(20):
        s = rng.standard_normal((2, 2))
        if abs(np.linalg.det(s)) < 0.1:
            continue
        f = cons.random_unit(2, 3, 6400 + trial)
        assert perturb.rescale_invariance_check(f, s)
    # dependent input stays dependent under rescaling too
    dup = Frame.from_vectors(np.array([[1.0, 0.0], [1.0, 0.0]]))
    assert perturb.rescale_invariance_check(dup, np.array([[2.0, 1.0], [0.0, 1.0]]))
    with pytest.raises(SingularOperator):
        perturb.rescale_invariance_check(dup, np.zeros((2, 2)))


class TestNearbyBasis:
    def test_real_example(self):
        out = perturb.nearby_independent_basis(np.array([1.0, 0.0]), 0.5)
        assert len(out) == 3
        for v in out:
            assert np.linalg.norm(v - [1.0, 0.0]) ** 2 < 0.5
            assert abs(np.linalg.norm(v) - 1.0) <= 1e-12
        assert outer.induce(Frame.from_vectors(np.array(out))).rank == 3

    def test_large_eps_still_valid(self):
        out = perturb.nearby_independent_basis(np.array([0.0, 1.0]), 5.0)
        assert outer.induce(Frame.from_vectors(np.array(out))).rank == 3

    def test_complex_example(self):
        psi = np.array([1.0, 1.0j]) / np.sqrt(2)
        out = perturb.nearby_independent_basis(psi, 0.3)
        assert len(out) == 4
        for v in out:
            assert np.linalg.norm(v - psi) ** 2 < 0.3
        f = Frame.from_vectors(np.array(out), field="complex")
        assert outer.induce(f).rank == 4

    def test_arbitrary_reference_vectors(self):
        rng = np.random.default_rng(65)
        for trial in range(20):
            cplx = trial % 2 == 1
            psi = random_unit_vec(rng, 3, cplx)
            out = perturb.nearby_independent_basis(psi, 0.2)
            d = 9 if cplx else 6
            assert len(out) == d
            assert all(np.linalg.norm(v - psi) ** 2 < 0.2 for v in out)
            f = Frame.from_vectors(np.array(out), field="complex" if cplx else "real")
            assert outer.induce(f).rank == d

    def test_bad_eps(self):
        with pytest.raises(BadParam):
            perturb.nearby_independent_basis(np.array([1.0, 0.0]), 0.0)


class TestNudge:
    def test_identity_on_independent(self):
        f = cons.eij_basis(2)
        assert perturb.nudge_to_independence(f, 0.1) is f

    def test_repairs_duplicates(self):
        f = Frame.from_vectors(np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
        g = perturb.nudge_to_independence(f, 0.1)
        assert outer.induce(g).rank == 3
        moved = sum(np.linalg.norm(g.vectors[i] - f.vectors[i]) for i in range(3))
        assert moved < 0.1

    def test_repairs_biangular_3(self):
        f = cons.biangular(3)
        g = perturb.nudge_to_independence(f, 0.1)
        assert outer.induce(g).rank == 6
        moved = sum(np.linalg.norm(g.vectors[i] - f.vectors[i]) for i in range(6))
        assert moved < 0.1

    def test_too_many(self):
        v = np.vstack([np.eye(2), np.eye(2)])
        with pytest.raises(TooMany):
            perturb.nudge_to_independence(Frame.from_vectors(v), 0.1)

    def test_requires_unit_norm(self):
        with pytest.raises(NotUnitNorm):
            perturb.nudge_to_independence(
                Frame.from_vectors(np.array([[2.0, 0.0], [0.0, 1.0]])), 0.1)

    def test_budget_and_independence_fuzz(self):
        # dependent inputs across (n, m) grids, both metrics enforced
        cases = 0
        for n in (2, 3, 4):
            d = n * (n + 1) // 2
            for m in range(2, d + 1):
                for rep in range(4):
                    seed = 6600 + 100 * n + 10 * m + rep
                    f = cons.random_unit(n, m, seed)
                    v = f.vectors.copy()
                    v[m - 1] = -v[0]
                    f = Frame.from_vectors(v)
                    assert outer.induce(f).rank < m
                    for eps in (0.1, 0.01):
                        g = perturb.nudge_to_independence(f, eps)
                        assert outer.induce(g).rank == m
                        moved = sum(np.linalg.norm(g.vectors[i] - f.vectors[i])
                                    for i in range(m))
                        assert moved < eps
                    cases += 1
        assert cases >= 50
