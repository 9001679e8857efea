import numpy as np
import pytest
from scipy import stats

from coslam.geometry import (
    FramePoint,
    GroupElement,
    act,
    alpha_p,
    base_point,
    cos_angle,
    frame_of,
    group_compose,
    group_inverse,
    haar_batch,
    haar_sample,
    perp,
    quat_embed,
    quat_parts,
    quat_structure_error,
    torus_point,
)
from coslam.spectral import FieldTag, GrassmannSignature

R, C, H = FieldTag.REAL, FieldTag.COMPLEX, FieldTag.QUATERNION

ALL_FIELDS = [R, C, H]


def sig(n, p, field):
    return GrassmannSignature(n, p, field)


def quat_real_realization(alpha, beta):
    """Quaternionic matrix as an R-linear map (left multiplication), for the
    determinant bridge oracle."""
    a, b = alpha.real, alpha.imag
    c, d = beta.real, beta.imag
    r, s = a.shape
    out = np.zeros((4 * r, 4 * s))
    for i in range(r):
        for j in range(s):
            out[4 * i: 4 * i + 4, 4 * j: 4 * j + 4] = [
                [a[i, j], -b[i, j], -c[i, j], -d[i, j]],
                [b[i, j], a[i, j], -d[i, j], c[i, j]],
                [c[i, j], d[i, j], a[i, j], -b[i, j]],
                [d[i, j], -c[i, j], b[i, j], a[i, j]],
            ]
    return out


class TestQuaternionEmbedding:
    def test_round_trip_and_structure(self, rng):
        alpha = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
        beta = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
        m = quat_embed(alpha, beta)
        a2, b2 = quat_parts(m)
        assert np.allclose(a2, alpha) and np.allclose(b2, beta)
        assert quat_structure_error(m) == 0.0

    def test_embedding_is_multiplicative(self, rng):
        a1 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        b1 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        a2 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        b2 = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        lhs = quat_embed(a1, b1) @ quat_embed(a2, b2)
        # (a1 + b1 j)(a2 + b2 j) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) j
        rhs = quat_embed(a1 @ a2 - b1 @ b2.conj(), a1 @ b2 + b1 @ a2.conj())
        assert np.abs(lhs - rhs).max() < 1e-12

    def test_determinant_bridge(self, rng):
        # |det_R M| from the real realization == |det_C(embedding)|^2
        for _ in range(5):
            alpha = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            beta = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            det_r = abs(np.linalg.det(quat_real_realization(alpha, beta)))
            det_c = abs(np.linalg.det(quat_embed(alpha, beta)))
            assert abs(det_r - det_c**2) < 1e-10 * max(1.0, det_r)


class TestValidation:
    def test_group_element_must_be_special(self):
        s = sig(2, 1, R)
        with pytest.raises(ValueError):
            GroupElement(s, 2.0 * np.eye(3))
        GroupElement(s, np.eye(3))

    def test_frame_must_be_orthonormal(self):
        s = sig(2, 1, R)
        with pytest.raises(ValueError):
            FramePoint(s, np.array([[1.0], [1.0], [0.0]]))

    def test_quaternionic_structure_enforced(self):
        s = sig(1, 1, H)
        bad = np.eye(4, dtype=complex)
        bad[0, 1] = 1e-3  # breaks the block symmetry
        with pytest.raises(ValueError):
            GroupElement(s, bad)


class TestAlpha:
    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_identity(self, field):
        s = sig(3, 2, field)
        u = 2 if field is H else 1
        g = GroupElement(s, np.eye(4 * u, dtype=complex if field is not R else float))
        assert abs(alpha_p(s, g) - 1.0) < 1e-14

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_torus_value(self, field, rng):
        s = sig(4, 2, field)
        for _ in range(5):
            t = rng.uniform(0, np.pi, s.p)
            got = alpha_p(s, torus_point(s, t))
            assert abs(got - np.abs(np.cos(t)).prod()) < 1e-12

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_symmetric_under_inverse(self, field, rng):
        s = sig(3, 2, field)
        for _ in range(20):
            k = haar_sample(s, rng)
            assert abs(alpha_p(s, k) - alpha_p(s, group_inverse(k))) < 1e-12


class TestCosAngle:
    def test_equal_frames(self, rng):
        for field in ALL_FIELDS:
            s = sig(3, 2, field)
            b = act(haar_sample(s, rng), base_point(s))
            assert abs(cos_angle(b, b) - 1.0) < 1e-12

    def test_perpendicular_frames(self, rng):
        for field in ALL_FIELDS:
            s = sig(3, 2, field)
            b = act(haar_sample(s, rng), base_point(s))
            assert cos_angle(b, perp(b)) < 1e-12

    def test_circle_case(self):
        s = sig(1, 1, R)
        e1 = base_point(s)
        for theta in np.linspace(0.0, np.pi, 13):
            b = FramePoint(s, np.array([[np.cos(theta)], [np.sin(theta)]]))
            assert abs(cos_angle(b, e1) - abs(np.cos(theta))) < 1e-14

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_agrees_with_cocycle(self, field, rng):
        s = sig(4, 2, field)
        bo = base_point(s)
        for _ in range(20):
            k = haar_sample(s, rng)
            h = haar_sample(s, rng)
            lhs = cos_angle(act(k, bo), act(h, bo))
            rhs = alpha_p(s, group_compose(group_inverse(h), k))
            assert abs(lhs - rhs) < 1e-10

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_symmetry(self, field, rng):
        s = sig(3, 2, field)
        bo = base_point(s)
        for _ in range(10):
            b = act(haar_sample(s, rng), bo)
            c = act(haar_sample(s, rng), bo)
            assert abs(cos_angle(b, c) - cos_angle(c, b)) < 1e-12

    def test_signature_mismatch_rejected(self, rng):
        b = base_point(sig(3, 2, R))
        c = base_point(sig(3, 2, C))
        with pytest.raises(ValueError):
            cos_angle(b, c)


class TestPerp:
    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_base_point_complement(self, field):
        s = sig(3, 2, field)
        bo = base_point(s)
        w = torus_point(s, np.full(s.p, np.pi / 2.0))
        assert abs(cos_angle(perp(bo), act(w, bo)) - 1.0) < 1e-12

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_involution(self, field, rng):
        s = sig(3, 2, field)
        b = act(haar_sample(s, rng), base_point(s))
        assert abs(cos_angle(perp(perp(b)), b) - 1.0) < 1e-12

    def test_circle_rotation(self):
        s = sig(1, 1, R)
        theta = 0.7
        b = FramePoint(s, np.array([[np.cos(theta)], [np.sin(theta)]]))
        target = FramePoint(s, np.array([[-np.sin(theta)], [np.cos(theta)]]))
        assert abs(cos_angle(perp(b), target) - 1.0) < 1e-12

    def test_requires_split_rank(self):
        with pytest.raises(ValueError):
            perp(base_point(sig(4, 2, R)))


class TestTorus:
    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_zero_angles_identity(self, field):
        s = sig(4, 2, field)
        g = torus_point(s, np.zeros(s.p))
        size = g.mat.shape[0]
        assert np.abs(g.mat - np.eye(size)).max() < 1e-15

    def test_right_angles_give_swap(self):
        s = sig(3, 2, R)
        w = torus_point(s, np.array([np.pi / 2, np.pi / 2]))
        expected = np.block([[np.zeros((2, 2)), -np.eye(2)], [np.eye(2), np.zeros((2, 2))]])
        assert np.abs(w.mat - expected).max() < 1e-15

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_lands_in_compact_group(self, field, rng):
        s = sig(5, 2, field)
        t = rng.uniform(-np.pi, np.pi, s.p)
        g = torus_point(s, t)
        size = g.mat.shape[0]
        assert np.abs(g.mat.conj().T @ g.mat - np.eye(size)).max() < 1e-13


class TestHaar:
    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_sample_invariants(self, field, rng):
        s = sig(3, 2, field)
        mats = haar_batch(s, rng, 64)
        size = mats.shape[-1]
        gram_err = np.abs(np.einsum("bij,bik->bjk", mats.conj(), mats) - np.eye(size)).max()
        assert gram_err < 1e-10
        dets = np.abs(np.linalg.det(mats))
        if field is not R:
            dets = dets**2  # |det_R| = |det_C|^2 for the realizations
        assert np.abs(dets - 1.0).max() < 1e-10
        if field is H:
            assert quat_structure_error(mats) < 1e-12

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_entry_mean_is_zero(self, field):
        rng = np.random.default_rng(7)
        s = sig(2, 1, field)
        n = 100_000
        vals = haar_batch(s, rng, n)[:, 0, 0]
        parts = np.concatenate([vals.real, vals.imag]) if field is not R else vals.real
        mean = parts.mean()
        stderr = parts.std(ddof=1) / np.sqrt(parts.size)
        assert abs(mean) < 4.0 * stderr

    @pytest.mark.parametrize("field", ALL_FIELDS)
    def test_left_invariance_of_angle_distribution(self, field):
        # cos_angle(g k b_o, b_o) and cos_angle(k b_o, b_o) must agree in law
        rng = np.random.default_rng(11)
        s = sig(3, 2, field)
        n = 100_000
        u = 2 if field is H else 1
        pe = u * s.p
        g = haar_sample(s, rng).mat

        def angles(mats):
            d = np.abs(np.linalg.det(mats[:, :pe, :pe]))
            return np.sqrt(d) if field is H else d

        base = haar_batch(s, rng, n)
        a1 = angles(base)
        a2 = angles(np.einsum("ij,bjk->bik", g, haar_batch(s, rng, n)))
        ks = stats.ks_2samp(a1, a2)
        crit = 1.628 * np.sqrt(2.0 / n)  # 1% critical value, equal sizes
        assert ks.statistic < crit

    def test_circle_angle_uniform(self):
        rng = np.random.default_rng(3)
        s = sig(1, 1, R)
        mats = haar_batch(s, rng, 100_000)
        theta = np.arctan2(mats[:, 1, 0], mats[:, 0, 0])
        ks = stats.ks_1samp(theta, stats.uniform(loc=-np.pi, scale=2 * np.pi).cdf)
        assert ks.pvalue > 0.01

    def test_haar_sample_wraps_batch(self, rng):
        s = sig(2, 1, C)
        g = haar_sample(s, rng)
        assert isinstance(g, GroupElement)
        assert isinstance(frame_of(g), FramePoint)
