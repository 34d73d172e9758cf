"""Projection geometry, shadow norms, and the norm-product criterion."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from cubeshadows.errors import DimensionMismatch
from cubeshadows.geometry import (
    ZERO_TOL,
    UnitVector,
    Vertex,
    canonical_vertex,
    criterion,
    norms,
    project,
    shadow,
    shadow_norm_closed_form,
)

coord_lists = st.lists(
    st.floats(min_value=-10.0, max_value=10.0, allow_nan=False),
    min_size=1,
    max_size=24,
).filter(lambda xs: math.fsum(x * x for x in xs) > 1e-12)


@st.composite
def direction_point_pairs(draw):
    n = draw(st.integers(min_value=1, max_value=24))
    fl = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
    xs = draw(st.lists(fl, min_size=n, max_size=n))
    assume(math.fsum(x * x for x in xs) > 1e-12)
    ys = draw(st.lists(fl, min_size=n, max_size=n))
    return np.array(xs), np.array(ys)


def u_of(*coords):
    return UnitVector(np.array(coords, dtype=np.float64))


class TestUnitVector:
    def test_normalizes_input(self):
        u = u_of(3.0, 4.0)
        assert u.n == 2
        assert u.coords == pytest.approx([0.6, 0.8], abs=1e-15)

    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError, match="zero vector"):
            u_of(0.0, 0.0)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            u_of(1.0, float("nan"))
        with pytest.raises(ValueError):
            u_of(1.0, float("inf"))

    def test_rejects_bad_shape(self):
        with pytest.raises(DimensionMismatch):
            UnitVector(np.zeros((2, 2)))
        with pytest.raises(DimensionMismatch):
            UnitVector(np.array([]))

    def test_coords_are_read_only(self):
        u = u_of(1.0, 2.0)
        with pytest.raises(ValueError):
            u.coords[0] = 5.0

    @given(coord_lists)
    def test_always_lands_on_the_unit_sphere(self, xs):
        u = UnitVector(np.array(xs))
        sq = math.fsum(float(c) * float(c) for c in u.coords)
        assert abs(sq - 1.0) < 1e-14


class TestVertex:
    def test_accepts_only_unit_signs(self):
        v = Vertex(np.array([1, -1, 1], dtype=np.int8))
        assert v.n == 3
        with pytest.raises(ValueError):
            Vertex(np.array([1, 0, 1], dtype=np.int8))
        with pytest.raises(ValueError):
            Vertex(np.array([2, 1], dtype=np.int8))


class TestNorms:
    def test_frozen_values(self):
        m = norms(u_of(3.0, 4.0))
        assert m.l1 == pytest.approx(1.4, abs=1e-15)
        assert m.l2 == pytest.approx(1.0, abs=1e-15)
        assert m.linf == pytest.approx(0.8, abs=1e-15)

    @given(coord_lists, st.randoms(use_true_random=False))
    def test_bitwise_invariant_under_permutation_and_sign_flips(self, xs, rnd):
        # compensated sums make the invariance exact, not approximate
        n = len(xs)
        perm = rnd.sample(range(n), n)
        ys = [rnd.choice((-1.0, 1.0)) * xs[p] for p in perm]
        a = norms(UnitVector(np.array(xs)))
        b = norms(UnitVector(np.array(ys)))
        assert (a.l1, a.l2, a.linf) == (b.l1, b.l2, b.linf)


class TestProject:
    def test_kills_the_direction_itself(self):
        u = u_of(1.0, 1.0)
        out = project(u, np.array([1.0, 1.0]))
        assert np.max(np.abs(out)) < 1e-15

    def test_rejects_mismatched_shapes(self):
        with pytest.raises(DimensionMismatch):
            project(u_of(1.0, 0.0), np.array([1.0, 2.0, 3.0]))

    @given(direction_point_pairs())
    def test_result_is_orthogonal_to_direction(self, pair):
        raw, x = pair
        u = UnitVector(raw)
        out = project(u, x)
        tol = 1e-13 * u.n * (1.0 + float(np.linalg.norm(x)))
        assert abs(float(out @ u.coords)) <= tol

    @given(direction_point_pairs())
    def test_projecting_twice_changes_nothing(self, pair):
        raw, x = pair
        u = UnitVector(raw)
        once = project(u, x)
        twice = project(u, once)
        tol = 1e-13 * u.n * (1.0 + float(np.linalg.norm(x)))
        assert np.max(np.abs(twice - once)) <= tol


class TestShadow:
    def test_frozen_example(self):
        rep = shadow(u_of(3.0, 4.0), Vertex(np.array([1, 1], dtype=np.int8)))
        assert rep.inner_product == pytest.approx(1.4, abs=1e-15)
        assert rep.shadow == pytest.approx([0.16, -0.12], abs=1e-15)
        assert rep.inf_norm == pytest.approx(0.16, abs=1e-15)
        assert rep.inside

    def test_mismatched_vertex_rejected(self):
        with pytest.raises(DimensionMismatch):
            shadow(u_of(1.0, 0.0), Vertex(np.array([1, 1, 1], dtype=np.int8)))


class TestCanonicalVertex:
    def test_matches_coordinate_signs(self):
        v = canonical_vertex(u_of(-1.0, 2.0, -3.0, 4.0))
        assert v.signs.tolist() == [-1, 1, -1, 1]

    def test_zero_coordinates_default_to_plus(self):
        v = canonical_vertex(u_of(0.0, -1.0))
        assert v.signs.tolist() == [1, -1]

    @given(coord_lists)
    def test_sign_rule_holds_everywhere(self, xs):
        u = UnitVector(np.array(xs))
        v = canonical_vertex(u)
        for c, s in zip(u.coords, v.signs):
            assert s == (-1 if c < -ZERO_TOL else 1)


class TestClosedFormShadowNorm:
    def test_frozen_example(self):
        u = u_of(3.0, 4.0)
        cf = shadow_norm_closed_form(u)
        assert cf == pytest.approx(0.16, abs=1e-15)
        assert cf == shadow(u, canonical_vertex(u)).inf_norm

    def test_zero_coordinate_pins_the_norm_at_one(self):
        assert shadow_norm_closed_form(u_of(1.0, 0.0, 0.0)) == 1.0

    @given(coord_lists)
    def test_matches_direct_evaluation(self, xs):
        u = UnitVector(np.array(xs))
        cf = shadow_norm_closed_form(u)
        direct = shadow(u, canonical_vertex(u)).inf_norm
        assert abs(cf - direct) <= 1e-12 * u.n


class TestCriterion:
    def test_frozen_satisfied_example(self):
        res = criterion(u_of(3.0, 4.0))
        assert res.product == pytest.approx(1.12, abs=1e-15)
        assert res.satisfied
        assert res.witness.signs.tolist() == [1, 1]
        assert not res.degenerate_zero_coords
        assert res.near_vertex_orthogonal is None

    def test_zero_coordinate_is_flagged(self):
        assert criterion(u_of(1.0, 0.0)).degenerate_zero_coords

    def test_margin_tightens_the_threshold(self):
        u = u_of(3.0, 4.0)
        assert criterion(u).satisfied
        # product is 1.12; a margin of 0.9 demands <= 1.1
        assert not criterion(u, criterion_tol=-0.9).satisfied

    @given(coord_lists, st.randoms(use_true_random=False))
    def test_product_bitwise_invariant_under_symmetries(self, xs, rnd):
        n = len(xs)
        perm = rnd.sample(range(n), n)
        ys = [rnd.choice((-1.0, 1.0)) * xs[p] for p in perm]
        a = criterion(UnitVector(np.array(xs)))
        b = criterion(UnitVector(np.array(ys)))
        assert a.product == b.product
        assert a.satisfied == b.satisfied

    @given(coord_lists)
    def test_verdict_is_the_threshold_comparison(self, xs):
        res = criterion(UnitVector(np.array(xs)))
        assert res.satisfied == (res.product <= 2.0)

    @given(coord_lists)
    def test_witness_is_the_canonical_vertex(self, xs):
        u = UnitVector(np.array(xs))
        res = criterion(u)
        assert res.witness.signs.tolist() == canonical_vertex(u).signs.tolist()

    @given(coord_lists)
    def test_satisfied_directions_have_inside_witness(self, xs):
        # sufficiency at unit scale, with slack for boundary roundoff
        u = UnitVector(np.array(xs))
        res = criterion(u)
        if res.product <= 2.0 - 1e-6:
            rep = shadow(u, res.witness)
            assert rep.inf_norm <= 1.0 + 1e-12
        elif res.product >= 2.0 + 1e-6:
            rep = shadow(u, res.witness)
            assert rep.inf_norm >= 1.0 - 1e-12
