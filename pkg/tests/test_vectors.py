import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootmaj.vectors import (
    MajorizationReport,
    hlp_check,
    majorizes,
    parse_vector,
    random_majorization_pair,
    sort_descending,
    t_transform,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
vectors = st.lists(finite, min_size=1, max_size=8)


class TestSortDescending:
    def test_basic(self):
        assert sort_descending((1, 7, 2)) == (7, 2, 1)

    def test_ties(self):
        assert sort_descending((3, 3)) == (3, 3)

    def test_klemes_roots(self):
        assert sort_descending((0.1459, 6.8541, 1, 1)) == (6.8541, 1, 1, 0.1459)

    def test_empty(self):
        with pytest.raises(ValueError, match="empty input"):
            sort_descending(())

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            sort_descending((1.0, float("nan")))

    @given(vectors)
    def test_is_sorted_permutation(self, v):
        out = sort_descending(v)
        assert sorted(out) == sorted(v)
        assert all(a >= b for a, b in zip(out, out[1:]))


class TestMajorizes:
    def test_coefficients(self):
        rep = majorizes((7, 2), (6, 3), 1e-9)
        assert rep.holds
        assert rep.prefix_margins == (1.0, 0.0)
        assert rep.failing_k is None

    def test_klemes_roots_not_majorized(self, klemes_x, klemes_y):
        rep = majorizes(klemes_x, klemes_y, 1e-6)
        assert not rep.holds
        assert rep.failing_k == 2
        assert rep.prefix_margins[1] == pytest.approx(-0.5923591472464004, abs=1e-12)

    def test_reflexive_constant(self):
        rep = majorizes((5, 5, 5), (5, 5, 5))
        assert rep.holds
        assert rep.prefix_margins == (0.0, 0.0, 0.0)

    def test_reversed_fails_at_first_prefix(self):
        rep = majorizes((6, 3), (7, 2))
        assert not rep.holds and rep.failing_k == 1

    def test_sum_mismatch_fails_at_n(self):
        rep = majorizes((3, 1), (2, 1))
        assert not rep.holds and rep.failing_k == 2
        assert rep.total_sum_gap == 1.0

    def test_single_entry(self):
        assert majorizes((2.0,), (2.0 + 1e-12,)).holds
        assert not majorizes((2.0,), (2.1,)).holds

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length mismatch"):
            majorizes((1, 2), (1, 2, 3))

    def test_empty(self):
        with pytest.raises(ValueError):
            majorizes((), ())

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            majorizes((1,), (1,), 0.0)

    def test_report_round_trip(self, klemes_x, klemes_y):
        rep = majorizes(klemes_x, klemes_y)
        again = MajorizationReport.from_dict(json.loads(json.dumps(rep.to_dict())))
        assert again == rep
        assert set(rep.to_dict()) == {"holds", "prefix_margins", "failing_k", "total_sum_gap"}

    @given(vectors)
    def test_reflexive(self, v):
        assert majorizes(v, v).holds

    @given(vectors, st.randoms(use_true_random=False))
    def test_permutation_invariant(self, v, rnd):
        w = [x + 1.0 for x in v]
        pv, pw = list(v), list(w)
        rnd.shuffle(pv)
        rnd.shuffle(pw)
        assert majorizes(pw, pv).holds == majorizes(w, v).holds


def _chain(rng, n, k, base=None):
    u = rng.uniform(0.5, 10, n) if base is None else np.array(base)
    for _ in range(k):
        i, j = rng.choice(n, 2, replace=False)
        u = np.array(t_transform(u, i, j, rng.uniform()))
    return u


class TestRandomProperties:
    def test_transitivity(self, rng):
        for _ in range(1000):
            n = int(rng.integers(2, 7))
            a = rng.uniform(0.5, 10, n)
            b = _chain(rng, n, int(rng.integers(0, 2 * n)), a)
            c = _chain(rng, n, int(rng.integers(0, 2 * n)), b)
            assert majorizes(a, b).holds and majorizes(b, c).holds
            assert majorizes(a, c).holds

    def test_hlp_oracle_agreement(self, rng):
        for trial in range(1000):
            n = int(rng.integers(1, 7))
            u = rng.uniform(0.5, 10, n)
            if trial % 2 == 0 and n > 1:
                v = _chain(rng, n, int(rng.integers(1, 2 * n + 1)), u)
            else:
                v = rng.uniform(0.5, 10, n)
            rep = majorizes(u, v)
            entries = np.concatenate([u, v])
            if rep.holds:
                assert hlp_check(u, v, entries)
            dense = np.concatenate([entries, np.linspace(entries.min(), entries.max(), 100)])
            if not hlp_check(u, v, dense):
                assert not rep.holds

    def test_sum_equality_when_majorized(self, rng):
        tol = 1e-9
        for _ in range(300):
            n = int(rng.integers(2, 7))
            u = rng.uniform(1, 10, n)
            v = _chain(rng, n, 3, u)
            assert majorizes(u, v, tol).holds
            assert abs(u.sum() - v.sum()) <= tol * max(1.0, abs(u.sum()))


class TestHLP:
    def test_majorized_pair(self):
        assert hlp_check((7, 2), (6, 3), range(9))

    def test_reversed_pair(self):
        # hinge at 6.5: v = (7, 2) gives 0.5, u = (6, 3) gives 0
        assert not hlp_check((6, 3), (7, 2), [6.5])

    @given(vectors, st.lists(finite, min_size=1, max_size=5))
    def test_identical(self, v, knots):
        assert hlp_check(v, v, knots)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            hlp_check((1, 2), (1,), [0])

    def test_empty_knots(self):
        with pytest.raises(ValueError):
            hlp_check((1, 2), (1, 2), [])


class TestGenerator:
    def test_zero_transforms(self):
        u, v = random_majorization_pair(4, 0, (1, 10), seed=3)
        assert u == v
        assert majorizes(u, v).holds

    def test_t_transform_example(self):
        v = t_transform((7, 2), 0, 1, 0.9)
        assert v == pytest.approx((6.5, 2.5), abs=1e-15)
        assert majorizes((7, 2), v).holds

    @settings(max_examples=200)
    @given(
        st.integers(1, 8),
        st.integers(0, 20),
        st.integers(0, 2**32 - 1),
    )
    def test_output_is_majorized(self, n, k, seed):
        u, v = random_majorization_pair(n, k, (1.0, 10.0), seed)
        assert majorizes(u, v).holds
        assert min(v) >= 1.0
        assert len(u) == len(v) == n

    def test_deterministic(self):
        assert random_majorization_pair(5, 7, seed=11) == random_majorization_pair(5, 7, seed=11)

    def test_rejects_low_range(self):
        with pytest.raises(ValueError):
            random_majorization_pair(3, 2, (0.5, 2.0))
        u, v = random_majorization_pair(3, 2, (0.5, 2.0), allow_below_one=True)
        assert majorizes(u, v).holds

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            random_majorization_pair(0, 1)
        with pytest.raises(ValueError):
            random_majorization_pair(2, 1, (3.0, 2.0))


class TestParse:
    def test_formats(self, tmp_path):
        assert parse_vector("7,2") == (7.0, 2.0)
        assert parse_vector("7 2\n3") == (7.0, 2.0, 3.0)
        assert parse_vector("[7, 2.5]") == (7.0, 2.5)
        f = tmp_path / "v.json"
        f.write_text("[1, 2, 3]")
        assert parse_vector(f"@{f}") == (1.0, 2.0, 3.0)

    @pytest.mark.parametrize("bad", ["", "a,b", '["x"]', "[1, nan]", "inf"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_vector(bad)
