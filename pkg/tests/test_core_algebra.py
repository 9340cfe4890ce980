import json
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entriv.core_algebra import (ChainComplex, GradedAbelianGroup, IntMatrix,
                                 formality_splitting, homology, invariant_factors,
                                 random_chain_complex, random_unimodular,
                                 smith_normal_form)
from entriv.rng import CounterRng

small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r, max_size=r)))


def minor_gcd_diagonal(m: IntMatrix):
    """Independent oracle: d_1 ... d_k = gcd of k x k minors ratios."""
    diag = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = IntMatrix.from_rows([[m.entries[i][j] for j in cols] for i in rows])
                g = gcd(g, sub.det())
        if g == 0:
            diag.extend([0] * (min(m.rows, m.cols) - k + 1))
            break
        diag.append(g // prev)
        prev = g
    return tuple(diag)


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(2)).diagonal == (1, 1)

    def test_worked_example(self):
        m = IntMatrix.from_rows([[2, 4], [6, 8]])
        snf = smith_normal_form(m)
        # gcd-of-minors oracle: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        assert snf.diagonal == (2, 4)
        assert snf.verify(m)

    def test_zero_matrix(self):
        assert smith_normal_form(IntMatrix.zero(3, 2)).diagonal == (0, 0)

    @settings(max_examples=60, deadline=None)
    @given(small_matrices)
    def test_transforms_and_divisibility(self, rows):
        m = IntMatrix.from_rows(rows)
        snf = smith_normal_form(m)
        assert snf.verify(m)
        assert snf.diagonal == minor_gcd_diagonal(m)


class TestHomology:
    def test_circle(self):
        c = ChainComplex.create({0: 1, 1: 1}, {1: [[0]]})
        h = homology(c, "Z")
        assert h.component(0) == (1, ()) and h.component(1) == (1, ())

    def test_projective_plane_integral(self):
        c = ChainComplex.create({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
        h = homology(c, "Z")
        assert h.component(0) == (1, ())
        assert h.component(1) == (0, (2,))
        assert h.component(2) == (0, ())

    def test_projective_plane_mod2(self):
        c = ChainComplex.create({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
        h = homology(c, "F2")
        assert [h.component(d) for d in (0, 1, 2)] == [(1, ())] * 3

    def test_rejects_non_complex(self):
        with pytest.raises(ValueError):
            ChainComplex.create({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})

    def test_empty_complex(self):
        assert homology(ChainComplex.create({}, {}), "Z") == GradedAbelianGroup.zero()

    def test_basis_change_invariance(self):
        rng = CounterRng(5)
        for _ in range(25):
            cx = random_chain_complex(rng)
            h = homology(cx, "Z")
            us, invs = {}, {}
            for d in cx.degrees():
                u = random_unimodular(cx.rank(d), rng, 4, 1)
                s = smith_normal_form(u)
                us[d], invs[d] = u, s.right.mul(s.left)
            diffs = {d: us[d - 1].mul(m).mul(invs[d]) for d, m in cx.differentials}
            assert homology(ChainComplex.create(dict(cx.ranks), diffs), "Z") == h

    def test_universal_coefficients(self):
        rng = CounterRng(17)
        for _ in range(25):
            cx = random_chain_complex(rng)
            hz = homology(cx, "Z")
            for p in (2, 3, 5):
                hp = homology(cx, f"F{p}")
                for d in set(cx.degrees()):
                    free, torsion = hz.component(d)
                    _, torsion_below = hz.component(d - 1)
                    expected = (free + sum(1 for t in torsion if t % p == 0)
                                + sum(1 for t in torsion_below if t % p == 0))
                    assert hp.component(d)[0] == expected


class TestFormality:
    def test_zero_differentials_fixed(self):
        c = ChainComplex.create({0: 2, 3: 1}, {})
        minimal, certified = formality_splitting(c)
        assert certified and minimal == c

    def test_projective_plane(self):
        c = ChainComplex.create({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
        minimal, certified = formality_splitting(c)
        assert certified
        # free Z in degree 0 plus a two-term piece Z --2--> Z in degrees (2, 1)
        assert minimal.to_json() == {"ranks": {"0": 1, "1": 1, "2": 1},
                                     "differentials": {"2": [[2]]}}

    def test_torsion_free_input_splits_with_zero_differential(self):
        c = ChainComplex.create({0: 2, 1: 2}, {1: [[1, 0], [0, 1]]})
        minimal, certified = formality_splitting(c)
        assert certified and minimal.differentials == ()

    def test_random_complexes_certify(self):
        rng = CounterRng(11)
        for _ in range(50):
            _, certified = formality_splitting(random_chain_complex(rng))
            assert certified


class TestSerialization:
    def test_chain_complex_round_trip(self):
        c = ChainComplex.create({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
        assert ChainComplex.from_json(json.loads(json.dumps(c.to_json()))) == c

    def test_graded_group_round_trip(self):
        g = GradedAbelianGroup.create({0: (1, ()), 1: (0, (2, 4))})
        assert GradedAbelianGroup.from_json(g.to_json()) == g

    def test_graded_group_spec_shape(self):
        g = GradedAbelianGroup.create({0: (1, ()), 1: (0, (2,))})
        assert g.to_json() == {"0": {"free": 1, "torsion": []},
                               "1": {"free": 0, "torsion": [2]}}


class TestSnfCache:
    def test_cache_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("ENTRIV_CACHE_DIR", str(tmp_path))
        m = IntMatrix.from_rows([[6, 4], [2, 8]])
        first = smith_normal_form(m)
        assert list(tmp_path.glob("snf_*.json"))
        second = smith_normal_form(m)
        assert first == second and second.verify(m)


class TestTorsionNormalization:
    def test_divisibility_chain(self):
        assert invariant_factors((2, 3)) == (6,)
        assert invariant_factors((4, 2, 3)) == (2, 12)
        assert invariant_factors((2, 2)) == (2, 2)
        assert invariant_factors(()) == ()

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(2, 60), max_size=5))
    def test_chain_divides_and_preserves_order(self, orders):
        chain = invariant_factors(tuple(orders))
        total = 1
        for t in orders:
            total *= t
        got = 1
        for t in chain:
            got *= t
        assert got == total
        assert all(chain[i + 1] % chain[i] == 0 for i in range(len(chain) - 1))

    def test_direct_sum_merges(self):
        a = GradedAbelianGroup.create({0: (1, (2,))})
        b = GradedAbelianGroup.create({0: (0, (3,)), 1: (2, ())})
        s = a.direct_sum(b)
        assert s.component(0) == (1, (6,))
        assert s.component(1) == (2, ())
