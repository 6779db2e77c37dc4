import pytest

from grassgb.f2poly import Poly, parse, weighted_degree
from grassgb.groebner_family import GrassmannContext, GroebnerFamily
from grassgb.steenrod import (
    alpha,
    immersion_obstruction_check,
    normal_bundle_sw,
    sq,
    sq_on_generator,
    tensor_square_sw,
)

from conftest import random_homogeneous


class TestWuFormula:
    def test_anchor_values(self):
        assert sq_on_generator(1, 4, 5) == parse("w1*w4 + w5", 5)
        assert sq_on_generator(1, 5, 5) == parse("w1*w5", 5)
        assert sq_on_generator(1, 2, 3) == parse("w1*w2 + w3", 3)

    def test_identity_and_top_square(self):
        for k in (2, 3, 5):
            for j in range(1, k + 1):
                assert sq_on_generator(0, j, k) == Poly.variable(k, j)
                assert sq_on_generator(j, j, k) == Poly.variable(k, j).square()

    def test_vanishing_above_degree(self):
        assert not sq_on_generator(3, 2, 4)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            sq_on_generator(1, 6, 5)
        with pytest.raises(ValueError):
            sq_on_generator(-1, 2, 5)

    def test_matches_sq_on_single_variable(self):
        for k in (3, 5):
            for j in range(1, k + 1):
                for i in range(j + 1):
                    assert sq_on_generator(i, j, k) == sq(i, Poly.variable(k, j))


class TestCartan:
    def test_sq_of_one(self):
        for i in (1, 2, 5):
            assert not sq(i, Poly.one(3))
        assert sq(0, Poly.one(3)) == Poly.one(3)

    def test_cartan_consistency(self, rng):
        for _ in range(40):
            d1 = rng.randint(1, 5)
            d2 = rng.randint(1, 5)
            f = random_homogeneous(rng, 5, d1)
            g = random_homogeneous(rng, 5, d2)
            for i in range(0, 5):
                expected = Poly.zero(5)
                for a in range(i + 1):
                    expected = expected + sq(a, f) * sq(i - a, g)
                assert sq(i, f * g) == expected, (f, g, i)

    def test_squaring_identities(self, rng):
        for _ in range(40):
            d = rng.randint(1, 10)
            f = random_homogeneous(rng, 5, d)
            assert sq(d, f) == f.square()
            assert not sq(d + 1, f)
            assert not sq(d + 3, f)
            assert sq(0, f) == f

    def test_power_worked_example(self):
        # Sq^1(w4 w5^{n-1}) collapses to w5^n for even n, before reduction
        n = 8
        f = Poly.monomial((0, 0, 0, 1, n - 1))
        got = sq(1, f)
        # raw Cartan output: (w1w4 + w5)w5^{n-1} + (n-1) w1 w4 w5^{n-1}
        expected = parse(f"w5^{n}", 5)
        assert got == expected


class TestTensorSquare:
    def test_low_degrees_vanish_for_k5(self):
        comps = tensor_square_sw(5, 20).weighted_components()
        assert 1 not in comps
        assert 2 not in comps

    @pytest.mark.parametrize("k", (2, 3, 4, 5))
    def test_no_odd_degrees_and_no_linear_part(self, k):
        comps = tensor_square_sw(k, k * k).weighted_components()
        assert all(d % 2 == 0 for d in comps)
        assert 1 not in comps

    def test_top_degree_k5(self):
        comps = tensor_square_sw(5, 25).weighted_components()
        assert max(comps) == 20

    def test_k2_degree_two_component(self):
        comps = tensor_square_sw(2, 4).weighted_components()
        assert comps[2] == parse("w1^2", 2)

    def test_direct_expansion_small_k(self):
        # brute force in the roots for k=3: product of (1+xi+xj)^2 pairs
        from itertools import product as iproduct

        k = 3
        full = {(0,) * k: 1}
        pairs = [(0, 1), (0, 2), (1, 2)]
        for i, j in pairs:
            factor = {}
            for e in ((0, 0, 0),):
                factor[e] = 1
            fi = [0] * k
            fi[i] = 1
            fj = [0] * k
            fj[j] = 1
            base = [(0,) * k, tuple(fi), tuple(fj)]
            sq_factor = {}
            for a in base:
                for b in base:
                    key = tuple(x + y for x, y in zip(a, b))
                    sq_factor[key] = sq_factor.get(key, 0) + 1
            new = {}
            for t1, c1 in full.items():
                for t2, c2 in sq_factor.items():
                    key = tuple(x + y for x, y in zip(t1, t2))
                    new[key] = new.get(key, 0) + c1 * c2
            full = new
        odd = {t for t, c in full.items() if c % 2}
        assert all(sum(t) % 2 == 0 for t in odd)

    def test_truncation_guard(self):
        with pytest.raises(ValueError):
            tensor_square_sw(3, 10)


class TestNormalBundle:
    def test_n8(self):
        nb = normal_bundle_sw(8)
        assert nb[2].value == parse("w1^2 + w2", 5)
        for d, cls in nb.items():
            if d >= 36:
                assert not cls
        assert max(nb) == 35

    def test_exponent_congruence(self):
        # 2^{r+1} - n - 5 = 3 and 3 mod 8 = 3 for n = 8
        n = 8
        r = (n + 4).bit_length() - 1
        assert 2**r < n + 5 <= 2 ** (r + 1)
        assert 2 ** (r + 1) - n - 5 == 3
        assert (2 ** (r + 1) - n - 5) % 8 == 3

    def test_unreduced_top_dimension(self):
        total_w = Poly.one(5)
        for j in range(1, 6):
            total_w = total_w + Poly.variable(5, j)
        unreduced = tensor_square_sw(5, 20) * total_w**3
        assert max(weighted_degree(t) for t in unreduced.terms) <= 35

    def test_guard(self):
        with pytest.raises(ValueError):
            normal_bundle_sw(12)
        with pytest.raises(ValueError):
            normal_bundle_sw(0)


class TestImmersionObstruction:
    @pytest.mark.parametrize("n", (8, 16))
    def test_obstruction_values(self, n):
        report = immersion_obstruction_check(n)
        assert report.sq1_value.value == Poly.monomial((0, 0, 0, 0, n))
        assert report.k1_obstruction_value.value == Poly.monomial(
            (0, 0, 0, 1, n - 1)
        )
        assert report.lift_possible

    def test_guard(self):
        with pytest.raises(ValueError):
            immersion_obstruction_check(12)

    def test_family_context_checked(self):
        with pytest.raises(ValueError):
            immersion_obstruction_check(8, GroebnerFamily(GrassmannContext(5, 16)))


class TestAlpha:
    def test_values(self):
        assert alpha(40) == 2
        assert alpha(1) == 1
        for r in range(1, 10):
            assert alpha(5 * 2**r) == 2

    def test_guard(self):
        with pytest.raises(ValueError):
            alpha(0)

    def test_characterization_of_alpha5n_eq_2(self):
        # among multiples of 8, alpha(5n) == 2 exactly for
        # n = 2^r + sum_{i=0}^{s} (2^{r+2+4i} + 2^{r+3+4i}), r >= 3, s >= -1
        special = set()
        bound = 2**14
        for r in range(3, 15):
            n = 2**r
            s = -1
            while n <= bound:
                special.add(n)
                s += 1
                n += 2 ** (r + 2 + 4 * s) + 2 ** (r + 3 + 4 * s)
        for n in range(8, bound + 1, 8):
            assert (alpha(5 * n) == 2) == (n in special), n
