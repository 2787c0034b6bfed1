"""Numbers module tests.

Oracles: Python's arbitrary-precision arithmetic, the Fraction type for
rational identities, and exhaustive divisor search for gcd.
"""

import itertools
import math
import random
from fractions import Fraction

import pytest

from structa.core import classify
from structa.errors import WindowOverflow, ZeroDenominator
from structa.numbers import (
    Rat,
    _gcd_oracle,
    build_discrete,
    dual_order_checks,
    embed_int,
    embedding_check,
    int_add,
    int_group_check,
    int_mul,
    rat_add,
    rat_canon,
    rat_eq,
    rat_inv,
    rat_le,
    rat_mul,
    rat_neg,
)


def frac(p: Rat) -> Fraction:
    return Fraction(p.num, p.den)


class TestDiscrete:
    def test_smallest_window(self):
        w = build_discrete(1)
        assert w.poset.le("-1", "0") and w.poset.le("0", "1")
        assert w.succ("-1") == "0" and w.succ("0") == "1"

    def test_succ_monotone_and_monic(self):
        w = build_discrete(5)
        flags = classify(w.succ)
        assert flags["monic"] and flags["onto"]
        for a in range(-5, 5):
            for b in range(-5, 5):
                if a < b:
                    assert w.poset.le(w.succ(str(a)), w.succ(str(b)))

    def test_window_precondition(self):
        with pytest.raises(ValueError):
            build_discrete(0)


class TestIntAdd:
    def test_small_sums_match_oracle(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                assert int_add(a, b) == a + b

    def test_rectangle_example(self):
        assert int_add(2, 3) == 5

    def test_zero_is_neutral(self):
        for x in range(-10, 11):
            assert int_add(x, 0) == x
            assert int_add(0, x) == x

    def test_overflow_guard(self):
        with pytest.raises(WindowOverflow):
            int_add(5, 5, N=6)

    def test_group_laws_on_window(self):
        rep = int_group_check(8)
        assert rep.passed, rep.render_text()

    def test_fuzz_against_oracle(self):
        rng = random.Random(7)
        for _ in range(200):
            a = rng.randint(-100, 100)
            b = rng.randint(-100, 100)
            assert int_add(a, b, N=201) == a + b


class TestIntMul:
    def test_unit_zero_negation(self):
        for x in range(-10, 11):
            assert int_mul(x, 1) == x
            assert int_mul(x, 0) == 0
            assert int_mul(x, -1) == -x

    def test_recursion_matches_oracle(self):
        assert int_mul(3, 4) == 12
        for a in range(-8, 9):
            for b in range(-8, 9):
                assert int_mul(a, b) == a * b

    def test_ring_laws_fuzz(self):
        rng = random.Random(11)
        for _ in range(10_000):
            a = rng.randint(-50, 50)
            b = rng.randint(-50, 50)
            c = rng.randint(-50, 50)
            assert int_mul(a, b + c) // 1 == int_mul(a, b) + int_mul(a, c)
            assert int_mul(a, b) == int_mul(b, a)
        for _ in range(200):
            a = rng.randint(-12, 12)
            b = rng.randint(-12, 12)
            c = rng.randint(-12, 12)
            assert int_mul(int_mul(a, b), c) == int_mul(a, int_mul(b, c))


class TestRatEquality:
    def test_cross_multiplication(self):
        assert rat_eq(Rat(1, 2), Rat(2, 4))
        assert rat_eq(Rat(-1, 2), Rat(1, -2))
        assert not rat_eq(Rat(1, 2), Rat(1, 3))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDenominator):
            Rat(1, 0)

    def test_equivalence_laws_exhaustive(self):
        rats = [Rat(a, c) for a in range(-4, 5) for c in range(-4, 5) if c != 0]
        for p in rats:
            assert rat_eq(p, p)
        for p, q in itertools.combinations(rats, 2):
            assert rat_eq(p, q) == rat_eq(q, p)
        # transitivity fuzz over small denominators
        rng = random.Random(3)
        pool = [Rat(a, c) for a in range(-9, 10) for c in range(1, 10)]
        for _ in range(3000):
            p, q, r = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            if rat_eq(p, q) and rat_eq(q, r):
                assert rat_eq(p, r)

    def test_canon_agrees_with_fraction(self):
        for a in range(-9, 10):
            for c in range(-9, 10):
                if c == 0:
                    continue
                rep = rat_canon(Rat(a, c)).rep
                f = Fraction(a, c)
                assert (rep.num, rep.den) == (f.numerator, f.denominator)

    def test_canon_idempotent_and_respects_eq(self):
        rats = [Rat(a, c) for a in range(-5, 6) for c in range(-5, 6) if c != 0]
        for p in rats:
            cp = rat_canon(p)
            assert rat_canon(cp.rep) == cp
        for p, q in itertools.combinations(rats, 2):
            assert rat_eq(p, q) == (rat_canon(p) == rat_canon(q))

    def test_gcd_oracle_vs_stdlib(self):
        for a in range(0, 50):
            for b in range(0, 50):
                if a == b == 0:
                    continue
                assert _gcd_oracle(a, b) == math.gcd(a, b)
        rng = random.Random(5)
        for _ in range(500):
            a = rng.randint(1, 1000)
            b = rng.randint(1, 1000)
            assert _gcd_oracle(a, b) == math.gcd(a, b)


class TestRatArithmetic:
    def test_inverse_pair(self):
        assert rat_eq(rat_mul(Rat(1, 2), Rat(2, 1)), Rat(1, 1))

    def test_textbook_sum(self):
        assert rat_eq(rat_add(Rat(1, 2), Rat(1, 3)), Rat(5, 6))

    def test_zero_addends(self):
        p = Rat(3, 7)
        for x in range(1, 10):
            assert rat_eq(rat_add(p, Rat(0, x)), p)

    def test_matches_fraction_oracle(self):
        pool = [Rat(a, c) for a in range(-4, 5) for c in range(-4, 5) if c != 0]
        for p in pool:
            for q in pool:
                assert frac(rat_add(p, q)) == frac(p) + frac(q)
                assert frac(rat_mul(p, q)) == frac(p) * frac(q)

    def test_group_laws(self):
        pool = [Rat(a, c) for a in range(-3, 4) for c in range(1, 4)]
        one, zero = Rat(1, 1), Rat(0, 1)
        for p in pool:
            assert rat_eq(rat_add(p, rat_neg(p)), zero)
            if p.num != 0:
                assert rat_eq(rat_mul(p, rat_inv(p)), one)
        for p in pool:
            for q in pool:
                assert rat_eq(rat_add(p, q), rat_add(q, p))
                assert rat_eq(rat_mul(p, q), rat_mul(q, p))

    def test_well_defined_on_classes(self):
        pairs = [
            (Rat(1, 2), Rat(2, 4)),
            (Rat(-1, 3), Rat(1, -3)),
            (Rat(0, 5), Rat(0, -2)),
        ]
        probe = Rat(3, 7)
        for p, p2 in pairs:
            assert rat_eq(p, p2)
            assert rat_eq(rat_add(p, probe), rat_add(p2, probe))
            assert rat_eq(rat_mul(p, probe), rat_mul(p2, probe))

    def test_inverse_of_zero_rejected(self):
        with pytest.raises(ZeroDenominator):
            rat_inv(Rat(0, 3))


class TestRatOrder:
    def test_examples(self):
        assert rat_le(Rat(1, 2), Rat(1, 1))
        assert rat_le(Rat(1, 2), Rat(1, 2))
        assert not rat_le(Rat(1, 1), Rat(1, 2))

    def test_matches_fraction_order_all_signs(self):
        pool = [Rat(a, c) for a in range(-6, 7) for c in range(-6, 7) if c != 0]
        for p in pool:
            for q in pool:
                assert rat_le(p, q) == (frac(p) <= frac(q))

    def test_total_order_on_grid(self):
        pool = [Rat(a, c) for a in range(-6, 7) for c in range(1, 7)]
        for p in pool:
            for q in pool:
                assert rat_le(p, q) or rat_le(q, p)
                if rat_le(p, q) and rat_le(q, p):
                    assert rat_eq(p, q)
        rng = random.Random(17)
        for _ in range(3000):
            p, q, r = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            if rat_le(p, q) and rat_le(q, r):
                assert rat_le(p, r)

    def test_scaling_leaves_order_alone(self):
        pool = [Rat(a, c) for a in range(-4, 5) for c in range(1, 5)]
        for p in pool:
            for q in pool:
                for x in range(1, 5):
                    scaled = Rat(p.num * x, p.den * x)
                    assert rat_le(scaled, q) == rat_le(p, q)

    def test_signed_multiplier_monotonicity(self):
        pool = [Rat(a, c) for a in range(-3, 4) for c in range(1, 4)]
        for p in pool:
            for q in pool:
                for m in pool:
                    if not rat_le(p, q):
                        continue
                    if rat_le(Rat(0, 1), m):
                        assert rat_le(rat_mul(m, p), rat_mul(m, q))
                    else:
                        assert rat_le(rat_mul(m, q), rat_mul(m, p))


class TestEmbeddingAndDuality:
    def test_embedding_report(self):
        rep = embedding_check(8)
        assert rep.passed, rep.render_text()

    def test_embedding_example(self):
        assert rat_eq(rat_add(embed_int(2), embed_int(3)), embed_int(5))

    def test_dual_orders_report(self):
        rep = dual_order_checks(5)
        assert rep.passed, rep.render_text()

    def test_double_negation_pointwise(self):
        for a in range(-5, 6):
            for c in range(1, 6):
                p = Rat(a, c)
                assert Rat(-(-p.num), -(-p.den)) == p
