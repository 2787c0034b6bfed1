"""Exact integers and rationals.

Integers are plain arbitrary-precision ints; the successor-automorphism
construction of addition is verified against them on bounded windows
rather than used as the runtime representation. Rationals are reduced
pairs with a cross-multiplication equality and a sign-split order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import FinMap, FinSet, classify
from .errors import WindowOverflow, ZeroDenominator
from .order import Poset
from .report import LawReport

ExactInt = int


def _sym(i: int) -> str:
    return str(i)


@dataclass(frozen=True)
class IntWindow:
    N: int
    poset: Poset
    succ: FinMap


@lru_cache(maxsize=8)
def build_discrete(N: int) -> IntWindow:
    """The window [-N, N] with its natural order and the successor map
    on [-N, N-1], checked to be an order embedding onto the shifted
    window."""
    if N < 1:
        raise ValueError("the window needs at least -1, 0, 1")
    values = list(range(-N, N + 1))
    carrier = FinSet(_sym(i) for i in values)
    le = {
        (_sym(i), _sym(j)) for i in values for j in values if i <= j
    }
    # order axioms for the natural order are re-verified by tests on
    # small windows; the cubic transitivity scan is skipped on big ones
    poset = Poset(carrier, le, validate=N <= 12)
    interior = FinSet(_sym(i) for i in range(-N, N))
    shifted = FinSet(_sym(i) for i in range(-N + 1, N + 1))
    succ = FinMap(interior, shifted, {_sym(i): _sym(i + 1) for i in range(-N, N)})
    flags = classify(succ)
    assert flags["bijective"], "successor must be a bijection onto the shifted window"
    assert all(
        poset.le(_sym(a + 1), _sym(b + 1)) == poset.le(_sym(a), _sym(b))
        for a in range(-N, N)
        for b in range(-N, N)
    ), "successor must be an order embedding"
    # each interior point is the source of exactly one successor step
    # and (inside the open interior) the target of exactly one
    assert all(
        sum(1 for i in range(-N, N) if succ(_sym(i)) == _sym(j)) == 1
        for j in range(-N + 1, N + 1)
    )
    return IntWindow(N, poset, succ)


def _shift_map(w: IntWindow, b: int) -> FinMap:
    """The +b automorphism on the partial window where it stays in range,
    built by composing successor steps (or inverse steps)."""
    N = w.N
    if b >= 0:
        dom = FinSet(_sym(i) for i in range(-N, N - b + 1))
    else:
        dom = FinSet(_sym(i) for i in range(-N - b, N + 1))
    cod = FinSet(_sym(int(x) + b) for x in dom)
    step = 1 if b >= 0 else -1
    assign = {}
    for x in dom:
        i = int(x)
        for _ in range(abs(b)):
            i += step
        assign[x] = _sym(i)
    return FinMap(dom, cod, assign)


def int_add(a: ExactInt, b: ExactInt, N: int | None = None) -> ExactInt:
    """Addition by b-fold successor composition on a verified window."""
    if N is None:
        N = abs(a) + abs(b) + 1
    if abs(a) > N or abs(b) > N or abs(a + b) > N:
        raise WindowOverflow("operands escape the window", witness=(a, b, N))
    w = build_discrete(N)
    shift = _shift_map(w, b)
    out = int(shift(_sym(a)))
    assert out == a + b
    return out


def int_group_check(N: int) -> LawReport:
    """Window verification of the additive group laws and the pointwise
    comparison of shift maps."""
    r = LawReport("int-group")
    w = build_discrete(N)
    half = N // 2
    shifts = {b: _shift_map(w, b) for b in range(-half, half + 1)}
    r.add(
        "int-unit",
        "shifting by zero is the identity on the window",
        shifts[0] == FinMap.identity(w.poset.carrier),
    )
    ok_inv = all(
        all(shifts[-b](shifts[b](x)) == x for x in shifts[b].dom if shifts[b](x) in shifts[-b].dom)
        for b in range(-half, half + 1)
    )
    r.add("int-inverse", "shifting by -b undoes shifting by b", ok_inv)
    ok_comm = all(
        shifts[b](shifts[a](x)) == shifts[a](shifts[b](x))
        for a in range(-half, half + 1)
        for b in range(-half, half + 1)
        for x in w.poset.carrier
        if all(
            abs(int(x) + d) <= N for d in (a, b, a + b)
        )
    )
    r.add(
        "int-commutative",
        "the two stacking orders of shifts agree wherever both are defined",
        ok_comm,
    )
    ok_assoc = all(
        int(shifts[c](_sym(int(shifts[b](_sym(int(shifts[a](x)))))))) == int(x) + a + b + c
        for a in range(-half // 2 + 1, half // 2 + 1) if half >= 2
        for b in range(-half // 2 + 1, half // 2 + 1)
        for c in range(-half // 2 + 1, half // 2 + 1)
        for x in w.poset.carrier
        if abs(int(x) + a) <= N and abs(int(x) + a + b) <= N and abs(int(x) + a + b + c) <= N
        and _sym(int(x)) in shifts[a].dom
        and _sym(int(x) + a) in shifts[b].dom
        and _sym(int(x) + a + b) in shifts[c].dom
    )
    r.add("int-associative", "stacked shifts add their offsets", ok_assoc)
    # a natural comparison +a → +b exists exactly when a ≤ b:
    # componentwise, x+a ≤ x+b on the common domain
    ok_nat = all(
        (a <= b)
        == all(
            w.poset.le(shifts[a](x), shifts[b](x))
            for x in shifts[a].dom.inter(shifts[b].dom)
        )
        for a in range(-half, half + 1)
        for b in range(-half, half + 1)
    )
    r.add("int-nat-order", "componentwise comparison of shifts mirrors a ≤ b", ok_nat)
    return r


def int_mul(a: ExactInt, b: ExactInt) -> ExactInt:
    """Product by the recursion a·(x+1) = a·x + a (and the x-1 branch
    for negative multipliers), cross-checked against direct product."""
    acc = 0
    x = 0
    while x != b:
        if b > 0:
            acc = int_add_direct(acc, a)
            x += 1
        else:
            acc = int_add_direct(acc, -a)
            x -= 1
    assert acc == a * b
    return acc


def int_add_direct(a: ExactInt, b: ExactInt) -> ExactInt:
    return a + b


@dataclass(frozen=True)
class Rat:
    num: ExactInt
    den: ExactInt

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDenominator("a rational needs a nonzero denominator", witness=(self.num,))

    def __str__(self):
        return "%d/%d" % (self.num, self.den)


@dataclass(frozen=True)
class RatClass:
    rep: Rat

    def __post_init__(self):
        assert self.rep.den > 0
        assert math.gcd(self.rep.num, self.rep.den) == 1


def rat_eq(p: Rat, q: Rat) -> bool:
    return int_mul(p.num, q.den) == int_mul(q.num, p.den)


def _gcd_oracle(a: int, b: int) -> int:
    """Largest common divisor by exhaustive search (small inputs only)."""
    a, b = abs(a), abs(b)
    if a == 0:
        return b
    if b == 0:
        return a
    return max(d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0)


def rat_canon(p: Rat) -> RatClass:
    """Reduced representative with a positive denominator."""
    g = math.gcd(p.num, p.den)
    num, den = p.num // g, p.den // g
    if den < 0:
        num, den = -num, -den
    if num == 0:
        den = 1
    out = RatClass(Rat(num, den))
    assert rat_eq(out.rep, p)
    return out


def rat_mul(p: Rat, q: Rat) -> Rat:
    return Rat(int_mul(p.num, q.num), int_mul(p.den, q.den))


def rat_add(p: Rat, q: Rat) -> Rat:
    return Rat(
        int_mul(p.num, q.den) + int_mul(q.num, p.den), int_mul(p.den, q.den)
    )


def rat_neg(p: Rat) -> Rat:
    return Rat(-p.num, p.den)


def rat_inv(p: Rat) -> Rat:
    if p.num == 0:
        raise ZeroDenominator("zero has no multiplicative inverse", witness=(str(p),))
    return Rat(p.den, p.num)


def rat_le(p: Rat, q: Rat) -> bool:
    """Order by cross multiplication, with the sign of the denominator
    product deciding the direction of the comparison."""
    a, c, b, d = p.num, p.den, q.num, q.den
    cd = int_mul(c, d)
    if cd > 0:
        return int_mul(a, d) <= int_mul(b, c)
    return int_mul(b, c) <= int_mul(a, d)


def embed_int(a: ExactInt) -> Rat:
    return Rat(a, 1)


def dual_order_checks(N: int) -> LawReport:
    """Row/column duality and the three sign involutions on a window of
    rationals."""
    r = LawReport("dual-orders")
    grid = [Rat(a, c) for a in range(-N, N + 1) for c in range(-N, N + 1) if c != 0]
    neg_den = lambda p: Rat(p.num, -p.den)
    neg_num = lambda p: Rat(-p.num, p.den)
    neg_both = lambda p: Rat(-p.num, -p.den)
    r.add(
        "dual-den-reverses",
        "negating the denominator reverses the order",
        all(rat_le(p, q) == rat_le(neg_den(q), neg_den(p)) for p in grid for q in grid),
    )
    r.add(
        "dual-num-reverses",
        "negating the numerator reverses the order",
        all(rat_le(p, q) == rat_le(neg_num(q), neg_num(p)) for p in grid for q in grid),
    )
    r.add(
        "dual-both-preserves",
        "negating both preserves the order",
        all(rat_le(p, q) == rat_le(neg_both(p), neg_both(q)) for p in grid for q in grid),
    )
    r.add(
        "dual-involution",
        "the double negation is an involution",
        all(neg_both(neg_both(p)) == p for p in grid),
    )
    r.add(
        "dual-sign-classes",
        "negating both lands in the same class",
        all(rat_eq(neg_both(p), p) for p in grid),
    )
    # rows x/c against columns a/x under x/c ↦ a/x, for positive a, c
    ok_rows = True
    for c in range(1, N + 1):
        for a in range(1, N + 1):
            row = [Rat(x, c) for x in range(1, N + 1)]
            for p1 in row:
                for p2 in row:
                    flipped1, flipped2 = Rat(a, p1.num), Rat(a, p2.num)
                    if rat_le(p1, p2) != rat_le(flipped2, flipped1):
                        ok_rows = False
    r.add(
        "dual-row-column",
        "row windows map contravariantly onto column windows",
        ok_rows,
    )
    return r


def embedding_check(N: int) -> LawReport:
    """The inclusion of the integers as x/1 respects both operations and
    the order."""
    r = LawReport("int-embedding")
    xs = range(-N, N + 1)
    r.add(
        "emb-add",
        "ι(a) + ι(b) equals ι(a+b)",
        all(rat_eq(rat_add(embed_int(a), embed_int(b)), embed_int(a + b)) for a in xs for b in xs),
    )
    r.add(
        "emb-mul",
        "ι(a) · ι(b) equals ι(a·b)",
        all(rat_eq(rat_mul(embed_int(a), embed_int(b)), embed_int(a * b)) for a in xs for b in xs),
    )
    r.add(
        "emb-order",
        "ι preserves and reflects the order",
        all((a <= b) == rat_le(embed_int(a), embed_int(b)) for a in xs for b in xs),
    )
    r.add(
        "emb-monic",
        "ι separates distinct integers",
        all(
            rat_eq(embed_int(a), embed_int(b)) == (a == b) for a in xs for b in xs
        ),
    )
    return r
