"""Finite families of swap identities among addresses of length at most 3.

Each family is a pattern over letters x, y, z, t in {0, 1} (``x'`` is the
complementary letter), distinct length-2 addresses k, l, m, n, and distinct
length-3 addresses p, q, r, s.  Enumerating a family instantiates the
pattern over its whole quantifier range; every instance is a relator that
must evaluate to the identity in V.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as cartesian
from typing import Callable, Iterator

from .address import Address, addresses_of_length, complement, incomparable, swap_address_action
from .words import Commutator, Conjugate, WordExpr, format_expr, product, swap

X = ("0", "1")
X2 = tuple(addresses_of_length(2))
X3 = tuple(addresses_of_length(3))
SIGMA2 = (("0", "1"),) + tuple((a, b) for a, b in permutations(X2, 2) if a < b)


def bar(x: str) -> str:
    return complement(x)


@dataclass(frozen=True)
class Instance:
    family: str
    params: str
    lhs: WordExpr
    rhs: WordExpr | None  # None: lhs is a relator (commutator) by itself

    @property
    def text(self) -> str:
        if self.rhs is None:
            return f"{format_expr(self.lhs)} = 1"
        return f"{format_expr(self.lhs)} = {format_expr(self.rhs)}"


def _s(a: Address, b: Address):
    return swap(a, b)


def _conj(a1, b1, a2, b2):
    return Conjugate(_s(a1, b1), _s(a2, b2))


def _comm(a1, b1, a2, b2):
    return Commutator(_s(a1, b1), _s(a2, b2))


Family = Callable[[], Iterator[tuple[str, WordExpr, WordExpr | None]]]
FAMILIES: list[tuple[str, Family]] = []


def family(pattern: str):
    def register(fn: Family) -> Family:
        FAMILIES.append((pattern, fn))
        return fn

    return register


def _xy():
    return cartesian(X, X)


def _xyz():
    return cartesian(X, X, X)


@family("<x x'y>^<0 1> = <x' xy>")
def _f01():
    for x, y in _xy():
        yield f"x={x} y={y}", _conj(x, bar(x) + y, "0", "1"), _s(bar(x), x + y)


@family("<x x'y>^<x'y x'y'> = <x x'y'>")
def _f02():
    for x, y in _xy():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y}", _conj(x, xb + y, xb + y, xb + yb), _s(x, xb + yb)


@family("<x x'y>^<x x'y'> = <x'y x'y'>")
def _f03():
    for x, y in _xy():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y}", _conj(x, xb + y, x, xb + yb), _s(xb + y, xb + yb)


@family("<x x'yz>^<0 1> = <x' xyz>")
def _f04():
    for x, y, z in _xyz():
        yield f"x={x} y={y} z={z}", _conj(x, bar(x) + y + z, "0", "1"), _s(bar(x), x + y + z)


@family("<x x'yz>^<x'y x'y'> = <x x'y'z>")
def _f05():
    for x, y, z in _xyz():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y} z={z}", _conj(x, xb + y + z, xb + y, xb + yb), _s(x, xb + yb + z)


@family("<x x'yz>^<x x'y> = <xz x'y>")
def _f06():
    for x, y, z in _xyz():
        xb = bar(x)
        yield f"x={x} y={y} z={z}", _conj(x, xb + y + z, x, xb + y), _s(x + z, xb + y)


@family("<k lx>^tau = <k.tau lx.tau>  (tau a swap with addresses of length <= 2)")
def _f07():
    for k, l in permutations(X2, 2):
        for x in X:
            for g, d in SIGMA2:
                a2 = swap_address_action(k, g, d)
                b2 = swap_address_action(l + x, g, d)
                if a2 is None or b2 is None:
                    continue
                yield f"k={k} l={l} x={x} tau=<{g} {d}>", _conj(k, l + x, g, d), _s(a2, b2)


@family("<x x'y> = <x0 x'y0> <x1 x'y1>")
def _f08():
    for x, y in _xy():
        xb = bar(x)
        yield (
            f"x={x} y={y}",
            _s(x, xb + y),
            product(_s(x + "0", xb + y + "0"), _s(x + "1", xb + y + "1")),
        )


@family("<k lx>^<m lx> = <k m>")
def _f09():
    for k, l, m in permutations(X2, 3):
        for x in X:
            yield f"k={k} l={l} m={m} x={x}", _conj(k, l + x, m, l + x), _s(k, m)


@family("<xy x'z>^<x x'z'> = <x'z x'z'y>")
def _f10():
    for x, y, z in _xyz():
        xb, zb = bar(x), bar(z)
        yield f"x={x} y={y} z={z}", _conj(x + y, xb + z, x, xb + zb), _s(xb + z, xb + zb + y)


@family("<xy x'zt>^<x x'z> = <xt x'zy>")
def _f11():
    for x, y, z, t in cartesian(X, X, X, X):
        xb = bar(x)
        yield f"x={x} y={y} z={z} t={t}", _conj(x + y, xb + z + t, x, xb + z), _s(x + t, xb + z + y)


@family("<k lx>^<k lx'> = <l0 l1>")
def _f12():
    for k, l in permutations(X2, 2):
        for x in X:
            yield f"k={k} l={l} x={x}", _conj(k, l + x, k, l + bar(x)), _s(l + "0", l + "1")


@family("<k lx>^<l0 l1> = <k lx'>")
def _f13():
    for k, l in permutations(X2, 2):
        for x in X:
            yield f"k={k} l={l} x={x}", _conj(k, l + x, l + "0", l + "1"), _s(k, l + bar(x))


@family("[<x x'y>, <x'y'0 x'y'1>] = 1")
def _f14():
    for x, y in _xy():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y}", _comm(x, xb + y, xb + yb + "0", xb + yb + "1"), None


@family("[<k l0>, <m l1>] = 1")
def _f15():
    for k, l, m in permutations(X2, 3):
        yield f"k={k} l={l} m={m}", _comm(k, l + "0", m, l + "1"), None


@family("[<k lx>, <m ny>] = 1")
def _f16():
    for k, l, m, n in permutations(X2, 4):
        for x, y in _xy():
            yield f"k={k} l={l} m={m} n={n} x={x} y={y}", _comm(k, l + x, m, n + y), None


@family("[<x x'yz>, <x'y' x'yz'>] = 1")
def _f17():
    for x, y, z in _xyz():
        xb, yb, zb = bar(x), bar(y), bar(z)
        yield f"x={x} y={y} z={z}", _comm(x, xb + y + z, xb + yb, xb + y + zb), None


@family("<x x'y>^<x x'y'z> = <x'y x'y'z>")
def _f18():
    for x, y, z in _xyz():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y} z={z}", _conj(x, xb + y, x, xb + yb + z), _s(xb + y, xb + yb + z)


@family("<x x'y>^<x'y x'y'z> = <x x'y'z>")
def _f19():
    for x, y, z in _xyz():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y} z={z}", _conj(x, xb + y, xb + y, xb + yb + z), _s(x, xb + yb + z)


@family("<x x'yz>^<x x'y'> = <x'y' x'yz>")
def _f20():
    for x, y, z in _xyz():
        xb, yb = bar(x), bar(y)
        yield f"x={x} y={y} z={z}", _conj(x, xb + y + z, x, xb + yb), _s(xb + yb, xb + y + z)


@family("<p q>^tau = <p.tau q.tau>  (tau a swap with addresses of length <= 2)")
def _f21():
    for p, q in permutations(X3, 2):
        for g, d in SIGMA2:
            yield (
                f"p={p} q={q} tau=<{g} {d}>",
                _conj(p, q, g, d),
                _s(swap_address_action(p, g, d), swap_address_action(q, g, d)),
            )


@family("<k l> = <k0 l0> <k1 l1>")
def _f22():
    for k, l in permutations(X2, 2):
        yield f"k={k} l={l}", _s(k, l), product(_s(k + "0", l + "0"), _s(k + "1", l + "1"))


def _outside(k: Address) -> list[Address]:
    return [p for p in X3 if incomparable(k, p)]


@family("<k p>^<k q> = <p q>  (k incomparable with p, q)")
def _f23():
    for k in X2:
        for p, q in permutations(_outside(k), 2):
            yield f"k={k} p={p} q={q}", _conj(k, p, k, q), _s(p, q)


@family("<k p>^<p q> = <k q>  (k incomparable with p, q)")
def _f24():
    for k in X2:
        for p, q in permutations(_outside(k), 2):
            yield f"k={k} p={p} q={q}", _conj(k, p, p, q), _s(k, q)


@family("[<k lx>, <m0 m1>] = 1")
def _f25():
    for k, l, m in permutations(X2, 3):
        for x in X:
            yield f"k={k} l={l} m={m} x={x}", _comm(k, l + x, m + "0", m + "1"), None


@family("[<k0 k1>, <lx my>] = 1")
def _f26():
    for k, l, m in permutations(X2, 3):
        for x, y in _xy():
            yield f"k={k} l={l} m={m} x={x} y={y}", _comm(k + "0", k + "1", l + x, m + y), None


@family("<kx ly>^<k0 k1> = <kx' ly>")
def _f27():
    for k, l in permutations(X2, 2):
        for x, y in _xy():
            yield f"k={k} l={l} x={x} y={y}", _conj(k + x, l + y, k + "0", k + "1"), _s(k + bar(x), l + y)


@family("[<k p>, <q r>] = 1  (k incomparable with p, q, r)")
def _f28():
    for k in X2:
        for p, q, r in permutations(_outside(k), 3):
            yield f"k={k} p={p} q={q} r={r}", _comm(k, p, q, r), None


@family("<p q>^<p r> = <q r>")
def _f29():
    for p, q, r in permutations(X3, 3):
        yield f"p={p} q={q} r={r}", _conj(p, q, p, r), _s(q, r)


@family("[<p q>, <r s>] = 1")
def _f30():
    for p, q, r, s in permutations(X3, 4):
        yield f"p={p} q={q} r={r} s={s}", _comm(p, q, r, s), None


@family("<x'y0 x'y1>^<x x'y> = <x0 x1>")
def _f31():
    for x, y in _xy():
        xb = bar(x)
        yield f"x={x} y={y}", _conj(xb + y + "0", xb + y + "1", x, xb + y), _s(x + "0", x + "1")


@family("[<x p>, <q r>] = 1  (x incomparable with p, q, r)")
def _f32():
    for x in X:
        for p, q, r in permutations(_outside(x), 3):
            yield f"x={x} p={p} q={q} r={r}", _comm(x, p, q, r), None


@family("<x p>^<p q> = <x q>")
def _f33():
    for x in X:
        for p, q in permutations(_outside(x), 2):
            yield f"x={x} p={p} q={q}", _conj(x, p, p, q), _s(x, q)


@family("<p q>^<x p> = <x q>")
def _f34():
    for x in X:
        for p, q in permutations(_outside(x), 2):
            yield f"x={x} p={p} q={q}", _conj(p, q, x, p), _s(x, q)


@family("<x'yz x'y't>^<x x'y> = <xz x'y't>")
def _f35():
    for x, y, z, t in cartesian(X, X, X, X):
        xb, yb = bar(x), bar(y)
        yield (
            f"x={x} y={y} z={z} t={t}",
            _conj(xb + y + z, xb + yb + t, x, xb + y),
            _s(x + z, xb + yb + t),
        )


def enumerate_instances() -> Iterator[Instance]:
    for pattern, fn in FAMILIES:
        for params, lhs, rhs in fn():
            yield Instance(pattern, params, lhs, rhs)


def family_sizes() -> dict[str, int]:
    return {pattern: sum(1 for _ in fn()) for pattern, fn in FAMILIES}
