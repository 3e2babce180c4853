"""Elements of Thompson's group V as prefix-code bijections.

A :class:`VElement` is a finite table of ``(domain, range)`` address pairs:
a point ``domain + w`` is sent to ``range + w``.  Elements are always held
in reduced form (no pair ``(d0, r0), (d1, r1)`` that could merge into
``(d, r)``), sorted shortlex by domain, so equality is table equality.

Maps act on the right and compose left to right: ``f * g`` means "apply f,
then g".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .address import (
    Address,
    AddressError,
    addresses_of_length,
    format_address,
    incomparable,
    is_complete_antichain,
    max_depth,
    parse_address,
    shortlex_key,
)

DEFAULT_ORDER_CAP = 10_000
DUMP_HEADER = "velement v1"


class ElementError(ValueError):
    pass


def _merge_siblings(table: dict[Address, Address]) -> dict[Address, Address]:
    table = dict(table)
    pending = [d for d in table if d]
    while pending:
        d = pending.pop()
        if d not in table or not d:
            continue
        parent = d[:-1]
        d0, d1 = parent + "0", parent + "1"
        if d0 not in table or d1 not in table:
            continue
        r0, r1 = table[d0], table[d1]
        if not (r0 and r1 and r0[:-1] == r1[:-1] and r0[-1] == "0" and r1[-1] == "1"):
            continue
        del table[d0], table[d1]
        table[parent] = r0[:-1]
        if parent:
            pending.append(parent)
    return table


def _validate(pairs: list[tuple[Address, Address]]) -> None:
    if not pairs:
        raise ElementError("empty pair table")
    for d, r in pairs:
        for a in (d, r):
            if not isinstance(a, str) or set(a) - {"0", "1"}:
                raise ElementError(f"invalid address {a!r}")
    domains = [d for d, _ in pairs]
    ranges = [r for _, r in pairs]
    if not is_complete_antichain(domains):
        raise ElementError("domain addresses do not form a complete antichain")
    if not is_complete_antichain(ranges):
        raise ElementError("range addresses do not form a complete antichain")


@dataclass(frozen=True)
class VElement:
    pairs: tuple[tuple[Address, Address], ...]

    # construction -------------------------------------------------------

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Address, Address]]) -> "VElement":
        """Validate a (possibly unreduced) pair table and reduce it."""
        pairs = [(d, r) for d, r in pairs]
        _validate(pairs)
        return cls._from_table(dict(pairs))

    @classmethod
    def _from_table(cls, table: dict[Address, Address]) -> "VElement":
        merged = _merge_siblings(table)
        return cls(tuple(sorted(merged.items(), key=lambda p: shortlex_key(p[0]))))

    @classmethod
    def identity(cls) -> "VElement":
        return cls((("", ""),))

    @classmethod
    def swap(cls, alpha: Address, beta: Address) -> "VElement":
        return from_swap(alpha, beta)

    # group structure ----------------------------------------------------

    def __mul__(self, other: "VElement") -> "VElement":
        return compose(self, other)

    def __invert__(self) -> "VElement":
        return inverse(self)

    def __pow__(self, n: int) -> "VElement":
        base = self if n >= 0 else inverse(self)
        n = abs(n)
        result = VElement.identity()
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def conj(self, by: "VElement") -> "VElement":
        """``self^by = by⁻¹ · self · by``."""
        return compose(compose(inverse(by), self), by)

    def is_identity(self) -> bool:
        return self.pairs == (("", ""),)

    @property
    def table(self) -> dict[Address, Address]:
        return dict(self.pairs)

    @property
    def depth(self) -> int:
        return max(len(d) for d, _ in self.pairs)

    def __call__(self, g: Address) -> Address | None:
        return act_address(self, g)

    def __str__(self) -> str:
        return dump(self)


@lru_cache(maxsize=None)
def from_swap(alpha: Address, beta: Address) -> VElement:
    """The transposition exchanging the cones at alpha and beta."""
    for a in (alpha, beta):
        if not isinstance(a, str) or set(a) - {"0", "1"}:
            raise ElementError(f"invalid address {a!r}")
    if not incomparable(alpha, beta):
        raise ElementError(
            f"<{format_address(alpha)} {format_address(beta)}> is not a swap: "
            "addresses must be incomparable"
        )
    # complement of alpha-cone and beta-cone: siblings along both root paths
    table = {alpha: beta, beta: alpha}
    for a in (alpha, beta):
        for k in range(len(a)):
            sib = a[:k] + ("1" if a[k] == "0" else "0")
            if not (alpha.startswith(sib) or beta.startswith(sib)):
                table[sib] = sib
    return VElement._from_table(table)


def identity() -> VElement:
    return VElement.identity()


def _lookup(table: dict[Address, Address], g: Address) -> tuple[Address, Address] | None:
    for k in range(len(g) + 1):
        head = g[:k]
        if head in table:
            return head, table[head]
    return None


def act_address(f: VElement, g: Address) -> Address | None:
    hit = _lookup(f.table, g)
    if hit is None:
        return None
    d, r = hit
    return r + g[len(d):]


def compose(f: VElement, g: VElement) -> VElement:
    """Apply f then g."""
    gt = g.table
    out: dict[Address, Address] = {}
    stack = list(f.pairs)
    while stack:
        d, r = stack.pop()
        hit = _lookup(gt, r)
        if hit is None:
            # r is a proper prefix of some domain address of g: refine
            stack.append((d + "0", r + "0"))
            stack.append((d + "1", r + "1"))
        else:
            gd, gr = hit
            out[d] = gr + r[len(gd):]
    return VElement._from_table(out)


def inverse(f: VElement) -> VElement:
    return VElement._from_table({r: d for d, r in f.pairs})


def canonicalize(f: VElement | Iterable[tuple[Address, Address]]) -> VElement:
    pairs = f.pairs if isinstance(f, VElement) else f
    return VElement.from_pairs(pairs)


def equals(f: VElement, g: VElement) -> bool:
    return f.pairs == g.pairs


def pointwise_equal(f: VElement, g: VElement) -> bool:
    """Independent equality check: compare images of every address at the
    maximal domain depth of both elements."""
    n = max(f.depth, g.depth)
    if n > max_depth():
        raise ElementError(f"depth {n} exceeds enumeration cap {max_depth()}")
    return all(act_address(f, a) == act_address(g, a) for a in addresses_of_length(n))


def order_of(f: VElement, cap: int = DEFAULT_ORDER_CAP) -> int | None:
    if cap < 1:
        raise ElementError("cap must be at least 1")
    power = f
    for k in range(1, cap + 1):
        if power.is_identity():
            return k
        power = compose(power, f)
    return None


def moved_region(f: VElement) -> list[Address]:
    region = set()
    for d, r in f.pairs:
        if d != r:
            region.add(d)
            region.add(r)
    return sorted(region, key=shortlex_key)


def supports_disjoint(f: VElement, g: VElement) -> bool:
    rf, rg = moved_region(f), moved_region(g)
    return all(incomparable(a, b) for a in rf for b in rg)


# text dump ------------------------------------------------------------------


def dump(f: VElement) -> str:
    lines = [f"{DUMP_HEADER} n={len(f.pairs)}"]
    lines += [f"{format_address(d)} -> {format_address(r)}" for d, r in f.pairs]
    return "\n".join(lines)


def load(text: str, reduce: bool = True) -> VElement:
    """Parse the dump format.  With ``reduce=False`` the table must already
    be reduced and sorted (exact round trip check)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith(DUMP_HEADER):
        raise ElementError(f"missing header {DUMP_HEADER!r}")
    head = lines[0][len(DUMP_HEADER):].strip()
    if not head.startswith("n="):
        raise ElementError("header must carry n=<pairs>")
    n = int(head[2:])
    pairs = []
    for ln in lines[1:]:
        if "->" not in ln:
            raise ElementError(f"bad pair line {ln!r}")
        d, r = ln.split("->")
        try:
            pairs.append((parse_address(d), parse_address(r)))
        except AddressError as exc:
            raise ElementError(str(exc)) from None
    if len(pairs) != n:
        raise ElementError(f"header says n={n} but {len(pairs)} pairs given")
    f = VElement.from_pairs(pairs)
    if not reduce and f.pairs != tuple(pairs):
        raise ElementError("pair table is not in reduced sorted form")
    return f


def parse_pairs(text: str) -> VElement:
    """Compact form ``"00->10, 01->11, 1->0"``."""
    pairs = []
    for chunk in text.replace(";", ",").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "->" not in chunk:
            raise ElementError(f"bad pair {chunk!r}")
        d, r = chunk.split("->")
        pairs.append((parse_address(d), parse_address(r)))
    return VElement.from_pairs(pairs)
