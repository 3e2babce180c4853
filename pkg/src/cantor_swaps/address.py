"""Finite binary addresses: nodes of the infinite rooted binary tree.

An address is a plain ``str`` over the letters ``"0"`` and ``"1"``; the empty
string is the root (rendered ``e`` in text output).
"""

from __future__ import annotations

import enum
import os
from itertools import product

Address = str

DEFAULT_MAX_DEPTH = 16
ENV_MAX_DEPTH = "CANTOR_SWAPS_MAX_DEPTH"

_max_depth_override: int | None = None


class AddressError(ValueError):
    pass


class Relation(enum.Enum):
    EQUAL = "Equal"
    PREFIX_OF = "PrefixOf"
    EXTENSION_OF = "ExtensionOf"
    INCOMPARABLE = "Incomparable"


def max_depth() -> int:
    """Current enumeration cap (explicit override, then env var, then 16)."""
    if _max_depth_override is not None:
        return _max_depth_override
    env = os.environ.get(ENV_MAX_DEPTH)
    if env:
        try:
            return int(env)
        except ValueError:
            raise AddressError(f"{ENV_MAX_DEPTH} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_DEPTH


def set_max_depth(value: int | None) -> None:
    global _max_depth_override
    if value is not None and value < 0:
        raise AddressError("max depth must be non-negative")
    _max_depth_override = value


def complement(letter: str) -> str:
    if letter == "0":
        return "1"
    if letter == "1":
        return "0"
    raise AddressError(f"not a letter: {letter!r}")


def parse_address(text: str) -> Address:
    """Accepts ``""`` or ``"e"`` for the root, otherwise a 0/1 string."""
    text = text.strip()
    if text in ("", "e", "ε"):
        return ""
    if set(text) - {"0", "1"}:
        raise AddressError(f"invalid address {text!r}: only 0 and 1 allowed")
    return text


def format_address(a: Address) -> str:
    return a if a else "e"


def check_address(a: Address) -> Address:
    if not isinstance(a, str) or set(a) - {"0", "1"}:
        raise AddressError(f"invalid address {a!r}")
    return a


def is_prefix(a: Address, b: Address) -> bool:
    """a ⪯ b (a is a prefix of b, possibly equal)."""
    return b.startswith(a)


def compare(a: Address, b: Address) -> Relation:
    if a == b:
        return Relation.EQUAL
    if b.startswith(a):
        return Relation.PREFIX_OF
    if a.startswith(b):
        return Relation.EXTENSION_OF
    return Relation.INCOMPARABLE


def incomparable(a: Address, b: Address) -> bool:
    return not (a.startswith(b) or b.startswith(a))


def concat(a: Address, b: Address) -> Address:
    return a + b


def shortlex_key(a: Address) -> tuple[int, str]:
    return (len(a), a)


def swap_address_action(g: Address, alpha: Address, beta: Address) -> Address | None:
    """Partial action ``g · <alpha beta>``; ``None`` when g is a proper prefix
    of alpha or beta."""
    if not incomparable(alpha, beta):
        raise AddressError(
            f"invalid swap <{format_address(alpha)} {format_address(beta)}>: "
            "addresses must be incomparable"
        )
    if g.startswith(alpha):
        return beta + g[len(alpha):]
    if g.startswith(beta):
        return alpha + g[len(beta):]
    if incomparable(g, alpha) and incomparable(g, beta):
        return g
    return None


def enumerate_addresses(max_len: int, cap: int | None = None) -> list[Address]:
    """All addresses of length 0..max_len in shortlex order."""
    limit = max_depth() if cap is None else cap
    if max_len < 0:
        raise AddressError("max_len must be non-negative")
    if max_len > limit:
        raise AddressError(f"max_len {max_len} exceeds enumeration cap {limit}")
    out = []
    for n in range(max_len + 1):
        out.extend("".join(p) for p in product("01", repeat=n))
    return out


def addresses_of_length(n: int) -> list[Address]:
    return ["".join(p) for p in product("01", repeat=n)]


def is_complete_antichain(s) -> bool:
    """True iff the addresses are pairwise incomparable and their cones
    partition Cantor space."""
    addrs = list(s)
    if not addrs:
        raise AddressError("empty address set")
    if len(set(addrs)) != len(addrs):
        return False
    ordered = sorted(addrs)
    # in lexicographic order a prefix is always immediately followed by an extension of it
    for x, y in zip(ordered, ordered[1:]):
        if y.startswith(x):
            return False
    depth = max(len(a) for a in addrs)
    return sum(1 << (depth - len(a)) for a in addrs) == 1 << depth
