"""Swap decomposition and the relator suite runner."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import families
from .address import Address, AddressError, format_address, incomparable, swap_address_action
from .element import VElement, dump, from_swap, identity
from .presentations import (
    ABC_IN_UV,
    UV_IN_ABC,
    GeneratingSet,
    Presentation,
    Relator,
    build_swap_table,
    evaluate,
    expand_cfp,
    genset_swaps,
    presentation_2gen,
    presentation_cfp,
    presentation_cfp_aux,
    presentation_P3,
    presentation_P3_kb,
    presentation_prop51,
    presentation_swap_table,
    presentation_tietze_uv,
    truncated_infinite_presentation,
)
from .words import (
    SwapLit,
    Word,
    WordExpr,
    format_expr,
    generators_of,
    parse,
    product,
    substitute,
    word_to_expr,
)

DEFAULT_DECOMPOSE_CAP = 8

BASE_SWAPS = (
    SwapLit("00", "01"),
    SwapLit("01", "10"),
    SwapLit("10", "11"),
    SwapLit("1", "00"),
)


class DecompositionError(ValueError):
    pass


# decomposition ---------------------------------------------------------------


def _cancel_involutions(letters: Iterable[SwapLit]) -> Word:
    stack: list[SwapLit] = []
    for g in letters:
        if stack and stack[-1] == g:
            stack.pop()
        else:
            stack.append(g)
    return tuple((g, 1) for g in stack)


def _conjugator_path(alpha: Address, beta: Address, bound: int) -> list[SwapLit] | None:
    """Shortest sequence w of base swaps with (00, 01)·w equal to (alpha, beta)
    or (beta, alpha), exploring only addresses of length <= bound."""
    start = ("00", "01")
    targets = {(alpha, beta), (beta, alpha)}
    if start in targets:
        return []
    parent: dict[tuple[Address, Address], tuple[tuple[Address, Address], SwapLit]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for g in BASE_SWAPS:
            p = swap_address_action(state[0], g.alpha, g.beta)
            q = swap_address_action(state[1], g.alpha, g.beta)
            if p is None or q is None or len(p) > bound or len(q) > bound:
                continue
            nxt = (p, q)
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = (state, g)
            if nxt in targets:
                path = []
                while nxt != start:
                    nxt, g = parent[nxt]
                    path.append(g)
                return path[::-1]
            queue.append(nxt)
    return None


@lru_cache(maxsize=None)
def _decompose(alpha: Address, beta: Address) -> tuple[SwapLit, ...]:
    for g in BASE_SWAPS:
        if {g.alpha, g.beta} == {alpha, beta}:
            return (g,)
    path = _conjugator_path(alpha, beta, max(len(alpha), len(beta)) + 1)
    if path is not None:
        inv = list(reversed(path))  # every base swap is an involution
        return tuple(g for g, _ in _cancel_involutions(inv + [BASE_SWAPS[0]] + path))
    # no conjugate of <00 01> reaches a pair containing the address 0; split instead
    left = _decompose(alpha + "0", beta + "0")
    right = _decompose(alpha + "1", beta + "1")
    return tuple(g for g, _ in _cancel_involutions(left + right))


def decompose_swap(alpha: Address, beta: Address, cap: int = DEFAULT_DECOMPOSE_CAP) -> Word:
    """A word over the swaps <00 01>, <01 10>, <10 11>, <1 00> equal to
    <alpha beta> in V."""
    if not incomparable(alpha, beta):
        raise AddressError(
            f"<{format_address(alpha)} {format_address(beta)}> needs incomparable addresses"
        )
    if max(len(alpha), len(beta)) > cap:
        raise DecompositionError(f"address length exceeds decomposition cap {cap}")
    word = tuple((g, 1) for g in _decompose(alpha, beta))
    if evaluate(word_to_expr(word), genset_swaps()) != from_swap(alpha, beta):
        raise DecompositionError(f"internal error: bad decomposition of <{alpha} {beta}>")
    return word


def even_factorization(pairs: list[tuple[Address, Address]]) -> list[tuple[Address, Address]]:
    """Same product, even number of swaps: an odd list gets its first swap
    split into two."""
    for a, b in pairs:
        if not incomparable(a, b):
            raise AddressError(f"<{format_address(a)} {format_address(b)}> is not a swap")
    if len(pairs) % 2 == 0:
        return list(pairs)
    (a, b), rest = pairs[0], list(pairs[1:])
    return [(a + "0", b + "0"), (a + "1", b + "1")] + rest


def swap_product(pairs: Iterable[tuple[Address, Address]]) -> VElement:
    out = identity()
    for a, b in pairs:
        out = out * from_swap(a, b)
    return out


# verification -----------------------------------------------------------------------


def verify_relator(r: WordExpr | str, gs: GeneratingSet) -> bool:
    return evaluate(r, gs).is_identity()


@dataclass
class VerificationReport:
    suite: str
    total: int = 0
    passed: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.suite}: {self.passed}/{self.total} passed"

    def to_text(self) -> str:
        lines = [self.summary()]
        for text, element in self.failures:
            lines.append(f"  FAIL {text}")
            lines += ["    " + ln for ln in element.splitlines()]
        return "\n".join(lines)

    def to_tsv(self) -> str:
        return f"{self.suite}\t{self.total}\t{self.passed}"


def run_suite(p: Presentation) -> VerificationReport:
    report = VerificationReport(p.name)
    for r in p.relators:
        report.total += 1
        bad = []
        for text, expr in r.forms:
            value = evaluate(expr, p.genset)
            if not value.is_identity():
                bad.append((f"{r.label}: {text}", dump(value)))
        if bad:
            report.failures += bad
        else:
            report.passed += 1
    return report


def verify_prop51() -> VerificationReport:
    return run_suite(presentation_prop51())


def verify_tietze_uv() -> VerificationReport:
    return run_suite(presentation_tietze_uv())


def presentation_swap_families() -> Presentation:
    rels = []
    for inst in families.enumerate_instances():
        label = f"{inst.family} [{inst.params}]"
        if inst.rhs is None:
            rels.append(Relator(label, ((inst.text, inst.lhs),)))
        else:
            rels.append(Relator.equality(label, inst.lhs, inst.rhs))
    return Presentation("section3", (), tuple(rels), genset_swaps())


def verify_swap_families() -> VerificationReport:
    return run_suite(presentation_swap_families())


SUITES: dict[str, Callable[[], Presentation]] = {
    "p3": presentation_P3,
    "p3-kb": presentation_P3_kb,
    "two-gen": presentation_2gen,
    "cfp": presentation_cfp,
    "cfp-lemma": presentation_cfp_aux,
    "inf-L2": lambda: truncated_infinite_presentation(2),
    "inf-L3": lambda: truncated_infinite_presentation(3),
    "swap-table": presentation_swap_table,
    "prop51": presentation_prop51,
    "tietze-uv": presentation_tietze_uv,
    "section3": presentation_swap_families,
}

SUITE_DESCRIPTIONS = {
    "p3": "three-generator presentation, swap and word forms of its eight relations",
    "p3-kb": "the eight shortened relators over a, b, c",
    "two-gen": "seven relators over u, v",
    "cfp": "fourteen relators over A, B, C, pi0",
    "cfp-lemma": "swap formulas for the auxiliary elements C_n, X_n, pi_n",
    "inf-L2": "order, conjugacy and split relations with addresses of length <= 2",
    "inf-L3": "order, conjugacy and split relations with addresses of length <= 3",
    "swap-table": "abc word for every swap with addresses of length <= 3",
    "prop51": "the cfp generators produce a, c and <01 10>",
    "tietze-uv": "conversion formulas between a, b, c and u, v",
    "section3": "enumerated identities among swaps of length <= 3",
}


def suite_presentation(name: str) -> Presentation:
    if name in SUITES:
        return SUITES[name]()
    if name.startswith("inf-L"):
        try:
            level = int(name[5:])
        except ValueError:
            level = 0
        if 1 <= level <= 5:
            return truncated_infinite_presentation(level)
    raise KeyError(name)


def run_named_suite(name: str) -> list[VerificationReport]:
    """``all`` runs every registered suite in registry order."""
    if name == "all":
        return [run_suite(SUITES[n]()) for n in SUITES]
    return [run_suite(suite_presentation(name))]


# conversion between generating sets -----------------------------------------------------

ABC_AS_SWAPS = {
    "a": parse("<00 01>"),
    "b": parse("<01 10> <01 11>"),
    "c": parse("<1 00>"),
}
UV_AS_SWAPS = {
    "u": parse("<00 01> <10 110> <10 111>"),
    "v": ABC_AS_SWAPS["b"],
}
CFP_AS_SWAPS = {
    "A": parse("<0 1> <0 10> <10 11>"),
    "B": parse("<10 11> <10 110> <110 111>"),
    "C": parse("<10 11> <0 10>"),
    "pi0": parse("<0 10>"),
}

CONVERT_SOURCES = ("abc", "uv", "cfp", "swaps")
CONVERT_TARGETS = ("abc", "uv", "swaps", "gen4")


class ConversionError(ValueError):
    pass


def _swap_to_abc(g: SwapLit) -> WordExpr:
    table = build_swap_table()
    if (g.alpha, g.beta) in table:
        return table[g.alpha, g.beta]
    letters = decompose_swap(g.alpha, g.beta, cap=max(len(g.alpha), len(g.beta)))
    return product(*(table[s.alpha, s.beta] for s, _ in letters))


def _swaps_to_abc(e: WordExpr) -> WordExpr:
    mapping = {g: _swap_to_abc(g) for g in generators_of(e) if isinstance(g, SwapLit)}
    return substitute(e, mapping) if mapping else e


def _only(e: WordExpr, allowed: set[str], source: str) -> None:
    for g in generators_of(e):
        if not isinstance(g, SwapLit) and g not in allowed:
            raise ConversionError(f"generator {g!r} is not in the {source} set")


def _to_swaps(e: WordExpr, source: str) -> WordExpr:
    if source == "abc":
        _only(e, set(ABC_AS_SWAPS), source)
        return substitute(e, ABC_AS_SWAPS)
    if source == "uv":
        _only(e, set(UV_AS_SWAPS), source)
        return substitute(e, UV_AS_SWAPS)
    if source == "cfp":
        e = expand_cfp(e)
        _only(e, set(CFP_AS_SWAPS), source)
        return substitute(e, CFP_AS_SWAPS)
    if source == "swaps":
        _only(e, set(), source)
        return e
    raise ConversionError(f"cannot convert from {source!r}")


def _to_abc(e: WordExpr, source: str) -> WordExpr:
    if source == "abc":
        _only(e, set(ABC_AS_SWAPS), source)
        return _swaps_to_abc(e)
    if source == "uv":
        _only(e, set(UV_IN_ABC), source)
        return _swaps_to_abc(substitute(e, UV_IN_ABC))
    return _swaps_to_abc(_to_swaps(e, source))


def convert(e: WordExpr | str, source: str, target: str) -> WordExpr:
    """Rewrite a word over one generating set as a word over another.

    Only the routes with explicit formulas are available: abc and uv via
    the Tietze formulas, swaps to abc via the swap table, anything to swap
    literals, and swap literals to the four base swaps by decomposition."""
    if isinstance(e, str):
        e = parse(e)
    if source not in CONVERT_SOURCES:
        raise ConversionError(f"unknown source set {source!r}")
    if target == "swaps":
        return _to_swaps(e, source)
    if target == "gen4":
        s = _to_swaps(e, source)
        mapping = {}
        for g in generators_of(s):
            letters = decompose_swap(g.alpha, g.beta, cap=max(len(g.alpha), len(g.beta)))
            mapping[g] = word_to_expr(letters)
        return substitute(s, mapping)
    if target == "abc":
        return _to_abc(e, source)
    if target == "uv":
        return substitute(_to_abc(e, source), ABC_IN_UV)
    raise ConversionError(f"unknown target set {target!r}")


def format_decomposition(word: Word) -> str:
    return format_expr(word_to_expr(word))
