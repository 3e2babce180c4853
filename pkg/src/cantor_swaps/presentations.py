"""Generating sets for V together with the relator lists checked against
them."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as cartesian
from typing import Callable, Iterator, Mapping

from .address import (
    Address,
    addresses_of_length,
    complement,
    incomparable,
    shortlex_key,
    swap_address_action,
)
from .element import VElement, from_swap, identity
from .words import (
    Commutator,
    Conjugate,
    Empty,
    Gen,
    GenName,
    Inverse,
    Power,
    Product,
    SwapLit,
    WordExpr,
    format_expr,
    generators_of,
    parse,
    parse_relation,
    product,
    substitute,
    swap,
)

X = ("0", "1")
X2 = addresses_of_length(2)


class UnknownGenerator(KeyError):
    def __str__(self):
        return f"unknown generator {self.args[0]!r}"


# generating sets -------------------------------------------------------------


@dataclass(frozen=True)
class GeneratingSet:
    """Named images of generator symbols; swap literals always resolve.

    ``derived`` may expand extra names (like ``C2`` or ``pi1``) into word
    expressions over the base generators."""

    name: str
    images: Mapping[str, VElement]
    derived: Callable[[str], WordExpr | None] | None = field(default=None, compare=False)

    def resolve(self, g: GenName) -> VElement:
        if isinstance(g, SwapLit):
            return from_swap(g.alpha, g.beta)
        if g in self.images:
            return self.images[g]
        if self.derived is not None:
            expr = self.derived(g)
            if expr is not None:
                return evaluate(expr, self)
        raise UnknownGenerator(g)

    def knows(self, g: GenName) -> bool:
        try:
            self.resolve(g)
        except UnknownGenerator:
            return False
        return True

    def __getitem__(self, g: GenName) -> VElement:
        return self.resolve(g)


def evaluate(e: WordExpr | str, gs: GeneratingSet) -> VElement:
    """Evaluation homomorphism from word expressions into V."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(e, Empty):
        return identity()
    if isinstance(e, Gen):
        return gs.resolve(e.name)
    if isinstance(e, Inverse):
        return ~evaluate(e.base, gs)
    if isinstance(e, Power):
        return evaluate(e.base, gs) ** e.exponent
    if isinstance(e, Conjugate):
        return evaluate(e.base, gs).conj(evaluate(e.by, gs))
    if isinstance(e, Commutator):
        x, y = evaluate(e.left, gs), evaluate(e.right, gs)
        return (~x) * (~y) * x * y
    if isinstance(e, Product):
        out = identity()
        for f in e.factors:
            out = out * evaluate(f, gs)
        return out
    raise TypeError(f"not a word expression: {e!r}")


def evaluate_word(word, gs: GeneratingSet) -> VElement:
    out = identity()
    for g, e in word:
        img = gs.resolve(g)
        out = out * (img if e == 1 else ~img)
    return out


_S = from_swap


@lru_cache(maxsize=None)
def genset_swaps() -> GeneratingSet:
    return GeneratingSet("swaps", {})


@lru_cache(maxsize=None)
def genset_abc() -> GeneratingSet:
    return GeneratingSet(
        "abc",
        {
            "a": _S("00", "01"),
            "b": _S("01", "10") * _S("01", "11"),
            "c": _S("1", "00"),
        },
    )


@lru_cache(maxsize=None)
def genset_uv() -> GeneratingSet:
    return GeneratingSet(
        "uv",
        {
            "u": _S("00", "01") * _S("10", "110") * _S("10", "111"),
            "v": genset_abc()["b"],
        },
    )


_DERIVED = re.compile(r"^(C|X|pi)(\d+)$")


def cfp_definition(name: str) -> WordExpr | None:
    """Word over A, B, C, pi0 for the auxiliary names C<n>, X<n>, pi<n>."""
    m = _DERIVED.match(name)
    if m is None:
        return None
    kind, n = m.group(1), int(m.group(2))
    if kind == "pi" and n == 0:
        return None
    if n < 1:
        raise ValueError(f"{name}: index must be at least 1")
    if kind == "C":
        return parse(f"A^{1 - n} C B^{n - 1}")
    if kind == "X":
        return parse(f"A^{1 - n} B A^{n - 1}")
    if n == 1:
        return parse("C2^-1 pi0 C2")
    return parse(f"A^{1 - n} pi1 A^{n - 1}")


def expand_cfp(e: WordExpr) -> WordExpr:
    """Rewrite every auxiliary CFP name into the four base generators."""
    mapping = {}
    for g in generators_of(e):
        if isinstance(g, str):
            d = cfp_definition(g)
            if d is not None:
                mapping[g] = expand_cfp(d)
    return substitute(e, mapping) if mapping else e


@lru_cache(maxsize=None)
def genset_cfp() -> GeneratingSet:
    return GeneratingSet(
        "cfp",
        {
            "A": _S("0", "1") * _S("0", "10") * _S("10", "11"),
            "B": _S("10", "11") * _S("10", "110") * _S("110", "111"),
            "C": _S("10", "11") * _S("0", "10"),
            "pi0": _S("0", "10"),
        },
        derived=cfp_definition,
    )


def derived_cfp(kind: str, n: int) -> VElement:
    if kind not in ("C", "X", "pi"):
        raise ValueError(f"unknown derived kind {kind!r}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return genset_cfp().resolve(f"{kind}{n}")


@lru_cache(maxsize=None)
def genset_all() -> GeneratingSet:
    """Union of the abc, uv and cfp generating sets (names do not clash)."""
    images = {}
    for gs in (genset_abc(), genset_uv(), genset_cfp()):
        images.update(gs.images)
    return GeneratingSet("all", images, derived=cfp_definition)


GENSETS: dict[str, Callable[[], GeneratingSet]] = {
    "abc": genset_abc,
    "uv": genset_uv,
    "cfp": genset_cfp,
    "swaps": genset_swaps,
    "all": genset_all,
}


def get_genset(name: str) -> GeneratingSet:
    try:
        return GENSETS[name]()
    except KeyError:
        raise ValueError(f"unknown generating set {name!r} (choose from {', '.join(GENSETS)})") from None


# swap table ----------------------------------------------------------------------


def _key(alpha: Address, beta: Address) -> tuple[Address, Address]:
    return tuple(sorted((alpha, beta), key=shortlex_key))


class SwapTable:
    """Words over a, b, c for every swap with both addresses of length <= 3,
    built in dependency order: each definition may only use entries that
    already exist."""

    def __init__(self):
        self._entries: dict[tuple[Address, Address], WordExpr] = {}

    def __getitem__(self, key: tuple[Address, Address]) -> WordExpr:
        return self._entries[_key(*key)]

    def __contains__(self, key) -> bool:
        return _key(*key) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def entry(self, alpha: Address, beta: Address) -> WordExpr:
        return self[alpha, beta]

    def items(self) -> Iterator[tuple[tuple[Address, Address], WordExpr]]:
        return iter(self._entries.items())

    def keys(self):
        return self._entries.keys()

    def define(self, alpha: Address, beta: Address, expr: WordExpr) -> None:
        k = _key(alpha, beta)
        if k in self._entries:
            raise ValueError(f"<{alpha} {beta}> already defined")
        if not incomparable(alpha, beta):
            raise ValueError(f"<{alpha} {beta}> is not a swap")
        self._entries[k] = expr

    def define_if_new(self, alpha: Address, beta: Address, expr: WordExpr) -> bool:
        if (alpha, beta) in self:
            return False
        self.define(alpha, beta, expr)
        return True


def rho_transpositions(kappa: Address, lam: Address) -> list[tuple[Address, Address]]:
    """Transpositions of X² whose left-to-right product sends 00 to kappa
    and 01 to lam; the other two points go to the leftover pair in
    shortlex order."""
    rest = sorted(set(X2) - {kappa, lam})
    perm = {"00": kappa, "01": lam, "10": rest[0], "11": rest[1]}
    out = []
    seen = set()
    for start in X2:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out += [(cycle[0], c) for c in cycle[1:]]
    for q in X2:
        image = q
        for s in out:
            image = swap_address_action(image, *s)
        assert image == perm[q], "transposition product does not realise rho"
    return out


def _conj(x: WordExpr, by: WordExpr) -> WordExpr:
    return x if isinstance(by, Empty) else Conjugate(x, by)


@lru_cache(maxsize=None)
def build_swap_table() -> SwapTable:
    t = SwapTable()
    a, b, c = Gen("a"), Gen("b"), Gen("c")
    b_inv = Power(b, -1)

    t.define("00", "01", a)
    t.define("00", "10", Conjugate(a, b))
    t.define("00", "11", Conjugate(a, b_inv))
    t.define("01", "10", Conjugate(a, product(b, a)))
    t.define("01", "11", Conjugate(a, product(b_inv, a)))
    t.define("10", "11", Conjugate(a, product(b, a, b)))

    t.define("0", "1", product(t["00", "10"], t["01", "11"]))

    t.define("1", "00", c)
    t.define("1", "01", Conjugate(t["1", "00"], t["00", "01"]))
    for x in X:
        t.define("0", "1" + x, Conjugate(t["1", "0" + x], t["0", "1"]))

    for x in X:
        t.define("1", "00" + x, Conjugate(t["00", "1" + x], t["1", "00"]))
    for x in X:
        t.define("1", "01" + x, Conjugate(t["1", "00" + x], t["00", "01"]))
    for x, y in cartesian(X, X):
        t.define("0", "1" + x + y, Conjugate(t["1", "0" + x + y], t["0", "1"]))

    for x in X:
        t.define("00", "01" + x, Conjugate(t["1", "01" + x], t["1", "00"]))
    for x in X:
        t.define("01", "00" + x, Conjugate(t["00", "01" + x], t["00", "01"]))
    for x, y in cartesian(X, X):
        xb = complement(x)
        t.define("1" + x, "1" + xb + y, Conjugate(t["0" + x, "0" + xb + y], t["0", "1"]))
    for x, y, z in cartesian(X, X, X):
        yb = complement(y)
        t.define("1" + x, "0" + y + z, Conjugate(t["0" + yb, "0" + y + z], t["0" + yb, "1" + x]))
    for x, y, z in cartesian(X, X, X):
        t.define("0" + x, "1" + y + z, Conjugate(t["1" + x, "0" + y + z], t["0", "1"]))

    for other in ("001", "010", "011"):
        t.define("000", other, Conjugate(t["1", "000"], t["1", other]))
    t.define("001", "011", Conjugate(t["1", "001"], t["1", "011"]))
    for xy in X2[1:]:
        t.define(xy + "0", xy + "1", Conjugate(t["000", "001"], t["00", xy]))

    for kappa in X2:
        for lam in X2:
            if kappa == lam:
                continue
            rho = product(*(t[s] for s in rho_transpositions(kappa, lam)))
            for x, y in (("0", "0"), ("0", "1"), ("1", "1")):
                t.define_if_new(kappa + x, lam + y, _conj(t["00" + x, "01" + y], rho))
    return t


# presentations ------------------------------------------------------------------------


@dataclass(frozen=True)
class Relator:
    """One relation, possibly stated in several equivalent forms; it holds
    when every form evaluates to the identity."""

    label: str
    forms: tuple[tuple[str, WordExpr], ...]

    @property
    def text(self) -> str:
        return self.forms[0][0]

    @property
    def expr(self) -> WordExpr:
        return self.forms[0][1]

    @classmethod
    def of(cls, label: str, *texts: str) -> "Relator":
        return cls(label, tuple((t, parse_relation(t)) for t in texts))

    @classmethod
    def equality(cls, label: str, lhs: WordExpr, rhs: WordExpr) -> "Relator":
        text = f"{format_expr(lhs)} = {format_expr(rhs)}"
        return cls(label, ((text, product(lhs, Inverse(rhs))),))


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]
    genset: GeneratingSet

    def __len__(self):
        return len(self.relators)

    def check_generators(self) -> None:
        """Every relator may only mention declared generators, swap literals
        or (for cfp) auxiliary names expanding to declared generators."""
        allowed = set(self.generators)
        for r in self.relators:
            for _, e in r.forms:
                for g in generators_of(e):
                    if isinstance(g, SwapLit) or g in allowed:
                        continue
                    if self.genset.derived is not None and self.genset.derived(g) is not None:
                        continue
                    raise UnknownGenerator(g)


def _with_table_form(r: Relator) -> Relator:
    """Append a form where each swap literal is replaced by its a, b, c word."""
    table = build_swap_table()
    text, expr = r.forms[0]
    mapping = {g: table[g.alpha, g.beta] for g in generators_of(expr) if isinstance(g, SwapLit)}
    return Relator(r.label, r.forms + ((f"{text}  [swaps as abc words]", substitute(expr, mapping)),))


def presentation_P3() -> Presentation:
    rels = [
        Relator.of("R1a", "<00 01>^2", "a^2"),
        Relator.of("R1b", "(<01 10> <01 11>)^3", "b^3"),
        Relator.of("R1c", "(<00 01> <01 10> <01 11>)^4", "(a b)^4"),
        Relator.of("R2", "<1 01>^<1 00> = <00 01>", "c^(a c) = a"),
        Relator.of(
            "R3",
            "<1 00> = <10 000> <11 001>",
            "c = a^(b c a c a a^(b a)) a^(b^-1 c a c a a^(b^-1 a))",
        ),
        Relator.of(
            "R4a",
            "[<00 010>, <10 111>]",
            "[a^(b c a c), a^(b^-1 c a c a^b a^(b^-1 a))] = 1",
        ),
        Relator.of(
            "R4b",
            "[<00 011>, <10 111>]",
            "[a^(b^-1 c a c), a^(b^-1 c a c a^b a^(b^-1 a))] = 1",
        ),
        Relator.of(
            "R5",
            "[<000 010>, <10 110>]",
            "[a^(b c a^(b c a)), a^(b c a c a^b a^(b^-1 a))] = 1",
        ),
    ]
    rels = [_with_table_form(r) for r in rels]
    return Presentation("p3", ("a", "b", "c"), tuple(rels), genset_abc())


KB_RELATORS = (
    "a^2",
    "b^3",
    "(a b)^4",
    "c^-1 (a c)^2 a",
    "(c a b^-1 a b a)^2 c b (c a b a b^-1 a)^2",
    "a (c b)^2 a (b^-1 c)^2 b c a b c b^-1 c a b^-1 a c b^-1 (c b)^2 a b^-1",
    "a b^-1 c b c (a b^-1)^2 c b c b^-1 a (b^-1 c)^2 b a b c b^-1 c a b^-1",
    "c a (b^-1 c)^2 b a c a b a c b c (b^-1 c a)^2 b (c b^-1)^2 (a c b)^2 c b^-1 c a b^-1",
)


def presentation_P3_kb() -> Presentation:
    rels = tuple(Relator.of(f"K{i}", t) for i, t in enumerate(KB_RELATORS, 1))
    return Presentation("p3-kb", ("a", "b", "c"), rels, genset_abc())


TWO_GEN_RELATORS = (
    "u^6",
    "v^3",
    "(u^3 v)^4",
    "v^-1 u (u^2 v^-1)^2 u^3 v u^-1 v^-1 u^3 v u (u v u^2 (u v^-1 u^3 v)^3)^2 u v^-1 u^3 v^-1",
    "u v^-1 u^3 v^-1 u^-2 v^-1 u v u^2 v^-1 u^-1 v u^2 v^-1 u v u^-1 (u^-1 v^-1)^2 u^3 v u^-1",
    "v (u v^-1 u^3 v^-1)^2 u^-1 v^-1 u^3 v^-1 u^-1 v^-1 u^3 v",
    "u v u^3 v u v^-1 u^-2 v^-1 u (u^2 v)^2 (u^2 v^-1)^2 u^3 v u^-2 v^-1 u^3 v",
)


def presentation_2gen() -> Presentation:
    rels = tuple(Relator.of(f"T{i}", t) for i, t in enumerate(TWO_GEN_RELATORS, 1))
    return Presentation("two-gen", ("u", "v"), rels, genset_uv())


CFP_RELATIONS = (
    "[A B^-1, X2]",
    "[A B^-1, X3]",
    "C1 = B C2",
    "C2 X2 = B C3",
    "C1 A = C2^2",
    "C1^3",
    "pi1^2",
    "pi1 pi3 = pi3 pi1",
    "(pi2 pi1)^3",
    "X3 pi1 = pi1 X3",
    "pi1 X2 = B pi2 pi1",
    "pi2 B = B pi3",
    "pi1 C3 = C3 pi2",
    "(pi1 C2)^3",
)


def presentation_cfp() -> Presentation:
    rels = []
    for i, text in enumerate(CFP_RELATIONS, 1):
        expr = parse_relation(text)
        rels.append(Relator(f"CFP{i}", ((text, expr), (f"{text}  [expanded]", expand_cfp(expr)))))
    return Presentation("cfp", ("A", "B", "C", "pi0"), tuple(rels), genset_cfp())


CFP_AUX_FORMULAS = (
    ("i", "A B^-1 = <00 01> <01 10> <0 10>"),
    ("ii", "X2 = <0 11> <00 01> <00 010> <010 011> <0 11>"),
    ("iii", "X3 = <0 111> <00 01> <00 010> <010 011> <0 111>"),
    ("iv", "C2 = <0 10> <0 111> <110 111>"),
    ("v", "C3 = <0 110> <10 111> <0 100> <0 101> <10 110> <110 111>"),
    ("vi", "pi1 = <10 110>"),
    ("vii", "pi2 = <0 11> <00 010> <0 11>"),
    ("viii", "pi3 = <0 111> <00 010> <0 111>"),
)


def presentation_cfp_aux() -> Presentation:
    rels = tuple(Relator.of(f"L{label}", text) for label, text in CFP_AUX_FORMULAS)
    return Presentation("cfp-lemma", ("A", "B", "C", "pi0"), rels, genset_cfp())


def presentation_swap_table() -> Presentation:
    table = build_swap_table()
    rels = []
    for (alpha, beta), expr in sorted(table.items(), key=lambda kv: (shortlex_key(kv[0][0]), shortlex_key(kv[0][1]))):
        lit = swap(alpha, beta)
        rels.append(Relator.equality(f"<{alpha} {beta}>", expr, lit))
    return Presentation("swap-table", ("a", "b", "c"), tuple(rels), genset_abc())


PROP51 = (
    ("P1", "pi0^(A C) = <1 00>", "pi0^(A C) = c"),
    ("P2", "C pi0 = <10 11>"),
    ("P3", "(C pi0)^(A C) = <00 01>", "(C pi0)^(A C) = a", "A C = <0 1>"),
    ("P4", "pi0^(B^-1 C) = <10 110>"),
    ("P5", "pi0^(B^-1 C) C pi0 B = <110 111>"),
    (
        "P6",
        "<10 110>^(<110 111> <10 11> <0 10> <10 11>) = <01 10>",
        "(pi0^(B^-1 C))^((pi0^(B^-1 C) C pi0 B) (C pi0) pi0 (C pi0)) = <01 10>",
    ),
)


def presentation_prop51() -> Presentation:
    rels = tuple(Relator.of(label, *texts) for label, *texts in PROP51)
    return Presentation("prop51", ("A", "B", "C", "pi0", "a", "c"), rels, genset_all())


# The commonly quoted conjugator for <10 000> is "v u^-2 v u^3"; that word
# conjugates u^3 to <01 000>.  A trailing v is needed, matching the shape of
# the <11 001> formula.
C_IN_UV_AS_PRINTED = "(u^3)^(v u^-2 v u^3) (u^3)^(v u^-1 v u^3 v)"
C_IN_UV = "(u^3)^(v u^-2 v u^3 v) (u^3)^(v u^-1 v u^3 v)"

TIETZE_UV = (
    ("U1", "u^3 = a"),
    ("U2", "v = b"),
    ("U3", f"c = {C_IN_UV}"),
    ("U4", "u = a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"),
    ("U5", "<10 000> = (u^3)^(v u^-2 v u^3 v)"),
    ("U6", "<11 001> = (u^3)^(v u^-1 v u^3 v)"),
)

# a, b, c written in u, v and u written in a, b, c
ABC_IN_UV = {
    "a": parse("u^3"),
    "b": parse("v"),
    "c": parse(C_IN_UV),
}
UV_IN_ABC = {
    "u": parse("a (a^b a^(b^-1))^(c a c a^b a^(b^-1 a))"),
    "v": parse("b"),
}


def presentation_tietze_uv() -> Presentation:
    rels = tuple(Relator.of(label, text) for label, text in TIETZE_UV)
    return Presentation("tietze-uv", ("a", "b", "c", "u", "v"), rels, genset_all())


# truncated infinite presentation -------------------------------------------------------


def incomparable_pairs(max_len: int, min_len: int = 1) -> list[tuple[Address, Address]]:
    """Ordered pairs (alpha, beta) of incomparable addresses with lengths in
    [min_len, max_len]."""
    addrs = [a for n in range(min_len, max_len + 1) for a in addresses_of_length(n)]
    return [(x, y) for x in addrs for y in addrs if incomparable(x, y)]


@dataclass(frozen=True)
class InfiniteFamilyCounts:
    order: int
    conjugacy: int
    split: int

    @property
    def total(self) -> int:
        return self.order + self.conjugacy + self.split


def truncated_infinite_presentation(level: int) -> Presentation:
    if not 1 <= level <= 5:
        raise ValueError(f"level must be between 1 and 5, got {level}")
    pairs = incomparable_pairs(level)
    rels: list[Relator] = []
    for alpha, beta in pairs:
        s = swap(alpha, beta)
        rels.append(Relator(f"order <{alpha} {beta}>", ((f"{format_expr(s)}^2", Power(s, 2)),)))
    for gamma, delta in pairs:
        t = swap(gamma, delta)
        for alpha, beta in pairs:
            a2 = swap_address_action(alpha, gamma, delta)
            b2 = swap_address_action(beta, gamma, delta)
            if a2 is None or b2 is None:
                continue
            lhs = Conjugate(swap(alpha, beta), t)
            rels.append(
                Relator.equality(f"conj <{alpha} {beta}>^<{gamma} {delta}>", lhs, swap(a2, b2))
            )
    for alpha, beta in incomparable_pairs(level - 1):
        rhs = product(swap(alpha + "0", beta + "0"), swap(alpha + "1", beta + "1"))
        rels.append(Relator.equality(f"split <{alpha} {beta}>", swap(alpha, beta), rhs))
    return Presentation(f"inf-L{level}", (), tuple(rels), genset_swaps())


def infinite_family_counts(p: Presentation) -> InfiniteFamilyCounts:
    kinds = [r.label.split(" ", 1)[0] for r in p.relators]
    return InfiniteFamilyCounts(kinds.count("order"), kinds.count("conj"), kinds.count("split"))
