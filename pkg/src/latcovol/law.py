"""Prime-divisibility laws for covolume denominators, and the corollary predicates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import aut
from .complex import Graph
from .exact import FactoredNat, factor, format_rat, is_m_number, is_prime, lcm_factored
from .links import RegisteredLink, generalized_polygon_load, girth


@dataclass(frozen=True)
class LawEntry:
    p: int
    alpha: int
    alpha_prime: int


@dataclass(frozen=True)
class LawData:
    """Primes of the automorphism-order LCM with exponents (alpha, alpha')."""

    entries: tuple[LawEntry, ...]

    def __post_init__(self):
        prev = 1
        for e in self.entries:
            if not is_prime(e.p) or e.p <= prev:
                raise ValueError("law primes must be strictly increasing primes")
            if e.alpha < 1 or not 0 <= e.alpha_prime <= e.alpha:
                raise ValueError(f"bad exponents at p = {e.p}")
            prev = e.p

    @classmethod
    def from_orders(cls, aut_lcm: FactoredNat, fix_lcm: FactoredNat) -> "LawData":
        return cls(tuple(LawEntry(p, a, fix_lcm.exponent(p)) for p, a in aut_lcm.factors))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(e.p for e in self.entries)

    def entry(self, p: int) -> LawEntry | None:
        for e in self.entries:
            if e.p == p:
                return e
        return None

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return {e.p: (e.alpha, e.alpha_prime) for e in self.entries}

    def to_json(self) -> dict:
        return {"primes": [{"p": e.p, "alpha": e.alpha, "alpha_prime": e.alpha_prime}
                           for e in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "LawData":
        return cls(tuple(LawEntry(int(d["p"]), int(d["alpha"]), int(d["alpha_prime"]))
                         for d in doc["primes"]))


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    violated_rule: str | None = None
    witness_prime: int | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.admissible != (self.violated_rule is None):
            raise ValueError("a verdict is admissible exactly when no rule is violated")

    def __bool__(self):
        return self.admissible

    def to_json(self) -> dict:
        out = {"admissible": self.admissible, "violated_rule": self.violated_rule,
               "witness_prime": self.witness_prime}
        if self.details:
            out["details"] = self.details
        return out

    @classmethod
    def from_json(cls, doc: dict) -> "Verdict":
        return cls(bool(doc["admissible"]), doc.get("violated_rule"), doc.get("witness_prime"),
                   dict(doc.get("details", {})))


OK = Verdict(True)


@dataclass(frozen=True)
class LinkOrders:
    """What a link contributes to a law: its automorphism order and edge-fixator orders."""

    aut_order: FactoredNat
    fixator_orders: tuple[FactoredNat, ...]


def link_orders(link: Graph | RegisteredLink) -> LinkOrders:
    if isinstance(link, RegisteredLink):
        return LinkOrders(link.aut_order, (link.fixator_order,))
    G = aut.automorphism_group(link)
    fixators = []
    for orbit in aut.edge_orbits(link, G):
        a, b = orbit[0]
        fixators.append(aut.pointwise_fixator(link, [a, b]).factored_order())
    if not fixators:
        raise ValueError("a link graph must have at least one edge")
    return LinkOrders(G.factored_order(), tuple(fixators))


def law_from_links(links: Sequence[Graph | RegisteredLink | LinkOrders]) -> LawData:
    if not links:
        raise ValueError("need at least one link")
    data = [x if isinstance(x, LinkOrders) else link_orders(x) for x in links]
    aut_lcm = lcm_factored(d.aut_order for d in data)
    fix_lcm = lcm_factored(f for d in data for f in d.fixator_orders)
    return LawData.from_orders(aut_lcm, fix_lcm)


def _check_rules(law: LawData, b: int, face: bool) -> Verdict:
    f = factor(b)
    for p, _ in f.factors:
        if law.entry(p) is None:
            return Verdict(False, "(a)", p)
    for p, e in f.factors:
        entry = law.entry(p)
        if entry.alpha_prime == 0 and (face or e > entry.alpha):
            return Verdict(False, "(b)", p)
    return OK


def admissible_vertex_covolume(law: LawData, x: Fraction) -> Verdict:
    """Denominator primes lie in the law; where alpha' = 0 the exponent is at most alpha."""
    _positive(x)
    return _check_rules(law, x.denominator, face=False)


def admissible_face_covolume(law: LawData, x: Fraction) -> Verdict:
    """Face version: where alpha' = 0 the prime may not divide the denominator at all."""
    _positive(x)
    return _check_rules(law, x.denominator, face=True)


def _positive(x: Fraction) -> None:
    if x <= 0:
        raise ValueError(f"covolume must be positive, got {x}")


def bipartite_corollary_check(m: int, n: int, r: int, mu: Fraction) -> Verdict:
    """mu = (r / mn)(a / b) with every prime of b strictly below m."""
    if not m >= n >= 2:
        raise ValueError("need m >= n >= 2")
    if r < 5:
        raise ValueError("need r >= 5")
    if m != n and r % 2:
        raise ValueError("r must be even when m != n")
    _positive(mu)
    rest = mu * Fraction(m * n, r)
    details = {"coefficient": format_rat(Fraction(r, m * n)), "a/b": format_rat(rest)}
    for p in factor(rest.denominator).primes:
        if p >= m:
            return Verdict(False, "bipartite", p, details)
    return Verdict(True, details=details)


def building_corollary_check(L: Graph, r: int, mu: Fraction, m: int | None = None) -> Verdict:
    """mu = (r / [G:B])(a / b) with primes of b dividing a type-preserving edge fixator.

    ``[G:B]`` is the number of edges (chambers) of ``L``.  ``m`` defaults to
    half the girth of ``L``.
    """
    if r < 6 or r % 2:
        raise ValueError("need r >= 6 even")
    _positive(mu)
    if m is None:
        gi = girth(L)
        if gi is None or gi % 2:
            raise ValueError("link has no even girth; not a generalized polygon")
        m = gi // 2
    L = generalized_polygon_load(L, m)
    chambers = len(L.edges)
    typed = aut.type_preserving_subgroup(L)
    fix0 = []
    for orbit in aut.edge_orbits(L, typed):
        a, b = orbit[0]
        fix0.append(aut.pointwise_fixator(L.as_colored(use_types=True), [a, b]).order())
    full_fix = [aut.pointwise_fixator(L, list(orbit[0])).order()
                for orbit in aut.edge_orbits(L, aut.automorphism_group(L))]
    allowed = set()
    for o in fix0:
        allowed.update(factor(o).primes)
    rest = mu * Fraction(chambers, r)
    details = {
        "chambers": chambers,
        "coefficient": format_rat(Fraction(r, chambers)),
        "a/b": format_rat(rest),
        "fixator_order_type_preserving": sorted(set(fix0)),
        "fixator_order_full": sorted(set(full_fix)),
    }
    for p in factor(rest.denominator).primes:
        if p not in allowed:
            return Verdict(False, "building", p, details)
    return Verdict(True, details=details)


def tree_m_number_check(m: int, mu: Fraction) -> Verdict:
    """Covolumes for the m-regular tree have m-number denominators."""
    if m < 3:
        raise ValueError("need m >= 3")
    _positive(mu)
    b = mu.denominator
    if is_m_number(b, m):
        return OK
    f = factor(b)
    big = [p for p in f.primes if p > m]
    return Verdict(False, "m-number", big[0] if big else m)


def law_of(orders: Iterable[tuple[int, int]]) -> LawData:
    """Law from bare (aut order, fixator order) pairs."""
    pairs = [LinkOrders(factor(a), (factor(f),)) for a, f in orders]
    return law_from_links(pairs)
