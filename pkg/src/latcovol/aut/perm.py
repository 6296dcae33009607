"""Permutation groups: stabilizer chains, orders, pointwise stabilizers.

Permutations are tuples ``p`` with ``p[i]`` the image of ``i``.  Products are
written left to right: ``mul(p, q)`` applies ``p`` first.
"""
from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Sequence

from ..exact import FactoredNat, factor

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple([q[i] for i in p])


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def cycles(p: Perm) -> list[list[int]]:
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [i], p[i]
        seen.add(i)
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


class _Level:
    __slots__ = ("point", "gens", "trans", "trans_inv")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Perm] = []
        self.trans: dict[int, Perm] = {}
        self.trans_inv: dict[int, Perm] = {}

    def rebuild(self, n: int) -> None:
        e = identity(n)
        trans = {self.point: e}
        queue = deque([self.point])
        while queue:
            b = queue.popleft()
            ub = trans[b]
            for s in self.gens:
                c = s[b]
                if c not in trans:
                    trans[c] = mul(ub, s)
                    queue.append(c)
        self.trans = trans
        self.trans_inv = {b: inverse(u) for b, u in trans.items()}


class StabChain:
    """Base and strong generating set, built by deterministic Schreier-Sims."""

    def __init__(self, degree: int, gens: Sequence[Perm], base_prefix: Sequence[int] = (),
                 trusted_base: Sequence[int] | None = None):
        self.degree = degree
        gens = [g for g in gens if not is_identity(g)]
        if trusted_base is not None:
            # gens already form a strong generating set relative to trusted_base
            self.levels = [_Level(b) for b in trusted_base]
            self._distribute(gens)
            return
        base = [b for b in dict.fromkeys(base_prefix) if any(g[b] != b for g in gens)]
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(next(i for i in range(degree) if g[i] != i))
        self.levels = [_Level(b) for b in base]
        self._distribute(gens)
        self._complete()

    def _distribute(self, gens: Iterable[Perm]) -> None:
        fixed: list[int] = []
        for lev in self.levels:
            lev.gens = [g for g in gens if all(g[b] == b for b in fixed)]
            lev.rebuild(self.degree)
            fixed.append(lev.point)

    @property
    def base(self) -> list[int]:
        return [lev.point for lev in self.levels]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for k in range(start, len(self.levels)):
            lev = self.levels[k]
            b = g[lev.point]
            if b not in lev.trans:
                return g, k
            if b != lev.point:
                g = mul(g, lev.trans_inv[b])
        return g, len(self.levels)

    def _complete(self) -> None:
        n = self.degree
        i = len(self.levels) - 1
        while i >= 0:
            lev = self.levels[i]
            restart = None
            for b in list(lev.trans):
                ub = lev.trans[b]
                for s in lev.gens:
                    h = mul(mul(ub, s), lev.trans_inv[s[b]])
                    if is_identity(h):
                        continue
                    res, j = self.sift(h, i + 1)
                    if j < len(self.levels) or not is_identity(res):
                        if j == len(self.levels):
                            moved = next(x for x in range(n) if res[x] != x)
                            self.levels.append(_Level(moved))
                        for k in range(i + 1, j + 1):
                            self.levels[k].gens.append(res)
                            self.levels[k].rebuild(n)
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    def orbit_sizes(self) -> list[int]:
        return [len(lev.trans) for lev in self.levels]

    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes():
            out *= s
        return out

    def contains(self, g: Perm) -> bool:
        res, j = self.sift(g)
        return j == len(self.levels) and is_identity(res)


class PermGroup:
    """A permutation group given by generators on ``degree`` points.

    ``labels`` names the points (for cycle notation and graph lookups).  A
    ``base`` may be supplied together with ``strong=True`` when the generators
    are already known to form a strong generating set for it.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: int,
                 labels: Sequence[Hashable] | None = None,
                 base: Sequence[int] | None = None, strong: bool = False):
        self.degree = degree
        self.generators: list[Perm] = [tuple(g) for g in generators if not is_identity(tuple(g))]
        for g in self.generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of the points")
        self.labels = list(labels) if labels is not None else list(range(degree))
        self._base = list(base) if base is not None else None
        self._strong = strong and base is not None
        self._chain: StabChain | None = None

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            if self._strong:
                self._chain = StabChain(self.degree, self.generators, trusted_base=self._base)
            else:
                self._chain = StabChain(self.degree, self.generators, base_prefix=self._base or ())
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def factored_order(self) -> FactoredNat:
        return factor(self.order())

    def contains(self, g: Sequence[int]) -> bool:
        return self.chain.contains(tuple(g))

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            a = queue.popleft()
            for g in self.generators:
                b = g[a]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done: set[int] = set()
        out = []
        for p in range(self.degree):
            if p not in done:
                orb = self.orbit(p)
                done.update(orb)
                out.append(orb)
        return out

    def elements(self, limit: int = 10**4) -> set[Perm]:
        """Exhaustive closure under the generators; refuses past ``limit`` elements."""
        e = identity(self.degree)
        seen = {e}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > limit:
                        raise OverflowError(f"group has more than {limit} elements")
                    queue.append(y)
        return seen

    def pointwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        points = list(dict.fromkeys(points))
        chain = StabChain(self.degree, self.generators, base_prefix=points)
        fixed = set(points)
        depth = 0
        while depth < len(chain.levels) and chain.levels[depth].point in fixed:
            depth += 1
        # base points of the prefix that everything fixes were dropped; strong
        # generators of the stabilizer sit on this level and every deeper one
        if depth < len(chain.levels):
            gens = list(dict.fromkeys(g for lev in chain.levels[depth:] for g in lev.gens))
            sub_base = chain.base[depth:]
        else:
            gens, sub_base = [], []
        return PermGroup(gens, self.degree, self.labels, base=sub_base, strong=True)

    def restricted(self, points: Sequence[int]) -> "PermGroup":
        """Action on an invariant subset, as a group on ``len(points)`` points."""
        where = {p: k for k, p in enumerate(points)}
        gens = []
        for g in self.generators:
            try:
                gens.append(tuple(where[g[p]] for p in points))
            except KeyError:
                raise ValueError("point set is not invariant under the group") from None
        return PermGroup(gens, len(points), [self.labels[p] for p in points])

    def preserves(self, points: Iterable[int]) -> bool:
        s = set(points)
        return all(g[p] in s for g in self.generators for p in s)

    def cycle_notation(self, g: Perm) -> str:
        cyc = cycles(g)
        if not cyc:
            return "()"
        return "".join("(" + ",".join(str(self.labels[i]) for i in c) + ")" for c in cyc)
