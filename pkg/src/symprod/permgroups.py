"""Permutations of {1..m}, cycle types and explicitly enumerated groups.

Points are 1-based in every user-facing surface (cycle notation, ``images``);
internally a permutation is a tuple of 0-based images.  Products compose
right to left: ``(p * q)(i) = p(q(i))``.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from symprod.errors import PermutationParseError, SizeLimitError

DEFAULT_LIMIT = 10**6


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int], *, zero_based: bool = False):
        img = tuple(images) if zero_based else tuple(i - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection of 1..{len(img)}: {list(images)}")
        if not img:
            raise ValueError("permutations need degree >= 1")
        self._img = img

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), zero_based=True)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 1-based disjoint cycles; unmentioned points are fixed."""
        img = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for a in cycle:
                if not 1 <= a <= degree:
                    raise PermutationParseError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise PermutationParseError(f"point {a} repeated")
                seen.add(a)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                img[a - 1] = b - 1
        return cls(img, zero_based=True)

    @classmethod
    def cyclic_shift(cls, k: int) -> Permutation:
        """The k-cycle ``1 -> 2 -> ... -> k -> 1``."""
        return cls([(i + 1) % k for i in range(k)], zero_based=True)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based images, ``images[i-1] = p(i)``."""
        return tuple(i + 1 for i in self._img)

    @property
    def zero_based(self) -> tuple[int, ...]:
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degree")
        a = self._img
        return Permutation([a[j] for j in other._img], zero_based=True)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation(inv, zero_based=True)

    def __pow__(self, n: int) -> Permutation:
        base = self if n >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(n)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles including fixed points, 1-based, each starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._img[i]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycle_type(self) -> CycleType:
        return cycle_type_of(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: Permutation) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in moved)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


_CYCLE_TEXT = re.compile(r"\s*(?:\(([^()]*)\)\s*)*")
_ONE_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4 5)"``.

    Entries are whitespace-separated; commas are tolerated as separators.
    ``"()"`` (or the empty string) is the identity.
    """
    if degree < 1:
        raise PermutationParseError("degree must be at least 1")
    if not _CYCLE_TEXT.fullmatch(text):
        raise PermutationParseError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _ONE_CYCLE.findall(text):
        tokens = body.replace(",", " ").split()
        try:
            points = [int(tok) for tok in tokens]
        except ValueError:
            raise PermutationParseError(f"non-integer entry in cycle ({body})") from None
        cycles.append(points)
    return Permutation.from_cycles(cycles, degree)


@dataclass(frozen=True)
class CycleType:
    """Cycle structure ``1^a1 2^a2 ... m^am`` stored as ``(a1, ..., am)``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.multiplicities):
            raise ValueError("negative multiplicity")

    @property
    def degree(self) -> int:
        return sum(k * a for k, a in enumerate(self.multiplicities, start=1))

    def __getitem__(self, k: int) -> int:
        """Number of k-cycles (1-based k); zero beyond the degree."""
        if 1 <= k <= len(self.multiplicities):
            return self.multiplicities[k - 1]
        return 0

    def parts(self) -> list[int]:
        """Cycle lengths as a non-increasing partition."""
        out = []
        for k in range(len(self.multiplicities), 0, -1):
            out.extend([k] * self.multiplicities[k - 1])
        return out

    @classmethod
    def from_parts(cls, parts: Iterable[int], degree: int) -> CycleType:
        mult = [0] * degree
        for p in parts:
            mult[p - 1] += 1
        ct = cls(tuple(mult))
        if ct.degree != degree:
            raise ValueError(f"parts do not sum to {degree}")
        return ct

    def sort_key(self) -> tuple[int, ...]:
        """Canonical order: lexicographically descending multiplicity vectors."""
        return tuple(-a for a in self.multiplicities)

    def __str__(self) -> str:
        return " ".join(f"{k}^{a}" for k, a in enumerate(self.multiplicities, 1) if a)


def cycle_type_of(p: Permutation) -> CycleType:
    mult = [0] * p.degree
    for c in p.cycles():
        mult[len(c) - 1] += 1
    return CycleType(tuple(mult))


class PermutationGroup:
    """A finite permutation group with all of its elements materialized.

    Elements are kept sorted by their image sequence, so anything derived
    from iterating over the group is reproducible.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation], name: str | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    @property
    def _element_set(self) -> frozenset[Permutation]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = self.__dict__["_set"] = frozenset(self.elements)
        return cached

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, degree={self.degree}, order={self.order})"


def enumerate_group(generators: Sequence[Permutation], limit: int = DEFAULT_LIMIT,
                    degree: int | None = None, name: str | None = None) -> PermutationGroup:
    """Close ``generators`` under composition by breadth-first search.

    ``degree`` is only needed when ``generators`` is empty (trivial group).
    Raises :class:`SizeLimitError` once more than ``limit`` elements appear.
    """
    gens = list(generators)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generator list")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("all generators must share one degree")

    identity = Permutation.identity(degree)
    gen_imgs = [g.zero_based for g in gens]
    seen = {identity.zero_based}
    queue = deque([identity.zero_based])
    while queue:
        x = queue.popleft()
        for g in gen_imgs:
            y = tuple(g[j] for j in x)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise SizeLimitError(f"group has more than {limit} elements")
                queue.append(y)
    elements = [Permutation(img, zero_based=True) for img in sorted(seen)]
    return PermutationGroup(degree, gens, elements, name=name)


def _check_order(expected: int, limit: int, what: str) -> None:
    if expected > limit:
        raise SizeLimitError(f"{what} has order {expected}, above the limit {limit}")


def symmetric_group(n: int, limit: int = DEFAULT_LIMIT) -> PermutationGroup:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_order(math.factorial(n), limit, f"S_{n}")
    gens = []
    if n >= 2:
        gens = [Permutation.from_cycles([(1, 2)], n), Permutation.cyclic_shift(n)]
    return enumerate_group(gens, limit, degree=n, name=f"S_{n}")


def cyclic_group(n: int, limit: int = DEFAULT_LIMIT) -> PermutationGroup:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_order(n, limit, f"C_{n}")
    return enumerate_group([Permutation.cyclic_shift(n)], limit, degree=n, name=f"C_{n}")


def alternating_group(n: int, limit: int = DEFAULT_LIMIT) -> PermutationGroup:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_order(max(1, math.factorial(n) // 2), limit, f"A_{n}")
    # 3-cycles (1 2 i) generate A_n
    gens = [Permutation.from_cycles([(1, 2, i)], n) for i in range(3, n + 1)]
    return enumerate_group(gens, limit, degree=n, name=f"A_{n}")


def wreath_product(outer_degree: int, inner: PermutationGroup,
                   limit: int = DEFAULT_LIMIT,
                   outer: PermutationGroup | None = None) -> PermutationGroup:
    """``S_k wr H`` on ``k*m`` points: k blocks of size m, H inside, S_k on blocks.

    Point ``(b-1)*m + j`` is point ``j`` of block ``b``.  Generators are H's
    generators acting on block 1 together with block permutations: a
    transposition and a k-cycle of blocks, or the generators of ``outer``
    when a subgroup of ``S_k`` other than the full symmetric group is wanted.
    """
    k, m = outer_degree, inner.degree
    if k < 1:
        raise ValueError("outer degree must be at least 1")
    if outer is not None and outer.degree != k:
        raise ValueError("outer group degree must equal the number of blocks")
    outer_order = math.factorial(k) if outer is None else outer.order
    outer_name = f"S_{k}" if outer is None else (outer.name or f"Q<{k}>")
    inner_name = inner.name or "H"
    _check_order(inner.order ** k * outer_order, limit, f"{outer_name} wr {inner_name}")
    n = k * m
    gens = []
    for h in inner.generators:
        img = list(range(n))
        img[:m] = h.zero_based
        gens.append(Permutation(img, zero_based=True))

    def block_map(block_img: Sequence[int]) -> Permutation:
        return Permutation([block_img[i // m] * m + i % m for i in range(n)],
                           zero_based=True)

    if outer is not None:
        # H on every block, since outer need not move block 1 everywhere
        for blk in range(1, k):
            for h in inner.generators:
                img = list(range(n))
                img[blk * m:(blk + 1) * m] = [blk * m + x for x in h.zero_based]
                gens.append(Permutation(img, zero_based=True))
        gens.extend(block_map(q.zero_based) for q in outer.generators)
    elif k >= 2:
        swap = list(range(k))
        swap[0], swap[1] = 1, 0
        gens.append(block_map(swap))
        if k >= 3:
            gens.append(block_map([(b + 1) % k for b in range(k)]))
    return enumerate_group(gens, limit, degree=n, name=f"{outer_name} wr {inner_name}")

