"""Brute-force g-signatures on the middle homology of ``M^m``.

The middle homology ``H_m(M^m; Q)`` of a surface power has a Künneth basis of
words ``w1 w2 ... wm`` in homology classes of ``M``:

* closed ``M_g``: the point class ``I`` (degree 0), the fundamental class
  ``T`` (degree 2) and a symplectic basis ``a_i, b_i`` (degree 1);
* punctured ``M_{g,k}``: ``a_i, b_i`` and ``k-1`` hole classes (degree 1).

A permutation of the factors acts on words with the Koszul sign, and the
intersection form pairs a word only with its letterwise dual.  Averaging the
resulting g-signatures over a group gives the signature of the quotient,
which is the independent check on the cycle-index formulas.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from symprod.errors import NoDualError, NumericalFailureError, SizeLimitError
from symprod.permgroups import Permutation, PermutationGroup, cycle_type_of
from symprod.sigformulas import Surface

DEFAULT_TOLERANCE = 1e-9
DEFAULT_BASIS_CAP = 4096

UNIT, FUNDAMENTAL, A, B, HOLE = "I", "T", "a", "b", "h"
_DEGREE = {UNIT: 0, FUNDAMENTAL: 2, A: 1, B: 1, HOLE: 1}
_TAG_RANK = {UNIT: 0, FUNDAMENTAL: 1, A: 2, B: 3, HOLE: 4}
_DUAL_TAG = {UNIT: FUNDAMENTAL, FUNDAMENTAL: UNIT, A: B, B: A}


@dataclass(frozen=True, order=False)
class HomologyLetter:
    tag: str
    index: int = 0

    @property
    def degree(self) -> int:
        return _DEGREE[self.tag]

    def dual(self) -> HomologyLetter:
        if self.tag == HOLE:
            raise NoDualError(f"hole class {self} has no dual")
        return HomologyLetter(_DUAL_TAG[self.tag], self.index)

    def sort_key(self) -> tuple[int, int]:
        return (_TAG_RANK[self.tag], self.index)

    def __str__(self) -> str:
        return self.tag if self.tag in (UNIT, FUNDAMENTAL) else f"{self.tag}{self.index}"


def pairing(x: HomologyLetter, y: HomologyLetter) -> int:
    """Intersection pairing of letters: ``<a_i, b_i> = 1 = -<b_i, a_i>``, ``<I, T> = <T, I> = 1``."""
    if x.tag == HOLE or y.tag == HOLE or x.index != y.index:
        return 0
    if (x.tag, y.tag) == (A, B):
        return 1
    if (x.tag, y.tag) == (B, A):
        return -1
    if {x.tag, y.tag} == {UNIT, FUNDAMENTAL}:
        return 1
    return 0


@dataclass(frozen=True)
class Word:
    letters: tuple[HomologyLetter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def total_degree(self) -> int:
        return sum(x.degree for x in self.letters)

    @property
    def alpha(self) -> int:
        """Number of ``a``/``b`` letters."""
        return sum(1 for x in self.letters if x.tag in (A, B))

    @property
    def beta(self) -> int:
        """Number of ``b`` letters."""
        return sum(1 for x in self.letters if x.tag == B)

    @property
    def has_hole(self) -> bool:
        return any(x.tag == HOLE for x in self.letters)

    def dual(self) -> Word:
        return Word(tuple(x.dual() for x in self.letters))

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str) -> Word:
        """Inverse of ``str``: space-separated letters like ``"I T"`` or ``"a1 b1"``."""
        letters = []
        for tok in text.split():
            if tok in (UNIT, FUNDAMENTAL):
                letters.append(HomologyLetter(tok))
            else:
                letters.append(HomologyLetter(tok[0], int(tok[1:])))
        return cls(tuple(letters))


@dataclass(frozen=True)
class SignedWord:
    sign: int
    word: Word


def dual_word(w: Word) -> Word:
    return w.dual()


def surface_letters(surface: Surface) -> list[HomologyLetter]:
    g = surface.genus
    letters = []
    if surface.is_closed:
        letters += [HomologyLetter(UNIT), HomologyLetter(FUNDAMENTAL)]
    letters += [HomologyLetter(A, i) for i in range(1, g + 1)]
    letters += [HomologyLetter(B, i) for i in range(1, g + 1)]
    if not surface.is_closed:
        letters += [HomologyLetter(HOLE, j) for j in range(1, surface.punctures)]
    return letters


def middle_basis_size(surface: Surface, m: int) -> int:
    """Number of middle-degree words, computed without listing them."""
    if not surface.is_closed:
        return (2 * surface.genus + surface.punctures - 1) ** m
    g2 = 2 * surface.genus
    return sum(math.comb(m, j) * math.comb(m - j, j) * g2 ** (m - 2 * j)
               for j in range(m // 2 + 1))


def build_middle_basis(surface: Surface, m: int, cap: int = DEFAULT_BASIS_CAP) -> list[Word]:
    """All words of length ``m`` and total degree ``m``, lexicographically ordered."""
    if m < 1:
        raise ValueError("m must be at least 1")
    size = middle_basis_size(surface, m)
    if size > cap:
        raise SizeLimitError(f"middle basis has {size} words, above the cap {cap}")
    letters = sorted(surface_letters(surface), key=HomologyLetter.sort_key)
    out: list[Word] = []

    def rec(prefix: list[HomologyLetter], deg: int) -> None:
        left = m - len(prefix)
        if left == 0:
            if deg == m:
                out.append(Word(tuple(prefix)))
            return
        for x in letters:
            d = deg + x.degree
            # the remaining letters contribute between 0 and 2 each
            if d <= m and d + 2 * (left - 1) >= m:
                prefix.append(x)
                rec(prefix, d)
                prefix.pop()

    rec([], 0)
    return out


def intersection_pairing(w: Word, w2: Word) -> int:
    """``B(w, w')``: zero unless ``w' = w*``, then ``(-1)^(C(alpha, 2) + beta)``."""
    if w.has_hole or w2.has_hole or len(w) != len(w2):
        return 0
    if w2 != w.dual():
        return 0
    return (-1) ** (math.comb(w.alpha, 2) + w.beta)


def koszul_sign(p: Permutation, degrees: Sequence[int]) -> int:
    img = p.zero_based
    odd = 0
    n = len(img)
    for i in range(n):
        if degrees[i] % 2 == 0:
            continue
        for j in range(i + 1, n):
            if img[i] > img[j] and degrees[j] % 2:
                odd += 1
    return -1 if odd % 2 else 1


def permutation_action(p: Permutation, w: Word) -> SignedWord:
    """Move the letter in position ``i`` to position ``p(i)``, with the Koszul sign."""
    if p.degree != len(w):
        raise ValueError("permutation degree must equal the word length")
    img = p.zero_based
    moved = [None] * len(w)
    for i, x in enumerate(w.letters):
        moved[img[i]] = x
    sign = koszul_sign(p, [x.degree for x in w.letters])
    return SignedWord(sign, Word(tuple(moved)))


class MiddleHomology:
    """Word basis of ``H_m(M^m)`` with its action and Hermitian form as matrices.

    The form matrix ``H`` satisfies ``B^(u, v) = v^* H u`` for the complexified
    pairing (``B`` itself when ``m`` is even, ``i B`` when ``m`` is odd).
    """

    def __init__(self, surface: Surface, m: int, cap: int = DEFAULT_BASIS_CAP):
        self.surface = surface
        self.m = m
        self.basis = build_middle_basis(surface, m, cap)
        self.index = {w: i for i, w in enumerate(self.basis)}
        n = len(self.basis)
        # integer pairing matrix and the dual partner of each word (-1: none)
        self.partner = np.full(n, -1, dtype=np.int64)
        self.pairing_sign = np.zeros(n, dtype=np.int64)
        for i, w in enumerate(self.basis):
            if w.has_hole:
                continue
            j = self.index[w.dual()]
            self.partner[i] = j
            self.pairing_sign[i] = intersection_pairing(w, self.basis[j])
        self._degrees = [[x.degree for x in w.letters] for w in self.basis]

    def __len__(self) -> int:
        return len(self.basis)

    def pairing_matrix(self) -> np.ndarray:
        n = len(self)
        G = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            if self.partner[i] >= 0:
                G[i, self.partner[i]] = self.pairing_sign[i]
        return G

    def form_matrix(self) -> np.ndarray:
        G = self.pairing_matrix().T.astype(complex)
        return G if self.m % 2 == 0 else 1j * G

    def signed_action(self, p: Permutation) -> tuple[np.ndarray, np.ndarray]:
        """``(target, sign)`` with ``p . basis[i] = sign[i] * basis[target[i]]``."""
        n = len(self)
        target = np.empty(n, dtype=np.int64)
        sign = np.empty(n, dtype=np.int64)
        for i, w in enumerate(self.basis):
            sw = permutation_action(p, w)
            target[i] = self.index[sw.word]
            sign[i] = sw.sign
        return target, sign

    def action_matrix(self, p: Permutation) -> np.ndarray:
        target, sign = self.signed_action(p)
        n = len(self)
        P = np.zeros((n, n), dtype=np.int64)
        P[target, np.arange(n)] = sign
        return P

    def components(self, p: Permutation) -> list[list[int]]:
        """Blocks ``V_w + V_{w*}``: unions of <p>-orbits closed under duality."""
        target, _ = self.signed_action(p)
        n = len(self)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for i in range(n):
            union(i, int(target[i]))
            if self.partner[i] >= 0:
                union(i, int(self.partner[i]))
        blocks: dict[int, list[int]] = {}
        for i in range(n):
            blocks.setdefault(find(i), []).append(i)
        return [blocks[r] for r in sorted(blocks)]


@dataclass
class GSignatureReport:
    element: Permutation
    value: complex
    eigenvalue_breakdown: list[tuple[complex, int]] = field(default_factory=list)
    residual: float = 0.0

    @property
    def real(self) -> float:
        return self.value.real


def _spectral_signature(P: np.ndarray, H: np.ndarray, period: int
                        ) -> tuple[complex, dict[int, int], float]:
    """Sum over eigenvalues ``lam`` of ``P`` of ``lam * Sign(H | V_lam)``.

    ``P`` is a signed permutation matrix with ``P^period = 1``, so its
    spectrum consists of ``period``-th roots of unity.  The eigenspace of
    ``exp(2 pi i j / period)`` is the range of the averaging projector
    ``(1/period) sum_s lam^(-s) P^s``.  Returns the value, the per-root
    signatures keyed by ``j``, and the worst deviation from exact structure.
    """
    n = P.shape[0]
    powers = [np.eye(n, dtype=complex)]
    Pc = P.astype(complex)
    for _ in range(period - 1):
        powers.append(Pc @ powers[-1])
    residual = float(np.abs(Pc @ powers[-1] - np.eye(n)).max()) if n else 0.0
    total = 0j
    breakdown = {}
    for j in range(period):
        lam = cmath.exp(2j * math.pi * j / period)
        E = sum(lam ** (-s) * powers[s] for s in range(period)) / period
        rank_f = float(np.trace(E).real)
        rank = round(rank_f)
        residual = max(residual, abs(rank_f - rank))
        if rank == 0:
            continue
        w, V = np.linalg.eigh((E + E.conj().T) / 2)
        Q = V[:, w > 0.5]
        if Q.shape[1] != rank:
            raise NumericalFailureError(f"projector rank {Q.shape[1]} != trace {rank}")
        R = Q.conj().T @ H @ Q
        ev = np.linalg.eigvalsh((R + R.conj().T) / 2)
        # the form restricted to an eigenspace has eigenvalues in {-1, 0, 1}
        residual = max(residual, float(np.abs(ev - np.round(ev)).max()))
        sig = int(np.sum(ev > 0.5)) - int(np.sum(ev < -0.5))
        if sig:
            breakdown[j] = sig
            total += lam * sig
    return total, breakdown, residual


def g_signature(p: Permutation, surface: Surface, m: int | None = None,
                tolerance: float = DEFAULT_TOLERANCE, *, blocks: bool = False,
                homology: MiddleHomology | None = None) -> GSignatureReport:
    """g-signature of the coordinate permutation ``p`` acting on ``M^m``.

    Uses eigenspace decomposition of the action; with ``blocks=True`` the
    computation runs separately on each invariant block ``V_w + V_{w*}``
    (same result, smaller matrices).
    """
    m = p.degree if m is None else m
    if p.degree != m:
        raise ValueError("permutation degree must equal m")
    hom = homology or _homology(surface, m)
    P = hom.action_matrix(p)
    H = hom.form_matrix()
    period = 2 * p.order()
    if blocks:
        parts = hom.components(p)
    else:
        parts = [list(range(len(hom)))]
    total = 0j
    breakdown: dict[int, int] = {}
    residual = 0.0
    for idx in parts:
        sub = np.ix_(idx, idx)
        val, bd, res = _spectral_signature(P[sub], H[sub], period)
        total += val
        residual = max(residual, res)
        for j, s in bd.items():
            breakdown[j] = breakdown.get(j, 0) + s
    residual = max(residual, abs(total.imag))
    if residual > tolerance:
        raise NumericalFailureError(
            f"g-signature of {p} on {surface}^{m}: residual {residual:.3g} > {tolerance}"
        )
    roots = [(cmath.exp(2j * math.pi * j / period), s)
             for j, s in sorted(breakdown.items()) if s]
    return GSignatureReport(p, total, roots, residual)


def g_signature_trace(p: Permutation, surface: Surface,
                      homology: MiddleHomology | None = None) -> complex:
    """Exact g-signature as ``trace(P H)``.

    ``H`` commutes with the action and squares to a projector, so it is its
    own sign operator and the traces over its positive and negative parts
    combine into one trace.  Integer arithmetic throughout.
    """
    hom = homology or _homology(surface, p.degree)
    target, sign = hom.signed_action(p)
    total = 0
    # trace(P H) = sum_i sign[i] * H[i, target[i]] with H = G^T (times i if m odd)
    for i in range(len(hom)):
        j = int(target[i])
        if hom.partner[j] == i:
            total += int(sign[i]) * int(hom.pairing_sign[j])
    return complex(total) if hom.m % 2 == 0 else complex(0, total)


@lru_cache(maxsize=32)
def _homology(surface: Surface, m: int) -> MiddleHomology:
    return MiddleHomology(surface, m)


def product_formula_check(p: Permutation, surface: Surface,
                          tolerance: float = DEFAULT_TOLERANCE) -> complex:
    """Product over the cycles of ``p`` of the g-signature of a k-cycle on ``M^k``."""
    ct = cycle_type_of(p)
    value = 1 + 0j
    for k, a in enumerate(ct.multiplicities, start=1):
        if a:
            value *= _cycle_g_signature(surface, k, tolerance) ** a
    return value


@lru_cache(maxsize=None)
def _cycle_g_signature(surface: Surface, k: int, tolerance: float) -> complex:
    return g_signature(Permutation.cyclic_shift(k), surface, k, tolerance).value


def quotient_signature_oracle(group: PermutationGroup, surface: Surface,
                              tolerance: float = DEFAULT_TOLERANCE,
                              *, blocks: bool = False) -> int:
    """``Sign(M^m / G)`` as the average of g-signatures over ``G``."""
    hom = _homology(surface, group.degree)
    total = 0j
    for p in group:
        total += g_signature(p, surface, group.degree, tolerance,
                             blocks=blocks, homology=hom).value
    mean = total / group.order
    nearest = round(mean.real)
    residual = max(abs(mean.imag), abs(mean.real - nearest))
    if residual > tolerance:
        raise NumericalFailureError(
            f"oracle average {mean} for {group!r} on {surface} is not an integer"
        )
    return int(nearest)


def quotient_signature_exact(group: PermutationGroup, surface: Surface) -> Fraction:
    """Same average as :func:`quotient_signature_oracle` via exact traces."""
    hom = _homology(surface, group.degree)
    total = sum((g_signature_trace(p, surface, hom) for p in group), 0j)
    if total.imag:
        raise NumericalFailureError(f"exact trace average has imaginary part {total.imag}")
    return Fraction(int(total.real), group.order)
