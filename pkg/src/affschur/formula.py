"""
Closed-form products in the affine Schur algebra.

The only products available in closed form have a left factor of the shape
``[E_{i,j} + diag(mu)]_1`` (or a diagonal idempotent).  Everything in this
module is built from :func:`_unit_times_basis`; right multiplication goes
through the transpose anti-automorphism.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from .element import (
    Element,
    Generator,
    Idempotent,
    Weight,
    bracket_element,
    identity,
    tau_generator,
    unit_vector,
    vadd,
    vsub,
)
from .lattice import (
    AffineMatrix,
    add_unit,
    canonicalize,
    col_sum,
    diag,
    residue,
    row_sum,
    sigma,
    sub_unit,
    transpose,
)

# Test-harness hook: when set, the unit product drops its "+1" multiplicity.
# Only used to check that verification actually fails on a broken engine.
FAULT = False


def _unit_times_basis(i: int, j: int, A: AffineMatrix) -> dict:
    """``e_{i,j} [A]_1`` as a term dict, ``i`` canonical and ``i != j``.

    Equals ``sum_t (a_{i,t} + 1) [A + E_{i,t} - E_{j,t}]_1`` where only the
    ``t`` with ``a_{j,t} >= 1`` survive; zero unless ``ro(A)_j >= 1``.
    """
    n = A.n
    bump = 0 if FAULT else 1
    out = {}
    for t, _ in A.row(j):
        B = add_unit(sub_unit(A, j, t), i, t)
        c = A[i, t] + bump
        if c:
            out[B] = out.get(B, 0) + c
    return out


def mult_left_unit(F: AffineMatrix, A: AffineMatrix) -> Element:
    """``[F]_1 [A]_1`` for ``F = E_{i,j} + diag(mu)`` with ``i != j``."""
    n = A.n
    off = [(p, a) for p, a in F.items() if p[0] != p[1]]
    if len(off) != 1 or off[0][1] != 1:
        raise ValueError("left factor must be E_{i,j} + diag(mu), got %s" % (F,))
    r = sigma(A)
    if sigma(F) != r:
        raise ValueError("degree mismatch: %d vs %d" % (sigma(F), r))
    if col_sum(F) != row_sum(A):
        return Element.zero(n, r)
    (i, j), _ = off[0]
    return Element(n, r, _unit_times_basis(i, j, A))


def left_unit_factor(i: int, j: int, mu: Sequence[int]) -> AffineMatrix:
    """``E_{i,j} + diag(mu)``."""
    return add_unit(diag(mu), i, j)


def mult_diag(lam: Sequence[int], x: Element) -> Element:
    """``k_lam x``: keep the terms whose row sums equal ``lam``."""
    lam = tuple(lam)
    return Element._wrap(x.n, x.r, {A: c for A, c in x.terms.items() if row_sum(A) == lam})


def mult_by_diag(x: Element, lam: Sequence[int]) -> Element:
    """``x k_lam``: keep the terms whose column sums equal ``lam``."""
    lam = tuple(lam)
    return Element._wrap(x.n, x.r, {A: c for A, c in x.terms.items() if col_sum(A) == lam})


def mult_generator(g: Generator, x: Element) -> Element:
    """Left multiplication of ``x`` by the image of a generator."""
    n = x.n
    if isinstance(g, Idempotent):
        return mult_diag(g.parts, x)
    if isinstance(g, Weight):
        k = g.i - 1
        out = {}
        for A, c in x.terms.items():
            w = row_sum(A)[k]
            if w:
                out[A] = w * c
        return Element._wrap(n, x.r, out)
    i, j = canonicalize(g.i, g.j, n)
    if i == j:
        return mult_generator(Weight(i), x)
    out = {}
    for A, c in x.terms.items():
        for B, v in _unit_times_basis(i, j, A).items():
            out[B] = out.get(B, 0) + c * v
    return Element(n, x.r, out)


def transpose_tau(x: Element) -> Element:
    """Apply ``[A]_1 -> [transpose(A)]_1`` termwise."""
    return Element._wrap(x.n, x.r, {transpose(A): c for A, c in x.terms.items()})


def mult_generator_right(x: Element, g: Generator) -> Element:
    """``x g`` computed as ``tau(tau(g) tau(x))``."""
    return transpose_tau(mult_generator(tau_generator(g, x.n), transpose_tau(x)))


def word_product(word: Sequence[Generator], seed: Element) -> Element:
    """Apply the generators of ``word`` to ``seed`` from right to left."""
    x = seed
    for g in reversed(word):
        x = mult_generator(g, x)
    return x


@lru_cache(maxsize=200_000)
def evaluate_word(word: tuple, n: int, r: int) -> Element:
    """Value of a generator word in ``S(n, r)``; suffixes are memoized."""
    if not word:
        return identity(n, r)
    return mult_generator(word[0], evaluate_word(word[1:], n, r))


def clear_caches():
    evaluate_word.cache_clear()


# -- bracket-element products ------------------------------------------------

def _bracket_or_zero(A, j, r, n):
    if A is None:
        return Element.zero(n, r)
    return bracket_element(A, j, r)


def mult_bracket(h: int, k: int, A: AffineMatrix, j: Sequence[int], r: int) -> Element:
    """``E_{h,k}[0, r] A[j, r]`` from the three-sum closed form.

    ``A`` is diagonal free.  Terms whose matrix would acquire a negative
    off-diagonal entry are zero.
    """
    if h == k:
        raise ValueError("mult_bracket needs h != k")
    n = A.n
    h, k = canonicalize(h, k, n)
    j = tuple(j)
    out = Element.zero(n, r)
    # t ranges over columns with a_{k,t} >= 1, t not in {h, k}
    for t, _ in A.row(k):
        if t == h or t == k:
            continue
        B = add_unit(sub_unit(A, k, t), h, t)
        out = out + (A[h, t] + 1) * bracket_element(B, j, r)
    jh = j[residue(h, n) - 1]
    eh = unit_vector(h, n)
    B = sub_unit(A, k, h)
    if B is not None:
        for t in range(jh + 1):
            jj = vadd(j, tuple((1 - t) * x for x in eh))
            out = out + ((-1) ** t * comb(jh, t)) * bracket_element(B, jj, r)
    jk = j[residue(k, n) - 1]
    ek = unit_vector(k, n)
    B = add_unit(A, h, k)
    mult = A[h, k] + 1
    for t in range(jk + 1):
        jj = vsub(j, tuple(t * x for x in ek))
        out = out + (mult * comb(jk, t)) * bracket_element(B, jj, r)
    return out


def mult_zero_bracket(l: int, A: AffineMatrix, j: Sequence[int], r: int) -> Element:
    """``0[e_l, r] A[j, r] = A[j + e_l, r] + (sum_s a_{l,s}) A[j, r]``."""
    n = A.n
    j = tuple(j)
    rowsum = sum(a for _, a in A.row(l))
    return bracket_element(A, vadd(j, unit_vector(l, n)), r) + rowsum * bracket_element(A, j, r)


# -- literal specializations ---------------------------------------------------
# These scan a column window instead of the support of a row; they exist to
# cross-check the general unit product on the adjacent and loop cases.

def _column_window(A: AffineMatrix, pad: int):
    cols = [q for (_, q), _ in A.items()] or [1]
    return range(min(cols) - pad, max(cols) + pad + 1)


def mult_adjacent(h: int, eps: int, A: AffineMatrix) -> Element:
    """``[E_{h,h+eps} + diag(lam - e_{h+eps})]_1 [A]_1`` with ``lam = ro(A)``.

    Zero when ``lam_{h+eps} = 0``.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    n = A.n
    r = sigma(A)
    lam = row_sum(A)
    if lam[residue(h + eps, n) - 1] < 1:
        return Element.zero(n, r)
    out = {}
    for i in _column_window(A, 4 * n):
        B = sub_unit(A, h + eps, i)
        if B is None:
            continue
        B = add_unit(B, h, i)
        out[B] = out.get(B, 0) + A[h, i] + 1
    return Element(n, r, out)


def mult_loop(h: int, m: int, A: AffineMatrix) -> Element:
    """``[E_{h,h+mn} + diag(lam - e_h)]_1 [A]_1`` with ``lam = ro(A)``, ``m != 0``."""
    if m == 0:
        raise ValueError("loop product needs m != 0")
    n = A.n
    r = sigma(A)
    lam = row_sum(A)
    if lam[residue(h, n) - 1] < 1:
        return Element.zero(n, r)
    out = {}
    for s in _column_window(A, (abs(m) + 2) * n):
        B = sub_unit(A, h, s)
        if B is None:
            continue
        B = add_unit(B, h, s + m * n)
        out[B] = out.get(B, 0) + A[h, s + m * n] + 1
    return Element(n, r, out)
