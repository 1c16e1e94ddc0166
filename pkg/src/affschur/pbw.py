"""
PBW monomials and normal forms.

A PBW monomial is a pair ``(A, lam)`` with ``A`` diagonal free and ``lam`` a
composition of ``r``.  It stands for the divided word

    prod_{(i,j) upper} e_{i,j}^{a_ij} / a_ij!  *  k_lam  *  prod_{(i,j) lower} e_{i,j}^{a_ij} / a_ij!

whose leading term is ``[A + diag(lam - sigma_vec(A))]_1``; every other term
has strictly smaller off-diagonal weight.  Inverting that unitriangular
system gives coordinates in the PBW basis, and through them a product of two
arbitrary elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

from .element import Element, Idempotent, Unit, compositions, linear_sum, tau_generator
from .formula import mult_generator, transpose_tau, word_product
from .lattice import (
    AffineMatrix,
    diag,
    offdiag,
    offdiag_sigma,
    sigma_vec,
    split_pm,
)


@dataclass(frozen=True, order=True)
class PBWMonomial:
    A: AffineMatrix  # diagonal free
    lam: tuple

    def slack(self) -> tuple:
        return tuple(l - s for l, s in zip(self.lam, sigma_vec(self.A)))

    def leading_matrix(self) -> AffineMatrix | None:
        d = self.slack()
        if any(x < 0 for x in d):
            return None
        return self.A + diag(d)

    @classmethod
    def of_matrix(cls, B: AffineMatrix) -> "PBWMonomial":
        """The monomial whose leading term is ``[B]_1``."""
        return cls(offdiag(B), sigma_vec(B))

    def to_json(self) -> dict:
        up, _, lo = split_pm(self.A)
        return {"Aplus": up.to_json(), "lambda": list(self.lam), "Aminus": lo.to_json()}

    @classmethod
    def from_json(cls, obj) -> "PBWMonomial":
        up = AffineMatrix.from_json(obj["Aplus"])
        lo = AffineMatrix.from_json(obj["Aminus"])
        return cls(up + lo, tuple(int(x) for x in obj["lambda"]))


# -- position order ------------------------------------------------------------

def upper_positions(A: AffineMatrix, order: str = "rows"):
    """Upper positions of ``A`` with multiplicities, in the fixed total order.

    ``"rows"`` sorts by ``(i, j)``.  ``"columns"`` is the product
    ``M_n ... M_1`` where ``M_c`` runs over the column class ``c`` row by row.
    """
    up = [(p, a) for p, a in A.items() if p[0] < p[1]]
    if order == "rows":
        up.sort()
    elif order == "columns":
        n = A.n
        up.sort(key=lambda t: (-((t[0][1] - 1) % n), t[0][0], t[0][1]))
    else:
        raise ValueError("unknown order %r" % (order,))
    return up


def lower_positions(A: AffineMatrix, order: str = "rows"):
    lo = [(p, a) for p, a in A.items() if p[0] > p[1]]
    if order == "rows":
        lo.sort(key=lambda t: (t[0][0], -t[0][1]))
    elif order == "columns":
        # tau-mirror of the upper "columns" order: M'_1 M'_2 ... M'_n
        n = A.n
        lo.sort(key=lambda t: (t[0][0], -((t[0][1] - 1) % n), t[0][1]))
    else:
        raise ValueError("unknown order %r" % (order,))
    return lo


def pbw_word(M: PBWMonomial, order: str = "rows"):
    """Return ``(word, divisor)`` for the monomial."""
    word = []
    div = 1
    for (i, j), a in upper_positions(M.A, order):
        word.extend([Unit(i, j)] * a)
        div *= factorial(a)
    word.append(Idempotent(tuple(M.lam)))
    for (i, j), a in lower_positions(M.A, order):
        word.extend([Unit(i, j)] * a)
        div *= factorial(a)
    return word, div


def pbw_evaluate(M: PBWMonomial, divided: bool = True, order: str = "rows") -> Element:
    """Value of the PBW word.

    The part right of ``k_lam`` is evaluated on ``[diag(lam)]`` through the
    transpose, so no sweep over the whole identity is needed.
    """
    n = M.A.n
    r = sum(M.lam)
    word, div = pbw_word(M, order)
    cut = word.index(Idempotent(tuple(M.lam)))
    x = Element.basis(diag(M.lam)) if all(p >= 0 for p in M.lam) else Element.zero(n, r)
    for g in word[cut + 1:]:
        x = mult_generator(tau_generator(g, n), x)
    x = transpose_tau(x)
    x = word_product(word[:cut], x)
    if divided and div != 1:
        x = Fraction(1, div) * x
    return x


@lru_cache(maxsize=None)
def _evaluate_cached(M: PBWMonomial) -> Element:
    return pbw_evaluate(M, True)


@dataclass
class TriangularReport:
    ok: bool
    degenerate: bool
    leading: AffineMatrix | None
    leading_coeff: object
    residual: list  # (matrix, coeff) pairs other than the leading term
    offenders: list  # residual terms violating the weight drop


def triangular_check(A: AffineMatrix, lam, order: str = "rows") -> TriangularReport:
    """Check the unitriangular shape of the divided PBW word for ``(A, lam)``."""
    M = PBWMonomial(A, tuple(lam))
    x = pbw_evaluate(M, True, order)
    lead = M.leading_matrix()
    s = offdiag_sigma(A)
    residual = [(B, c) for B, c in x.sorted_terms() if B != lead]
    offenders = [(B, c) for B, c in residual if offdiag_sigma(B) >= s]
    if lead is None:
        return TriangularReport(False, True, None, 0, residual, offenders)
    c = x.coeff(lead)
    return TriangularReport(c == 1 and not offenders, False, lead, c, residual, offenders)


# -- normal form ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_normal_form(B: AffineMatrix) -> tuple:
    M = PBWMonomial.of_matrix(B)
    coords = {M: Fraction(1)}
    for C, c in _evaluate_cached(M).terms.items():
        if C == B:
            continue
        for N, v in _basis_normal_form(C):
            coords[N] = coords.get(N, 0) - c * v
    return tuple(sorted((N, v) for N, v in coords.items() if v))


def normal_form(x: Element) -> dict:
    """PBW coordinates ``{PBWMonomial: Fraction}`` of ``x`` (divided words)."""
    out: dict = {}
    # deepest-first keeps recursion shallow on cold caches
    for B in sorted(x.terms, key=offdiag_sigma):
        _basis_normal_form(B)
    for B, c in x.terms.items():
        for N, v in _basis_normal_form(B):
            out[N] = out.get(N, 0) + c * v
    return {N: v for N, v in out.items() if v}


def expand(coords: dict, n: int, r: int) -> Element:
    return linear_sum(n, r, (c * _evaluate_cached(M) for M, c in coords.items()))


def general_product(x: Element, y: Element) -> Element:
    """``x y`` for arbitrary elements, via the PBW coordinates of ``x``."""
    if (x.n, x.r) != (y.n, y.r):
        raise ValueError("(n, r) mismatch: %r vs %r" % ((x.n, x.r), (y.n, y.r)))
    parts = []
    for M, c in normal_form(x).items():
        word, div = pbw_word(M)
        parts.append(Fraction(c, 1) / div * word_product(word, y))
    return linear_sum(x.n, x.r, parts)


def clear_caches():
    _evaluate_cached.cache_clear()
    _basis_normal_form.cache_clear()


# -- enumeration -----------------------------------------------------------------

def _band_positions(n, W, diagonal=True):
    return [(i, j) for i in range(1, n + 1) for j in range(i - W, i + W + 1) if diagonal or i != j]


def _multisets(positions, total):
    for combo in combinations_with_replacement(positions, total):
        data: dict = {}
        for p in combo:
            data[p] = data.get(p, 0) + 1
        yield data


def enumerate_theta(n: int, r: int, W: int) -> list:
    """All ``A`` of total weight ``r`` with ``a_ij = 0`` unless ``|j - i| <= W``."""
    return [AffineMatrix._trusted(n, d) for d in _multisets(_band_positions(n, W), r)]


def enumerate_offdiag(n: int, max_sigma: int, W: int) -> list:
    """Diagonal-free band matrices of weight ``0..max_sigma``."""
    pos = _band_positions(n, W, diagonal=False)
    out = []
    for s in range(max_sigma + 1):
        out.extend(AffineMatrix._trusted(n, d) for d in _multisets(pos, s))
    return out


def admissible_weights(A: AffineMatrix, r: int) -> list:
    """Compositions ``lam`` of ``r`` with ``lam >= sigma_vec(A)`` partwise."""
    sv = sigma_vec(A)
    return [lam for lam in compositions(A.n, r) if all(l >= s for l, s in zip(lam, sv))]
