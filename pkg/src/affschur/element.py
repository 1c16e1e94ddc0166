"""
Elements of the rational affine Schur algebra and the generator images.

An :class:`Element` is a finite linear combination of basis symbols ``[A]_1``
with ``A`` a periodic matrix of total weight ``r``.  Coefficients are exact:
Python ``int`` or :class:`fractions.Fraction`, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Union

from .lattice import AffineMatrix, canonicalize, diag, sigma

Coeff = Union[int, Fraction]


class Element:
    """Immutable linear combination ``sum c_A [A]_1`` in ``S(n, r)``."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n: int, r: int, terms=None):
        self.n = n
        self.r = r
        clean = {}
        if terms:
            for A, c in dict(terms).items():
                if c:
                    clean[A] = c
        self.terms: dict[AffineMatrix, Coeff] = clean

    @classmethod
    def _wrap(cls, n, r, terms):
        # terms already pruned
        obj = cls.__new__(cls)
        obj.n, obj.r, obj.terms = n, r, terms
        return obj

    @classmethod
    def basis(cls, A: AffineMatrix, coeff: Coeff = 1) -> "Element":
        return cls(A.n, sigma(A), {A: coeff})

    @classmethod
    def zero(cls, n: int, r: int) -> "Element":
        return cls._wrap(n, r, {})

    def _check(self, other):
        if not isinstance(other, Element):
            raise TypeError("expected Element, got %s" % type(other).__name__)
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("(n, r) mismatch: %r vs %r" % ((self.n, self.r), (other.n, other.r)))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for A, c in other.terms.items():
            v = out.get(A, 0) + c
            if v:
                out[A] = v
            else:
                out.pop(A, None)
        return Element._wrap(self.n, self.r, out)

    def __neg__(self):
        return Element._wrap(self.n, self.r, {A: -c for A, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Element):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return "Element(n=%d, r=%d, %s)" % (self.n, self.r, serialize(self))

    def coeff(self, A: AffineMatrix) -> Coeff:
        return self.terms.get(A, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0].key)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "terms": [{"matrix": A.to_json(), "coeff": format_coeff(c)} for A, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Element":
        try:
            n, r = int(obj["n"]), int(obj["r"])
            terms = {}
            for t in obj["terms"]:
                A = AffineMatrix.from_json(t["matrix"])
                if A.n != n or sigma(A) != r:
                    raise ValueError("term %s does not lie in S(%d, %d)" % (A, n, r))
                terms[A] = terms.get(A, 0) + parse_coeff(t["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed element JSON: %s" % (exc,)) from exc
        return cls(n, r, terms)


def format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    return "%d/%d" % (c.numerator, c.denominator)


def parse_coeff(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise ValueError("coefficient must be an integer or a 'p/q' string, got %r" % (s,))
    return Fraction(s)


def scale(c: Coeff, x: Element) -> Element:
    if not c:
        return Element.zero(x.n, x.r)
    return Element._wrap(x.n, x.r, {A: c * v for A, v in x.terms.items()})


def add(x: Element, y: Element) -> Element:
    return x + y


def equals(x: Element, y: Element) -> bool:
    return x == y


def serialize(x: Element) -> str:
    """Canonical one-line text: ``"0"`` or ``"p/q*[i,j:a; ...] + ..."``."""
    if not x.terms:
        return "0"
    return " + ".join("%s*%s" % (format_coeff(c), A) for A, c in x.sorted_terms())


def linear_sum(n: int, r: int, items: Iterable[Element]) -> Element:
    out: dict = {}
    for x in items:
        for A, c in x.terms.items():
            out[A] = out.get(A, 0) + c
    return Element(n, r, out)


# -- compositions ------------------------------------------------------------

@lru_cache(maxsize=None)
def compositions(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """All ``n``-part compositions of ``m``, largest first part first."""
    if m < 0:
        return ()
    if n == 1:
        return ((m,),)
    return tuple((a,) + rest for a in range(m, -1, -1) for rest in compositions(n - 1, m - a))


def enumerate_compositions(n: int, m: int) -> list[tuple[int, ...]]:
    return list(compositions(n, m))


def unit_vector(i: int, n: int) -> tuple[int, ...]:
    v = [0] * n
    v[(i - 1) % n] = 1
    return tuple(v)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


# -- distinguished elements --------------------------------------------------

def bracket_element(A: AffineMatrix, j: Iterable[int], r: int) -> Element:
    """``A[j, r] = sum_{lam in Lambda(n, r - sigma(A))} lam^j [A + diag(lam)]_1``.

    ``A`` must be diagonal free.  ``0**0`` is taken to be 1.
    """
    if not A.has_zero_diagonal():
        raise ValueError("bracket element needs a diagonal-free matrix, got %s" % (A,))
    n = A.n
    j = tuple(j)
    if len(j) != n:
        raise ValueError("exponent vector must have %d parts" % n)
    terms = {}
    for lam in compositions(n, r - sigma(A)):
        w = prod(l ** e for l, e in zip(lam, j))
        if w:
            terms[A + diag(lam)] = w
    return Element._wrap(n, r, terms)


def idempotent(lam: Iterable[int], r: int | None = None) -> Element:
    lam = tuple(lam)
    if r is None:
        r = sum(lam)
    n = len(lam)
    if sum(lam) != r or any(p < 0 for p in lam):
        return Element.zero(n, r)
    return Element._wrap(n, r, {diag(lam): 1})


def identity(n: int, r: int) -> Element:
    return Element._wrap(n, r, {diag(lam): 1 for lam in compositions(n, r)})


# -- generators ------------------------------------------------------------

@dataclass(frozen=True)
class Unit:
    """The generator ``e_{i,j}`` (image ``E_{i,j}[0, r]``), canonical, ``i != j``."""
    i: int
    j: int

    def __str__(self):
        return "E%d,%d" % (self.i, self.j)


@dataclass(frozen=True)
class Weight:
    """``h_i = E_{i,i}``, with image ``0[e_i, r] = sum lam_i k_lam``."""
    i: int

    def __str__(self):
        return "h%d" % self.i


@dataclass(frozen=True)
class Idempotent:
    """``k_lam``; zero when ``lam`` is not a composition of ``r``."""
    parts: tuple

    def __str__(self):
        return "k" + ",".join(map(str, self.parts))


Generator = Union[Unit, Weight, Idempotent]


def unit(i: int, j: int, n: int) -> Generator:
    """``e_{i,j}`` for any integers; the diagonal case is ``h_i``."""
    i, j = canonicalize(i, j, n)
    if i == j:
        return Weight(i)
    return Unit(i, j)


def e(i: int, n: int) -> Generator:
    return unit(i, i + 1, n)


def f(i: int, n: int) -> Generator:
    return unit(i + 1, i, n)


def loop(i: int, m: int, n: int) -> Generator:
    """``e_{i, i+mn}``; ``m = 0`` gives ``h_i``."""
    return unit(i, i + m * n, n)


def h(i: int, n: int) -> Weight:
    return Weight(canonicalize(i, i, n)[0])


def tau_generator(g: Generator, n: int) -> Generator:
    if isinstance(g, Unit):
        return unit(g.j, g.i, n)
    return g


def generator_element(g: Generator, n: int, r: int) -> Element:
    """Image of a generator in ``S(n, r)``."""
    if isinstance(g, Idempotent):
        return idempotent(g.parts, r)
    if isinstance(g, Weight):
        return Element._wrap(n, r, {diag(lam): lam[g.i - 1] for lam in compositions(n, r) if lam[g.i - 1]})
    i, j = canonicalize(g.i, g.j, n)
    if i == j:
        raise ValueError("e_{i,j} needs i != j")
    return bracket_element(AffineMatrix._trusted(n, {(i, j): 1}), (0,) * n, r)


def parse_generator(token: str, n: int) -> Generator:
    """Parse ``e<i>``, ``f<i>``, ``h<i>``, ``E<i>,<j>``, ``k<parts>``."""
    tok = token.strip()
    try:
        head, body = tok[0], tok[1:]
        if head == "e":
            return e(int(body), n)
        if head == "f":
            return f(int(body), n)
        if head == "h":
            return h(int(body), n)
        if head == "E":
            i, j = body.split(",")
            return unit(int(i), int(j), n)
        if head == "k":
            body = body.strip("()")
            if "," in body:
                parts = tuple(int(p) for p in body.split(","))
            else:
                parts = tuple(int(ch) for ch in body)
            if len(parts) != n:
                raise ValueError("k needs %d parts" % n)
            return Idempotent(parts)
    except (ValueError, IndexError) as exc:
        raise ValueError("bad generator token %r: %s" % (token, exc)) from exc
    raise ValueError("bad generator token %r" % (token,))
