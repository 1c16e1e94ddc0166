"""
Relation checks for the presentation of the affine Schur algebra.

Both sides of every relation are noncommutative polynomials in the
generators (:class:`Poly`); they are evaluated inside ``S(n, r)`` and
compared exactly.  The loop-generator family ``f_i(m_1, ..., m_t)`` is
computed from its recursion and compared with its closed form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, prod
from typing import Callable, Union

from .element import (
    Element,
    Generator,
    Idempotent,
    bracket_element,
    compositions,
    e,
    f,
    generator_element,
    h,
    linear_sum,
    loop,
    unit,
    unit_vector,
    vadd,
    vsub,
)
from .formula import evaluate_word, mult_by_diag, mult_generator
from .lattice import AffineMatrix, residue

log = logging.getLogger(__name__)


class Poly:
    """Noncommutative polynomial: ``{tuple of generators: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, g: Generator) -> "Poly":
        return cls({(g,): 1})

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Poly(out)

    def __neg__(self):
        return Poly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return Poly(out)
        return Poly({w: other * c for w, c in self.terms.items()})

    def __rmul__(self, c):
        return Poly({w: c * v for w, v in self.terms.items()})

    def __pow__(self, k: int):
        out = Poly.one()
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return "Poly(%s)" % " + ".join(
            "%s*%s" % (c, "".join(map(str, w)) or "1") for w, c in self.terms.items()
        )

    def evaluate(self, n: int, r: int) -> Element:
        return linear_sum(n, r, (c * evaluate_word(w, n, r) for w, c in self.terms.items()))


def G(g: Generator) -> Poly:
    return Poly.gen(g)


def bracket(x: Poly, y: Poly) -> Poly:
    return x * y - y * x


def zero_poly() -> Poly:
    return Poly()


# -- Cartan data ---------------------------------------------------------------

def cartan(i: int, j: int, n: int) -> int:
    """Entry of the affine Cartan matrix of type A_{n-1}."""
    i, j = residue(i, n), residue(j, n)
    if i == j:
        return 2
    if n == 2:
        return -2
    if (j - i) % n in (1, n - 1):
        return -1
    return 0


def serre(x: Poly, y: Poly, c: int) -> Poly:
    """``sum_{a+b=1-c} (-1)^a binom(1-c, a) x^a y x^b``."""
    N = 1 - c
    out = Poly()
    for a in range(N + 1):
        out = out + ((-1) ** a * comb(N, a)) * (x ** a * y * x ** (N - a))
    return out


def weight_sum(n: int, r: int, weight: Callable) -> Poly:
    """``sum_lam weight(lam) k_lam``."""
    return Poly({(Idempotent(lam),): weight(lam) for lam in compositions(n, r)})


def h_poly(i: int, n: int) -> Poly:
    return G(h(i, n))


def central_loop(m: int, n: int) -> Poly:
    """``Z_m = sum_{i=1..n} e_{i, i+mn}``."""
    out = Poly()
    for i in range(1, n + 1):
        out = out + G(loop(i, m, n))
    return out


# -- nested brackets -------------------------------------------------------------

def _inner_loop(m: int, sign: int, n: int) -> Poly:
    # E_{2, 2 +/- (m-1)n}; diagonal when m = 1, read as h_2
    return G(unit(2, 2 + sign * (m - 1) * n, n))


def bracket_poly_X(i: int, m: int, n: int) -> Poly:
    """``X_{i,m} = [[...[[e_1, E_{2,2+(m-1)n}], e_2], ...], e_{i-1}]``."""
    x = bracket(G(e(1, n)), _inner_loop(m, 1, n))
    for k in range(2, i):
        x = bracket(x, G(e(k, n)))
    return x


def bracket_poly_Y(i: int, m: int, n: int) -> Poly:
    """``Y_{i,m} = [f_{i-1}, [..., [f_2, [E_{2,2-(m-1)n}, f_1]] ...]]``."""
    y = bracket(_inner_loop(m, -1, n), G(f(1, n)))
    for k in range(2, i):
        y = bracket(G(f(k, n)), y)
    return y


def raising_chain(i: int, n: int) -> Poly:
    """``[[...[e_i, e_{i+1}], ...], e_n]``."""
    x = G(e(i, n))
    for k in range(i + 1, n + 1):
        x = bracket(x, G(e(k, n)))
    return x


def lowering_chain(i: int, n: int) -> Poly:
    """``[f_n, [..., [f_{i+1}, f_i] ...]]``."""
    y = G(f(i, n))
    for k in range(i + 1, n + 1):
        y = bracket(G(f(k, n)), y)
    return y


def bracket_word_X(i: int, m: int, n: int, r: int) -> Element:
    return bracket_poly_X(i, m, n).evaluate(n, r)


def bracket_word_Y(i: int, m: int, n: int, r: int) -> Element:
    return bracket_poly_Y(i, m, n).evaluate(n, r)


# -- the f_i family ------------------------------------------------------------

@lru_cache(maxsize=None)
def fi(i: int, ms: tuple, n: int, r: int) -> Element:
    """``f_i(m_1, ..., m_t)`` from its recursion.

    The product ``f_i(m_1..m_{t-1}) f_i(m_t)`` is taken as
    ``f_i(m_t) f_i(m_1..m_{t-1})``; all ``f_i(m)`` commute.
    """
    ms = tuple(ms)
    if not ms:
        raise ValueError("f_i needs at least one argument")
    if len(ms) == 1:
        return generator_element(loop(i, ms[0], n), n, r)
    val = mult_generator(loop(i, ms[-1], n), fi(i, ms[:-1], n, r))
    last = ms[-1]
    for j in range(len(ms) - 1):
        val = val - fi(i, ms[:j] + ms[j + 1:-1] + (ms[j] + last,), n, r)
    return val


def closed_form_scalar(ms) -> int:
    """``prod_{k>=2} #{s <= k : m_s = m_k}``."""
    return prod(sum(1 for s in range(k + 1) if ms[s] == ms[k]) for k in range(1, len(ms)))


def fi_closed_form(i: int, ms, n: int, r: int) -> Element:
    """``a_{m_1..m_t} (sum_j E_{i, i+m_j n})[0, r]`` for nonzero ``m_j``."""
    ms = tuple(ms)
    if any(m == 0 for m in ms):
        raise ValueError("closed form needs nonzero arguments")
    A = AffineMatrix(n, [(i, i + m * n, 1) for m in ms])
    return closed_form_scalar(ms) * bracket_element(A, (0,) * n, r)


def nonzero_lists(t_max: int, m_max: int):
    vals = [m for m in range(-m_max, m_max + 1) if m]
    for t in range(1, t_max + 1):
        yield from product(vals, repeat=t)


# -- relation instances ----------------------------------------------------------

Side = Union[Poly, Element, Callable[[], Element]]


@dataclass
class RelationInstance:
    rid: str
    params: dict
    lhs: Side
    rhs: Side
    flagged: bool = False


def _value(side: Side, n: int, r: int) -> Element:
    if isinstance(side, Poly):
        return side.evaluate(n, r)
    if isinstance(side, Element):
        return side
    return side()


def check_relation(inst: RelationInstance, n: int, r: int):
    """Return ``(passed, residual)`` with ``residual = lhs - rhs``."""
    res = _value(inst.lhs, n, r) - _value(inst.rhs, n, r)
    return not res, res


def _idem(lam) -> Poly:
    return G(Idempotent(tuple(lam)))


def _shifted_weights(n, r, i):
    """Compositions of r together with their shifts by -/+ alpha_i."""
    alpha = vsub(unit_vector(i, n), unit_vector(i + 1, n))
    out = set()
    for lam in compositions(n, r):
        out.update((lam, vsub(lam, alpha), vadd(lam, alpha)))
    return sorted(out), alpha


def _loop_indices(n, m_max):
    return [(i, m) for i in range(1, n + 1) for m in range(-m_max, m_max + 1) if m]


def instances(n: int, r: int, m_max: int = 2, t_max: int = 3):
    """Yield every relation instance within the sweep bounds."""
    I = range(1, n + 1)
    lams = compositions(n, r)
    gens = [e(i, n) for i in I] + [f(i, n) for i in I] + [loop(i, m, n) for i, m in _loop_indices(n, m_max)]

    # R1
    for lam in lams:
        for mu in lams:
            rhs = _idem(lam) if lam == mu else zero_poly()
            yield RelationInstance("R1", {"lambda": lam, "mu": mu}, _idem(lam) * _idem(mu), rhs)
    one = weight_sum(n, r, lambda lam: 1)
    for g in gens:
        yield RelationInstance("R1", {"unit_left": str(g)}, one * G(g), G(g))
        yield RelationInstance("R1", {"unit_right": str(g)}, G(g) * one, G(g))

    # R2
    for i in I:
        weights, alpha = _shifted_weights(n, r, i)
        for lam in weights:
            yield RelationInstance("R2", {"e": i, "lambda": lam},
                                   G(e(i, n)) * _idem(lam), _idem(vadd(lam, alpha)) * G(e(i, n)))
            yield RelationInstance("R2", {"f": i, "lambda": lam},
                                   G(f(i, n)) * _idem(lam), _idem(vsub(lam, alpha)) * G(f(i, n)))

    # R3
    for i in I:
        for j in I:
            rhs = weight_sum(n, r, lambda lam: lam[i - 1] - lam[i % n]) if i == j else zero_poly()
            yield RelationInstance("R3", {"i": i, "j": j}, bracket(G(e(i, n)), G(f(j, n))), rhs)

    # R4, R5 and their enveloping-algebra twins
    for i in I:
        for j in I:
            if i == j:
                continue
            c = cartan(i, j, n)
            for rid, mk in (("R4", e), ("R5", f), ("UR4", e), ("UR5", f)):
                yield RelationInstance(rid, {"i": i, "j": j, "c": c},
                                       serre(G(mk(i, n)), G(mk(j, n)), c), zero_poly())

    # R6, R7 (and UR8', UR9')
    for i in range(2, n + 1):
        for m in range(1, m_max + 1):
            rhs6 = G(loop(1, m, n)) - G(loop(i, m, n))
            rhs7 = G(loop(1, -m, n)) - G(loop(i, -m, n))
            lhs6 = bracket(bracket_poly_X(i, m, n), raising_chain(i, n))
            lhs7 = bracket(lowering_chain(i, n), bracket_poly_Y(i, m, n))
            for rid, lhs, rhs in (("R6", lhs6, rhs6), ("UR8'", lhs6, rhs6),
                                  ("R7", lhs7, rhs7), ("UR9'", lhs7, rhs7)):
                yield RelationInstance(rid, {"i": i, "m": m}, lhs, rhs, flagged=(m == 1))

    # R8
    loops = _loop_indices(n, m_max)
    for i, m in loops:
        g = G(loop(i, m, n))
        for lam in lams:
            yield RelationInstance("R8", {"i": i, "m": m, "lambda": lam}, g * _idem(lam), _idem(lam) * g)
        for j, l in loops:
            g2 = G(loop(j, l, n))
            yield RelationInstance("R8", {"i": i, "m": m, "j": j, "l": l}, g * g2, g2 * g)

    # R9 (and UR7')
    for m in range(-m_max, m_max + 1):
        if not m:
            continue
        Z = central_loop(m, n)
        for j in I:
            for rid in ("R9", "UR7'"):
                yield RelationInstance(rid, {"m": m, "e": j}, Z * G(e(j, n)), G(e(j, n)) * Z)
                yield RelationInstance(rid, {"m": m, "f": j}, Z * G(f(j, n)), G(f(j, n)) * Z)

    # R10
    for i in I:
        for ms in nonzero_lists(t_max, m_max):
            t = len(ms)
            for lam in lams:
                if lam[i - 1] >= t:
                    continue
                yield RelationInstance(
                    "R10", {"i": i, "ms": ms, "lambda": lam},
                    (lambda i=i, ms=ms, lam=lam: mult_by_diag(fi(i, ms, n, r), lam)),
                    Element.zero(n, r),
                )

    # UR1 - UR3
    for i in I:
        for j in I:
            yield RelationInstance("UR1", {"i": i, "j": j}, bracket(h_poly(i, n), h_poly(j, n)), zero_poly())
            de = (i == j) - (i == residue(j + 1, n))
            yield RelationInstance("UR2", {"i": i, "e": j}, bracket(h_poly(i, n), G(e(j, n))), de * G(e(j, n)))
            yield RelationInstance("UR2", {"i": i, "f": j}, bracket(h_poly(i, n), G(f(j, n))), -de * G(f(j, n)))
            rhs = h_poly(j, n) - h_poly(j + 1, n) if i == j else zero_poly()
            yield RelationInstance("UR3", {"i": i, "j": j}, bracket(G(e(i, n)), G(f(j, n))), rhs)

    # UR6: Z_s central-type relations
    svals = [s for s in range(-m_max, m_max + 1) if s]
    for s in svals:
        Z = central_loop(s, n)
        others = [("e", i, G(e(i, n))) for i in I] + [("f", i, G(f(i, n))) for i in I] + \
                 [("h", i, h_poly(i, n)) for i in I] + [("Z", t, central_loop(t, n)) for t in svals]
        for kind, idx, X in others:
            yield RelationInstance("UR6", {"s": s, kind: idx}, bracket(X, Z), zero_poly())

    # UR6'
    for i, m in loops:
        g = G(loop(i, m, n))
        for j in I:
            yield RelationInstance("UR6'", {"i": i, "m": m, "h": j}, bracket(g, h_poly(j, n)), zero_poly())
        for j, l in loops:
            yield RelationInstance("UR6'", {"i": i, "m": m, "j": j, "l": l}, bracket(g, G(loop(j, l, n))), zero_poly())


RELATION_ORDER = ["R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10",
                  "UR1", "UR2", "UR3", "UR4", "UR5", "UR6", "UR6'", "UR7'", "UR8'", "UR9'", "PBW"]


def _jsonable(params):
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}


def verify_presentation(n: int, r: int, m_max: int = 2, t_max: int = 3, band: int | None = None) -> dict:
    """Sweep every relation instance and a PBW round trip; return a report.

    The round trip ``expand(normal_form([A])) == [A]`` runs over all band
    matrices of ``S(n, r)`` with ``|j - i| <= band``.
    """
    from .pbw import enumerate_theta, expand, normal_form

    if band is None:
        band = 2 * n
    stats: dict = {}
    for inst in instances(n, r, m_max, t_max):
        entry = stats.setdefault(inst.rid, {"id": inst.rid, "instances": 0, "failures": [], "flagged": []})
        entry["instances"] += 1
        ok, res = check_relation(inst, n, r)
        params = _jsonable(inst.params)
        if not ok:
            log.debug("relation %s failed at %s", inst.rid, params)
            entry["failures"].append({"params": params, "residual": res.to_json()})
        if inst.flagged:
            entry["flagged"].append({"params": params, "passed": ok})
    entry = stats.setdefault("PBW", {"id": "PBW", "instances": 0, "failures": [], "flagged": []})
    for A in enumerate_theta(n, r, band):
        x = Element.basis(A)
        entry["instances"] += 1
        back = expand(normal_form(x), n, r)
        if back != x:
            entry["failures"].append({"params": {"matrix": A.to_json()}, "residual": (back - x).to_json()})
    relations = [stats[k] for k in RELATION_ORDER if k in stats]
    for rel in relations:
        if not rel["flagged"]:
            del rel["flagged"]
    return {
        "n": n,
        "r": r,
        "bounds": {"mmax": m_max, "tmax": t_max, "band": band},
        "relations": relations,
        "passed": all(not rel["failures"] for rel in relations),
    }


def closed_form_check(n: int, r: int, m_max: int = 2, t_max: int = 3, rows=None) -> dict:
    """Compare the recursion for ``f_i`` with its closed form."""
    rows = list(rows) if rows is not None else list(range(1, n + 1))
    checked = 0
    failures = []
    for i in rows:
        for ms in nonzero_lists(t_max, m_max):
            checked += 1
            diff = fi(i, ms, n, r) - fi_closed_form(i, ms, n, r)
            if diff:
                failures.append({"i": i, "ms": list(ms), "residual": diff.to_json()})
    return {
        "n": n,
        "r": r,
        "bounds": {"mmax": m_max, "tmax": t_max},
        "rows": rows,
        "checked": checked,
        "failures": failures,
        "passed": not failures,
    }
