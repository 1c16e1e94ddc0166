"""
Periodic Z x Z matrices.

A matrix ``A = (a_ij)`` with ``a_{i+n, j+n} = a_ij`` and finitely many nonzero
entries per row is stored by its entries in rows ``1..n``; every other entry
is recovered by shifting along the diagonal.  Compositions (periodic vectors)
are plain tuples of ``n`` integers, position ``k`` holding the value at index
``k + 1``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def canonicalize(i: int, j: int, n: int) -> tuple[int, int]:
    """Shift ``(i, j)`` along the diagonal so the row lies in ``1..n``."""
    if n < 2:
        raise ValueError("period must be at least 2, got %r" % (n,))
    k = (i - 1) // n
    return i - k * n, j - k * n


def residue(i: int, n: int) -> int:
    """Representative of ``i`` modulo ``n`` in ``1..n``."""
    return (i - 1) % n + 1


class AffineMatrix:
    """Immutable, hashable periodic matrix with nonnegative integer entries.

    Only nonzero entries are kept, keyed by canonical position ``(i, j)`` with
    ``1 <= i <= n``.
    """

    __slots__ = ("n", "_data", "key", "_hash")

    def __init__(self, n: int, entries: Mapping | Iterable = ()):
        if n < 2:
            raise ValueError("period must be at least 2, got %r" % (n,))
        if isinstance(entries, Mapping):
            entries = entries.items()
        data: dict[tuple[int, int], int] = {}
        for item in entries:
            if len(item) == 2:
                (i, j), a = item
            else:
                i, j, a = item
            a = int(a)
            if a < 0:
                raise ValueError("negative entry %d at (%d, %d)" % (a, i, j))
            if a == 0:
                continue
            pos = canonicalize(i, j, n)
            data[pos] = data.get(pos, 0) + a
        self._set(n, data)

    def _set(self, n, data):
        self.n = n
        self._data = data
        self.key = tuple(sorted((i, j, a) for (i, j), a in data.items()))
        self._hash = hash((n, self.key))

    @classmethod
    def _trusted(cls, n: int, data: dict) -> "AffineMatrix":
        # data must already be canonical with positive values
        obj = cls.__new__(cls)
        obj._set(n, data)
        return obj

    # -- basic protocol --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AffineMatrix):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, self.key) < (other.n, other.key)

    def __repr__(self):
        return "AffineMatrix(%d, %r)" % (self.n, list(self.key))

    def __str__(self):
        if not self.key:
            return "0"
        return "[" + "; ".join("%d,%d:%d" % e for e in self.key) + "]"

    def __iter__(self):
        return iter(self.key)

    def __len__(self):
        return len(self.key)

    def __getitem__(self, pos: tuple[int, int]) -> int:
        i, j = pos
        return self._data.get(canonicalize(i, j, self.n), 0)

    def items(self):
        """Canonical ``((i, j), a)`` pairs (unordered)."""
        return self._data.items()

    def row(self, i: int):
        """Yield ``(t, a)`` for the nonzero entries ``a_{i,t}``, true indices."""
        n = self.n
        k = (i - 1) // n
        shift = k * n
        i0 = i - shift
        for (p, q), a in self._data.items():
            if p == i0:
                yield q + shift, a

    def is_zero(self) -> bool:
        return not self._data

    def has_zero_diagonal(self) -> bool:
        return all(i != j for i, j in self._data)

    def __add__(self, other: "AffineMatrix") -> "AffineMatrix":
        if self.n != other.n:
            raise ValueError("period mismatch: %d vs %d" % (self.n, other.n))
        data = dict(self._data)
        for pos, a in other._data.items():
            data[pos] = data.get(pos, 0) + a
        return AffineMatrix._trusted(self.n, data)

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(e) for e in self.key]}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineMatrix":
        try:
            n = int(obj["n"])
            entries = [(int(i), int(j), int(a)) for i, j, a in obj["entries"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError("malformed matrix JSON: %s" % (exc,)) from exc
        if any(a <= 0 for _, _, a in entries):
            raise ValueError("matrix entries must be positive")
        return cls(n, entries)


def zero_matrix(n: int) -> AffineMatrix:
    return AffineMatrix._trusted(n, {})


def unit_matrix(i: int, j: int, n: int) -> AffineMatrix:
    """``E_{i,j}``: one on the periodicity class of ``(i, j)``."""
    return AffineMatrix._trusted(n, {canonicalize(i, j, n): 1})


def diag(parts: Iterable[int], n: int | None = None) -> AffineMatrix:
    parts = tuple(parts)
    if n is None:
        n = len(parts)
    if len(parts) != n:
        raise ValueError("expected %d parts, got %d" % (n, len(parts)))
    if any(p < 0 for p in parts):
        raise ValueError("negative diagonal %r" % (parts,))
    return AffineMatrix._trusted(n, {(k + 1, k + 1): p for k, p in enumerate(parts) if p})


def add_unit(A: AffineMatrix, i: int, j: int, times: int = 1) -> AffineMatrix:
    pos = canonicalize(i, j, A.n)
    data = dict(A._data)
    data[pos] = data.get(pos, 0) + times
    return AffineMatrix._trusted(A.n, data)


def sub_unit(A: AffineMatrix, i: int, j: int, times: int = 1) -> AffineMatrix | None:
    """``A - times * E_{i,j}``, or ``None`` if an entry would go negative.

    ``None`` plays the role of the zero basis symbol: ``[A]_1 = 0`` whenever
    ``A`` has a negative entry.
    """
    pos = canonicalize(i, j, A.n)
    a = A._data.get(pos, 0) - times
    if a < 0:
        return None
    data = dict(A._data)
    if a:
        data[pos] = a
    else:
        del data[pos]
    return AffineMatrix._trusted(A.n, data)


def transpose(A: AffineMatrix) -> AffineMatrix:
    n = A.n
    return AffineMatrix._trusted(n, {canonicalize(j, i, n): a for (i, j), a in A._data.items()})


# -- statistics ------------------------------------------------------------

def row_sum(A: AffineMatrix) -> tuple[int, ...]:
    out = [0] * A.n
    for (i, _), a in A._data.items():
        out[i - 1] += a
    return tuple(out)


def col_sum(A: AffineMatrix) -> tuple[int, ...]:
    n = A.n
    out = [0] * n
    for (_, j), a in A._data.items():
        out[(j - 1) % n] += a
    return tuple(out)


def sigma(A: AffineMatrix) -> int:
    return sum(A._data.values())


def sigma_vec(A: AffineMatrix) -> tuple[int, ...]:
    """``sigma_i(A) = a_ii + sum_{j<i} (a_ij + a_ji)`` for ``i = 1..n``.

    A lower entry ``(i, j)``, ``i > j``, counts towards row ``i``; an upper
    entry counts towards the residue of its column.
    """
    n = A.n
    out = [0] * n
    for (i, j), a in A._data.items():
        if i >= j:
            out[i - 1] += a
        else:
            out[(j - 1) % n] += a
    return tuple(out)


def offdiag_sigma(A: AffineMatrix) -> int:
    return sum(a for (i, j), a in A._data.items() if i != j)


# -- decompositions ----------------------------------------------------------

def split_pm(A: AffineMatrix):
    """Return ``(A+, diagonal, A-)`` with ``A = A+ + diag(diagonal) + A-``."""
    n = A.n
    up, lo = {}, {}
    d = [0] * n
    for (i, j), a in A._data.items():
        if i < j:
            up[(i, j)] = a
        elif i > j:
            lo[(i, j)] = a
        else:
            d[i - 1] = a
    return AffineMatrix._trusted(n, up), tuple(d), AffineMatrix._trusted(n, lo)


def offdiag(A: AffineMatrix) -> AffineMatrix:
    return AffineMatrix._trusted(A.n, {p: a for p, a in A._data.items() if p[0] != p[1]})


def _select(A, keep):
    return AffineMatrix._trusted(A.n, {p: a for p, a in A._data.items() if keep(*p)})


def upper_slice(A: AffineMatrix, i: int, j: int) -> AffineMatrix:
    """``A+_{i,j}``: entries ``a_{i, j+sn}`` with ``i < j + sn``."""
    n = A.n
    i0, _ = canonicalize(i, i, n)
    shift = i - i0
    # entry (i, j+sn) is stored at (i0, j+sn-shift); its column must exceed i
    return _select(A, lambda p, q: p == i0 and (q - j + shift) % n == 0 and q > i0)


def lower_slice(A: AffineMatrix, j: int, i: int) -> AffineMatrix:
    """``A-_{j,i}``: entries ``a_{j+sn, i}`` with ``i < j + sn``."""
    n = A.n
    return _select(A, lambda p, q: p > q and (p - j) % n == 0 and (q - i) % n == 0)


def upper_column(A: AffineMatrix, j: int) -> AffineMatrix:
    """``A+_j``: upper entries whose column is congruent to ``j``."""
    n = A.n
    return _select(A, lambda p, q: p < q and (q - j) % n == 0)


def lower_row(A: AffineMatrix, j: int) -> AffineMatrix:
    """``A-_j``: lower entries whose row is congruent to ``j``."""
    n = A.n
    return _select(A, lambda p, q: p > q and (p - j) % n == 0)
