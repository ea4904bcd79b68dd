"""Noncommutative integer power series truncated at a total degree.

A series in ``n`` variables ``X_1..X_n`` truncated at degree ``q`` is stored
as ``q + 1`` homogeneous parts; part ``k`` is an integer array of shape
``(n,) * k`` whose entry ``[i_1 - 1, ..., i_k - 1]`` is the coefficient of
``X_{i_1} ... X_{i_k}``.  Arithmetic is exact: parts are ``int64`` until a
product could overflow, after which they widen to Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotAUnit

_INT64_SAFE = 2 ** 62


def _maxabs(a: np.ndarray) -> int:
    return int(np.max(np.abs(a))) if a.size else 0


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    n: int
    max_degree: int
    parts: tuple[np.ndarray, ...]

    @classmethod
    def zero(cls, n: int, q: int) -> TruncatedSeries:
        return cls(n, q, tuple(np.zeros((n,) * k, dtype=np.int64) for k in range(q + 1)))

    @classmethod
    def one(cls, n: int, q: int) -> TruncatedSeries:
        parts = [np.zeros((n,) * k, dtype=np.int64) for k in range(q + 1)]
        parts[0] = np.array(1, dtype=np.int64)
        return cls(n, q, tuple(parts))

    @classmethod
    def from_dict(cls, n: int, q: int, coefficients: dict) -> TruncatedSeries:
        """Build from ``{index tuple (1-based): coefficient}``; longer keys are dropped."""
        parts = [np.zeros((n,) * k, dtype=object) for k in range(q + 1)]
        for key, c in coefficients.items():
            if len(key) <= q:
                parts[len(key)][tuple(i - 1 for i in key)] += int(c)
        return cls(n, q, tuple(_narrow(p) for p in parts))

    @classmethod
    def generator(cls, i: int, n: int, q: int, exponent: int = 1) -> TruncatedSeries:
        """Magnus image of ``x_i`` (``1 + X_i``) or ``x_i^-1`` (``sum (-X_i)^m``)."""
        if exponent not in (1, -1):
            raise ValueError("exponent must be +1 or -1")
        if not 1 <= i <= n:
            raise IndexError(f"variable {i} out of range 1..{n}")
        parts = [np.zeros((n,) * k, dtype=np.int64) for k in range(q + 1)]
        parts[0] = np.array(1, dtype=np.int64)
        for m in range(1, q + 1 if exponent < 0 else min(q, 1) + 1):
            parts[m][(i - 1,) * m] = (-1) ** m if exponent < 0 else 1
        return cls(n, q, tuple(parts))

    def coefficient(self, index: Sequence[int]) -> int:
        index = tuple(index)
        if len(index) > self.max_degree:
            raise ValueError(f"degree {len(index)} exceeds truncation {self.max_degree}")
        if any(not 1 <= i <= self.n for i in index):
            raise IndexError(f"index {index} out of range 1..{self.n}")
        return int(self.parts[len(index)][tuple(i - 1 for i in index)])

    __getitem__ = coefficient

    def constant(self) -> int:
        return int(self.parts[0])

    def to_dict(self) -> dict[tuple[int, ...], int]:
        """Nonzero coefficients keyed by 1-based index tuples."""
        out = {}
        for part in self.parts:
            for idx in zip(*np.nonzero(part)) if part.ndim else ([()] if part != 0 else []):
                out[tuple(int(i) + 1 for i in idx)] = int(part[idx])
        return out

    def truncate(self, q: int) -> TruncatedSeries:
        if q > self.max_degree:
            raise ValueError(f"cannot raise truncation from {self.max_degree} to {q}")
        return TruncatedSeries(self.n, q, self.parts[: q + 1])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n == other.n and self.max_degree == other.max_degree
                and all(np.array_equal(a, b) for a, b in zip(self.parts, other.parts)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_compatible(self, other)
        return TruncatedSeries(self.n, self.max_degree,
                               tuple(_widen_if(a, b, "add") - b for a, b in zip(self.parts, other.parts)))

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        _check_compatible(self, other)
        return TruncatedSeries(self.n, self.max_degree,
                               tuple(_widen_if(a, b, "add") + b for a, b in zip(self.parts, other.parts)))

    def inverse(self) -> TruncatedSeries:
        return series_inverse(self, self.max_degree)

    def __repr__(self):
        terms = []
        for key, c in sorted(self.to_dict().items(), key=lambda kv: (len(kv[0]), kv[0])):
            mono = "".join(f"X{i}" for i in key) or "1"
            terms.append(f"{c:+d}*{mono}" if key else f"{c:+d}")
        return f"TruncatedSeries(q={self.max_degree}: {' '.join(terms) or '0'})"


def _narrow(part: np.ndarray) -> np.ndarray:
    if part.dtype == object and (part.size == 0 or _maxabs(part) < _INT64_SAFE):
        return part.astype(np.int64)
    return part


def _widen_if(a: np.ndarray, b: np.ndarray, _op: str) -> np.ndarray:
    if a.dtype == object or b.dtype == object:
        return a.astype(object)
    if _maxabs(a) + _maxabs(b) >= _INT64_SAFE:
        return a.astype(object)
    return a


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries):
    if a.n != b.n:
        raise ValueError(f"series in {a.n} and {b.n} variables")


def series_mul(a: TruncatedSeries, b: TruncatedSeries, q: int | None = None) -> TruncatedSeries:
    _check_compatible(a, b)
    if q is None:
        q = min(a.max_degree, b.max_degree)
    if q > min(a.max_degree, b.max_degree):
        raise ValueError("product truncation exceeds the operands' truncation")
    A, B = a.parts, b.parts
    big_a = [_maxabs(p) for p in A[: q + 1]]
    big_b = [_maxabs(p) for p in B[: q + 1]]
    out = []
    for k in range(q + 1):
        bound = sum(big_a[i] * big_b[k - i] for i in range(k + 1))
        wide = bound >= _INT64_SAFE or any(
            A[i].dtype == object or B[k - i].dtype == object for i in range(k + 1))
        acc = None
        for i in range(k + 1):
            if not big_a[i] or not big_b[k - i]:
                continue
            x, y = A[i], B[k - i]
            if wide:
                x, y = x.astype(object), y.astype(object)
            term = np.multiply.outer(x, y)
            acc = term if acc is None else acc + term
        if acc is None:
            acc = np.zeros((a.n,) * k, dtype=np.int64)
        out.append(np.asarray(acc))
    return TruncatedSeries(a.n, q, tuple(out))


def series_inverse(a: TruncatedSeries, q: int | None = None) -> TruncatedSeries:
    """Inverse of a series with constant term 1."""
    if q is None:
        q = a.max_degree
    if a.constant() != 1:
        raise NotAUnit(f"constant term is {a.constant()}, not 1")
    A = a.parts
    inv = [np.array(1, dtype=np.int64)]
    for k in range(1, q + 1):
        acc = np.zeros((a.n,) * k, dtype=np.int64)
        for i in range(1, k + 1):
            x, y = A[i], inv[k - i]
            if x.dtype == object or y.dtype == object or _maxabs(x) * _maxabs(y) * k >= _INT64_SAFE \
                    or acc.dtype == object:
                x, y, acc = x.astype(object), y.astype(object), acc.astype(object)
            acc = acc - np.multiply.outer(x, y)
        inv.append(acc)
    return TruncatedSeries(a.n, q, tuple(inv))


@dataclass(frozen=True)
class FreeWord:
    """A word in free generators: ``letters`` are ``(index, exponent)`` pairs
    with 1-based indices and exponents +-1."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if i < 1 or e not in (1, -1):
                raise ValueError(f"bad letter {(i, e)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, signed: Iterable[int]) -> FreeWord:
        """Signed integers: ``2`` is x2, ``-2`` is x2 inverse."""
        return cls(tuple((abs(k), 1 if k > 0 else -1) for k in signed))

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def rank(self) -> int:
        return max((i for i, _ in self.letters), default=0)


def magnus_expand(w: FreeWord, q: int, n: int | None = None) -> TruncatedSeries:
    """Magnus expansion ``x_i -> 1 + X_i`` of a free word, truncated at ``q``."""
    if n is None:
        n = max(w.rank(), 1)
    if w.rank() > n:
        raise IndexError(f"word uses generator {w.rank()} but only {n} variables")
    out = TruncatedSeries.one(n, q)
    cache = {}
    for i, e in w.letters:
        if (i, e) not in cache:
            cache[(i, e)] = TruncatedSeries.generator(i, n, q, e)
        out = series_mul(out, cache[(i, e)])
    return out
