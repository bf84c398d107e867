"""Burau representation, its t = -1 specialization and mod-m images.

The unreduced matrices follow ``b(s_i) = I_{i-1} + [[1-t, t], [1, 0]] + I_{n-i-1}``
acting on column vectors; a word ``w = x_1 ... x_k`` maps to the product
``b(x_1) ... b(x_k)``.  The row vector ``(1, t, ..., t^{n-1})`` is fixed by
every ``b(s_i)``, so its kernel is an invariant subspace of dimension
``n - 1``.  At ``t = -1`` that kernel has the integral basis
``f_k = e_k + e_{k+1}`` and the reduced matrices are written in that basis.

The congruence representation ``rho`` uses the reduced matrices for odd
``n``, where they are symplectic, and the full t = -1 matrices for even
``n``, where they preserve a nondegenerate alternating form and fix the
all-ones vector.  ``B_n[m]`` is the kernel of ``rho`` modulo ``m``.  (For
odd ``n`` the all-ones vector splits off integrally, so the full matrices
would give the same kernel.)
"""

from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .braids import BraidWord


# -- Laurent polynomials --------------------------------------------------------

class LaurentPoly(Mapping):
    """Integer Laurent polynomial in ``t``, stored as ``{exponent: coefficient}``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(e): int(v) for e, v in coeffs.items() if v}
        self._hash = None

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    def __getitem__(self, e):
        return self._c[e]

    def __iter__(self):
        return iter(sorted(self._c))

    def __len__(self):
        return len(self._c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __add__(self, other):
        other = other if isinstance(other, LaurentPoly) else LaurentPoly(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, LaurentPoly) else LaurentPoly(other)))

    def __rsub__(self, other):
        return LaurentPoly(other) - self

    def __mul__(self, other):
        other = other if isinstance(other, LaurentPoly) else LaurentPoly(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def evaluate(self, t: int):
        from fractions import Fraction

        total = Fraction(0)
        for e, v in self._c.items():
            total += v * Fraction(t) ** e
        return int(total) if total.denominator == 1 else total

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            v = self._c[e]
            terms.append(f"{v}" if e == 0 else f"{v}*t^{e}")
        return " + ".join(terms)


LaurentMatrix = tuple[tuple[LaurentPoly, ...], ...]


def laurent_identity(d: int) -> LaurentMatrix:
    one, zero = LaurentPoly(1), LaurentPoly(0)
    return tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))


def laurent_matmul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    d = len(a)
    zero = LaurentPoly(0)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = zero
            for k in range(d):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")


@lru_cache(maxsize=None)
def unreduced_burau(n: int, i: int) -> LaurentMatrix:
    _check_index(n, i)
    t = LaurentPoly.t()
    m = [list(r) for r in laurent_identity(n)]
    a = i - 1
    m[a][a], m[a][a + 1] = 1 - t, t
    m[a + 1][a], m[a + 1][a + 1] = LaurentPoly(1), LaurentPoly(0)
    return tuple(tuple(r) for r in m)


@lru_cache(maxsize=None)
def _unreduced_inverse(n: int, i: int) -> LaurentMatrix:
    # [[1-t, t], [1, 0]]^-1 = [[0, 1], [t^-1, 1 - t^-1]]
    _check_index(n, i)
    ti = LaurentPoly.t(-1)
    m = [list(r) for r in laurent_identity(n)]
    a = i - 1
    m[a][a], m[a][a + 1] = LaurentPoly(0), LaurentPoly(1)
    m[a + 1][a], m[a + 1][a + 1] = ti, 1 - ti
    return tuple(tuple(r) for r in m)


def burau_laurent(b: BraidWord) -> LaurentMatrix:
    """Unreduced Burau image of a braid word over Z[t, t^-1]."""
    m = laurent_identity(b.strands)
    for x in b.word:
        g = unreduced_burau(b.strands, x) if x > 0 else _unreduced_inverse(b.strands, -x)
        m = laurent_matmul(m, g)
    return m


def evaluate_matrix(m: LaurentMatrix, t: int) -> np.ndarray:
    return np.array([[p.evaluate(t) for p in row] for row in m], dtype=object)


# -- t = -1, reduced -------------------------------------------------------------

@lru_cache(maxsize=None)
def _reduced_pair(n: int, i: int) -> tuple[np.ndarray, np.ndarray]:
    _check_index(n, i)
    full = evaluate_matrix(unreduced_burau(n, i), -1).astype(np.int64)
    basis = np.zeros((n, n - 1), dtype=np.int64)
    for k in range(n - 1):
        basis[k, k] = basis[k + 1, k] = 1
    # left inverse of the basis: a_k = x_k - a_{k-1}
    left = np.zeros((n - 1, n), dtype=np.int64)
    for k in range(n - 1):
        left[k] = (np.eye(n, dtype=np.int64)[k] - (left[k - 1] if k else 0))
    m = left @ full @ basis
    if not np.array_equal(basis @ m, full @ basis):
        raise AssertionError("kernel of the invariant covector is not preserved")
    det = round(np.linalg.det(m.astype(float)))
    inv = np.rint(np.linalg.inv(m.astype(float)) * 1).astype(np.int64)
    if abs(det) != 1 or not np.array_equal(m @ inv, np.eye(n - 1, dtype=np.int64)):
        raise AssertionError("reduced matrix is not unimodular")
    return m, inv


def reduced_burau_neg1(n: int, i: int) -> np.ndarray:
    """Reduced Burau matrix of ``s_i`` at t = -1 (integer, size n-1)."""
    return _reduced_pair(n, i)[0].copy()


@lru_cache(maxsize=None)
def _rho_pair(n: int, i: int) -> tuple[np.ndarray, np.ndarray]:
    if n % 2:
        return _reduced_pair(n, i)
    _check_index(n, i)
    fwd = evaluate_matrix(unreduced_burau(n, i), -1).astype(np.int64)
    inv = evaluate_matrix(_unreduced_inverse(n, i), -1).astype(np.int64)
    return fwd, inv


def rho_generator(n: int, i: int) -> np.ndarray:
    """Matrix of ``s_i`` in the congruence representation (size n-1 or n)."""
    return _rho_pair(n, i)[0].copy()


def rho_dim(n: int) -> int:
    return n - 1 if n % 2 else n


def fixed_vector(n: int) -> np.ndarray:
    """The all-ones vector, fixed by every generator at t = -1."""
    return np.ones(n, dtype=np.int64)


def rho(b: BraidWord, m: int | None = None) -> np.ndarray:
    """Image at t = -1 over Z, or reduced mod ``m`` when given."""
    n = b.strands
    out = np.eye(rho_dim(n), dtype=np.int64)
    for x in b.word:
        g = _rho_pair(n, abs(x))[0 if x > 0 else 1]
        out = out @ g
        if m:
            out %= m
    return out % m if m else out


@dataclass(frozen=True)
class ModMatrix:
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_identity(self) -> bool:
        d = self.dim
        return all(self.entries[i][j] == (1 if i == j else 0) for i in range(d) for j in range(d))

    def encode(self) -> bytes:
        return _encode_rows(np.array(self.entries, dtype=np.int64).reshape(1, -1), self.modulus)[0]

    def __str__(self):
        return format_matrix(self.entries)


def format_matrix(a) -> str:
    return ";".join(" ".join(str(int(v)) for v in row) for row in a)


def rho_m(b: BraidWord, m: int) -> ModMatrix:
    if m < 2:
        raise ValueError("modulus must be >= 2")
    a = rho(b, m)
    return ModMatrix(m, tuple(tuple(int(v) for v in row) for row in a))


def in_congruence(b: BraidWord, m: int) -> bool:
    return rho_m(b, m).is_identity()


class ImageTooLarge(RuntimeError):
    pass


def _entry_width(m: int) -> int:
    return max(1, ((m - 1).bit_length() + 7) // 8)


def _encode_rows(flat: np.ndarray, m: int) -> list[bytes]:
    """Row-major entries in the narrowest little-endian unsigned width."""
    w = _entry_width(m)
    dtype = {1: "<u1", 2: "<u2"}.get(w, "<u4" if w <= 4 else "<u8")
    arr = np.ascontiguousarray(flat.astype(dtype))
    size = arr.shape[1] * arr.dtype.itemsize
    raw = arr.tobytes()
    return [raw[k * size:(k + 1) * size] for k in range(arr.shape[0])]


@dataclass(frozen=True)
class MatrixGroupImage:
    modulus: int
    dim: int
    generators: tuple[np.ndarray, ...]
    elements: frozenset[bytes]

    @property
    def order(self) -> int:
        return len(self.elements)


def matrix_group_closure(gens: Sequence[np.ndarray], m: int, cap: int = 10**6,
                         rng: random.Random | None = None) -> MatrixGroupImage:
    """All products of ``gens`` mod ``m`` by layered BFS (finite group, so
    positive words suffice)."""
    d = gens[0].shape[0]
    gens = [np.asarray(g, dtype=np.int64) % m for g in gens]
    ident = np.eye(d, dtype=np.int64).reshape(1, d * d)
    seen = set(_encode_rows(ident, m))
    frontier = ident.reshape(1, d, d)
    while len(frontier):
        if rng is not None:
            frontier = frontier[rng.sample(range(len(frontier)), len(frontier))]
        fresh = []
        for g in gens:
            prod = np.einsum("kij,jl->kil", frontier, g) % m
            flat = prod.reshape(len(prod), d * d)
            for key, row in zip(_encode_rows(flat, m), prod):
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
                    if len(seen) > cap:
                        raise ImageTooLarge(f"more than {cap} elements")
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, d, d)
    return MatrixGroupImage(m, d, tuple(gens), frozenset(seen))


def congruence_image(n: int, m: int, cap: int = 10**6, rng: random.Random | None = None) -> MatrixGroupImage:
    gens = [rho_generator(n, i) for i in range(1, n)]
    return matrix_group_closure(gens, m, cap, rng)


def image_order(n: int, m: int, cap: int = 10**6) -> int:
    """Order of B_n / B_n[m], the image of ``rho`` modulo ``m``."""
    return congruence_image(n, m, cap).order


def invariant_form(n: int) -> np.ndarray:
    """Primitive integral alternating J with M^T J M = J for every ``rho`` generator.

    Solved as a linear system over the rationals; raises if the solution
    space is trivial or the form is degenerate.
    """
    import sympy

    if n < 3:
        raise ValueError("invariant_form needs n >= 3")
    d = rho_dim(n)
    pairs = [(a, b) for a in range(d) for b in range(a + 1, d)]
    syms = sympy.symbols(f"j0:{len(pairs)}")
    J = sympy.zeros(d, d)
    for sym, (a, b) in zip(syms, pairs):
        J[a, b], J[b, a] = sym, -sym
    eqs = []
    for i in range(1, n):
        M = sympy.Matrix(rho_generator(n, i).tolist())
        eqs.extend(list(M.T * J * M - J))
    A, _ = sympy.linear_eq_to_matrix(eqs, syms)
    null = A.nullspace()
    if not null:
        raise ArithmeticError("no invariant alternating form")
    v = list(null[0])
    den = 1
    for x in v:
        den = sympy.ilcm(den, sympy.fraction(sympy.nsimplify(x))[1])
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = sympy.igcd(g, x)
    out = np.zeros((d, d), dtype=np.int64)
    for val, (a, b) in zip(ints, pairs):
        out[a, b], out[b, a] = val // g, -val // g
    if sympy.Matrix(out.tolist()).det() == 0:
        raise ArithmeticError("invariant form is degenerate")
    return out


def preserves_form(M: np.ndarray, J: np.ndarray) -> bool:
    return np.array_equal(M.T @ J @ M, J)
