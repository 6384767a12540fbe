"""Screening operators S_i on Z[Y_{i,n}^{+-1}] and kernel tests.

``S_i`` is a derivation with values in the module generated by symbols
``S_{i,n}`` subject to ``S_{i,n+2r_i} = A_{i,n+r_i} S_{i,n}``.  Every generator
is reduced to a representative ``S_{i,rho}`` with ``0 <= rho < 2 r_i``, so an
element of the target is a finite map ``(i, rho) -> polynomial``.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable

import sympy

from qchar.cartan import CartanData
from qchar.ypoly import YMonomial, YPolynomial, a_monomial


class ScreenedElement:
    """``sum p_{i,rho} (x) S_{i,rho}`` with every stored polynomial nonzero."""

    __slots__ = ("_parts",)

    def __init__(self, parts: dict[tuple[int, int], YPolynomial] | None = None):
        self._parts = {k: v for k, v in sorted((parts or {}).items()) if not v.is_zero()}

    @property
    def parts(self) -> dict[tuple[int, int], YPolynomial]:
        return dict(self._parts)

    def is_zero(self) -> bool:
        return not self._parts

    def __add__(self, other: "ScreenedElement") -> "ScreenedElement":
        acc = dict(self._parts)
        for k, v in other._parts.items():
            acc[k] = acc[k] + v if k in acc else v
        return ScreenedElement(acc)

    def scale(self, p: YPolynomial) -> "ScreenedElement":
        """Multiplication by a ring element (the module action)."""
        return ScreenedElement({k: v * p for k, v in self._parts.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScreenedElement) and self._parts == other._parts

    def __repr__(self) -> str:
        if not self._parts:
            return "ScreenedElement(0)"
        inner = " + ".join(f"({p}) S({i},{rho})" for (i, rho), p in self._parts.items())
        return f"ScreenedElement({inner})"

    def to_json(self) -> dict:
        return {
            "parts": [{"i": i, "rho": rho, "poly": p.to_json()} for (i, rho), p in self._parts.items()]
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "ScreenedElement":
        acc: dict[tuple[int, int], YPolynomial] = {}
        for part in data["parts"]:
            key = (int(part["i"]), int(part["rho"]))
            p = YPolynomial.from_json(part["poly"])
            acc[key] = acc[key] + p if key in acc else p
        return cls(acc)


def reduce_generator(cd: CartanData, i: int, n: int) -> tuple[int, YMonomial, int]:
    """Write ``S_{i,n} = F S_{i,rho}``; returns ``(rho, F, direction)``.

    ``direction`` is +1 when F is a product of A's, -1 when of inverse A's
    (and +1 for the trivial factor).
    """
    cd.check_node(i)
    ri = cd.symmetrizer(i)
    rho = n % (2 * ri)
    K = (n - rho) // (2 * ri)
    F = YMonomial.one()
    if K >= 0:
        for k in range(K):
            F = F * a_monomial(cd, i, rho + (2 * k + 1) * ri)
        return rho, F, 1
    for k in range(K, 0):
        F = F * a_monomial(cd, i, rho + (2 * k + 1) * ri).inverse()
    return rho, F, -1


def apply_screening(cd: CartanData, i: int, p: YPolynomial) -> ScreenedElement:
    """Leibniz rule with ``S_i Y_{j,n}^{+-1} = +-delta_ij Y_{j,n}^{+-1} S_{i,n}``, then reduce."""
    cd.check_node(i)
    cache: dict[int, tuple[int, YMonomial]] = {}
    acc: dict[int, dict[YMonomial, int]] = {}
    for m, c in p.items():
        for (j, n), e in m.items:
            if j != i:
                continue
            if n not in cache:
                rho, F, _ = reduce_generator(cd, i, n)
                cache[n] = (rho, F)
            rho, F = cache[n]
            bucket = acc.setdefault(rho, {})
            key = m * F
            bucket[key] = bucket.get(key, 0) + c * e
    return ScreenedElement({(i, rho): YPolynomial(b) for rho, b in acc.items()})


def in_kernel(cd: CartanData, i: int, p: YPolynomial) -> bool:
    return apply_screening(cd, i, p).is_zero()


def in_kernel_all(cd: CartanData, p: YPolynomial) -> bool:
    return all(in_kernel(cd, i, p) for i in cd.nodes)


def kernel_witness(cd: CartanData, p: YPolynomial) -> dict[int, ScreenedElement]:
    """Nonzero screenings of ``p``, keyed by node."""
    out = {}
    for i in cd.nodes:
        s = apply_screening(cd, i, p)
        if not s.is_zero():
            out[i] = s
    return out


def window_monomials(window: tuple[int, int], degree: int, node: int = 1) -> list[YMonomial]:
    """All monomials in ``Y_{node,n}``, ``n`` in the window, with sum of |exponents| <= degree."""
    lo, hi = window
    positions = list(range(lo, hi + 1))
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(positions, d):
            for signs in itertools.product((1, -1), repeat=d):
                acc: dict = {}
                for n, s in zip(combo, signs):
                    acc[(node, n)] = acc.get((node, n), 0) + s
                m = YMonomial(acc)
                if m.degree() == d:
                    out.append(m)
    return sorted(set(out))


def _primitive(vec: list) -> list[int]:
    den = 1
    for x in vec:
        den = sympy.ilcm(den, sympy.Rational(x).q)
    ints = [int(sympy.Rational(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = sympy.igcd(g, x)
    return [x // g for x in ints] if g else ints


def kernel_basis_bounded(cd: CartanData, window: tuple[int, int], degree: int) -> list[YPolynomial]:
    """Basis of Ker S_1 inside the span of window monomials of bounded degree.

    Exact nullspace of the screening matrix, reported in reduced echelon form
    over Q and cleared to primitive integer vectors.
    """
    if cd.rank != 1:
        raise ValueError("kernel_basis_bounded is implemented for sl2 only")
    lo, hi = window
    if hi < lo:
        raise ValueError("empty window")
    if degree < 0:
        raise ValueError("degree bound must be non-negative")
    basis = window_monomials(window, degree)
    columns = [apply_screening(cd, 1, YPolynomial.from_monomial(m)) for m in basis]
    rows: dict[tuple[int, YMonomial], int] = {}
    entries: dict[tuple[int, int], int] = {}
    for col, img in enumerate(columns):
        for (_, rho), poly in img.parts.items():
            for mono, c in poly.items():
                r = rows.setdefault((rho, mono), len(rows))
                entries[(r, col)] = c
    M = sympy.SparseMatrix(max(len(rows), 1), len(basis), entries)
    null = M.nullspace()
    if not null:
        return []
    N = sympy.Matrix.hstack(*null).T
    R, _ = N.rref()
    out = []
    for r in range(R.rows):
        vec = list(R.row(r))
        if all(x == 0 for x in vec):
            continue
        ints = _primitive(vec)
        out.append(YPolynomial({m: c for m, c in zip(basis, ints) if c}))
    return out


def t_products(window: tuple[int, int], degree: int) -> list[YPolynomial]:
    """Products of at most ``degree`` factors ``t_n = Y_n + Y_{n+2}^{-1}`` fitting in the window."""
    lo, hi = window
    ts = [n for n in range(lo, hi - 1)]
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(ts, d):
            p = YPolynomial.constant(1)
            for n in combo:
                p = p * (YPolynomial.from_monomial(YMonomial.y(1, n)) + YPolynomial.from_monomial(YMonomial.y(1, n + 2, -1)))
            out.append(p)
    return out


def span_rank(polys: Iterable[YPolynomial]) -> int:
    """Rank over Q of a family of polynomials."""
    polys = list(polys)
    monos = sorted({m for p in polys for m in p})
    index = {m: k for k, m in enumerate(monos)}
    entries = {(r, index[m]): c for r, p in enumerate(polys) for m, c in p.items()}
    if not polys:
        return 0
    return sympy.SparseMatrix(len(polys), max(len(monos), 1), entries).rank()


def same_span(a: Iterable[YPolynomial], b: Iterable[YPolynomial]) -> bool:
    a, b = list(a), list(b)
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(a + b)
