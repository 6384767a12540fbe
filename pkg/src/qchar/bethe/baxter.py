"""Numerical evaluation of the sl2 Baxter eigenvalue formula and its pole residues."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


class BaxterPole(ArithmeticError):
    """Evaluation point sits on a pole of one of the two summands."""


def qpoch(a: complex, base: complex, order: int) -> complex:
    """Truncated ``(a; base)_inf = prod_{k<order} (1 - a base^k)``."""
    out = 1.0 + 0j
    t = complex(a)
    for _ in range(order):
        out *= 1 - t
        t *= base
    return out


def truncation_order(qval: complex, zmax: float, bmin: float, eps: float = 1e-14) -> int:
    """Smallest K with ``|x q^{4K}| < eps`` for every argument ``x`` met up to ``|z| <= zmax``."""
    aq = abs(qval)
    if not 0 < aq < 1:
        raise ValueError("need 0 < |q| < 1")
    # largest argument is z q^{-1} b^{-1} q^{-r+2} with r <= 2 up to a |q|^{-2} margin
    x = max(zmax, 1.0) / max(bmin, 1e-300) * aq ** -4
    return max(1, math.ceil(math.log(eps / x) / (4 * math.log(aq))))


@dataclass
class EigenvalueSL2:
    """Data of one Baxter eigenvalue on ``W_{r_1}(b_1) x ... x W_{r_N}(b_N)``."""

    roots: Sequence[complex]
    rs: Sequence[int]
    bs: Sequence[complex]
    q: complex
    zmax: float = 10.0
    order: int = field(default=0)

    def __post_init__(self):
        self.roots = np.asarray(self.roots, dtype=complex)
        self.bs = np.asarray(self.bs, dtype=complex)
        self.rs = tuple(int(r) for r in self.rs)
        if len(self.rs) != len(self.bs):
            raise ValueError("rs and bs must have the same length")
        if not self.order:
            self.order = truncation_order(self.q, self.zmax, float(np.min(np.abs(self.bs))) if len(self.bs) else 1.0)

    @property
    def m(self) -> int:
        return len(self.roots)

    @property
    def delta(self) -> float:
        return 2 * self.m + sum(1 - r / 2 for r in self.rs)

    def mu(self, z: complex) -> complex:
        q, K = self.q, self.order
        out = 1.0 + 0j
        for r, b in zip(self.rs, self.bs):
            x = z / b
            out *= qpoch(x * q ** (r + 2), q**4, K) / qpoch(x * q ** (2 - r), q**4, K)
        return out

    def Q(self, z: complex) -> complex:
        return complex(np.prod(1 - z / self.roots)) if self.m else 1.0 + 0j

    def summands(self, z: complex, pole_tol: float = 1e-12) -> tuple[complex, complex]:
        q = self.q
        Qzq = self.Q(z * q)
        scale = float(np.prod(1 + np.abs(z * q / self.roots))) if self.m else 1.0
        if abs(Qzq) < pole_tol * scale:
            raise BaxterPole(f"Q(zq) vanishes at z={z}")
        mzq = self.mu(z * q)
        if abs(mzq) < pole_tol:
            raise BaxterPole(f"mu(zq) vanishes at z={z}")
        d = self.delta
        first = q**d * self.mu(z / q) / mzq * self.Q(z / q) / Qzq
        second = q ** (-d) * self.mu(z * q**3) / mzq * self.Q(z * q**3) / Qzq
        return first, second


def baxter_eigenvalue(e: EigenvalueSL2, z: complex) -> complex:
    a, b = e.summands(z)
    return a + b


def residue_check(e: EigenvalueSL2, k: int | None = None, radius: float | None = None, points: int = 64):
    """Contour estimate of the residue of the eigenvalue at ``z = w_k q^{-1}``.

    With ``k=None`` returns a list over all roots (empty when m = 0).  The
    radius shrinks if another root's pole is too close; if it cannot be made
    safe a ValueError is raised.
    """
    if k is None:
        return [residue_check(e, j, radius, points) for j in range(e.m)]
    if not 0 <= k < e.m:
        raise IndexError(f"root index {k} out of range")
    z0 = e.roots[k] / e.q
    others = [abs(w / e.q - z0) for j, w in enumerate(e.roots) if j != k]
    gap = min(others) if others else abs(z0)
    r = radius if radius is not None else 1e-3 * max(abs(z0), 1e-12)
    for _ in range(6):
        if r < gap / 3:
            break
        r /= 10
    else:
        raise ValueError("contour cannot avoid neighbouring poles")
    total = 0j
    for t in range(points):
        u = np.exp(2j * np.pi * t / points)
        total += baxter_eigenvalue(e, z0 + r * u) * r * u
    return abs(total / points)
