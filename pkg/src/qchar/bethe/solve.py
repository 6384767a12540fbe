"""Newton solver for sl2 Bethe equations in cross-multiplied form."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import sympy

from qchar.bethe.system import BetheSystem, q

THREADS_ENV = "QCHAR_THREADS"


@dataclass
class BetheSolution:
    roots: np.ndarray
    residual: float
    seed: int

    def to_json(self) -> dict:
        return {
            "roots": [[float(w.real), float(w.imag)] for w in self.roots],
            "residual": float(self.residual),
        }


@dataclass
class SeedOutcome:
    seed: int
    converged: bool
    reason: str
    roots: np.ndarray | None = None
    residual: float = float("inf")


class _Numeric:
    """Numeric callables bound to a value of q."""

    def __init__(self, system: BetheSystem, qval: complex):
        subs = {q: qval}
        xs = system.unknowns
        self.n = len(xs)
        t1s, t2s, dens = [], [], []
        for eq in system.equations:
            t1, t2 = eq.sides()
            t1s.append(t1.subs(subs))
            t2s.append(t2.subs(subs))
            dens.append([f.subs(subs) for f in eq.lhs_den + eq.rhs_den])
        F = sympy.Matrix([a - b for a, b in zip(t1s, t2s)])
        J = F.jacobian(xs) if self.n else sympy.zeros(0, 0)
        self._t1 = sympy.lambdify([xs], t1s, "numpy")
        self._t2 = sympy.lambdify([xs], t2s, "numpy")
        self._J = sympy.lambdify([xs], J, "numpy")
        self._dens = sympy.lambdify([xs], [f for row in dens for f in row], "numpy")

    def F(self, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        t1 = np.asarray(self._t1(list(w)), dtype=complex)
        t2 = np.asarray(self._t2(list(w)), dtype=complex)
        return t1 - t2, np.abs(t1) + np.abs(t2)

    def relative(self, w: np.ndarray) -> float:
        f, scale = self.F(w)
        if not len(f):
            return 0.0
        return float(np.max(np.abs(f) / np.where(scale > 0, scale, 1.0)))

    def jac(self, w: np.ndarray) -> np.ndarray:
        return np.asarray(self._J(list(w)), dtype=complex).reshape(self.n, self.n)

    def min_denominator(self, w: np.ndarray) -> float:
        vals = self._dens(list(w))
        if not vals:
            return float("inf")
        return float(np.min(np.abs(np.asarray(vals, dtype=complex))))


def _newton(num: _Numeric, w0: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, float, str]:
    w = w0.astype(complex)
    for _ in range(max_iter):
        f, _ = num.F(w)
        try:
            step = np.linalg.solve(num.jac(w), f)
        except np.linalg.LinAlgError:
            return w, num.relative(w), "singular Jacobian"
        if not np.all(np.isfinite(step)):
            return w, num.relative(w), "non-finite step"
        w = w - step
        if num.relative(w) < tol * 1e-3 or np.max(np.abs(step)) < 1e-15 * (1 + np.max(np.abs(w))):
            break
    return w, num.relative(w), "ok"


def _is_admissible(num: _Numeric, w: np.ndarray, sep: float = 1e-6) -> str:
    if not np.all(np.isfinite(w)):
        return "non-finite roots"
    scale = 1 + np.max(np.abs(w)) if len(w) else 1.0
    if np.any(np.abs(w) < sep):
        return "root at zero"
    for a in range(len(w)):
        for b in range(a + 1, len(w)):
            if abs(w[a] - w[b]) < sep * scale:
                return "coinciding roots"
    if num.min_denominator(w) < sep * scale:
        return "vanishing denominator"
    return ""


def default_seeds(n_unknowns: int, count: int, seed: int, scale: float = 1.0) -> list[np.ndarray]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        mag = scale * 10 ** rng.uniform(-1, 1, size=n_unknowns)
        out.append(mag * (rng.normal(size=n_unknowns) + 1j * rng.normal(size=n_unknowns)))
    return out


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _canonical(w: np.ndarray) -> np.ndarray:
    return np.array(sorted(w, key=lambda c: (round(c.real, 9), round(c.imag, 9))))


def _same_roots(a: np.ndarray, b: np.ndarray, rtol: float) -> bool:
    """Equality up to permutation: greedy matching on relative distance."""
    left = list(b)
    for x in a:
        dists = [abs(x - y) / max(1.0, abs(x), abs(y)) for y in left]
        k = int(np.argmin(dists))
        if dists[k] > rtol:
            return False
        left.pop(k)
    return True


def solve_sl2(
    system: BetheSystem,
    qval: complex,
    seeds: int | Sequence[Sequence[complex]] = 40,
    tolerance: float = 1e-10,
    seed: int = 0,
    max_iter: int = 200,
    dedup_rtol: float = 1e-8,
    outcomes: list | None = None,
) -> list[BetheSolution]:
    """Distinct root sets with relative residual below ``tolerance``.

    ``seeds`` is either a count of random starting points (reproducible from
    ``seed``) or an explicit list.  Per-seed failures are appended to
    ``outcomes`` when given; they are never fatal.
    """
    if not system.is_sl2():
        raise ValueError("solve_sl2 needs an sl2 system")
    if abs(qval) >= 1:
        raise ValueError("need |q| < 1")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    n = len(system.unknowns)
    if n == 0:
        return [BetheSolution(np.zeros(0, dtype=complex), 0.0, 0)]
    num = _Numeric(system, qval)
    if isinstance(seeds, int):
        scale = 1.0
        site_vals = [complex(sympy.N(a.subs(q, qval))) for s in system.sites for v in s.values() for a in v]
        if site_vals:
            scale = float(np.mean(np.abs(site_vals))) or 1.0
        starts = default_seeds(n, seeds, seed, scale)
    else:
        starts = [np.asarray(s, dtype=complex) for s in seeds]

    def run(k: int) -> SeedOutcome:
        w, res, why = _newton(num, starts[k], tolerance, max_iter)
        if why != "ok":
            return SeedOutcome(k, False, why, w, res)
        if res >= tolerance:
            return SeedOutcome(k, False, "did not converge", w, res)
        bad = _is_admissible(num, w)
        if bad:
            return SeedOutcome(k, False, bad, w, res)
        return SeedOutcome(k, True, "ok", _canonical(w), res)

    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(len(starts))))
    else:
        results = [run(k) for k in range(len(starts))]
    sols: list[BetheSolution] = []
    for r in results:
        if outcomes is not None:
            outcomes.append(r)
        if not r.converged:
            continue
        if any(_same_roots(r.roots, s.roots, dedup_rtol) for s in sols):
            continue
        sols.append(BetheSolution(r.roots, r.residual, r.seed))
    return sols


def residual_norm(system: BetheSystem, qval: complex, roots: Sequence[complex]) -> float:
    """Largest relative residual of the cross-multiplied equations."""
    if not system.unknowns:
        return 0.0
    return _Numeric(system, qval).relative(np.asarray(roots, dtype=complex))
