"""Root data of the classical simple Lie algebras and their q-deformed Cartan matrices.

Nodes are numbered as in Bourbaki: for ``B_l`` the short simple root is
``alpha_l``, for ``C_l`` the long simple root is ``alpha_l``, and for ``D_l``
the two spinor nodes ``l-1`` and ``l`` both attach to node ``l-2``.
Matrices are stored 0-based; node ``i`` lives at row ``i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Matrix = tuple[tuple[int, ...], ...]

SERIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class QLaurent:
    """Laurent polynomial in ``q`` with integer coefficients.

    Stored as a map ``power -> coefficient`` with no zero coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            if v:
                clean[int(k)] = int(v)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, power: int, coef: int = 1) -> "QLaurent":
        return cls({power: coef})

    @classmethod
    def qint(cls, n: int) -> "QLaurent":
        """The quantum integer ``[n]_q = (q^n - q^-n) / (q - q^-1)``."""
        if n == 0:
            return cls()
        sign = 1 if n > 0 else -1
        n = abs(n)
        return cls({n - 1 - 2 * k: sign for k in range(n)})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no degree")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no degree")
        return min(self._terms)

    def __add__(self, other: "QLaurent | int") -> "QLaurent":
        other = _as_laurent(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "QLaurent | int") -> "QLaurent":
        return self + (-_as_laurent(other))

    def __rsub__(self, other: "QLaurent | int") -> "QLaurent":
        return _as_laurent(other) - self

    def __mul__(self, other: "QLaurent | int") -> "QLaurent":
        other = _as_laurent(other)
        out: dict[int, int] = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return QLaurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``q^k``."""
        return QLaurent({p + k: v for p, v in self._terms.items()})

    def divexact(self, divisor: "QLaurent") -> "QLaurent | None":
        """Exact quotient in ``Z[q, q^-1]``, or ``None`` if the division leaves a remainder.

        The divisor's leading coefficient must be a unit (``+1`` or ``-1``).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        lead = divisor._terms[divisor.degree()]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        if self.is_zero():
            return QLaurent()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        dhi = divisor.degree()
        qlo = self.low_degree() - divisor.low_degree()
        while rem:
            top = max(rem)
            shift = top - dhi
            if shift < qlo:
                return None
            c = rem[top] * lead
            quot[shift] = c
            for p, v in divisor._terms.items():
                key = p + shift
                val = rem.get(key, 0) - c * v
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return QLaurent(quot)

    def evaluate(self, q: complex) -> complex:
        return sum(v * q**k for k, v in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QLaurent({0: other})
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, v in sorted(self._terms.items(), reverse=True):
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono == "1":
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_laurent(x: "QLaurent | int") -> QLaurent:
    if isinstance(x, QLaurent):
        return x
    if isinstance(x, int):
        return QLaurent({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to QLaurent")


@dataclass(frozen=True)
class CartanData:
    """Cartan data of a classical simple Lie algebra."""

    series: str
    rank: int
    C: Matrix
    I: Matrix
    r: tuple[int, ...]
    rvee: int
    hvee: int

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def cartan(self, i: int, j: int) -> int:
        return self.C[i - 1][j - 1]

    def incidence(self, i: int, j: int) -> int:
        return self.I[i - 1][j - 1]

    def symmetrizer(self, i: int) -> int:
        return self.r[i - 1]

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node {i} out of range for {self.series}{self.rank}")

    def alpha(self, i: int) -> tuple[int, ...]:
        """Simple root ``alpha_i`` in the fundamental-weight basis (column ``i`` of C)."""
        self.check_node(i)
        return tuple(self.C[j][i - 1] for j in range(self.rank))

    def symmetrized(self) -> Matrix:
        """``B = diag(r) C``."""
        return tuple(
            tuple(self.r[i] * self.C[i][j] for j in range(self.rank)) for i in range(self.rank)
        )

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"


def _zeros(n: int) -> list[list[int]]:
    return [[0] * n for _ in range(n)]


def build_cartan(series: str, rank: int) -> CartanData:
    """Build the Cartan data for ``series`` in ``{A, B, C, D}`` and the given rank."""
    series = str(series).upper()
    if series not in SERIES:
        raise ValueError(f"unsupported series {series!r}; expected one of {SERIES}")
    if rank < _MIN_RANK[series]:
        raise ValueError(f"rank {rank} unsupported for series {series} (minimum {_MIN_RANK[series]})")
    n = rank
    inc = _zeros(n)
    for k in range(n - 1):
        inc[k][k + 1] = inc[k + 1][k] = 1
    r = [1] * n
    rvee = 1
    if series == "A":
        hvee = n + 1
    elif series == "B":
        # C_{l,l-1} = -2: the short node l sees node l-1 twice
        inc[n - 1][n - 2] = 2
        r = [2] * (n - 1) + [1]
        rvee, hvee = 2, 2 * n - 1
    elif series == "C":
        inc[n - 2][n - 1] = 2
        r = [1] * (n - 1) + [2]
        rvee, hvee = 2, n + 1
    else:
        inc = _zeros(n)
        for k in range(n - 2):
            inc[k][k + 1] = inc[k + 1][k] = 1
        inc[n - 3][n - 1] = inc[n - 1][n - 3] = 1
        hvee = 2 * n - 2
    C = [[2 * (i == j) - inc[i][j] for j in range(n)] for i in range(n)]
    return CartanData(
        series=series,
        rank=n,
        C=tuple(map(tuple, C)),
        I=tuple(map(tuple, inc)),
        r=tuple(r),
        rvee=rvee,
        hvee=hvee,
    )


def q_cartan_matrix(cd: CartanData) -> list[list[QLaurent]]:
    """``C_ij(q) = (q^{r_i} + q^{-r_i}) delta_ij - [I_ij]_q``."""
    n = cd.rank
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = -QLaurent.qint(cd.I[i][j])
            if i == j:
                entry = entry + QLaurent({cd.r[i]: 1, -cd.r[i]: 1})
            row.append(entry)
        out.append(row)
    return out


def q_symmetrizer(cd: CartanData) -> list[list[QLaurent]]:
    """``D(q) = diag([r_i]_q)``."""
    n = cd.rank
    return [[QLaurent.qint(cd.r[i]) if i == j else QLaurent() for j in range(n)] for i in range(n)]


def q_symmetrized(cd: CartanData) -> list[list[QLaurent]]:
    """``B_ij(q) = [B_ij]_q`` with ``B = diag(r) C``."""
    B = cd.symmetrized()
    return [[QLaurent.qint(B[i][j]) for j in range(cd.rank)] for i in range(cd.rank)]


def matmul(A: list[list[QLaurent]], B: list[list[QLaurent]]) -> list[list[QLaurent]]:
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), QLaurent()) for j in range(p)] for i in range(n)]


def determinant(M: list[list[QLaurent]]) -> QLaurent:
    """Determinant by cofactor expansion along the first row; fine for rank <= 8."""
    n = len(M)
    if n == 0:
        return QLaurent({0: 1})
    if n == 1:
        return M[0][0]
    total = QLaurent()
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def adjugate(M: list[list[QLaurent]]) -> list[list[QLaurent]]:
    n = len(M)
    adj = [[QLaurent() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(M) if k != i]
            cof = determinant(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def classical_types(max_rank: int) -> Iterable[CartanData]:
    """Every supported (series, rank) with rank <= max_rank."""
    for s in SERIES:
        for n in range(_MIN_RANK[s], max_rank + 1):
            yield build_cartan(s, n)
