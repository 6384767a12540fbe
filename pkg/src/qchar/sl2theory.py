"""q-character theory of U_q(sl2-hat): q-segments, evaluation modules and irreducibles.

Everything takes a ``step`` argument (default 1).  With step ``s`` the
positions live on the lattice of the subalgebra U_{q^s}(sl2-hat): a segment
advances by ``2s`` and ``A_c = Y_{c+s} Y_{c-s}``.  charbuild uses this with
``s = r_i``.

Internally a character is kept as a top monomial together with a map from
multisets of A-centres to coefficients, so higher-rank code can substitute
the full ``A_{i,c}`` for each centre.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from qchar.ypoly import YMonomial, YPolynomial

ACentres = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Segment:
    """The q-segment of ``length`` points centred at ``center``."""

    center: int
    length: int
    step: int = 1

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("segment length must be non-negative")
        if self.step < 1:
            raise ValueError("segment step must be positive")

    def positions(self) -> tuple[int, ...]:
        s, r, c = self.step, self.length, self.center
        return tuple(c + s * (r - 2 * k + 1) for k in range(r, 0, -1))

    def position_set(self) -> frozenset[int]:
        return frozenset(self.positions())

    def shifted(self, k: int) -> "Segment":
        return Segment(self.center + k, self.length, self.step)


def segment_from_positions(positions: Iterable[int], step: int = 1) -> Segment | None:
    """The segment whose position set is ``positions``, or ``None`` if there is none."""
    pts = sorted(set(positions))
    if not pts:
        return None
    if any(b - a != 2 * step for a, b in zip(pts, pts[1:])):
        return None
    return Segment((pts[0] + pts[-1]) // 2, len(pts), step)


def in_special_position(s1: Segment, s2: Segment) -> bool:
    """True iff the union of the two segments is a segment properly containing each."""
    if s1.step != s2.step:
        raise ValueError("segments with different steps")
    a, b = s1.position_set(), s2.position_set()
    union = a | b
    if union == a or union == b:
        return False
    return segment_from_positions(union, s1.step) is not None


def tensor_is_irreducible(segs: Sequence[Segment]) -> bool:
    """A tensor product of evaluation modules is irreducible iff no pair is in special position."""
    return not any(
        in_special_position(segs[i], segs[j]) for i in range(len(segs)) for j in range(i + 1, len(segs))
    )


def decompose_into_segments(roots: Iterable[int], step: int = 1) -> list[Segment]:
    """Split a multiset of positions into segments, no two in special position.

    Greedy per residue class mod ``2*step``: from the smallest remaining point,
    take the longest run of consecutive lattice points and remove one copy of each.
    """
    classes: dict[int, Counter] = defaultdict(Counter)
    period = 2 * step
    for n in roots:
        classes[n % period][(n - n % period) // period] += 1
    out: list[Segment] = []
    for rho, cnt in sorted(classes.items()):
        cnt = Counter(cnt)
        while cnt:
            lo = min(cnt)
            hi = lo
            while cnt.get(hi + 1, 0) > 0:
                hi += 1
            for u in range(lo, hi + 1):
                cnt[u] -= 1
                if cnt[u] == 0:
                    del cnt[u]
            out.append(Segment(rho + step * (lo + hi), hi - lo + 1, step))
    return sorted(out)


def top_monomial(roots: Iterable[int], node: int = 1) -> YMonomial:
    acc: Counter = Counter(roots)
    return YMonomial({(node, n): e for n, e in acc.items()})


def _wr_terms(seg: Segment) -> list[ACentres]:
    """A-centre multisets of the evaluation-module string, top to bottom."""
    s, r, c = seg.step, seg.length, seg.center
    chain = [c + s * (r - 2 * j + 2) for j in range(1, r + 1)]
    return [tuple(sorted(chain[:j])) for j in range(r + 1)]


def character_terms(roots: Iterable[int], step: int = 1) -> Counter:
    """Coefficients of the irreducible character relative to its top monomial.

    Keys are sorted tuples of A-centres; value is the coefficient of
    ``top * prod A_c^{-1}``.
    """
    acc: Counter = Counter({(): 1})
    for seg in decompose_into_segments(roots, step):
        nxt: Counter = Counter()
        for key, coef in acc.items():
            for t in _wr_terms(seg):
                nxt[tuple(sorted(key + t))] += coef
        acc = nxt
    return acc


def a_inverse_sl2(centres: Iterable[int], step: int = 1, node: int = 1) -> YMonomial:
    acc: Counter = Counter()
    for c in centres:
        acc[(node, c + step)] -= 1
        acc[(node, c - step)] -= 1
    return YMonomial(acc)


def chi_wr(center: int, r: int, step: int = 1, node: int = 1) -> YPolynomial:
    """q-character of the evaluation module W_r at ``center``: r+1 monomials."""
    seg = Segment(center, r, step)
    top = top_monomial(seg.positions(), node)
    return YPolynomial.from_terms((top * a_inverse_sl2(t, step, node), 1) for t in _wr_terms(seg))


def chi_irreducible(roots: Iterable[int], step: int = 1, node: int = 1) -> YPolynomial:
    """q-character of the irreducible module with the given Drinfeld roots."""
    roots = list(roots)
    top = top_monomial(roots, node)
    return YPolynomial.from_terms(
        (top * a_inverse_sl2(key, step, node), c) for key, c in character_terms(roots, step).items()
    )


def is_irregular(roots: Iterable[int], step: int = 1) -> bool:
    """Some segment and its translate by ``2*step`` both sit inside another segment."""
    segs = decompose_into_segments(roots, step)
    for a, si in enumerate(segs):
        inner = si.position_set()
        inner_up = si.shifted(2 * step).position_set()
        for b, sj in enumerate(segs):
            if a != b and inner <= sj.position_set() and inner_up <= sj.position_set():
                return True
    return False


def has_extra_dominant(roots: Iterable[int], step: int = 1) -> bool:
    """Whether the irreducible character has a dominant monomial besides the highest."""
    roots = list(roots)
    top = top_monomial(roots)
    return any(m.is_dominant() and m != top for m in chi_irreducible(roots, step))


def mukhin_counterexample() -> YPolynomial:
    """chi(W_1(0) W_2(1)) + chi(W_1(0) W_2(-1)) - chi(W_1(0)): positive coefficients, yet virtual."""
    w1 = chi_wr(0, 1)
    return w1 * chi_wr(1, 2) + w1 * chi_wr(-1, 2) - w1


class NotACharacter(ValueError):
    """A polynomial cannot be written as a combination of irreducible sl2 characters."""

    def __init__(self, message: str, witness: YMonomial | None = None):
        super().__init__(message)
        self.witness = witness


def grothendieck_decomposition(
    p: YPolynomial, step: int = 1, node: int = 1, max_steps: int = 10_000
) -> dict[tuple[int, ...], int]:
    """Write a polynomial in Y_{node,.} as an integer combination of irreducible characters.

    Repeatedly take the monomials of largest weight; each must be dominant and
    is removed together with its irreducible character.  Keys of the result are
    sorted root tuples; multiplicities may be negative.
    """
    rest = p
    out: Counter = Counter()
    for _ in range(max_steps):
        if rest.is_zero():
            return {k: v for k, v in sorted(out.items()) if v}
        for m in rest:
            if m.nodes() - {node}:
                raise NotACharacter(f"monomial {m} involves nodes other than {node}", m)
        wmax = max(sum(e for _, e in m.items) for m in rest)
        tops = [m for m in rest if sum(e for _, e in m.items) == wmax]
        peel = YPolynomial()
        for m in tops:
            if not m.is_dominant():
                raise NotACharacter(f"highest-weight monomial {m} is not dominant", m)
            roots = tuple(sorted(n for (_, n), e in m.items for _ in range(e)))
            c = rest.coefficient(m)
            out[roots] += c
            peel = peel + c * chi_irreducible(roots, step, node)
        rest = rest - peel
    raise NotACharacter("decomposition did not terminate")
