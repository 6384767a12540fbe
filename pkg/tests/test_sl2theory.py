from collections import Counter

import pytest

from qchar.sl2theory import (
    NotACharacter,
    Segment,
    chi_irreducible,
    chi_wr,
    decompose_into_segments,
    grothendieck_decomposition,
    has_extra_dominant,
    in_special_position,
    is_irregular,
    mukhin_counterexample,
    segment_from_positions,
    tensor_is_irreducible,
)
from qchar.ypoly import Y, YMonomial, YPolynomial
from oracles import brute_force_segments, poly_from_strings
from printed_tables import MUKHIN_PRINTED


def test_segment_positions():
    assert Segment(0, 2).positions() == (-1, 1)
    assert Segment(1, 3).positions() == (-1, 1, 3)
    assert Segment(0, 2, step=2).positions() == (-2, 2)
    assert segment_from_positions([3, -1, 1]) == Segment(1, 3)
    assert segment_from_positions([0, 4]) is None
    with pytest.raises(ValueError):
        Segment(0, -1)


def test_special_position_examples():
    assert in_special_position(Segment(0, 2), Segment(3, 1))
    assert not in_special_position(Segment(0, 1), Segment(0, 1))
    assert not in_special_position(Segment(0, 3), Segment(0, 1))


def test_overlapping_segments_are_special():
    assert in_special_position(Segment(0, 2), Segment(2, 2))
    assert not in_special_position(Segment(0, 1), Segment(1, 1))


def test_decomposition_examples():
    assert decompose_into_segments([-1, 1]) == [Segment(0, 2)]
    assert decompose_into_segments([0, 0]) == [Segment(0, 1), Segment(0, 1)]
    assert decompose_into_segments([-1, 1, 1]) == [Segment(0, 2), Segment(1, 1)]
    assert decompose_into_segments([]) == []


def test_decomposition_agrees_with_brute_force_across_parities():
    roots = [-3, -1, 0, 1, 2, 2]
    bf = brute_force_segments(roots)
    assert len(bf) == 1
    got = tuple(sorted(tuple(sorted(s.positions())) for s in decompose_into_segments(roots)))
    assert bf[0] == got


def test_chi_wr_examples():
    assert chi_wr(0, 1) == Y(1, 0) + Y(1, 2, -1)
    assert chi_wr(7, 0) == YPolynomial.constant(1)
    assert chi_wr(1, 2) == Y(1, 0) * Y(1, 2) + Y(1, 0) * Y(1, 4, -1) + Y(1, 2, -1) * Y(1, 4, -1)


def test_chi_wr_step_two():
    assert chi_wr(0, 1, step=2) == Y(1, 0) + Y(1, 4, -1)


def test_chi_irreducible_examples():
    assert chi_irreducible([0]) == Y(1, 0) + Y(1, 2, -1)
    assert chi_irreducible([0, 3]) == (Y(1, 0) + Y(1, 2, -1)) * (Y(1, 3) + Y(1, 5, -1))
    assert chi_irreducible([-1, 1]) == chi_wr(0, 2)
    assert len(chi_irreducible([-1, 1])) == 3


def test_extra_dominant_examples():
    assert not has_extra_dominant([0])
    assert not has_extra_dominant([-1, 1, 1])
    assert has_extra_dominant([-2, 0, 2, 0])
    assert is_irregular([-2, 0, 2, 0]) and not is_irregular([-1, 1, 1])


def test_tensor_irreducibility_examples():
    assert tensor_is_irreducible([Segment(0, 1), Segment(4, 1)])
    assert not tensor_is_irreducible([Segment(0, 1), Segment(2, 1)])
    assert tensor_is_irreducible([Segment(0, 1)])




def test_mukhin_matches_printed():
    p = mukhin_counterexample()
    assert p == poly_from_strings(MUKHIN_PRINTED)
    assert len(p) == 8 and all(c >= 1 for c in p.terms.values())
    assert sorted(p.terms.values()) == [1, 1, 1, 1, 1, 1, 2, 2]


def test_mukhin_terms_are_dominant_times_inverse_a():
    # every monomial is Y_0 Y_{-2} Y_0 or Y_0 Y_0 Y_2 times a product of A_c^{-1} with c in {-1, 1, 3}
    from itertools import combinations_with_replacement

    from qchar.sl2theory import a_inverse_sl2

    tops = [YMonomial({(1, 0): 2, (1, 2): 1}), YMonomial({(1, 0): 2, (1, -2): 1}), YMonomial({(1, 0): 1})]
    reach = set()
    for t in tops:
        for k in range(4):
            for cs in combinations_with_replacement([-1, 1, 3], k):
                reach.add(t * a_inverse_sl2(cs))
    assert all(m in reach for m in mukhin_counterexample())


def test_mukhin_is_virtual():
    mult = grothendieck_decomposition(mukhin_counterexample())
    assert mult == {(-2, 0, 0): 1, (0,): -1, (0, 0, 2): 1}


def test_grothendieck_rejects_non_character():
    with pytest.raises(NotACharacter):
        grothendieck_decomposition(Y(1, 2, -1))
    with pytest.raises(NotACharacter):
        grothendieck_decomposition(Y(2, 0))


def test_step_parameter_scales_everything():
    p = chi_irreducible([0, 4, 4], step=2)
    q = chi_irreducible([0, 2, 2], step=1)
    scaled = q.map_monomials(lambda m: YMonomial({(i, 2 * n): e for (i, n), e in m.items}))
    assert p == scaled
