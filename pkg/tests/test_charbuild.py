import pytest

from qchar.cartan import build_cartan
from qchar.charbuild import (
    FMFailure,
    FMLimits,
    HighestWeight,
    build_graph,
    check_monom_shape,
    chi_i_expand,
    export_dot,
    fm_expand,
    fm_expand_report,
    fundamental_labels,
    fundamental_table,
    parse_roots,
    restriction_multiplicities,
    unique_dominant_product,
)
from qchar.charbuild.tables import expected_size, fundamental_chain
from qchar.screening import in_kernel_all
from qchar.sl2theory import chi_irreducible, chi_wr
from qchar.ypoly import Y, YMonomial, YPolynomial, a_monomial, classical_character
from printed_tables import CRITERION2_TYPES, PRINTED, printed_D


def fund(i=1, pos=0):
    return HighestWeight.fundamental(i, pos)


def test_chi_i_expand_examples():
    assert chi_i_expand(build_cartan("A", 1), 1, [0]) == Y(1, 0) + Y(1, 2, -1)
    assert chi_i_expand(build_cartan("A", 2), 1, [0]) == Y(1, 0) + Y(1, 2, -1) * Y(2, 1)
    assert chi_i_expand(build_cartan("B", 2), 1, [0]) == Y(1, 0) + Y(1, 4, -1) * Y(2, 3) * Y(2, 1)


def test_fm_examples():
    assert fm_expand(build_cartan("A", 2), fund()) == Y(1, 0) + Y(1, 2, -1) * Y(2, 1) + Y(2, 3, -1)
    sl2 = fm_expand(build_cartan("A", 1), HighestWeight.from_dict({1: [0, 4]}))
    assert sl2 == chi_wr(0, 1) * chi_wr(4, 1)
    b2 = fm_expand(build_cartan("B", 2), fund())
    assert len(b2) == 5 and b2 == fundamental_table(build_cartan("B", 2))


def test_fm_matches_sl2_theory():
    cd = build_cartan("A", 1)
    for roots in ([0, 2], [0, 2, 4], [-1, 1, 1], [0, 0], [1, 3, 3, 7]):
        assert fm_expand(cd, HighestWeight.from_dict({1: roots})) == chi_irreducible(roots)


def test_fm_known_dimensions():
    cases = [
        ("A", 2, {1: [0], 2: [1]}, 9),
        ("A", 2, {1: [0], 2: [3]}, 8),
        ("A", 2, {1: [0], 2: [9]}, 9),
        ("B", 2, {2: [0]}, 4),
        ("C", 2, {2: [0]}, 5),
        ("B", 3, {3: [0]}, 8),
        ("D", 4, {3: [0]}, 8),
        ("D", 4, {2: [0]}, 29),
    ]
    for s, l, roots, dim in cases:
        cd = build_cartan(s, l)
        p = fm_expand(cd, HighestWeight.from_dict(roots))
        assert sum(p.terms.values()) == dim
        assert in_kernel_all(cd, p)


def test_fm_reports_irregular_highest_weight():
    with pytest.raises(FMFailure) as info:
        fm_expand(build_cartan("A", 1), HighestWeight.from_dict({1: [-2, 0, 2, 0]}))
    assert info.value.reason == "extra dominant monomial"
    assert info.value.monomial == YMonomial({(1, -2): 1, (1, 0): 1})
    rep = fm_expand_report(build_cartan("A", 1), HighestWeight.from_dict({1: [-2, 0, 2, 0]}))
    assert rep["status"] == "failure" and rep["partial"]["terms"]


def test_fm_limits():
    with pytest.raises(FMFailure, match="term limit"):
        fm_expand(build_cartan("D", 4), HighestWeight.from_dict({2: [0]}), FMLimits(max_terms=5))
    with pytest.raises(FMFailure, match="iteration limit"):
        fm_expand(build_cartan("D", 4), fund(), FMLimits(max_iterations=3))
    with pytest.raises(ValueError):
        fm_expand(build_cartan("A", 1), fund(), FMLimits(max_terms=0))


def test_fm_rejects_bad_node():
    with pytest.raises(ValueError):
        fm_expand(build_cartan("A", 2), HighestWeight.fundamental(3))


def test_fm_translation():
    cd = build_cartan("C", 3)
    assert fm_expand(cd, fund(2, 5)) == fm_expand(cd, fund(2, 0)).shift(5)


def test_table_examples():
    a2 = fundamental_table(build_cartan("A", 2))
    assert len(a2) == 3
    c2 = build_cartan("C", 2)
    assert [(i, c) for _, _, i, c in fundamental_chain(c2)] == [(1, 1), (2, 3), (1, 5)]
    assert fundamental_table(c2) == Y(1, 0) + Y(1, 2, -1) * Y(2, 1) + Y(1, 4) * Y(2, 5, -1) + Y(1, 6, -1)
    assert len(fundamental_table(build_cartan("D", 4))) == 8


@pytest.mark.parametrize("series,l", CRITERION2_TYPES)
def test_tables_match_printed_forms(series, l):
    cd = build_cartan(series, l)
    assert fundamental_labels(cd) == PRINTED[series](l)
    assert len(fundamental_table(cd)) == expected_size(cd)


@pytest.mark.parametrize("l", [3, 4, 5])
def test_printed_d_form_has_a_sign_typo(l):
    # the literal printed Lambda_{(l-1)bar} is not the recursion's value and breaks the kernel test
    cd = build_cartan("D", l)
    literal = YPolynomial.from_terms((m, 1) for m in printed_D(l, literal=True).values())
    assert literal != fundamental_table(cd)
    assert not in_kernel_all(cd, literal)


def test_table_shift():
    cd = build_cartan("B", 3)
    assert fundamental_table(cd, 4) == fundamental_table(cd).shift(4)


def test_check_monom_shape_examples():
    sl2, a2 = build_cartan("A", 1), build_cartan("A", 2)
    assert check_monom_shape(sl2, chi_wr(0, 1), fund())
    assert not check_monom_shape(a2, Y(1, 0) + Y(2, 0), fund())
    assert check_monom_shape(a2, fundamental_table(a2), fund())


def test_check_monom_shape_rejects_wrong_sign():
    sl2 = build_cartan("A", 1)
    # Y_{1,-2} = Y_{1,0} A_{1,-1}: a positive power of A
    assert not check_monom_shape(sl2, Y(1, 0) + Y(1, -2), fund())
    assert not check_monom_shape(sl2, Y(1, 2, -1), fund())


def test_unique_dominant_examples():
    a2 = build_cartan("A", 2)
    assert unique_dominant_product([fundamental_table(a2, 0), fundamental_table(a2, 100)])
    assert not unique_dominant_product([chi_wr(0, 1), chi_wr(2, 1)])
    assert unique_dominant_product([fundamental_table(a2)])


def test_restriction_multiplicities():
    cd = build_cartan("B", 2)
    p = fundamental_table(cd)
    assert restriction_multiplicities(cd, p, 1) == {(): 1, (0,): 1, (2,): 1}
    assert restriction_multiplicities(cd, p, 2) == {(): 2, (1, 3): 1}


def test_graph_examples():
    sl2 = build_cartan("A", 1)
    g = build_graph(chi_wr(0, 2), sl2)
    assert len(g.vertices) == 3
    assert [(s, d, i, c) for s, d, i, c in g.edges] == [(0, 1, 1, 2), (1, 2, 1, 0)]
    a3 = build_cartan("A", 3)
    g = build_graph(fundamental_table(a3), a3)
    assert [(s, d, i) for s, d, i, _ in g.edges] == [(0, 1, 1), (1, 2, 2), (2, 3, 3)]


def test_d4_diamond():
    cd = build_cartan("D", 4)
    g = build_graph(fundamental_table(cd), cd)
    assert len(g.vertices) == 8 and len(g.edges) == 8
    out_deg = [len(g.successors(k)) for k in range(8)]
    assert out_deg == [1, 1, 2, 1, 1, 1, 1, 0]
    labels = fundamental_labels(cd)
    k3 = g.index(labels["3"])
    k4, k4b = g.index(labels["4"]), g.index(labels["4b"])
    k3b = g.index(labels["3b"])
    assert sorted(g.successors(k3)) == sorted([k4, k4b])
    assert g.successors(k4) == [k3b] and g.successors(k4b) == [k3b]
    assert not g.metadata["ambiguous"]


def test_graph_erasing_colours_gives_strings():
    cd = build_cartan("C", 3)
    p = fundamental_table(cd)
    g = build_graph(p, cd)
    for i in cd.nodes:
        for src, dst, _, c in g.colour_subgraph(i):
            assert g.vertices[dst][0] == g.vertices[src][0] * a_monomial(cd, i, c).inverse()


def test_graph_records_multiplicity():
    cd = build_cartan("A", 2)
    p = fm_expand(cd, HighestWeight.from_dict({1: [0], 2: [1]}))
    g = build_graph(p, cd)
    assert g.metadata["ambiguous"]
    assert any(mult == 2 for _, mult in g.vertices)
    assert g.is_rooted_connected()


def test_graph_rejects_bad_shape():
    with pytest.raises(ValueError):
        build_graph(Y(1, 0) + Y(2, 0), build_cartan("A", 2))


def test_dot_export():
    assert export_dot(build_graph(YPolynomial(), build_cartan("A", 1))) == "digraph qchar {\n}\n"
    dot = export_dot(build_graph(chi_wr(0, 1), build_cartan("A", 1)))
    assert dot.count("->") == 1 and 'label="1,q^1"' in dot
    a2 = build_cartan("A", 2)
    dot = export_dot(build_graph(fundamental_table(a2), a2))
    assert dot.splitlines()[-3:-1] == ['  v0 -> v1 [label="1,q^1"];', '  v1 -> v2 [label="2,q^2"];']
    assert dot == export_dot(build_graph(fundamental_table(a2), a2))


def test_parse_roots():
    hw = parse_roots("1:[0,2];2:[1]")
    assert hw.as_dict() == {1: (0, 2), 2: (1,)}
    assert parse_roots('{"roots":{"1":[0,2],"2":[1]}}') == hw
    assert HighestWeight.from_json(hw.to_json()) == hw
    assert parse_roots("1:[]").roots == ()
    with pytest.raises(ValueError):
        parse_roots("1:0,2")
    with pytest.raises(ValueError):
        HighestWeight.from_json({"roots": [1]})


def test_classical_dimension_of_tables():
    for s, l in CRITERION2_TYPES:
        cd = build_cartan(s, l)
        ch = classical_character(fundamental_table(cd), cd)
        assert sum(ch.values()) == expected_size(cd)
