import pytest

from beilc.cohomology import decompose, report
from beilc.graphs import (
    AssumptionError,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from beilc.ideals import PrimeIdeal, associated_primes, build_poset
from beilc.girth5 import (
    GENERAL,
    INAPPLICABLE,
    NO_EDGES,
    SMALL_N,
    STAR,
    classify,
    closed_form_decompose,
    closed_form_elements,
    closed_form_poset,
    closed_form_report,
    equivalence_audit,
    symbolic_tags,
    trivial_report,
    verify_equivalence,
)

import expected_posets as data


# -- classification ------------------------------------------------------------


@pytest.mark.parametrize(
    "g, expected",
    [
        (empty_graph(1), NO_EDGES),
        (empty_graph(2), NO_EDGES),
        (empty_graph(5), NO_EDGES),
        (star_graph(5), STAR),
        (star_graph(4), STAR),
        (path_graph(2), SMALL_N),
        (path_graph(3), SMALL_N),
        (disjoint_union(path_graph(2), empty_graph(1)), SMALL_N),
        (cycle_graph(5), GENERAL),
        (path_graph(4), GENERAL),
        (complete_graph(3), INAPPLICABLE),
        (cycle_graph(4), INAPPLICABLE),
    ],
)
def test_classify(g, expected):
    assert classify(g).classification == expected


def test_small_n_takes_precedence_over_star():
    # the 2-vertex and 3-vertex stars land in the small-n branch
    assert classify(path_graph(2)).classification == SMALL_N
    assert classify(star_graph(3)).classification == SMALL_N


# -- trivial reports -------------------------------------------------------------


def test_trivial_report_no_edges():
    rep = trivial_report(classify(empty_graph(6)))
    assert (rep.dimension, rep.regularity, rep.cohen_macaulay) == (7, 1, True)
    rep3 = trivial_report(classify(empty_graph(3)))
    assert (rep3.dimension, rep3.regularity) == (4, 1)
    rep1 = trivial_report(classify(empty_graph(1)))
    assert (rep1.dimension, rep1.regularity) == (2, 0)  # the whole ring survives


def test_trivial_report_star():
    rep = trivial_report(classify(star_graph(6)))
    assert (rep.dimension, rep.regularity, rep.cohen_macaulay) == (8, 1, True)


def test_trivial_report_small_n_cases():
    # K2: zero ideal
    rep = trivial_report(classify(path_graph(2)))
    assert (rep.dimension, rep.regularity) == (4, 0)
    # P3: one quadric
    rep = trivial_report(classify(path_graph(3)))
    assert (rep.dimension, rep.regularity) == (5, 1)
    # K2 + K1: complement is the 3-path, a complete intersection
    rep = trivial_report(classify(disjoint_union(path_graph(2), empty_graph(1))))
    assert (rep.dimension, rep.regularity, rep.cohen_macaulay) == (4, 2, True)


def test_trivial_small_n_reports_agree_with_generic_engine():
    for g in (path_graph(2), path_graph(3), disjoint_union(path_graph(2), empty_graph(1))):
        rep = trivial_report(classify(g))
        gen = report(decompose(complement(g)))
        assert (rep.depth, rep.dimension, rep.regularity) == (
            gen.depth,
            gen.dimension,
            gen.regularity,
        )


def test_trivial_report_rejects_general():
    with pytest.raises(AssumptionError):
        trivial_report(classify(path_graph(4)))


# -- the explicit poset -----------------------------------------------------------


def build_expected(n, element_table):
    return {
        tag: PrimeIdeal.of(n, killed, blocks)
        for tag, (killed, blocks) in element_table.items()
    }


def assert_poset_matches_figure(g, element_table, cover_table):
    c = classify(g)
    poset = closed_form_poset(c)
    expected = build_expected(g.n, element_table)
    elements = closed_form_elements(c)
    assert elements == expected
    assert set(poset.elements) == set(expected.values())
    by_ideal = {q: tag for tag, q in expected.items()}
    covers = {
        (by_ideal[lo], "TOP" if up == "TOP" else by_ideal[up])
        for lo, up in poset.cover_relations()
    }
    assert covers == cover_table


def test_poset_figure_p4(p4):
    assert_poset_matches_figure(p4, data.P4_ELEMENTS, data.P4_COVERS)


def test_poset_figure_p5():
    assert_poset_matches_figure(path_graph(5), data.P5_ELEMENTS, data.P5_COVERS)


def test_poset_figure_8v(example_8v):
    assert_poset_matches_figure(example_8v, data.EX8_ELEMENTS, data.EX8_COVERS)


def test_poset_figure_10v(example_10v):
    assert_poset_matches_figure(example_10v, data.EX10_ELEMENTS, data.EX10_COVERS)


def test_maximal_ideal_membership_branches(p4, example_8v, example_10v, two_k2):
    # no m: the two paths; m present: both bigger examples and the double edge
    assert "m" not in closed_form_elements(classify(p4))
    assert "m" not in closed_form_elements(classify(path_graph(5)))
    assert "m" in closed_form_elements(classify(example_8v))
    assert "m" in closed_form_elements(classify(example_10v))
    assert "m" in closed_form_elements(classify(two_k2))  # two free edges
    # one free edge and empty core: no m
    k2_2k1 = disjoint_union(path_graph(2), empty_graph(2))
    assert "m" not in closed_form_elements(classify(k2_2k1))
    # two isolated core vertices are not a star: m appears
    two_p3 = disjoint_union(path_graph(3), path_graph(3))
    assert "m" in closed_form_elements(classify(two_p3))


# -- closed-form decomposition ------------------------------------------------------


def test_closed_decompose_2k2(two_k2):
    dec = closed_form_decompose(classify(two_k2))
    assert dec.nonzero_degrees() == [4, 5]
    at4 = {(s.prime.describe(), s.local_degree) for s in dec.summands[4]}
    assert at4 == {
        ("Z(3,4)", 4), ("Z(3,4)+K(1,2)", 3), ("Z(1,2)", 4), ("Z(1,2)+K(3,4)", 3),
    }
    assert [s.local_degree for s in dec.summands[5]] == [5]  # just the full block


def test_closed_decompose_p4(p4):
    dec = closed_form_decompose(classify(p4))
    assert dec.nonzero_degrees() == [5]
    assert len(dec.summands[5]) == 7


def test_closed_decompose_c5():
    dec = closed_form_decompose(classify(cycle_graph(5)))
    assert dec.nonzero_degrees() == [5, 6]
    assert len(dec.summands[5]) == 20  # five vertex pairs + five edge pairs
    assert len(dec.summands[6]) == 1
    assert all(s.multiplicity == 1 for ss in dec.summands.values() for s in ss)


def test_degree_block_disjointness():
    from beilc.corpus import girth5_classes

    for g in girth5_classes(6):
        c = classify(g)
        dec = closed_form_decompose(c)
        degrees = dec.nonzero_degrees()
        assert degrees[0] >= 4 and degrees[-1] == g.n + 1
        tags = symbolic_tags(c)
        j_spots = [
            r
            for r in degrees
            for s in dec.summands[r]
            if tags.get(s.prime) == "j"
        ]
        assert j_spots == [g.n + 1]


# -- closed-form reports --------------------------------------------------------------


def test_closed_report_examples(p4, example_10v, two_k2, p3_plus_k1):
    rep = closed_form_report(classify(p3_plus_k1))
    assert rep.cohen_macaulay and rep.depth == rep.dimension == 5
    rep = closed_form_report(classify(example_10v))
    assert (rep.depth, rep.dimension, rep.regularity) == (4, 11, 3)
    rep = closed_form_report(classify(two_k2))
    assert (rep.depth, rep.dimension, rep.regularity) == (4, 5, 2)
    rep = closed_form_report(classify(p4))
    assert rep.cohen_macaulay and rep.regularity == 3


def test_closed_report_char_p(example_10v):
    rep = closed_form_report(classify(example_10v), char=2)
    assert rep.cd == 16
    assert rep.ara_bounds == (16, 20)
    rep0 = closed_form_report(classify(example_10v), char=0)
    assert rep0.cd is None and rep0.ara_bounds is None


def test_closed_report_star_plus_isolated_exceeds_dichotomy():
    # all core vertices of high degree push the bottom summand above 5;
    # the star on 4 vertices plus an isolated one is even Cohen-Macaulay
    g = disjoint_union(star_graph(4), empty_graph(1))
    c = classify(g)
    assert c.classification == GENERAL
    rep = closed_form_report(c)
    assert rep.depth == 6 and rep.dimension == 6 and rep.cohen_macaulay
    gen = report(decompose(complement(g)))
    assert (gen.depth, gen.dimension) == (6, 6)


def test_closed_report_agrees_with_decomposition_extraction():
    from beilc.corpus import girth5_classes

    for g in girth5_classes(6):
        c = classify(g)
        dec = closed_form_decompose(c)
        rep = closed_form_report(c)
        degrees = dec.nonzero_degrees()
        assert rep.depth == degrees[0]
        assert rep.dimension == degrees[-1]
        assert rep.cohen_macaulay == (degrees[0] == degrees[-1])


# -- cross-validation -------------------------------------------------------------------


def test_verify_equivalence_p4(p4):
    verdict = verify_equivalence(classify(p4))
    assert verdict.match and verdict.char == 0


def test_verify_equivalence_c5_both_chars():
    audit = equivalence_audit(classify(cycle_graph(5)), chars=(0, 2))
    assert audit.match


def test_verify_equivalence_8v_vanishing(example_8v):
    audit = equivalence_audit(classify(example_8v), chars=(0,))
    assert audit.match
    assert audit.has_m and audit.e_tags == ("e_3", "e_4")
    assert all(v.vanishing_match for v in audit.verdicts)


def test_verify_requires_general():
    with pytest.raises(AssumptionError):
        verify_equivalence(classify(star_graph(5)))


def test_matching_core_orders_m_below_everything():
    # H = two disjoint edges: m is present but no e_v or bp exist, so the
    # only route to the order is honest reverse inclusion; the generic
    # closure must agree, with m covered by the d-type elements
    g = disjoint_union(path_graph(4), path_graph(4))
    c = classify(g)
    tags = symbolic_tags(c)
    names = set(tags.values())
    assert "m" in names
    assert not any(t.startswith("e_") or t.startswith("bp_") for t in names)
    audit = equivalence_audit(c, chars=(0,))
    assert audit.match
    poset = closed_form_poset(c)
    by_tag = {v: k for k, v in tags.items()}
    m_covers = {
        tags[up]
        for lo, up in poset.cover_relations()
        if lo == by_tag["m"] and up != "TOP"
    }
    assert m_covers == {"d_2_3", "d_6_7"}


def test_mixed_matching_and_star_core():
    # H = one bare edge plus a 3-path: m reaches one d pair only through e,
    # the other directly
    g = disjoint_union(path_graph(4), path_graph(5))
    c = classify(g)
    assert "m" in symbolic_tags(c).values()
    audit = equivalence_audit(c, chars=(0, 2))
    assert audit.match


def test_reports_are_relabeling_invariant():
    import random

    from beilc.corpus import girth5_classes
    from beilc.graphs import graph

    rng = random.Random(11)
    for g in girth5_classes(6)[:10]:
        perm = list(range(1, g.n + 1))
        rng.shuffle(perm)
        relabel = {v: perm[v - 1] for v in g.vertices()}
        h = graph(g.n, [(relabel[a], relabel[b]) for a, b in g.edges])
        cg, ch = classify(g), classify(h)
        assert closed_form_report(cg) == closed_form_report(ch)
        assert len(closed_form_poset(cg)) == len(closed_form_poset(ch))
        dg = closed_form_decompose(cg)
        dh = closed_form_decompose(ch)
        assert {r: len(s) for r, s in dg.summands.items()} == {
            r: len(s) for r, s in dh.summands.items()
        }


def test_generic_engine_reproduces_p5_complement_poset():
    target = complement(path_graph(5))
    poset = build_poset(associated_primes(target))
    expected = {
        PrimeIdeal.of(5, killed, blocks)
        for killed, blocks in data.P5_ELEMENTS.values()
    }
    assert set(poset.elements) == expected
    rep = report(decompose(target))
    assert (rep.depth, rep.dimension, rep.cohen_macaulay) == (5, 6, False)
