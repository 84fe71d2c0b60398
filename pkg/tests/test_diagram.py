import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sharpknot.diagram import (
    BraidParseError,
    BraidWord,
    DiagramError,
    DisconnectedDiagramError,
    PDParseError,
    PlanarDiagram,
    braid_closure,
    canonical_key,
    faces,
    is_alternating_diagram,
    mirror,
    parse_braid,
    parse_pd,
    render_braid,
    render_pd,
    same_up_to_relabeling,
    seifert_genus_upper,
    stats,
)

from .oracles import seifert_circles_by_union

FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"


def braids(max_strands=5, max_letters=10):
    return st.integers(1, max_strands).flatmap(
        lambda k: st.lists(
            st.integers(1, max(k - 1, 1)).flatmap(lambda g: st.sampled_from([g, -g])),
            max_size=max_letters if k > 1 else 0,
        ).map(lambda letters: BraidWord(tuple(letters), k))
    )


class TestParseBraid:
    def test_mixed_signs(self):
        b = parse_braid("-1 2 1 3 2")
        assert b.letters == (-1, 2, 1, 3, 2)
        assert b.strands == 4

    def test_empty_is_trivial(self):
        b = parse_braid("")
        assert b.letters == () and b.strands == 1

    @pytest.mark.parametrize("text", ["1 0 2", "0"])
    def test_zero_letter(self, text):
        with pytest.raises(BraidParseError):
            parse_braid(text)

    def test_strands_override(self):
        b = parse_braid("strands=5; 1 2")
        assert b.strands == 5
        assert render_braid(b) == "strands=5; 1 2"
        assert parse_braid(render_braid(b)) == b

    def test_override_too_small(self):
        with pytest.raises(BraidParseError):
            parse_braid("strands=2; 1 2")

    def test_garbage(self):
        with pytest.raises(BraidParseError):
            parse_braid("1 x 2")


class TestParsePD:
    def test_trefoil_round_trip(self):
        d = braid_closure(parse_braid("1 1 1"))
        assert same_up_to_relabeling(parse_pd(render_pd(d)), d)
        assert parse_pd(render_pd(d)) == d

    def test_arc_used_three_times(self):
        with pytest.raises(PDParseError, match="3 times"):
            parse_pd("X(1,1,2,2) X(1,3,3,4)")

    def test_dangling_arc(self):
        with pytest.raises(PDParseError, match="dangling"):
            parse_pd("X(1,2,3,4)")

    def test_unorientable(self):
        # arc 3 would have to enter both crossings
        with pytest.raises(PDParseError, match="unorientable"):
            parse_pd("X(1,1,2,3) X(3,2,4,4)")

    def test_error_carries_position(self):
        with pytest.raises(PDParseError, match="column 12"):
            parse_pd("X(1,1,2,2) Y(3)")

    def test_two_component_orientation(self):
        d = parse_pd("X(1,3,2,4) X(2,3,1,4)")
        assert d.component_count == 2

    def test_relabels_non_compact(self):
        d = parse_pd("X(10,10,20,20)")
        assert render_pd(d) == "X(1,1,2,2)"

    def test_square_brackets_and_commas(self):
        d = parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]")
        assert len(d.crossings) == 3

    def test_empty_is_unknot(self):
        d = parse_pd("")
        assert d.crossings == () and d.free_loops == 1

    def test_signs_follow_knotatlas_labels(self):
        # consecutive labels on the over-strand: X[i,j,k,l] positive iff j = l + 1
        d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
        assert [x.sign for x in d.crossings] == [1, 1, 1]


@settings(max_examples=150, deadline=None)
@given(braids())
def test_round_trip_any_closure(b):
    d = braid_closure(b)
    # PD text has no syntax for crossingless loops, and a link component that
    # only passes over has no recorded direction
    if d.crossings and d.free_loops == 0 and d.is_knot():
        again = parse_pd(render_pd(d))
        assert canonical_key(again) == canonical_key(d)


class TestClosure:
    def test_staircase(self):
        s = stats(braid_closure(parse_braid("1 2 3")))
        assert (s.crossing_count, s.seifert_circles, s.writhe) == (3, 4, 3)

    def test_trivial(self):
        d = braid_closure(parse_braid(""))
        assert stats(d).crossing_count == 0 and stats(d).seifert_circles == 1

    def test_trefoil(self):
        s = stats(braid_closure(parse_braid("1 1 1")))
        assert (s.writhe, s.seifert_circles) == (3, 2)

    def test_signs_equal_letters(self):
        b = parse_braid("1 -2 3 -1 2")
        assert [x.sign for x in braid_closure(b).crossings] == [1, -1, 1, -1, 1]

    def test_split_strand_is_free_loop(self):
        d = braid_closure(parse_braid("strands=3; 1 1 1"))
        assert d.free_loops == 1 and not d.is_connected()


@settings(max_examples=200, deadline=None)
@given(braids())
def test_closure_writhe_and_circles(b):
    s = stats(braid_closure(b))
    assert s.writhe == sum(1 if x > 0 else -1 for x in b.letters)
    assert s.seifert_circles == b.strands
    assert s.crossing_count == len(b.letters)
    assert abs(s.writhe) <= s.crossing_count


@settings(max_examples=100, deadline=None)
@given(braids())
def test_seifert_circles_match_union_oracle(b):
    d = braid_closure(b)
    assert stats(d).seifert_circles == seifert_circles_by_union(d)


class TestStats:
    def test_cable(self):
        s = stats(braid_closure(parse_braid("-1 2 1 3 2")))
        assert (s.writhe, s.seifert_circles) == (3, 4)

    def test_unknot(self):
        s = stats(PlanarDiagram((), 1))
        assert (s.writhe, s.seifert_circles, s.crossing_count, s.connected) == (0, 1, 0, True)

    def test_figure_eight(self):
        d = parse_pd(FIGURE_EIGHT)
        assert stats(d).seifert_circles == 3
        assert seifert_circles_by_union(d) == 3
        assert stats(d).writhe == 0


class TestGenus:
    def test_trefoil(self):
        assert seifert_genus_upper(braid_closure(parse_braid("1 1 1"))) == 1

    def test_unknot(self):
        assert seifert_genus_upper(PlanarDiagram((), 1)) == 0

    def test_staircase_input(self):
        assert seifert_genus_upper(braid_closure(parse_braid("1 2 3"))) == 0

    def test_disconnected(self):
        with pytest.raises(DisconnectedDiagramError):
            seifert_genus_upper(braid_closure(parse_braid("strands=3; 1 1 1")))


def test_genus_integral_for_knots():
    rng = random.Random(7)
    checked = 0
    while checked < 100:
        k = rng.randint(2, 5)
        b = BraidWord(tuple(rng.choice([-1, 1]) * rng.randint(1, k - 1) for _ in range(rng.randint(1, 10))), k)
        d = braid_closure(b)
        if d.is_knot() and d.is_connected():
            assert isinstance(seifert_genus_upper(d), int)
            checked += 1


def test_face_count_is_euler():
    for w in ["1 1 1", "-1 2 1 3 2", "1 -2 1 -2", "1 2 3 2 1 3 2 2 1 3 2"]:
        d = braid_closure(parse_braid(w))
        assert len(faces(d)) == len(d.crossings) + 2


def test_mirror_flips_signs_and_is_involution():
    d = braid_closure(parse_braid("1 -2 1 3"))
    m = mirror(d)
    assert [x.sign for x in m.crossings] == [-x.sign for x in d.crossings]
    assert mirror(m) == d


def test_alternating_detection():
    assert is_alternating_diagram(parse_pd(FIGURE_EIGHT))
    assert not is_alternating_diagram(braid_closure(parse_braid("1 1 1 1 2 1 1 1 2 2")))


def test_invalid_direct_construction():
    from sharpknot.diagram import Crossing

    with pytest.raises(DiagramError):
        PlanarDiagram((), 0)
    with pytest.raises(DiagramError):
        PlanarDiagram((Crossing((1, 1, 2, 2), -1),))
