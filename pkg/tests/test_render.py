import pytest

from svgcheck import axis_y, crossing_groups, parse_primitives, symmetry_defect
from twobridge.contfrac import ContinuedFraction, ExpansionClass, crossing_sum
from twobridge.render import SvgStyle, layout, to_svg


def cf(*entries):
    return ContinuedFraction(tuple(entries))


class TestLayout:
    def test_type_a_worked_example(self):
        lay = layout(cf(1, 2, -2, -2))
        assert lay.expansion_class is ExpansionClass.TYPE_A
        on_axis = {(b.position, b.count) for b in lay.twist_boxes if b.on_axis}
        split = [(b.position, b.count, b.side) for b in lay.twist_boxes if not b.on_axis]
        assert on_axis == {(1, 1), (3, 2)}
        assert sorted(split) == [(2, 1, -1), (2, 1, 1), (4, 1, -1), (4, 1, 1)]
        assert sum(b.count for b in lay.twist_boxes) == crossing_sum(lay.cf)

    def test_type_b_palindrome(self):
        lay = layout(cf(3, 1, 3))
        assert lay.expansion_class is ExpansionClass.TYPE_B
        center = [b for b in lay.twist_boxes if b.on_axis]
        arms = [b for b in lay.twist_boxes if not b.on_axis]
        assert len(center) == 1 and center[0].count == 1 and center[0].position == 2
        assert sorted((b.position, b.count, b.side) for b in arms) == [
            (1, 3, 1),
            (3, 3, -1),
        ]

    def test_handedness_recorded(self):
        lay = layout(cf(1, -4))
        box = [b for b in lay.twist_boxes if not b.on_axis and b.side == 1][0]
        assert box.handedness == -1
        assert box.count == 2

    def test_rejects_neither_naming_both_conditions(self):
        with pytest.raises(ValueError, match=r"not Type A .*odd.*not Type B"):
            layout(cf(2, 1, 1, 2))

    def test_crossing_sum_invariant(self):
        for entries in [(1, 2), (5,), (3, 1, 3), (2, 6, 1, 4), (1, 2, 1, 2, 1)]:
            lay = layout(cf(*entries))
            assert sum(b.count for b in lay.twist_boxes) == crossing_sum(lay.cf)


class TestStyle:
    def test_defaults_valid(self):
        SvgStyle()

    @pytest.mark.parametrize(
        "kw",
        [
            {"unit": 15},
            {"unit": 2},
            {"band_offset": 30},
            {"band_offset": 71},
            {"column_gap": 9},
            {"margin": 10},
            {"halo_radius": 0},
            {"halo_radius": 12},
        ],
    )
    def test_rejects_bad_geometry(self, kw):
        with pytest.raises(ValueError):
            SvgStyle(**kw)


SYMMETRY_CASES = [
    (1, 2, -2, -2),
    (2, -2, -2, 2),
    (1, 4),
    (-1, 2),
    (2, 2),
    (2, 6, 1, 4),
    (1, 2, 1, 2, 1),
    (3, 1, 3),
    (3, -1, 3),
    (5,),
    (-3,),
    (1, 2, 3, 2, 1),
]


class TestSvg:
    @pytest.mark.parametrize("entries", SYMMETRY_CASES, ids=repr)
    def test_mirror_symmetry(self, entries):
        svg = to_svg(layout(cf(*entries)))
        assert symmetry_defect(svg) == []

    @pytest.mark.parametrize("entries", SYMMETRY_CASES, ids=repr)
    def test_glyph_counts(self, entries):
        c = cf(*entries)
        svg = to_svg(layout(c))
        groups = crossing_groups(svg)
        assert len(groups) == crossing_sum(c)
        on_axis = sum(1 for g in groups if g["side"] == 0)
        n = len(entries)
        if len(entries) % 2 == 0:
            want = sum(abs(a) for i, a in enumerate(entries, 1) if i % 2)
        else:
            want = abs(entries[(n - 1) // 2])
        assert on_axis == want
        ay = axis_y(svg)
        for g in groups:
            assert (g["center"][1] == ay) == (g["side"] == 0)

    def test_worked_example_counts(self):
        svg = to_svg(layout(cf(1, 2, -2, -2)))
        groups = crossing_groups(svg)
        assert len(groups) == 7
        assert sum(1 for g in groups if g["side"] == 0) == 3

    def test_palindrome_counts(self):
        svg = to_svg(layout(cf(3, 1, 3)))
        groups = crossing_groups(svg)
        assert len(groups) == 7
        assert sum(1 for g in groups if g["side"] == 0) == 1

    def test_deterministic(self):
        a = to_svg(layout(cf(1, 2, -2, -2)))
        b = to_svg(layout(cf(1, 2, -2, -2)))
        assert a == b

    def test_exactly_one_axis_line(self):
        svg = to_svg(layout(cf(3, 1, 3)))
        prims = parse_primitives(svg)
        assert sum(1 for p in prims if p[1] == "axis") == 1

    def test_halo_per_crossing(self):
        c = cf(2, 6, 1, 4)
        svg = to_svg(layout(c))
        prims = parse_primitives(svg)
        halos = [p for p in prims if p[0] == "circle" and p[1] == "halo"]
        assert len(halos) == crossing_sum(c)

    def test_custom_style_keeps_symmetry(self):
        style = SvgStyle(unit=16, band_offset=64, column_gap=16, margin=60, halo_radius=5)
        svg = to_svg(layout(cf(1, 2, -2, -2)), style)
        assert symmetry_defect(svg) == []

    def test_all_coordinates_integral(self):
        # parse_primitives raises on any non-integral coordinate
        parse_primitives(to_svg(layout(cf(2, 6, 1, 4))))
