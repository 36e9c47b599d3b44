from fractions import Fraction

from hypothesis import given, strategies as st

from moricone import report
from moricone.cones import cone_section
from moricone.svg import chart, section_svg


def test_rat_rendering():
    assert report.rat(Fraction(6, 4)) == "3/2"
    assert report.rat(28) == "28"
    assert report.rat(Fraction(-2, 6)) == "-1/3"
    assert report.num(Fraction(1, 2), "derived") == {"value": "1/2", "provenance": "derived"}


def test_dumps_is_canonical():
    a = report.dumps({"b": 1, "a": [Fraction(1, 2).__str__()]})
    b = report.dumps({"a": ["1/2"], "b": 1})
    assert a == b and a.endswith("\n")


def test_section_csv_layout():
    text = report.section_csv(cone_section(24, Fraction(162, 25)))
    assert text.splitlines()[0] == "cone,ray_a,ray_b"
    assert "\r" not in text


@given(
    st.tuples(st.integers(0, 500), st.integers(-500, 500)),
    st.tuples(st.integers(0, 500), st.integers(-500, 500)),
)
def test_chart_is_monotone_in_slope(r1, r2):
    # for rays with a > 0 the chart orders by b / a
    if r1[0] > 0 and r2[0] > 0:
        if Fraction(r1[1], r1[0]) < Fraction(r2[1], r2[0]):
            assert chart(r1) < chart(r2)


def test_chart_anchors():
    assert chart((0, -1)) == -1
    assert chart((1, 0)) == 0


def test_svg_is_deterministic_and_self_contained():
    s = cone_section(5, None)
    one, two = section_svg(s), section_svg(s)
    assert one == two
    assert 'data-cone="psef"' not in one
    assert "<image" not in one and "http://www.w3.org/2000/svg" in one
