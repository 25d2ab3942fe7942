import pytest

from spinorbits import orbits as O
from spinorbits.weights import OuterAut, Weight


class TestParsing:
    @pytest.mark.parametrize(
        "text",
        ["[3+ 2^2 1-]I", "[3- 2^2 1+,3]II", "[3+ 2^2 1- 1+,2]", "[3- 2^4 1- 1+,4]"],
    )
    def test_roundtrip(self, text):
        assert str(O.parse_diagram(text)) == text

    def test_complex_roundtrip(self):
        for text in ["[3 2^2 1^3]", "[2^4]", "[3 2^2 1]"]:
            assert str(O.parse_diagram(text)) == text

    def test_reject_mixed(self):
        with pytest.raises(ValueError):
            O.parse_diagram("[3+ 2^2 1]")

    def test_signature(self):
        d = O.parse_diagram("[3+ 2^2 1-]I")
        assert d.signature() == (4, 4)
        d = O.parse_diagram("[3- 2^2 1+,3]I")
        assert d.signature() == (6, 4)
        d = O.parse_diagram("[3+ 2^2 1+ 1-,2]")
        assert d.signature() == (5, 5)

    def test_validity(self):
        assert O.parse_diagram("[3+ 2^2 1-]I").is_valid()
        assert not O.SignedDiagram.make([(3, 1), (2, 1), (1, -1), (1, -1)]).is_valid()


class TestClassify:
    def test_case1(self):
        oc = O.classify_case(O.parse_diagram("[3+ 2^2 1-]I"))
        assert (oc.case_id, oc.k) == (1, 1)

    def test_case4_flags(self):
        oc = O.classify_case(O.parse_diagram("[3+ 2^2 1+ 1-,2]"))
        assert oc.case_id == 4
        assert oc.signature == (5, 5)
        assert oc.flags  # box-count discrepancy recorded

    def test_no_three_row(self):
        assert O.classify_case(O.SignedDiagram.make([(2, 1)] * 4)) is None

    @pytest.mark.parametrize(
        "text,case,r",
        [
            ("[3- 2^2 1+,3]I", 2, 1),
            ("[3+ 2^2 1- 1+,2]", 2, 1),
            ("[3+ 2^2 1-,3]I", 3, 1),
            ("[3- 2^2 1+ 1-,2]", 3, 1),
            ("[3+ 2^2 1+]", 5, 0),
            ("[3+ 2^2 1+,5]", 5, 2),
            ("[3- 2^2 1-]", 6, 0),
            ("[3- 2^2 1- 1+,4]", 7, 2),
            ("[3+ 2^2 1+ 1-,4]", 8, 2),
        ],
    )
    def test_cases(self, text, case, r):
        oc = O.classify_case(O.parse_diagram(text))
        assert oc.case_id == case
        assert max(oc.r_plus, oc.r_minus) == r


class TestEnumerate:
    def test_case1_four_orbits(self):
        forms = O.enumerate_real_forms(4, 4, 1)
        assert len(forms) == 4
        assert {str(f.diagram) for f in forms} == {
            "[3+ 2^2 1-]I",
            "[3+ 2^2 1-]II",
            "[3- 2^2 1+]I",
            "[3- 2^2 1+]II",
        }

    def test_case2_three_orbits(self):
        forms = O.enumerate_real_forms(6, 4, 1)
        assert {str(f.diagram) for f in forms} == {
            "[3- 2^2 1+,3]I",
            "[3- 2^2 1+,3]II",
            "[3+ 2^2 1- 1+,2]",
        }

    def test_impossible_shape(self):
        assert O.enumerate_real_forms(3, 3, 1) == []

    def test_invalid_signature(self):
        with pytest.raises(O.InvalidSignature):
            O.enumerate_real_forms(4, 3, 1)

    def test_closed_under_outer(self):
        forms = {str(f.diagram) for f in O.enumerate_real_forms(4, 4, 1)}
        for f in O.enumerate_real_forms(4, 4, 1):
            for aut in (OuterAut.ZETA, OuterAut.ETA, OuterAut.ZETA_ETA):
                assert str(O.apply_outer_diagram(aut, f.diagram)) in forms

    def test_eta_swaps_signature(self):
        for f in O.enumerate_real_forms(6, 4, 1):
            im = O.apply_outer_diagram(OuterAut.ETA, f.diagram)
            assert im.signature() == (4, 6)


class TestLieTriple:
    @pytest.mark.parametrize(
        "text,left,right",
        [
            ("[3+ 2^2 1-]I", ["2", "1"], ["1", "0"]),
            ("[3+ 2^2 1-]II", ["2", "-1"], ["1", "0"]),
            ("[3+ 2^2 1+]", ["2", "1"], ["1"]),
            ("[3- 2^2 1- 1+,4]", ["1", "0", "0"], ["2", "1"]),
        ],
    )
    def test_h_weight(self, text, left, right):
        lt = O.lie_triple(O.classify_case(O.parse_diagram(text)))
        assert lt.h_weight[0].to_json() == left
        assert lt.h_weight[1].to_json() == right

    def test_jordan_matches_shape(self):
        for a, b, k in [(4, 4, 1), (6, 4, 1), (5, 5, 1), (7, 5, 1), (6, 6, 2)]:
            for f in O.enumerate_real_forms(a, b, k):
                lt = O.lie_triple(f)  # [h,e] = 2e asserted inside
                assert lt.jordan_shape() == f.diagram.shape()


class TestDimension:
    def test_closed_formula(self):
        assert O.orbit_dimension_closed((3, 2, 2, 1)) == 16
        assert O.orbit_dimension_closed((1, 1, 1, 1)) == 0

    def test_example(self):
        cdim, kdim, small = O.orbit_dimension(O.parse_diagram("[3+ 2^2 1-]I"))
        assert (cdim, kdim, small) == (16, 8, True)

    def test_zero_orbit(self):
        cdim, kdim, small = O.orbit_dimension(O.ComplexDiagram((1, 1, 1, 1)))
        assert (cdim, kdim, small) == (0, 0, True)

    @pytest.mark.parametrize("n2", [2, 4, 6, 8])
    def test_oracle_agreement(self, n2):
        for parts in _orthogonal_partitions(n2):
            cd = O.ComplexDiagram(parts)
            assert O.orbit_dimension_closed(parts) == O.centralizer_nullity_dimension(cd)


class TestComponentGroup:
    def test_outer_invariance(self):
        for a, b, k in [(4, 4, 1), (6, 4, 1)]:
            for f in O.enumerate_real_forms(a, b, k):
                tag = O.component_group(f)
                assert O.component_group(O.apply_outer_diagram(OuterAut.ETA, f.diagram)) == tag
                assert O.component_group(O.apply_outer_diagram(OuterAut.ZETA, f.diagram)) == tag

    def test_complex_families(self):
        assert O.component_group(O.parse_diagram("[3 2^2 1]")) == "Z2xZ2"
        assert O.component_group(O.parse_diagram("[3 2^2 1^3]")) == "Z2"
        assert O.component_group(O.parse_diagram("[2^4]")) == "Z2"
        assert O.component_group(O.parse_diagram("[2^2 1^4]")) == "Trivial"


def _orthogonal_partitions(n2):
    from collections import Counter

    out = []

    def rec(rem, mx, cur):
        if rem == 0:
            counts = Counter(p for p in cur if p % 2 == 0)
            if all(v % 2 == 0 for v in counts.values()):
                out.append(tuple(cur))
            return
        for v in range(min(rem, mx), 0, -1):
            rec(rem - v, v, cur + [v])

    rec(n2, n2, [])
    return out


class TestNumerals:
    def test_admits(self):
        assert O.admits_numerals(O.parse_diagram("[3+ 2^2 1-]I"))
        assert O.admits_numerals(O.SignedDiagram.make([(3, -1)] + [(2, 1)] * 2 + [(1, 1)] * 3))
        assert not O.admits_numerals(
            O.SignedDiagram.make([(3, 1)] + [(2, 1)] * 2 + [(1, 1)])
        )
        assert not O.admits_numerals(
            O.SignedDiagram.make([(3, 1)] + [(2, 1)] * 2 + [(1, -1), (1, 1), (1, 1)])
        )


def test_apply_outer_dispatcher():
    from spinorbits.weights import KType

    d = O.parse_diagram("[3+ 2^2 1-]I")
    assert str(O.apply_outer(OuterAut.ETA, d)) == "[3- 2^2 1+]I"
    kt = KType.make([1, 1], [2, 0])
    assert O.apply_outer(OuterAut.ZETA, kt) == KType.make([1, -1], [2, 0])
    with pytest.raises(TypeError):
        O.apply_outer(OuterAut.ZETA, 3)
