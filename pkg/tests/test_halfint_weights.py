import pytest
from hypothesis import given, strategies as st

from spinorbits.halfint import HalfInt, hi
from spinorbits.weights import (
    EtaOnUnequalRanks,
    KType,
    OuterAut,
    Parity,
    Weight,
    apply_outer_weight,
    dual_weight,
    in_root_lattice_D,
    is_dominant,
    parity_class,
)

halfints = st.integers(-40, 40).map(HalfInt)


class TestHalfInt:
    def test_string_roundtrip(self):
        assert str(hi(3)) == "3"
        assert str(HalfInt(3)) == "3/2"
        assert str(HalfInt(-3)) == "-3/2"
        assert HalfInt.parse("3/2") == HalfInt(3)
        assert HalfInt.parse("-2") == hi(-2)

    @given(halfints, halfints, halfints)
    def test_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(halfints)
    def test_string_roundtrip_random(self, a):
        assert HalfInt.parse(str(a)) == a

    def test_integrality(self):
        assert hi(2).is_integer()
        assert not HalfInt(5).is_integer()
        with pytest.raises(ValueError):
            HalfInt(5).as_int()


class TestDominance:
    def test_typeD_boundary(self):
        assert is_dominant(Weight.make([1, -1], "D"))

    def test_typeB_negative_last(self):
        assert not is_dominant(Weight.make([1, -1], "B"))

    def test_half_integral_chain(self):
        assert is_dominant(Weight.make(["3/2", "1/2", "1/2"], "D"))

    def test_non_dominant(self):
        assert not is_dominant(Weight.make([0, 1], "D"))


class TestRootLattice:
    def test_examples(self):
        assert in_root_lattice_D(Weight.make([1, 1, 0, 0], "D"))
        assert not in_root_lattice_D(Weight.make([1, 0, 0, 0], "D"))
        assert not in_root_lattice_D(Weight.make(["1/2"] * 4, "D"))

    @given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
    def test_subgroup_closure(self, coords):
        w = Weight.make(coords, "D")
        if in_root_lattice_D(w):
            double = Weight.make([2 * c for c in coords], "D")
            neg = Weight.make([-c for c in coords], "D")
            assert in_root_lattice_D(double)
            assert in_root_lattice_D(neg)


class TestParity:
    def test_examples(self):
        assert parity_class(KType.make([1, 1], [0, 0])) is Parity.EVEN
        assert parity_class(KType.make([1, 0], [0, 0])) is Parity.ODD
        assert parity_class(KType.make([0, 0], [0, 0])) is Parity.EVEN
        assert parity_class(KType.make(["1/2", "1/2"], [0])) is Parity.ODD
        assert parity_class(KType.make(["1/2"], [0])) is Parity.NON_INTEGRAL


class TestOuterAut:
    def test_zeta_example(self):
        kt = KType.make([1, 1], [2, 0])
        out = apply_outer_weight(OuterAut.ZETA, kt)
        assert out == KType.make([1, -1], [2, 0])

    def test_eta_example(self):
        kt = KType.make([1, 0], [2, 2])
        assert apply_outer_weight(OuterAut.ETA, kt) == KType.make([2, 2], [1, 0])

    def test_identity(self):
        kt = KType.make([1, 0], [2, 2])
        assert apply_outer_weight(OuterAut.IDENTITY, kt) == kt

    def test_eta_rank_mismatch(self):
        kt = KType.make([1, 0], [2, 2, 0])
        with pytest.raises(EtaOnUnequalRanks):
            apply_outer_weight(OuterAut.ETA, kt)

    def test_group_law(self):
        assert OuterAut.ZETA * OuterAut.ZETA is OuterAut.IDENTITY
        assert OuterAut.ETA * OuterAut.ETA is OuterAut.IDENTITY
        assert OuterAut.ZETA * OuterAut.ETA is OuterAut.ZETA_ETA

    @given(
        st.lists(st.integers(-8, 8), min_size=1, max_size=4),
        st.lists(st.integers(-8, 8), min_size=1, max_size=4),
    )
    def test_involutions(self, left, right):
        kt = KType(Weight.make(left, "D"), Weight.make(right, "D"))
        assert apply_outer_weight(OuterAut.ZETA, apply_outer_weight(OuterAut.ZETA, kt)) == kt
        if len(left) == len(right):
            assert apply_outer_weight(OuterAut.ETA, apply_outer_weight(OuterAut.ETA, kt)) == kt


class TestDual:
    def test_dual_spin(self):
        w = Weight.make(["1/2", "1/2", "1/2"], "D")
        assert dual_weight(w) == Weight.make(["1/2", "1/2", "-1/2"], "D")

    def test_dual_even_rank(self):
        w = Weight.make([2, 1], "D")
        assert dual_weight(w) == w

    def test_dual_with_zero(self):
        w = Weight.make([1, 0, 0], "D")
        assert dual_weight(w) == w


class TestJson:
    def test_weight_json(self):
        w = Weight.make(["3/2", "1/2"], "D")
        assert w.to_json() == ["3/2", "1/2"]
        assert Weight.from_json(w.to_json()) == w

    def test_ktype_json(self):
        kt = KType.make(["3/2", "1/2"], [1, 0])
        assert kt.to_json() == {"left": ["3/2", "1/2"], "right": ["1", "0"]}
