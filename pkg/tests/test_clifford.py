import itertools
import random

import pytest

from spinorbits import clifford as C
from spinorbits.orbits import parse_diagram
from spinorbits.weights import KType


@pytest.fixture
def alg():
    a = C.CliffordAlgebra()
    a.add_pair(0, "1")
    a.add_pair(0, "2")
    a.add_unit(0, "v")
    return a


class TestRelations:
    def test_defining_relation(self, alg):
        e1, f1 = alg.gen(0), alg.gen(1)
        assert e1 * f1 + f1 * e1 == alg.scalar(2)

    def test_isotropic_square(self, alg):
        assert (alg.gen(0) * alg.gen(0)).is_zero()

    def test_orthogonal_anticommute(self, alg):
        e1, e2 = alg.gen(0), alg.gen(2)
        assert (e1 * e2 + e2 * e1).is_zero()

    def test_unit_square(self, alg):
        v = alg.gen(4)
        assert v * v == alg.scalar(1)

    def test_associativity_randomized(self, alg):
        rng = random.Random(7)
        gens = [alg.gen(i) for i in range(alg.ngen)]

        def rand_elem():
            out = alg.zero()
            for _ in range(3):
                coeff = C.Gaussian.of(rng.randint(-2, 2), rng.randint(-2, 2))
                mono = alg.scalar(coeff)
                for _ in range(rng.randint(0, 3)):
                    mono = mono * gens[rng.randrange(len(gens))]
                out = out + mono
            return out

        for _ in range(15):
            x, y, z = rand_elem(), rand_elem(), rand_elem()
            assert (x * y) * z == x * (y * z)

    def test_star_antiinvolution(self, alg):
        rng = random.Random(11)
        gens = [alg.gen(i) for i in range(alg.ngen)]

        def rand_elem():
            out = alg.zero()
            for _ in range(3):
                mono = alg.scalar(C.Gaussian.of(rng.randint(-2, 2), rng.randint(-1, 1)))
                for _ in range(rng.randint(0, 3)):
                    mono = mono * gens[rng.randrange(len(gens))]
                out = out + mono
            return out

        for _ in range(10):
            a, b = rand_elem(), rand_elem()
            assert (a * b).star() == b.star() * a.star()
            assert a.star().star() == a

    def test_alpha_on_vectors(self, alg):
        for i in range(alg.ngen):
            assert alg.gen(i).alpha() == -alg.gen(i)

    def test_space_mismatch(self, alg):
        other = C.CliffordAlgebra()
        other.add_pair(0, "1")
        with pytest.raises(C.SpaceMismatch):
            alg.gen(0) * other.gen(0)


class TestPinSpin:
    def test_rho_identity(self, alg):
        one = alg.scalar(1)
        v = alg.gen(0)
        assert C.rho_action(one, v) == v

    def test_rho_E_is_minus_id(self):
        a = C.CliffordAlgebra()
        pairs = [a.add_pair(0, "1"), a.add_pair(0, "2")]
        E = C.build_E_even(a, pairs)
        for i in range(a.ngen):
            assert C.rho_action(E, a.gen(i)) == -a.gen(i)

    def test_rho_rotation_by_pi(self, alg):
        x = alg.scalar(C.Gaussian.of(0, 1)) * C.one_minus_ef(alg, 0, 1)
        assert C.rho_action(x, alg.gen(0)) == -alg.gen(0)
        assert C.rho_action(x, alg.gen(1)) == -alg.gen(1)
        assert C.rho_action(x, alg.gen(2)) == alg.gen(2)

    def test_rho_is_isometry_random(self, alg):
        rng = random.Random(3)
        # Pin elements: products of unit reflections and torus elements
        building_blocks = [
            alg.gen(4),
            alg.scalar(C.Gaussian.of(0, 1)) * C.one_minus_ef(alg, 0, 1),
            alg.scalar(C.Gaussian.of(0, 1)) * C.one_minus_ef(alg, 2, 3),
        ]
        for _ in range(8):
            x = alg.scalar(1)
            for _ in range(rng.randint(1, 4)):
                x = x * building_blocks[rng.randrange(len(building_blocks))]
            assert C.in_pin(x)
            vecs = []
            for _ in range(2):
                v = alg.zero()
                for i in range(alg.ngen):
                    v = v + alg.gen(i).scale(rng.randint(-2, 2))
                vecs.append(v)
            v1, v2 = vecs
            w1, w2 = C.rho_action(x, v1), C.rho_action(x, v2)
            assert C.q_pairing(w1, w2) == C.q_pairing(v1, v2)

    def test_not_in_v(self, alg):
        bad = alg.gen(0) + alg.scalar(1)  # mixed parity, not in Pin
        with pytest.raises(C.NotInV):
            C.rho_action(bad, alg.gen(1))

    def test_in_pin(self, alg):
        x = alg.scalar(C.Gaussian.of(0, 1)) * C.one_minus_ef(alg, 0, 1)
        assert C.in_pin(x)
        assert C.in_pin(alg.gen(4))  # unit vector reflection
        assert not C.in_pin(alg.gen(0))  # isotropic vector
        assert not C.in_pin(alg.gen(0) + alg.scalar(1))


class TestEElements:
    def test_E4_E6_squares(self):
        a4 = C.CliffordAlgebra()
        p4 = [a4.add_pair(0, str(i)) for i in range(2)]
        assert C.build_E_even(a4, p4) * C.build_E_even(a4, p4) == a4.scalar(1)
        a6 = C.CliffordAlgebra()
        p6 = [a6.add_pair(0, str(i)) for i in range(3)]
        assert C.build_E_even(a6, p6) * C.build_E_even(a6, p6) == -a6.scalar(1)

    def test_E3_E1_anticommute(self):
        a = C.CliffordAlgebra()
        pr = a.add_pair(0, "1")
        v3 = a.add_unit(0, "v3")
        v1 = a.add_unit(0, "v1")
        E3 = C.build_E_odd(a, v3, [pr])
        E1 = C.build_E_odd(a, v1, [])
        assert E3 * E1 == -(E1 * E3)

    def test_E_odd_square(self):
        for k in (0, 1, 2):
            a = C.CliffordAlgebra()
            pairs = [a.add_pair(0, str(i)) for i in range(k)]
            v = a.add_unit(0, "v")
            E = C.build_E_odd(a, v, pairs)
            assert E * E == a.scalar((-1) ** k)

    def test_E_acts_minus_id_on_block(self):
        a = C.CliffordAlgebra()
        pr = a.add_pair(0, "1")
        v = a.add_unit(0, "v")
        extra = a.add_unit(0, "w")
        E = C.build_E_odd(a, v, [pr])
        for i in (pr[0], pr[1], v):
            assert C.rho_action(E, a.gen(i)) == -a.gen(i)
        assert C.rho_action(E, a.gen(extra)) == a.gen(extra)


class TestCenters:
    def test_spin_centers(self):
        assert C.center_of_spin(4).iso_class == "Z2xZ2"
        assert C.center_of_spin(3).iso_class == "Z4"
        assert C.center_of_spin(2).iso_class == "Z2xZ2"

    def test_pair_centers(self):
        assert C.center_of_spin_pair(4, 4).iso_class == "Z2xZ2xZ2"
        assert C.center_of_spin_pair(6, 4).iso_class == "Z2xZ4"
        assert C.center_of_spin_pair(6, 6).iso_class == "Z2xZ4"
        assert C.center_of_spin_pair(5, 3).iso_class == "Z2xZ2"

    def test_exp_formula(self):
        for n in (1, 2, 3):
            assert C.verify_exp_formula(n)


class TestCentralCharacter:
    def test_minus_I_on_mu1(self):
        mu1 = KType.make(["1/2", "1/2"], [0, 0])
        assert C.central_character(mu1, -1, 1, False) == C.Gaussian.of(-1)

    def test_integral_factors_through_SO(self):
        mu = KType.make([1, 0], [2, 1])
        assert C.central_character(mu, -1, -1, False) == C.Gaussian.of(1)

    def test_twisted_value(self):
        mu1 = KType.make(["1/2", "1/2"], [0, 0])
        # i^{2 sum} with sum = 1
        assert C.central_character(mu1, 1, 1, True) == C.Gaussian.of(-1)

    def test_genuineness(self):
        assert C.genuineness(KType.make([1, 0], [2, 1])) == C.Genuineness.FACTORS_SO
        assert C.genuineness(KType.make(["1/2", "1/2"], ["3/2", "1/2"])) == C.Genuineness.FACTORS_SPIN
        assert C.genuineness(KType.make([1, 0], ["3/2", "1/2"])) == C.Genuineness.GENUINE


class TestTrigRing:
    def test_circle_relation(self):
        c, s = C.TrigPoly.c(), C.TrigPoly.s()
        rel = c * c + s * s - C.TrigPoly.const(C.G_ONE)
        assert rel.is_zero()

    def test_evaluate(self):
        c, s = C.TrigPoly.c(), C.TrigPoly.s()
        poly = c * c - s + C.TrigPoly.const(C.Gaussian.of(0, 1))
        val = poly.evaluate(C.Gaussian.of(0), C.G_ONE)
        assert val == C.Gaussian.of(-1, 1)


CASES = [
    ("[3+ 2^2 1-]I", "Z2xZ2"),
    ("[3+ 2^2 1-]II", "Z2xZ2"),
    ("[3- 2^2 1+]II", "Z2xZ2"),
    ("[3- 2^2 1+,3]I", "Z2"),
    ("[3+ 2^2 1- 1+,2]", "Z2"),
    ("[3+ 2^2 1-,3]II", "Z2"),
    ("[3- 2^2 1+ 1-,2]", "Z2"),
    ("[3+ 2^2 1+ 1-,2]", "Z2"),
    ("[3- 2^2 1- 1+,2]", "Z2"),
    ("[3+ 2^2 1+]", "Z2"),
    ("[3- 2^2 1-]", "Z2"),
    ("[3+ 2^2 1+,3]", "Trivial"),
    ("[3- 2^4 1-,5]", "Trivial"),
    ("[3- 2^2 1- 1+,4]", "Z2"),
    ("[3+ 2^4 1+ 1-,4]", "Z2"),
]


class TestComponentReps:
    @pytest.mark.parametrize("text,expected", CASES)
    def test_signed(self, text, expected):
        report = C.verify_component_reps(parse_diagram(text))
        assert report["claimed"] == expected
        assert report["computed"] == expected
        assert report["ok"]

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("[3 2^2 1]", "Z2xZ2"),
            ("[3 2^2 1^3]", "Z2"),
            ("[2^4]", "Z2"),
            ("[2^6]", "Z2"),
            ("[2^2 1^4]", "Trivial"),
            ("[3 2^4 1]", "Z2xZ2"),
        ],
    )
    def test_complex(self, text, expected):
        report = C.verify_component_reps(parse_diagram(text))
        assert report["computed"] == expected
        assert report["ok"]

    def test_path_checks_symbolic(self):
        report = C.verify_component_reps(parse_diagram("[3+ 2^2 1-]I"))
        assert all(pc["in_spin"] and pc["centralizes"] for pc in report["pathChecks"])


class TestSpinElement:
    def test_wrap_accepts_spin(self, alg):
        x = alg.scalar(C.Gaussian.of(0, 1)) * C.one_minus_ef(alg, 0, 1)
        se = C.SpinElement.wrap(x)
        assert se.parity_checked

    def test_wrap_rejects_odd(self, alg):
        with pytest.raises(ValueError):
            C.SpinElement.wrap(alg.gen(4))

    def test_generator_cap(self):
        a = C.CliffordAlgebra()
        for i in range(8):
            a.add_pair(0, str(i))
        with pytest.raises(ValueError):
            a.add_unit(0, "v")


def test_clifford_mul_alias(alg):
    assert C.clifford_mul(alg.gen(0), alg.gen(1)) == alg.gen(0) * alg.gen(1)


def test_spin_lie_basis_brackets():
    a = C.CliffordAlgebra()
    pairs = [a.add_pair(0, str(i)) for i in range(2)]
    E = C.build_E_even(a, pairs)
    for x in C.spin_lie_basis(a):
        assert E.commutator(x).is_zero()
