"""Closed-form K-type spectra: regular sections, the representation spectra,
the matchup tables, restriction from the odd Spin groups, the BGG check and
the derived-functor construction spectra.

All spectra here are interleaving patterns on a pair (beta, delta) of
integer or half-integer dominant strings; a SpectrumPattern captures the
shape (which side carries beta, the shift on the weight and on the chain,
zero padding, negated last entry, integrality classes, parity).  Enumeration
is driven by the chain, so it is linear in the output size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .halfint import HalfInt, hi
from .weights import KType, OuterAut, Weight, apply_outer_weight, is_dominant
from . import orbits as _orb
from .orbits import OrbitCase, SignedDiagram


class KOutOfRange(ValueError):
    pass


class RegimeMismatch(ValueError):
    pass


class MatchupFailure(AssertionError):
    pass


class VariantUnavailable(ValueError):
    pass


def infl_char(n: int, k: int) -> Weight:
    """(n-k-2, ..., 1, 0; k+1/2, ..., 3/2, 1/2), defined for 0 < k <= n/2-1."""
    if not (0 < k and 2 * k <= n - 2):
        raise KOutOfRange(f"need 0 < k <= n/2 - 1, got n={n}, k={k}")
    ints = [hi(v) for v in range(n - k - 2, -1, -1)]
    halves = [HalfInt(2 * v + 1) for v in range(k, -1, -1)]
    return Weight(tuple(ints + halves), "D")


def sum_parity(total_doubled: int) -> str:
    """Parity class of a coordinate sum given its doubled value.

    Integral sums: even/odd as usual.  Half-integral sums (doubled odd) are
    classified by their root-lattice coset; the fixed convention maps
    doubled = 1 mod 4 to "even" and 3 mod 4 to "odd".
    """
    return "even" if total_doubled % 4 in (0, 1) else "odd"


def _ranks(signature: tuple[int, int]) -> tuple[int, str, int, str]:
    a, b = signature
    return a // 2, ("D" if a % 2 == 0 else "B"), b // 2, ("D" if b % 2 == 0 else "B")


@dataclass(frozen=True)
class SpectrumPattern:
    signature: tuple[int, int]
    beta_side: str  # "L" or "R"
    beta_len: int
    delta_len: int
    beta_class: int  # doubled coordinate parity: 0 = integers, 1 = half-integers
    delta_class: int
    weight_shift: HalfInt
    chain_shift: HalfInt
    negate_last: bool = False
    beta_pad: int = 0
    delta_pad: int = 0
    parity: str | None = None  # None, "even", "odd"
    conjectural: bool = False

    def ambients(self) -> tuple[int, str, int, str]:
        return _ranks(self.signature)

    # -- membership ----------------------------------------------------

    def extract(self, v: KType):
        """(beta, delta) doubled-coordinate lists, or None if v does not
        match the template (ranks, classes, padding, negation, dominance)."""
        lrank, lamb, rrank, ramb = self.ambients()
        if v.left.rank != lrank or v.right.rank != rrank:
            return None
        if v.left.ambient != lamb or v.right.ambient != ramb:
            return None
        if not v.is_dominant():
            return None
        bw = v.left if self.beta_side == "L" else v.right
        dw = v.right if self.beta_side == "L" else v.left
        bvals = [c.twice for c in bw.coords]
        dvals = [c.twice for c in dw.coords]
        if len(bvals) != self.beta_len + self.beta_pad:
            return None
        if len(dvals) != self.delta_len + self.delta_pad:
            return None
        if any(x != 0 for x in bvals[self.beta_len:]):
            return None
        if any(x != 0 for x in dvals[self.delta_len:]):
            return None
        sh = self.weight_shift.twice
        beta = [x - sh for x in bvals[: self.beta_len]]
        if self.negate_last:
            beta[-1] = -bvals[self.beta_len - 1] - sh
            if bvals[self.beta_len - 1] >= 0:
                # the negated template needs a strictly negative last entry
                # unless it coincides with the unnegated one (never in the
                # genuine half-integer classes used here)
                return None
        delta = list(dvals[: self.delta_len])
        if any(x % 2 != self.beta_class for x in beta):
            return None
        if any(x % 2 != self.delta_class for x in delta):
            return None
        return beta, delta

    def chain_holds(self, beta: list[int], delta: list[int]) -> bool:
        cs = self.chain_shift.twice
        P, D = self.beta_len, self.delta_len
        if D == P:
            for i in range(P):
                if not (beta[i] + cs >= delta[i]):
                    return False
                if i + 1 < P and not (delta[i] >= beta[i + 1] + cs):
                    return False
            return beta[P - 1] + cs >= abs(delta[P - 1])
        if D == P - 1:
            for i in range(D):
                if not (beta[i] + cs >= delta[i] >= beta[i + 1] + cs):
                    return False
            return True
        raise ValueError("unsupported chain shape")

    def parity_offset(self) -> int:
        """Doubled coordinate sum of the minimal (all-smallest) member's
        parameters; the "even" piece is the one in its root-lattice coset,
        which keeps index 1 on the piece containing the defining K-type for
        every rank."""
        return self.beta_class * self.beta_len + self.delta_class * self.delta_len

    def membership(self, v: KType) -> int:
        ext = self.extract(v)
        if ext is None:
            return 0
        beta, delta = ext
        if not self.chain_holds(beta, delta):
            return 0
        if self.parity is not None:
            if sum_parity(sum(beta) + sum(delta) - self.parity_offset()) != self.parity:
                return 0
        return 1

    # -- enumeration ----------------------------------------------------

    def build(self, beta: list[int], delta: list[int]) -> KType:
        sh = self.weight_shift.twice
        bvals = [x + sh for x in beta]
        if self.negate_last:
            bvals[-1] = -bvals[-1]
        bvals += [0] * self.beta_pad
        dvals = list(delta) + [0] * self.delta_pad
        lrank, lamb, rrank, ramb = self.ambients()
        if self.beta_side == "L":
            left, right = bvals, dvals
        else:
            left, right = dvals, bvals
        return KType(
            Weight.from_doubled(tuple(left), lamb),
            Weight.from_doubled(tuple(right), ramb),
        )

    def enumerate(self, bound: int) -> list[KType]:
        """All members with doubled sup-norm <= bound, lexicographically
        sorted; multiplicity one is structural and asserted."""
        sh = self.weight_shift.twice
        cs = self.chain_shift.twice
        b_hi = bound - sh
        b_lo = -bound - sh
        out = []
        P, D = self.beta_len, self.delta_len

        def gen_beta(i: int, prev: int, cur: list[int]):
            if i == P:
                for delta in gen_delta(cur):
                    v = self.build(cur, delta)
                    if v.sup_doubled() <= bound and self.membership(v):
                        out.append(v)
                return
            hi_b = min(prev, b_hi)
            lo_b = b_lo
            start = hi_b - ((hi_b - self.beta_class) % 2)
            x = start
            while x >= lo_b:
                gen_beta(i + 1, x, cur + [x])
                x -= 2

        def gen_delta(beta: list[int]):
            slots = []
            for i in range(D):
                top = min(beta[i] + cs, bound)
                if i + 1 < P:
                    bot = beta[i + 1] + cs
                elif D == P:
                    bot = -(beta[P - 1] + cs)
                else:
                    bot = None
                if D == P and i == D - 1:
                    bot = max(-(beta[P - 1] + cs), -bound)
                elif bot is None:
                    bot = -bound
                else:
                    bot = max(bot, -bound)
                slots.append((bot, top))
            def rec(i, cur):
                if i == D:
                    yield cur
                    return
                bot, top = slots[i]
                start = top - ((top - self.delta_class) % 2)
                x = start
                while x >= bot:
                    yield from rec(i + 1, cur + [x])
                    x -= 2
            yield from rec(0, [])

        gen_beta(0, b_hi, [])
        dedup = sorted(set(out), reverse=True)
        assert len(dedup) == len(out), "multiplicity-one violation"
        return dedup


@dataclass(frozen=True)
class PsiChar:
    orbit: str  # diagram string
    name: str
    chi: HalfInt
    defining_ktype: KType | None
    pattern: SpectrumPattern
    auto: OuterAut = OuterAut.IDENTITY

    def membership(self, v: KType) -> int:
        return self.pattern.membership(apply_outer_weight(self.auto, v))

    def enumerate(self, bound: int) -> list[KType]:
        return sorted(
            (apply_outer_weight(self.auto, v) for v in self.pattern.enumerate(bound)),
            reverse=True,
        )


@dataclass(frozen=True)
class RepId:
    case_id: int
    signature: tuple[int, int]
    k: int
    name: str
    pattern: SpectrumPattern
    conjectural: bool = False

    def membership(self, v: KType) -> int:
        return self.pattern.membership(v)

    def enumerate(self, bound: int) -> list[KType]:
        return self.pattern.enumerate(bound)


@dataclass
class MatchupCell:
    rep: str
    orbit: str
    psis: list[str]


@dataclass
class CaseSpectra:
    """Everything the matchup needs for one case family."""

    case: OrbitCase
    reps: dict[str, RepId]
    columns: list[tuple[str, OuterAut, dict[str, PsiChar]]]
    rows: list[tuple[str, list[MatchupCell]]]

    def psi_list(self) -> list[PsiChar]:
        return [p for _, _, psis in self.columns for p in psis.values()]

    def rep(self, name: str) -> RepId:
        return self.reps[name]

    def find_psi(self, orbit: str, name: str) -> PsiChar:
        for o, _, psis in self.columns:
            if o == orbit and name in psis:
                return psis[name]
        raise KeyError((orbit, name))


def _kt(left, right, lamb, ramb) -> KType:
    return KType(Weight.make(left, lamb), Weight.make(right, ramb))


@lru_cache(maxsize=None)
def case_spectra(oc: OrbitCase) -> CaseSpectra:
    builders = {
        1: _case1,
        2: _case23,
        3: _case23,
        4: _case4,
        5: _case56,
        6: _case56,
        7: _case78,
        8: _case78,
    }
    return builders[oc.case_id](oc)


def _mk_rep(oc, name, pattern, conjectural=False) -> RepId:
    return RepId(oc.case_id, oc.signature, oc.k, name, pattern, conjectural)


def _case1(oc: OrbitCase) -> CaseSpectra:
    a, b = oc.signature
    p = a // 2
    half = hi("1/2")

    def pat(side, cls, neg, par):
        return SpectrumPattern(
            (a, b), side, p, p, cls, cls, half, hi(0), negate_last=neg, parity=par
        )

    spec = {
        "pi1": ("L", 0, False, "even"),
        "pi2": ("L", 0, False, "odd"),
        "tau1": ("L", 0, True, "odd"),
        "tau2": ("L", 0, True, "even"),
        "sigma3": ("L", 1, False, "even"),
        "sigma4": ("L", 1, False, "odd"),
        "xi3": ("L", 1, True, "even"),
        "xi4": ("L", 1, True, "odd"),
        "pi3": ("R", 0, False, "even"),
        "pi4": ("R", 0, False, "odd"),
        "tau3": ("R", 0, True, "odd"),
        "tau4": ("R", 0, True, "even"),
        "sigma1": ("R", 1, False, "even"),
        "sigma2": ("R", 1, False, "odd"),
        "xi1": ("R", 1, True, "even"),
        "xi2": ("R", 1, True, "odd"),
    }
    reps = {name: _mk_rep(oc, name, pat(*args)) for name, args in spec.items()}

    base = SignedDiagram.make([(3, 1)] + [(2, 1)] * (2 * oc.k) + [(1, -1)], "I")
    chi = hi("-1/2")
    nus = {
        "psi1": _kt(["1/2"] * p, [0] * p, "D", "D"),
        "psi2": _kt(["3/2"] + ["1/2"] * (p - 1), [0] * p, "D", "D"),
        "psi3": _kt([1] * p, ["1/2"] * p, "D", "D"),
        "psi4": _kt([1] * p, ["1/2"] * (p - 1) + ["-1/2"], "D", "D"),
    }
    base_psis = {
        "psi1": pat("L", 0, False, "even"),
        "psi2": pat("L", 0, False, "odd"),
        "psi3": pat("L", 1, False, "even"),
        "psi4": pat("L", 1, False, "odd"),
    }

    def column(auto: OuterAut):
        dia = _orb.apply_outer_diagram(auto, base)
        psis = {
            name: PsiChar(str(dia), name, chi, nus[name], base_psis[name], auto)
            for name in base_psis
        }
        return (str(dia), auto, psis)

    columns = [
        column(OuterAut.IDENTITY),
        column(OuterAut.ZETA),
        column(OuterAut.ETA),
        column(OuterAut.ZETA_ETA),
    ]
    col = [c[0] for c in columns]
    rows = [
        ("chi1", [MatchupCell("pi1", col[0], ["psi1"]), MatchupCell("tau1", col[1], ["psi2"]),
                  MatchupCell("sigma1", col[2], ["psi3"]), MatchupCell("xi1", col[3], ["psi4"])]),
        ("chi2", [MatchupCell("pi2", col[0], ["psi2"]), MatchupCell("tau2", col[1], ["psi1"]),
                  MatchupCell("sigma2", col[2], ["psi4"]), MatchupCell("xi2", col[3], ["psi3"])]),
        ("chi3", [MatchupCell("sigma3", col[0], ["psi3"]), MatchupCell("xi3", col[1], ["psi4"]),
                  MatchupCell("pi3", col[2], ["psi1"]), MatchupCell("tau3", col[3], ["psi2"])]),
        ("chi4", [MatchupCell("sigma4", col[0], ["psi4"]), MatchupCell("xi4", col[1], ["psi3"]),
                  MatchupCell("pi4", col[2], ["psi2"]), MatchupCell("tau4", col[3], ["psi1"])]),
    ]
    return CaseSpectra(oc, reps, columns, rows)


def _case23(oc: OrbitCase) -> CaseSpectra:
    """Case 2 (a > b) and its mirror case 3 (a < b); the shifted side is the
    deficient one, tau carries the chain shift r -/+ 1/2 on the weightless
    side."""
    a, b = oc.signature
    mirror = oc.case_id == 3
    r = oc.r_minus if mirror else oc.r_plus
    big, small = (b, a) if mirror else (a, b)
    P, Q = big // 2, small // 2  # P = k+1+r, Q = k+1
    pad = P - Q
    up = HalfInt(2 * r + 1)  # r + 1/2
    dn = HalfInt(2 * r - 1)  # r - 1/2
    z = hi(0)

    def side(s):  # beta side in group order
        if not mirror:
            return s
        return "L" if s == "R" else "R"

    def pat(beta_on, blen, dlen, bcls, dcls, ws, cs, neg, bpad, dpad, par, conj=False):
        return SpectrumPattern(
            (a, b), side(beta_on), blen, dlen, bcls, dcls, ws, cs,
            negate_last=neg, beta_pad=bpad, delta_pad=dpad, parity=par,
            conjectural=conj,
        )

    reps = {
        "pi1": _mk_rep(oc, "pi1", pat("R", Q, Q, 0, 0, up, z, False, 0, pad, "even")),
        "pi2": _mk_rep(oc, "pi2", pat("R", Q, Q, 0, 0, up, z, False, 0, pad, "odd")),
        "sigma1": _mk_rep(oc, "sigma1", pat("R", Q, Q, 0, 0, up, z, True, 0, pad, "odd")),
        "sigma2": _mk_rep(oc, "sigma2", pat("R", Q, Q, 0, 0, up, z, True, 0, pad, "even")),
        "tau1": _mk_rep(oc, "tau1", pat("L", Q, Q, 0, 1, z, dn, False, pad, 0, "even")),
        "tau2": _mk_rep(oc, "tau2", pat("L", Q, Q, 0, 1, z, dn, False, pad, 0, "odd")),
    }

    sgn = "-" if not mirror else "+"
    osg = "+" if not mirror else "-"
    dia_I = SignedDiagram.make(
        [(3, -1 if not mirror else 1)] + [(2, 1)] * (2 * oc.k)
        + [(1, 1 if not mirror else -1)] * (2 * r + 1),
        "I",
    )
    dia_II = SignedDiagram(dia_I.rows, "II")
    dia_B = SignedDiagram.make(
        [(3, 1 if not mirror else -1)] + [(2, 1)] * (2 * oc.k)
        + [(1, -1 if not mirror else 1)] + [(1, 1 if not mirror else -1)] * (2 * r),
    )
    chiA = HalfInt(-(2 * r + 1))  # -r - 1/2
    chiB = dn  # r - 1/2
    if not mirror:
        nu1 = _kt([0] * P, [str(up)] * Q, "D", "D")
        nu2 = _kt([0] * P, [str(HalfInt(2 * r + 3))] + [str(up)] * (Q - 1), "D", "D")
        ph1 = _kt([0] * P, [str(dn)] * Q, "D", "D")
        ph2 = _kt([0] * P, [str(dn)] * (Q - 1) + [str(-dn)], "D", "D")
    else:
        nu1 = _kt([str(up)] * Q, [0] * P, "D", "D")
        nu2 = _kt([str(HalfInt(2 * r + 3))] + [str(up)] * (Q - 1), [0] * P, "D", "D")
        ph1 = _kt([str(dn)] * Q, [0] * P, "D", "D")
        ph2 = _kt([str(dn)] * (Q - 1) + [str(-dn)], [0] * P, "D", "D")

    col0 = (
        str(dia_I),
        OuterAut.IDENTITY,
        {
            "psi1": PsiChar(str(dia_I), "psi1", chiA, nu1, reps["pi1"].pattern),
            "psi2": PsiChar(str(dia_I), "psi2", chiA, nu2, reps["pi2"].pattern),
        },
    )
    col1 = (
        str(dia_II),
        OuterAut.ZETA,
        {
            "psi1": PsiChar(str(dia_II), "psi1", chiA, nu1, reps["pi1"].pattern, OuterAut.ZETA),
            "psi2": PsiChar(str(dia_II), "psi2", chiA, nu2, reps["pi2"].pattern, OuterAut.ZETA),
        },
    )
    col2 = (
        str(dia_B),
        OuterAut.IDENTITY,
        {
            "phi1": PsiChar(str(dia_B), "phi1", chiB, ph1, reps["tau1"].pattern),
            "phi2": PsiChar(str(dia_B), "phi2", chiB, ph2, reps["tau2"].pattern),
        },
    )
    rows = [
        ("chi1", [MatchupCell("pi1", col0[0], ["psi1"]), MatchupCell("sigma1", col1[0], ["psi2"]),
                  MatchupCell("tau1", col2[0], ["phi1"])]),
        ("chi2", [MatchupCell("pi2", col0[0], ["psi2"]), MatchupCell("sigma2", col1[0], ["psi1"]),
                  MatchupCell("tau2", col2[0], ["phi2"])]),
    ]
    return CaseSpectra(oc, reps, [col0, col1, col2], rows)


def _case4(oc: OrbitCase) -> CaseSpectra:
    a, b = oc.signature
    P = a // 2
    half = hi("1/2")

    def pat(side, par, conj):
        return SpectrumPattern(
            (a, b), side, P, P, 0, 0, half, hi(0), parity=par, conjectural=conj
        )

    reps = {
        "pi1": _mk_rep(oc, "pi1", pat("L", None, False)),
        "pi1e": _mk_rep(oc, "pi1e", pat("L", "even", True), conjectural=True),
        "pi1o": _mk_rep(oc, "pi1o", pat("L", "odd", True), conjectural=True),
        "pi2": _mk_rep(oc, "pi2", pat("R", None, False)),
        "pi2e": _mk_rep(oc, "pi2e", pat("R", "even", True), conjectural=True),
        "pi2o": _mk_rep(oc, "pi2o", pat("R", "odd", True), conjectural=True),
    }
    dia = SignedDiagram.make([(3, 1)] + [(2, 1)] * (2 * oc.k) + [(1, 1), (1, -1), (1, -1)])
    dia_eta = _orb.apply_outer_diagram(OuterAut.ETA, dia)
    chi = hi("-1/2")
    nu1 = _kt(["1/2"] * P, [0] * P, "B", "B")
    nu2 = _kt(["3/2"] + ["1/2"] * (P - 1), [0] * P, "B", "B")
    col0 = (
        str(dia),
        OuterAut.IDENTITY,
        {
            "psi1": PsiChar(str(dia), "psi1", chi, nu1, reps["pi1e"].pattern),
            "psi2": PsiChar(str(dia), "psi2", chi, nu2, reps["pi1o"].pattern),
        },
    )
    col1 = (
        str(dia_eta),
        OuterAut.ETA,
        {
            "psi1": PsiChar(str(dia_eta), "psi1", chi, nu1, reps["pi1e"].pattern, OuterAut.ETA),
            "psi2": PsiChar(str(dia_eta), "psi2", chi, nu2, reps["pi1o"].pattern, OuterAut.ETA),
        },
    )
    rows = [
        ("chi1", [MatchupCell("pi1", col0[0], ["psi1", "psi2"])]),
        ("chi2", [MatchupCell("pi2", col1[0], ["psi1", "psi2"])]),
    ]
    return CaseSpectra(oc, reps, [col0, col1], rows)


def _case56(oc: OrbitCase) -> CaseSpectra:
    a, b = oc.signature
    mirror = oc.case_id == 6
    r = oc.r_minus if mirror else oc.r_plus
    k = oc.k
    big, small = (b, a) if mirror else (a, b)
    P = big // 2  # k + 1 + r
    half = hi("1/2")
    up = HalfInt(2 * r + 1)

    def side(s):
        if not mirror:
            return s
        return "L" if s == "R" else "R"

    dia = SignedDiagram.make(
        [(3, 1 if not mirror else -1)] + [(2, 1)] * (2 * k)
        + [(1, 1 if not mirror else -1)] * (2 * r + 1)
    )
    if r == 0:
        p1 = SpectrumPattern((a, b), side("L"), k + 1, k, 0, 1, hi(0), half)
        p2 = SpectrumPattern((a, b), side("L"), k + 1, k, 1, 0, hi(0), half)
        reps = {
            "pi1": _mk_rep(oc, "pi1", p1),
            "pi2": _mk_rep(oc, "pi2", p2),
        }
        chi = half
        if not mirror:
            nu1 = _kt([0] * (k + 1), ["1/2"] * k, "B", "B")
            nu2 = _kt(["1/2"] * (k + 1), [1] * k, "B", "B")
        else:
            nu1 = _kt(["1/2"] * k, [0] * (k + 1), "B", "B")
            nu2 = _kt([1] * k, ["1/2"] * (k + 1), "B", "B")
        col0 = (
            str(dia),
            OuterAut.IDENTITY,
            {
                "psi1": PsiChar(str(dia), "psi1", chi, nu1, p1),
                "psi2": PsiChar(str(dia), "psi2", chi, nu2, p2),
            },
        )
        rows = [
            ("chi1", [MatchupCell("pi1", col0[0], ["psi1"])]),
            ("chi2", [MatchupCell("pi2", col0[0], ["psi2"])]),
        ]
        return CaseSpectra(oc, reps, [col0], rows)
    pt = SpectrumPattern(
        (a, b), side("L"), k + 1, k, 0, 1, hi(0), up, beta_pad=r
    )
    reps = {"pi": _mk_rep(oc, "pi", pt)}
    col0 = (
        str(dia),
        OuterAut.IDENTITY,
        {"det": PsiChar(str(dia), "det", up, None, pt)},
    )
    rows = [("chi1", [MatchupCell("pi", col0[0], ["det"])])]
    return CaseSpectra(oc, reps, [col0], rows)


def _case78(oc: OrbitCase) -> CaseSpectra:
    a, b = oc.signature
    mirror = oc.case_id == 8
    r = oc.r_minus if mirror else oc.r_plus
    k = oc.k
    dn = HalfInt(2 * r - 1)

    def side(s):
        if not mirror:
            return s
        return "L" if s == "R" else "R"

    def pat(par, conj=False):
        return SpectrumPattern(
            (a, b), side("R"), k + 1, k + 1, 0, 0, dn, hi(0),
            delta_pad=r - 1, parity=par, conjectural=conj,
        )

    reps = {
        "pi": _mk_rep(oc, "pi", pat(None)),
        "pie": _mk_rep(oc, "pie", pat("even", True), conjectural=True),
        "pio": _mk_rep(oc, "pio", pat("odd", True), conjectural=True),
    }
    dia = SignedDiagram.make(
        [(3, -1 if not mirror else 1)] + [(2, 1)] * (2 * k)
        + [(1, -1 if not mirror else 1)] + [(1, 1 if not mirror else -1)] * (2 * r)
    )
    chi = HalfInt(-(2 * r - 1))
    if not mirror:
        nu1 = _kt([0] * (k + r), [str(dn)] * (k + 1), "B", "B")
        nu2 = _kt([0] * (k + r), [str(HalfInt(2 * r + 1))] + [str(dn)] * k, "B", "B")
    else:
        nu1 = _kt([str(dn)] * (k + 1), [0] * (k + r), "B", "B")
        nu2 = _kt([str(HalfInt(2 * r + 1))] + [str(dn)] * k, [0] * (k + r), "B", "B")
    col0 = (
        str(dia),
        OuterAut.IDENTITY,
        {
            "psi1": PsiChar(str(dia), "psi1", chi, nu1, reps["pie"].pattern),
            "psi2": PsiChar(str(dia), "psi2", chi, nu2, reps["pio"].pattern),
        },
    )
    rows = [("chi1", [MatchupCell("pi", col0[0], ["psi1", "psi2"])])]
    return CaseSpectra(oc, reps, [col0], rows)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def psi_list(oc: OrbitCase) -> list[PsiChar]:
    return case_spectra(oc).psi_list()


def sections_membership(oc: OrbitCase, psi: PsiChar, v: KType) -> int:
    if not v.genuine():
        return 0
    return psi.membership(v)


def enumerate_sections(oc: OrbitCase, psi: PsiChar, bound: int) -> list[KType]:
    return psi.enumerate(bound)


def rep_spectrum_membership(rep: RepId, v: KType) -> int:
    if not v.genuine():
        return 0
    return rep.membership(v)


def central_char_tag(v: KType) -> tuple:
    """Discriminant of the central character: which side is half-integral,
    plus (for even signatures) the i-power on the twisted center elements."""
    left_half = 0 if v.left.all_integral() else 1
    a = v.left.rank * 2 if v.left.ambient == "D" else v.left.rank * 2 + 1
    b = v.right.rank * 2 if v.right.ambient == "D" else v.right.rank * 2 + 1
    if a % 2 == 0:
        total = (v.left.coord_sum() + v.right.coord_sum()).twice % 4
        return (left_half, total)
    return (left_half,)


@dataclass
class MatchupReport:
    case_id: int
    signature: tuple[int, int]
    bound: int
    rows: list[dict]
    central_rows: list[dict]
    ok: bool


def matchup_verify(oc: OrbitCase, bound: int, strict: bool = True) -> MatchupReport:
    """Enumerate both sides of every table cell up to the bound and check
    multiset equality; also check central-character constancy along rows
    (reported, not asserted, for the cross-column tau comparisons of
    cases 2/3, whose tau-column shifts make that comparison convention
    sensitive)."""
    cs = case_spectra(oc)
    rows_out = []
    central_rows = []
    all_ok = True
    for chi_label, cells in cs.rows:
        row_cells = []
        row_tags = []
        for cell in cells:
            rep = cs.rep(cell.rep)
            lhs = rep.enumerate(bound)
            rhs: list[KType] = []
            for pname in cell.psis:
                rhs.extend(cs.find_psi(cell.orbit, pname).enumerate(bound))
            eq = sorted(lhs) == sorted(rhs)
            all_ok = all_ok and eq
            if strict and not eq:
                diff = set(lhs) ^ set(rhs)
                raise MatchupFailure(
                    f"case {oc.case_id} {chi_label}: {cell.rep} vs R({cell.orbit}, "
                    f"{'+'.join(cell.psis)}) differ; first: {sorted(diff)[:1]}"
                )
            tags = {central_char_tag(v) for v in lhs}
            row_cells.append(
                {
                    "rep": cell.rep,
                    "orbit": cell.orbit,
                    "psis": cell.psis,
                    "equal": eq,
                    "count": len(lhs),
                    "conjectural": rep.conjectural,
                }
            )
            row_tags.append((cell.rep, sorted(tags)))
        same = len({tuple(t) for _, t in row_tags if t}) <= 1
        central_rows.append(
            {
                "row": chi_label,
                "tags": [
                    {"rep": r, "tags": [list(x) for x in t]} for r, t in row_tags
                ],
                "constant": same,
                "asserted": oc.case_id not in (2, 3),
            }
        )
        if strict and oc.case_id not in (2, 3) and not same:
            raise MatchupFailure(f"case {oc.case_id} {chi_label}: central characters differ")
        rows_out.append({"row": chi_label, "cells": row_cells})
    return MatchupReport(oc.case_id, oc.signature, bound, rows_out, central_rows, all_ok)


# ---------------------------------------------------------------------------
# Interleaving-chain membership and the ell <= 1 recomputation (case 1 geometry)
# ---------------------------------------------------------------------------


def thm37_membership(p: int, chi: HalfInt, v: KType) -> int:
    """a1+chi >= b1 >= a2+chi >= ... >= a_p+chi >= |b_p| for V(a | b)."""
    if v.left.rank != p or v.right.rank != p or not v.is_dominant() or not v.genuine():
        return 0
    a = [c.twice for c in v.left.coords]
    b = [c.twice for c in v.right.coords]
    c2 = chi.twice
    for i in range(p):
        if not (a[i] + c2 >= b[i]):
            return 0
        if i + 1 < p and not (b[i] >= a[i + 1] + c2):
            return 0
    return 1 if a[p - 1] + c2 >= abs(b[p - 1]) else 0


def bgg_cross_check(p: int, chi: HalfInt, v: KType) -> dict:
    """Membership recomputed as [ell = 0 chain] minus the three ell = 1
    exclusions; asserted equal to the closed interleaving form."""
    if not v.is_dominant() or not v.genuine() or v.left.rank != p or v.right.rank != p:
        return {"member": 0, "matches_thm37": thm37_membership(p, chi, v) == 0}
    a = [c.twice for c in v.left.coords]
    b = [c.twice for c in v.right.coords]
    c2 = chi.twice
    ell0 = _ell0_chain(a, b, c2)
    w1 = b[0] > a[0] + c2
    w2 = b[p - 1] > a[p - 1] + c2
    w3 = -b[p - 1] > a[p - 1] + c2
    member = 1 if (ell0 and not (w1 or w2 or w3)) else 0
    closed = thm37_membership(p, chi, v)
    return {
        "member": member,
        "ell0": ell0,
        "excluded_by": [n for n, f in (("w1", w1), ("w2", w2), ("w3", w3)) if f],
        "ad_h_eigenvalue": str(HalfInt(-2 * sum(c.twice for c in v.left.coords))),
        "matches_thm37": member == closed,
    }


def _ell0_chain(a: list[int], b: list[int], c2: int) -> bool:
    p = len(a)
    # b1 >= a2 + chi >= b2 >= ... >= a_{p-1} + chi >= b_{p-1} >= a_p + chi
    for i in range(1, p):
        if not (b[i - 1] >= a[i] + c2):
            return False
        if i <= p - 2 and not (a[i] + c2 >= b[i]):
            return False
    return True


# ---------------------------------------------------------------------------
# Restriction from the odd Spin groups
# ---------------------------------------------------------------------------


def _descending(length: int, lo2: int, hi2: int, cls: int, min_last: int | None = None):
    """Weakly decreasing doubled-coordinate tuples in [lo2, hi2] with class
    cls; last entry >= min_last when given."""

    def rec(i, prev, cur):
        if i == length:
            yield tuple(cur)
            return
        start = min(prev, hi2)
        start -= (start - cls) % 2
        floor = lo2 if (min_last is None or i < length - 1) else max(lo2, min_last)
        x = start
        while x >= floor:
            yield from rec(i + 1, x, cur + [x])
            x -= 2
    yield from rec(0, hi2, [])


def branch_B_to_D(w: Weight):
    """so(2m+1) -> so(2m): mu with lam1 >= mu1 >= lam2 >= ... >= |mu_m|."""
    lam = [c.twice for c in w.coords]
    m = len(lam)
    cls = abs(lam[0]) % 2 if m else 0

    def rec(i, cur):
        if i == m:
            yield Weight.from_doubled(tuple(cur), "D")
            return
        top = lam[i]
        bot = lam[i + 1] if i + 1 < m else -lam[m - 1]
        x = top - ((top - cls) % 2)
        while x >= bot:
            yield from rec(i + 1, cur + [x])
            x -= 2
    yield from rec(0, [])


def branch_D_to_B(w: Weight):
    """so(2m) -> so(2m-1): nu with lam1 >= nu1 >= ... >= nu_{m-1} >= |lam_m|."""
    lam = [c.twice for c in w.coords]
    m = len(lam)
    cls = abs(lam[0]) % 2 if m else 0

    def rec(i, cur):
        if i == m - 1:
            yield Weight.from_doubled(tuple(cur), "B")
            return
        top = lam[i]
        bot = lam[i + 1] if i + 1 < m - 1 else abs(lam[m - 1])
        x = top - ((top - cls) % 2)
        while x >= bot:
            yield from rec(i + 1, cur + [x])
            x -= 2
    yield from rec(0, [])


def ls_spectrum(p_odd: int, q_even: int, which: int, bound: int):
    """K-types (within bound) of the selected minimal representation of the
    double cover of Spin(p_odd, q_even), as (B-side weight, D-side weight).

    p_odd - 1 = q_even: four representations (integral/half-integral lambda
    times a sign on the last D coordinate); p_odd - 1 > q_even: two
    (integral lambda, sign); p_odd - 1 < q_even: one.
    """
    if p_odd % 2 == 0 or q_even % 2 == 1:
        raise RegimeMismatch("need (odd, even) signature")
    m_b = (p_odd - 1) // 2
    m_d = q_even // 2
    out = []
    if p_odd - 1 == q_even:
        sels = [(0, 1), (0, -1), (1, 1), (1, -1)]
        if not 0 <= which < 4:
            raise RegimeMismatch("which must be 0..3 for p'-1 = q'")
        cls, sgn = sels[which]
        for lam in _descending(m_b, cls, bound, cls, min_last=cls):
            bw = Weight.from_doubled(lam, "B")
            dvals = [x + 1 for x in lam]
            dvals[-1] *= sgn
            dw = Weight.from_doubled(tuple(dvals), "D")
            if max(bw.sup_doubled(), dw.sup_doubled()) <= bound + 1:
                out.append((bw, dw))
    elif p_odd - 1 > q_even:
        if not 0 <= which < 2:
            raise RegimeMismatch("which must be 0..1 for p'-1 > q'")
        sgn = 1 if which == 0 else -1
        shift = p_odd - q_even  # doubled value of (p' - q')/2
        for lam in _descending(m_d, 0, bound, 0, min_last=0):
            bw = Weight.from_doubled(tuple(lam) + (0,) * (m_b - m_d), "B")
            dvals = [x + shift for x in lam]
            dvals[-1] *= sgn
            dw = Weight.from_doubled(tuple(dvals), "D")
            out.append((bw, dw))
    else:
        if which != 0:
            raise RegimeMismatch("which must be 0 for p'-1 < q'")
        shift = q_even - p_odd
        for lam in _descending(m_b, 0, bound, 0, min_last=0):
            bw = Weight.from_doubled(tuple(x + shift for x in lam), "B")
            dw = Weight.from_doubled(tuple(lam) + (0,) * (m_d - m_b), "D")
            out.append((bw, dw))
    return out


def ls_restrict(
    p_odd: int,
    q_even: int,
    which: int,
    bound: int,
    odd_first: bool = True,
    drop: str = "odd",
) -> dict:
    """Restrict the selected representation one step down the chosen factor
    (the odd one through so(2m+1) -> so(2m), the even one through
    so(2m) -> so(2m-1)), split the restricted spectrum into irreducible
    pieces, and match each piece against the named spectra of the
    corresponding case.

    For even target signatures the splitting is by central character
    (integrality class and sum parity); for odd targets the parity split is
    the conjectural root-lattice refinement of cases 4/7/8, flagged as
    such, and cases 5/6 do not split.
    """
    slack = bound + p_odd + q_even + 4
    kinds = ls_spectrum(p_odd, q_even, which, slack)
    members: list[KType] = []
    if drop == "odd":
        sig = (p_odd - 1, q_even) if odd_first else (q_even, p_odd - 1)
        for bw, dw in kinds:
            for mu in branch_B_to_D(bw):
                kt = KType(mu, dw) if odd_first else KType(dw, mu)
                if kt.sup_doubled() <= bound:
                    members.append(kt)
    elif drop == "even":
        sig = (p_odd, q_even - 1) if odd_first else (q_even - 1, p_odd)
        for bw, dw in kinds:
            for nu in branch_D_to_B(dw):
                kt = KType(bw, nu) if odd_first else KType(nu, bw)
                if kt.sup_doubled() <= bound:
                    members.append(kt)
    else:
        raise ValueError("drop must be 'odd' or 'even'")
    from collections import Counter

    counter = Counter(members)
    assert all(m == 1 for m in counter.values()), "restriction not multiplicity-free"

    report = {"group": (p_odd, q_even), "restrictedTo": sig, "pieces": []}
    n2 = sig[0] + sig[1]
    best_case = None
    best_matched = None
    best_pieces = None
    for k_try in range(1, max(1, (n2 - 3) // 4) + 1):
        forms = _orb.enumerate_real_forms(sig[0], sig[1], k_try)
        if not forms:
            continue
        oc = forms[0]
        split_parity = sig[0] % 2 == 0 or oc.case_id in (4, 7, 8)
        pieces: dict[tuple, list[KType]] = {}
        for kt in members:
            key = (0 if kt.left.all_integral() else 1,)
            if split_parity:
                key = key + (sum_parity(kt.coord_sum().twice),)
            pieces.setdefault(key, []).append(kt)
        cs = case_spectra(oc)
        matched = {}
        for key, vals in sorted(pieces.items()):
            hit = None
            for name, rep in sorted(cs.reps.items()):
                if sorted(vals, reverse=True) == rep.enumerate(bound):
                    hit = (name, rep.conjectural)
                    break
            matched[key] = hit
        if all(matched.values()) or best_case is None:
            best_case, best_matched, best_pieces = oc, matched, pieces
        if all(matched.values()):
            break
    if best_case is not None:
        report["case"] = best_case.case_id
        report["k"] = best_case.k
        for key, vals in sorted(best_pieces.items()):
            hit = best_matched.get(key) or (None, None)
            report["pieces"].append(
                {
                    "class": "integral-left" if key[0] == 0 else "half-integral-left",
                    "parity": key[1] if len(key) > 1 else None,
                    "count": len(vals),
                    "matchedRep": hit[0],
                    "conjectural": hit[1],
                }
            )
    return report


# ---------------------------------------------------------------------------
# Construction spectra (derived-functor route)
# ---------------------------------------------------------------------------


def construction_spectrum(oc: OrbitCase, variant: str) -> tuple[SpectrumPattern, str]:
    """Pattern of the cohomologically induced module for the given variant,
    together with the name of the matched representation.

    Cases 1 and 3 use variants i/ii (and iii/iv for the split case 1);
    case 4 and case 8 use i/ii, matching the conjectural parity pieces.
    For case 6 the induction only reaches r = 0 (mirrored through the
    larger factor), where the two variants are the parity pieces of pi2;
    at r > 0 the formula family coincides with case 8 under relabeling and
    no case-6 construction exists.
    """
    cs = case_spectra(oc)
    a, b = oc.signature
    if oc.case_id == 1:
        if variant in ("i", "ii"):
            name = "pi1" if variant == "i" else "pi2"
            return cs.reps[name].pattern, name
        if variant in ("iii", "iv"):
            p = a // 2
            # half-integral classes; the construction's (a,b)-parity shifts
            # by p relative to the sigma patterns' beta/delta parity
            want = "even" if variant == "iii" else "odd"
            flip = {"even": "odd", "odd": "even"}
            par = want if p % 2 == 0 else flip[want]
            name = "sigma3" if par == "even" else "sigma4"
            return cs.reps[name].pattern, name
        raise VariantUnavailable(variant)
    if oc.case_id == 3:
        if variant in ("i", "ii"):
            name = "pi1" if variant == "i" else "pi2"
            return cs.reps[name].pattern, name
        raise VariantUnavailable("cases iii/iv only occur for the split signature")
    if oc.case_id == 4:
        if variant in ("i", "ii"):
            name = "pi1e" if variant == "i" else "pi1o"
            return cs.reps[name].pattern, name
        raise VariantUnavailable(variant)
    if oc.case_id == 8:
        if variant in ("i", "ii"):
            name = "pie" if variant == "i" else "pio"
            return cs.reps[name].pattern, name
        raise VariantUnavailable(variant)
    if oc.case_id == 6:
        if oc.r_minus != 0:
            raise VariantUnavailable(
                "no theta-stable-parabolic construction reaches case 6 with r > 0; "
                "the printed case-6 spectra equal the case-8 row after r -> r - 2"
            )
        if variant not in ("i", "ii"):
            raise VariantUnavailable(variant)
        base = cs.reps["pi2"].pattern
        par = "even" if variant == "i" else "odd"
        piece = SpectrumPattern(
            base.signature, base.beta_side, base.beta_len, base.delta_len,
            base.beta_class, base.delta_class, base.weight_shift, base.chain_shift,
            negate_last=base.negate_last, beta_pad=base.beta_pad,
            delta_pad=base.delta_pad, parity=par, conjectural=False,
        )
        return piece, "pi2"
    raise VariantUnavailable(f"no construction for case {oc.case_id}")


# ---------------------------------------------------------------------------
# Generalized Verma support oracle (split even signature a = b = 2p)
# ---------------------------------------------------------------------------


def _dot_orbit_gl(mu_doubled: tuple[int, ...], shift_doubled: tuple[int, ...]):
    """(sign, w.mu) over the W(D_p) coset representatives with gl-dominant
    image, for the dot action through the given rho-restriction shift."""
    p = len(mu_doubled)
    base = [m + s for m, s in zip(mu_doubled, shift_doubled)]
    for flips in itertools.product((1, -1), repeat=p):
        if _prod_int(flips) != 1:
            continue
        vec = [f * x for f, x in zip(flips, base)]
        if len(set(vec)) != p:
            continue  # singular: cancels in the alternating sum
        order = sorted(range(p), key=lambda i: -vec[i])
        sign = _perm_sign_list(order)
        sortd = [vec[i] for i in order]
        yield sign, tuple(x - s for x, s in zip(sortd, shift_doubled))


def _prod_int(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _perm_sign_list(perm):
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _verma_mu(p: int, variant: str) -> tuple[Weight, Weight]:
    q = p
    if variant == "i":
        mu_l = Weight.from_doubled((2 * q - 1,) * p, "A")
        mu_r = Weight.make([0] * q, "D")
    elif variant == "ii":
        mu_l = Weight.from_doubled((2 * q + 1,) + (2 * q - 1,) * (p - 1), "A")
        mu_r = Weight.make([0] * q, "D")
    elif variant == "iii":
        mu_l = Weight.from_doubled((2 * p,) * p, "A")
        mu_r = Weight.make(["1/2"] * q, "D")
    elif variant == "iv":
        mu_l = Weight.from_doubled((2 * p,) * p, "A")
        mu_r = Weight.make(["1/2"] * (q - 1) + ["-1/2"], "D")
    else:
        raise VariantUnavailable(variant)
    return mu_l, mu_r


def verma_multiplicity(p: int, variant: str, delta: Weight, beta: Weight, cap: int = 6) -> int:
    """[V(delta) x W(beta) : S(u1 cap s) tensor sum_w sign(w) F(w . mu)] for
    the split group of rank 2p, evaluated through the character oracle."""
    from . import weyl as _weyl

    q = p
    mu_l, mu_r = _verma_mu(p, variant)
    rho_shift = tuple(-2 * (q + i) for i in range(p))  # doubled first-p rho
    total = 0
    d_sum = sum(delta.doubled())
    for sign, w_mu in _dot_orbit_gl(mu_l.doubled(), rho_shift):
        m2 = d_sum - sum(w_mu)
        if m2 < 0 or m2 % 2:
            continue
        m = m2 // 2
        w_mu_weight = Weight.from_doubled(w_mu, "A")
        for lam in _weyl._partitions_of(m, max_len=p):
            lam_p = Weight.make(list(lam) + [0] * (p - len(lam)), "A")
            t1 = _weyl.tensor_decompose(lam_p, w_mu_weight, cap).get(delta, 0)
            if not t1:
                continue
            lam_2q = Weight.make(list(lam) + [0] * (2 * q - len(lam)), "A")
            restr = _weyl.restrict_gl_to_so(lam_2q, 2 * q, cap)
            if mu_r.sup_doubled() == 0:
                t2 = restr.get(beta, 0)
            else:
                t2 = 0
                for tau, mtau in restr.items():
                    prod = _weyl.tensor_decompose(tau, mu_r, cap)
                    t2 += mtau * prod.get(beta, 0)
            total += sign * t1 * t2
    return total


def verma_closed_form(p: int, variant: str, delta: Weight, beta: Weight) -> int:
    """Closed-form membership: interleaving chain between the unshifted
    parameters with the variant's root-lattice parity."""
    q = p
    d = delta.doubled()
    b = beta.doubled()
    shift = 2 * q - 1  # doubled q - 1/2 (equal to p - 1/2 here)
    alpha = [x - shift for x in d]
    if variant in ("i", "ii"):
        # delta half-integral, beta integral
        if any(x % 2 == 0 for x in d) or any(x % 2 for x in b):
            return 0
    else:
        # delta integral, beta strictly half-integral
        if any(x % 2 for x in d) or any(x % 2 == 0 for x in b):
            return 0
    for i in range(p):
        if not (alpha[i] >= b[i]):
            return 0
        if i + 1 < p and not (b[i] >= alpha[i + 1]):
            return 0
    if not (alpha[p - 1] >= abs(b[p - 1])):
        return 0
    par_even = (sum(alpha) - sum(b)) % 4 in (0, 1)
    want_even = variant in ("i", "iii")
    return 1 if par_even == want_even else 0


def verma_support_check(p: int, variant: str, coord_max: int = 2, cap: int = 6) -> dict:
    """Sweep a grid of (delta, beta) and compare the oracle multiplicity of
    V(delta) x W(beta) in X(mu) with the closed form; exact equality."""
    q = p
    shift = 2 * q - 1
    d_class = 1 if variant in ("i", "ii") else 0
    b_class = 0 if variant in ("i", "ii") else 1
    checked = 0
    for d2 in _descending(p, shift - 2, shift + 2 * coord_max + 1, d_class):
        delta = Weight.from_doubled(d2, "A")
        if not is_dominant(delta):
            continue
        for b2 in _descending(p, -2 * coord_max - b_class, 2 * coord_max + b_class, b_class):
            beta = Weight.from_doubled(b2, "D")
            if not is_dominant(beta):
                continue
            got = verma_multiplicity(p, variant, delta, beta, cap)
            want = verma_closed_form(p, variant, delta, beta)
            if got != want:
                return {
                    "ok": False,
                    "delta": str(delta),
                    "beta": str(beta),
                    "oracle": got,
                    "closed": want,
                }
            checked += 1
    return {"ok": True, "checked": checked}


def metaplectic_identity(p: int, variant: str, cap: int = 6) -> bool:
    """Exact finite form of the spin-twisted character identity: cancelling
    the symmetric algebra factor from both sides of

      ch(Spin_s^*) ch(S(p+)) sum_w sign(w) ch F(w . mu_L)
         = e^{(p-1,...,p-1)} ch L(lam')

    leaves an identity of finite virtual gl(p) characters, compared exactly
    (mu_L dotted through the ambient rho restriction, lam' through rho(C_p)).
    """
    from . import weyl as _weyl

    if variant not in ("iii", "iv"):
        raise VariantUnavailable("the identity concerns the spin-twisted cases")
    mu_l, mu_r = _verma_mu(p, variant)
    spin_half = "plus" if variant == "iii" else "minus"
    lamp = Weight.from_doubled((1,) * p if variant == "iii" else (3,) + (1,) * (p - 1), "A")
    rho_shift = tuple(-2 * (p + i) for i in range(p))
    rho_c = tuple(-2 * (i + 1) for i in range(p))

    def virtual(mu: Weight, shift) -> "_weyl.FormalCharacter":
        out = _weyl.FormalCharacter("A")
        for sign, w_mu in _dot_orbit_gl(mu.doubled(), shift):
            term = _weyl.irr_character(Weight.from_doubled(w_mu, "A"), cap)
            out = out + term.scale(sign)
        return out

    spin_dual = _weyl.spin_character(p, spin_half).map_keys(
        lambda k: tuple(-x for x in k), "A"
    )
    lhs = spin_dual * virtual(mu_l, rho_shift)
    rhs = virtual(lamp, rho_c).map_keys(lambda k: tuple(x + 2 * (p - 1) for x in k), "A")
    return lhs.terms == rhs.terms
