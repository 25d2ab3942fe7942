"""Counting genuine unipotent representations: Cartan subalgebra classes,
component counts, cross-stabilizer sign analysis, and the per-central-
character and total counts.

Signatures are normalized to c >= d internally; the Cartan class data
(r+, r-, m, s) is relative to the normalized order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spectra import KOutOfRange, case_spectra, central_char_tag, infl_char
from . import orbits as _orb


@dataclass(frozen=True, order=True)
class CartanClass:
    r_plus: int
    r_minus: int
    m: int
    s: int
    numeral: str | None = None

    @property
    def s_prime(self) -> int:
        return self.s // 2

    def label(self) -> str:
        tail = {"I": "_I", "II": "_II"}.get(self.numeral, "")
        return f"H^{{{self.r_plus},{self.r_minus},{self.m},{self.s}}}{tail}"

    def __str__(self) -> str:
        return self.label()


def _normalize(signature: tuple[int, int]) -> tuple[int, int, bool]:
    a, b = signature
    if a % 2 != b % 2:
        raise ValueError(f"signature {signature} has mixed parity")
    if a >= b:
        return a, b, False
    return b, a, True


def admissible_groups(n: int, k: int) -> list[dict]:
    """Signatures (c >= d) admitting the infinitesimal character: the even
    pair (2n-2k-2, 2k+2) and the odd pairs (2n-2k-3, 2k+3), (2n-2k-1, 2k+1)
    (which coincide at the minimal n)."""
    if not (0 < k and 2 * k <= n - 2):
        raise KOutOfRange(f"need 0 < k <= n/2 - 1, got n={n}, k={k}")
    out = [
        {"signature": (2 * n - 2 * k - 2, 2 * k + 2), "family": "even"},
    ]
    seen = set()
    for fam, sig in (
        ("odd-b", (2 * n - 2 * k - 3, 2 * k + 3)),
        ("odd-c", (2 * n - 2 * k - 1, 2 * k + 1)),
    ):
        c, d, _ = _normalize(sig)
        # the two odd families coincide at the minimal n
        if (c, d) in seen:
            continue
        seen.add((c, d))
        out.append({"signature": (c, d), "family": fam})
    return out


def enumerate_cartans(a: int, b: int) -> list[CartanClass]:
    """Conjugacy classes: m + r+ + s' = p, m + r- + s' = q with s = 2s' for
    even signatures and 2s' + 1 for odd ones; numerals I/II iff p = q = m."""
    c, d, swapped = _normalize((a, b))
    p, q = c // 2, d // 2
    eps = 0 if c % 2 == 0 else 1
    out = []
    for sp in range(min(p, q) + 1):
        for m in range(min(p, q) - sp + 1):
            rp = p - m - sp
            rm = q - m - sp
            if rp < 0 or rm < 0:
                continue
            s = 2 * sp + eps
            if swapped:
                rp, rm = rm, rp
            if p == q and m == p and s == 0:
                out.append(CartanClass(rp, rm, m, s, "I"))
                out.append(CartanClass(rp, rm, m, s, "II"))
            else:
                out.append(CartanClass(rp, rm, m, s))
    return sorted(out)


def cartan_component_count(c: CartanClass) -> int:
    """|F| from the direct product decomposition of the Cartan subgroup."""
    if c.s > 1:
        return 2 ** (c.s - 1) * 4
    return 2 if c.m != 0 else 1


def is_abelian_cartan(c: CartanClass) -> bool:
    return c.s < 3


@dataclass
class StabilizerProfile:
    m: int
    real_part: tuple[int, int]  # W(D_i) x W(D_j) ranks
    imag_part: tuple[int, int]  # W(D_{r+}) x W(D_{r-})
    extra_z2z2: bool
    extra_z2: bool
    rule_four_disagreement: bool  # literal "k = (n-3)/2" test differs


def _x_coordinate_half_integral(c: CartanClass, n: int, k: int, signature) -> bool:
    """Class of the extra real coordinate for s odd, by counting: the
    integral entries of the infinitesimal character are exhausted by the
    compact and complex blocks exactly when the small side equals 2k+1."""
    cc, dd, _ = _normalize(signature)
    return dd == 2 * k + 1


def stabilizer_profile(c: CartanClass, n: int, k: int, signature) -> StabilizerProfile:
    sp = c.s_prime
    odd = c.s % 2 == 1
    real = (sp, sp + 1) if odd else (sp, sp)
    imag = (c.r_plus, c.r_minus)
    z2z2 = c.r_plus > 0 and c.r_minus > 0 and c.s >= 2
    cond_i = c.s >= 2
    cond_ii = c.r_plus > 0 and c.r_minus > 0
    cond_iii = (
        c.s == 1
        and min(c.r_plus, c.r_minus) == 0
        and max(c.r_plus, c.r_minus) >= 1
        and _x_coordinate_half_integral(c, n, k, signature)
    )
    z2 = c.m != 0 and (cond_i or cond_ii or cond_iii)
    literal_four = (
        c.m >= 1
        and c.s == 1
        and c.r_minus == 0
        and c.r_plus >= 1
        and 2 * k == n - 3
    )
    effective_four = c.m >= 1 and cond_iii
    return StabilizerProfile(
        m=c.m,
        real_part=real,
        imag_part=imag,
        extra_z2z2=z2z2,
        extra_z2=z2,
        rule_four_disagreement=literal_four != effective_four,
    )


def survives_sign_test(c: CartanClass, context: tuple[int, int, tuple[int, int]]) -> bool:
    """False iff the sign character fails on the cross stabilizer: s >= 3
    (nontrivial real Weyl factor), m >= 1 with both imaginary ranks positive
    or with s >= 2, or m >= 1 with the odd real coordinate half-integral
    (the distilled rule (4); the literal "k = (n-3)/2" variant is recorded
    through stabilizer_profile.rule_four_disagreement)."""
    n, k, signature = context
    if c.s >= 3:
        return False
    if c.m >= 1 and c.r_plus >= 1 and c.r_minus >= 1:
        return False
    if c.m >= 1 and c.s >= 2:
        return False
    prof = stabilizer_profile(c, n, k, signature)
    if c.m >= 1 and c.s == 1 and prof.extra_z2:
        return False
    return True


def survivors(signature: tuple[int, int], n: int, k: int) -> list[CartanClass]:
    return [
        c
        for c in enumerate_cartans(*signature)
        if survives_sign_test(c, (n, k, signature))
    ]


def count_per_central_char(signature: tuple[int, int], n: int, k: int) -> int:
    return len(survivors(signature, n, k))


def _case_of_signature(signature: tuple[int, int], k: int) -> _orb.OrbitCase:
    forms = _orb.enumerate_real_forms(signature[0], signature[1], k)
    if not forms:
        raise ValueError(f"signature {signature} admits no orbit at k={k}")
    return forms[0]


def genuine_central_char_count(signature: tuple[int, int], n: int, k: int) -> int:
    """Number of genuine central characters realized by representations
    attached to the orbit: 4 / 2 / 2 / 2 / 1 / 1 through the case table,
    cross-checked against the distinct central characters of the named
    spectra's minimal K-types."""
    oc = _case_of_signature(signature, k)
    cid = oc.case_id
    if cid == 1:
        expected = 4
    elif cid in (2, 3, 4):
        expected = 2
    elif cid in (5, 6):
        expected = 2 if (oc.r_plus, oc.r_minus) == (0, 0) else 1
    else:
        expected = 1
    cs = case_spectra(oc)
    tags = set()
    for rep in cs.reps.values():
        if rep.conjectural:
            continue
        pat = rep.pattern
        small = abs(pat.weight_shift.twice) + abs(pat.chain_shift.twice) + 3
        members = rep.enumerate(small)
        assert members, f"empty spectrum for {rep.name}"
        mtags = {central_char_tag(v) for v in members}
        assert len(mtags) == 1, f"central character not constant on {rep.name}"
        tags.add(next(iter(mtags)))
    assert len(tags) == expected, (
        f"case {cid}: realized central characters {len(tags)} != table {expected}"
    )
    return expected


def count_unipotent(n: int, k: int, signature: tuple[int, int] | None = None) -> dict:
    """n_O = sum over realized genuine central characters of the number of
    surviving Cartan classes, per admissible signature."""
    groups = admissible_groups(n, k) if signature is None else [
        {"signature": _normalize(signature)[:2], "family": "requested"}
    ]
    lam = infl_char(n, k)
    out = {"n": n, "k": k, "infinitesimalCharacter": lam.to_json(), "groups": []}
    for g in groups:
        sig = g["signature"]
        surv = survivors(sig, n, k)
        n_chi = len(surv)
        n_genuine = genuine_central_char_count(sig, n, k)
        oc = _case_of_signature(sig, k)
        entry = {
            "signature": list(sig),
            "case": oc.case_id,
            "perCartan": [c.label() for c in enumerate_cartans(*sig)],
            "survivors": [c.label() for c in surv],
            "nPerChi": n_chi,
            "nGenuineChi": n_genuine,
            "nTotal": n_chi * n_genuine,
            "ruleFourDisagreements": [
                c.label()
                for c in enumerate_cartans(*sig)
                if stabilizer_profile(c, n, k, sig).rule_four_disagreement
            ],
        }
        out["groups"].append(entry)
    return out


def expected_n_total(case_id: int, r_plus: int, r_minus: int) -> int:
    """Expected totals per case: 16 / 6 / 4 / 2-or-1 / 2.  The cases 7/8
    value is per-character count times character count (2 x 1), matching
    the named representations with their conjectural splits included."""
    if case_id == 1:
        return 16
    if case_id in (2, 3):
        return 6
    if case_id == 4:
        return 4
    if case_id in (5, 6):
        return 2 if (r_plus, r_minus) == (0, 0) else 1
    return 2
