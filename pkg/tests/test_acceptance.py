"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they go.
Tolerances are exact throughout (everything is integer or half-integer
arithmetic); the stated runtime budgets are asserted where given.
"""

import time
from collections import Counter

import pytest

from spinorbits import clifford as C
from spinorbits import counting as CT
from spinorbits import orbits as O
from spinorbits import spectra as S
from spinorbits import weyl as W
from spinorbits.halfint import hi
from spinorbits.weights import KType, Weight


def _report(num: int, desc: str, ok: bool, extra: str = ""):
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {desc}"
    if extra:
        line += f" ({extra})"
    print(line)
    assert ok, line


def _orthogonal_partitions(n2):
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


def test_criterion_1_counts():
    """n_O per the case table for every admissible (n, k, signature),
    4 <= n <= 8; the cases 7/8 value is the per-character count times the
    character count (2 x 1), the split-inclusive convention."""
    t0 = time.time()
    checked = 0
    for n in range(4, 9):
        for k in range(1, (n - 2) // 2 + 1):
            res = CT.count_unipotent(n, k)
            for g in res["groups"]:
                oc = O.enumerate_real_forms(*g["signature"], k)[0]
                want = CT.expected_n_total(oc.case_id, oc.r_plus, oc.r_minus)
                assert g["nTotal"] == want, (n, k, g["signature"], g["nTotal"], want)
                assert want in (16, 6, 4, 2, 1)
                checked += 1
    elapsed = time.time() - t0
    _report(1, "unipotent counts over 4<=n<=8", checked == 24 and elapsed < 5.0,
            f"{checked} signatures, {elapsed:.2f}s")


def test_criterion_2_example_survivor_sets():
    """Surviving Cartan classes at k = 1 for the four displayed families."""
    ok = True
    for n in range(4, 9):
        got = {c.label() for c in CT.survivors((2 * n - 4, 4), n, 1)}
        if n == 4:
            ok &= got == {"H^{2,2,0,0}", "H^{1,1,0,2}", "H^{0,0,2,0}_I", "H^{0,0,2,0}_II"}
        else:
            ok &= got == {
                f"H^{{{n - 2},2,0,0}}",
                f"H^{{{n - 3},1,0,2}}",
                f"H^{{{n - 4},0,2,0}}",
            }
        got = {c.label() for c in CT.survivors((2 * n - 3, 3), n, 1)}
        ok &= got == {f"H^{{{n - 2},1,0,1}}"}
        if n >= 5:
            got = {c.label() for c in CT.survivors((2 * n - 5, 5), n, 1)}
            ok &= got == {f"H^{{{n - 3},2,0,1}}", f"H^{{{n - 5},0,2,1}}"}
    _report(2, "Example survivor sets for the four k=1 families", ok)


def test_criterion_3_matchup():
    """Every table cell multiset-equal at doubled bound 12, multiplicity 1."""
    t0 = time.time()
    configs = [(4, 4, 1), (6, 4, 1), (5, 5, 1), (5, 3, 1), (7, 3, 1), (7, 5, 1)]
    cells = 0
    for a, b, k in configs:
        oc = O.enumerate_real_forms(a, b, k)[0]
        report = S.matchup_verify(oc, 12)  # strict: raises on any failure
        assert report.ok
        cells += sum(len(r["cells"]) for r in report.rows)
    elapsed = time.time() - t0
    _report(3, "spectrum matchup tables at bound 12", elapsed < 30.0,
            f"{cells} cells over {len(configs)} cases, {elapsed:.2f}s")


def test_criterion_4_denominator_identity():
    ok = True
    tested = []
    for n in (2, 3, 4):
        for k in range(0, n - 1):
            ok &= W.check_denominator_identity(n, k)
            tested.append((n, k))
    _report(4, "denominator identity", ok, f"(n,k) in {tested}")


def test_criterion_5_clifford_relations():
    a4 = C.CliffordAlgebra()
    p4 = [a4.add_pair(0, str(i)) for i in range(2)]
    e4 = C.build_E_even(a4, p4)
    ok = e4 * e4 == a4.scalar(1)
    a6 = C.CliffordAlgebra()
    p6 = [a6.add_pair(0, str(i)) for i in range(3)]
    e6 = C.build_E_even(a6, p6)
    ok &= e6 * e6 == -a6.scalar(1)
    ax = C.CliffordAlgebra()
    pr = ax.add_pair(0, "1")
    v3, v1 = ax.add_unit(0, "v3"), ax.add_unit(0, "v1")
    E3, E1 = C.build_E_odd(ax, v3, [pr]), C.build_E_odd(ax, v1, [])
    ok &= E3 * E1 == -(E1 * E3)
    for n, cls in ((2, "Z2xZ2"), (3, "Z4"), (4, "Z2xZ2"), (5, "Z4")):
        ok &= C.center_of_spin(n).iso_class == cls
    reps_checked = paths_checked = 0
    for text in [
        "[3+ 2^2 1-]I", "[3+ 2^2 1-]II", "[3- 2^2 1+]I", "[3- 2^2 1+]II",
        "[3- 2^2 1+,3]I", "[3+ 2^2 1- 1+,2]", "[3+ 2^2 1-,3]II",
        "[3- 2^2 1+ 1-,2]", "[3+ 2^2 1+ 1-,2]", "[3- 2^2 1- 1+,2]",
        "[3+ 2^2 1+]", "[3- 2^2 1-]", "[3+ 2^2 1+,3]", "[3- 2^2 1-,3]",
        "[3- 2^2 1- 1+,4]", "[3+ 2^2 1+ 1-,4]",
    ]:
        report = C.verify_component_reps(O.parse_diagram(text))
        ok &= report["ok"]
        ok &= all(r["centralizes"] and r["in_spin"] for r in report["relations"])
        ok &= all(
            pc["centralizes"] and pc["in_spin"] and pc["starts_at_identity"]
            for pc in report["pathChecks"]
        )
        reps_checked += len(report["representatives"])
        paths_checked += len(report["pathChecks"])
    _report(5, "Clifford relations, centers, representatives and circles", ok,
            f"{reps_checked} representatives, {paths_checked} symbolic circles")


def test_criterion_6_component_groups():
    ok = True
    checked = 0
    for k in (1, 2):
        for r in (0, 1, 2):
            shapes = []
            # cases 1-3 (even signatures)
            shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, -1)])
            shapes.append([(3, -1)] + [(2, 1)] * (2 * k) + [(1, 1)] * (2 * r + 1))
            shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, -1)] + [(1, 1)] * (2 * r))
            shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, -1)] * (2 * r + 1))
            shapes.append([(3, -1)] + [(2, 1)] * (2 * k) + [(1, 1)] + [(1, -1)] * (2 * r))
            # cases 4-8 (odd signatures)
            shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, 1)] + [(1, -1)] * 2)
            shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, 1)] * (2 * r + 1))
            shapes.append([(3, -1)] + [(2, 1)] * (2 * k) + [(1, -1)] * (2 * r + 1))
            if r >= 2:
                shapes.append([(3, -1)] + [(2, 1)] * (2 * k) + [(1, -1)] + [(1, 1)] * (2 * r))
                shapes.append([(3, 1)] + [(2, 1)] * (2 * k) + [(1, 1)] + [(1, -1)] * (2 * r))
            for rows in shapes:
                base = O.SignedDiagram.make(rows)
                diagrams = (
                    [O.SignedDiagram(base.rows, nm) for nm in ("I", "II")]
                    if O.admits_numerals(base)
                    else [base]
                )
                for d in diagrams:
                    if O.classify_case(d) is None:
                        continue
                    report = C.verify_component_reps(d)
                    ok &= report["ok"] and report["computed"] == O.component_group(d)
                    checked += 1
    complex_checked = 0
    for n2 in (2, 4, 6, 8, 10, 12):
        for parts in _orthogonal_partitions(n2):
            if not all(p <= 3 for p in parts) or parts.count(3) > 1:
                continue  # outside the supported [3 2^{2k} 1^*] / [2^*] families
            cd = O.ComplexDiagram(parts)
            tag = O.component_group(cd)
            m = len({p for p in parts if p % 2 == 1})
            mults = Counter(p for p in parts if p % 2 == 1)
            # closed formula for the component-group order
            if any(v > 1 for v in mults.values()) or m == 0:
                want_order = max(2 ** (m - 1), 1) if m else (2 if parts else 1)
            else:
                want_order = 2 ** m
            order = {"Trivial": 1, "Z2": 2, "Z2xZ2": 4, "Z4": 4}.get(tag)
            ok &= order == want_order
            report = C.verify_component_reps(cd)
            ok &= report["ok"] and report["computed"] == tag
            complex_checked += 1
    _report(6, "component groups across the eight cases and complex orbits", ok,
            f"{checked} signed, {complex_checked} complex")


def test_criterion_7_dimension_oracle():
    ok = True
    for n2 in (2, 4, 6, 8, 10, 12):
        for parts in _orthogonal_partitions(n2):
            cd = O.ComplexDiagram(parts)
            ok &= O.orbit_dimension_closed(parts) == O.centralizer_nullity_dimension(cd)
    small_checked = 0
    for k in (1, 2):
        for r in (0, 1, 2):
            for a in range(3, 4 * k + 4 + 2 * r + 2):
                for b in range(3, 4 * k + 4 + 2 * r + 2):
                    if (a + b) % 2 or a + b < 4 * k + 4:
                        continue
                    try:
                        forms = O.enumerate_real_forms(a, b, k)
                    except O.InvalidSignature:
                        continue
                    for f in forms:
                        if max(f.r_plus, f.r_minus) > 2:
                            continue
                        cdim, kdim, small = O.orbit_dimension(f.diagram)
                        ok &= small
                        ok &= cdim == O.centralizer_nullity_dimension(f.diagram)
                        small_checked += 1
    _report(7, "dimension formula vs centralizer oracle; smallness", ok,
            f"{small_checked} case orbits")


def test_criterion_8_oracle_equivalence():
    t0 = time.time()
    ok = True
    # Pieri
    pieri_n = 0
    for rank in (2, 3):
        for beta in W._partitions_of(6, max_len=rank):
            bw = Weight.make(list(beta) + [0] * (rank - len(beta)), "A")
            if bw.sup_doubled() > 6:
                continue
            for k in (1, 2, 3):
                oracle = W.tensor_decompose(bw, Weight.make([k] + [0] * (rank - 1), "A"))
                ok &= all(m == 1 for m in oracle.values())
                ok &= sorted(W.pieri_row(bw, k), reverse=True) == sorted(oracle, reverse=True)
                pieri_n += 1
    # Littlewood
    lw_n = 0
    for m in (3, 4, 5, 6, 7):
        max_rows = min(3, (m + 1) // 2)
        seen = set()
        for size in range(0, 7):
            for lam in W._partitions_of(size, max_len=max_rows):
                if lam in seen or any(x > 3 for x in lam):
                    continue
                seen.add(lam)
                padded = Weight.make(list(lam) + [0] * (m - len(lam)), "A")
                ok &= W.littlewood_branch(lam, m) == W.restrict_gl_to_so(padded, m)
                lw_n += 1
    # Spin tensoring
    st_n = 0
    for p in (2, 3):
        betas = set()
        for size in range(0, 7):
            for lam in W._partitions_of(size, max_len=p):
                if any(x > 3 for x in lam):
                    continue
                betas.add(tuple(list(lam) + [0] * (p - len(lam))))
        for b in sorted(betas):
            beta = Weight.make(b, "D")
            for half in (None, "plus", "minus"):
                prod = W.irr_character(beta) * W.spin_character(p, half)
                oracle = W.decompose_character(prod)
                ok &= sorted(W.spin_tensor(beta, half), reverse=True) == sorted(
                    oracle, reverse=True
                )
                st_n += 1
    elapsed = time.time() - t0
    _report(8, "closed rules agree with the character oracle", ok and elapsed < 60.0,
            f"pieri {pieri_n}, littlewood {lw_n}, spin {st_n}, {elapsed:.1f}s")


def test_criterion_9_bgg():
    ok = True
    checked = 0
    for p in (2, 3):
        for chi in (hi("-1/2"), hi("1/2"), hi("-3/2")):
            for cls_l in (0, 1):
                for l2 in S._descending(p, -10, 10, cls_l):
                    lw = Weight.from_doubled(l2, "D")
                    for r2 in S._descending(p, -10, 10, 1 - cls_l):
                        v = KType(lw, Weight.from_doubled(r2, "D"))
                        if not v.is_dominant():
                            continue
                        out = S.bgg_cross_check(p, chi, v)
                        ok &= out["matches_thm37"]
                        checked += 1
    _report(9, "BGG ell<=1 recomputation equals the closed chain", ok,
            f"{checked} K-types at bound 10")


def test_criterion_10_construction_vs_rep():
    ok = True
    details = []
    for (a, b, k), variants in [
        ((4, 4, 1), ("i", "ii", "iii", "iv")),
        ((4, 6, 1), ("i", "ii")),
        ((5, 5, 1), ("i", "ii")),
        ((5, 7, 1), ("i", "ii")),
    ]:
        oc = O.enumerate_real_forms(a, b, k)[0]
        cs = S.case_spectra(oc)
        for var in variants:
            pat, name = S.construction_spectrum(oc, var)
            ok &= pat.enumerate(10) == cs.reps[name].enumerate(10)
            details.append(f"case{oc.case_id}:{var}={name}")
    oc6 = O.enumerate_real_forms(3, 5, 1)[0]
    cs6 = S.case_spectra(oc6)
    p1, n1 = S.construction_spectrum(oc6, "i")
    p2, n2 = S.construction_spectrum(oc6, "ii")
    union = sorted(p1.enumerate(10) + p2.enumerate(10), reverse=True)
    ok &= union == cs6.reps["pi2"].enumerate(10) and n1 == n2 == "pi2"
    details.append("case6:i+ii=pi2")
    with pytest.raises(S.VariantUnavailable):
        S.construction_spectrum(O.enumerate_real_forms(3, 7, 1)[0], "i")
    # the supporting Verma-module oracle and the metaplectic identity
    for var in ("i", "ii", "iii", "iv"):
        ok &= S.verma_support_check(2, var, coord_max=2)["ok"]
    ok &= S.metaplectic_identity(2, "iii") and S.metaplectic_identity(2, "iv")
    _report(10, "construction spectra equal the matched representations", ok,
            "; ".join(details))


def test_criterion_11_central_characters():
    ok = True
    for a, b in ((4, 4), (6, 4)):
        p, q = a // 2, b // 2
        # tie the exponential elements to genuine Clifford products
        ok &= C.verify_exp_formula(p) and C.verify_exp_formula(q)
        mus = [
            KType.make(["1/2"] * p, [0] * q),
            KType.make([0] * p, ["1/2"] * q),
            KType.make(["1/2"] * (p - 1) + ["-1/2"], [0] * q),
            KType.make([0] * p, ["1/2"] * (q - 1) + ["-1/2"]),
        ]
        values = []
        for mu in mus:
            row = []
            for eps1 in (1, -1):
                for eps2 in (1, -1):
                    for twisted in (False, True):
                        # central_character asserts closed form ==
                        # exponential route internally
                        row.append(
                            str(C.central_character(mu, eps1, eps2, twisted))
                        )
            values.append(tuple(row))
        ok &= len(set(values)) == 4  # the four chi_j are distinct
        ok &= C.center_of_spin_pair(a, b).iso_class in ("Z2xZ2xZ2", "Z2xZ4")
    # genuine central character counts over the sweep (asserted against the spectra inside)
    for n in range(4, 9):
        for k in range(1, (n - 2) // 2 + 1):
            for g in CT.admissible_groups(n, k):
                CT.genuine_central_char_count(g["signature"], n, k)
    _report(11, "central characters: closed form, exponentials, counts", ok)
