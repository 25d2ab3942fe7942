"""Signed Young diagrams with numerals, the eight-case table, Lie triples,
orbit dimensions and component groups.

Signature is always derived by counting boxes; the case table's algebraic
parameter identities are treated as labels and discrepancies are reported
in OrbitCase.flags rather than silently reconciled.

Even-length rows carry no usable sign data for this family (the 2^{2k}
block is undecorated in the standard notation and its e/f realization pairs
one +start row with one -start row), so even rows are stored with a
canonical '+' sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .clifford import CliffordAlgebra, CliffordElement, Gaussian, one_minus_ef
from .halfint import HalfInt, hi
from .weights import Weight, OuterAut


class InvalidSignature(ValueError):
    pass


@dataclass(frozen=True)
class SignedDiagram:
    rows: tuple[tuple[int, int], ...]  # (length, start sign +1/-1), sorted
    numeral: str | None = None  # None, "I", "II"

    @staticmethod
    def make(rows, numeral=None) -> "SignedDiagram":
        canon = []
        for length, sign in rows:
            if length <= 0 or sign not in (1, -1):
                raise ValueError(f"bad row ({length}, {sign})")
            canon.append((length, 1 if length % 2 == 0 else sign))
        canon.sort(key=lambda ls: (-ls[0], -ls[1]))
        return SignedDiagram(tuple(canon), numeral)

    def is_valid(self) -> bool:
        """Orthogonal validity: every even row length has even multiplicity
        for each fixed start sign (even rows are sign-canonicalized)."""
        from collections import Counter

        counts = Counter((l, s) for l, s in self.rows if l % 2 == 0)
        return all(c % 2 == 0 for c in counts.values())

    def signature(self) -> tuple[int, int]:
        a = b = 0
        for length, sign in self.rows:
            hi_count = (length + 1) // 2
            lo_count = length // 2
            if sign > 0:
                a += hi_count
                b += lo_count
            else:
                b += hi_count
                a += lo_count
        return a, b

    def shape(self) -> tuple[int, ...]:
        return tuple(sorted((l for l, _ in self.rows), reverse=True))

    def total(self) -> int:
        return sum(l for l, _ in self.rows)

    def __str__(self) -> str:
        from collections import Counter

        groups = Counter(self.rows)
        keys = sorted(groups, key=lambda ls: (-ls[0], groups[ls], -ls[1]))
        bits = []
        for length, sign in keys:
            mult = groups[(length, sign)]
            if length % 2 == 0:
                tok = f"{length}" + (f"^{mult}" if mult > 1 else "")
            else:
                tok = f"{length}{'+' if sign > 0 else '-'}" + (f",{mult}" if mult > 1 else "")
            bits.append(tok)
        return "[" + " ".join(bits) + "]" + (self.numeral or "")


_TOKEN = re.compile(r"^(\d+)([+-]?)(?:([,^])(\d+))?$")


def parse_diagram(text: str) -> SignedDiagram:
    """Parse '[3+ 2^2 1-]I', '[3+ 2^2 1- 1+,2]', or complex '[3 2^2 1^3]'.

    Unsigned odd rows mark a complex (single factor) diagram; mixing signed
    and unsigned odd rows is rejected.
    """
    text = text.strip()
    m = re.match(r"^\[(.*)\](I{1,2})?$", text)
    if not m:
        raise ValueError(f"cannot parse diagram {text!r}")
    body, numeral = m.group(1), m.group(2)
    rows = []
    saw_signed = saw_unsigned_odd = False
    for tok in body.split():
        tm = _TOKEN.match(tok)
        if not tm:
            raise ValueError(f"bad row token {tok!r}")
        length = int(tm.group(1))
        sign_ch = tm.group(2)
        mult = int(tm.group(4)) if tm.group(4) else 1
        if length % 2 == 1:
            if sign_ch:
                saw_signed = True
            else:
                saw_unsigned_odd = True
        sign = -1 if sign_ch == "-" else 1
        rows += [(length, sign)] * mult
    if saw_signed and saw_unsigned_odd:
        raise ValueError("mixed signed and unsigned odd rows")
    if saw_unsigned_odd or not saw_signed:
        # no sign decorations at all: a complex orbit partition
        if numeral:
            raise ValueError("complex diagrams take no numeral here")
        return ComplexDiagram(tuple(sorted((l for l, _ in rows), reverse=True)))
    return SignedDiagram.make(rows, numeral)


@dataclass(frozen=True)
class ComplexDiagram:
    """Plain partition: a nilpotent orbit of so(2n, C) (numerals I/II for
    very even shapes are not distinguished by anything we verify)."""

    parts: tuple[int, ...]

    def is_orthogonal(self) -> bool:
        from collections import Counter

        counts = Counter(p for p in self.parts if p % 2 == 0)
        return all(c % 2 == 0 for c in counts.values())

    def total(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        from collections import Counter

        groups = Counter(self.parts)
        bits = []
        for length in sorted(groups, reverse=True):
            mult = groups[length]
            bits.append(f"{length}" + (f"^{mult}" if mult > 1 else ""))
        return "[" + " ".join(bits) + "]"


def apply_outer_diagram(aut: OuterAut, d: SignedDiagram) -> SignedDiagram:
    """zeta toggles the numeral (when one is attached), eta swaps signs."""
    if aut is OuterAut.IDENTITY:
        return d
    if aut is OuterAut.ZETA_ETA:
        return apply_outer_diagram(
            OuterAut.ETA, apply_outer_diagram(OuterAut.ZETA, d)
        )
    if aut is OuterAut.ZETA:
        if d.numeral is None:
            return d
        return SignedDiagram(d.rows, "II" if d.numeral == "I" else "I")
    flipped = [(l, -s if l % 2 else s) for l, s in d.rows]
    return SignedDiagram.make(flipped, d.numeral)


def apply_outer(aut: OuterAut, x):
    """Dispatch the outer automorphism to weights/K-types or diagrams."""
    if isinstance(x, SignedDiagram):
        return apply_outer_diagram(aut, x)
    from .weights import KType, apply_outer_weight

    if isinstance(x, KType):
        return apply_outer_weight(aut, x)
    raise TypeError(f"cannot apply outer automorphism to {type(x).__name__}")


def admits_numerals(d: SignedDiagram) -> bool:
    """I/II split happens iff the improper reflections attached to the odd
    rows generate a subgroup of order exactly 2 in {dets on V+} x {dets on V-}."""
    gens = set()
    for length, sign in d.rows:
        if length % 2 == 0:
            continue
        hi_count = (length + 1) // 2
        lo_count = length // 2
        da = (-1) ** (hi_count if sign > 0 else lo_count)
        db = (-1) ** (lo_count if sign > 0 else hi_count)
        gens.add((da, db))
    group = {(1, 1)}
    frontier = [(1, 1)]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = (x[0] * g[0], x[1] * g[1])
            if y not in group:
                group.add(y)
                frontier.append(y)
    return len(group) == 2


# ---------------------------------------------------------------------------
# The eight cases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCase:
    case_id: int
    k: int
    r_plus: int
    r_minus: int
    diagram: SignedDiagram
    signature: tuple[int, int]
    flags: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"case {self.case_id}: {self.diagram} sig={self.signature} k={self.k}"


def classify_case(d: SignedDiagram) -> OrbitCase | None:
    """Case id and parameters from diagram content only (None outside the
    family).  Degenerate parameters route to the smaller case: r=0 variants
    of cases 2/3 are case 1, r=1 variants of cases 7/8 are case 4."""
    if not d.is_valid():
        return None
    threes = [(l, s) for l, s in d.rows if l == 3]
    twos = [(l, s) for l, s in d.rows if l == 2]
    ones = [(l, s) for l, s in d.rows if l == 1]
    others = [(l, s) for l, s in d.rows if l not in (1, 2, 3)]
    if others or len(threes) != 1 or len(twos) % 2 or not twos:
        return None
    k = len(twos) // 2
    eps = threes[0][1]
    same = sum(1 for _, s in ones if s == eps)
    opp = sum(1 for _, s in ones if s != eps)
    sig = d.signature()
    flags: list[str] = []

    def case(cid, rp, rm):
        return OrbitCase(cid, k, rp, rm, d, sig, tuple(flags))

    if same == 0 and opp == 1:
        return case(1, 0, 0)
    if same == 0 and opp % 2 == 1 and opp >= 3:
        r = (opp - 1) // 2
        return case(2, r, 0) if eps < 0 else case(3, 0, r)
    if opp == 1 and same >= 2 and same % 2 == 0:
        r = same // 2
        return case(2, r, 0) if eps > 0 else case(3, 0, r)
    if same == 1 and opp == 2:
        flags.append(
            "case 4 table writes a=2p+1=2k+1 but the diagram has 2k+3 boxes "
            "of each sign; box count reported"
        )
        return case(4, 1, 1)
    if opp == 0 and same % 2 == 1:
        r = (same - 1) // 2
        return case(5, r, 0) if eps > 0 else case(6, 0, r)
    if same == 1 and opp >= 4 and opp % 2 == 0:
        r = opp // 2
        return case(7, r, 0) if eps < 0 else case(8, 0, r)
    return None


def enumerate_real_forms(a: int, b: int, k: int) -> list[OrbitCase]:
    """All real forms of [3 2^{2k} 1^{2n-4k-3}] with box signature (a, b)."""
    if (a + b) % 2 or a < 0 or b < 0:
        raise InvalidSignature(f"(a, b) = ({a}, {b})")
    if k <= 0:
        raise InvalidSignature("k must be positive")
    n2 = a + b
    if n2 - 4 * k - 3 < 0:
        return []
    candidates: list[SignedDiagram] = []
    ones = n2 - 4 * k - 3
    for eps in (1, -1):
        for plus_ones in range(ones + 1):
            rows = [(3, eps)] + [(2, 1)] * (2 * k)
            rows += [(1, 1)] * plus_ones + [(1, -1)] * (ones - plus_ones)
            dia = SignedDiagram.make(rows)
            if dia.signature() != (a, b):
                continue
            if dia in candidates:
                continue
            candidates.append(dia)
    out = []
    for dia in candidates:
        oc = classify_case(dia)
        if oc is None:
            continue
        if admits_numerals(dia):
            for numeral in ("I", "II"):
                d2 = SignedDiagram(dia.rows, numeral)
                out.append(classify_case(d2))
        else:
            out.append(oc)
    return sorted(out, key=lambda c: (c.case_id, str(c.diagram)))


# ---------------------------------------------------------------------------
# Clifford / matrix realizations
# ---------------------------------------------------------------------------


@dataclass
class Realization:
    alg: CliffordAlgebra
    e: CliffordElement
    h: CliffordElement
    # bookkeeping (all generator indices):
    factor_pairs: list[list[tuple[int, int]]]  # per factor, (e, f) pairs
    factor_units: list[list[int]]
    three_pair: tuple[int, int]  # the 3-row's hyperbolic pair
    three_factor: int  # factor (0 = '+', 1 = '-') of the 3-row's pair
    three_unit: int  # the 3-row's middle unit generator
    one_units: dict[int, list[int]]  # units of the 1-rows, keyed by factor
    two_pairs: list[tuple[tuple[int, int], tuple[int, int]]]  # per 2-row pair
    two_pairs_oriented: list[tuple[tuple[int, int], tuple[int, int]]]  # after any II swap
    h_coords: list[list[HalfInt]]  # h weight per factor, pair-aligned


def _factor_of(sign: int) -> int:
    return 0 if sign > 0 else 1


def clifford_realization(d: SignedDiagram) -> Realization:
    """Block-by-block nilpotent e and neutral h for an eight-case diagram.

    3-row (start s): hyperbolic pair in factor(s), unit in factor(-s),
      e += (v f)/2, h += (1 - e f)  [coordinate 2].
    Pair of 2-rows: one pair per factor, e += (f+ f-)/2, h += H+ + H-
      [coordinates (1 | 1)].
    1-rows: one unit each, no contribution.
    Numeral II swaps e and f of the last 2-row pair in the 3-row's factor,
    flipping the matching h coordinate to -1.
    """
    oc = classify_case(d)
    if oc is None:
        raise ValueError(f"{d} is outside the eight-case family")
    alg = CliffordAlgebra()
    factor_pairs: list[list[tuple[int, int]]] = [[], []]
    factor_units: list[list[int]] = [[], []]
    h_coords: list[list[HalfInt]] = [[], []]

    threes = [(l, s) for l, s in d.rows if l == 3]
    s3 = threes[0][1]
    f3 = _factor_of(s3)
    three_pair = alg.add_pair(f3, "3r")
    factor_pairs[f3].append(three_pair)
    h_coords[f3].append(hi(2))
    three_unit = alg.add_unit(1 - f3, "v3")
    factor_units[1 - f3].append(three_unit)

    k = sum(1 for l, _ in d.rows if l == 2) // 2
    two_pairs = []
    for t in range(k):
        pp = alg.add_pair(0, f"2p{t + 1}")
        pm = alg.add_pair(1, f"2m{t + 1}")
        factor_pairs[0].append(pp)
        factor_pairs[1].append(pm)
        h_coords[0].append(hi(1))
        h_coords[1].append(hi(1))
        two_pairs.append((pp, pm))

    one_units: dict[int, list[int]] = {0: [], 1: []}
    for idx, (l, s) in enumerate([r for r in d.rows if r[0] == 1]):
        f = _factor_of(s)
        u = alg.add_unit(f, f"u{idx + 1}")
        factor_units[f].append(u)
        one_units[f].append(u)

    swapped_pair = None
    if d.numeral == "II":
        # swap roles in the last 2-row pair on the 3-row's side
        if not two_pairs:
            raise ValueError("numeral without 2-rows")
        t = k - 1
        pair = two_pairs[t][0] if f3 == 0 else two_pairs[t][1]
        swapped_pair = (pair[1], pair[0])
        coords = h_coords[f3]
        # the swapped pair sits after the 3-row entry for factor f3
        coords[1 + t] = hi(-1)

    def pair_at(t: int, factor: int) -> tuple[int, int]:
        pr = two_pairs[t][factor]
        if swapped_pair is not None and factor == f3 and t == k - 1:
            return swapped_pair
        return pr

    e = alg.zero()
    half = Fraction(1, 2)
    e = e + (alg.gen(three_unit) * alg.gen(three_pair[1])).scale(half)
    for t in range(k):
        fp = pair_at(t, 0)
        fm = pair_at(t, 1)
        e = e + (alg.gen(fp[1]) * alg.gen(fm[1])).scale(half)

    # h = sum c_i H(eps_i) with H = (1 - e f)/2; coordinates stay in the
    # original labels, the II realization flips the swapped pair's sign
    h = alg.zero()
    for f in (0, 1):
        for j, pr in enumerate(factor_pairs[f]):
            coeff = h_coords[f][j]
            h = h + one_minus_ef(alg, *pr).scale(coeff.as_fraction() / 2)

    oriented = [(pair_at(t, 0), pair_at(t, 1)) for t in range(k)]
    return Realization(
        alg=alg,
        e=e,
        h=h,
        factor_pairs=factor_pairs,
        factor_units=factor_units,
        three_pair=three_pair,
        three_factor=f3,
        three_unit=three_unit,
        one_units=one_units,
        two_pairs=two_pairs,
        two_pairs_oriented=oriented,
        h_coords=h_coords,
    )


# -- matrices ---------------------------------------------------------------


def _gaussian_to_fraction(g: Gaussian) -> Fraction:
    if g.im != 0:
        raise ValueError("unexpected imaginary part")
    return g.re


def ad_matrix(x: CliffordElement) -> list[list[Fraction]]:
    """Matrix of ad(x) = [x, .] on the span of the generators."""
    alg = x.alg
    n = alg.ngen
    cols = []
    for j in range(n):
        img = x * alg.gen(j) - alg.gen(j) * x
        col = [Fraction(0)] * n
        for mask, coeff in img.terms.items():
            if bin(mask).count("1") != 1:
                raise ValueError("ad image left the vector space")
            col[mask.bit_length() - 1] = _gaussian_to_fraction(coeff)
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, m, l = len(A), len(B[0]), len(B)
    return [
        [sum(A[i][t] * B[t][j] for t in range(l)) for j in range(m)]
        for i in range(n)
    ]


def mat_rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    piv_col = 0
    for piv_col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][piv_col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][piv_col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][piv_col] != 0:
                factor = rows[r][piv_col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def jordan_type(mat: list[list[Fraction]]) -> tuple[int, ...]:
    n = len(mat)
    ranks = [n]
    power = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    while True:
        power = mat_mul(power, mat)
        r = mat_rank(power)
        ranks.append(r)
        if r == 0:
            break
    parts = []
    # number of blocks of size >= j is rank(mat^{j-1}) - rank(mat^j)
    for j in range(1, len(ranks)):
        count_ge = ranks[j - 1] - ranks[j]
        parts.append(count_ge)
    shape = []
    for size in range(len(parts), 0, -1):
        mult = parts[size - 1] - (parts[size] if size < len(parts) else 0)
        shape += [size] * mult
    return tuple(sorted(shape, reverse=True))


@dataclass
class LieTriple:
    case: OrbitCase
    realization: Realization
    e_mat: list[list[Fraction]]
    h_mat: list[list[Fraction]]
    h_weight: tuple[Weight, Weight]

    def jordan_shape(self) -> tuple[int, ...]:
        return jordan_type(self.e_mat)


def lie_triple(c: OrbitCase) -> LieTriple:
    real = clifford_realization(c.diagram)
    e_mat = ad_matrix(real.e)
    h_mat = ad_matrix(real.h)
    # [h, e] = 2e
    comm = real.h * real.e - real.e * real.h
    if not (comm - real.e.scale(2)).is_zero():
        raise AssertionError("[h, e] != 2e")
    shape = jordan_type(e_mat)
    if shape != c.diagram.shape():
        raise AssertionError(f"Jordan type {shape} != diagram {c.diagram.shape()}")
    weights = []
    for f in (0, 1):
        coords = sorted(real.h_coords[f], reverse=True)
        # unit generators span zero-weight planes: pad to the factor rank
        dim = 2 * len(real.factor_pairs[f]) + len(real.factor_units[f])
        rank = dim // 2
        coords = coords + [hi(0)] * (rank - len(coords))
        amb = "D" if dim % 2 == 0 else "B"
        weights.append(Weight(tuple(coords), amb))
    return LieTriple(c, real, e_mat, h_mat, (weights[0], weights[1]))


# ---------------------------------------------------------------------------
# Dimensions
# ---------------------------------------------------------------------------


def _conjugate_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def orbit_dimension_closed(parts: tuple[int, ...]) -> int:
    """Complex orbit dimension for so(N): dim so(N) - dim centralizer,
    with dim z(e) = (sum of squared column lengths - #odd parts) / 2."""
    n_total = sum(parts)
    conj = _conjugate_partition(tuple(sorted(parts, reverse=True)))
    sq = sum(c * c for c in conj)
    odd = sum(1 for p in parts if p % 2 == 1)
    cent = (sq - odd) // 2
    return n_total * (n_total - 1) // 2 - cent


def so_basis_matrices(alg: CliffordAlgebra) -> list[list[list[Fraction]]]:
    """Matrix basis of so(V) w.r.t. the generator basis and its pairing."""
    n = alg.ngen
    B = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if alg.partner[i] is not None:
            B[i][alg.partner[i]] = Fraction(1)
        else:
            B[i][i] = Fraction(1)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            M = [[Fraction(0)] * n for _ in range(n)]
            # M v = B(w, v) u - B(u, v) w with u = g_i, w = g_j
            for kcol in range(n):
                M[i][kcol] += B[j][kcol]
                M[j][kcol] -= B[i][kcol]
            out.append(M)
    return out


def mat_rank_int(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    from math import gcd

    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            x = rows[r][col]
            if not x:
                continue
            row = [pv * a - x * b for a, b in zip(rows[r], rows[rank])]
            g = 0
            for v in row:
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = [v // g for v in row]
            rows[r] = row
        rank += 1
        if rank == len(rows):
            break
    return rank


def centralizer_nullity_dimension(d) -> int:
    """Oracle: dim of the complex orbit through the matrix realization,
    dim so(N) - nullity of X -> [X, e]."""
    if isinstance(d, SignedDiagram):
        real = clifford_realization(d)
        e_mat = ad_matrix(real.e)
        alg = real.alg
    else:
        alg, e_mat = _complex_matrix_realization(d)
    n = alg.ngen
    # entries of e are halves at worst; clear denominators once
    e_int = [[int(2 * e_mat[i][j]) for j in range(n)] for i in range(n)]
    basis = so_basis_matrices(alg)
    rows = []
    for M in basis:
        Mi = [[int(M[i][j]) for j in range(n)] for i in range(n)]
        flat = []
        for i in range(n):
            for j in range(n):
                flat.append(
                    sum(Mi[i][t] * e_int[t][j] - e_int[i][t] * Mi[t][j] for t in range(n))
                )
        rows.append(flat)
    return mat_rank_int(rows)


def complex_realization(d: ComplexDiagram):
    """(alg, e, odd_blocks, merged_chains) for a complex orthogonal
    partition.  Unpaired odd rows get a unit-vector block (odd_blocks
    records (v, pairs) for the E-element); any two rows of equal length are
    merged into a hyperbolic chain (merged_chains records (length, pairs)
    for the connecting circles)."""
    from collections import Counter

    if not d.is_orthogonal():
        raise InvalidSignature(f"{d} is not an orthogonal partition")
    alg = CliffordAlgebra()
    e = alg.zero()
    half = Fraction(1, 2)
    counts = Counter(d.parts)
    tag = 0
    odd_blocks: list[tuple[int, list[tuple[int, int]]]] = []
    merged_chains: list[tuple[int, list[tuple[int, int]]]] = []

    def odd_block(m: int):
        nonlocal e, tag
        tag += 1
        pairs = [alg.add_pair(0, f"o{tag}.{j}") for j in range(m)]
        v = alg.add_unit(0, f"vo{tag}")
        for j in range(m - 1):
            e = e + (alg.gen(pairs[j + 1][0]) * alg.gen(pairs[j][1])).scale(half)
        if m >= 1:
            e = e + (alg.gen(v) * alg.gen(pairs[m - 1][1])).scale(half)
        odd_blocks.append((v, pairs))

    def chain_pair(length: int):
        # two rows of the same length merged into e_1 -> ... -> e_L -> 0
        nonlocal e, tag
        tag += 1
        pairs = [alg.add_pair(0, f"c{tag}.{j}") for j in range(length)]
        for j in range(length - 1):
            e = e + (alg.gen(pairs[j + 1][0]) * alg.gen(pairs[j][1])).scale(half)
        merged_chains.append((length, pairs))

    for length in sorted(counts, reverse=True):
        mult = counts[length]
        if length % 2 == 0:
            assert mult % 2 == 0
            for _ in range(mult // 2):
                chain_pair(length)
        else:
            m = (length - 1) // 2
            for _ in range(mult // 2):
                chain_pair(length)
            if mult % 2 == 1:
                odd_block(m)
    return alg, e, odd_blocks, merged_chains


def _complex_matrix_realization(d: ComplexDiagram):
    alg, e, _, _ = complex_realization(d)
    return alg, ad_matrix(e)


def orbit_dimension(d, signature: tuple[int, int] | None = None):
    """(complexDim, kOrbitDim, isSmall).

    complexDim by the closed formula (verified elsewhere against the
    centralizer-nullity oracle); kOrbitDim is half of it.  Smallness is
    dim(K-orbit) <= rank(k) + #positive roots of k for the signature's
    maximal compact factor; a bare partition is judged with k = so(2n, C)
    itself (the complex group seen as a real group).
    """
    if isinstance(d, SignedDiagram):
        parts = d.shape()
        signature = d.signature() if signature is None else signature
    elif isinstance(d, ComplexDiagram):
        parts = d.parts
    else:
        parts = tuple(sorted(d, reverse=True))
    cdim = orbit_dimension_closed(parts)
    kdim = cdim // 2
    if signature is not None:
        a, b = signature
        budget = _k_budget(a) + _k_budget(b)
        small = kdim <= budget
    else:
        n = sum(parts) // 2
        small = cdim <= 2 * (n + n * (n - 1))
    return cdim, kdim, small


def _k_budget(m: int) -> int:
    r = m // 2
    if m % 2 == 0:
        return r + r * (r - 1)
    return r + r * r


# ---------------------------------------------------------------------------
# Component groups
# ---------------------------------------------------------------------------


def component_group(d) -> str:
    """Component group tag of the centralizer in the Spin double cover."""
    if isinstance(d, OrbitCase):
        d = d.diagram
    if isinstance(d, SignedDiagram):
        oc = classify_case(d)
        if oc is None:
            raise ValueError(f"{d} outside the eight-case family")
        if oc.case_id == 1:
            return "Z2xZ2"
        if oc.case_id in (2, 3, 4, 7, 8):
            return "Z2"
        r = oc.r_plus if oc.case_id == 5 else oc.r_minus
        return "Z2" if r == 0 else "Trivial"
    # complex partition
    from collections import Counter

    counts = Counter(d.parts)
    odd_sizes = sorted(s for s in counts if s % 2 == 1)
    m = len(odd_sizes)
    if m == 0:
        return "Z2" if d.parts else "Trivial"
    if any(counts[s] > 1 for s in odd_sizes):
        power = m - 1
        return {0: "Trivial", 1: "Z2", 2: "Z2xZ2"}.get(power, f"Z2^{power}")
    if m == 2:
        k1 = (odd_sizes[0] - 1) // 2
        k2 = (odd_sizes[1] - 1) // 2
        # (E_a E_b)^2 = -(-1)^{k1 + k2}
        return "Z2xZ2" if (k1 + k2) % 2 == 1 else "Z4"
    return f"order-2^{m} extension of Z2^{m - 1}"
