"""Weyl groups of types A/B/D and the brute-force character oracle.

Formal characters are sparse dicts keyed by doubled-coordinate tuples, so
everything stays in exact integer arithmetic.  The oracle machinery
(irreducible characters by alternating-sum division, tensor products by
iterated highest weight extraction, branching by torus restriction) is the
independent route against which the closed combinatorial rules
(Pieri row, Littlewood branching, spin tensoring) are checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .halfint import HalfInt, hi
from .weights import Weight, is_dominant

DEFAULT_RANK_CAP = 6


class RankCapExceeded(ValueError):
    pass


class NonDominant(ValueError):
    pass


# ---------------------------------------------------------------------------
# Weyl group elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: (w x)_i = signs[i] * x[perm[i]]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    type_tag: str  # "A", "B" or "D"

    def apply_doubled(self, tw: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(s * tw[p] for p, s in zip(self.perm, self.signs))

    def apply(self, w: Weight) -> Weight:
        return Weight.from_doubled(self.apply_doubled(w.doubled()), w.ambient)

    def sign(self) -> int:
        """Determinant of the signed permutation matrix, equal to (-1)^length."""
        return _perm_sign(self.perm) * _prod(self.signs)

    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        n = len(self.perm)
        count = 0
        for alpha in _positive_roots(self.type_tag, n):
            img = self.apply_doubled(alpha)
            if _is_negative_root(img):
                count += 1
        return count


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _perm_sign(perm: tuple[int, ...]) -> int:
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


@lru_cache(maxsize=None)
def _positive_roots(type_tag: str, n: int) -> tuple[tuple[int, ...], ...]:
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            roots.append(tuple(e))
            if type_tag in ("B", "D"):
                e2 = [0] * n
                e2[i], e2[j] = 1, 1
                roots.append(tuple(e2))
    if type_tag == "B":
        for i in range(n):
            e = [0] * n
            e[i] = 1
            roots.append(tuple(e))
    return tuple(roots)


def _is_negative_root(v: tuple[int, ...]) -> bool:
    for x in v:
        if x > 0:
            return False
        if x < 0:
            return True
    return False


@lru_cache(maxsize=8)
def weyl_group(type_tag: str, n: int, cap: int = DEFAULT_RANK_CAP) -> tuple[WeylElement, ...]:
    if n > cap:
        raise RankCapExceeded(f"rank {n} exceeds cap {cap}")
    perms = list(itertools.permutations(range(n)))
    out = []
    if type_tag == "A":
        return tuple(WeylElement(p, (1,) * n, "A") for p in perms)
    for p in perms:
        for signs in itertools.product((1, -1), repeat=n):
            if type_tag == "D" and _prod(signs) != 1:
                continue
            out.append(WeylElement(p, signs, type_tag))
    return tuple(out)


def weyl_orbit(w: Weight, cap: int = DEFAULT_RANK_CAP) -> set[Weight]:
    group = weyl_group(w.ambient, w.rank, cap)
    return {g.apply(w) for g in group}


# ---------------------------------------------------------------------------
# Formal characters
# ---------------------------------------------------------------------------


class FormalCharacter:
    """Sparse map weight -> integer multiplicity (negative allowed)."""

    __slots__ = ("terms", "ambient")

    def __init__(self, ambient: str, terms: dict[tuple[int, ...], int] | None = None):
        self.ambient = ambient
        self.terms: dict[tuple[int, ...], int] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[k] = v

    def copy(self) -> "FormalCharacter":
        c = FormalCharacter(self.ambient)
        c.terms = dict(self.terms)
        return c

    def add_term(self, key: tuple[int, ...], mult: int) -> None:
        if not mult:
            return
        new = self.terms.get(key, 0) + mult
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = self.copy()
        for k, v in other.terms.items():
            out.add_term(k, v)
        return out

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = self.copy()
        for k, v in other.terms.items():
            out.add_term(k, -v)
        return out

    def scale(self, n: int) -> "FormalCharacter":
        out = FormalCharacter(self.ambient)
        if n:
            out.terms = {k: n * v for k, v in self.terms.items()}
        return out

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = FormalCharacter(self.ambient)
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        for k1, v1 in small.terms.items():
            for k2, v2 in big.terms.items():
                out.add_term(tuple(a + b for a, b in zip(k1, k2)), v1 * v2)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def mult(self, w: Weight) -> int:
        return self.terms.get(w.doubled(), 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def lex_max(self) -> tuple[int, ...]:
        return max(self.terms)

    def map_keys(self, fn, ambient: str) -> "FormalCharacter":
        out = FormalCharacter(ambient)
        for k, v in self.terms.items():
            out.add_term(fn(k), v)
        return out

    def is_weyl_invariant(self, cap: int = DEFAULT_RANK_CAP) -> bool:
        if not self.terms:
            return True
        n = len(next(iter(self.terms)))
        for g in weyl_group(self.ambient, n, cap):
            for k, v in self.terms.items():
                if self.terms.get(g.apply_doubled(k), 0) != v:
                    return False
        return True


def _rho_doubled(type_tag: str, n: int) -> tuple[int, ...]:
    if type_tag == "A":
        # any rho-like strictly decreasing vector works for type A; use the
        # symmetric one so dot-action formulas agree with the usual gl rho
        return tuple(n - 1 - 2 * i for i in range(n))
    if type_tag == "B":
        return tuple(2 * (n - i) - 1 for i in range(n))
    return tuple(2 * (n - 1 - i) for i in range(n))


def alternating_sum(lam: Weight, cap: int = DEFAULT_RANK_CAP) -> FormalCharacter:
    """sum over W of sign(w) e^{w lam} (no rho shift here)."""
    out = FormalCharacter(lam.ambient)
    tw = lam.doubled()
    for g in weyl_group(lam.ambient, lam.rank, cap):
        out.add_term(g.apply_doubled(tw), g.sign())
    return out


def weyl_dimension(lam: Weight) -> int:
    if not is_dominant(lam):
        raise NonDominant(str(lam))
    n = lam.rank
    rho = _rho_doubled(lam.ambient, n)
    num = Fraction(1)
    lr = [c.twice + r for c, r in zip(lam.coords, rho)]
    for alpha in _positive_roots(lam.ambient, n):
        top = sum(a * x for a, x in zip(alpha, lr))
        bot = sum(a * x for a, x in zip(alpha, rho))
        num *= Fraction(top, bot)
    assert num.denominator == 1
    return int(num)


def irr_character(lam: Weight, cap: int = DEFAULT_RANK_CAP) -> FormalCharacter:
    """Weyl character formula evaluated as an exact alternating-sum quotient.

    The numerator sum over W of sign(w) e^{w(lam+rho)} is divided by the
    corresponding rho-sum inside the group ring; division proceeds by
    repeatedly cancelling the lex-leading term, which is valid because the
    denominator's lex-leading monomial is e^{rho} with coefficient 1.
    """
    if not is_dominant(lam):
        raise NonDominant(str(lam))
    n = lam.rank
    if n > cap:
        raise RankCapExceeded(f"rank {n} exceeds cap {cap}")
    if lam.ambient == "A":
        ch = gl_character(lam)
        assert ch.mult(lam) == 1
        assert ch.total() == weyl_dimension(lam)
        return ch
    rho = _rho_doubled(lam.ambient, n)
    lam_rho = Weight.from_doubled(
        tuple(c.twice + r for c, r in zip(lam.coords, rho)), lam.ambient
    )
    num = alternating_sum(lam_rho, cap)
    den = alternating_sum(Weight.from_doubled(rho, lam.ambient), cap)
    quo = FormalCharacter(lam.ambient)
    rem = num
    den_lead = den.lex_max()
    assert den.terms[den_lead] == 1
    while rem:
        lead = rem.lex_max()
        coeff = rem.terms[lead]
        qkey = tuple(a - b for a, b in zip(lead, den_lead))
        quo.add_term(qkey, coeff)
        rem = rem - den.map_keys(lambda k: tuple(a + b for a, b in zip(k, qkey)), rem.ambient).scale(coeff)
    assert quo.mult(lam) == 1
    assert quo.total() == weyl_dimension(lam)
    return quo


def decompose_character(ch: FormalCharacter, cap: int = DEFAULT_RANK_CAP) -> dict[Weight, int]:
    """Write a genuine (non-virtual) character as a sum of irreducibles.

    Iterated extraction of the lex-maximal remaining weight; the lex-max
    support element of a W-invariant character is dominant.
    """
    rem = ch.copy()
    out: dict[Weight, int] = {}
    while rem:
        lead = rem.lex_max()
        lam = Weight.from_doubled(lead, ch.ambient)
        if not is_dominant(lam):
            raise ValueError(f"lex-max term {lam} not dominant; virtual character?")
        mult = rem.terms[lead]
        if mult < 0:
            raise ValueError("negative leading multiplicity; virtual character")
        rem = rem - irr_character(lam, cap).scale(mult)
        out[lam] = out.get(lam, 0) + mult
    return out


def tensor_decompose(lam: Weight, mu: Weight, cap: int = DEFAULT_RANK_CAP) -> dict[Weight, int]:
    """Decompose the tensor product via the character-product oracle."""
    if lam.ambient != mu.ambient or lam.rank != mu.rank:
        raise ValueError("tensor factors must share ambient type and rank")
    ch = irr_character(lam, cap) * irr_character(mu, cap)
    out = decompose_character(ch, cap)
    assert sum(weyl_dimension(w) * m for w, m in out.items()) == weyl_dimension(lam) * weyl_dimension(mu)
    return out


# ---------------------------------------------------------------------------
# Closed combinatorial rules (checked against the oracle)
# ---------------------------------------------------------------------------


def pieri_row(beta: Weight, k: int) -> list[Weight]:
    """Tensor a gl irreducible with the one-row representation of degree k.

    Constituents are beta + m with m_i >= 0, sum(m) = k and
    m_{i+1} <= beta_i - beta_{i+1}; each occurs once.
    """
    if beta.ambient != "A":
        raise ValueError("pieri_row expects a gl weight")
    if not is_dominant(beta):
        raise NonDominant(str(beta))
    if not beta.all_integral():
        raise ValueError("pieri_row expects integer coordinates")
    b = [c.as_int() for c in beta.coords]
    p = len(b)
    out: list[Weight] = []

    def rec(i: int, remaining: int, m: list[int]):
        if i == p:
            if remaining == 0:
                out.append(Weight.make([b[j] + m[j] for j in range(p)], "A"))
            return
        top = remaining if i == 0 else min(remaining, b[i - 1] - b[i])
        for v in range(top + 1):
            rec(i + 1, remaining - v, m + [v])

    rec(0, k, [])
    return sorted(out, reverse=True)


def _lr_coefficient(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu,nu} by direct tableau count.

    Counts semistandard skew tableaux of shape lam/mu and content nu whose
    reverse reading word is a lattice word.
    """
    lam = tuple(x for x in lam)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    rows = len(lam)
    mu = tuple(mu) + (0,) * (rows - len(mu))
    if any(m > l for m, l in zip(mu, lam)):
        return 0
    nu = tuple(x for x in nu if x > 0)
    cells = []
    for r in range(rows):
        for c in range(mu[r], lam[r]):
            cells.append((r, c))
    if not cells and not nu:
        return 1
    count = 0
    filling: dict[tuple[int, int], int] = {}

    def ok(r: int, c: int, val: int) -> bool:
        # cells fill in reverse reading order, so the right neighbour and the
        # cell above are already placed
        right = filling.get((r, c + 1))
        if right is not None and val > right:
            return False
        up = filling.get((r - 1, c))
        if up is not None and up >= val:
            return False
        return True

    content = [0] * (len(nu) + 1)

    def rec(idx: int):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        for val in range(1, len(nu) + 1):
            if content[val] >= nu[val - 1]:
                continue
            # lattice condition in the column-by-column fill order requires
            # tracking the reverse reading word; fill row by row right-to-left
            if not ok(r, c, val):
                continue
            if val > 1 and content[val] >= content[val - 1]:
                continue
            filling[(r, c)] = val
            content[val] += 1
            rec(idx + 1)
            content[val] -= 1
            del filling[(r, c)]

    # reverse reading word order: rows top to bottom, right to left inside a row
    cells.sort(key=lambda rc: (rc[0], -rc[1]))
    rec(0)
    return count


def lr_coefficient(lam, mu, nu) -> int:
    return _lr_coefficient(tuple(lam), tuple(mu), tuple(nu))


class OutOfStableRange(ValueError):
    pass


def littlewood_branch(lam: tuple[int, ...], m: int) -> dict[Weight, int]:
    """Branching gl(m) -> so(m) by the stable-range Littlewood rule.

    Multiplicity of the O(m) label tau in F(lam) is the sum of LR
    coefficients c^lam_{tau, 2 delta}; labels convert to so(m) highest
    weights (splitting into a +/- pair for even m with a full-length label).
    Requires len(lam) <= (m+1)/2.
    """
    lam = tuple(x for x in lam if x != 0)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(x < 0 for x in lam):
        raise ValueError("lam must be a partition")
    if 2 * len(lam) > m + 1:
        raise OutOfStableRange(f"len(lam)={len(lam)} exceeds (m+1)/2 with m={m}")
    l_rank = m // 2
    size = sum(lam)
    out: dict[Weight, int] = {}
    for tau in _subpartitions(lam):
        rest = size - sum(tau)
        if rest % 2 != 0:
            continue
        conj = _conjugate(tau)
        if conj and conj[0] + (conj[1] if len(conj) > 1 else 0) > m:
            continue  # not an O(m) label (first two columns exceed m)
        mult = 0
        for delta in _partitions_of(rest // 2, max_len=len(lam)):
            two_delta = tuple(2 * d for d in delta)
            mult += lr_coefficient(lam, tau, two_delta)
        if mult == 0:
            continue
        for w in _o_label_to_so_weights(tau, m, l_rank):
            out[w] = out.get(w, 0) + mult
    return out


def _o_label_to_so_weights(tau: tuple[int, ...], m: int, l_rank: int):
    """Convert an O(m) partition label to so(m) highest weight(s)."""
    amb = "B" if m % 2 else "D"
    if len(tau) <= l_rank:
        padded = tuple(tau) + (0,) * (l_rank - len(tau))
        if m % 2 == 0 and len(tau) == l_rank and tau[-1] > 0:
            minus = padded[:-1] + (-padded[-1],)
            return [Weight.make(padded, amb), Weight.make(minus, amb)]
        return [Weight.make(padded, amb)]
    # odd m with one extra row: pass to the associate label (first column
    # replaced by m minus itself), which restricts to the same so(m) weight
    if m % 2 == 1 and len(tau) == l_rank + 1:
        conj = _conjugate(tau)
        conj = (m - conj[0],) + conj[1:]
        assoc = _conjugate(tuple(sorted(conj, reverse=True)))
        padded = tuple(assoc) + (0,) * (l_rank - len(assoc))
        return [Weight.make(padded, amb)]
    raise OutOfStableRange(f"label {tau} invalid for O({m})")


def _conjugate(part: tuple[int, ...]) -> tuple[int, ...]:
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > j) for j in range(part[0]))


def _subpartitions(lam: tuple[int, ...]):
    if not lam:
        yield ()
        return
    lam = tuple(lam)

    def rec(i: int, prev: int, cur: list[int]):
        if i == len(lam):
            yield tuple(x for x in cur if x)
            return
        for v in range(min(lam[i], prev), -1, -1):
            yield from rec(i + 1, v, cur + [v])

    yield from rec(0, lam[0], [])


def _partitions_of(n: int, max_len: int):
    def rec(rem: int, mx: int, cur: list[int]):
        if rem == 0:
            yield tuple(cur)
            return
        if len(cur) == max_len:
            return
        for v in range(min(rem, mx), 0, -1):
            yield from rec(rem - v, v, cur + [v])

    yield from rec(n, n, [])


@lru_cache(maxsize=None)
def _gl_char_doubled(lam: tuple[int, ...]) -> "FormalCharacter":
    """gl character by Gelfand-Tsetlin branching (fast for any rank).

    Keys are doubled coordinates; lam is a doubled dominant tuple."""
    m = len(lam)
    ch = FormalCharacter("A")
    if m == 0:
        ch.add_term((), 1)
        return ch
    if m == 1:
        ch.add_term((lam[0],), 1)
        return ch
    total = sum(lam)
    # branch to gl(m-1): mu interlaces lam
    def interlace(i, cur):
        if i == m - 1:
            sub = _gl_char_doubled(tuple(cur))
            last = total - sum(cur)
            for key, mult in sub.terms.items():
                ch.add_term(key + (last,), mult)
            return
        top, bot = lam[i], lam[i + 1]
        x = top
        while x >= bot:
            interlace(i + 1, cur + [x])
            x -= 2
    interlace(0, [])
    return ch


def gl_character(lam: Weight) -> FormalCharacter:
    if lam.ambient != "A":
        raise ValueError("gl_character expects a type A weight")
    if not is_dominant(lam):
        raise NonDominant(str(lam))
    return _gl_char_doubled(lam.doubled())


def restrict_gl_to_so(lam: Weight, m: int, cap: int = DEFAULT_RANK_CAP) -> dict[Weight, int]:
    """Character-restriction oracle for gl(m) -> so(m).

    Standard embedding: gl weights (x_1..x_m) restrict to the so torus as
    (x_1 - x_m, x_2 - x_{m-1}, ...), dropping the middle entry for odd m.
    """
    if lam.rank != m:
        raise ValueError("weight rank must equal m")
    l_rank = m // 2
    ch = gl_character(Weight(lam.coords, "A"))

    def proj(key: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(key[i] - key[m - 1 - i] for i in range(l_rank))

    amb = "B" if m % 2 else "D"
    restricted = ch.map_keys(proj, amb)
    return decompose_character(restricted, cap)


def spin_character(p: int, half: str | None = None) -> FormalCharacter:
    """Character of the so(2p) spin module: full, "plus" or "minus" half."""
    ch = FormalCharacter("D")
    for signs in itertools.product((1, -1), repeat=p):
        neg = sum(1 for s in signs if s < 0)
        if half == "plus" and neg % 2 == 1:
            continue
        if half == "minus" and neg % 2 == 0:
            continue
        ch.add_term(tuple(signs), 1)
    return ch


def spin_tensor(beta: Weight, half: str | None = None) -> list[Weight]:
    """F_{so(2p)}(beta) tensor the spin module: beta + eps/2 over sign
    vectors eps with dominant result (even/odd minus count for a half)."""
    if beta.ambient != "D":
        raise ValueError("spin_tensor expects a type D weight")
    if not is_dominant(beta):
        raise NonDominant(str(beta))
    p = beta.rank
    out = []
    for signs in itertools.product((1, -1), repeat=p):
        neg = sum(1 for s in signs if s < 0)
        if half == "plus" and neg % 2 == 1:
            continue
        if half == "minus" and neg % 2 == 0:
            continue
        cand = Weight.from_doubled(
            tuple(c.twice + s for c, s in zip(beta.coords, signs)), "D"
        )
        if is_dominant(cand):
            out.append(cand)
    return sorted(out, reverse=True)


def spin_tensor_gl(beta: Weight, k_minus: int) -> list[Weight]:
    """gl(p) variant: tensor with the (1/2,..,1/2,-1/2,..,-1/2) weight
    having exactly k_minus minus signs; constituents beta + eps/2 with
    exactly k_minus negative eps, dominant, multiplicity one."""
    if beta.ambient != "A":
        raise ValueError("spin_tensor_gl expects a gl weight")
    if not is_dominant(beta):
        raise NonDominant(str(beta))
    p = beta.rank
    out = []
    for neg_pos in itertools.combinations(range(p), k_minus):
        signs = [1] * p
        for i in neg_pos:
            signs[i] = -1
        cand = Weight.from_doubled(
            tuple(c.twice + s for c, s in zip(beta.coords, signs)), "A"
        )
        if is_dominant(cand):
            out.append(cand)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# Denominator identity
# ---------------------------------------------------------------------------


def lambda_pair(n: int, k: int) -> tuple[Weight, Weight]:
    """The so(2n) infinitesimal character and its so(2n+1) partner.

    lam  = (n-k-2, ..., 1, 0; k+1/2, ..., 3/2, 1/2)
    lam' = (n-k-3/2, ..., 3/2, 1/2; k+1, ..., 2, 1)
    """
    if k < 0 or n - k - 2 < 0:
        raise ValueError(f"no such pair for n={n}, k={k}")
    ints = [hi(v) for v in range(n - k - 2, -1, -1)]
    halves = [HalfInt(2 * v + 1) for v in range(k, -1, -1)]
    lam = Weight(tuple(ints + halves), "D")
    halves2 = [HalfInt(2 * v + 1) for v in range(n - k - 2, -1, -1)]
    ints2 = [hi(v) for v in range(k + 1, 0, -1)]
    lamp = Weight(tuple(halves2 + ints2), "B")
    return lam, lamp


def check_denominator_identity(n: int, k: int, cap: int = DEFAULT_RANK_CAP) -> bool:
    """Exact virtual-character identity
    (sum over W(D_n) of sign e^{w lam}) * prod_i (e^{e_i/2} - e^{-e_i/2})
      == sum over W(B_n) of sign e^{w lam'}.
    """
    if n > cap:
        raise RankCapExceeded(f"rank {n} exceeds cap {cap}")
    lam, lamp = lambda_pair(n, k)
    lhs_d = alternating_sum(lam, cap)
    prod = FormalCharacter("D", {(0,) * n: 1})
    for i in range(n):
        factor = FormalCharacter("D")
        plus = [0] * n
        plus[i] = 1
        minus = [0] * n
        minus[i] = -1
        factor.add_term(tuple(plus), 1)
        factor.add_term(tuple(minus), -1)
        prod = prod * factor
    lhs = lhs_d * prod
    rhs = alternating_sum(lamp, cap)
    return lhs.terms == rhs.terms
