"""Characters and sizes of the degenerate irreducible quotients.

Every module here is graded by the eigenvalues of -3Y and its character
is the generating function ch = sum_d (dim of the degree d piece) t^d.
An induced module has the closed form

    ch M = t^(-3y) * dim(F) * (1+t)^3 / (1-t)^3,

six odd letters of degree 1 and three even hats of degree 2 making up
the PBW factor.  The irreducible quotient I at a grid node is the module
modulo the kernel of its outgoing arrow, so its character follows from
the alternating sum of induced characters along the chain of incoming
arrows, corrected by the homology of the combined complex at each node
visited.  That homology vanishes everywhere except at three nodes, and
every chain ends on the diagonal of the first quadrant where the
alternating tail has a closed form: the letter dimensions grow as a
cubic polynomial in the diagonal step, and expanding that cubic in the
binomial basis C(j+k, k) converts the tail into a finite combination of
1/(1+t)^(k+1).

Sizes are one quarter of the rank over the polynomial part of the
enveloping algebra, read off as the limit of (1-t^2)^3 ch at t = 1.  The
parity of a basis vector equals the parity of its letter count, which is
determined by the degree alone, so the even/odd split of the size comes
from the same evaluation at t = -1 and no separate supercharacter
bookkeeping is needed.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb

from .linalg import PoleAtMinusOne, RationalFunction, series_of
from .operators import next_upstream
from .verma import series_label, y3_component


class NotDegenerate(ValueError):
    """The weight does not lie on any of the four degenerate series."""


def dim_f(p, q, r):
    """Dimension of the irreducible (p, q; r) inducing representation."""
    return (p + 1) * (q + 1) * (p + q + 2) * (r + 1) // 2


# PBW factor (1+t)^6 / (1-t^2)^3 of an induced character, reduced
_PBW = RationalFunction([1, 3, 3, 1], [1, -3, 3, -1])

# (1-t^2)^3, the normalizer whose t = 1 limit defines sizes
_SIZE_NORM = [1, 0, -3, 0, 3, 0, -1]


class ModuleLabel:
    """Highest weight (p, q; r; y) of a degenerate irreducible.

    The four series each leave one of p, q zero and fix the charge y in
    terms of the remaining labels:

        A: q = 0, y = 2p/3 - r      B: q = 0, y = 2p/3 + r + 2
        C: p = 0, y = -2q/3 - r - 2 D: p = 0, y = -2q/3 + r

    ``first`` is p for the A and B series and q for C and D.
    """

    __slots__ = ("series", "first", "r")

    def __init__(self, series, first, r):
        if series not in ("A", "B", "C", "D"):
            raise ValueError("unknown series %r" % (series,))
        if first < 0 or r < 0:
            raise ValueError("series labels must be nonnegative")
        self.series = series
        self.first = int(first)
        self.r = int(r)

    @property
    def p(self):
        return self.first if self.series in ("A", "B") else 0

    @property
    def q(self):
        return self.first if self.series in ("C", "D") else 0

    @property
    def y(self):
        s, a, r = self.series, self.first, self.r
        if s == "A":
            return Fraction(2 * a, 3) - r
        if s == "B":
            return Fraction(2 * a, 3) + r + 2
        if s == "C":
            return -Fraction(2 * a, 3) - r - 2
        return -Fraction(2 * a, 3) + r

    def weights(self):
        return (self.p, self.q, self.r, self.y)

    def node(self):
        """Grid node whose module has this label as its top."""
        s, a, r = self.series, self.first, self.r
        if s == "A":
            return ("A", a, r)
        if s == "B":
            return ("B", a, -r)
        if s == "C":
            return ("C", -a, r)
        return ("D", -a, -r)

    @classmethod
    def from_weights(cls, p, q, r, y):
        if p < 0 or q < 0 or r < 0:
            raise NotDegenerate("labels (%s, %s; %s) are not dominant" % (p, q, r))
        y = Fraction(y)
        if q == 0 and y == Fraction(2 * p, 3) - r:
            return cls("A", p, r)
        if q == 0 and y == Fraction(2 * p, 3) + r + 2:
            return cls("B", p, r)
        if p == 0 and y == -Fraction(2 * q, 3) - r - 2:
            return cls("C", q, r)
        if p == 0 and y == -Fraction(2 * q, 3) + r:
            return cls("D", q, r)
        raise NotDegenerate("(%s, %s; %s; %s) lies on none of the four series"
                            % (p, q, r, y))

    @classmethod
    def of_node(cls, node):
        sp, m, n = node
        p, q, r = series_label(sp, m, n)
        return cls(sp[0], p or q, r)

    def __eq__(self, other):
        return (isinstance(other, ModuleLabel)
                and self.weights() == other.weights())

    def __hash__(self):
        return hash(self.weights())

    def __repr__(self):
        return "ModuleLabel(%r, %d, %d)" % (self.series, self.first, self.r)


def _as_label(label):
    if isinstance(label, ModuleLabel):
        return label
    if isinstance(label, tuple):
        if len(label) == 4:
            return ModuleLabel.from_weights(*label)
        if len(label) == 3 and isinstance(label[0], str):
            return ModuleLabel.of_node(label)
    raise TypeError("expected a ModuleLabel, a (p, q, r, y) tuple or a node")


def _verma_ch(node):
    sp, m, n = node
    p, q, r = series_label(sp, m, n)
    top = RationalFunction([dim_f(p, q, r)], [1], -y3_component(sp, m, n))
    return top * _PBW


def ch_verma(label):
    """Character of the induced module with the given top, rational in t."""
    return _verma_ch(_as_label(label).node())


@lru_cache(maxsize=None)
def _a_tail(m, n):
    """Alternating Verma character sum along the diagonal from (m, n).

    sum_{j>=0} (-1)^j ch M_A(m+j, n+j): the inducing dimension is the
    cubic P(j) = (m+j+1)(m+j+2)(n+j+1)/2, and in the binomial basis
    P(j) = sum_k c_k C(j+k, k) each term sums to c_k / (1+t)^(k+1).
    """
    rows = [[Fraction(comb(j + k, k)) for k in range(4)] for j in range(4)]
    vals = [Fraction((m + j + 1) * (m + j + 2) * (n + j + 1), 2)
            for j in range(4)]
    for i in range(4):
        piv = rows[i][i]
        vals[i] /= piv
        rows[i] = [x / piv for x in rows[i]]
        for j in range(4):
            if j != i and rows[j][i]:
                f = rows[j][i]
                rows[j] = [a - f * b for a, b in zip(rows[j], rows[i])]
                vals[j] -= f * vals[i]
    tail = RationalFunction([])
    for k, ck in enumerate(vals):
        tail = tail + RationalFunction([ck], [comb(k + 1, i) for i in range(k + 2)])
    return (RationalFunction([1], [1], 3 * n - 2 * m) * _PBW * tail).simplified()


def _correction(node):
    """Character of the combined-complex homology at a node, if nonzero."""
    if node == ("A", 1, 1):
        return _a_tail(0, 1)
    if node == ("D", -1, -1):
        return RationalFunction([1]) + _a_tail(0, 1)
    if node == ("D", -1, -2):
        return RationalFunction([1])
    return None


def ch_irreducible(label):
    """Character of the degenerate irreducible with the given label.

    Accepts a ModuleLabel, a (p, q, r, y) weight tuple (NotDegenerate if
    it lies on no series) or a grid node.  The result is an exact
    RationalFunction in t.
    """
    label = _as_label(label)
    if label.weights() == (0, 0, 0, 0):
        return RationalFunction([1])
    total = RationalFunction([])
    sign = 1
    node = label.node()
    while True:
        sp, m, n = node
        if sp == "A" and (m, n) != (1, 1):
            return (total + sign * _a_tail(m, n)).simplified()
        term = _verma_ch(node)
        corr = _correction(node)
        if corr is not None:
            term = term - corr
        total = total + sign * term
        sign = -sign
        node = next_upstream(*node)[1]


def ch_series(label, truncation_order):
    """Graded dimensions of the irreducible as a LaurentSeries."""
    return series_of(ch_irreducible(label), truncation_order)


class SizeValue:
    """Exact size of a module together with its even/odd split."""

    __slots__ = ("total", "even", "odd")

    def __init__(self, total, even, odd):
        self.total = total
        self.even = even
        self.odd = odd

    def __eq__(self, other):
        if isinstance(other, SizeValue):
            return (self.total, self.even, self.odd) == \
                (other.total, other.even, other.odd)
        return self.total == other

    def __hash__(self):
        return hash((self.total, self.even, self.odd))

    def __repr__(self):
        return "SizeValue(%r, %r, %r)" % (self.total, self.even, self.odd)


def _size_pair(ch, y3):
    g = (ch * RationalFunction(_SIZE_NORM)).simplified()
    try:
        total = Fraction(g.evaluate(1), 4)
        ssize = Fraction(g.evaluate(-1), 4) * (-1 if y3 % 2 else 1)
    except ZeroDivisionError:
        raise PoleAtMinusOne("size does not exist: residual pole at t = 1 or -1")
    even = (total + ssize) / 2
    odd = (total - ssize) / 2

    def down(x):
        return int(x) if x.denominator == 1 else x

    return SizeValue(down(total), down(even), down(odd))


def size_of(label, induced=False):
    """SizeValue of the irreducible (or, with induced, of its module).

    The size is the t = 1 limit of (1-t^2)^3 ch / 4; the even and odd
    parts use the value at t = -1, where the sign (-1)^(3y) accounts for
    basis parity being the letter-count parity (degree + 3y mod 2).
    """
    label = _as_label(label)
    ch = ch_verma(label) if induced else ch_irreducible(label)
    return _size_pair(ch, int(3 * label.y))


def size_formula(series, first, r):
    """Tabulated closed-form size for the series label, as published.

    The trivial label and the two special labels at (1, 1) carry their
    separately listed values; every other entry is quadratic in the
    sl3 label and linear in r.
    """
    special = {("A", 0, 0): 0, ("A", 1, 1): 16,
               ("D", 0, 0): 0, ("D", 1, 1): 74}
    if (series, first, r) in special:
        return special[(series, first, r)]
    a = first
    if series == "A":
        return 2 * r * (2 * a * a + 4 * a + 1) + (2 * a * a + 2 * a - 1)
    if series == "B":
        return 2 * r * (2 * a * a + 4 * a + 1) + (6 * a * a + 14 * a + 5)
    if series == "C":
        return 2 * r * (2 * a * a + 8 * a + 7) + (2 * a * a + 10 * a + 11)
    if series == "D":
        return 2 * r * (2 * a * a + 6 * a + 7) + (6 * a * a + 22 * a + 17)
    raise ValueError("unknown series %r" % (series,))


def verify_sizes(first_max=5, r_max=5):
    """Compare computed sizes against the tabulated formulas.

    Returns one row per series label with the tabulated and computed
    values, whether they agree, and whether the even and odd halves
    match.  The D rows with both labels positive are known to disagree:
    the computed sizes there follow 2r(2q^2+8q+7) + (6q^2+22q+17)
    instead of the tabulated coefficients, and the rows report that
    honestly rather than patching the table.
    """
    rows = []
    for series in ("A", "B", "C", "D"):
        for a in range(first_max + 1):
            for r in range(r_max + 1):
                expected = size_formula(series, a, r)
                sv = size_of(ModuleLabel(series, a, r))
                rows.append({
                    "series": series, "first": a, "r": r,
                    "expected": expected, "computed": sv.total,
                    "match": sv.total == expected,
                    "balanced": sv.even == sv.odd,
                })
    return rows
