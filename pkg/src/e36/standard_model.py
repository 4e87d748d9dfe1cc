"""Fundamental multiplet bookkeeping for the compact symmetry group.

The compact form of g0 exponentiates to K = (SU(3) x SU(2) x U(1))/C
with C central of order 6, the symmetry group of the Standard Model.  A
g0-type (p, q; r; y) descends to K exactly when 3y is an integer and
2(p-q) + 3r - 3y is divisible by 6.  A K-type is a fundamental particle
multiplet when its sl3 content is the trivial, one of the two
fundamental, or the adjoint representation, and all of its charges
(y+h)/2 have modulus at most 1, with h running over the isospin
eigenvalues r, r-2, ..., -r.

Three K-types with adjoint sl3 content and nontrivial isospin satisfy
both conditions but are absent from the usual fifteen-row tabulation of
fundamental multiplets against Standard Model particles, so
enumerate_fundamental leaves them out to match that table while
is_fundamental accepts them; untabulated_fundamental keeps the
difference visible and the multiplet scan counts them separately.

The scan decomposes the direct sum of the four degenerate modules with
tops (0,0;1;-1), (1,0;0;2/3), (0,0;0;2) and (0,0;0;-2) degree by
degree.  Every g0-constituent in degree d has hypercharge -d/3, so
fundamental types can only occur in degrees -6..6 and the counts are
already exhaustive at moderate truncation; the reporting layer still
labels the global multiplicity statement as window-limited.
"""

from collections import Counter
from fractions import Fraction

from .characters import ModuleLabel
from .homology import irreducible_graded_pieces

# sl3 labels whose representation is trivial, fundamental or adjoint
_SL3_SMALL = ((0, 0), (1, 0), (0, 1), (1, 1))

# grid nodes realizing the four summands of the multiplet scan
SUM_NODES = (("A", 0, 1), ("A", 1, 0), ("B", 0, 0), ("C", 0, 0))


def exponentiates_to_k(p, q, r, y):
    """Whether the g0-type (p, q; r; y) descends to the compact group K."""
    y3 = 3 * Fraction(y)
    if y3.denominator != 1:
        return False
    return (2 * (p - q) + 3 * r - int(y3)) % 6 == 0


class Multiplet:
    """A K-type: sl3 labels, isospin label, hypercharge, and charges.

    The charge list applies the Gell-Mann-Nishijima rule (y+h)/2 to the
    isospin eigenvalues in decreasing order; whether the type descends
    to K is recorded on construction.
    """

    __slots__ = ("p", "q", "r", "y", "charges", "exponentiates")

    def __init__(self, p, q, r, y):
        if p < 0 or q < 0 or r < 0:
            raise ValueError("labels must be nonnegative")
        self.p = int(p)
        self.q = int(q)
        self.r = int(r)
        self.y = Fraction(y)
        self.charges = tuple((self.y + h) / 2 for h in range(self.r, -self.r - 2, -2))
        self.exponentiates = exponentiates_to_k(p, q, r, y)

    def key(self):
        return (self.p, self.q, self.r, self.y)

    def __eq__(self, other):
        return isinstance(other, Multiplet) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Multiplet(%d, %d, %d, %s)" % (self.p, self.q, self.r, self.y)


def is_fundamental(m):
    """The two defining conditions: small sl3 content, charges within 1."""
    return (m.exponentiates
            and (m.p, m.q) in _SL3_SMALL
            and all(abs(c) <= 1 for c in m.charges))


def _fundamental_search():
    found = []
    for p, q in _SL3_SMALL:
        for r in range(0, 3):
            for y3 in range(-6, 7):
                m = Multiplet(p, q, r, Fraction(y3, 3))
                if is_fundamental(m):
                    found.append(m)
    return found


def enumerate_fundamental():
    """The fifteen tabulated fundamental multiplets, sorted by label.

    The three types returned by untabulated_fundamental also pass
    is_fundamental but are excluded here to match the standard table.
    """
    out = [m for m in _fundamental_search()
           if not ((m.p, m.q) == (1, 1) and m.r > 0)]
    out.sort(key=Multiplet.key)
    return out


def untabulated_fundamental():
    """Fundamental K-types missing from the usual fifteen-row table."""
    out = [m for m in _fundamental_search()
           if (m.p, m.q) == (1, 1) and m.r > 0]
    out.sort(key=Multiplet.key)
    return out


def verify_exponentiation(bound=10):
    """Exponentiation check over all degenerate labels within the bound.

    Returns (weights, ok) rows for the four series with both free labels
    running from 0 to bound.
    """
    rows = []
    for series in ("A", "B", "C", "D"):
        for a in range(bound + 1):
            for r in range(bound + 1):
                w = ModuleLabel(series, a, r).weights()
                rows.append((w, exponentiates_to_k(*w)))
    return rows


def scan_degenerate_sum(T=10):
    """Multiplicities of the fundamental K-types in the four-summand sum.

    Decomposes every graded piece of the four modules at SUM_NODES up to
    degree T and counts the constituents accepted by is_fundamental.
    Returns a dict Multiplet -> multiplicity; types never found are
    absent.
    """
    counts = Counter()
    for node in SUM_NODES:
        pieces = irreducible_graded_pieces(node, trunc=T, content=True)
        for labels in pieces.content.values():
            for lab in labels:
                m = Multiplet(*lab)
                if is_fundamental(m):
                    counts[m] += 1
    return dict(counts)
