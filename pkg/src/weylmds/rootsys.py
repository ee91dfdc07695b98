"""Coordinate-free root system arithmetic.

Roots are integer tuples in the simple-root basis, coroots integer tuples in
the simple-coroot basis, and weights integer tuples in the fundamental-weight
basis.  No Euclidean embedding is ever constructed; everything is derived
from the Cartan matrix by exact integer arithmetic.

The simple roots are enumerated so that every prefix ``alpha_1..alpha_j``
supports a braidless chain (see :mod:`weylmds.cosets`).  Concretely this
means types B and C carry their double bond between ``alpha_1`` and
``alpha_2``, type D forks at ``alpha_3`` with the two short arms ``alpha_1``
and ``alpha_2``, and E6/E7 hang ``alpha_1`` off the chain node ``alpha_3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import NamedTuple

from .errors import (
    DimensionMismatch,
    InvalidRank,
    NonDominantWeight,
    NotAPositiveRoot,
    UnsupportedFamily,
)

#: Weights are plain tuples of fundamental-weight coordinates.
Weight = tuple

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "G2")

_FIXED_RANK = {"E6": 6, "E7": 7, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class Root(NamedTuple):
    """A positive root with its coroot and squared length."""

    vec: tuple     # simple-root coordinates
    covec: tuple   # simple-coroot coordinates of the associated coroot
    norm: int      # squared length, constant on the reflection orbit of a simple root


def positive_root_count(family, rank):
    """Closed-form number of positive roots."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E6":
        return 36
    if family == "E7":
        return 63
    if family == "G2":
        return 6
    raise UnsupportedFamily(family)


def _validate_family_rank(family, rank):
    if family in ("F4", "E8"):
        raise UnsupportedFamily(
            "%s admits no braidless enumeration and is not supported" % family
        )
    if family not in FAMILIES:
        raise UnsupportedFamily("unknown family %r" % (family,))
    if family in _FIXED_RANK:
        if rank != _FIXED_RANK[family]:
            raise InvalidRank("family %s requires rank %d" % (family, _FIXED_RANK[family]))
    elif rank < _MIN_RANK[family]:
        raise InvalidRank("family %s requires rank >= %d" % (family, _MIN_RANK[family]))


def _diagram_edges(family, rank):
    """Edges (i, j) of the diagram, 1-based, single bonds unless overridden."""
    if family in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D":
        return [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank)]
    if family == "E6":
        return [(1, 3), (3, 2), (2, 6), (3, 4), (4, 5)]
    if family == "E7":
        return [(1, 3), (3, 2), (2, 6), (3, 4), (4, 5), (6, 7)]
    if family == "G2":
        return [(1, 2)]
    raise UnsupportedFamily(family)


def _default_norms(family, rank):
    # Short roots get squared length 2 throughout.  The scale is a convention;
    # only gcd(n, norm) ever matters downstream, so the table is overridable.
    if family == "C":
        return (4,) + (2,) * (rank - 1)
    if family == "B":
        return (2,) + (4,) * (rank - 1)
    if family == "G2":
        return (2, 6)
    return (2,) * rank


def _cartan_matrix(family, rank):
    """Entry [i][j] = <alpha_j, alpha_i^vee> (0-based), fixed by the diagram.

    Bond asymmetry is intrinsic to the family; the overridable norm table
    only rescales the squared-length labels, never the Cartan matrix.
    """
    scale = _default_norms(family, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for (i, j) in _diagram_edges(family, rank):
        i -= 1
        j -= 1
        # <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
        # with (alpha_i, alpha_j) = -max(norm_i, norm_j) / 2 on an edge.
        prod = -max(scale[i], scale[j]) // 2
        a[i][j] = 2 * prod // scale[i]
        a[j][i] = 2 * prod // scale[j]
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data for one of the supported enumerations."""

    family: str
    rank: int
    cartan: tuple           # cartan[i][j] = <alpha_j, alpha_i^vee>, 0-based
    norms: tuple            # squared lengths of the simple roots
    positive_roots: tuple   # sorted Root entries
    _by_vec: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def npos(self):
        return len(self.positive_roots)

    @property
    def rho(self):
        """Sum of the fundamental weights: the all-ones weight."""
        return (1,) * self.rank

    def root(self, vec):
        """The Root entry with the given simple-root coordinates."""
        try:
            return self._by_vec[tuple(vec)]
        except KeyError:
            raise NotAPositiveRoot("%r is not a positive root" % (tuple(vec),)) from None

    def is_positive_root(self, vec):
        return tuple(vec) in self._by_vec


def alpha_vec(rs, i):
    """Unit vector of alpha_i in simple-root coordinates (1-based)."""
    return tuple(1 if j == i - 1 else 0 for j in range(rs.rank))


def reflect_root(rs, i, vec):
    """Apply the simple reflection s_i to a vector in simple-root coordinates."""
    a = rs.cartan[i - 1]
    c = sum(vec[j] * a[j] for j in range(rs.rank))
    out = list(vec)
    out[i - 1] -= c
    return tuple(out)


def reflect_coroot(rs, i, covec):
    """Apply the dual reflection to a vector in simple-coroot coordinates."""
    c = sum(covec[j] * rs.cartan[j][i - 1] for j in range(rs.rank))
    out = list(covec)
    out[i - 1] -= c
    return tuple(out)


def reflect_weight(rs, i, lam):
    """s_i(lam) in fundamental-weight coordinates."""
    c = lam[i - 1]
    return tuple(lam[j] - c * rs.cartan[j][i - 1] for j in range(rs.rank))


def alpha_in_weight_coords(rs, i):
    """The simple root alpha_i written in the fundamental-weight basis."""
    return tuple(rs.cartan[j][i - 1] for j in range(rs.rank))


def build_root_system(family, rank, norms=None):
    """Construct a RootSystem by reflection closure from the simple roots.

    Starting from the pairs (e_i, e_i), simple reflections are applied to the
    root coordinate and the dual reflections simultaneously to the coroot
    coordinate; vectors that stay nonnegative are kept until a fixpoint.
    """
    _validate_family_rank(family, rank)
    if norms is None:
        norms = _default_norms(family, rank)
    else:
        norms = tuple(norms)
        if len(norms) != rank:
            raise DimensionMismatch("norm table must have %d entries" % rank)
    cartan = _cartan_matrix(family, rank)

    unit = lambda i: tuple(1 if j == i else 0 for j in range(rank))
    found = {unit(i): Root(unit(i), unit(i), norms[i]) for i in range(rank)}

    stub = RootSystem(family, rank, cartan, norms, ())  # carrier for reflect helpers
    frontier = list(found.values())
    while frontier:
        new = []
        for root in frontier:
            for i in range(1, rank + 1):
                vec = reflect_root(stub, i, root.vec)
                if vec in found or any(c < 0 for c in vec):
                    continue
                covec = reflect_coroot(stub, i, root.covec)
                entry = Root(vec, covec, root.norm)
                found[vec] = entry
                new.append(entry)
        frontier = new

    roots = tuple(sorted(found.values()))
    expected = positive_root_count(family, rank)
    if len(roots) != expected:
        raise AssertionError(
            "closure produced %d positive roots, expected %d" % (len(roots), expected)
        )
    rs = RootSystem(family, rank, cartan, norms, roots)
    for r in roots:
        rs._by_vec[r.vec] = r
    return rs


def check_weight(rs, lam):
    if len(lam) != rs.rank:
        raise DimensionMismatch(
            "weight has %d coordinates, rank is %d" % (len(lam), rs.rank)
        )
    return tuple(lam)


def is_dominant(lam):
    return all(c >= 0 for c in lam)


def is_strictly_dominant(lam):
    return all(c > 0 for c in lam)


def add_weights(a, b):
    return tuple(x + y for x, y in zip(a, b))


def pair(rs, lam, covec):
    """Canonical pairing <lam, covec> of a weight with a coroot vector.

    The fundamental-weight basis is dual to the simple coroots, so the
    pairing is a plain dot product.
    """
    lam = check_weight(rs, lam)
    if len(covec) != rs.rank:
        raise DimensionMismatch(
            "coroot vector has %d coordinates, rank is %d" % (len(covec), rs.rank)
        )
    return sum(l * c for l, c in zip(lam, covec))


def d_lambda(rs, lam, alpha):
    """<lam + rho, alpha^vee> for a positive root alpha (vector or Root)."""
    root = alpha if isinstance(alpha, Root) else rs.root(alpha)
    lam = check_weight(rs, lam)
    return pair(rs, add_weights(lam, rs.rho), root.covec)


def _maximal(vectors):
    tops = [
        v
        for v in vectors
        if all(all(x >= y for x, y in zip(v, w)) for w in vectors)
    ]
    if len(tops) != 1:
        raise AssertionError("expected a unique maximal vector, found %d" % len(tops))
    return tops[0]


def highest_coroot(rs):
    """The coroot maximal in the partial order, as a simple-coroot vector."""
    return _maximal([r.covec for r in rs.positive_roots])


def highest_root(rs):
    """The Root entry whose vector is maximal in the root partial order."""
    vec = _maximal([r.vec for r in rs.positive_roots])
    return rs.root(vec)


def weyl_dimension(rs, lam):
    """Dimension of the highest-weight module, as an exact integer.

    Product over positive roots of <lam+rho, a^vee> / <rho, a^vee>.
    """
    lam = check_weight(rs, lam)
    if not is_dominant(lam):
        raise NonDominantWeight("weight %r has a negative coordinate" % (lam,))
    value = Fraction(1)
    for root in rs.positive_roots:
        value *= Fraction(d_lambda(rs, lam, root), d_lambda(rs, (0,) * rs.rank, root))
    if value.denominator != 1:
        raise AssertionError("dimension product is not integral")
    return int(value)


def canonical_text(rs):
    """Canonical text form (family, rank, Cartan rows, norms) for golden tests."""
    lines = ["family %s" % rs.family, "rank %d" % rs.rank]
    for row in rs.cartan:
        lines.append("cartan " + " ".join(str(x) for x in row))
    lines.append("norms " + " ".join(str(x) for x in rs.norms))
    return "\n".join(lines) + "\n"


def classical_order(family, rank):
    """Order of the Weyl group from the classical formulas."""
    _validate_family_rank(family, rank)
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "E6":
        return 51840
    if family == "E7":
        return 2903040
    if family == "G2":
        return 12
    raise UnsupportedFamily(family)
