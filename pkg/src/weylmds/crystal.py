"""String patterns for types A and C along the segmented longest word.

A pattern is the integer string (b_1..b_N) read along the decomposition
w0 = (s_1)(s_2 s_1)...(type A) or (s_1)(s_2 s_1 s_2)...(type C); row m from
the bottom of the triangular array is segment m.  The strings of a fixed
highest weight are the lattice points of a polytope cut out by two families
of inequalities:

* cone: within each row the entries weakly decrease and stay nonnegative
  (phi_j: b_j >= right neighbour, or >= 0 at the row end);
* polytope: the cascade psi_j: b_j <= <lam - sum_{k>j} b_k alpha_{i_k},
  alpha_{i_j}^vee>.

An entry is circled when its cone inequality is tight and boxed when its
polytope inequality is tight.  Patterns whose entries each carry exactly one
mark ("stable") biject with the Weyl group.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cosets, rootsys, weyl
from .errors import (
    InfeasibleEntries,
    NonDominantWeight,
    NonStrictlyDominant,
    NotStable,
    UnsupportedFamily,
)

STABLE = "stable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class PatternShape:
    """Row layout and per-position data for one family and rank."""

    family: str
    rank: int
    rows: tuple        # rows[m-1] = letters of segment m, bottom row first
    word: tuple        # concatenation of the rows; word[j-1] = i_j
    row_of: tuple      # row_of[j-1] = row index (1-based) of position j
    right_neighbor: tuple  # 1-based position of the next entry in the row, or None

    @property
    def size(self):
        return len(self.word)


def _segment(family, m):
    if family == "A":
        return tuple(range(m, 0, -1))
    # type C: s_m .. s_1 .. s_m
    return tuple(range(m, 0, -1)) + tuple(range(2, m + 1))


def pattern_shape(family, rank):
    if family == "A":
        if rank < 1:
            raise UnsupportedFamily("type A needs rank >= 1")
    elif family == "C":
        if rank < 2:
            raise UnsupportedFamily("type C needs rank >= 2")
    else:
        raise UnsupportedFamily(
            "patterns are defined for types A and C, not %r" % (family,)
        )
    rows = tuple(_segment(family, m) for m in range(1, rank + 1))
    word = tuple(i for row in rows for i in row)
    row_of = []
    right = []
    pos = 0
    for m, row in enumerate(rows, start=1):
        for t in range(len(row)):
            pos += 1
            row_of.append(m)
            right.append(pos + 1 if t + 1 < len(row) else None)
    return PatternShape(family, rank, rows, word, tuple(row_of), tuple(right))


@dataclass(frozen=True)
class BZLPattern:
    """Entries with their decorations, decorated against ``lam``."""

    entries: tuple
    circled: tuple
    boxed: tuple
    lam: tuple

    @property
    def size(self):
        return len(self.entries)


def _check_shape(rs, shape):
    if rs.family != shape.family or rs.rank != shape.rank:
        raise UnsupportedFamily(
            "shape %s%d does not match root system %s%d"
            % (shape.family, shape.rank, rs.family, rs.rank)
        )


def psi_bound(rs, shape, lam, b, j):
    """Upper bound of entry j once entries j+1..N are fixed (1-based j)."""
    _check_shape(rs, shape)
    lam = rootsys.check_weight(rs, lam)
    mu = list(lam)
    for k in range(j, shape.size):
        coeff = b[k]
        if coeff:
            i = shape.word[k]
            col = rootsys.alpha_in_weight_coords(rs, i)
            for t in range(rs.rank):
                mu[t] -= coeff * col[t]
    return mu[shape.word[j - 1] - 1]


def iter_crystal(rs, shape, lam):
    """Yield every decorated pattern of highest weight ``lam``.

    Depth-first from the last position: the lower bound of b_j is its right
    neighbour (0 at a row end), the upper bound the psi cascade; both marks
    fall out of the bound comparisons.
    """
    _check_shape(rs, shape)
    lam = rootsys.check_weight(rs, lam)
    if not rootsys.is_dominant(lam):
        raise NonDominantWeight("weight %r has a negative coordinate" % (lam,))
    n = shape.size
    cols = [rootsys.alpha_in_weight_coords(rs, i) for i in shape.word]
    letters = [i - 1 for i in shape.word]
    right = shape.right_neighbor

    b = [0] * n
    circ = [False] * n
    box = [False] * n
    mu = list(lam)

    def walk(j):
        if j < 0:
            yield BZLPattern(tuple(b), tuple(circ), tuple(box), lam)
            return
        lower = b[right[j] - 1] if right[j] is not None else 0
        upper = mu[letters[j]]
        if lower > upper:
            return
        col = cols[j]
        for t in range(rs.rank):
            mu[t] -= lower * col[t]
        for value in range(lower, upper + 1):
            b[j] = value
            circ[j] = value == lower
            box[j] = value == upper
            yield from walk(j - 1)
            for t in range(rs.rank):
                mu[t] -= col[t]
        for t in range(rs.rank):
            mu[t] += (upper + 1) * col[t]
        b[j] = 0

    yield from walk(n - 1)


def enumerate_crystal(rs, shape, lam):
    """All patterns of highest weight ``lam``, in depth-first order."""
    return list(iter_crystal(rs, shape, lam))


def decorate(rs, shape, lam, entries):
    """Decorate an explicit entry string, validating the inequalities."""
    _check_shape(rs, shape)
    lam = rootsys.check_weight(rs, lam)
    entries = tuple(entries)
    if len(entries) != shape.size:
        raise InfeasibleEntries(
            "expected %d entries, got %d" % (shape.size, len(entries))
        )
    circ = []
    box = []
    mu = list(lam)
    bounds = [0] * shape.size
    for j in range(shape.size, 0, -1):
        bounds[j - 1] = mu[shape.word[j - 1] - 1]
        col = rootsys.alpha_in_weight_coords(rs, shape.word[j - 1])
        for t in range(rs.rank):
            mu[t] -= entries[j - 1] * col[t]
    for j in range(1, shape.size + 1):
        value = entries[j - 1]
        rn = shape.right_neighbor[j - 1]
        lower = entries[rn - 1] if rn is not None else 0
        if value < lower or value > bounds[j - 1]:
            raise InfeasibleEntries(
                "entry b_%d = %d outside [%d, %d]" % (j, value, lower, bounds[j - 1])
            )
        circ.append(value == lower)
        box.append(value == bounds[j - 1])
    return BZLPattern(entries, tuple(circ), tuple(box), lam)


def classify(pattern):
    """STABLE iff every entry carries exactly one mark."""
    for c, x in zip(pattern.circled, pattern.boxed):
        if c == x:
            return UNSTABLE
    return STABLE


def weight_of(rs, shape, lam, entries):
    """lam minus the entry-weighted simple roots, in weight coordinates."""
    _check_shape(rs, shape)
    if isinstance(entries, BZLPattern):
        entries = entries.entries
    mu = list(rootsys.check_weight(rs, lam))
    for j, value in enumerate(entries):
        if value:
            col = rootsys.alpha_in_weight_coords(rs, shape.word[j])
            for t in range(rs.rank):
                mu[t] -= value * col[t]
    return tuple(mu)


def sign_vector(rs, shape, w):
    """Boxed-position indicator of the stable pattern attached to ``w``.

    The tuple parametrization of ``w`` marks, within each row, an initial
    run of positions whose length is the tuple entry.
    """
    _check_shape(rs, shape)
    tup = cosets.dr_encode(rs, w)
    marks = []
    for m, a in enumerate(tup, start=1):
        row_len = len(shape.rows[m - 1])
        marks.extend([1] * a + [0] * (row_len - a))
    return tuple(marks)


def stable_from_weyl(rs, shape, lam, w):
    """The stable pattern whose boxed subword multiplies out to ``w``.

    Nonzero entries are forced: each must meet its polytope bound, giving
    the recursion b'_j = <s_{i'_{j+1}}..s_{i'_l}(lam), alpha_{i'_j}^vee>
    down the marked subword.
    """
    lam = rootsys.check_weight(rs, lam)
    if not rootsys.is_strictly_dominant(lam):
        raise NonStrictlyDominant(
            "stable patterns need every coordinate of %r positive" % (lam,)
        )
    marks = sign_vector(rs, shape, w)
    positions = [j for j, e in enumerate(marks) if e]
    entries = [0] * shape.size
    mu = tuple(lam)
    for j in reversed(positions):
        letter = shape.word[j]
        entries[j] = mu[letter - 1]
        mu = rootsys.reflect_weight(rs, letter, mu)
    pattern = decorate(rs, shape, lam, entries)
    if classify(pattern) != STABLE:
        raise AssertionError("reconstruction produced an unstable pattern")
    return pattern


def weyl_from_stable(rs, shape, pattern):
    """Product of the letters at the boxed positions, in position order."""
    _check_shape(rs, shape)
    if classify(pattern) != STABLE:
        raise NotStable("pattern %r is not stable" % (pattern.entries,))
    word = [
        shape.word[j]
        for j in range(shape.size)
        if pattern.boxed[j]
    ]
    element = weyl.word_to_element(rs, word)
    if weyl.length(rs, element) != len(word):
        raise AssertionError("boxed subword of a stable pattern must be reduced")
    return element


@dataclass(frozen=True)
class BoundReport:
    """Outcome of the max-entry scan over a whole crystal."""

    bound: int
    patterns: int
    max_entry: int
    violations: tuple
    unboxed_at_bound: tuple

    @property
    def ok(self):
        return not self.violations and not self.unboxed_at_bound


def max_entry_bound_check(rs, shape, lam):
    """Check max_j b_j <= <lam, alpha_0^vee> and that attaining it forces a box."""
    top = rootsys.highest_coroot(rs)
    bound = rootsys.pair(rs, lam, top)
    violations = []
    unboxed = []
    count = 0
    max_entry = 0
    for pattern in iter_crystal(rs, shape, lam):
        count += 1
        for j, value in enumerate(pattern.entries):
            if value > max_entry:
                max_entry = value
            if value > bound:
                violations.append((pattern.entries, j + 1))
            elif value == bound and not pattern.boxed[j]:
                unboxed.append((pattern.entries, j + 1))
    return BoundReport(bound, count, max_entry, tuple(violations), tuple(unboxed))


def pattern_to_json(shape, pattern):
    """JSON-ready dict with rows in the triangular layout."""
    rows, circ, box = [], [], []
    pos = 0
    for row in shape.rows:
        k = len(row)
        rows.append(list(pattern.entries[pos:pos + k]))
        circ.append(list(pattern.circled[pos:pos + k]))
        box.append(list(pattern.boxed[pos:pos + k]))
        pos += k
    return {
        "family": shape.family,
        "rank": shape.rank,
        "lambda": list(pattern.lam),
        "rows": rows,
        "circled": circ,
        "boxed": box,
    }


def pattern_pretty(shape, pattern):
    """Triangular array with () for circles and [] for boxes, top row widest."""
    cells = []
    pos = 0
    for row in shape.rows:
        line = []
        for _ in row:
            v = str(pattern.entries[pos])
            if pattern.circled[pos]:
                v = "(%s)" % v
            if pattern.boxed[pos]:
                v = "[%s]" % v
            line.append(v)
            pos += 1
        cells.append(line)
    width = max(len(c) for line in cells for c in line)
    out = []
    for line in reversed(cells):  # widest segment on top
        text = " ".join(c.rjust(width) for c in line)
        out.append(text)
    span = max(len(t) for t in out)
    if shape.family == "C":
        out = [t.center(span) for t in out]
    else:
        out = [t.rjust(span) for t in out]
    return "\n".join(out)
