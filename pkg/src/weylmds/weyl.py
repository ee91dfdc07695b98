"""Weyl group elements as integer matrices on root-lattice coordinates.

An element is the matrix whose column j is the image of alpha_j, so equality
is canonical and independent of any word.  Reduced words are derived data,
extracted by greedy descent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from . import rootsys
from .errors import GroupTooLarge, IndexOutOfRange, NotReduced

GROUP_CAP_ENV = "WEYLMDS_GROUP_CAP"
DEFAULT_GROUP_CAP = 10**6


def _group_cap(cap=None):
    if cap is not None:
        return cap
    return int(os.environ.get(GROUP_CAP_ENV, DEFAULT_GROUP_CAP))


@dataclass(frozen=True)
class WeylElement:
    """Matrix action on simple-root coordinates; column j = image of alpha_j."""

    matrix: tuple
    # A word multiplying out to this element (not necessarily reduced).
    # Cached for cheap weight application; never part of equality.
    word: tuple = field(default=None, compare=False)

    @property
    def rank(self):
        return len(self.matrix)

    def is_identity(self):
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def act_on_root(self, vec):
        m = self.matrix
        n = len(m)
        return tuple(sum(m[i][j] * vec[j] for j in range(n)) for i in range(n))

    def column(self, i):
        """Image of alpha_i (1-based) in simple-root coordinates."""
        return tuple(row[i - 1] for row in self.matrix)

    def __mul__(self, other):
        a, b = self.matrix, other.matrix
        n = len(a)
        prod = tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(prod, word)


def identity_element(rank):
    m = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    return WeylElement(m, ())


def _check_index(rs, i):
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange("simple-root index %r outside 1..%d" % (i, rs.rank))


def simple_reflection(rs, i):
    """s_i: alpha_j -> alpha_j - <alpha_j, alpha_i^vee> alpha_i."""
    _check_index(rs, i)
    r = rs.rank
    m = [[1 if a == b else 0 for b in range(r)] for a in range(r)]
    for j in range(r):
        m[i - 1][j] -= rs.cartan[i - 1][j]
    return WeylElement(tuple(tuple(row) for row in m), (i,))


def word_to_element(rs, word):
    """Left-to-right product of simple reflections."""
    out = identity_element(rs.rank)
    for i in word:
        out = out * simple_reflection(rs, i)
    return WeylElement(out.matrix, tuple(word))


def is_negative(vec):
    """A root image is negative iff any coordinate is below zero."""
    return any(c < 0 for c in vec)


def apply_to_weight(rs, w, lam):
    """w(lam) in fundamental-weight coordinates.

    Satisfies pair(w(lam), beta^vee) = pair(lam, w^{-1}(beta)^vee).
    """
    lam = rootsys.check_weight(rs, lam)
    word = w.word if w.word is not None else reduced_word(rs, w)
    for i in reversed(word):
        lam = rootsys.reflect_weight(rs, i, lam)
    return lam


def length(rs, w):
    """Number of positive roots sent to negative ones."""
    return sum(1 for r in rs.positive_roots if is_negative(w.act_on_root(r.vec)))


def inversion_set(rs, word):
    """Inversion sequence of a reduced word.

    For w = s_{i_1}..s_{i_N} the entries are alpha_{i_N}, s_{i_N}(alpha_{i_{N-1}}),
    .., s_{i_N}..s_{i_2}(alpha_{i_1}); as a set this is
    {alpha in Phi+ : w(alpha) in Phi-}.
    """
    word = tuple(word)
    for i in word:
        _check_index(rs, i)
    out = []
    seen = set()
    for t in range(len(word) - 1, -1, -1):
        vec = rootsys.alpha_vec(rs, word[t])
        for u in word[t + 1:]:
            vec = rootsys.reflect_root(rs, u, vec)
        if is_negative(vec) or not rs.is_positive_root(vec):
            raise NotReduced("word %r produced a negative inversion entry" % (word,))
        if vec in seen:
            raise NotReduced("word %r produced a repeated inversion entry" % (word,))
        seen.add(vec)
        out.append(rs.root(vec))
    return out


def reduced_word(rs, w):
    """Canonical reduced word by greedy right-descent peeling.

    Repeatedly take the smallest i with w(alpha_i) negative and multiply by
    s_i; the collected letters reversed form the word.
    """
    picks = []
    cur = w
    while True:
        for i in range(1, rs.rank + 1):
            if is_negative(cur.column(i)):
                picks.append(i)
                cur = cur * simple_reflection(rs, i)
                break
        else:
            break
    if not cur.is_identity():
        raise AssertionError("descent peeling did not reach the identity")
    return tuple(reversed(picks))


def lex_min_reduced_word(rs, w):
    """Lexicographically least reduced word, by greedy smallest left descent.

    i is a left descent iff w^{-1}(alpha_i) is negative, so the inverse is
    carried along and updated with each peel.
    """
    out = []
    cur = w
    cur_inv = inverse(rs, w)
    while True:
        for i in range(1, rs.rank + 1):
            if is_negative(cur_inv.column(i)):
                out.append(i)
                s = simple_reflection(rs, i)
                cur = s * cur
                cur_inv = cur_inv * s
                break
        else:
            break
    if not cur.is_identity():
        raise AssertionError("descent peeling did not reach the identity")
    return tuple(out)


def bilinear_form(rs):
    """Gram matrix (alpha_i, alpha_j) fixed by the norms and Cartan matrix."""
    r = rs.rank
    return tuple(
        tuple(rs.norms[j] * rs.cartan[j][i] // 2 for j in range(r)) for i in range(r)
    )


@lru_cache(maxsize=None)
def _inverse_transport(rs):
    """(B, adj(B), det(B)) for the invariant form; w^{-1} = B^{-1} w^T B."""
    from fractions import Fraction

    b = bilinear_form(rs)
    n = rs.rank
    mat = [[Fraction(b[i][j]) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            det = -det
        det *= mat[col][col]
        p = mat[col][col]
        mat[col] = [x / p for x in mat[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    det_i = int(det)
    adj = tuple(
        tuple(int(inv[i][j] * det) for j in range(n)) for i in range(n)
    )
    return b, adj, det_i


def inverse(rs, w):
    """Exact inverse, via orthogonality for the invariant bilinear form."""
    b, adj, det = _inverse_transport(rs)
    n = rs.rank
    m = w.matrix
    # adj(B) @ m^T @ B, divided entrywise by det(B)
    tmp = [
        [sum(adj[i][k] * m[j][k] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = sum(tmp[i][k] * b[k][j] for k in range(n))
            q, rem = divmod(v, det)
            if rem:
                raise AssertionError("inverse transport produced a non-integer")
            row.append(q)
        out.append(tuple(row))
    word = tuple(reversed(w.word)) if w.word is not None else None
    return WeylElement(tuple(out), word)


def longest_element(rs):
    """The longest element, built by greedy smallest-index ascent."""
    cur = identity_element(rs.rank)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(1, rs.rank + 1):
            if not is_negative(cur.column(i)):
                cur = cur * simple_reflection(rs, i)
                word.append(i)
                changed = True
                break
    return WeylElement(cur.matrix, tuple(word))


def is_minimal_representative(rs, w, omega_index, subsystem=None):
    """True iff no simple root other than alpha_omega lies in Phi(w^{-1}).

    With ``subsystem`` (an iterable of 1-based indices) the test runs inside
    the parabolic subgroup generated by those reflections.
    """
    _check_index(rs, omega_index)
    indices = range(1, rs.rank + 1) if subsystem is None else subsystem
    w_inv = inverse(rs, w)
    for j in indices:
        if j == omega_index:
            continue
        if is_negative(w_inv.column(j)):
            return False
    return True


def _root_index_table(rs):
    """All roots (positives then negatives) with a vector->index map."""
    vecs = [r.vec for r in rs.positive_roots]
    vecs += [tuple(-c for c in v) for v in vecs]
    index = {v: k for k, v in enumerate(vecs)}
    return vecs, index


def _generator_perms(rs, vecs, index):
    perms = []
    for i in range(1, rs.rank + 1):
        perms.append(tuple(index[rootsys.reflect_root(rs, i, v)] for v in vecs))
    return perms


def enumerate_group(rs, cap=None):
    """All Weyl elements, sorted by (length, lexicographically least word).

    Breadth-first closure under the generators, carried out on the
    permutation action on the full root set for speed, then converted back
    to matrices.  Raises GroupTooLarge when the classical order exceeds the
    cap (environment variable WEYLMDS_GROUP_CAP, default 10**6).
    """
    order = rootsys.classical_order(rs.family, rs.rank)
    cap = _group_cap(cap)
    if order > cap:
        raise GroupTooLarge(
            "group order %d exceeds cap %d; raise the cap explicitly" % (order, cap)
        )
    vecs, index = _root_index_table(rs)
    gens = _generator_perms(rs, vecs, index)
    npos = rs.npos

    ident = tuple(range(len(vecs)))
    levels = [{ident: ()}]
    seen = {ident}
    while True:
        frontier = levels[-1]
        nxt = {}
        for perm in frontier:
            for g in gens:
                # right multiplication: (w s)(x) = w(s(x))
                child = tuple(perm[g[x]] for x in range(len(vecs)))
                if child not in seen:
                    seen.add(child)
                    nxt[child] = None
        if not nxt:
            break
        levels.append(nxt)
    if len(seen) != order:
        raise AssertionError("group closure found %d elements, expected %d" % (len(seen), order))

    # Lexicographically least word, level by level: the least word of w is
    # [i] + least word of s_i w for the smallest left descent i.
    for level_no in range(1, len(levels)):
        prev = levels[level_no - 1]
        for perm in levels[level_no]:
            for i, g in enumerate(gens, start=1):
                parent = tuple(g[perm[x]] for x in range(len(vecs)))
                if parent in prev:
                    levels[level_no][perm] = (i,) + prev[parent]
                    break

    simple_idx = [index[rootsys.alpha_vec(rs, i)] for i in range(1, rs.rank + 1)]
    out = []
    for level_no, level in enumerate(levels):
        batch = []
        for perm, word in level.items():
            cols = [vecs[perm[s]] for s in simple_idx]
            matrix = tuple(tuple(cols[j][i] for j in range(rs.rank)) for i in range(rs.rank))
            batch.append((word, WeylElement(matrix, word)))
        batch.sort()
        out.extend(el for _, el in batch)
    return out


def parabolic_order(rs, indices):
    """Order of the parabolic subgroup generated by the listed reflections.

    The induced diagram is split into connected components and each component
    is matched against the classical shapes.
    """
    indices = sorted(set(indices))
    for i in indices:
        _check_index(rs, i)
    adj = {
        i: [
            j
            for j in indices
            if j != i and rs.cartan[i - 1][j - 1] != 0
        ]
        for i in indices
    }
    remaining = set(indices)
    order = 1
    while remaining:
        comp = [remaining.pop()]
        queue = list(comp)
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if u in remaining:
                    remaining.remove(u)
                    comp.append(u)
                    queue.append(u)
        order *= _component_order(rs, sorted(comp), adj)
    return order


def _component_order(rs, comp, adj):
    k = len(comp)
    if k == 1:
        return 2
    bonds = [
        rs.cartan[i - 1][j - 1] * rs.cartan[j - 1][i - 1]
        for i in comp
        for j in adj[i]
        if j > i
    ]
    if any(b == 3 for b in bonds):
        return 12  # G2 pair
    if any(b == 2 for b in bonds):
        return 2**k * factorial(k)  # B/C chain
    degrees = sorted(len(adj[i]) for i in comp)
    if degrees[-1] <= 2:
        return factorial(k + 1)  # A chain
    # one branch node; classify by sorted arm lengths
    branch = next(i for i in comp if len(adj[i]) == 3)
    arms = sorted(_arm_length(branch, first, adj) for first in adj[branch])
    if arms[0] == 1 and arms[1] == 1:
        return 2 ** (k - 1) * factorial(k)  # D fork
    if arms == [1, 2, 2]:
        return 51840  # E6
    if arms == [1, 2, 3]:
        return 2903040  # E7
    raise AssertionError("unrecognized diagram component %r" % (comp,))


def _arm_length(branch, first, adj):
    count = 1
    prev, cur = branch, first
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            return count
        prev, cur = cur, nxt[0]
        count += 1
