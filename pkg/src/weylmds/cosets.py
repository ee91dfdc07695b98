"""Braidless weights and the combinatorics of minimal coset representatives.

For a braidless fundamental weight, every reduced word of the longest
minimal representative is reachable from any other by swapping adjacent
commuting letters.  The positions of a fixed word therefore carry a partial
order (the heap): position j precedes k when j < k and the letters are equal
or fail to commute.  Reduced words are the linear extensions of the heap,
the prefix family consists of its order ideals, and the decoration graph is
its Hasse diagram.  That local description is what makes the large
exceptional quotients tractable without materializing the full exchange
class.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import rootsys, weyl
from .errors import (
    EncodeFailure,
    ExchangeClassTooLarge,
    IndexOutOfRange,
    NotAPrefixSet,
    NotBraidless,
    NotReduced,
    OrbitTooLarge,
    UnsupportedFamily,
)

DEFAULT_ORBIT_CAP = 100_000
DEFAULT_EXCHANGE_CAP = 100_000


def _subsystem(rs, subsystem):
    if subsystem is None:
        return tuple(range(1, rs.rank + 1))
    indices = tuple(sorted(set(subsystem)))
    for i in indices:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange("subsystem index %r outside 1..%d" % (i, rs.rank))
    return indices


def weight_orbit(rs, lam, subsystem=None, cap=DEFAULT_ORBIT_CAP):
    """Orbit of a weight under the (parabolic) Weyl group, as a set."""
    indices = _subsystem(rs, subsystem)
    lam = rootsys.check_weight(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in indices:
                nu = rootsys.reflect_weight(rs, i, mu)
                if nu not in seen:
                    if len(seen) >= cap:
                        raise OrbitTooLarge("weight orbit exceeds cap %d" % cap)
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return seen


def is_braidless(rs, omega_index, subsystem=None, cap=DEFAULT_ORBIT_CAP):
    """Whether the orbit of omega never exposes two non-orthogonal directions.

    For every weight mu in the orbit, the simple roots pairing positively
    with mu must be pairwise orthogonal.
    """
    indices = _subsystem(rs, subsystem)
    if omega_index not in indices:
        raise IndexOutOfRange("omega index %r not in subsystem" % (omega_index,))
    omega = tuple(1 if j == omega_index - 1 else 0 for j in range(rs.rank))
    for mu in weight_orbit(rs, omega, indices, cap):
        positive = [i for i in indices if mu[i - 1] > 0]
        for a in range(len(positive)):
            for b in range(a + 1, len(positive)):
                if rs.cartan[positive[a] - 1][positive[b] - 1] != 0:
                    return False
    return True


def minimal_coset_representatives(rs, omega_index, subsystem=None):
    """All minimal representatives of the right cosets of the stabilizer.

    Breadth-first search by right multiplication; an element stays in the
    list iff its inverse sends every simple root except alpha_omega to a
    positive root.  Prefixes of reduced words of minimal representatives are
    minimal, so level-by-level growth reaches everything.
    """
    indices = _subsystem(rs, subsystem)
    if omega_index not in indices:
        raise IndexOutOfRange("omega index %r not in subsystem" % (omega_index,))
    others = [i for i in indices if i != omega_index]
    gens = {i: weyl.simple_reflection(rs, i) for i in indices}

    ident = weyl.identity_element(rs.rank)
    out = [ident]
    # track (element, inverse) pairs; inverse columns give the minimality test
    frontier = [(ident, ident)]
    seen = {ident.matrix}
    while frontier:
        nxt = []
        for w, w_inv in frontier:
            for i in indices:
                if weyl.is_negative(w.column(i)):
                    continue  # length would drop
                child = w * gens[i]
                if child.matrix in seen:
                    continue
                child_inv = gens[i] * w_inv
                if any(weyl.is_negative(child_inv.column(j)) for j in others):
                    continue
                seen.add(child.matrix)
                nxt.append((child, child_inv))
                out.append(child)
        frontier = nxt
    return out


def coset_longest_word(rs, omega_index, subsystem=None):
    """Reduced word of the longest minimal representative.

    The word is canonicalized to the lexicographically least reduced word,
    which is well defined on the whole exchange class.
    """
    indices = _subsystem(rs, subsystem)
    if not is_braidless(rs, omega_index, indices):
        raise NotBraidless(
            "omega_%d is not braidless in subsystem %r" % (omega_index, indices)
        )
    reps = minimal_coset_representatives(rs, omega_index, indices)
    top_len = max(len(r.word) for r in reps)
    tops = [r for r in reps if len(r.word) == top_len]
    if len(tops) != 1:
        raise AssertionError("expected a unique longest minimal representative")
    return weyl.lex_min_reduced_word(rs, tops[0])


def _heap_order(rs, word):
    """Reflexive-free reachability matrix of the position heap (0-based)."""
    n = len(word)
    less = [[False] * n for _ in range(n)]
    for k in range(n):
        for j in range(k):
            a, b = word[j], word[k]
            if a == b or rs.cartan[a - 1][b - 1] != 0:
                less[j][k] = True
    for mid in range(n):
        for j in range(mid):
            if less[j][mid]:
                row_mid = less[mid]
                row_j = less[j]
                for k in range(mid + 1, n):
                    if row_mid[k]:
                        row_j[k] = True
    return less


def _covers(less):
    n = len(less)
    out = []
    for j in range(n):
        for k in range(j + 1, n):
            if less[j][k] and not any(
                less[j][m] and less[m][k] for m in range(j + 1, k)
            ):
                out.append((j, k))
    return out


def _order_ideals(less):
    """All down-closed position sets, as sorted tuples (0-based)."""
    n = len(less)
    preds = [frozenset(j for j in range(n) if less[j][k]) for k in range(n)]
    ideals = set()
    frontier = {frozenset()}
    while frontier:
        nxt = set()
        for ideal in frontier:
            ideals.add(ideal)
            for k in range(n):
                if k not in ideal and preds[k] <= ideal:
                    grown = ideal | {k}
                    if grown not in ideals:
                        nxt.add(grown)
        frontier = nxt - ideals
    return sorted((tuple(sorted(i)) for i in ideals), key=lambda t: (len(t), t))


@dataclass(frozen=True)
class DecorationGraph:
    """Labelled Hasse diagram on word positions (everything 1-based)."""

    labels: tuple   # labels[j-1] = simple-root index at position j
    edges: tuple    # (j, k) pairs, j < k

    @property
    def size(self):
        return len(self.labels)


@dataclass(frozen=True)
class CosetAtlas:
    """Everything derived from one reduced word of the longest coset element."""

    rs: rootsys.RootSystem = field(compare=False)
    omega_index: int
    subsystem: tuple
    word: tuple
    _less: tuple = field(compare=False, repr=False)
    _covers: tuple = field(compare=False, repr=False)
    _ideals: tuple = field(compare=False, repr=False)

    @property
    def size(self):
        return len(self.word)

    def prefix_family(self):
        """All position sets {sigma(1..k)}, as 1-based frozensets."""
        return [frozenset(p + 1 for p in ideal) for ideal in self._ideals]

    def is_prefix_set(self, positions):
        pos = {p - 1 for p in positions}
        if not all(0 <= p < self.size for p in pos):
            return False
        return all(
            j in pos
            for p in pos
            for j in range(p)
            if self._less[j][p]
        )

    def f_omega(self, positions):
        """Product of the letters at the given positions, in position order."""
        if not self.is_prefix_set(positions):
            raise NotAPrefixSet("%r is not in the prefix family" % (sorted(positions),))
        letters = [self.word[p - 1] for p in sorted(positions)]
        return weyl.word_to_element(self.rs, letters)

    def decoration_graph(self):
        return DecorationGraph(
            labels=self.word,
            edges=tuple((j + 1, k + 1) for j, k in self._covers),
        )

    def subgraph_family(self):
        """Predecessor-closed subgraphs, in bijection with the prefix family."""
        out = []
        for ideal in self._ideals:
            verts = frozenset(p + 1 for p in ideal)
            edges = tuple(
                (j + 1, k + 1)
                for j, k in self._covers
                if j in ideal and k in ideal
            )
            out.append(Subgraph(verts, edges))
        return out

    def exchange_class(self, cap=DEFAULT_EXCHANGE_CAP):
        """All reduced words of the longest element with their permutations."""
        return exchange_class(self.rs, self.word, cap=cap)


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset
    edges: tuple


def build_coset_atlas(rs, omega_index, word=None, subsystem=None):
    """Atlas for a braidless omega, from a given or canonical reduced word."""
    indices = _subsystem(rs, subsystem)
    canonical = coset_longest_word(rs, omega_index, indices)
    if word is None:
        word = canonical
    else:
        word = tuple(word)
        if len(word) != len(canonical) or (
            weyl.word_to_element(rs, word).matrix
            != weyl.word_to_element(rs, canonical).matrix
        ):
            raise NotReduced(
                "%r is not a reduced word of the longest coset element" % (word,)
            )
    less = _heap_order(rs, word)
    covers = tuple(_covers(less))
    ideals = tuple(_order_ideals(less))
    return CosetAtlas(
        rs=rs,
        omega_index=omega_index,
        subsystem=indices,
        word=word,
        _less=tuple(tuple(row) for row in less),
        _covers=covers,
        _ideals=ideals,
    )


def exchange_class(rs, word, cap=DEFAULT_EXCHANGE_CAP):
    """Breadth-first closure of a word under adjacent commuting swaps.

    Returns a dict mapping each reachable word to the permutation sigma with
    word_new[l] = word[sigma(l)] (1-based entries).  Equal letters never
    reorder, so sigma is recovered from occurrence ranks.
    """
    word = tuple(word)
    n = len(word)
    base_positions = {}
    occ = {}
    for pos, letter in enumerate(word):
        occ[letter] = occ.get(letter, 0) + 1
        base_positions[(letter, occ[letter])] = pos + 1

    def perm_of(w):
        counts = {}
        sigma = []
        for letter in w:
            counts[letter] = counts.get(letter, 0) + 1
            sigma.append(base_positions[(letter, counts[letter])])
        return tuple(sigma)

    out = {word: perm_of(word)}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for l in range(n - 1):
                a, b = w[l], w[l + 1]
                if a != b and rs.cartan[a - 1][b - 1] == 0:
                    swapped = w[:l] + (b, a) + w[l + 2:]
                    if swapped not in out:
                        if len(out) >= cap:
                            raise ExchangeClassTooLarge(
                                "exchange class exceeds cap %d" % cap
                            )
                        out[swapped] = perm_of(swapped)
                        nxt.append(swapped)
        frontier = nxt
    return out


def graph_to_dot(graph, name="decoration"):
    """DOT rendering with vertices labelled s_index."""
    lines = ["digraph %s {" % name]
    for j, letter in enumerate(graph.labels, start=1):
        lines.append('  %d [label="s%d"];' % (j, letter))
    for j, k in graph.edges:
        lines.append("  %d -> %d;" % (j, k))
    lines.append("}")
    return "\n".join(lines) + "\n"


def nice_decomposition(rs):
    """Segmented reduced word for w0 from the chain of braidless prefixes.

    Segment j is the longest-minimal-representative word for omega_j inside
    the subsystem on alpha_1..alpha_j; the concatenation multiplies out to
    the longest element.
    """
    segments = []
    for j in range(1, rs.rank + 1):
        indices = tuple(range(1, j + 1))
        if not is_braidless(rs, j, indices):
            raise UnsupportedFamily(
                "enumeration of %s%d is not good at position %d" % (rs.family, rs.rank, j)
            )
        segments.append(coset_longest_word(rs, j, indices))
    return segments


# ---------------------------------------------------------------------------
# Tuple parametrization of the full group for types A and C.

def dr_bound(family, i):
    """Largest tuple entry at position i."""
    if family == "A":
        return i
    if family == "C":
        return 2 * i - 1
    raise UnsupportedFamily("tuple parametrization exists only for types A and C")


def dr_segment_word(family, i, a):
    """Word of the coset factor pi_a inside the rank-i subsystem."""
    if not 0 <= a <= dr_bound(family, i):
        raise ValueError("entry %d outside 0..%d" % (a, dr_bound(family, i)))
    if a == 0:
        return ()
    if a <= i:
        return tuple(range(i, i - a, -1))
    # type C turnaround: s_i .. s_2 s_1 s_2 .. s_{a-i+1}
    return tuple(range(i, 0, -1)) + tuple(range(2, a - i + 2))


def dr_tuples(family, rank):
    """All tuples, in lexicographic order."""
    out = [()]
    for i in range(1, rank + 1):
        out = [t + (a,) for t in out for a in range(dr_bound(family, i) + 1)]
    return out


def dr_decode(rs, tup):
    """Product pi_{a_1} .. pi_{a_r} of coset factors."""
    if rs.family not in ("A", "C"):
        raise UnsupportedFamily("tuple parametrization exists only for types A and C")
    if len(tup) != rs.rank:
        raise ValueError("tuple has %d entries, rank is %d" % (len(tup), rs.rank))
    word = []
    for i, a in enumerate(tup, start=1):
        word.extend(dr_segment_word(rs.family, i, a))
    return weyl.word_to_element(rs, word)


def dr_encode(rs, w):
    """Invert the tuple parametrization by peeling coset factors.

    For i = rank down to 1, exactly one entry a makes w * pi_a^{-1} fix
    omega_i; that quotient lies in the next smaller parabolic.
    """
    if rs.family not in ("A", "C"):
        raise UnsupportedFamily("tuple parametrization exists only for types A and C")
    entries = []
    cur = w
    for i in range(rs.rank, 0, -1):
        omega = tuple(1 if j == i - 1 else 0 for j in range(rs.rank))
        found = None
        for a in range(dr_bound(rs.family, i) + 1):
            seg = dr_segment_word(rs.family, i, a)
            cand = cur * weyl.word_to_element(rs, tuple(reversed(seg)))
            if weyl.apply_to_weight(rs, cand, omega) == omega:
                if found is not None:
                    raise EncodeFailure("two coset factors fix omega_%d" % i)
                found = (a, cand)
        if found is None:
            raise EncodeFailure("no coset factor fixes omega_%d" % i)
        entries.append(found[0])
        cur = found[1]
    if not cur.is_identity():
        raise EncodeFailure("peeling did not reach the identity")
    return tuple(reversed(entries))
