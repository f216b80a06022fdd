"""Transitivity-type predicates for permutation groups.

The predicates form the usual hierarchy on a transitive group G acting
on n points with point stabilizer H:

* half-transitive: all orbits have equal size (> 1 unless n = 1);
* 3/2-transitive: transitive, H nontrivial, and all H-orbits outside the
  fixed point have equal size;
* 2-transitive: rank 2, i.e. H is transitive on the remaining points;
* rank: the number of H-orbits (counting the fixed point);
* primitive: no invariant partition with blocks of size strictly
  between 1 and n;
* Frobenius: transitive, not regular, and only the identity fixes two
  points (equivalently, every nonidentity element has at most one fixed
  point);
* regular / semiregular: trivial stabilizers, with / without
  transitivity.

Primitivity is decided by Atkinson's algorithm: for each point beta != 0
the finest invariant partition merging {0, beta} is computed by a
union-find sweep; the group is primitive iff every such partition is the
one-block partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .permgroup import ELEMENT_LIMIT, PermGroup


@dataclass(frozen=True)
class TransitivityReport:
    """Joint answer of all transitivity-type predicates for one group.

    ``rank`` and ``primitive`` are None when the group is intransitive
    (and ``primitive`` also for degree 1, where the notion is empty);
    ``frobenius`` is None when the group was too large to enumerate.
    """

    degree: int
    order: int
    orbit_sizes: tuple[int, ...]
    transitive: bool
    half_transitive: bool
    three_halves: bool
    two_transitive: bool
    rank: int | None
    primitive: bool | None
    frobenius: bool | None
    regular: bool
    semiregular: bool


def is_half_transitive(G: PermGroup) -> bool:
    """All orbits of equal size; degree 1 counts (trivially)."""
    sizes = {len(o) for o in G.orbits()}
    if G.degree == 1:
        return True
    return len(sizes) == 1 and sizes != {1}


def is_semiregular(G: PermGroup) -> bool:
    """Every point stabilizer is trivial (orbit sizes all equal |G|)."""
    n = G.order()
    return all(len(o) == n for o in G.orbits())


def is_regular(G: PermGroup) -> bool:
    return G.is_transitive() and G.order() == G.degree


def rank(G: PermGroup) -> int:
    """Number of point-stabilizer orbits; requires transitivity."""
    if not G.is_transitive():
        raise PreconditionError("rank is defined only for transitive groups")
    return len(G.point_stabilizer(0).orbits())


def is_two_transitive(G: PermGroup) -> bool:
    return G.degree >= 2 and G.is_transitive() and rank(G) == 2


def is_three_halves_transitive(G: PermGroup) -> bool:
    """Transitive, nontrivial point stabilizer, and all stabilizer
    orbits away from the fixed point of equal size."""
    if not G.is_transitive():
        return False
    stab = G.point_stabilizer(0)
    if stab.is_trivial():
        return False
    sizes = {len(o) for o in stab.orbits() if o != [0]}
    return len(sizes) == 1


def minimal_block_with(G: PermGroup, alpha: int, beta: int) -> list[int]:
    """The block containing alpha of the finest G-invariant partition
    merging alpha and beta (Atkinson's union-find sweep).

    Requires a transitive group and distinct points.
    """
    if not G.is_transitive():
        raise PreconditionError("block systems are defined for transitive groups")
    if alpha == beta:
        raise PreconditionError("points must be distinct")
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(alpha, beta)
    queue = [(alpha, beta)]
    while queue:
        u, v = queue.pop()
        for g in G.generators:
            x, y = g.images[u], g.images[v]
            if union(x, y):
                queue.append((x, y))
    root = find(alpha)
    return [x for x in range(n) if find(x) == root]


def is_primitive(G: PermGroup) -> bool:
    """No nontrivial invariant partition; requires transitivity and
    degree >= 2."""
    if G.degree < 2:
        raise PreconditionError("primitivity needs degree >= 2")
    if not G.is_transitive():
        raise PreconditionError("primitivity is defined for transitive groups")
    return all(len(minimal_block_with(G, 0, beta)) == G.degree for beta in range(1, G.degree))


def is_frobenius(G: PermGroup) -> bool:
    """Transitive, not regular, and no nonidentity element fixes two
    points.  Needs element enumeration, so the order cap applies."""
    if not G.is_transitive():
        return False
    if is_regular(G):
        return False
    return all(g.fixed_point_count() <= 1 for g in G.elements() if not g.is_identity())


def analyze(G: PermGroup) -> TransitivityReport:
    """Evaluate every predicate once, sharing the underlying orbit and
    stabilizer computations."""
    order = G.order()
    orbit_sizes = tuple(sorted(len(o) for o in G.orbits()))
    transitive = len(orbit_sizes) == 1 and orbit_sizes[0] == G.degree
    half = is_half_transitive(G)
    semiregular = is_semiregular(G)
    regular = transitive and semiregular
    if transitive:
        rk = rank(G)
        primitive = is_primitive(G) if G.degree >= 2 else None
        three_halves = (not semiregular) and is_three_halves_transitive(G)
        two_trans = G.degree >= 2 and rk == 2
    else:
        rk = None
        primitive = None
        three_halves = False
        two_trans = False
    if order <= ELEMENT_LIMIT:
        frobenius = is_frobenius(G)
    else:
        frobenius = None
    return TransitivityReport(
        degree=G.degree,
        order=order,
        orbit_sizes=orbit_sizes,
        transitive=transitive,
        half_transitive=half,
        three_halves=three_halves,
        two_transitive=two_trans,
        rank=rk,
        primitive=primitive,
        frobenius=frobenius,
        regular=regular,
        semiregular=semiregular,
    )
