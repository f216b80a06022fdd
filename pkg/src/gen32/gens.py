"""Minimal generating sets: exact values, certified bounds, witnesses.

``d_exact`` computes d(G), the least size of a generating set, by
exhaustive search in a fixed enumeration order: tuples of size k are
scanned with the first slot running over conjugacy-class representatives
(ascending lexicographically) and the remaining slots over all elements
in enumeration order.  Conjugating a generating tuple preserves
generation, so fixing the first entry up to conjugacy loses nothing.
The first witness found is returned, and because the search only runs
at size k after sizes < k have been exhausted, two sound prunings never
change which witness that is:

* a slot value inside the subgroup generated by the preceding slots can
  be skipped (removing it from a witness would leave a smaller witness);
* once a prefix subgroup S has had its remaining slots fully scanned
  without success, any later prefix generating the same S with the same
  number of open slots can be skipped outright.

Two necessary-condition filters reject candidates before any closure is
computed: the tuple must have the same orbit partition as G, and its
image in the abelianization G/[G,G] must generate the abelianization
(checked by ranks over each prime).  Both are conditions every
generating tuple satisfies, so no witness is ever filtered away.

The projected cost of size k is classes(G) * |G|^(k-1) candidate
tuples.  When that exceeds the budget, ``d_exact`` switches to
bound-meet mode: a budget-capped search for an upper bound plus the
abelianization lower bound; the two must meet, else the result is
indeterminate (an error, never a guess).

``d_affine`` computes d(V . G0) for an irreducible stabilizer G0
without searching the large affine group: the value is max(2, d(G0)),
and a witness is produced by sliding slots of a lifted stabilizer
witness around their translation cosets and verifying generation
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .constructions import affine_group, extend_fixing_zero
from .errors import IndeterminateError, PreconditionError
from .field import prime_factors
from .matgroup import MatrixGroup, decode_vector, encode_vector, is_irreducible
from .permgroup import (
    ElementTable,
    Perm,
    PermGroup,
    coset_action,
    derived_subgroup,
)

DEFAULT_BUDGET = 10**8
D_ORDER_LIMIT = 10**5
TABLE_LIMIT = 1024
PREFIX_SET_LIMIT = 4096
ABELIAN_FILTER_LIMIT = 256

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_SHORTCUT = "shortcut-LM"
METHOD_BOUND_MEET = "bound-meet"


@dataclass(frozen=True)
class GenTuple:
    """A tuple of group elements; ``verified`` records that generation
    was confirmed by an actual order computation."""

    elements: tuple[Perm, ...]
    verified: bool


@dataclass(frozen=True)
class DResult:
    """d(G) together with a witness and how it was obtained."""

    value: int
    witness: GenTuple
    method: str


def generates(G: PermGroup, perms: Sequence[Perm]) -> bool:
    """Whether the given elements of G generate all of G."""
    for g in perms:
        if g.degree != G.degree:
            raise PreconditionError("degree mismatch in generates()")
        if g not in G:
            raise PreconditionError("generates() requires elements of the group")
    return PermGroup(G.degree, tuple(perms)).order() == G.order()


def _verified(G: PermGroup, perms: tuple[Perm, ...]) -> GenTuple:
    if not generates(G, perms):
        raise RuntimeError("internal error: candidate witness fails verification")
    return GenTuple(elements=perms, verified=True)


def d_lower_bound_abelian(G: PermGroup) -> int:
    """max over primes l dividing |G/[G,G]| of the l-rank of the
    abelianization; a certified lower bound for d(G) (0 for perfect or
    trivial G)."""
    n = G.order()
    if n == 1:
        return 0
    D = derived_subgroup(G)
    dn = D.order()
    if dn == n:
        return 0
    best = 0
    elems = G.elements()
    for ell in prime_factors(n // dn):
        cnt = sum(1 for x in elems if (x**ell) in D)
        cnt //= dn
        r = 0
        while cnt % ell == 0:
            cnt //= ell
            r += 1
        if cnt != 1:
            raise RuntimeError("internal error: torsion count is not a prime power")
        best = max(best, r)
    return best


# ---------------------------------------------------------------------------
# necessary-condition filters


class _AbelianFilter:
    """Per-element images in A = G/[G,G], with subgroup-span helpers.

    For a candidate tuple to generate G its image must generate A, so a
    prefix whose span S needs more new generators than there are open
    slots is dead, and the last slot may be restricted to elements whose
    image x satisfies <S, x> = A.  Coset indices of the derived
    subgroup serve as labels for A's elements; index 0 is the identity.
    """

    __slots__ = ("size", "phi", "_mul", "_good", "_need")

    def __init__(self, G: PermGroup):
        D = derived_subgroup(G)
        ca = coset_action(G, D)
        self.size = len(ca.reps)
        self.phi = ca.coset_of
        reps = ca.reps
        self._mul = [
            [ca.coset_of[reps[i] * reps[j]] for j in range(self.size)] for i in range(self.size)
        ]
        self._good: dict[frozenset[int], frozenset[int]] = {}
        self._need: dict[frozenset[int], int] = {}

    def span(self, labels: Sequence[int]) -> frozenset[int]:
        """The subgroup of A generated by the given labels."""
        seen = {0}
        queue = [0]
        for x in labels:
            if x not in seen:
                seen.add(x)
                queue.append(x)
        k = 0
        while k < len(queue):
            a = queue[k]
            row = self._mul[a]
            for x in labels:
                b = row[x]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
            k += 1
        return frozenset(seen)

    def extend_span(self, span: frozenset[int], label: int) -> frozenset[int]:
        if label in span:
            return span
        return self.span(tuple(span) + (label,))

    def gens_needed(self, span: frozenset[int]) -> int:
        """d(A / span): how many more images are needed to cover A."""
        need = self._need.get(span)
        if need is not None:
            return need
        quotient = self.size // len(span)
        need = 0
        for ell in prime_factors(quotient) if quotient > 1 else []:
            cnt = sum(1 for x in range(self.size) if self._pow(x, ell) in span)
            cnt //= len(span)
            r = 0
            while cnt % ell == 0:
                cnt //= ell
                r += 1
            need = max(need, r)
        self._need[span] = need
        return need

    def good_last(self, span: frozenset[int]) -> frozenset[int]:
        """Labels x with <span, x> = A (the only labels a final slot can
        usefully carry)."""
        good = self._good.get(span)
        if good is None:
            good = frozenset(
                x for x in range(self.size) if len(self.extend_span(span, x)) == self.size
            )
            self._good[span] = good
        return good

    def _pow(self, x: int, e: int) -> int:
        acc = 0
        for _ in range(e):
            acc = self._mul[acc][x]
        return acc


def _orbit_count(degree: int, perms: Sequence[Perm]) -> int:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in perms:
        img = g.images
        for x in range(degree):
            rx, ry = find(x), find(img[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return sum(1 for x in range(degree) if parent[x] == x)


# ---------------------------------------------------------------------------
# the tuple search


class _Search:
    """Shared state for the level-by-level witness search on one group.

    ``run_level(k, limit)`` scans all size-k tuples in the canonical
    order; it must only be called once sizes < k are known to be
    witness-free (the skip rules rely on it).  ``tests`` counts final
    candidates attempted and persists across levels; when it reaches the
    limit the scan aborts with ``truncated`` set.
    """

    def __init__(self, G: PermGroup):
        self.G = G
        self.n = G.order()
        self.degree = G.degree
        self.reps = [r for r in G.conjugacy_class_reps() if not r.is_identity()]
        self.tests = 0
        self.truncated = False
        self._table: ElementTable | None = None
        self._bfs_ids: list[int] | None = None
        self._rep_ids: list[int] | None = None
        self._elements: list[Perm] | None = None
        self._ab: _AbelianFilter | None = None
        self._ab_ready = False
        self._orbits = len(G.orbits())
        self._memo: set[tuple[int, frozenset[int]]] = set()

    # -- lazy heavy state --------------------------------------------------

    def _prepare(self) -> None:
        if self._elements is None:
            self._elements = self.G.elements()
            if self.n <= TABLE_LIMIT:
                self._table = ElementTable(self.G)
                self._bfs_ids = [self._table.index[e] for e in self._elements]
                self._rep_ids = [self._table.index[r] for r in self.reps]
        if not self._ab_ready:
            self._ab_ready = True
            try:
                ab = _AbelianFilter(self.G)
            except PreconditionError:
                ab = None
            if ab is not None and ab.size <= ABELIAN_FILTER_LIMIT:
                self._ab = ab

    # -- public entry ------------------------------------------------------

    def run_level(self, k: int, limit: int | None) -> tuple[Perm, ...] | None:
        """First witness of size exactly k, or None; honors the test
        limit."""
        self.truncated = False
        if k == 1:
            for r in self.reps:
                if limit is not None and self.tests >= limit:
                    self.truncated = True
                    return None
                self.tests += 1
                if r.order() == self.n:
                    return (r,)
            return None
        self._prepare()
        if self._table is not None:
            return self._run_table(k, limit)
        return self._run_big(k, limit)

    # -- id-table mode -----------------------------------------------------

    def _run_table(self, k: int, limit: int | None) -> tuple[Perm, ...] | None:
        table = self._table
        ab = self._ab
        phi_of = None
        if ab is not None:
            phi_of = [ab.phi[table.elements[i]] for i in range(self.n)]

        def rec(prefix: tuple[int, ...], sub: frozenset[int], remaining: int):
            key = (remaining, sub)
            if key in self._memo:
                return None
            span = None
            if ab is not None:
                span = ab.span(sorted({phi_of[i] for i in prefix}))
                if ab.gens_needed(span) > remaining:
                    self._memo.add(key)
                    return None
            if remaining == 1:
                good = ab.good_last(span) if ab is not None else None
                for i in self._bfs_ids:
                    if i in sub:
                        continue
                    if limit is not None and self.tests >= limit:
                        self.truncated = True
                        return None
                    self.tests += 1
                    if good is not None and phi_of[i] not in good:
                        continue
                    cand = prefix + (i,)
                    if (
                        _orbit_count(self.degree, [table.elements[j] for j in cand])
                        != self._orbits
                    ):
                        continue
                    if len(table.closure(cand)) == self.n:
                        return tuple(table.elements[j] for j in cand)
                self._memo.add(key)
                return None
            for i in self._bfs_ids:
                if i in sub:
                    continue
                bigger = table.closure(prefix + (i,))
                got = rec(prefix + (i,), bigger, remaining - 1)
                if got is not None:
                    return got
                if self.truncated:
                    return None
            self._memo.add(key)
            return None

        for rid in self._rep_ids:
            got = rec((rid,), table.cyclic(rid), k - 1)
            if got is not None or self.truncated:
                return got
        return None

    # -- direct-permutation mode (groups too large for a table) -----------

    def _run_big(self, k: int, limit: int | None) -> tuple[Perm, ...] | None:
        elems = self._elements
        ab = self._ab
        target = self.n

        def closure_set(perms: tuple[Perm, ...]) -> set[Perm] | None:
            """The generated subgroup as an explicit set, or None when it
            exceeds the tracking limit."""
            seen = {Perm.identity(self.degree)}
            queue = list(seen)
            for g in perms:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
            i = 0
            while i < len(queue):
                x = queue[i]
                for g in perms:
                    y = x * g
                    if y not in seen:
                        if len(seen) >= PREFIX_SET_LIMIT:
                            return None
                        seen.add(y)
                        queue.append(y)
                i += 1
            return seen

        def rec(prefix: tuple[Perm, ...], sub: set[Perm] | None, remaining: int):
            span = None
            if ab is not None:
                span = ab.span(sorted({ab.phi[g] for g in prefix}))
                if ab.gens_needed(span) > remaining:
                    return None
            if remaining == 1:
                good = ab.good_last(span) if ab is not None else None
                for c in elems:
                    if sub is not None and c in sub:
                        continue
                    if limit is not None and self.tests >= limit:
                        self.truncated = True
                        return None
                    self.tests += 1
                    if good is not None and ab.phi[c] not in good:
                        continue
                    cand = prefix + (c,)
                    if _orbit_count(self.degree, cand) != self._orbits:
                        continue
                    if PermGroup(self.degree, cand).order() == target:
                        return cand
                return None
            for c in elems:
                if sub is not None and c in sub:
                    continue
                got = rec(prefix + (c,), closure_set(prefix + (c,)), remaining - 1)
                if got is not None:
                    return got
                if self.truncated:
                    return None
            return None

        for r in self.reps:
            got = rec((r,), closure_set((r,)), k - 1)
            if got is not None or self.truncated:
                return got
        return None


def _max_possible_d(n: int) -> int:
    k = 0
    while (1 << k) < n:
        k += 1
    return k


def d_exact(G: PermGroup, budget: int = DEFAULT_BUDGET) -> DResult:
    """The minimal number of generators of G, with a verified witness.

    Searches sizes k = 1, 2, ... exhaustively while the projected
    candidate count classes(G) * |G|^(k-1) fits the budget, returning
    method 'exhaustive'.  Otherwise falls back to a budget-capped upper
    search that must meet the certified lower bound (method
    'bound-meet'); anything else raises IndeterminateError.  Requires
    |G| <= 10^5.
    """
    if budget < 1:
        raise PreconditionError("budget must be positive")
    n = G.order()
    if n > D_ORDER_LIMIT:
        raise PreconditionError(f"group order {n} exceeds the d_exact cap {D_ORDER_LIMIT}")
    if n == 1:
        return DResult(value=0, witness=GenTuple(elements=(), verified=True), method=METHOD_EXHAUSTIVE)
    search = _Search(G)
    classes = len(search.reps)
    k = 1
    exhausted_to = 0
    while k <= _max_possible_d(n):
        projected = classes * n ** (k - 1)
        if search.tests + projected > budget:
            break
        witness = search.run_level(k, None)
        if witness is not None:
            return DResult(value=k, witness=_verified(G, witness), method=METHOD_EXHAUSTIVE)
        exhausted_to = k
        k += 1
    else:
        raise RuntimeError("internal error: no generating set up to log2(|G|)")

    lower = max(d_lower_bound_abelian(G), exhausted_to + 1)
    while search.tests < budget and k <= _max_possible_d(n):
        witness = search.run_level(k, budget)
        if witness is not None:
            if k == lower:
                return DResult(value=k, witness=_verified(G, witness), method=METHOD_BOUND_MEET)
            raise IndeterminateError(
                f"budget-capped search found a generating {k}-tuple but the certified "
                f"lower bound is only {lower}; raise the budget for an exact answer"
            )
        if search.truncated:
            raise IndeterminateError(
                f"budget {budget} exhausted inside the size-{k} scan with no witness; "
                f"certified so far: {lower} <= d(G)"
            )
        exhausted_to = k
        lower = max(lower, k + 1)
        k += 1
    raise IndeterminateError(
        f"budget {budget} exhausted before any generating tuple was found; "
        f"certified so far: {lower} <= d(G)"
    )


def d_affine(G0: MatrixGroup, budget: int = DEFAULT_BUDGET) -> DResult:
    """d of the affine group V . G0 for an irreducible nontrivial
    stabilizer G0, without searching the affine group itself.

    For irreducible G0 the affine group needs at least 2 generators and
    never more than max(2, d(G0)): a minimal stabilizer witness can be
    completed by sliding single slots around their translation coset
    until the affine group is generated.  The returned witness is found
    by exactly that scan and verified by an order computation, so the
    value is exact, with method 'shortcut-LM'.
    """
    if not is_irreducible(G0):
        raise PreconditionError("d_affine needs an irreducible stabilizer")
    nz = G0.perm_group("nonzero")
    if nz.order() == 1:
        raise PreconditionError("d_affine needs a nontrivial stabilizer")
    inner = d_exact(nz, budget)
    value = max(2, inner.value)
    A = affine_group(G0)
    total = G0.field.q**G0.dim
    identity = Perm.identity(total)
    base = [extend_fixing_zero(g) for g in inner.witness.elements]
    while len(base) < value:
        base.append(identity)
    translations = _all_translations(G0)
    attempts = 0
    for j in range(value):
        for t in translations:
            cand = tuple(base[:j] + [base[j] * t] + base[j + 1 :])
            attempts += 1
            if attempts > budget:
                raise IndeterminateError("translation-lift budget exhausted")
            if generates(A, cand):
                return DResult(value=value, witness=GenTuple(cand, True), method=METHOD_SHORTCUT)
    for j1 in range(value):
        for j2 in range(j1 + 1, value):
            for t1 in translations:
                for t2 in translations:
                    cand = list(base)
                    cand[j1] = cand[j1] * t1
                    cand[j2] = cand[j2] * t2
                    attempts += 1
                    if attempts > budget:
                        raise IndeterminateError("translation-lift budget exhausted")
                    if generates(A, tuple(cand)):
                        return DResult(
                            value=value, witness=GenTuple(tuple(cand), True), method=METHOD_SHORTCUT
                        )
    raise IndeterminateError("no translation lift of the stabilizer witness generates")


def _all_translations(G0: MatrixGroup) -> list[Perm]:
    """Permutations v -> v + u for every nonzero u, in code order."""
    f, dim = G0.field, G0.dim
    total = f.q**dim
    vectors = [decode_vector(f, dim, c) for c in range(total)]
    out = []
    for code in range(1, total):
        u = vectors[code]
        images = [
            encode_vector(f, tuple(a + b for a, b in zip(vectors[c], u))) for c in range(total)
        ]
        out.append(Perm(images))
    return out


def all_abelian_subgroups_cyclic(G: PermGroup) -> bool:
    """Whether every abelian subgroup of G is cyclic.

    Equivalent to: every Sylow subgroup for odd primes is cyclic, and
    the Sylow 2-subgroup is cyclic or generalized quaternion (the only
    noncyclic 2-groups with a unique involution).
    """
    from .permgroup import sylow_subgroup

    n = G.order()
    if n == 1:
        return True
    for ell in prime_factors(n):
        P = sylow_subgroup(G, ell)
        pn = P.order()
        elems = P.elements()
        if max(e.order() for e in elems) == pn:
            continue  # cyclic
        if ell != 2:
            return False
        if pn < 8:
            return False  # noncyclic of order 4 is the Klein group
        if sum(1 for e in elems if e.order() == 2) != 1:
            return False
    return True
