"""Matrices over small finite fields and their permutation actions.

Matrices act on ROW vectors from the right: v -> v * M.  Vectors of
length ``dim`` over GF(q) are serialized as integer point codes
``sum(v[i].code * q**i)``, which enumerates the full space as
0 .. q^dim - 1 with the zero vector at code 0.  Converting a matrix to
the permutation it induces on point codes is therefore a homomorphism
onto a permutation group under the left-to-right product convention of
:mod:`gen32.permgroup`, and all group-level questions about a matrix
group (order, membership, conjugacy of generators) are settled on the
faithful permutation image on nonzero vectors.

The text format for matrix-group files is::

    p m dim
    <dim rows of dim element codes>
    <blank line>
    <next matrix>
    ...

with one generator matrix per blank-line-separated block.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import PreconditionError
from .field import FieldElement, FieldSpec, field_make
from .permgroup import Perm, PermGroup

POINT_LIMIT = 10**6
MATRIX_ORDER_LIMIT = 10**7


class MatrixF:
    """An immutable dim x dim matrix over a FieldSpec."""

    __slots__ = ("field", "dim", "rows")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[FieldElement]]):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.dim = len(self.rows)
        if self.dim < 1 or any(len(r) != self.dim for r in self.rows):
            raise PreconditionError("matrix must be square and nonempty")
        for r in self.rows:
            for x in r:
                if x.field != field:
                    raise PreconditionError("matrix entry from a different field")

    @classmethod
    def from_codes(cls, field: FieldSpec, code_rows: Sequence[Sequence[int]]) -> MatrixF:
        return cls(field, [[field.element(c) for c in row] for row in code_rows])

    @classmethod
    def identity(cls, field: FieldSpec, dim: int) -> MatrixF:
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    def codes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x.code for x in r) for r in self.rows)

    def __mul__(self, other: MatrixF) -> MatrixF:
        if self.field != other.field or self.dim != other.dim:
            raise PreconditionError("matrix shape or field mismatch")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for k in range(n):
                acc = self.field.zero()
                for j in range(n):
                    acc = acc + self.rows[i][j] * other.rows[j][k]
                row.append(acc)
            rows.append(row)
        return MatrixF(self.field, rows)

    def _echelon(self) -> tuple[list[list[FieldElement]], FieldElement, list[list[FieldElement]]]:
        """Gaussian elimination; returns (reduced, det, transform) where
        transform * self == reduced over the course of row operations."""
        n = self.dim
        f = self.field
        work = [list(r) for r in self.rows]
        aug = [list(MatrixF.identity(f, n).rows[i]) for i in range(n)]
        det = f.one()
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not work[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                return work, f.zero(), aug
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                aug[col], aug[pivot] = aug[pivot], aug[col]
                det = -det
            inv = work[col][col].inv()
            det = det * work[col][col]
            work[col] = [x * inv for x in work[col]]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and not work[r][col].is_zero():
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
                    aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
        return work, det, aug

    def det(self) -> FieldElement:
        return self._echelon()[1]

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def inverse(self) -> MatrixF:
        reduced, det, aug = self._echelon()
        if det.is_zero():
            raise PreconditionError("matrix is singular")
        return MatrixF(self.field, aug)

    def order(self) -> int:
        """Multiplicative order; requires invertibility, caps at 10^7."""
        if not self.is_invertible():
            raise PreconditionError("singular matrix has no multiplicative order")
        ident = MatrixF.identity(self.field, self.dim)
        acc = self
        n = 1
        while acc != ident:
            acc = acc * self
            n += 1
            if n > MATRIX_ORDER_LIMIT:
                raise PreconditionError("matrix order exceeds iteration cap")
        return n

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixF)
            and self.field == other.field
            and self.codes() == other.codes()
        )

    def __hash__(self) -> int:
        return hash((self.field, self.codes()))

    def __repr__(self) -> str:
        return f"MatrixF({self.field!r}, {list(map(list, self.codes()))})"


# ---------------------------------------------------------------------------
# vectors as integer codes


def encode_vector(field: FieldSpec, vec: Sequence[FieldElement]) -> int:
    acc = 0
    for x in reversed(vec):
        acc = acc * field.q + x.code
    return acc


def decode_vector(field: FieldSpec, dim: int, code: int) -> tuple[FieldElement, ...]:
    out = []
    for _ in range(dim):
        code, r = divmod(code, field.q)
        out.append(field.element(r))
    if code:
        raise PreconditionError("vector code out of range")
    return tuple(out)


def apply_vector(vec: Sequence[FieldElement], M: MatrixF) -> tuple[FieldElement, ...]:
    """v * M for a row vector v."""
    n = M.dim
    out = []
    for k in range(n):
        acc = M.field.zero()
        for j in range(n):
            acc = acc + vec[j] * M.rows[j][k]
        out.append(acc)
    return tuple(out)


def perm_from_matrix(M: MatrixF, action: str = "nonzero") -> Perm:
    """The permutation a matrix induces on vector point codes.

    ``action`` is ``"all"`` (degree q^dim, zero vector = point 0) or
    ``"nonzero"`` (degree q^dim - 1, vector of code c+1 = point c).  The
    matrix must be invertible and the point count is capped at 10^6.
    """
    if not M.is_invertible():
        raise PreconditionError("only invertible matrices induce permutations")
    q = M.field.q
    total = q**M.dim
    if total > POINT_LIMIT:
        raise PreconditionError(f"point count {total} exceeds cap {POINT_LIMIT}")
    if action == "all":
        images = [0] * total
        for c in range(total):
            images[c] = encode_vector(M.field, apply_vector(decode_vector(M.field, M.dim, c), M))
        return Perm(images)
    if action == "nonzero":
        images = [0] * (total - 1)
        for c in range(1, total):
            images[c - 1] = (
                encode_vector(M.field, apply_vector(decode_vector(M.field, M.dim, c), M)) - 1
            )
        return Perm(images)
    raise PreconditionError(f"unknown action {action!r} (use 'all' or 'nonzero')")


# ---------------------------------------------------------------------------


class MatrixGroup:
    """A group of invertible matrices, given by generators.

    All group-theoretic questions are delegated to the faithful
    permutation image on nonzero vectors (a linear map fixing every
    nonzero vector is the identity), so the order of the matrix group is
    by definition the order of that permutation group.
    """

    __slots__ = ("field", "dim", "generators", "_perm_groups")

    def __init__(self, field: FieldSpec, dim: int, generators: Iterable[MatrixF]):
        self.field = field
        self.dim = dim
        self.generators = tuple(generators)
        for M in self.generators:
            if M.field != field or M.dim != dim:
                raise PreconditionError("generator shape or field mismatch")
            if not M.is_invertible():
                raise PreconditionError("matrix group generators must be invertible")
        self._perm_groups: dict[str, PermGroup] = {}

    def perm_group(self, action: str = "nonzero") -> PermGroup:
        if action not in self._perm_groups:
            q = self.field.q
            degree = q**self.dim - (0 if action == "all" else 1)
            self._perm_groups[action] = PermGroup(
                degree, tuple(perm_from_matrix(M, action) for M in self.generators)
            )
        return self._perm_groups[action]

    def order(self) -> int:
        return self.perm_group("nonzero").order()

    def elements(self, cap: int = 10**4) -> list[MatrixF]:
        """All member matrices by breadth-first closure, capped."""
        if self.order() > cap:
            raise PreconditionError(f"matrix group order {self.order()} exceeds cap {cap}")
        gens = [M for M in self.generators]
        ident = MatrixF.identity(self.field, self.dim)
        out = [ident]
        seen = {ident}
        layer = [ident]
        while layer:
            nxt = set()
            for X in layer:
                for M in gens:
                    Y = X * M
                    if Y not in seen:
                        seen.add(Y)
                        nxt.add(Y)
            layer = sorted(nxt, key=MatrixF.codes)
            out.extend(layer)
        return out

    def __repr__(self) -> str:
        return f"MatrixGroup({self.field!r}, dim={self.dim}, {len(self.generators)} gens)"


def is_irreducible(G: MatrixGroup) -> bool:
    """Whether the natural module has no proper nonzero invariant
    subspace.

    Spins every one-dimensional subspace (represented by its vectors of
    lowest nonzero code) under the generators, reducing against a growing
    echelon basis; reducibility is witnessed by a spin that stalls below
    full dimension.
    """
    f, n = G.field, G.dim
    if n == 1:
        return True
    seeds = []
    seen_lines = set()
    for c in range(1, f.q**n):
        v = decode_vector(f, n, c)
        leading = next(x for x in v if not x.is_zero())
        canon = tuple((leading.inv() * x).code for x in v)
        if canon not in seen_lines:
            seen_lines.add(canon)
            seeds.append(v)
    for v in seeds:
        basis: list[tuple[FieldElement, ...]] = []
        pivots: list[int] = []

        def reduce_add(w: tuple[FieldElement, ...]) -> bool:
            w = list(w)
            for b, piv in zip(basis, pivots):
                if not w[piv].is_zero():
                    factor = w[piv]
                    w = [a - factor * c2 for a, c2 in zip(w, b)]
            piv = next((i for i, x in enumerate(w) if not x.is_zero()), None)
            if piv is None:
                return False
            lead_inv = w[piv].inv()
            basis.append(tuple(lead_inv * x for x in w))
            pivots.append(piv)
            return True

        reduce_add(v)
        queue = [v]
        while queue and len(basis) < n:
            w = queue.pop(0)
            for M in G.generators:
                u = apply_vector(w, M)
                if reduce_add(u):
                    queue.append(u)
        if len(basis) < n:
            return False
    return True


def restrict_scalars(G: MatrixGroup) -> MatrixGroup:
    """Rewrite a matrix group over GF(p^m), m >= 2, as one over GF(p).

    A vector of length dim over GF(p^m) is identified with the length
    dim*m vector of its coordinates' polynomial coefficients; this is
    exactly the base-p digit expansion of the point code, so the induced
    permutation of point codes is literally unchanged.  Entry (j*m+i,
    k*m+i') of the rewritten matrix is coefficient i' of x^i * M[j][k].
    """
    f = G.field
    if f.m < 2:
        raise PreconditionError("restrict_scalars needs a proper extension field")
    base = field_make(f.p, 1)
    x = f.element(f.p)  # the class of x has code p
    x_pows = [f.one()]
    for _ in range(f.m - 1):
        x_pows.append(x_pows[-1] * x)
    new_dim = G.dim * f.m
    new_gens = []
    for M in G.generators:
        rows = [[base.zero()] * new_dim for _ in range(new_dim)]
        for j in range(G.dim):
            for k in range(G.dim):
                entry = M.rows[j][k]
                for i in range(f.m):
                    prod = x_pows[i] * entry
                    for i2 in range(f.m):
                        rows[j * f.m + i][k * f.m + i2] = base.element(prod.coeffs[i2])
        new_gens.append(MatrixF(base, rows))
    return MatrixGroup(base, new_dim, new_gens)


def gl_order(q: int, dim: int) -> int:
    n = 1
    for i in range(dim):
        n *= q**dim - q**i
    return n


AMBIENT_LIMIT = 10**5


def conjugate_in_ambient(A: MatrixGroup, B: MatrixGroup) -> MatrixF | None:
    """Search GL(dim, q) for g with g^-1 A g = B; None if there is none.

    The ambient general linear group is enumerated exhaustively in
    ascending entry-code order, so the first valid conjugator in that
    order is returned; validity is g^-1 a g in B for every generator a
    of A together with |A| = |B|.  Requires |GL(dim, q)| <= 10^5.
    """
    if A.field != B.field or A.dim != B.dim:
        raise PreconditionError("groups live in different ambient spaces")
    f, n = A.field, A.dim
    total_gl = gl_order(f.q, n)
    if total_gl > AMBIENT_LIMIT:
        raise PreconditionError(
            f"|GL({n}, {f.q})| = {total_gl} exceeds the conjugacy-scan cap {AMBIENT_LIMIT}"
        )
    if A.order() != B.order():
        return None
    B_perm = B.perm_group("nonzero")
    a_gens = A.generators
    cells = n * n
    for code in range(f.q**cells):
        digits = []
        c = code
        for _ in range(cells):
            c, r = divmod(c, f.q)
            digits.append(r)
        g = MatrixF.from_codes(f, [digits[i * n : (i + 1) * n] for i in range(n)])
        if not g.is_invertible():
            continue
        g_inv = g.inverse()
        if all(perm_from_matrix(g_inv * a * g, "nonzero") in B_perm for a in a_gens):
            return g
    return None


# ---------------------------------------------------------------------------
# matrix-group text format


def matrix_group_to_text(G: MatrixGroup) -> str:
    lines = [f"{G.field.p} {G.field.m} {G.dim}"]
    for M in G.generators:
        lines.append("")
        for row in M.codes():
            lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def matrix_group_from_text(text: str) -> MatrixGroup:
    """Parse the matrix-group text format; raises ValueError when
    malformed."""
    raw_lines = text.splitlines()
    lines = [ln.strip() for ln in raw_lines]
    idx = 0
    while idx < len(lines) and not lines[idx]:
        idx += 1
    if idx == len(lines):
        raise ValueError("empty matrix group text")
    head = lines[idx].split()
    idx += 1
    if len(head) != 3:
        raise ValueError(f"expected 'p m dim' header, got {lines[idx - 1]!r}")
    try:
        p, m, dim = (int(tok) for tok in head)
    except ValueError as exc:
        raise ValueError(f"bad header {lines[idx - 1]!r}") from exc
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    try:
        field = field_make(p, m)
    except PreconditionError as exc:
        raise ValueError(str(exc)) from exc
    blocks: list[list[list[int]]] = []
    current: list[list[int]] = []
    for ln in lines[idx:]:
        if not ln:
            if current:
                blocks.append(current)
                current = []
            continue
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise ValueError(f"bad matrix row {ln!r}") from exc
        current.append(row)
    if current:
        blocks.append(current)
    gens = []
    for block in blocks:
        if len(block) != dim or any(len(row) != dim for row in block):
            raise ValueError(f"matrix block is not {dim}x{dim}: {block}")
        for row in block:
            for c in row:
                if not 0 <= c < field.q:
                    raise ValueError(f"entry code {c} out of range for GF({field.q})")
        gens.append(MatrixF.from_codes(field, block))
    return MatrixGroup(field, dim, gens)
