"""Named group constructions.

Everything the CLI and the claim suites can build lives here:

* ``s0_group(q)`` — the monomial subgroup of GL(2, q) generated by the
  coordinate swap, diag(1, -1) and diag(w, w^-1) for the canonical
  primitive element w; it consists of the 4(q - 1) matrices
  diag(a, +-1/a) and antidiag(a; +-1/a) and is irreducible for odd q.
* ``affine_group(G0)`` — the semidirect product V . G0 of the
  translation group of V = GF(q)^dim with a matrix group G0, as a
  permutation group on the q^dim vector codes.
* ``table1_group(i)`` / ``table2_group(i)`` — affine groups over
  stabilizer matrix groups loaded from the bundled ``data/*.mat`` files
  (four exceptional 3/2-transitive groups and the two larger monomial
  overgroups that normalize two of them).
* ``sl2(p)`` — SL(2, p) from its two standard generators, plus the
  twisted pair check that an upper and a lower unitriangular generator
  already give the whole group.
* ``z_group(m, n, r)`` — the metacyclic group <a, b | a^m, b^n,
  conjugation by b raises a to the r-th power> in its regular action,
  and ``z_group_kernel_action`` for the degree-m action on <a>'s points.
* ``agl1(q)`` — the 1-dimensional affine group, x -> ax + b.

Generator order and point codings are fixed by each constructor, so
every construction is bit-reproducible.
"""

from __future__ import annotations

import os
from math import gcd
from pathlib import Path

from .errors import PreconditionError
from .field import FieldSpec, field_make, prime_power, primitive_element
from .matgroup import (
    MatrixF,
    MatrixGroup,
    POINT_LIMIT,
    matrix_group_from_text,
    perm_from_matrix,
)
from .permgroup import Perm, PermGroup

DATA_ENV = "GEN32_DATA_DIR"


# ---------------------------------------------------------------------------
# monomial groups S_0(q)


def s0_group(q: int) -> MatrixGroup:
    """The monomial group of order 4(q - 1) inside GL(2, q), q odd.

    Generated by u = antidiag(1; 1), v = diag(1, -1) and
    w = diag(w0, w0^-1) with w0 the canonical primitive element.
    """
    p, m = prime_power(q)
    if p == 2:
        raise PreconditionError("s0_group needs odd q")
    f = field_make(p, m)
    one, zero = f.one(), f.zero()
    w0 = primitive_element(f)
    u = MatrixF(f, [[zero, one], [one, zero]])
    v = MatrixF(f, [[one, zero], [zero, -one]])
    w = MatrixF(f, [[w0, zero], [zero, w0.inv()]])
    return MatrixGroup(f, 2, [u, v, w])


# ---------------------------------------------------------------------------
# affine groups


def translation_perms(field: FieldSpec, dim: int) -> list[Perm]:
    """The dim standard-basis translations v -> v + e_i on vector codes."""
    q = field.q
    total = q**dim
    if total > POINT_LIMIT:
        raise PreconditionError(f"point count {total} exceeds cap {POINT_LIMIT}")
    out = []
    for i in range(dim):
        block = q**i
        images = [0] * total
        for c in range(total):
            digit = (c // block) % q
            bumped = (field.element(digit) + field.one()).code
            images[c] = c + (bumped - digit) * block
        out.append(Perm(images))
    return out


def extend_fixing_zero(g: Perm) -> Perm:
    """Reindex a permutation of nonzero vector codes (point c = vector
    c + 1) to the full code space, fixing the zero vector."""
    return Perm._raw((0,) + tuple(x + 1 for x in g.images))


def affine_of_linear_perms(field: FieldSpec, dim: int, nonzero_perms: tuple[Perm, ...]) -> PermGroup:
    """The affine group V . L for a linear group L given by its
    permutations of nonzero vectors.

    Generators are the dim basis translations followed by the linear
    generators extended to fix the zero vector.
    """
    total = field.q**dim
    for g in nonzero_perms:
        if g.degree != total - 1:
            raise PreconditionError("linear permutation degree mismatch")
    gens = tuple(translation_perms(field, dim)) + tuple(
        extend_fixing_zero(g) for g in nonzero_perms
    )
    return PermGroup(total, gens)


def affine_group(G0: MatrixGroup) -> PermGroup:
    """The semidirect product V . G0 on all q^dim vector codes.

    Generators are the dim standard-basis translations followed by the
    permutations of the matrix generators of G0.
    """
    gens = tuple(translation_perms(G0.field, G0.dim)) + tuple(
        perm_from_matrix(M, "all") for M in G0.generators
    )
    return PermGroup(G0.field.q**G0.dim, gens)


# ---------------------------------------------------------------------------
# bundled stabilizer tables


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


_TABLE_CACHE: dict[str, MatrixGroup] = {}


def _load_matrix_group(stem: str) -> MatrixGroup:
    if stem not in _TABLE_CACHE:
        path = data_dir() / f"{stem}.mat"
        try:
            text = path.read_text()
        except OSError as exc:
            raise PreconditionError(f"cannot read bundled data file {path}: {exc}") from exc
        try:
            _TABLE_CACHE[stem] = matrix_group_from_text(text)
        except ValueError as exc:
            raise PreconditionError(f"corrupt data file {path}: {exc}") from exc
    return _TABLE_CACHE[stem]


def table1_matrix_group(i: int) -> MatrixGroup:
    """Stabilizer matrix group of the i-th bundled exceptional group,
    i in 1..4."""
    if i not in (1, 2, 3, 4):
        raise PreconditionError(f"table1 index must be 1..4, got {i}")
    return _load_matrix_group(f"table1_G{i}")


def table2_matrix_group(i: int) -> MatrixGroup:
    """Stabilizer matrix group of the i-th bundled monomial overgroup,
    i in 1..2."""
    if i not in (1, 2):
        raise PreconditionError(f"table2 index must be 1..2, got {i}")
    return _load_matrix_group(f"table2_M{i}")


def table1_group(i: int) -> PermGroup:
    return affine_group(table1_matrix_group(i))


def table2_group(i: int) -> PermGroup:
    return affine_group(table2_matrix_group(i))


# ---------------------------------------------------------------------------
# SL(2, p)


def sl2(p: int) -> MatrixGroup:
    """SL(2, p) for prime p > 3, from the standard generator pair
    [[1,1],[0,1]] and [[0,1],[-1,0]]."""
    f = _sl2_field(p)
    one, zero = f.one(), f.zero()
    u = MatrixF(f, [[one, one], [zero, one]])
    v = MatrixF(f, [[zero, one], [-one, zero]])
    return MatrixGroup(f, 2, [u, v])


def sl2_twisted_group(p: int) -> MatrixGroup:
    """The subgroup <u, u^t'> of SL(2, p) generated by [[1,1],[0,1]] and
    its twisted transpose [[1,0],[-w,1]], w the canonical primitive
    element mod p.  For p > 3 this is again all of SL(2, p)."""
    f = _sl2_field(p)
    one, zero = f.one(), f.zero()
    w0 = primitive_element(f)
    u = MatrixF(f, [[one, one], [zero, one]])
    ut = MatrixF(f, [[one, zero], [-w0, one]])
    return MatrixGroup(f, 2, [u, ut])


def sl2_order(p: int) -> int:
    return p * (p * p - 1)


def sl2_twisted_check(p: int) -> bool:
    """Whether the unitriangular pair generates the full SL(2, p)."""
    return sl2_twisted_group(p).order() == sl2_order(p)


def _sl2_field(p: int) -> FieldSpec:
    if p <= 3:
        raise PreconditionError(f"sl2 constructions need a prime p > 3, got {p}")
    f = field_make(p, 1)
    return f


# ---------------------------------------------------------------------------
# metacyclic Z-groups


def _z_group_check(m: int, n: int, r: int) -> None:
    if m < 1 or n < 1:
        raise PreconditionError("z_group needs m, n >= 1")
    if not 1 <= r <= m:
        raise PreconditionError(f"z_group twist r must satisfy 1 <= r <= m, got {r}")
    if gcd(m, n) != 1:
        raise PreconditionError(f"z_group needs gcd(m, n) = 1, got gcd({m}, {n})")
    if m > 1:
        if gcd(r - 1, m) != 1:
            raise PreconditionError(f"z_group needs gcd(r - 1, m) = 1, got r = {r}, m = {m}")
        if pow(r, n, m) != 1:
            raise PreconditionError(f"z_group needs r^n = 1 mod m, got r = {r}")


def z_group(m: int, n: int, r: int) -> PermGroup:
    """The order-mn metacyclic group <a, b> with a^m = b^n = 1 and
    b-conjugation raising a to a power of twist r, in its regular
    action.

    Points code the normal forms a^i b^j as i + m*j; right
    multiplication by a sends (i, j) to (i + r^j mod m, j) and by b
    sends (i, j) to (i, j + 1 mod n).  The constraints gcd(m, n) = 1,
    gcd(r - 1, m) = 1 and r^n = 1 mod m make every Sylow subgroup
    cyclic.
    """
    _z_group_check(m, n, r)
    total = m * n
    a_images = [0] * total
    b_images = [0] * total
    for j in range(n):
        rj = pow(r, j, m)
        for i in range(m):
            a_images[i + m * j] = (i + rj) % m + m * j
            b_images[i + m * j] = i + m * ((j + 1) % n)
    return PermGroup(total, (Perm(a_images), Perm(b_images)))


def z_group_kernel_action(m: int, n: int, r: int) -> PermGroup:
    """The same group acting on the m points of its cyclic kernel <a>
    (the right-coset space of <b>): a translates, b multiplies by r."""
    _z_group_check(m, n, r)
    a = Perm([(i + 1) % m for i in range(m)])
    b = Perm([(i * r) % m for i in range(m)])
    return PermGroup(m, (a, b))


# ---------------------------------------------------------------------------
# one-dimensional affine groups


def agl1(q: int) -> PermGroup:
    """AGL(1, q) = {x -> ax + b} on the q field-element codes, generated
    by x -> x + 1 and x -> wx for the canonical primitive element w."""
    p, m = prime_power(q)
    f = field_make(p, m)
    if q > POINT_LIMIT:
        raise PreconditionError(f"degree {q} exceeds cap {POINT_LIMIT}")
    one = f.one()
    t = Perm([(f.element(c) + one).code for c in range(q)])
    w0 = primitive_element(f)
    s = Perm([(f.element(c) * w0).code for c in range(q)])
    return PermGroup(q, (t, s))
