import itertools

import pytest

from gen32.errors import PreconditionError
from gen32.field import field_make, prime_power
from gen32.matgroup import (
    MatrixF,
    MatrixGroup,
    apply_vector,
    conjugate_in_ambient,
    decode_vector,
    encode_vector,
    gl_order,
    is_irreducible,
    matrix_group_from_text,
    matrix_group_to_text,
    perm_from_matrix,
    restrict_scalars,
)


def gf(q):
    return field_make(*prime_power(q))


def mat(q, rows):
    return MatrixF.from_codes(gf(q), rows)


def all_2x2_matrices(q):
    f = gf(q)
    for codes in itertools.product(range(q), repeat=4):
        yield MatrixF.from_codes(f, [codes[:2], codes[2:]])


# ---------------------------------------------------------------------------
# MatrixF


def test_matrix_multiplication_known_value():
    a = mat(5, [[1, 2], [3, 4]])
    b = mat(5, [[0, 1], [1, 0]])
    assert (a * b).codes() == ((2, 1), (4, 3))
    assert (b * a).codes() == ((3, 4), (1, 2))


def test_identity_is_neutral():
    f = gf(7)
    ident = MatrixF.identity(f, 2)
    for m in [mat(7, [[1, 2], [3, 4]]), mat(7, [[0, 1], [6, 0]])]:
        assert m * ident == m
        assert ident * m == m


def test_det_known_values():
    assert mat(5, [[1, 2], [3, 4]]).det().code == (4 - 6) % 5
    assert mat(3, [[1, 0], [0, 1]]).det().code == 1
    assert mat(3, [[1, 2], [2, 1]]).det().code == (1 - 4) % 3


def test_det_multiplicative_exhaustive_gf2():
    for a in all_2x2_matrices(2):
        for b in all_2x2_matrices(2):
            assert (a * b).det() == a.det() * b.det()


def test_gl2_3_brute_force_count_matches_gl_order():
    invertible = [m for m in all_2x2_matrices(3) if m.is_invertible()]
    assert len(invertible) == gl_order(3, 2) == 48
    for m in invertible:
        assert m * m.inverse() == MatrixF.identity(gf(3), 2)
        assert m.inverse() * m == MatrixF.identity(gf(3), 2)
    singular = [m for m in all_2x2_matrices(3) if not m.is_invertible()]
    assert all(m.det().code == 0 for m in singular)
    assert len(singular) == 81 - 48


def test_gl_order_formula():
    # product of (q^d - q^i): independent recomputation
    for q, d in [(2, 2), (3, 2), (5, 2), (3, 4), (4, 2)]:
        expected = 1
        for i in range(d):
            expected *= q**d - q**i
        assert gl_order(q, d) == expected


def test_matrix_order():
    assert mat(5, [[1, 1], [0, 1]]).order() == 5
    assert mat(7, [[1, 1], [0, 1]]).order() == 7
    assert MatrixF.identity(gf(3), 2).order() == 1
    w = mat(5, [[2, 0], [0, 1]])  # 2 has multiplicative order 4 mod 5
    assert w.order() == 4


def test_matrix_order_requires_invertible():
    with pytest.raises(PreconditionError):
        mat(3, [[1, 1], [1, 1]]).order()


def test_inverse_requires_invertible():
    with pytest.raises(PreconditionError):
        mat(3, [[1, 1], [1, 1]]).inverse()


def test_matrix_shape_validation():
    f = gf(3)
    with pytest.raises(PreconditionError):
        MatrixF.from_codes(f, [[1, 2]])
    with pytest.raises(PreconditionError):
        MatrixF.from_codes(f, [])


# ---------------------------------------------------------------------------
# vector coding and the permutation action


def test_vector_code_round_trip():
    for q, dim in [(3, 2), (5, 2), (9, 2), (2, 4)]:
        f = gf(q)
        for code in range(q**dim):
            assert encode_vector(f, decode_vector(f, dim, code)) == code


def test_row_vector_action_convention():
    # v * M uses v as a row vector: basis vector e_i maps to row i
    f = gf(5)
    m = mat(5, [[1, 2], [3, 4]])
    e0 = decode_vector(f, 2, encode_vector(f, (f.one(), f.zero())))
    assert [x.code for x in apply_vector(e0, m)] == [1, 2]


def test_perm_from_matrix_is_homomorphism():
    # the defining convention check: perm(A) * perm(B) == perm(A * B)
    for q in (3, 5):
        sample = [
            mat(q, [[1, 1], [0, 1]]),
            mat(q, [[0, 1], [1, 0]]),
            mat(q, [[1, 0], [1, 1]]),
            mat(q, [[2, 0], [0, 1]]),
        ]
        for action in ("nonzero", "all"):
            for a in sample:
                for b in sample:
                    pa = perm_from_matrix(a, action)
                    pb = perm_from_matrix(b, action)
                    assert pa * pb == perm_from_matrix(a * b, action)


def test_perm_from_matrix_degrees():
    m = mat(5, [[0, 1], [1, 0]])
    assert perm_from_matrix(m, "nonzero").degree == 24
    assert perm_from_matrix(m, "all").degree == 25
    assert perm_from_matrix(m, "all").images[0] == 0  # zero vector is fixed


def test_perm_from_matrix_requires_invertible():
    with pytest.raises(PreconditionError):
        perm_from_matrix(mat(3, [[1, 1], [1, 1]]))


def test_perm_from_matrix_nonzero_point_meaning():
    # nonzero point c corresponds to the vector with code c + 1
    f = gf(3)
    m = mat(3, [[0, 1], [1, 0]])
    p = perm_from_matrix(m, "nonzero")
    for point in range(8):
        vec = decode_vector(f, 2, point + 1)
        image = apply_vector(vec, m)
        assert p.images[point] == encode_vector(f, image) - 1


# ---------------------------------------------------------------------------
# MatrixGroup


def test_matrix_group_order_equals_perm_order():
    f = gf(3)
    G = MatrixGroup(f, 2, [mat(3, [[1, 1], [0, 1]]), mat(3, [[0, 1], [2, 0]])])
    assert G.order() == 24  # SL(2, 3)
    assert G.perm_group("nonzero").order() == 24
    assert G.perm_group("all").order() == 24
    assert len(G.elements()) == 24
    assert all(m.det().code == 1 for m in G.elements())


def test_matrix_group_elements_closed():
    G = MatrixGroup(gf(3), 2, [mat(3, [[0, 1], [2, 0]])])
    elems = G.elements()
    assert len(elems) == 4
    for a in elems:
        for b in elems:
            assert a * b in elems


def test_matrix_group_rejects_mismatched_generators():
    with pytest.raises(PreconditionError):
        MatrixGroup(gf(3), 2, [mat(5, [[1, 0], [0, 1]])])


# ---------------------------------------------------------------------------
# irreducibility with an independent all-lines oracle (dim 2)


def canonical_lines(q):
    """One representative per 1-dimensional subspace of GF(q)^2."""
    f = gf(q)
    reps = [(f.one(), f.element(c)) for c in range(q)]
    reps.append((f.zero(), f.one()))
    return reps


def reducible_by_line_scan(G):
    # dim 2: proper nontrivial invariant subspaces are exactly lines
    q = G.field.q
    f = G.field
    for v in canonical_lines(q):
        ok = True
        for M in G.generators:
            w = apply_vector(v, M)
            # w must be a scalar multiple of v
            if v[0].code != 0:
                scalar_ok = w == tuple(x * (w[0] * v[0].inv()) for x in v)
            else:
                scalar_ok = w[0].code == 0
            if not scalar_ok:
                ok = False
                break
        if ok:
            return True
    return False


@pytest.mark.parametrize("q", [3, 5])
def test_is_irreducible_matches_line_scan(q):
    f = gf(q)
    corpus = [
        MatrixGroup(f, 2, [mat(q, [[1, 1], [0, 1]]), mat(q, [[0, 1], [q - 1, 0]])]),  # SL(2,q)
        MatrixGroup(f, 2, [mat(q, [[0, 1], [1, 0]])]),  # swap: reducible (fixed lines)
        MatrixGroup(f, 2, [mat(q, [[1, 1], [0, 1]])]),  # unipotent: invariant line
        MatrixGroup(f, 2, [mat(q, [[2, 0], [0, 1]])]),  # diagonal: invariant axes
        MatrixGroup(f, 2, [MatrixF.identity(f, 2)]),  # trivial
        MatrixGroup(f, 2, [mat(q, [[2, 0], [0, 2]])]),  # scalar
        MatrixGroup(f, 2, [mat(q, [[0, 1], [1, 0]]), mat(q, [[1, 0], [0, q - 1]])]),
    ]
    for G in corpus:
        assert is_irreducible(G) == (not reducible_by_line_scan(G))


def test_s0_groups_are_irreducible():
    from gen32.constructions import s0_group

    for q in (3, 5, 9, 13):
        assert is_irreducible(s0_group(q))
        assert not reducible_by_line_scan(s0_group(q))


# ---------------------------------------------------------------------------
# restriction of scalars


def test_restrict_scalars_preserves_point_codes():
    # GF(9) -> GF(3): acting on vector codes must literally commute
    from gen32.constructions import s0_group

    G = s0_group(9)
    R = restrict_scalars(G)
    assert R.field.q == 3
    assert R.dim == 4
    assert R.order() == G.order()
    for gm, rm in zip(G.generators, R.generators):
        assert perm_from_matrix(gm, "all") == perm_from_matrix(rm, "all")
        assert perm_from_matrix(gm, "nonzero") == perm_from_matrix(rm, "nonzero")


def test_restrict_scalars_on_prime_field_rejected():
    from gen32.constructions import s0_group

    with pytest.raises(PreconditionError):
        restrict_scalars(s0_group(5))


# ---------------------------------------------------------------------------
# conjugacy in the ambient general linear group


def test_conjugate_in_ambient_finds_conjugator():
    f = gf(5)
    A = MatrixGroup(f, 2, [mat(5, [[2, 0], [0, 1]])])
    x = mat(5, [[1, 1], [0, 1]])
    B = MatrixGroup(f, 2, [x.inverse() * A.generators[0] * x])
    t = conjugate_in_ambient(A, B)
    assert t is not None
    # conjugation by t maps A onto B as a set
    a_elems = {m.codes() for m in A.elements()}
    b_elems = {m.codes() for m in B.elements()}
    mapped = {(t.inverse() * m * t).codes() for m in A.elements()}
    assert mapped == b_elems
    assert a_elems != b_elems  # the instance is nontrivial


def test_conjugate_in_ambient_distinguishes_nonconjugates():
    f = gf(5)
    # cyclic of order 4 (scalar i has order 4? 2^2=4, 2^4=16=1: order 4)
    A = MatrixGroup(f, 2, [mat(5, [[2, 0], [0, 2]])])
    # Klein four group of diagonal sign matrices
    B = MatrixGroup(f, 2, [mat(5, [[4, 0], [0, 1]]), mat(5, [[1, 0], [0, 4]])])
    assert A.order() == B.order() == 4
    assert conjugate_in_ambient(A, B) is None


def test_conjugate_in_ambient_cap():
    f = gf(3)
    A = MatrixGroup(f, 4, [mat_dim4(3)])
    with pytest.raises(PreconditionError):
        conjugate_in_ambient(A, A)


def mat_dim4(q):
    f = gf(q)
    rows = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
    return MatrixF.from_codes(f, rows)


# ---------------------------------------------------------------------------
# serialization


def test_matrix_group_text_round_trip():
    from gen32.constructions import s0_group, sl2

    for G in (s0_group(5), s0_group(9), sl2(5)):
        text = matrix_group_to_text(G)
        H = matrix_group_from_text(text)
        assert H.field.q == G.field.q
        assert H.dim == G.dim
        assert [m.codes() for m in H.generators] == [m.codes() for m in G.generators]


@pytest.mark.parametrize(
    "text",
    ["", "3 1", "3 1 2\n1 0\n0 1\nextra", "4 1 2\n1 0\n0 1", "3 1 2\n1 9\n0 1"],
)
def test_matrix_group_from_text_rejects_malformed(text):
    with pytest.raises((ValueError, PreconditionError)):
        matrix_group_from_text(text)
