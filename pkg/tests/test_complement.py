import pytest
from hypothesis import given, strategies as st

from conftest import complexes
from momangle.complement import (
    Complement,
    complement_join,
    complement_minus,
    complex_from_complement,
    equivalent,
    is_complement_of,
    missing_faces,
    reduce,
    restrict,
)
from momangle.complex import Complex, ComplexError, full_subcomplex, link, star
from momangle.corpus import L0_MISSING_FACES, MOORE_MISSING_FACES, example1_complement
from oracles import face_set, faces_avoiding, minimal_nonfaces, powerset


def fs(*members):
    return {frozenset(m) for m in members}


M_EX1 = fs((1, 2, 4, 5), (1, 2, 3), (3, 4), (3, 5))
EX3 = [(1, 2, 4, 5), (1, 2, 3), (3, 4), (3, 5), (1, 2), (4, 5, 6), (3, 6), (3, 4, 6), (3, 5, 6)]


def test_missing_faces_example1(example1):
    assert missing_faces(example1).as_set() == M_EX1
    assert len(missing_faces(example1)) == 4


def test_missing_faces_degenerate():
    assert len(missing_faces(Complex.full_simplex([1, 2, 3]))) == 0
    assert missing_faces(Complex.empty_simplex([1, 2, 3])).as_set() == fs((1,), (2,), (3,))
    assert missing_faces(Complex.void([1, 2])).as_set() == {frozenset()}


def test_moore_missing_faces(moore):
    assert missing_faces(moore).as_set() == {frozenset(m) for m in MOORE_MISSING_FACES}


def test_recovery_examples(example1):
    assert complex_from_complement(Complement(M_EX1, range(1, 6)), range(1, 6)) == example1
    assert complex_from_complement(Complement([()], [1, 2]), [1, 2]).is_void
    assert complex_from_complement(Complement([(1,), (2,), (3,)]), [1, 2, 3]).is_empty_simplex


def test_reduce_examples():
    P = example1_complement()
    assert len(P) == 6
    assert reduce(P).as_set() == M_EX1 and len(reduce(P)) == 4
    anti = Complement([(1, 2), (2, 3)], [1, 2, 3])
    assert reduce(anti) == anti
    assert reduce(Complement(EX3, range(1, 7))).as_set() == fs((1, 2), (3, 4), (3, 5), (4, 5, 6), (3, 6))


def test_equivalent_examples():
    V = range(1, 6)
    assert equivalent(example1_complement(), Complement(M_EX1, V))
    P = Complement([(1, 2)], [1, 2, 3])
    assert equivalent(P, P)
    assert not equivalent(P, Complement([(1,)], [1, 2, 3]))
    with pytest.raises(ComplexError):
        equivalent(P, Complement([(1, 2)], [1, 2]))


def test_minus_examples():
    M = Complement(M_EX1, range(1, 6))
    diff = complement_minus(M, {1, 2})
    assert diff == Complement([(4, 5), (3,), (3, 4), (3, 5)], [3, 4, 5])
    assert reduce(diff).as_set() == fs((4, 5), (3,))
    assert complement_minus(M, frozenset()) == M
    P0 = Complement(L0_MISSING_FACES, range(1, 9))
    assert complement_minus(P0, {1, 2, 3}).as_set() == fs((4,), (5, 7), (6, 8))


def test_join_examples():
    P = Complement([(4, 5), (3,), (3, 4), (3, 5)], range(3, 6))
    Q = Complement([(6,)], [6])
    assert complement_join(P, Q).as_set() == fs((4, 5, 6), (3, 6), (3, 4, 6), (3, 5, 6))
    assert complement_join(P, Complement([()], [])).as_set() == P.as_set()
    a, b = Complement([(1,)], [1, 2]), Complement([(2,)], [1, 2])
    joined = complement_join(a, b)
    assert joined.as_set() == fs((1, 2))
    K = complex_from_complement(joined, [1, 2])
    assert K.facets == fs((1,), (2,))


def test_restrict_examples():
    M = Complement(M_EX1, range(1, 6))
    assert restrict(M, {1, 2, 3}).as_set() == fs((1, 2, 3))
    assert restrict(M, range(1, 6)) == M
    with pytest.raises(ComplexError):
        restrict(M, {1, 9})


def test_is_complement_of(example1, moore):
    assert is_complement_of(example1_complement(), example1)
    assert is_complement_of(missing_faces(example1), example1)
    assert not is_complement_of(Complement([(1, 2, 3, 4)], range(1, 9)), moore)


def test_multiset_semantics():
    P = Complement([(1, 2), (1, 2)], [1, 2])
    assert len(P) == 2
    assert P != Complement([(1, 2)], [1, 2])
    assert len(reduce(P)) == 1


# properties against power-set enumeration


@st.composite
def complements(draw, max_vertices=6):
    m = draw(st.integers(1, max_vertices))
    V = list(range(1, m + 1))
    members = draw(st.lists(st.sets(st.sampled_from(V), max_size=m), max_size=7))
    return Complement(members, V)


@given(complexes())
def test_missing_faces_round_trip(K):
    mf = missing_faces(K)
    assert mf.as_set() == minimal_nonfaces(face_set(K), K.vertices)
    assert len(mf) == len(mf.as_set())
    assert complex_from_complement(mf, K.vertices) == K


@given(complements())
def test_recovery_matches_definition(P):
    K = complex_from_complement(P, P.vertices)
    assert face_set(K) == faces_avoiding(P.members, P.vertices)


@given(complements(), st.data())
def test_reduce_idempotent_and_preserves_recovery(P, data):
    R = reduce(P)
    assert reduce(R) == R
    I = data.draw(st.sets(st.sampled_from(sorted(P.vertices))))
    assert complex_from_complement(R, I) == complex_from_complement(P, I)
    for a in R.members:
        for b in R.members:
            assert a == b or not a <= b


@given(complements(), st.data())
def test_minus_gives_link(P, data):
    K = complex_from_complement(P, P.vertices)
    faces = sorted(face_set(K), key=sorted)
    if not faces:
        return
    sigma = data.draw(st.sampled_from(faces))
    lk = complex_from_complement(complement_minus(P, sigma), P.vertices - sigma)
    assert lk == link(K, sigma)
    st_ = complex_from_complement(complement_minus(P, sigma).on(P.vertices), P.vertices)
    assert st_ == star(K, sigma)


@given(complements(max_vertices=5), complements(max_vertices=5))
def test_join_gives_union(P, Q):
    V = P.vertices | Q.vertices
    lhs = face_set(complex_from_complement(complement_join(P, Q), V))
    rhs = faces_avoiding(P.members, V) | faces_avoiding(Q.members, V)
    assert lhs == rhs


@given(complements(), st.data())
def test_restrict_gives_full_subcomplex(P, data):
    I = data.draw(st.sets(st.sampled_from(sorted(P.vertices))))
    lhs = complex_from_complement(restrict(P, I), I)
    assert lhs == full_subcomplex(complex_from_complement(P, P.vertices), I)


@given(complements(max_vertices=5), st.data())
def test_congruence(P, data):
    V = sorted(P.vertices)
    K = complex_from_complement(P, V)
    # any other complement of the same complex: add random non-faces
    nonfaces = [s for s in powerset(V) if not K.is_face(s)]
    extra = data.draw(st.lists(st.sampled_from(nonfaces), max_size=4)) if nonfaces else []
    P2 = Complement(list(missing_faces(K).members) + extra, V)
    assert equivalent(P, P2)
    sigma = data.draw(st.sets(st.sampled_from(V)))
    assert equivalent(complement_minus(P, sigma), complement_minus(P2, sigma))
    Q = Complement(data.draw(st.lists(st.sets(st.sampled_from(V)), max_size=3)), V)
    assert equivalent(complement_join(P, Q), complement_join(P2, Q))


@given(complements(max_vertices=5), complements(max_vertices=5))
def test_equivalence_is_recovery_equality(P, Q):
    Q = Q.on(P.vertices | Q.vertices)
    P = P.on(Q.vertices)
    same = face_set(complex_from_complement(P, P.vertices)) == face_set(complex_from_complement(Q, Q.vertices))
    assert equivalent(P, Q) == same
