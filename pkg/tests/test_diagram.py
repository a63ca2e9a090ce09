import pytest
from hypothesis import given, strategies as st

from forbidden_detour.diagram import (
    DuplicateRoleError,
    Endpoint,
    GaussCodeSyntaxError,
    GaussDiagram,
    InvalidDiagramError,
    LabelCountError,
    Role,
    SignMismatchError,
    all_diagrams,
    canonical_key,
    from_key,
    key_to_code,
    parse_gauss_code,
    random_diagram,
    serialize,
)

from conftest import TREFOIL, diagrams

T, H = Role.TAIL, Role.HEAD


def test_parse_empty():
    d = parse_gauss_code("")
    assert d.is_empty() and d.n_chords == 0
    assert parse_gauss_code("  \n ") == d


def test_parse_trefoil():
    d = parse_gauss_code(TREFOIL)
    assert d.endpoints == (Endpoint(1, T), Endpoint(2, T), Endpoint(1, H), Endpoint(2, H))
    assert d.signs == {1: 1, 2: 1}
    assert serialize(d) == TREFOIL


def test_parse_whitespace_and_labels():
    d = parse_gauss_code(" O10- U7+\tO7+  U10- ")
    assert serialize(d) == "O10-U7+O7+U10-"
    assert d.signs == {10: -1, 7: 1}


@pytest.mark.parametrize("code, exc", [
    ("O1+U1-", SignMismatchError),
    ("O1+X1+", GaussCodeSyntaxError),
    ("O1U1", GaussCodeSyntaxError),
    ("O0+U0+", GaussCodeSyntaxError),
    ("O1+U1+O2+", LabelCountError),
    ("O1+U1+U1+", LabelCountError),
    ("O1+O1+", DuplicateRoleError),
    ("U3-U3-", DuplicateRoleError),
])
def test_parse_errors(code, exc):
    with pytest.raises(exc):
        parse_gauss_code(code)


def test_error_classes_are_distinct():
    classes = {SignMismatchError, GaussCodeSyntaxError, LabelCountError, DuplicateRoleError}
    assert len(classes) == 4
    for a in classes:
        for b in classes - {a}:
            assert not issubclass(a, b)


def test_invalid_direct_construction():
    with pytest.raises(InvalidDiagramError):
        GaussDiagram((Endpoint(1, T),), {1: 1})
    with pytest.raises(InvalidDiagramError):
        GaussDiagram((Endpoint(1, T), Endpoint(1, H)), {1: 1, 2: 1})
    with pytest.raises(InvalidDiagramError):
        GaussDiagram((Endpoint(1, T), Endpoint(1, H)), {1: 2})


@given(diagrams())
def test_roundtrip(d):
    assert parse_gauss_code(serialize(d)) == d


def test_diagrams_hashable():
    d = parse_gauss_code(TREFOIL)
    assert hash(d) == hash(parse_gauss_code(TREFOIL))
    assert len({d, parse_gauss_code(TREFOIL), GaussDiagram()}) == 2


def test_canonical_key_examples():
    assert canonical_key(GaussDiagram()) == ()
    assert canonical_key(parse_gauss_code(TREFOIL)) == canonical_key(parse_gauss_code("O2+U1+U2+O1+"))
    assert canonical_key(parse_gauss_code("O1+U1+")) != canonical_key(parse_gauss_code("O1-U1-"))


@given(diagrams(), st.integers(0, 40), st.randoms())
def test_canonical_key_rotation_relabel(d, k, rnd):
    labels = d.chords
    perm = labels[:]
    rnd.shuffle(perm)
    other = d.rotate(k).relabel({a: b + 100 for a, b in zip(labels, perm)})
    assert canonical_key(other) == canonical_key(d)


@given(diagrams(max_chords=5))
def test_canonical_key_represents_diagram(d):
    # the key decodes to a rotation of d up to relabeling
    e = from_key(canonical_key(d))
    assert canonical_key(e) == canonical_key(d)
    assert sorted(e.signs.values()) == sorted(d.signs.values())


def _brute_equivalent(d, e):
    if len(d) != len(e) or d.n_chords != e.n_chords:
        return False
    for k in range(max(len(d), 1)):
        r = d.rotate(k)
        mapping = {}
        ok = True
        for (c1, r1), (c2, r2) in zip(r.endpoints, e.endpoints):
            if r1 is not r2 or r.signs[c1] != e.signs[c2] or mapping.setdefault(c1, c2) != c2:
                ok = False
                break
        if ok and len(set(mapping.values())) == len(mapping):
            return True
    return False


def test_canonical_key_matches_brute_force_equivalence():
    pool = [random_diagram(c, s) for c in range(4) for s in range(25)]
    for d in pool:
        for e in pool:
            assert (canonical_key(d) == canonical_key(e)) == _brute_equivalent(d, e)


def test_random_diagram_contract():
    assert random_diagram(0, 123).is_empty()
    d = random_diagram(5, 42)
    assert len(d) == 10 and d.chords == [1, 2, 3, 4, 5]
    assert random_diagram(5, 42) == d
    assert random_diagram(5, 43) != d


def test_random_diagram_valid_many():
    for seed in range(1000):
        c = seed % 51
        d = random_diagram(c, seed)
        assert d.n_chords == c
        assert parse_gauss_code(serialize(d)) == d


def test_random_diagram_covers_small_classes():
    seen = {canonical_key(random_diagram(1, s)) for s in range(200)}
    assert len(seen) == 2


def test_all_diagrams_counts():
    # 2 orientations x 2 signs, one rotation class each
    assert [key_to_code(canonical_key(d)) for d in all_diagrams(1)] == ["O1-U1-", "O1+U1+"]
    assert len(all_diagrams(0)) == 1
    keys = [canonical_key(d) for d in all_diagrams(2)]
    assert len(keys) == len(set(keys))
