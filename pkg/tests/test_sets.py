import itertools

import pytest
from hypothesis import given, strategies as st

from gbsclass.pauli import Gpm
from gbsclass.residue import ModulusMismatch
from gbsclass.sets import (
    GbsSet,
    apply_map,
    canonicalize,
    format_set,
    lex_compare,
    parse_set,
    power_vector,
    standardize_by,
)
from gbsclass.symplectic import canonicalizer_for, enumerate_maps, identity


def S(*pairs, d=6):
    return GbsSet.from_pairs(pairs, d)


def G(m, n, d=6):
    return Gpm(m, n, d)


def test_canonicalize_examples():
    assert canonicalize([G(2, 2), G(0, 0), G(0, 2), G(2, 0)]).pairs == [[0, 0], [0, 2], [2, 0], [2, 2]]
    assert canonicalize([G(0, 1), G(0, 1)]).pairs == [[0, 1]]
    assert canonicalize([G(1, 0), G(0, 1)]).pairs == [[0, 1], [1, 0]]


def test_canonicalize_errors():
    with pytest.raises(ValueError):
        canonicalize([])
    with pytest.raises(ModulusMismatch):
        canonicalize([G(0, 1), Gpm(0, 1, 5)])
    with pytest.raises(ValueError):
        GbsSet(6, (G(1, 0), G(0, 1)))


def test_standardize_examples():
    assert standardize_by(S((0, 0), (0, 1)), G(0, 1)) == S((0, 0), (0, 5))
    s = S((0, 0), (2, 3), (4, 1))
    assert standardize_by(s, G(0, 0)) == s
    assert standardize_by(S((1, 2), (3, 4)), G(1, 2)) == S((0, 0), (2, 2))
    with pytest.raises(ValueError):
        standardize_by(s, G(5, 5))


def test_apply_map_examples():
    s = S((0, 0), (2, 3))
    assert apply_map(s, identity(6)) == s
    assert apply_map(s, canonicalizer_for(G(2, 3))) == S((0, 0), (0, 1))


def test_apply_map_preserves_size_and_standard():
    s = S((0, 0), (0, 1), (2, 3), (3, 3), (5, 4))
    for w in enumerate_maps(6):
        image = apply_map(s, w)
        assert len(image) == len(s)
        assert image.is_standard()


def test_power_vector_examples():
    assert power_vector(S((1, 0), (3, 3), (0, 4), (2, 0))) == (1, 2, 2, 3)
    assert power_vector(S((12, 0), (0, 3), (3, 4), (5, 15), d=30)) == (1, 3, 5, 6)
    assert power_vector(S((4, 6), (6, 12), (2, 0), (3, 5), d=30)) == (1, 2, 2, 6)


def test_power_vector_invariant_under_maps():
    rng_sets = [S((0, 0), (0, 2), (3, 1), (4, 4)), S((0, 0), (1, 0), (2, 0), (3, 3), (0, 3))]
    for s in rng_sets:
        pv = power_vector(s)
        assert all(power_vector(apply_map(s, w)) == pv for w in enumerate_maps(6))


def test_power_vector_not_invariant_under_standardization():
    # 2-sets never break it: standardizing {I, g} by g gives {I, g^dagger}
    for g in itertools.product(range(6), repeat=2):
        if g == (0, 0):
            continue
        s = S((0, 0), g)
        assert power_vector(standardize_by(s, G(*g))) == power_vector(s)
    found = None
    for a, b in itertools.combinations(range(1, 36), 2):
        s = GbsSet.from_codes((0, a, b), 6)
        for pivot in s.members:
            if power_vector(standardize_by(s, pivot)) != power_vector(s):
                found = (s, pivot)
                break
        if found:
            break
    assert found is not None
    s, pivot = found
    assert (s, pivot) == (S((0, 0), (0, 1), (0, 2)), G(0, 1))
    assert power_vector(s) == (0, 1, 2)
    assert power_vector(standardize_by(s, pivot)) == (0, 1, 1)


def test_lex_compare():
    assert lex_compare(S((0, 0), (0, 1)), S((0, 0), (1, 0))) == -1
    assert S((0, 0), (0, 1)) < S((0, 0), (1, 0))
    a = S((0, 0), (3, 4))
    assert lex_compare(a, a) == 0
    assert S((0, 0), (0, 1), (0, 2)) < S((0, 0), (0, 1), (0, 3))
    with pytest.raises(ValueError):
        lex_compare(S((0, 0)), S((0, 0), (0, 1)))


@given(
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=3, max_size=3, unique=True),
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=3, max_size=3, unique=True),
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=3, max_size=3, unique=True),
)
def test_lex_compare_total_order(pa, pb, pc):
    a, b, c = S(*pa), S(*pb), S(*pc)
    assert lex_compare(a, b) == -lex_compare(b, a)
    assert (lex_compare(a, b) == 0) == (a == b)
    if lex_compare(a, b) <= 0 and lex_compare(b, c) <= 0:
        assert lex_compare(a, c) <= 0


def test_parse_and_format():
    s = parse_set("(0,0);(0,2); (2,0) ;(2,2)", 6)
    assert format_set(s) == "(0,0);(0,2);(2,0);(2,2)"
    shorthand = parse_set("(0,1);(3,2)", 6)
    assert not shorthand.is_standard()
    assert parse_set("(0,1);(3,2)", 6, implicit_identity=True) == S((0, 0), (0, 1), (3, 2))
    with pytest.raises(ValueError):
        parse_set("", 6)
    with pytest.raises(ValueError):
        parse_set("(0,1);(0,1)", 6)
