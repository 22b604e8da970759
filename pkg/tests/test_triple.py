import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permstats.perm import Permutation, identity
from permstats.statistics import cyclic_stats, linear_stats
from permstats.triple import (
    DropBiword, Word, WordList, ascent_blocks, drop_biword, initial_words,
    phi_triple, phi_triple_image, phi_triple_inverse, render_trace,
    trace_violations,
)
from permstats.verify import enumerate_sn

perms = st.integers(1, 9).flatmap(
    lambda n: st.permutations(range(1, n + 1))).map(Permutation)

EXAMPLE = Permutation([4, 5, 3, 1, 6, 2])


def words(wl):
    return [list(w) for w in wl]


def test_initial_words_examples():
    assert words(initial_words(EXAMPLE)) == [[0, 4, 6], [1, 5], [2, 3]]
    assert words(initial_words(identity(5))) == [[0, 1, 2, 3, 4, 5]]
    assert words(initial_words(Permutation([2, 3, 1]))) == [[1, 3], [0, 2]]


def test_drop_biword_examples():
    assert drop_biword(EXAMPLE) == DropBiword((6, 4), (2, 1))
    assert len(drop_biword(identity(4))) == 0
    assert drop_biword(Permutation([2, 3, 1])) == DropBiword((3,), (1,))
    assert str(drop_biword(EXAMPLE)) == "(6 4 / 2 1)"


def test_phi_triple_examples():
    image, trace = phi_triple(EXAMPLE)
    assert image == (4, 6, 2, 3, 1, 5)
    assert [(list(s.pick), s.rank, list(s.host)) for s in trace.iterations] == [
        ([2, 3], 1, [0, 4, 6]),
        ([1, 5], 1, [0, 4, 6, 2, 3]),
    ]
    image, trace = phi_triple(identity(4))
    assert image == identity(4) and trace.iterations == ()
    image, trace = phi_triple(Permutation([2, 3, 1]))
    assert image == (2, 1, 3)
    assert [s.junction for s in trace.iterations] == [(2, 1)]


def test_phi_triple_inverse_examples():
    assert phi_triple_inverse(Permutation([4, 6, 2, 3, 1, 5])) == EXAMPLE
    assert phi_triple_inverse(identity(6)) == identity(6)
    assert phi_triple_inverse(Permutation([2, 1, 3])) == (2, 3, 1)


def test_ascent_blocks():
    assert ascent_blocks((0, 4, 6, 2, 3, 1, 5)) == [[0, 4, 6], [2, 3], [1, 5]]


def test_word_types_validate():
    assert Word([0, 4, 6]).first == 0 and Word([0, 4, 6]).last == 6
    with pytest.raises(ValueError):
        Word([])
    with pytest.raises(ValueError):
        Word([1, 1])
    with pytest.raises(ValueError):
        WordList([[0, 2], [1, 3]])  # last letters must decrease
    with pytest.raises(ValueError):
        WordList([[0, 3], [3]])
    with pytest.raises(ValueError):
        DropBiword((4, 6), (1, 2))
    with pytest.raises(ValueError):
        DropBiword((3,), (3,))


def test_render_trace_lines():
    text = render_trace(EXAMPLE).splitlines()
    assert text[0] == "words: [0,4,6] [1,5] [2,3]"
    assert text[1] == "biword: (6 4 / 2 1)"
    assert text[2] == "pick=2,3 Y=1 host=0,4,6 junction=6>2"
    assert text[3] == "pick=1,5 Y=1 host=0,4,6,2,3 junction=3>1"
    assert text[-1] == "result: 4,6,2,3,1,5"


@given(perms)
def test_roundtrips(p):
    assert phi_triple_inverse(phi_triple_image(p)) == p
    assert phi_triple_image(phi_triple_inverse(p)) == p


@given(perms)
def test_statistic_transport(p):
    image = phi_triple_image(p)
    lin, cyc = linear_stats(image), cyclic_stats(p)
    assert lin.asc2_values == cyc.exc_hat_values
    assert lin.des_values == cyc.aexc_values
    assert lin.suc_values == cyc.fix_hat_values


@given(perms)
def test_trace_lemmas(p):
    image, trace = phi_triple(p)
    assert image == phi_triple_image(p)
    assert trace_violations(p, image, trace) == []


def test_trace_violations_detects_tampering():
    image, trace = phi_triple(EXAMPLE)
    assert trace_violations(EXAMPLE, Permutation([1, 2, 3, 4, 5, 6]), trace)


@pytest.mark.parametrize("n", range(1, 8))
def test_bijective_exhaustive(n):
    images = {phi_triple_image(p) for p in enumerate_sn(n)}
    assert len(images) == math.factorial(n)
