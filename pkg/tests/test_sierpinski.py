import pytest

from sierdim.graph_core import (
    GraphError,
    build_graph,
    complete_graph,
    cycle_graph,
    path_graph,
)
from sierdim.random_graphs import corpus
from sierdim.sierpinski import (
    blocks_isometric,
    build_sierpinski,
    format_word,
    index_of,
    linking_edges,
    prefix_block,
    sierpinski_reference,
    word_of,
)

C4 = cycle_graph(4)


def test_level_one_is_base():
    g = build_sierpinski(C4, 1)
    assert g == C4
    assert g.labels == ("0", "1", "2", "3")


def test_level_two_counts():
    g = build_sierpinski(C4, 2)
    assert (g.n, g.m) == (16, 20)


def test_single_vertex_base():
    for r in (1, 2, 4):
        g = build_sierpinski(build_graph(1, []), r)
        assert (g.n, g.m) == (1, 0)


def test_level_zero_rejected():
    with pytest.raises(GraphError):
        build_sierpinski(C4, 0)


def test_words():
    assert index_of("20", 4) == 8
    assert format_word(word_of(0, 4, 3), 4) == "000"
    for r in (1, 2, 3):
        for x in range(4 ** r):
            w = word_of(x, 4, r)
            assert len(w) == r
            assert index_of(w, 4) == x
            assert index_of(format_word(w, 4), 4) == x


def test_word_errors():
    with pytest.raises(GraphError):
        word_of(16, 4, 2)
    with pytest.raises(GraphError):
        index_of("4", 4)


def test_wide_alphabet_words():
    w = word_of(11 * 12 + 3, 12, 2)
    assert w == (11, 3)
    assert format_word(w, 12) == "11.3"
    assert index_of("11.3", 12) == 11 * 12 + 3


BASES = [C4, complete_graph(3), path_graph(3), cycle_graph(5), complete_graph(4)] + \
    [g for g in corpus(seed=7, count=6, n_min=3, n_max=5)]


@pytest.mark.parametrize("base", BASES)
def test_recursive_matches_definition(base):
    for r in (1, 2, 3):
        assert build_sierpinski(base, r) == sierpinski_reference(base, r)


@pytest.mark.parametrize("base", BASES)
def test_level_one_identity(base):
    assert build_sierpinski(base, 1) == base


@pytest.mark.parametrize("base", BASES)
def test_single_linking_edge(base):
    n = base.n
    for r in (2, 3, 4):
        if n ** r > 700:
            continue
        g = build_sierpinski(base, r)
        for i in range(n):
            for j in range(i + 1, n):
                links = linking_edges(g, i, j)
                if base.has_edge(i, j):
                    expected = (index_of((i,) + (j,) * (r - 1), n),
                                index_of((j,) + (i,) * (r - 1), n))
                    assert links == [tuple(sorted(expected))]
                else:
                    assert links == []


def test_c4_counts():
    for r in range(1, 6):
        g = build_sierpinski(C4, r)
        assert g.n == 4 ** r
        assert g.m == 4 * (4 ** r - 1) // 3


def test_prefix_block_level_two():
    g = build_sierpinski(C4, 2)
    block, suffix = prefix_block(g, 0)
    assert sorted(suffix.values()) == ["0", "1", "2", "3"]
    assert [g.label(v) for v in suffix] == ["00", "01", "02", "03"]
    assert block == C4


@pytest.mark.parametrize("r", [2, 3, 4])
def test_prefix_blocks_are_lower_levels(r):
    g = build_sierpinski(C4, r)
    lower = build_sierpinski(C4, r - 1)
    for i in range(4):
        block, suffix = prefix_block(g, i)
        assert block.n == 4 ** (r - 1)
        assert block == lower
        assert block.labels == lower.labels
        assert all(g.label(v)[1:] == s for v, s in suffix.items())


@pytest.mark.parametrize("r", [2, 3, 4])
def test_c4_blocks_isometric(r):
    g = build_sierpinski(C4, r)
    lower = build_sierpinski(C4, r - 1).distances.raw
    size = 4 ** (r - 1)
    for i in range(4):
        inner = g.distances.raw[i * size:(i + 1) * size, i * size:(i + 1) * size]
        assert (inner == lower).all()
    assert blocks_isometric(g)


def test_prefix_block_needs_level_two():
    with pytest.raises(GraphError):
        prefix_block(build_sierpinski(C4, 1), 0)
