"""Generalized Sierpinski graphs ``S_G^r`` over an arbitrary base graph.

A vertex of ``S_G^r`` is a word ``x_r ... x_1`` over ``V(G) = {0..n-1}``;
its dense index is the base-``n`` value of the word with ``x_r`` most
significant.  Two words are adjacent when, for some position ``t``, they
agree above ``t``, differ at ``t`` by an edge of ``G``, and below ``t`` each
word repeats the other word's digit at ``t``.
"""

from __future__ import annotations

from itertools import combinations

from .graph_core import Graph, GraphError, build_graph

Word = tuple[int, ...]


def word_of(index: int, n: int, r: int) -> Word:
    """Digits ``(x_r, ..., x_1)`` of ``index`` in base ``n``."""
    if n < 1 or r < 1:
        raise GraphError("need n >= 1 and r >= 1")
    if not 0 <= index < n ** r:
        raise GraphError(f"index {index} out of range for n={n}, r={r}")
    digits = []
    for _ in range(r):
        index, d = divmod(index, n)
        digits.append(d)
    return tuple(reversed(digits))


def index_of(word: Word | str, n: int) -> int:
    digits = parse_word(word, n) if isinstance(word, str) else tuple(word)
    if not digits:
        raise GraphError("empty word")
    idx = 0
    for d in digits:
        if not 0 <= d < n:
            raise GraphError(f"digit {d} out of range for n={n}")
        idx = idx * n + d
    return idx


def format_word(word: Word, n: int) -> str:
    """Concatenated digits when ``n <= 10``, dot separated otherwise."""
    if n <= 10:
        return "".join(map(str, word))
    return ".".join(map(str, word))


def parse_word(text: str, n: int) -> Word:
    parts = text.split(".") if n > 10 else list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise GraphError(f"malformed word {text!r}") from None


def build_sierpinski(base: Graph, r: int) -> Graph:
    """Build ``S_base^r``.

    Level ``r`` is ``n`` prefixed copies of level ``r - 1`` plus, for every
    base edge ``ij``, the single linking edge ``i j..j -- j i..i``.
    """
    if r < 1:
        raise GraphError("Sierpinski level must be >= 1")
    n = base.n
    edges = list(base.edges)
    size = n
    for _ in range(r - 1):
        # ``size`` = n^(level-1) before this step
        nxt = []
        for i in range(n):
            off = i * size
            nxt.extend((u + off, v + off) for u, v in edges)
        rep = (size - 1) // (n - 1) if n > 1 else 0  # index of word 11..1 at level-1
        for i, j in base.edges:
            nxt.append((i * size + j * rep, j * size + i * rep))
        edges = nxt
        size *= n
    labels = [format_word(word_of(x, n, r), n) for x in range(size)]
    return build_graph(size, edges, labels)


def sierpinski_reference(base: Graph, r: int) -> Graph:
    """Quadratic construction that tests the three adjacency conditions on
    every pair of words.  Only meant for small ``n`` and ``r``."""
    if r < 1:
        raise GraphError("Sierpinski level must be >= 1")
    n = base.n
    words = [word_of(x, n, r) for x in range(n ** r)]
    edges = []
    for a, b in combinations(range(len(words)), 2):
        if _adjacent_by_definition(words[a], words[b], base):
            edges.append((a, b))
    return build_graph(len(words), edges, [format_word(w, n) for w in words])


def _adjacent_by_definition(x: Word, y: Word, base: Graph) -> bool:
    r = len(x)
    # position t counts from the right, 1-based; python index is r - t
    for t in range(1, r + 1):
        p = r - t
        if x[:p] != y[:p]:
            continue
        xt, yt = x[p], y[p]
        if xt == yt or not base.has_edge(xt, yt):
            continue
        if all(x[q] == yt and y[q] == xt for q in range(p + 1, r)):
            return True
    return False


def sierpinski_shape(g: Graph) -> tuple[int, int]:
    """Recover ``(n, r)`` from a graph produced by ``build_sierpinski``."""
    if g.labels is None:
        raise GraphError("graph carries no Sierpinski word labels")
    first = g.labels[0]
    r = len(first.split(".")) if "." in first else len(first)
    n = round(g.n ** (1.0 / r))
    for cand in (n - 1, n, n + 1):
        if cand >= 1 and cand ** r == g.n:
            return cand, r
    raise GraphError("labels are not Sierpinski words")


def prefix_block(g: Graph, i: int) -> tuple[Graph, dict[int, str]]:
    """Induced subgraph on the words starting with ``i``.

    Vertices of the returned graph are numbered like ``S_G^{r-1}``: block
    vertex ``j`` is the word ``i`` followed by ``word_of(j, n, r-1)``.  The
    second return value maps each vertex of ``g`` in the block to its suffix
    word (the leading digit dropped).
    """
    n, r = sierpinski_shape(g)
    if r < 2:
        raise GraphError("prefix blocks need level r >= 2")
    if not 0 <= i < n:
        raise GraphError(f"base vertex {i} out of range")
    size = n ** (r - 1)
    members = list(range(i * size, (i + 1) * size))
    sub, _ = g.induced_subgraph(members)
    suffix = {v: format_word(word_of(v - i * size, n, r - 1), n) for v in members}
    relabeled = build_graph(sub.n, sub.edges, [suffix[v] for v in members])
    return relabeled, suffix


def linking_edges(g: Graph, i: int, j: int) -> list[tuple[int, int]]:
    """Edges of ``S_G^r`` with one end in block ``i`` and the other in ``j``."""
    n, r = sierpinski_shape(g)
    size = n ** (r - 1)
    return [(u, v) for u, v in g.edges
            if {u // size, v // size} == {i, j} and i != j]


def blocks_isometric(g: Graph) -> bool:
    """True when every prefix block of ``g`` keeps the distances of
    ``S_G^{r-1}``, i.e. distances inside a block never shortcut through
    other blocks."""
    n, r = sierpinski_shape(g)
    if r < 2:
        raise GraphError("prefix blocks need level r >= 2")
    size = n ** (r - 1)
    whole = g.distances.raw
    for i in range(n):
        block, _ = prefix_block(g, i)
        inner = whole[i * size:(i + 1) * size, i * size:(i + 1) * size]
        if not (inner == block.distances.raw).all():
            return False
    return True
