"""Lusztig data (HN multiplicities along reduced words of w0) and their piecewise-linear transition maps."""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .cartan import CartanPair
from .errors import BadWindow, CapExceeded, G2Unsupported, NegativeMultiplicity, NonnegViolation, NotReduced, NotReducedTarget
from .layers import betas
from .weyl import all_reduced_words, weyl_group

COMMUTATION = "commutation"
BRAID3 = "braid3"
BRAID4_TP2 = "braid4-TP2"
BRAID4_TP3 = "braid4-TP3"
WIDTH = {COMMUTATION: 2, BRAID3: 3, BRAID4_TP2: 4, BRAID4_TP3: 4}

DEFAULT_WORD_CAP = 100000


def tp1(a):
    a1, a2, a3 = a
    p = min(a1, a3)
    return (a2 + a3 - p, p, a1 + a2 - p)


def tp2(a):
    a1, a2, a3, a4 = a
    p1 = min(a1 + a2, a1 + a4, a3 + a4)
    p2 = min(a1 + 2 * a2, a1 + 2 * a4, a3 + 2 * a4)
    return (a2 + a3 + a4 - p1, 2 * p1 - p2, p2 - p1, a1 + 2 * a2 + a3 - p2)


def tp3(a):
    a1, a2, a3, a4 = a
    p1 = min(a1 + a2, a1 + a4, a3 + a4)
    p2 = min(2 * a1 + a2, 2 * a1 + a4, 2 * a3 + a4)
    return (a2 + 2 * a3 + a4 - p2, p2 - p1, 2 * p1 - p2, a1 + a2 + a3 - p1)


def _gate(pair):
    if pair.has_g2():
        raise G2Unsupported("tropical moves are not available for G2 content")


@dataclass(frozen=True)
class LusztigDatum:
    pair: CartanPair
    word: tuple
    a: tuple

    def to_json(self):
        return {"word": [i + 1 for i in self.word], "a": list(self.a)}

    def weight(self):
        return weight(self)


def make_datum(pair, word, a):
    _gate(pair)
    word, a = tuple(int(i) for i in word), tuple(int(x) for x in a)
    G = weyl_group(pair)
    if len(word) != G.length(G.longest) or G.from_word(word) != G.longest:
        raise NotReduced(f"{word} is not a reduced word of the longest element")
    if len(a) != len(word):
        raise ValueError("multiplicity vector has wrong length")
    if any(x < 0 for x in a):
        raise NegativeMultiplicity("Lusztig data are nonnegative")
    return LusztigDatum(pair, word, a)


def weight(datum):
    n = datum.pair.n
    wt = (0,) * n
    for x, b in zip(datum.a, betas(datum.pair, datum.word)):
        wt = linalg.add(wt, linalg.scale(x, b))
    return wt


def window_kind(pair, word, pos):
    """Kind of the braid or commutation move starting at pos, or None if there is none."""
    if pos < 0 or pos + 1 >= len(word):
        return None
    x, y = word[pos], word[pos + 1]
    if x == y:
        return None
    m = pair.C[x][y] * pair.C[y][x]
    if m == 0:
        return COMMUTATION
    if m == 3:
        raise G2Unsupported("G2 hexagon moves are not supported")
    if m == 1 and tuple(word[pos:pos + 3]) == (x, y, x):
        return BRAID3
    if m == 2 and tuple(word[pos:pos + 4]) == (x, y, x, y):
        # the window starting with the letter whose row carries -2 transforms by TP2
        return BRAID4_TP2 if pair.C[x][y] == -2 else BRAID4_TP3
    return None


def moves(pair, word):
    out = []
    for p in range(len(word) - 1):
        k = window_kind(pair, word, p)
        if k is not None:
            out.append((p, k))
    return out


def _move_word(word, pos, kind):
    w = WIDTH[kind]
    x, y = word[pos], word[pos + 1]
    new = tuple(y if t % 2 == 0 else x for t in range(w))
    return word[:pos] + new + word[pos + w:]


def _move_entries(a, pos, kind):
    w = WIDTH[kind]
    seg = a[pos:pos + w]
    if kind == COMMUTATION:
        new = (seg[1], seg[0])
    elif kind == BRAID3:
        new = tp1(seg)
    elif kind == BRAID4_TP2:
        new = tp2(seg)
    else:
        new = tp3(seg)
    new = tuple(linalg.checked(x) for x in new)
    if any(x < 0 for x in new):
        raise NonnegViolation(f"move {kind} at {pos} produced {new} from {seg}")
    return a[:pos] + new + a[pos + w:]


def apply_move(datum, pos, kind=None):
    _gate(datum.pair)
    actual = window_kind(datum.pair, datum.word, pos)
    if actual is None or (kind is not None and kind != actual):
        raise BadWindow(f"no {kind or 'move'} window at position {pos} of {datum.word}")
    return LusztigDatum(datum.pair, _move_word(datum.word, pos, actual), _move_entries(datum.a, pos, actual))


@dataclass(frozen=True)
class MoveGraph:
    pair: CartanPair
    words: tuple
    edges: tuple  # (word index, pos, kind, target index)
    parent: dict  # word -> (parent word, pos) in the BFS tree rooted at words[0]

    @property
    def root(self):
        return self.words[0]

    def path_from_root(self, word):
        path = []
        while word != self.root:
            pw, pos = self.parent[word]
            path.append(pos)
            word = pw
        return path[::-1]


@lru_cache(maxsize=64)
def _move_graph(pair, cap):
    _gate(pair)
    G = weyl_group(pair)
    words = tuple(all_reduced_words(G.longest, cap))
    index = {w: k for k, w in enumerate(words)}
    edges = []
    for k, w in enumerate(words):
        for p, kind in moves(pair, w):
            edges.append((k, p, kind, index[_move_word(w, p, kind)]))
    root = words[0]
    parent = {root: None}
    q = deque([root])
    while q:
        w = q.popleft()
        for p, kind in moves(pair, w):
            u = _move_word(w, p, kind)
            if u not in parent:
                parent[u] = (w, p)
                q.append(u)
    if len(parent) != len(words):
        raise RuntimeError("move graph is not connected")
    return MoveGraph(pair, words, tuple(edges), parent)


def move_graph(pair, cap=DEFAULT_WORD_CAP):
    return _move_graph(CartanPair(pair.C, pair.D), cap)


def apply_path(datum, positions):
    for p in positions:
        datum = apply_move(datum, p)
    return datum


def transition(datum, target_word, cap=DEFAULT_WORD_CAP):
    """Transport a datum to another reduced word of w0 through the BFS tree of the move graph."""
    target_word = tuple(target_word)
    if target_word == datum.word:
        return datum
    mg = move_graph(datum.pair, cap)
    if target_word not in mg.parent:
        raise NotReducedTarget(f"{target_word} is not a reduced word of the longest element")
    # moves are involutions, so the path back to the root replays the tree positions in reverse
    d = apply_path(datum, mg.path_from_root(datum.word)[::-1])
    return apply_path(d, mg.path_from_root(target_word))


def transition_trace(datum, target_word, cap=DEFAULT_WORD_CAP):
    mg = move_graph(datum.pair, cap)
    if tuple(target_word) not in mg.parent:
        raise NotReducedTarget(f"{tuple(target_word)} is not a reduced word of the longest element")
    path = mg.path_from_root(datum.word)[::-1] + mg.path_from_root(tuple(target_word))
    trace, d = [], datum
    for p in path:
        trace.append({"pos": p + 1, "kind": window_kind(d.pair, d.word, p)})
        d = apply_move(d, p)
    return d, trace
