"""Weyl groups of finite type Cartan pairs.

An element is stored by two integer matrices:
  weight_matrix  action on weights in the fundamental weight basis,  s_i = I - (C e_i) e_i^T
  rank_matrix    action on rank vectors (roots of C^T),               r_i = I - e_i (e_i^T C)
They intertwine: weight_matrix . C = C . rank_matrix.
"""
import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .cartan import CartanPair, is_finite
from .errors import CapExceeded, IncompatiblePairs, NotFiniteType, SizeGuard

DEFAULT_SIZE_GUARD = 10**7


def size_guard():
    v = os.environ.get("MVKIT_SIZE_GUARD")
    return int(v) if v else DEFAULT_SIZE_GUARD


def weight_reflection(C, i):
    n = len(C)
    return tuple(tuple(int(r == c) - (C[r][i] if c == i else 0) for c in range(n)) for r in range(n))


def rank_reflection(C, i):
    n = len(C)
    return tuple(tuple(int(r == c) - (C[i][c] if r == i else 0) for c in range(n)) for r in range(n))


def reflect_rank(C, i, r):
    """r_i(r) = r - (C r)_i e_i."""
    k = sum(C[i][j] * r[j] for j in range(len(r)))
    return tuple(linalg.checked(x - k) if j == i else x for j, x in enumerate(r))


@dataclass(frozen=True)
class WeylElement:
    pair: CartanPair
    weight_matrix: tuple
    rank_matrix: tuple

    @property
    def canonical_word(self):
        return weyl_group(self.pair).word(self)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.pair.C == other.pair.C and self.weight_matrix == other.weight_matrix

    def __hash__(self):
        return hash((self.pair.C, self.weight_matrix))

    def __repr__(self):
        return f"WeylElement{tuple(i + 1 for i in self.canonical_word)}"


class WeylGroup:
    """Full closure of W under right multiplication by simple reflections (BFS, so depth = length)."""

    def __init__(self, pair):
        if not is_finite(pair):
            raise NotFiniteType("Weyl group enumeration needs a finite type Cartan matrix")
        self.pair = pair
        C = pair.C
        n = pair.n
        self.S = [weight_reflection(C, i) for i in range(n)]
        self.R = [rank_reflection(C, i) for i in range(n)]
        guard = size_guard()
        e = linalg.identity(n)
        self._rank = {e: e}
        self._len = {e: 0}
        order = [e]
        q = deque([e])
        while q:
            g = q.popleft()
            for i in range(n):
                h = linalg.matmul(g, self.S[i])
                if h not in self._len:
                    self._len[h] = self._len[g] + 1
                    self._rank[h] = linalg.matmul(self._rank[g], self.R[i])
                    order.append(h)
                    q.append(h)
                    if len(order) > guard:
                        raise SizeGuard(f"|W| exceeds size guard {guard}")
        self.order = order
        # lexicographically least reduced word via least left descent
        self._word = {e: ()}
        for g in order[1:]:
            L = self._len[g]
            for i in range(n):
                h = linalg.matmul(self.S[i], g)
                if self._len[h] < L:
                    self._word[g] = (i,) + self._word[h]
                    break
        self.identity = self.element(e)
        self.longest = self.element(max(order, key=lambda g: self._len[g]))

    def __len__(self):
        return len(self.order)

    def element(self, g):
        return WeylElement(self.pair, g, self._rank[g])

    def elements(self):
        return [self.element(g) for g in self.order]

    def length(self, w):
        return self._len[w.weight_matrix]

    def word(self, w):
        return self._word[w.weight_matrix]

    def from_word(self, word):
        g = linalg.identity(self.pair.n)
        for i in word:
            g = linalg.matmul(g, self.S[i])
        return self.element(g)

    def times_s(self, w, i):
        return self.element(linalg.matmul(w.weight_matrix, self.S[i]))

    def s_times(self, i, w):
        return self.element(linalg.matmul(self.S[i], w.weight_matrix))


@lru_cache(maxsize=64)
def _group(pair):
    return WeylGroup(pair)


def weyl_group(pair):
    return _group(CartanPair(pair.C, pair.D))


def _same(u, v):
    if u.pair.C != v.pair.C:
        raise IncompatiblePairs("elements belong to different Cartan matrices")


def simple_reflection(pair, i):
    return WeylElement(pair, weight_reflection(pair.C, i), rank_reflection(pair.C, i))


def identity(pair):
    e = linalg.identity(pair.n)
    return WeylElement(pair, e, e)


def from_word(pair, word):
    w = identity(pair)
    for i in word:
        w = multiply(w, simple_reflection(pair, i))
    return w


def multiply(u, v):
    _same(u, v)
    return WeylElement(u.pair, linalg.matmul(u.weight_matrix, v.weight_matrix), linalg.matmul(u.rank_matrix, v.rank_matrix))


def invert(w):
    return WeylElement(w.pair, linalg.int_inverse(w.weight_matrix), linalg.int_inverse(w.rank_matrix))


def equals(u, v):
    _same(u, v)
    return u.weight_matrix == v.weight_matrix


@lru_cache(maxsize=64)
def _positive_roots(C):
    n = len(C)
    roots = set()
    q = deque(tuple(int(k == i) for k in range(n)) for i in range(n))
    while q:
        r = q.popleft()
        if r in roots:
            continue
        roots.add(r)
        if len(roots) > size_guard():
            raise SizeGuard("root enumeration exceeds size guard")
        for i in range(n):
            s = reflect_rank(C, i, r)
            if s not in roots:
                q.append(s)
    return tuple(sorted((r for r in roots if all(x >= 0 for x in r)), key=lambda r: (sum(r), r)))


def positive_roots(pair):
    """Positive roots in rank coordinates: the orbit of simple roots under rank reflections (roots of C^T)."""
    if not is_finite(pair):
        raise NotFiniteType("root enumeration needs finite type")
    return list(_positive_roots(pair.C))


def length(w):
    """Inversion count: positive rank roots sent negative by w^{-1}."""
    if not is_finite(w.pair):
        raise NotFiniteType("length needs finite type")
    winv = linalg.int_inverse(w.rank_matrix)
    return sum(1 for b in _positive_roots(w.pair.C) if any(x < 0 for x in linalg.matvec(winv, b)))


def canonical_reduced_word(w):
    return weyl_group(w.pair).word(w)


def _left_descents(G, w):
    L = G.length(w)
    return [i for i in range(w.pair.n) if G.length(G.s_times(i, w)) < L]


def count_reduced_words(w):
    G = weyl_group(w.pair)
    memo = {}

    def cnt(x):
        k = x.weight_matrix
        if k not in memo:
            ds = _left_descents(G, x)
            memo[k] = 1 if not ds else sum(cnt(G.s_times(i, x)) for i in ds)
        return memo[k]

    return cnt(w)


def all_reduced_words(w, cap=100000):
    total = count_reduced_words(w)
    if total > cap:
        raise CapExceeded(f"{total} reduced words exceed cap {cap}")
    G = weyl_group(w.pair)
    memo = {}

    def rw(x):
        k = x.weight_matrix
        if k not in memo:
            ds = _left_descents(G, x)
            memo[k] = [()] if not ds else [(i,) + t for i in ds for t in rw(G.s_times(i, x))]
        return memo[k]

    return sorted(rw(w))


def longest_element(pair):
    return weyl_group(pair).longest


def parabolic_longest(pair, J):
    G = weyl_group(pair)
    J = sorted(set(J))
    best = G.identity
    seen = {best.weight_matrix}
    q = deque([best])
    while q:
        w = q.popleft()
        if G.length(w) > G.length(best):
            best = w
        for i in J:
            u = G.times_s(w, i)
            if u.weight_matrix not in seen:
                seen.add(u.weight_matrix)
                q.append(u)
    return best


def weak_order_leq(u, v):
    """Right weak order: u <= v iff l(u) + l(u^{-1} v) = l(v)."""
    _same(u, v)
    G = weyl_group(u.pair)
    x = G.element(linalg.matmul(linalg.int_inverse(u.weight_matrix), v.weight_matrix))
    return G.length(u) + G.length(x) == G.length(v)


def descents_right(w):
    G = weyl_group(w.pair)
    L = G.length(w)
    return {i for i in range(w.pair.n) if G.length(G.times_s(w, i)) < L}


@dataclass(frozen=True)
class ChamberWeight:
    w: tuple  # canonical word of a (shortest) element producing this vector
    i: int
    vector: tuple
    sign: int = 1


def chamber_weights(pair):
    G = weyl_group(pair)
    out = {}
    for w in G.elements():
        for i in range(pair.n):
            v = linalg.column(w.weight_matrix, i)
            if v not in out:
                out[v] = ChamberWeight(G.word(w), i, v, 1)
    return sorted(out.values(), key=lambda c: (len(c.w), c.w, c.i))
