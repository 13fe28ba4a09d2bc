"""MV polytopes from Lusztig data: vertex maps, BZ data, axioms, the * involution and faces.

Vertices mu_w are rank vectors, i.e. points of the root lattice of C^T.  Chamber weights are
therefore taken in the dual datum: the chamber weight w varpi_i acts on rank vectors by row i of
r(w^{-1}) (equivalently column i of the g-matrix of C^T, or (1/c_i) <w varpi_i, dim> with C's
g-matrix against dimension vectors).  A_gamma = max over vertices of <gamma, mu>.
"""
from dataclasses import dataclass, field
from functools import lru_cache

from . import linalg
from .cartan import CartanPair
from .errors import G2Unsupported
from .layers import betas
from .lusztig import LusztigDatum, transition
from .weyl import weyl_group


def _gate(pair):
    if pair.has_g2():
        raise G2Unsupported("MV polytopes are not available for G2 content")


class _Frame:
    """Per-pair tables: elements in order, extending words, dual chamber weights, ascents."""

    def __init__(self, pair):
        G = weyl_group(pair)
        self.G = G
        n = pair.n
        L0 = G.length(G.longest)
        self.elements = sorted(G.elements(), key=lambda w: (G.length(w), G.word(w)))
        self.key = {w.weight_matrix: G.word(w) for w in self.elements}
        self.ext = {}
        self.cw = {}
        for w in self.elements:
            word, u = list(G.word(w)), w
            while len(word) < L0:
                for i in range(n):
                    v = G.times_s(u, i)
                    if G.length(v) > G.length(u):
                        word.append(i)
                        u = v
                        break
            self.ext[G.word(w)] = tuple(word)
            rinv = linalg.int_inverse(w.rank_matrix)
            for i in range(n):
                self.cw[G.word(w), i] = tuple(rinv[i])
        self.w0 = G.word(G.longest)

    def times(self, word, *letters):
        u = self.G.from_word(word)
        for t in letters:
            u = self.G.times_s(u, t)
        return self.G.word(u)


@lru_cache(maxsize=64)
def _frame(pair):
    return _Frame(pair)


def frame(pair):
    return _frame(CartanPair(pair.C, pair.D))


def chamber_weight(pair, w_word, i):
    """The functional w varpi_i on rank vectors (w given by its canonical word)."""
    return frame(pair).cw[tuple(w_word), i]


@dataclass
class MVPolytope:
    pair: CartanPair
    vertices: dict  # canonical word of w -> mu_w
    weight: tuple
    bz: dict = field(default_factory=dict)  # (canonical word of w, i) -> A_{-w varpi_i}

    def to_json(self):
        F = frame(self.pair)
        verts = [{"word": [i + 1 for i in F.key[w.weight_matrix]], "mu": list(self.vertices[F.key[w.weight_matrix]])} for w in F.elements]
        bz = [{"w": [t + 1 for t in wk], "i": i + 1, "A": a} for (wk, i), a in sorted(self.bz.items(), key=lambda kv: (len(kv[0][0]), kv[0]))]
        return {"weight": list(self.weight), "vertices": verts, "bz": bz}


def _max_pair(vertices, gamma):
    return max(linalg.dot(gamma, mu) for mu in vertices.values())


def _bz_table(pair, vertices):
    F = frame(pair)
    return {k: _max_pair(vertices, tuple(-x for x in v)) for k, v in F.cw.items()}


def vertex_from_word(datum, word_of_w0, k):
    """mu of the length-k prefix of word_of_w0, after transporting the datum there."""
    d = transition(datum, word_of_w0)
    mu = (0,) * datum.pair.n
    for x, b in zip(d.a[:k], betas(datum.pair, d.word)[:k]):
        mu = linalg.add(mu, linalg.scale(x, b))
    return mu


def build_polytope(datum: LusztigDatum):
    pair = datum.pair
    _gate(pair)
    F = frame(pair)
    vertices = {}
    cache = {}
    for w in F.elements:
        key = F.key[w.weight_matrix]
        ext = F.ext[key]
        if ext not in cache:
            cache[ext] = transition(datum, ext)
        d = cache[ext]
        mu = (0,) * pair.n
        for x, b in zip(d.a[:len(key)], betas(pair, ext)[:len(key)]):
            mu = linalg.add(mu, linalg.scale(x, b))
        vertices[key] = mu
    weight = vertices[F.w0]
    return MVPolytope(pair, vertices, weight, _bz_table(pair, vertices))


def support(P, theta):
    """max over vertices of <theta, mu>."""
    return _max_pair(P.vertices, tuple(theta))


def A(P, w_word, i, sign=-1):
    """A_{sign w varpi_i}."""
    v = chamber_weight(P.pair, w_word, i)
    return support(P, tuple(sign * x for x in v))


def face(P, theta):
    m = support(P, theta)
    return {mu for mu in P.vertices.values() if linalg.dot(theta, mu) == m}


def star_involution(P):
    F = frame(P.pair)
    G = F.G
    w0 = G.longest
    verts = {}
    for w in F.elements:
        ww0 = F.key[G.element(linalg.matmul(w.weight_matrix, w0.weight_matrix)).weight_matrix]
        verts[F.key[w.weight_matrix]] = linalg.sub(P.weight, P.vertices[ww0])
    return MVPolytope(P.pair, verts, P.weight, _bz_table(P.pair, verts))


@dataclass
class BZReport:
    bz1: bool = True
    bz2: bool = True
    bz3: bool = True
    witnesses: list = field(default_factory=list)

    @property
    def ok(self):
        return self.bz1 and self.bz2 and self.bz3


def _relations(Aw, i, j, case):
    # each entry: (left side, list of terms whose max is the right side)
    if case == "a":
        return [(Aw(i, i) + Aw(j, j), [Aw(i) + Aw(i, j, j), Aw(j, i, i) + Aw(j)])]
    if case == "b":
        return [
            (Aw(j, j) + Aw(i, j, j) + Aw(i, i),
             [2 * Aw(i, j, j) + Aw(i), 2 * Aw(j) + Aw(i, j, i, i), Aw(j) + Aw(j, i, j, j) + Aw(i, i)]),
            (Aw(j, i, i) + 2 * Aw(i, j, j) + Aw(i, i),
             [2 * Aw(j) + 2 * Aw(i, j, i, i), 2 * Aw(j, i, j, j) + 2 * Aw(i, i), Aw(i, j, i, i) + 2 * Aw(i, j, j) + Aw(i)]),
        ]
    return [
        (Aw(j, i, i) + Aw(i, i) + Aw(i, j, j),
         [2 * Aw(i, i) + Aw(j, i, j, j), 2 * Aw(i, j, i, i) + Aw(j), Aw(i, j, i, i) + Aw(i, j, j) + Aw(i)]),
        (Aw(j, j) + 2 * Aw(i, i) + Aw(i, j, j),
         [2 * Aw(i, j, i, i) + 2 * Aw(j), 2 * Aw(i) + 2 * Aw(i, j, j), Aw(j) + 2 * Aw(i, i) + Aw(j, i, j, j)]),
    ]


def verify_bz(P, bz=None):
    """Check BZ1, BZ2 (all w, i) and BZ3 (all w, i, j with w s_i, w s_j both longer than w).

    BZ3 is evaluated in max-plus form with case labels read from C^T, which is the root datum the
    vertices live in.  bz may override the stored table (for fault injection).
    """
    pair = P.pair
    _gate(pair)
    bz = P.bz if bz is None else bz
    F = frame(pair)
    G = F.G
    C = pair.C
    n = pair.n
    rep = BZReport()
    e = ()
    for i in range(n):
        if bz[e, i] != 0:
            rep.bz1 = False
            rep.witnesses.append(("BZ1", e, i, None))
    for w in F.elements:
        wk = F.key[w.weight_matrix]
        for i in range(n):
            c = bz[wk, i] + bz[F.times(wk, i), i] + sum(C[i][j] * bz[wk, j] for j in range(n) if j != i)
            if c < 0:
                rep.bz2 = False
                rep.witnesses.append(("BZ2", wk, i, None))
        L = G.length(w)
        asc = [G.length(G.times_s(w, i)) > L for i in range(n)]

        def Aw(*s, wk=wk):
            *letters, i = s
            return bz[F.times(wk, *letters), i]

        for i in range(n):
            for j in range(n):
                if i == j or C[i][j] == 0 or not (asc[i] and asc[j]):
                    continue
                ti, tj = C[j][i], C[i][j]  # entries of C^T at (i, j) and (j, i)
                if ti * tj == 3:
                    raise G2Unsupported("no tropical Pluecker relations for G2")
                case = "a" if ti == tj == -1 else ("b" if (ti, tj) == (-1, -2) else "c")
                for lhs, terms in _relations(Aw, i, j, case):
                    if lhs != max(terms):
                        rep.bz3 = False
                        rep.witnesses.append(("BZ3", wk, i, j))
    return rep
