"""g-matrices and c-matrices of support tau-tilting pairs, chambers, Nakayama permutation,
and the weak-order mutation lattice.

The g-matrix of the pair attached to w is the weight matrix of w; its columns span the chamber of w.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import OnWall
from .weyl import descents_right, positive_roots, weyl_group


def g_matrix(w):
    weyl_group(w.pair)  # finite type check
    return w.weight_matrix


def c_matrix(w):
    return linalg.transpose(linalg.int_inverse(w.weight_matrix))


def c_columns_are_roots(w):
    """Each column of c(w) is, up to sign, a root of the transposed pair."""
    pt = w.pair.transpose()
    roots = set(positive_roots(pt))
    c = c_matrix(w)
    for i in range(w.pair.n):
        col = linalg.column(c, i)
        if col not in roots and tuple(-x for x in col) not in roots:
            return False
    return True


def chamber_of(pair, theta):
    """The unique w whose g-matrix columns span an open cone containing theta (exact rationals)."""
    theta = tuple(Fraction(t) for t in theta)
    G = weyl_group(pair)
    for w in G.elements():
        a = linalg.solve(w.weight_matrix, theta)
        if any(x == 0 for x in a):
            raise OnWall(f"theta lies on a wall (coordinate zero in chamber {G.word(w)})")
        if all(x > 0 for x in a):
            return w
    raise OnWall("no chamber found")


def nakayama_involution(pair):
    """nu with w0 varpi_i = -varpi_nu(i)."""
    w0 = weyl_group(pair).longest.weight_matrix
    n = pair.n
    nu = []
    for i in range(n):
        col = linalg.column(w0, i)
        j = [k for k in range(n) if col[k] != 0]
        assert len(j) == 1 and col[j[0]] == -1
        nu.append(j[0])
    return tuple(nu)


@dataclass(frozen=True)
class SttiltLattice:
    words: tuple  # canonical words, node k
    gmats: tuple
    lengths: tuple
    edges: tuple  # (from, to, i)

    def to_json(self):
        return {
            "nodes": [{"word": [i + 1 for i in w], "g": [list(r) for r in g]} for w, g in zip(self.words, self.gmats)],
            "edges": [{"from": a, "to": b, "i": i + 1} for a, b, i in self.edges],
        }

    def to_dot(self):
        ids = [".".join(str(i + 1) for i in w) or "e" for w in self.words]
        lines = ["digraph sttilt {"]
        for k, g in enumerate(self.gmats):
            lab = "\\n".join(" ".join(str(v) for v in row) for row in g)
            lines.append(f'  "{ids[k]}" [label="{lab}"];')
        for a, b, i in self.edges:
            lines.append(f'  "{ids[a]}" -> "{ids[b]}" [label="{i + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def sttilt_hasse(pair):
    G = weyl_group(pair)
    els = sorted(G.elements(), key=lambda w: (G.length(w), G.word(w)))
    idx = {w.weight_matrix: k for k, w in enumerate(els)}
    edges = []
    for k, w in enumerate(els):
        for i in range(pair.n):
            u = G.times_s(w, i)
            if G.length(u) == G.length(w) + 1:
                edges.append((k, idx[u.weight_matrix], i))
    return SttiltLattice(
        tuple(G.word(w) for w in els),
        tuple(w.weight_matrix for w in els),
        tuple(G.length(w) for w in els),
        tuple(sorted(edges)),
    )


def out_degree_ok(lat, pair):
    G = weyl_group(pair)
    for k, w in enumerate(lat.words):
        deg = sum(1 for a, _, _ in lat.edges if a == k)
        if deg != pair.n - len(descents_right(G.from_word(w))):
            return False
    return True
