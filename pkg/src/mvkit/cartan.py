"""Symmetrizable generalized Cartan matrices: validation, symmetrizers, forms, classification.

Indices are 0-based inside the library.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional

from . import linalg
from .errors import BadOrientation, BadSymmetrizer, MissingOrientation, NotGCM, NotSymmetrizable

PRESETS = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "A4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -1, 2, -1), (0, 0, -1, 2)),
    "B2": ((2, -1), (-2, 2)),
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C2": ((2, -2), (-1, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


@dataclass(frozen=True)
class QuiverData:
    g: dict
    f: dict
    loops: tuple


@dataclass(frozen=True)
class CartanPair:
    C: tuple
    D: tuple
    orientation: Optional[frozenset] = None

    @property
    def n(self):
        return len(self.C)

    def c(self, i, j):
        return self.C[i][j]

    def transpose(self):
        """The pair (C^T, D') with D' the minimal symmetrizer of C^T."""
        Ct = linalg.transpose(self.C)
        return CartanPair(Ct, minimal_symmetrizer(Ct))

    def has_g2(self):
        n = self.n
        return any(self.C[i][j] * self.C[j][i] == 3 for i in range(n) for j in range(n) if i != j)

    def quiver_data(self):
        n = self.n
        g, f = {}, {}
        for i in range(n):
            for j in range(n):
                if i != j and self.C[i][j] != 0:
                    g[i, j] = abs(gcd(self.C[i][j], self.C[j][i]))
                    f[i, j] = abs(self.C[i][j]) // g[i, j]
        return QuiverData(g, f, tuple(self.D))


def _as_matrix(matrix):
    try:
        M = tuple(tuple(int(v) if float(v) == int(v) else None for v in row) for row in matrix)
    except (TypeError, ValueError):
        raise NotGCM("matrix entries must be integers")
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise NotGCM("matrix must be square and nonempty")
    if any(v is None for row in M for v in row):
        raise NotGCM("matrix entries must be integers")
    return M


def check_gcm(M):
    n = len(M)
    for i in range(n):
        if M[i][i] != 2:
            raise NotGCM(f"diagonal entry ({i},{i}) is {M[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if M[i][j] > 0:
                raise NotGCM(f"off-diagonal entry ({i},{j}) is positive")
            if (M[i][j] == 0) != (M[j][i] == 0):
                raise NotGCM(f"zero pattern not symmetric at ({i},{j})")


def components(C):
    """Connected components of the Dynkin graph, each a sorted tuple of vertices."""
    n = len(C)
    seen, out = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and C[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        out.append(tuple(sorted(comp)))
    return out


def minimal_symmetrizer(C):
    """Least positive integer D with DC symmetric, computed per component.

    Ratios c_j / c_i = c_ij / c_ji are propagated along edges, then each component
    is cleared of denominators and divided by its gcd.
    """
    C = _as_matrix(C)
    check_gcm(C)
    n = len(C)
    d = [None] * n
    for comp in components(C):
        root = comp[0]
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or C[i][j] == 0:
                    continue
                want = d[i] * Fraction(C[i][j], C[j][i])
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise NotSymmetrizable("cycle ratios are inconsistent")
        m = reduce(lcm, (d[i].denominator for i in comp), 1)
        vals = [int(d[i] * m) for i in comp]
        g = reduce(gcd, vals)
        for i, v in zip(comp, vals):
            d[i] = v // g
    return tuple(d)


def _check_orientation(C, orientation):
    n = len(C)
    om = frozenset((int(i), int(j)) for i, j in orientation)
    for i, j in om:
        if not (0 <= i < n and 0 <= j < n) or i == j or C[i][j] >= 0:
            raise BadOrientation(f"pair ({i},{j}) is not an edge")
    # acyclic: repeatedly remove sinks
    nodes = set(range(n))
    edges = set(om)
    while nodes:
        sinks = [v for v in nodes if not any(a == v for a, b in edges)]
        if not sinks:
            raise BadOrientation("orientation has a cycle")
        for v in sinks:
            nodes.discard(v)
            edges = {(a, b) for a, b in edges if b != v}
    return om


def validate_gcm(matrix, symmetrizer=None, orientation=None):
    C = _as_matrix(matrix)
    check_gcm(C)
    if symmetrizer is None:
        D = minimal_symmetrizer(C)
    else:
        D = tuple(int(v) for v in symmetrizer)
        n = len(C)
        if len(D) != n or any(v <= 0 for v in D):
            raise BadSymmetrizer("symmetrizer must have n positive entries")
        for i in range(n):
            for j in range(n):
                if D[i] * C[i][j] != D[j] * C[j][i]:
                    raise BadSymmetrizer(f"DC not symmetric at ({i},{j})")
    om = None if orientation is None else _check_orientation(C, orientation)
    return CartanPair(C, D, om)


def preset(name, symmetrizer=None):
    if name not in PRESETS:
        raise KeyError(name)
    return validate_gcm(PRESETS[name], symmetrizer)


def symmetrized(pair):
    """The symmetric matrix DC."""
    return tuple(tuple(pair.D[i] * pair.C[i][j] for j in range(pair.n)) for i in range(pair.n))


def quadratic_form(pair, x):
    n = pair.n
    s = sum(pair.D[i] * x[i] * x[i] for i in range(n))
    s += sum(pair.D[i] * pair.C[i][j] * x[i] * x[j] for i in range(n) for j in range(i + 1, n))
    return linalg.checked(s)


def euler_form(pair, a, b):
    # sum over (j, i) in the orientation of c_i c_ij a_i b_j
    if pair.orientation is None:
        raise MissingOrientation("euler_form needs an orientation")
    s = sum(pair.D[i] * a[i] * b[i] for i in range(pair.n))
    s += sum(pair.D[i] * pair.C[i][j] * a[i] * b[j] for j, i in pair.orientation)
    return linalg.checked(s)


def symmetric_form(pair, a, b):
    """(a, b)_C = sum c_i c_ij a_i b_j; equals euler(a,b)+euler(b,a) for any orientation."""
    n = pair.n
    return linalg.checked(sum(pair.D[i] * pair.C[i][j] * a[i] * b[j] for i in range(n) for j in range(n)))


def root_to_weight(pair, r):
    return linalg.matvec(pair.C, r)


def _submatrix(M, idx):
    return tuple(tuple(M[i][j] for j in idx) for i in idx)


def _definiteness(S):
    # leading principal minors of a symmetric matrix; returns 'pos', 'semi' or 'other'
    n = len(S)
    minors = [linalg.det(_submatrix(S, range(k))) for k in range(1, n + 1)]
    if all(m > 0 for m in minors):
        return "pos"
    # connected indecomposable: semidefinite singular iff all proper principal minors > 0 and det = 0
    proper = all(linalg.det(_submatrix(S, [v for v in range(n) if v != k])) > 0 for k in range(n)) if n > 1 else True
    if minors[-1] == 0 and proper:
        return "semi"
    return "other"


def _dynkin_label(C, comp):
    n = len(comp)
    loc = {v: k for k, v in enumerate(comp)}
    edges = {}
    for a in comp:
        for b in comp:
            if a < b and C[a][b] != 0:
                edges[loc[a], loc[b]] = C[a][b] * C[b][a]
    prods = sorted(edges.values())
    deg = [sum(1 for e in edges if k in e) for k in range(n)]
    if n == 1:
        return "A1"
    if 3 in prods:
        return "G2"
    if 2 in prods:
        if n == 2:
            return "B2"
        if deg.count(1) == 2 and max(deg) == 2:
            (a, b), = [e for e, p in edges.items() if p == 2]
            ends = [k for k in range(n) if deg[k] == 1]
            if a in ends or b in ends:
                end, mid = (a, b) if a in ends else (b, a)
                # end node whose row carries the -2 entry: B type in the preset convention
                return f"B{n}" if C[comp[end]][comp[mid]] == -2 else f"C{n}"
            return "F4"
        return "?"
    if max(deg) <= 2:
        return f"A{n}"
    centre = deg.index(3)
    arms = []
    for start in [k for e in edges for k in e if centre in e and k != centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = [k for e in edges for k in e if cur in e and k != cur and k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms), "?")


@dataclass(frozen=True)
class Classification:
    components: tuple  # (vertices, kind, label or None)
    finite: bool
    max_edge_product: int
    has_g2: bool


def classify(pair):
    S = symmetrized(pair)
    comps = []
    for comp in components(pair.C):
        kind = _definiteness(_submatrix(S, comp))
        kind = {"pos": "finite", "semi": "euclidean", "other": "other"}[kind]
        label = _dynkin_label(pair.C, comp) if kind == "finite" else None
        comps.append((comp, kind, label))
    n = pair.n
    prods = [pair.C[i][j] * pair.C[j][i] for i in range(n) for j in range(n) if i != j]
    mx = max(prods, default=0)
    return Classification(tuple(comps), all(k == "finite" for _, k, _ in comps), mx, mx == 3)


def is_finite(pair):
    return classify(pair).finite


def cartan_inverse(pair):
    return linalg.frac_inverse(pair.C)
