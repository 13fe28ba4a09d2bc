"""Rank vectors of layer modules, stable modules and V-modules, and HN bookkeeping.

Only rank and dimension vectors are modelled. A rank vector r has dimension vector (c_j r_j)_j.
"""
from dataclasses import dataclass

from . import linalg
from .errors import NegativeMultiplicity, NonIntegral, NotReduced
from .weyl import reflect_rank, weyl_group


@dataclass(frozen=True)
class LayerSequence:
    word: tuple
    betas: tuple
    dims: tuple

    def to_json(self):
        return {"word": [i + 1 for i in self.word], "betas": [list(b) for b in self.betas], "dims": [list(d) for d in self.dims]}


@dataclass(frozen=True)
class StableRank:
    w: tuple
    i: int
    sign: str
    rank: tuple


def is_reduced(pair, word):
    G = weyl_group(pair)
    return G.length(G.from_word(word)) == len(word)


def dims_of(pair, r):
    return tuple(linalg.checked(c * x) for c, x in zip(pair.D, r))


def betas(pair, word):
    # beta_k = r_{i_1} ... r_{i_{k-1}} (alpha_{i_k})
    n = pair.n
    out = []
    for k, i in enumerate(word):
        b = tuple(int(j == i) for j in range(n))
        for t in reversed(word[:k]):
            b = reflect_rank(pair.C, t, b)
        out.append(b)
    return tuple(out)


def beta_sequence(pair, word):
    word = tuple(word)
    if not is_reduced(pair, word):
        raise NotReduced(f"word {word} is not reduced")
    bs = betas(pair, word)
    return LayerSequence(word, bs, tuple(dims_of(pair, b) for b in bs))


def _to_rank(pair, weight):
    x = linalg.solve(pair.C, weight)
    if any(v.denominator != 1 for v in x):
        raise NonIntegral(f"weight {weight} is not in the root lattice image")
    return tuple(int(v) for v in x)


def stable_rank_vector(pair, w, i, sign="-"):
    """Rank of N(-w varpi_i) = C^{-1}(varpi_i - w varpi_i); sign '+' gives the projective cover value
    C^{-1}(varpi_i - w0 varpi_i), independent of w."""
    G = weyl_group(pair)
    if sign == "+":
        w = G.longest
    elif sign != "-":
        raise ValueError("sign must be '-' or '+'")
    wv = linalg.column(w.weight_matrix, i)
    e = tuple(int(k == i) for k in range(pair.n))
    return StableRank(G.word(w), i, sign, _to_rank(pair, linalg.sub(e, wv)))


def v_module_rank(pair, word, k):
    """Rank of V_{word,k} = N(-s_{i_1}...s_{i_k} varpi_{i_k}), k is 1-based."""
    word = tuple(word)
    if not is_reduced(pair, word):
        raise NotReduced(f"word {word} is not reduced")
    if k == 0:
        return (0,) * pair.n
    G = weyl_group(pair)
    return stable_rank_vector(pair, G.from_word(word[:k]), word[k - 1]).rank


def k_minus(word, k):
    """max({0} u {s < k : i_s = i_k}), positions 1-based."""
    return max([0] + [s for s in range(1, k) if word[s - 1] == word[k - 1]])


def hn_vertices(seq, a):
    if len(a) != len(seq.word):
        raise ValueError("multiplicity vector has wrong length")
    if any(x < 0 for x in a):
        raise NegativeMultiplicity("multiplicities must be nonnegative")
    n = len(seq.betas[0]) if seq.betas else 0
    mu = (0,) * n
    out = [mu]
    for x, b in zip(a, seq.betas):
        mu = linalg.add(mu, linalg.scale(x, b))
        out.append(mu)
    return out


def hn_weight(seq, a):
    return hn_vertices(seq, a)[-1]
