"""The crystal B(-infinity) realised on Lusztig data.

Elements are data transported to a fixed reference word (the lexicographically least reduced word
of w0).  On a word starting with i, phi_i is the first entry; e_i adds one to it, f_i removes one.
The * involution reverses the word, twists letters by the Nakayama permutation and reverses the
entries.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import linalg
from .cartan import CartanPair
from .errors import G2Unsupported, NonTermination, PhiNonzero, SizeGuard
from .gmatrix import nakayama_involution
from .layers import betas
from .lusztig import LusztigDatum, make_datum, move_graph, transition
from .weyl import positive_roots, size_guard, weyl_group


@dataclass(frozen=True)
class CrystalElement:
    pair: CartanPair
    a: tuple  # entries on the reference word

    def __repr__(self):
        return f"CrystalElement{self.a}"


class Crystal:
    def __init__(self, pair):
        if pair.has_g2():
            raise G2Unsupported("crystal operators are not available for G2 content")
        self.pair = pair
        G = weyl_group(pair)
        self.ref = G.word(G.longest)
        assert self.ref == move_graph(pair).root
        self.nu = nakayama_involution(pair)
        self.iword = [(i,) + G.word(G.s_times(i, G.longest)) for i in range(pair.n)]
        self.betas = betas(pair, self.ref)
        self.zero = CrystalElement(pair, (0,) * len(self.ref))
        self._on = {}

    def element(self, datum):
        return CrystalElement(self.pair, transition(datum, self.ref).a)

    def datum(self, b):
        return LusztigDatum(self.pair, self.ref, b.a)

    def on(self, b, word):
        key = (b.a, word)
        if key not in self._on:
            self._on[key] = transition(self.datum(b), word).a
        return self._on[key]

    def wt(self, b):
        wt = (0,) * self.pair.n
        for x, be in zip(b.a, self.betas):
            wt = linalg.add(wt, linalg.scale(x, be))
        return wt

    def pairing(self, b, i):
        """<wt b, alpha_i> = (C wt)_i."""
        return linalg.dot(self.pair.C[i], self.wt(b))

    def phi(self, b, i):
        return self.on(b, self.iword[i])[0]

    def eps(self, b, i):
        return self.phi(b, i) - self.pairing(b, i)

    def _shift_first(self, b, i, delta):
        w = self.iword[i]
        a = self.on(b, w)
        x = a[0] + delta
        if x < 0:
            return None
        return self.element(LusztigDatum(self.pair, w, (x,) + a[1:]))

    def e(self, b, i):
        return self._shift_first(b, i, 1)

    def f(self, b, i):
        return self._shift_first(b, i, -1)

    def f_max(self, b, i):
        return self._shift_first(b, i, -self.phi(b, i))

    def star(self, b):
        word = tuple(self.nu[i] for i in reversed(self.ref))
        return self.element(LusztigDatum(self.pair, word, tuple(reversed(b.a))))

    def phi_star(self, b, i):
        return self.phi(self.star(b), i)

    def eps_star(self, b, i):
        return self.eps(self.star(b), i)

    def e_star(self, b, i):
        return self.star(self.e(self.star(b), i))

    def f_star(self, b, i):
        x = self.f(self.star(b), i)
        return None if x is None else self.star(x)

    def f_star_max(self, b, i):
        return self.star(self.f_max(self.star(b), i))

    def saito(self, b, i):
        """Word shift: (0, a_2..a_l) on (i, i_2..i_l) becomes (a_2..a_l, 0) on (i_2..i_l, nu(i))."""
        w = self.iword[i]
        a = self.on(b, w)
        if a[0] != 0:
            raise PhiNonzero(f"phi_{i} = {a[0]} is not zero")
        return self.element(LusztigDatum(self.pair, w[1:] + (self.nu[i],), a[1:] + (0,)))

    def saito_operators(self, b, i):
        """S_i(b) = e_i^{eps*_i(b)} f*_i^max(b), for phi_i(b) = 0."""
        if self.phi(b, i) != 0:
            raise PhiNonzero(f"phi_{i} is not zero")
        k = self.eps_star(b, i)
        x = self.f_star_max(b, i)
        for _ in range(k):
            x = self.e(x, i)
        return x

    def saito_star(self, b, i):
        return self.star(self.saito(self.star(b), i))

    def pbw_unwind(self, b, word):
        word = tuple(word)
        out = []
        for k, i in enumerate(word):
            out.append(self.phi(b, i))
            b = self.saito(self.f_max(b, i), i)
        if b != self.zero:
            raise NonTermination(f"unwinding along {word} did not reach the lowest element")
        return tuple(out)

    def height(self, b):
        return sum(self.wt(b))

    def elements_up_to(self, height):
        """All elements whose weight has coordinate sum at most height."""
        hs = [sum(be) for be in self.betas]
        out = []

        def rec(k, left, acc):
            if k == len(hs):
                out.append(CrystalElement(self.pair, tuple(acc)))
                if len(out) > size_guard():
                    raise SizeGuard("crystal enumeration exceeds size guard")
                return
            for x in range(left // hs[k] + 1):
                acc.append(x)
                rec(k + 1, left - x * hs[k], acc)
                acc.pop()

        rec(0, height, [])
        return sorted(out, key=lambda b: (self.height(b), b.a))


@lru_cache(maxsize=64)
def _crystal(pair):
    return Crystal(pair)


def crystal(pair):
    return _crystal(CartanPair(pair.C, pair.D))


# functional interface -------------------------------------------------------

def element(datum):
    return crystal(datum.pair).element(datum)


def from_data(pair, word, a):
    return element(make_datum(pair, word, a))


def zero(pair):
    return crystal(pair).zero


def wt(b):
    return crystal(b.pair).wt(b)


def phi(b, i):
    return crystal(b.pair).phi(b, i)


def eps(b, i):
    return crystal(b.pair).eps(b, i)


def phi_star(b, i):
    return crystal(b.pair).phi_star(b, i)


def eps_star(b, i):
    return crystal(b.pair).eps_star(b, i)


def e(b, i):
    return crystal(b.pair).e(b, i)


def f(b, i):
    return crystal(b.pair).f(b, i)


def f_max(b, i):
    return crystal(b.pair).f_max(b, i)


def e_star(b, i):
    return crystal(b.pair).e_star(b, i)


def f_star(b, i):
    return crystal(b.pair).f_star(b, i)


def star(b):
    return crystal(b.pair).star(b)


def saito(b, i):
    return crystal(b.pair).saito(b, i)


def saito_operators(b, i):
    return crystal(b.pair).saito_operators(b, i)


def saito_star(b, i):
    return crystal(b.pair).saito_star(b, i)


def pbw_unwind(b, word):
    return crystal(b.pair).pbw_unwind(b, word)


def height(b):
    return crystal(b.pair).height(b)


def datum_on(b, word):
    return transition(crystal(b.pair).datum(b), tuple(word))


# enumeration ----------------------------------------------------------------

@dataclass
class CrystalGraph:
    pair: CartanPair
    nodes: list
    arrows: list  # (source index, i, target index) for b -> e_i b

    def to_json(self):
        X = crystal(self.pair)
        return {
            "word": [i + 1 for i in X.ref],
            "nodes": [{"a": list(b.a), "wt": list(X.wt(b))} for b in self.nodes],
            "arrows": [{"from": s, "to": t, "i": i + 1} for s, i, t in self.arrows],
        }

    def to_dot(self):
        X = crystal(self.pair)
        ids = [".".join(str(x) for x in b.a) for b in self.nodes]
        lines = ["digraph crystal {"]
        for k, b in enumerate(self.nodes):
            lines.append(f'  "{ids[k]}" [label="{ids[k]}\\nwt {" ".join(map(str, X.wt(b)))}"];')
        for s, i, t in self.arrows:
            lines.append(f'  "{ids[s]}" -> "{ids[t]}" [label="{i + 1}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def enumerate_crystal(pair, height):
    X = crystal(pair)
    nodes = X.elements_up_to(height)
    idx = {b: k for k, b in enumerate(nodes)}
    arrows = []
    for k, b in enumerate(nodes):
        for i in range(pair.n):
            t = X.e(b, i)
            if t in idx:
                arrows.append((k, i, idx[t]))
    return CrystalGraph(pair, nodes, arrows)


def kostant_count(pair, nu):
    """Number of ways to write nu as a nonnegative combination of positive roots of C^T."""
    roots = positive_roots(pair)
    nu = tuple(nu)
    if any(x < 0 for x in nu):
        return 0
    ways = {(0,) * len(nu): 1}
    for r in roots:
        new = dict(ways)
        # unbounded multiplicity of r, processed in increasing order of the target
        for target in sorted(product(*(range(x + 1) for x in nu)), key=sum):
            prev = tuple(t - q for t, q in zip(target, r))
            if all(x >= 0 for x in prev) and prev in new:
                new[target] = new.get(target, 0) + new[prev] if target in new else new[prev]
        ways = new
    return ways.get(nu, 0)


# verification ---------------------------------------------------------------

@dataclass
class TWReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def verify_tingley_webster(pair, height, ops=None, max_witnesses=20):
    """Crystal axioms (cr1)-(cr5) for both structures and the six Tingley-Webster conditions,
    on every element whose weight has coordinate sum at most height.  ops may replace the
    operator implementation (used for fault injection)."""
    X = ops if ops is not None else crystal(pair)
    rep = TWReport()
    n = pair.n

    def bad(kind, b, i, detail=""):
        if len(rep.violations) < max_witnesses:
            rep.violations.append((kind, b.a, i, detail))
        else:
            rep.violations.append(None)

    zero_el = X.zero
    if any(x != 0 for x in X.wt(zero_el)):
        bad("lowest weight", zero_el, None)
    for b in X.elements_up_to(height):
        rep.checked += 1
        w = X.wt(b)
        for i in range(n):
            ai = linalg.dot(pair.C[i], w)
            p, ps = X.phi(b, i), X.phi_star(b, i)
            for tag, E, F, PHI, EPS in (("", X.e, X.f, X.phi, X.eps), ("*", X.e_star, X.f_star, X.phi_star, X.eps_star)):
                ph, ep = PHI(b, i), EPS(b, i)
                if ph != ep + ai:
                    bad("cr1" + tag, b, i)
                eb = E(b, i)
                if eb is None:
                    bad("e nonempty" + tag, b, i)
                    continue
                alpha = tuple(int(k == i) for k in range(n))
                if PHI(eb, i) != ph + 1 or EPS(eb, i) != ep - 1 or X.wt(eb) != linalg.add(w, alpha):
                    bad("cr2" + tag, b, i)
                if F(eb, i) != b:
                    bad("cr3" + tag, b, i, "f(e b) != b")
                fb = F(b, i)
                if fb is not None and E(fb, i) != b:
                    bad("cr3" + tag, b, i, "e(f b) != b")
                # cr5: phi = number of f steps before the empty element
                m, x = 0, b
                while True:
                    x = F(x, i)
                    if x is None:
                        break
                    m += 1
                    if m > ph + 1:
                        break
                if m != ph:
                    bad("cr5" + tag, b, i, f"{m} f-steps, phi {ph}")
            s = p + ps - ai
            if s < 0:
                bad("TW3", b, i, f"phi+phi*-<wt,alpha>={s}")
            ei, esi = X.e(b, i), X.e_star(b, i)
            if s == 0 and ei != esi:
                bad("TW4", b, i)
            if s >= 1 and (X.phi(esi, i) != p or X.phi_star(ei, i) != ps):
                bad("TW5", b, i)
            if s >= 2 and X.e_star(ei, i) != X.e(esi, i):
                bad("TW6", b, i)
            for j in range(n):
                if j != i and X.e_star(X.e(b, j), i) != X.e(X.e_star(b, i), j):
                    bad("TW2", b, (i, j))
        # cr4: f-steps reach the lowest element, for both structures
        for F, PHI in ((X.f, X.phi), (X.f_star, X.phi_star)):
            x, steps = b, 0
            while x != zero_el:
                i = next((k for k in range(n) if PHI(x, k) > 0), None)
                if i is None or steps > 10 * (height + 1):
                    bad("cr4", b, None)
                    break
                x = F(x, i)
                steps += 1
                if x is None:
                    bad("cr4", b, i, "f returned the empty element while phi > 0")
                    break
    return rep
