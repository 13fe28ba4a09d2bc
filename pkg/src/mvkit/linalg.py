"""Small exact integer matrix helpers. Matrices are tuples of row tuples."""
from fractions import Fraction

from .errors import IntegerOverflow, NonIntegral

INT64_MAX = 2**63 - 1


def checked(x):
    # every integer that leaves an arithmetic kernel goes through here
    if x > INT64_MAX or x < -INT64_MAX - 1:
        raise IntegerOverflow(f"value {x} does not fit in 64 bits")
    return x


def identity(n):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def transpose(M):
    return tuple(zip(*M))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(checked(sum(a * b for a, b in zip(row, col))) for col in Bt) for row in A)


def matvec(A, x):
    return tuple(checked(sum(a * b for a, b in zip(row, x))) for row in A)


def vecmat(x, A):
    return matvec(transpose(A), x)


def dot(x, y):
    return checked(sum(a * b for a, b in zip(x, y)))


def add(x, y):
    return tuple(checked(a + b) for a, b in zip(x, y))


def sub(x, y):
    return tuple(checked(a - b) for a, b in zip(x, y))


def scale(k, x):
    return tuple(checked(k * a) for a in x)


def column(M, i):
    return tuple(row[i] for row in M)


def frac_inverse(M):
    """Inverse over the rationals by Gauss-Jordan elimination."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [v / piv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return tuple(tuple(row[n:]) for row in A)


def int_inverse(M):
    inv = frac_inverse(M)
    out = []
    for row in inv:
        if any(v.denominator != 1 for v in row):
            raise NonIntegral("matrix is not unimodular")
        out.append(tuple(int(v) for v in row))
    return tuple(out)


def solve(M, b):
    """Exact rational solution of M x = b."""
    inv = frac_inverse(M)
    return tuple(sum(Fraction(a) * Fraction(v) for a, v in zip(row, b)) for row in inv)


def det(M):
    n = len(M)
    A = [[Fraction(v) for v in row] for row in M]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return d
