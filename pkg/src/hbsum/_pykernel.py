"""Pure-Python residue-sum kernel (reference implementation and fallback).

A periodic factor ``f_n(t)`` is evaluated at ``t = N / D`` for the
arithmetic progression ``N = N0 + i * step``.  Every value is returned as
the integer ``f_n(t) * L * D**n`` where ``L`` is the common denominator of
the polynomial coefficients, so sums reduce to integer arithmetic.
"""

BERNOULLI, BERNOULLI_BAR, EULER, EULER_BAR = 0, 1, 2, 3


def periodic_column(kind, n, coeffs, D, N0, step, count):
    dpows = [D**k for k in range(n + 1)]
    lead = coeffs[n]
    out = []
    zero_at_integers = (kind == BERNOULLI_BAR and n == 1) or (kind == EULER_BAR and n == 0)
    signed = kind >= EULER
    N = N0
    for _ in range(count):
        fl, r = divmod(N, D)
        N += step
        if r == 0 and zero_at_integers:
            out.append(0)
            continue
        h = lead
        for k in range(n - 1, -1, -1):
            h = h * r + coeffs[k] * dpows[n - k]
        if signed and fl & 1:
            h = -h
        out.append(h)
    return out


def weighted_dot(u, v, alternating, parity):
    if not alternating:
        return sum(a * b for a, b in zip(u, v))
    even = sum(a * b for a, b in zip(u[parity & 1 :: 2], v[parity & 1 :: 2]))
    odd = sum(a * b for a, b in zip(u[1 - (parity & 1) :: 2], v[1 - (parity & 1) :: 2]))
    return even - odd


def dot_matrix(U, V, alternating, parity):
    if alternating:
        signs = [1 if (i + parity) % 2 == 0 else -1 for i in range(len(U[0]) if U else 0)]
        U = [[s * a for s, a in zip(signs, row)] for row in U]
    return [[sum(a * b for a, b in zip(row, col)) for col in V] for row in U]
