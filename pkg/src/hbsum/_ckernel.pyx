# cython: language_level=3
"""Compiled residue-sum kernel; same contract as ``hbsum._pykernel``."""

cdef long long _LIMIT = 1LL << 62


cdef inline bint _zero_at_integers(int kind, int n):
    return (kind == 1 and n == 1) or (kind == 3 and n == 0)


def periodic_column(int kind, int n, tuple coeffs, object D, object N0, object step, Py_ssize_t count):
    cdef Py_ssize_t i
    cdef int k
    cdef long long cD, cN, cstep, fl, r, h
    cdef long long[32] cc
    cdef long long[32] dp
    cdef bint zero_int = _zero_at_integers(kind, n)
    cdef bint signed = kind >= 2
    cdef list out = []
    fast = (
        n < 32
        and abs(N0) + abs(step) * count < _LIMIT
        and sum(abs(c) for c in coeffs) * D ** n < _LIMIT
    )
    if fast:
        cD = D
        cN = N0
        cstep = step
        dp[0] = 1
        for k in range(n + 1):
            cc[k] = coeffs[k]
            if k:
                dp[k] = dp[k - 1] * cD
        for i in range(count):
            fl = cN // cD
            r = cN - fl * cD
            cN += cstep
            if r == 0 and zero_int:
                out.append(0)
                continue
            h = cc[n]
            for k in range(n - 1, -1, -1):
                h = h * r + cc[k] * dp[n - k]
            if signed and (fl & 1):
                h = -h
            out.append(h)
        return out

    dpows = [D ** k for k in range(n + 1)]
    N = N0
    for i in range(count):
        fl_o, r_o = divmod(N, D)
        N += step
        if r_o == 0 and zero_int:
            out.append(0)
            continue
        h_o = coeffs[n]
        for k in range(n - 1, -1, -1):
            h_o = h_o * r_o + coeffs[k] * dpows[n - k]
        if signed and (fl_o & 1):
            h_o = -h_o
        out.append(h_o)
    return out


def weighted_dot(list u, list v, bint alternating, int parity):
    cdef Py_ssize_t i, m = len(u)
    total = 0
    if not alternating:
        for i in range(m):
            total += u[i] * v[i]
        return total
    for i in range(m):
        if (i + parity) & 1:
            total -= u[i] * v[i]
        else:
            total += u[i] * v[i]
    return total


def dot_matrix(list U, list V, bint alternating, int parity):
    cdef Py_ssize_t i, j, m
    cdef list out = [], row_out, row, col
    if not U:
        return out
    m = len(U[0])
    if alternating:
        U = [[(-a if (i + parity) & 1 else a) for i, a in enumerate(row)] for row in U]
    for row in U:
        row_out = []
        for col in V:
            total = 0
            for i in range(m):
                total += row[i] * col[i]
            row_out.append(total)
        out.append(row_out)
    return out
