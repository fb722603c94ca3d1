# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels``; int64 arithmetic throughout.

Callers must check magnitudes first (see ``kernels.py``); nothing here
detects overflow.
"""

from libc.math cimport sqrt

ctypedef long long i64


cdef inline i64 _isqrt(i64 n) nogil:
    cdef i64 r
    if n < 0:
        return -1
    r = <i64>sqrt(<double>n)
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


cdef inline bint _is_square(i64 p, i64 q) nogil:
    cdef i64 n = p * p + q * q
    cdef i64 m = _isqrt(n)
    cdef i64 a2, b2, a, b
    if m * m != n or ((m + p) & 1):
        return 0
    a2 = (m + p) >> 1
    b2 = (m - p) >> 1
    a = _isqrt(a2)
    b = _isqrt(b2)
    return a * a == a2 and b * b == b2


def is_square(i64 p, i64 q):
    return bool(_is_square(p, q))


def square_class_hits(i64 a_re, i64 a_im, i64 b_re, i64 b_im,
                      i64 d_re, i64 d_im, i64 v_re, i64 v_im, i64 height):
    cdef i64 d2_re = d_re * d_re - d_im * d_im
    cdef i64 d2_im = 2 * d_re * d_im
    cdef i64 d3_re = d2_re * d_re - d2_im * d_im
    cdef i64 d3_im = d2_re * d_im + d2_im * d_re
    cdef i64 ad_re = a_re * d2_re - a_im * d2_im
    cdef i64 ad_im = a_re * d2_im + a_im * d2_re
    cdef i64 bd_re = b_re * d3_re - b_im * d3_im
    cdef i64 bd_im = b_re * d3_im + b_im * d3_re
    cdef i64 nr, ni, n2_re, n2_im, m_re, m_im, p, q
    hits = []
    for nr in range(-height, height + 1):
        for ni in range(-height, height + 1):
            n2_re = nr * nr - ni * ni
            n2_im = 2 * nr * ni
            m_re = n2_re * nr - n2_im * ni + ad_re * nr - ad_im * ni + bd_re
            m_im = n2_re * ni + n2_im * nr + ad_re * ni + ad_im * nr + bd_im
            p = v_re * m_re - v_im * m_im
            q = v_re * m_im + v_im * m_re
            if _is_square(p, q):
                hits.append((nr, ni))
    return hits


def quartic_box_solutions(i64 eps, i64 c_re, i64 c_im, i64 bound):
    cdef i64 xr, xi, yr, yi, zr, zi
    cdef i64 s_re, s_im, x4_re, x4_im, y4_re, y4_im, l_re, l_im, r_re, r_im
    out = []
    for xr in range(-bound, bound + 1):
        for xi in range(-bound, bound + 1):
            if xr == 0 and xi == 0:
                continue
            s_re = xr * xr - xi * xi
            s_im = 2 * xr * xi
            x4_re = s_re * s_re - s_im * s_im
            x4_im = 2 * s_re * s_im
            for yr in range(-bound, bound + 1):
                for yi in range(-bound, bound + 1):
                    if yr == 0 and yi == 0:
                        continue
                    s_re = yr * yr - yi * yi
                    s_im = 2 * yr * yi
                    y4_re = s_re * s_re - s_im * s_im
                    y4_im = 2 * s_re * s_im
                    l_re = x4_re + eps * y4_re
                    l_im = x4_im + eps * y4_im
                    for zr in range(-bound, bound + 1):
                        for zi in range(-bound, bound + 1):
                            if zr == 0 and zi == 0:
                                continue
                            s_re = zr * zr - zi * zi
                            s_im = 2 * zr * zi
                            r_re = c_re * s_re - c_im * s_im
                            r_im = c_re * s_im + c_im * s_re
                            if l_re == r_re and l_im == r_im:
                                out.append((xr, xi, yr, yi, zr, zi))
    return out
