"""Pure-Python kernels; same contracts as the compiled ``_ckernels`` module.

Gaussian integers are passed as (re, im) int pairs to keep the loops free
of object construction.
"""

from math import isqrt


def is_square(p, q):
    """True iff p + q*i is a square in Z[i]."""
    n = p * p + q * q
    m = isqrt(n)
    if m * m != n or (m + p) & 1:
        return False
    a2 = (m + p) >> 1
    b2 = (m - p) >> 1
    a = isqrt(a2)
    b = isqrt(b2)
    return a * a == a2 and b * b == b2


def square_class_hits(a_re, a_im, b_re, b_im, d_re, d_im, v_re, v_im, height):
    """Numerators n with |re n|, |im n| <= height and v*(n^3 + A n d^2 + B d^3) square.

    ``v`` is the unit with ``d = v * e^2``; for ``gcd(n, d) = 1`` the test is
    equivalent to ``n/d`` being the x-coordinate of a point on the curve.
    """
    d2_re = d_re * d_re - d_im * d_im
    d2_im = 2 * d_re * d_im
    d3_re = d2_re * d_re - d2_im * d_im
    d3_im = d2_re * d_im + d2_im * d_re
    # A*d^2 and B*d^3
    ad_re = a_re * d2_re - a_im * d2_im
    ad_im = a_re * d2_im + a_im * d2_re
    bd_re = b_re * d3_re - b_im * d3_im
    bd_im = b_re * d3_im + b_im * d3_re
    hits = []
    rng = range(-height, height + 1)
    for nr in rng:
        for ni in rng:
            n2_re = nr * nr - ni * ni
            n2_im = 2 * nr * ni
            m_re = n2_re * nr - n2_im * ni + ad_re * nr - ad_im * ni + bd_re
            m_im = n2_re * ni + n2_im * nr + ad_re * ni + ad_im * nr + bd_im
            p = v_re * m_re - v_im * m_im
            q = v_re * m_im + v_im * m_re
            if is_square(p, q):
                hits.append((nr, ni))
    return hits


def _pow4(re, im):
    s_re = re * re - im * im
    s_im = 2 * re * im
    return s_re * s_re - s_im * s_im, 2 * s_re * s_im


def quartic_box_solutions(eps, c_re, c_im, bound):
    """All (x, y, z) with xyz != 0, parts in [-bound, bound], x^4 + eps*y^4 = c*z^2.

    Returned as flat 6-tuples (x_re, x_im, y_re, y_im, z_re, z_im), in
    lexicographic loop order.
    """
    rng = range(-bound, bound + 1)
    box = [(r, i) for r in rng for i in rng if r or i]
    cz2 = {}
    for zr, zi in box:
        s_re = zr * zr - zi * zi
        s_im = 2 * zr * zi
        key = (c_re * s_re - c_im * s_im, c_re * s_im + c_im * s_re)
        cz2.setdefault(key, []).append((zr, zi))
    fourth = {g: _pow4(*g) for g in box}
    out = []
    for x in box:
        x4 = fourth[x]
        for y in box:
            y4 = fourth[y]
            key = (x4[0] + eps * y4[0], x4[1] + eps * y4[1])
            for z in cz2.get(key, ()):
                out.append((x[0], x[1], y[0], y[1], z[0], z[1]))
    return out
