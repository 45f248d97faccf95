from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from torus_invariants.curve_ring import CurveElement
from torus_invariants.exact_poly import UniPoly
from torus_invariants.gauss_knots import Arrow, GaussDiagram


def braid_closure(word, strands):
    """Gauss diagram of a closed braid, built independently of torus_diagram.

    Generator +i crosses positions i-1 and i with the strand moving right
    on top and sign +1; -i is its inverse.
    """
    passages = []
    pos = 0
    while True:
        for t, g in enumerate(word):
            i = abs(g)
            if pos == i - 1:
                passages.append((t, g > 0))
                pos = i
            elif pos == i:
                passages.append((t, g < 0))
                pos = i - 1
        if pos == 0:
            break
    ends = {}
    for k, (t, over) in enumerate(passages):
        ends.setdefault(t, [None, None])[0 if over else 1] = k
    if len(passages) != 2 * len(word):
        raise ValueError("closure is not a knot")
    return GaussDiagram(tuple(Arrow(o, u, 1 if word[t] > 0 else -1) for t, (o, u) in sorted(ends.items())))


def polygon_diagram(points):
    """Gauss diagram of the xy-projection of a closed polygon, height = z."""
    m = len(points)
    events = []
    signs = []
    for i in range(m):
        a, b = points[i], points[(i + 1) % m]
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            c, d = points[j], points[(j + 1) % m]
            r, s = b[:2] - a[:2], d[:2] - c[:2]
            den = r[0] * s[1] - r[1] * s[0]
            if abs(den) < 1e-12:
                continue
            q = c[:2] - a[:2]
            t = (q[0] * s[1] - q[1] * s[0]) / den
            u = (q[0] * r[1] - q[1] * r[0]) / den
            if 0 < t < 1 and 0 < u < 1:
                i_over = a[2] + t * (b[2] - a[2]) > c[2] + u * (d[2] - c[2])
                top, bottom = (r, s) if i_over else (s, r)
                cid = len(signs)
                signs.append(1 if top[0] * bottom[1] - top[1] * bottom[0] > 0 else -1)
                events.append((i, t, cid, i_over))
                events.append((j, u, cid, not i_over))
    events.sort()
    ends = {}
    for k, (_, _, cid, over) in enumerate(events):
        ends.setdefault(cid, [None, None])[0 if over else 1] = k
    return GaussDiagram(tuple(Arrow(o, u, signs[c]) for c, (o, u) in sorted(ends.items())))


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


@pytest.fixture
def rng():
    return np.random.default_rng(20040201)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero_rationals = rationals.filter(lambda f: f != 0)


def polys(var="n", max_degree=6):
    return st.lists(rationals, max_size=max_degree + 1).map(lambda cs: UniPoly(cs, var))


def curve_elements(max_degree=6):
    return st.builds(CurveElement, polys("X", max_degree), polys("X", max_degree))


def nonzero_curve_elements(max_degree=6):
    return curve_elements(max_degree).filter(lambda a: not a.is_zero())


odd_ints = st.integers(-99, 99).map(lambda k: 2 * (k // 2) + 1)


def frac(text):
    return Fraction(text)
