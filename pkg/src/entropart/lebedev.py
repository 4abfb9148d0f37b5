"""Lebedev-Laikov angular quadrature on the unit sphere.

Each supported node count is stored as a compact list of symmetry-orbit
rules ``(code, a, b, v)``; the full grid is expanded from the octahedral
symmetry group at call time. Weights follow the convention sum(w) = 1, so
a surface integral over the unit sphere is 4*pi * sum(w_i f(u_i)).

The coefficient table is transcribed from the published Lebedev-Laikov
Fortran tables (via their common C/Python ports). Orders whose published
rules contain negative weights (74, 230) are deliberately not included:
every weight here is positive.
"""
from __future__ import annotations

import math

import numpy as np

# algebraic precision (max degree integrated exactly) per node count
LEBEDEV_ORDERS = {
    6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 86: 15, 110: 17,
    146: 19, 170: 21, 194: 23, 302: 29, 434: 35,
}

SUPPORTED_NODE_COUNTS = tuple(sorted(LEBEDEV_ORDERS))


def _orbit(code: int, a: float, b: float, v: float):
    """Expand one symmetry orbit of the octahedral group.

    code 0: vertices (6 points);      code 1: edge midpoints (12)
    code 2: face centers (8);         code 3: (a,a,b) orbits (24)
    code 4: (a,b,0) orbits (24);      code 5: (a,b,c) orbits (48)
    """
    pts = []
    if code == 0:
        a = 1.0
        for i in range(3):
            for s in (+1.0, -1.0):
                p = [0.0, 0.0, 0.0]
                p[i] = s * a
                pts.append(p)
    elif code == 1:
        a = math.sqrt(0.5)
        for i in range(3):
            j, k = [(1, 2), (0, 2), (0, 1)][i]
            for sj in (+1.0, -1.0):
                for sk in (+1.0, -1.0):
                    p = [0.0, 0.0, 0.0]
                    p[j] = sj * a
                    p[k] = sk * a
                    pts.append(p)
    elif code == 2:
        a = math.sqrt(1.0 / 3.0)
        for sx in (+1.0, -1.0):
            for sy in (+1.0, -1.0):
                for sz in (+1.0, -1.0):
                    pts.append([sx * a, sy * a, sz * a])
    elif code == 3:
        b = math.sqrt(1.0 - 2.0 * a * a)
        for perm in ((a, a, b), (a, b, a), (b, a, a)):
            for sx in (+1.0, -1.0):
                for sy in (+1.0, -1.0):
                    for sz in (+1.0, -1.0):
                        pts.append([sx * perm[0], sy * perm[1], sz * perm[2]])
    elif code == 4:
        b = math.sqrt(1.0 - a * a)
        # one coordinate is zero: sign loop only over the two live slots
        for zero_axis in range(3):
            j, k = [(1, 2), (0, 2), (0, 1)][zero_axis]
            for cj, ck in ((a, b), (b, a)):
                for sj in (+1.0, -1.0):
                    for sk in (+1.0, -1.0):
                        p = [0.0, 0.0, 0.0]
                        p[j] = sj * cj
                        p[k] = sk * ck
                        pts.append(p)
    elif code == 5:
        c = math.sqrt(1.0 - a * a - b * b)
        for perm in ((a, b, c), (a, c, b), (b, a, c),
                     (b, c, a), (c, a, b), (c, b, a)):
            for sx in (+1.0, -1.0):
                for sy in (+1.0, -1.0):
                    for sz in (+1.0, -1.0):
                        pts.append([sx * perm[0], sy * perm[1], sz * perm[2]])
    else:
        raise ValueError(f"unknown orbit code {code}")
    arr = np.array(pts)
    return arr, np.full(len(arr), v)


_RULES = {
    6: (
        (0, 0, 0, 0.1666666666666667),
    ),
    14: (
        (0, 0, 0, 0.06666666666666667),
        (2, 0, 0, 0.075),
    ),
    26: (
        (0, 0, 0, 0.04761904761904762),
        (1, 0, 0, 0.0380952380952381),
        (2, 0, 0, 0.03214285714285714),
    ),
    38: (
        (0, 0, 0, 0.009523809523809525),
        (2, 0, 0, 0.03214285714285714),
        (4, 0.4597008433809831, 0, 0.02857142857142857),
    ),
    50: (
        (0, 0, 0, 0.0126984126984127),
        (1, 0, 0, 0.02257495590828924),
        (2, 0, 0, 0.02109375),
        (3, 0.3015113445777636, 0, 0.02017333553791887),
    ),
    86: (
        (0, 0, 0, 0.01154401154401154),
        (2, 0, 0, 0.01194390908585628),
        (3, 0.3696028464541502, 0, 0.0111105557106034),
        (3, 0.6943540066026664, 0, 0.01187650129453714),
        (4, 0.3742430390903412, 0, 0.01181230374690448),
    ),
    110: (
        (0, 0, 0, 0.003828270494937162),
        (2, 0, 0, 0.009793737512487513),
        (3, 0.1851156353447362, 0, 0.008211737283191111),
        (3, 0.6904210483822922, 0, 0.009942814891178103),
        (3, 0.3956894730559419, 0, 0.009595471336070962),
        (4, 0.4783690288121502, 0, 0.009694996361663029),
    ),
    146: (
        (0, 0, 0, 0.0005996313688621381),
        (1, 0, 0, 0.007372999718620756),
        (2, 0, 0, 0.007210515360144488),
        (3, 0.6764410400114264, 0, 0.007116355493117555),
        (3, 0.4174961227965453, 0, 0.006753829486314477),
        (3, 0.1574676672039082, 0, 0.007574394159054034),
        (5, 0.1403553811713183, 0.4493328323269557, 0.006991087353303262),
    ),
    170: (
        (0, 0, 0, 0.005544842902037365),
        (1, 0, 0, 0.006071332770670752),
        (2, 0, 0, 0.006383674773515093),
        (3, 0.2551252621114134, 0, 0.00518338758774779),
        (3, 0.6743601460362766, 0, 0.006317929009813725),
        (3, 0.431891069671941, 0, 0.006201670006589077),
        (4, 0.2613931360335988, 0, 0.005477143385137348),
        (5, 0.4990453161796037, 0.1446630744325115, 0.005968383987681156),
    ),
    194: (
        (0, 0, 0, 0.001782340447244611),
        (1, 0, 0, 0.005716905949977102),
        (2, 0, 0, 0.005573383178848738),
        (3, 0.6712973442695226, 0, 0.005608704082587997),
        (3, 0.2892465627575439, 0, 0.005158237711805383),
        (3, 0.4446933178717437, 0, 0.005518771467273614),
        (3, 0.1299335447650067, 0, 0.004106777028169394),
        (4, 0.3457702197611283, 0, 0.005051846064614808),
        (5, 0.159041710538353, 0.8360360154824589, 0.005530248916233094),
    ),
    302: (
        (0, 0, 0, 0.0008545911725128148),
        (2, 0, 0, 0.003599119285025571),
        (3, 0.3515640345570105, 0, 0.003449788424305883),
        (3, 0.6566329410219612, 0, 0.003604822601419882),
        (3, 0.4729054132581005, 0, 0.003576729661743367),
        (3, 0.09618308522614784, 0, 0.002352101413689164),
        (3, 0.2219645236294178, 0, 0.003108953122413675),
        (3, 0.7011766416089545, 0, 0.003650045807677255),
        (4, 0.2644152887060663, 0, 0.002982344963171804),
        (4, 0.5718955891878961, 0, 0.00360082093221646),
        (5, 0.2510034751770465, 0.8000727494073951, 0.003571540554273387),
        (5, 0.1233548532583327, 0.4127724083168531, 0.00339231220500617),
    ),
    434: (
        (0, 0, 0, 0.0005265897968224436),
        (1, 0, 0, 0.002548219972002607),
        (2, 0, 0, 0.002512317418927307),
        (3, 0.6909346307509111, 0, 0.002530403801186355),
        (3, 0.1774836054609158, 0, 0.002014279020918528),
        (3, 0.4914342637784746, 0, 0.002501725168402936),
        (3, 0.6456664707424256, 0, 0.002513267174597564),
        (3, 0.2861289010307638, 0, 0.002302694782227416),
        (3, 0.07568084367178018, 0, 0.001462495621594614),
        (3, 0.3927259763368002, 0, 0.00244537343731298),
        (4, 0.8818132877794288, 0, 0.002417442375638981),
        (4, 0.9776428111182649, 0, 0.001910951282179532),
        (5, 0.2054823696403044, 0.8689460322872412, 0.002416930044324775),
        (5, 0.5905157048925271, 0.7999278543857286, 0.002512236854563495),
        (5, 0.5550152361076807, 0.7717462626915901, 0.002496644054553086),
        (5, 0.9371809858553722, 0.3344363145343455, 0.002236607760437849),
    ),
}


def lebedev_grid(n_nodes: int):
    """Return (unit_vectors, weights) for a supported node count.

    Weights are positive and sum to 1.
    """
    rules = _RULES.get(n_nodes)
    if rules is None:
        raise ValueError(
            f"unsupported Lebedev node count {n_nodes}; "
            f"supported: {list(SUPPORTED_NODE_COUNTS)}")
    pts, wts = [], []
    for code, a, b, v in rules:
        p, w = _orbit(code, a, b, v)
        pts.append(p)
        wts.append(w)
    points = np.vstack(pts)
    weights = np.concatenate(wts)
    if len(points) != n_nodes:
        raise AssertionError(
            f"orbit expansion produced {len(points)} points, expected {n_nodes}")
    return points, weights
