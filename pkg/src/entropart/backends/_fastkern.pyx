# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled implementations of the numerical kernels.

Semantics identical to backends.reference; see that module for the
parameter documentation. Loops are arranged so the innermost index runs
over grid points, which keeps every pass contiguous in memory.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport exp, sqrt

cnp.import_array()

NAME = "compiled"


def becke_weights_kernel(points, centers, radii, stiffness, size_adjust):
    cdef cnp.ndarray[double, ndim=2] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] ctr = np.ascontiguousarray(centers, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] rad = np.ascontiguousarray(radii, dtype=np.float64)
    cdef Py_ssize_t nat = ctr.shape[0]
    cdef Py_ssize_t npts = pts.shape[0]
    cdef cnp.ndarray[double, ndim=2] P = np.ones((nat, npts))
    if nat == 1:
        return P
    cdef cnp.ndarray[double, ndim=2] d = np.empty((nat, npts))
    cdef Py_ssize_t a, b, p, it
    cdef double dx, dy, dz, rab, mu, f, chi, u, shift, tot
    cdef int k = stiffness
    cdef bint adjust = size_adjust
    for a in range(nat):
        for p in range(npts):
            dx = pts[p, 0] - ctr[a, 0]
            dy = pts[p, 1] - ctr[a, 1]
            dz = pts[p, 2] - ctr[a, 2]
            d[a, p] = sqrt(dx * dx + dy * dy + dz * dz)
    for a in range(nat):
        for b in range(nat):
            if a == b:
                continue
            dx = ctr[a, 0] - ctr[b, 0]
            dy = ctr[a, 1] - ctr[b, 1]
            dz = ctr[a, 2] - ctr[b, 2]
            rab = sqrt(dx * dx + dy * dy + dz * dz)
            shift = 0.0
            if adjust and rad[a] != rad[b]:
                chi = rad[a] / rad[b]
                u = (chi - 1.0) / (chi + 1.0)
                shift = u / (u * u - 1.0)
                if shift > 0.5:
                    shift = 0.5
                elif shift < -0.5:
                    shift = -0.5
            for p in range(npts):
                mu = (d[a, p] - d[b, p]) / rab
                if shift != 0.0:
                    mu = mu + shift * (1.0 - mu * mu)
                f = mu
                for it in range(k):
                    f = 0.5 * f * (3.0 - f * f)
                P[a, p] *= 0.5 * (1.0 - f)
    for p in range(npts):
        tot = 0.0
        for a in range(nat):
            tot += P[a, p]
        for a in range(nat):
            P[a, p] /= tot
    return P


def eval_primitives(points, prim_centers, prim_exps, prim_norms, ang_pows):
    cdef cnp.ndarray[double, ndim=2] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] ctr = np.ascontiguousarray(prim_centers, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] exps = np.ascontiguousarray(prim_exps, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] norms = np.ascontiguousarray(prim_norms, dtype=np.float64)
    cdef cnp.ndarray[long, ndim=2] pows = np.ascontiguousarray(ang_pows, dtype=np.int64)
    cdef Py_ssize_t nprim = exps.shape[0]
    cdef Py_ssize_t npts = pts.shape[0]
    cdef cnp.ndarray[double, ndim=2] G = np.empty((nprim, npts))
    cdef Py_ssize_t i, p, t
    cdef double dx, dy, dz, r2, val, alpha, nrm
    cdef long ax, ay, az
    for i in range(nprim):
        alpha = exps[i]
        nrm = norms[i]
        ax = pows[i, 0]
        ay = pows[i, 1]
        az = pows[i, 2]
        for p in range(npts):
            dx = pts[p, 0] - ctr[i, 0]
            dy = pts[p, 1] - ctr[i, 1]
            dz = pts[p, 2] - ctr[i, 2]
            r2 = dx * dx + dy * dy + dz * dz
            val = nrm * exp(-alpha * r2)
            for t in range(ax):
                val *= dx
            for t in range(ay):
                val *= dy
            for t in range(az):
                val *= dz
            G[i, p] = val
    return G


def quad_form(D, G):
    cdef cnp.ndarray[double, ndim=2] Dm = np.ascontiguousarray(D, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] Gm = np.ascontiguousarray(G, dtype=np.float64)
    cdef Py_ssize_t nprim = Gm.shape[0]
    cdef Py_ssize_t npts = Gm.shape[1]
    cdef cnp.ndarray[double, ndim=1] rho = np.zeros(npts)
    cdef Py_ssize_t i, j, p
    cdef double c
    for i in range(nprim):
        c = Dm[i, i]
        if c != 0.0:
            for p in range(npts):
                rho[p] += c * Gm[i, p] * Gm[i, p]
        for j in range(i + 1, nprim):
            # symmetric off-diagonal pair folded into one pass
            c = Dm[i, j] + Dm[j, i]
            if c != 0.0:
                for p in range(npts):
                    rho[p] += c * Gm[i, p] * Gm[j, p]
    return rho


def quad_form_block(D, G, rows, cols):
    cdef cnp.ndarray[double, ndim=2] Dm = np.ascontiguousarray(D, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] Gm = np.ascontiguousarray(G, dtype=np.float64)
    cdef cnp.ndarray[long, ndim=1] r = np.ascontiguousarray(rows, dtype=np.int64)
    cdef cnp.ndarray[long, ndim=1] c = np.ascontiguousarray(cols, dtype=np.int64)
    cdef Py_ssize_t nr = r.shape[0]
    cdef Py_ssize_t nc = c.shape[0]
    cdef Py_ssize_t npts = Gm.shape[1]
    cdef cnp.ndarray[double, ndim=1] out = np.zeros(npts)
    cdef Py_ssize_t ii, jj, p
    cdef Py_ssize_t ri, cj
    cdef double coef
    for ii in range(nr):
        ri = r[ii]
        for jj in range(nc):
            cj = c[jj]
            coef = Dm[ri, cj]
            if coef != 0.0:
                for p in range(npts):
                    out[p] += coef * Gm[ri, p] * Gm[cj, p]
    return out
