"""Finite-difference machinery on tensor-product central stencils."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import StencilError

__all__ = ["central_weights", "StencilSampler", "richardson_gradient"]


@lru_cache(maxsize=None)
def central_weights(deriv, half_width):
    """Weights of the central ``2*half_width+1`` point stencil for ``d^deriv/dx^deriv``.

    Obtained from the moment (Vandermonde) conditions on integer offsets.
    """
    offsets = np.arange(-half_width, half_width + 1, dtype=float)
    n = offsets.size
    if deriv >= n:
        raise ValueError("stencil too narrow for this derivative order")
    V = np.vander(offsets, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[deriv] = float(np.prod(np.arange(1, deriv + 1)))
    w = np.linalg.solve(V, rhs)
    w.setflags(write=False)
    return w


class StencilSampler:
    """Samples a vector field on a square stencil around each point.

    ``func(X1, X2)`` must return a dict of arrays broadcast like ``X1``.
    Mixed partials ``d^(i+j)/dx1^i dx2^j`` are tensor products of 1D
    central weights, so a ``half_width=2`` sampler gives fourth-order
    first and second derivatives.
    """

    def __init__(self, func, x1, x2, h, half_width=2):
        self.h = np.asarray(h, dtype=float)
        self.m = half_width
        o = np.arange(-half_width, half_width + 1, dtype=float)
        x1 = np.asarray(x1, dtype=float)[..., None, None]
        x2 = np.asarray(x2, dtype=float)[..., None, None]
        hh = np.broadcast_to(self.h, np.broadcast_shapes(x1.shape[:-2], self.h.shape))
        hh = np.asarray(hh)[..., None, None]
        X1 = x1 + hh * o[:, None]
        X2 = x2 + hh * o[None, :]
        X1, X2 = np.broadcast_arrays(X1, X2)
        self.values = func(X1, X2)
        for name, v in self.values.items():
            if not np.all(np.isfinite(v)):
                raise StencilError(f"non-finite value of {name} inside the stencil")
        self._cache = {}

    def d(self, name, i=0, j=0):
        key = (name, i, j)
        if key not in self._cache:
            w1 = central_weights(i, self.m)
            w2 = central_weights(j, self.m)
            v = np.einsum("...ab,a,b->...", self.values[name], w1, w2)
            self._cache[key] = v / self.h ** (i + j)
        return self._cache[key]


def _central_first(func, x1, x2, h, names):
    e1 = func(x1 + h, x2)
    w1 = func(x1 - h, x2)
    n2 = func(x1, x2 + h)
    s2 = func(x1, x2 - h)
    out = {}
    for k in names:
        stack = (e1[k], w1[k], n2[k], s2[k])
        if not all(np.all(np.isfinite(v)) for v in stack):
            raise StencilError(f"non-finite value of {k} inside the stencil")
        out[k] = ((e1[k] - w1[k]) / (2 * h), (n2[k] - s2[k]) / (2 * h))
    return out


def richardson_gradient(func, x1, x2, h, names, levels=2):
    """Gradients of the named components by Richardson-extrapolated central differences.

    ``levels=2`` combines steps ``h`` and ``h/2`` for ``O(h^4)``; each extra
    level adds two orders.
    """
    tables = [_central_first(func, x1, x2, h / 2**k, names) for k in range(levels)]
    out = {}
    for k in names:
        cols = [list(t[k]) for t in tables]      # cols[level][axis]
        for axis in (0, 1):
            row = [c[axis] for c in cols]
            for order in range(1, levels):
                fac = 4.0**order
                row = [(fac * row[i + 1] - row[i]) / (fac - 1) for i in range(len(row) - 1)]
            cols[0][axis] = row[0]
        out[k] = (cols[0][0], cols[0][1])
    return out
