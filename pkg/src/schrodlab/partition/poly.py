"""Multivariate polynomials over scaled space-time coordinates.

Partition polynomials live in the variables u = (x/scale, t/scale) so the
box B(0,R) x [0,R] maps into [-1,1]^n x [0,1]; this keeps coefficient
vectors well conditioned across scales.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

import numpy as np


def space_dim(nvars):
    return nvars - 1


def poly_space_dim(nvars, degree):
    """Dimension of polynomials of total degree <= degree in nvars vars."""
    return comb(degree + nvars, nvars)


def graded_monomials(nvars, max_degree):
    """Exponent rows in graded-lex order: 1, u1, ..., un, u1^2, u1 u2, ..."""
    rows = []
    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            rows.append(e)
    return np.array(rows, dtype=int)


@dataclass
class Poly:
    """Sparse monomial-basis polynomial: sum coeffs[i] * prod u^exponents[i]."""

    exponents: np.ndarray
    coeffs: np.ndarray

    def __post_init__(self):
        self.exponents = np.atleast_2d(np.asarray(self.exponents, dtype=int))
        self.coeffs = np.asarray(self.coeffs, dtype=float)

    @property
    def nvars(self):
        return self.exponents.shape[1]

    @property
    def degree(self):
        live = np.abs(self.coeffs) > 0
        if not live.any():
            return 0
        return int(self.exponents[live].sum(axis=1).max())

    def __call__(self, pts):
        """Evaluate at pts of shape (..., nvars)."""
        pts = np.asarray(pts, dtype=float)
        out = np.zeros(pts.shape[:-1])
        for e, c in zip(self.exponents, self.coeffs):
            if c == 0:
                continue
            term = np.full(pts.shape[:-1], c)
            for v, p in enumerate(e):
                if p:
                    term = term * pts[..., v] ** p
            out += term
        return out

    def gradient(self, pts):
        """Gradient rows at pts of shape (..., nvars)."""
        pts = np.asarray(pts, dtype=float)
        out = np.zeros(pts.shape)
        for e, c in zip(self.exponents, self.coeffs):
            if c == 0:
                continue
            for v, p in enumerate(e):
                if p == 0:
                    continue
                term = np.full(pts.shape[:-1], c * p)
                for w, pw in enumerate(e):
                    pw_eff = pw - 1 if w == v else pw
                    if pw_eff:
                        term = term * pts[..., w] ** pw_eff
                out[..., v] += term
        return out

    def normalized(self):
        norm = np.linalg.norm(self.coeffs)
        return Poly(self.exponents, self.coeffs / norm)


@dataclass
class PartitionPolynomial:
    """Product of distinct factors with a recorded total degree bound."""

    factors: list
    degree_bound: int
    n: int  # spatial dimension
    scale: float

    @property
    def degree(self):
        return int(sum(f.degree for f in self.factors))

    def to_scaled(self, pts_xt):
        """Map raw (x..., t) points, shape (..., n+1), to scaled coords."""
        return np.asarray(pts_xt, dtype=float) / self.scale

    def factor_values(self, pts_xt):
        u = self.to_scaled(pts_xt)
        return np.stack([f(u) for f in self.factors], axis=0)

    def sign_vectors(self, pts_xt, tie_tol=1e-12):
        """Per-point sign tuples; 0 marks a wall tie (|factor| <= tie_tol)."""
        vals = self.factor_values(pts_xt)
        signs = np.where(vals > tie_tol, 1, np.where(vals < -tie_tol, -1, 0))
        return signs

    def gradient(self, pts_xt):
        """Gradient of the product at raw points (chain rule, scaled vars)."""
        u = self.to_scaled(pts_xt)
        vals = np.stack([f(u) for f in self.factors], axis=0)
        grads = np.stack([f.gradient(u) for f in self.factors], axis=0)
        out = np.zeros(u.shape)
        for i in range(len(self.factors)):
            others = np.ones(u.shape[:-1])
            for j in range(len(self.factors)):
                if j != i:
                    others = others * vals[j]
            out += grads[i] * others[..., None]
        return out / self.scale

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "scale": self.scale,
                "degree_bound": self.degree_bound,
                "factors": [
                    {
                        "degree": f.degree,
                        "monomials": [
                            {"exponents": e.tolist(), "coefficient": float(c)}
                            for e, c in zip(f.exponents, f.coeffs)
                            if c != 0
                        ],
                    }
                    for f in self.factors
                ],
            }
        )


def partition_polynomial_from_json(text):
    d = json.loads(text)
    factors = []
    for frec in d["factors"]:
        exps = np.array([m["exponents"] for m in frec["monomials"]], dtype=int)
        cs = np.array([m["coefficient"] for m in frec["monomials"]])
        factors.append(Poly(exps, cs))
    return PartitionPolynomial(
        factors=factors, degree_bound=d["degree_bound"], n=d["n"], scale=d["scale"]
    )


def grid_points(grid):
    """Raw (x..., t) coordinates of all samples, shape (nspace, nt, n+1)."""
    x = grid.x_coords()
    t = grid.times()
    if grid.dim == 1:
        X, T = np.meshgrid(x, t, indexing="ij")
        return np.stack([X, T], axis=-1)
    X1, X2, T = np.meshgrid(x, x, t, indexing="ij")
    pts = np.stack([X1, X2, T], axis=-1)
    return pts.reshape(grid.nx * grid.nx, grid.nt, 3)
