"""Numeric layer: polynomial roots, spectral radius, matching energy,
and the exact characteristic-polynomial bridge for ordinary forests.

The spectral radius of a superforest is the largest root of its matching
polynomial, reached here through the reduced polynomial q: if y* is the
largest real root of q then rho = y***(1/r). The matching energy is the
sum of |x_i| over all roots of phi; each nonzero root mu of q yields
exactly r roots of phi of modulus |mu|**(1/r) and the zero root adds
nothing, hence ME = r * sum |mu|**(1/r).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .hypergraph import HypergraphError, UniformHypergraph
from .matching import matching_polynomial, reduce_polynomial
from .polynomial import SparsePolynomial

DEFAULT_TOL = 1e-10


def default_tol() -> float:
    """Default relative tolerance; the HG_TOL environment variable overrides."""
    env = os.environ.get("HG_TOL")
    return float(env) if env else DEFAULT_TOL


class RootFindingError(RuntimeError):
    """Root finding failed; .partial carries whatever was computed."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []


def _residual_scale(q: SparsePolynomial, z: complex) -> float:
    m = max(1.0, abs(z))
    return sum(abs(c) * m**e for e, c in q.terms())


def _polish(q: SparsePolynomial, dq: SparsePolynomial, z: complex, tol: float) -> complex:
    """Guarded Newton refinement; steps are only taken when they shrink |q|."""
    f = q.evaluate(z)
    for _ in range(30):
        if abs(f) <= tol * _residual_scale(q, z):
            break
        d = dq.evaluate(z)
        if d == 0:
            break
        step = f / d
        improved = False
        for _ in range(8):
            z2 = z - step
            f2 = q.evaluate(z2)
            if abs(f2) < abs(f):
                z, f = z2, f2
                improved = True
                break
            step /= 2
        if not improved:
            break
    return z


def roots(q: SparsePolynomial, tol: float | None = None) -> list[complex]:
    """All complex roots with multiplicity (repeated entries), sorted by
    (real, imag) for reproducible output.

    Companion-matrix eigenvalues seed a guarded Newton polish against the
    exact integer coefficients.
    """
    tol = default_tol() if tol is None else tol
    if q.degree() <= 0:
        raise ValueError("roots() needs a nonconstant polynomial")
    coeffs = np.array([float(c) for c in q.to_dense()])
    try:
        raw = np.roots(coeffs)
    except np.linalg.LinAlgError as exc:
        raise RootFindingError(f"companion eigenvalues did not converge: {exc}") from exc
    dq = q.derivative()
    out = [_polish(q, dq, complex(z), tol) for z in raw]
    bad = [z for z in out if abs(q.evaluate(z)) > 1e-6 * _residual_scale(q, z)]
    if bad:
        raise RootFindingError(f"{len(bad)} root(s) failed to refine", partial=out)
    return sorted(out, key=lambda z: (z.real, z.imag))


def _cauchy_bound(q: SparsePolynomial) -> float:
    lead = abs(q.leading_coefficient())
    return 1.0 + max(abs(c) for _, c in q.terms()) / lead


def largest_real_root(q: SparsePolynomial, tol: float | None = None) -> float:
    """Largest real root of q, to relative tolerance tol.

    Companion-matrix candidates locate it inside [0, 1 + max|coef|]; a
    sign-change bracket around the candidate is then shrunk by a
    bisection-safeguarded Newton iteration. Without a local sign change
    (even multiplicity) the polished candidate is returned as is.
    """
    tol = default_tol() if tol is None else tol
    all_roots = roots(q, tol)
    real = [z.real for z in all_roots if abs(z.imag) <= 1e-8 * max(1.0, abs(z))]
    if not real:
        raise RootFindingError("no real root found", partial=all_roots)
    y0 = max(real)
    dq = q.derivative()

    def f(t: float) -> float:
        return float(q.evaluate(t))

    bound = _cauchy_bound(q)
    sign_at_infinity = 1.0 if q.leading_coefficient() > 0 else -1.0
    step = max(1.0, abs(y0)) * 1e-3
    hi = y0 + step
    while f(hi) * sign_at_infinity <= 0 and hi <= bound + 1.0:
        hi += step
        step *= 2
    lo = None
    step = max(1.0, abs(y0)) * 1e-3
    for _ in range(8):
        cand = y0 - step
        if f(cand) * sign_at_infinity < 0:
            lo = cand
            break
        step /= 16
    if lo is None:
        # No sign change nearby: even-multiplicity top root; keep candidate.
        return y0
    # Newton with a bisection safeguard, driven to machine precision
    # (tol is an upper bound on the error, not a target).
    width = min(tol, 4e-16) * max(1.0, abs(y0))
    y = y0
    for _ in range(200):
        if hi - lo <= width:
            break
        d = float(dq.evaluate(y))
        y_newton = y - f(y) / d if d else None
        y = y_newton if y_newton is not None and lo < y_newton < hi else 0.5 * (lo + hi)
        fy = f(y)
        if fy == 0.0:
            return y
        if fy * sign_at_infinity < 0:
            lo = y
        else:
            hi = y
    return 0.5 * (lo + hi)


def spectral_radius(hg: UniformHypergraph, tol: float | None = None) -> float:
    """Largest root of the matching polynomial, as a real number.

    Defined on superforests as the maximum over connected components
    (each component's reduced polynomial has a simple, well-conditioned
    top root); an edgeless hypergraph has spectral radius 0.
    """
    tol = default_tol() if tol is None else tol
    if not hg.edges:
        return 0.0
    best = None
    for comp in hg.components():
        if not comp.edges:
            continue
        red = reduce_polynomial(matching_polynomial(comp), comp.r, comp.n)
        y = largest_real_root(red.q, tol)
        best = y if best is None else max(best, y)
    if best is None or best <= 0:
        raise RootFindingError(f"no positive real root for {hg}")
    return best ** (1.0 / hg.r)


def matching_energy(hg: UniformHypergraph, tol: float | None = None) -> float:
    """Sum of |x_i| over all roots of phi, computed from the reduced q."""
    tol = default_tol() if tol is None else tol
    if not hg.edges:
        return 0.0
    red = reduce_polynomial(matching_polynomial(hg), hg.r, hg.n)
    return hg.r * sum(abs(mu) ** (1.0 / hg.r) for mu in roots(red.q, tol))


def matching_energy_from_phi(hg: UniformHypergraph, tol: float | None = None) -> float:
    """Cross-check: find all n roots of phi directly and sum their moduli.

    Mind the degree: this route works with the full zero cluster of phi
    and is only intended as an independent oracle on small instances.
    """
    phi = matching_polynomial(hg)
    if phi.degree() <= 0:
        return 0.0
    coeffs = np.array([float(c) for c in phi.to_dense()])
    return float(sum(abs(z) for z in np.roots(coeffs)))


def _sig15(x: float) -> float:
    return float(f"{x:.15g}")


@dataclass(frozen=True)
class SpectralSummary:
    """Numeric spectral radius, matching energy, and the q-root multiset."""

    rho: float
    me: float
    q_roots: tuple[complex, ...]
    tol: float

    def to_json_dict(self) -> dict:
        return {
            "rho": _sig15(self.rho),
            "me": _sig15(self.me),
            "tol": _sig15(self.tol),
            "q_roots": [
                {"re": _sig15(z.real), "im": _sig15(z.imag)} for z in self.q_roots
            ],
        }


def spectral_summary(hg: UniformHypergraph, tol: float | None = None) -> SpectralSummary:
    tol = default_tol() if tol is None else tol
    if not hg.edges:
        return SpectralSummary(rho=0.0, me=0.0, q_roots=(), tol=tol)
    red = reduce_polynomial(matching_polynomial(hg), hg.r, hg.n)
    q_roots = tuple(roots(red.q, tol))
    rho = spectral_radius(hg, tol)
    me = hg.r * sum(abs(mu) ** (1.0 / hg.r) for mu in q_roots)
    return SpectralSummary(rho=rho, me=me, q_roots=q_roots, tol=tol)


# -- exact characteristic polynomial for ordinary forests -----------------


def _char_poly_exact(adj: list[list[int]]) -> SparsePolynomial:
    """Characteristic polynomial of an integer matrix via the
    Faddeev-LeVerrier recurrence; all divisions are exact over the
    integers, so the result is exact."""
    n = len(adj)
    coeffs = {n: 1}
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = [
            [sum(adj[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(prod[i][i] for i in range(n))
        assert trace % k == 0
        ck = -(trace // k)
        coeffs[n - k] = ck
        m = [
            [prod[i][j] + (ck if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return SparsePolynomial(coeffs)


def tree_char_poly(hg: UniformHypergraph) -> SparsePolynomial:
    """Adjacency characteristic polynomial of an ordinary forest (r = 2).

    Computed independently of the matching machinery, as an exact second
    oracle: for forests it coincides with the matching polynomial.
    """
    if hg.r != 2:
        raise HypergraphError(f"characteristic-polynomial bridge needs r = 2, got r = {hg.r}")
    out = SparsePolynomial.one()
    for comp in hg.components():
        if comp.num_edges != comp.n - 1:
            raise HypergraphError("not a forest: a component has a cycle")
        adj = [[0] * comp.n for _ in range(comp.n)]
        for a, b in comp.edges:
            adj[a][b] = 1
            adj[b][a] = 1
        out = out * _char_poly_exact(adj)
    return out
