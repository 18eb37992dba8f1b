"""Exact matching counts and matching polynomials.

Two independent routes compute the matching polynomial
phi(H, x) = sum_k (-1)^k m(H,k) x^(n - k r):

* `matching_polynomial_oracle` enumerates every matching by backtracking
  over edges in sorted order. Slow but unarguable; it is the reference
  for everything else.
* `matching_polynomial` uses the deletion recurrence
  phi(H) = x * phi(H - u) - sum over edges e at u of phi(H - V(e)),
  splits into connected components (phi multiplies over components),
  and memoizes components under their exact labeled form.

The reduction phi(x) = x^z * q(x^r) with z = n - r*nu(H) is what the
numeric layer consumes: root-finding on the degree-nu q is far better
conditioned than on phi itself with its zero cluster.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import UniformHypergraph
from .polynomial import PolynomialShapeError, SparsePolynomial

_X = SparsePolynomial.x_power(1)


def _edge_masks(hg: UniformHypergraph) -> list[int]:
    masks = []
    for e in hg.edges:
        m = 0
        for v in e:
            m |= 1 << v
        masks.append(m)
    return masks


def count_matchings(hg: UniformHypergraph, k: int) -> int:
    """Number of k-sets of pairwise disjoint edges (1 when k = 0).

    Backtracking enumeration over edges in sorted order; this is the
    oracle the polynomial code is checked against.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    masks = _edge_masks(hg)

    def rec(start: int, used: int, need: int) -> int:
        if need == 0:
            return 1
        if len(masks) - start < need:
            return 0
        total = 0
        for j in range(start, len(masks)):
            if not masks[j] & used:
                total += rec(j + 1, used | masks[j], need - 1)
        return total

    return rec(0, 0, k)


def matching_counts(hg: UniformHypergraph) -> list[int]:
    """All counts m(H,0..nu) at once, by enumerating every matching."""
    masks = _edge_masks(hg)
    counts = [0] * (len(masks) + 1)
    counts[0] = 1

    def rec(start: int, used: int, size: int):
        for j in range(start, len(masks)):
            if not masks[j] & used:
                counts[size + 1] += 1
                rec(j + 1, used | masks[j], size + 1)

    rec(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


@dataclass(frozen=True)
class MatchingTable:
    """The counts m(H,0), ..., m(H,nu)."""

    counts: tuple[int, ...]

    @property
    def nu(self) -> int:
        return len(self.counts) - 1

    @classmethod
    def from_hypergraph(cls, hg: UniformHypergraph) -> "MatchingTable":
        return cls(tuple(matching_counts(hg)))

    @classmethod
    def from_polynomial(cls, phi: SparsePolynomial, r: int, n: int) -> "MatchingTable":
        red = reduce_polynomial(phi, r, n)
        counts = tuple(
            (-1) ** k * red.q.coefficient(red.nu - k) for k in range(red.nu + 1)
        )
        return cls(counts)


def matching_polynomial_oracle(hg: UniformHypergraph) -> SparsePolynomial:
    """phi by brute-force matching enumeration. Intended for small inputs."""
    counts = matching_counts(hg)
    return SparsePolynomial(
        {hg.n - k * hg.r: (-1) ** k * c for k, c in enumerate(counts)}
    )


# Shared component cache. CPython dict get/set is atomic, so concurrent
# insert-or-get of these immutable values is safe; callers needing full
# isolation can clear or ignore it.
_PHI_CACHE: dict[UniformHypergraph, SparsePolynomial] = {}


def clear_polynomial_cache():
    _PHI_CACHE.clear()


def matching_polynomial(hg: UniformHypergraph) -> SparsePolynomial:
    """phi via the deletion recurrence, component splitting, and memoization.

    Agrees exactly with matching_polynomial_oracle on every input.
    """
    out = SparsePolynomial.one()
    for comp in hg.components():
        out = out * _phi_connected(comp)
    return out


def _phi_connected(comp: UniformHypergraph) -> SparsePolynomial:
    if not comp.edges:
        return SparsePolynomial.x_power(comp.n)
    cached = _PHI_CACHE.get(comp)
    if cached is not None:
        return cached
    # Pivot on a maximum-degree vertex (lowest index on ties): it removes
    # the most edges per step on the caterpillar-like families.
    u = max(range(comp.n), key=lambda v: (comp.degree(v), -v))
    phi = _X * matching_polynomial(comp.delete_vertex(u))
    for e in comp.incident_edges(u):
        phi = phi - matching_polynomial(comp.delete_closed_edge(e))
    _PHI_CACHE[comp] = phi
    return phi


@dataclass(frozen=True)
class ReducedPolynomial:
    """The factorization phi(x) = x^z * q(x^r).

    z is the multiplicity of the zero root of phi and q has degree
    nu(H) with q(0) != 0.
    """

    z: int
    q: SparsePolynomial
    r: int

    @property
    def nu(self) -> int:
        return self.q.degree()

    def expand(self) -> SparsePolynomial:
        """Reconstruct phi exactly."""
        return SparsePolynomial(
            {self.z + self.r * e: c for e, c in self.q.terms()}
        )


def reduce_polynomial(phi: SparsePolynomial, r: int, n: int) -> ReducedPolynomial:
    """Factor a matching-shaped polynomial as x^z * q(x^r).

    Requires every exponent to be congruent to n modulo r and the degree
    to be exactly n; anything else signals a bug upstream.
    """
    if phi.is_zero():
        raise PolynomialShapeError("zero polynomial has no matching shape")
    if phi.degree() != n:
        raise PolynomialShapeError(f"degree {phi.degree()} != vertex count {n}")
    for e, _ in phi.terms():
        if (n - e) % r:
            raise PolynomialShapeError(f"exponent {e} not congruent to {n} mod {r}")
    z = phi.min_exponent()
    q = SparsePolynomial({(e - z) // r: c for e, c in phi.terms()})
    return ReducedPolynomial(z=z, q=q, r=r)
