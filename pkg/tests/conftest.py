"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import itertools
import random

import hypothesis.strategies as st

from hypermatch import (
    UniformHypergraph,
    attach_pendant,
    build,
    loose_path,
    random_supertree,
)


@st.composite
def supertrees(draw, rs=(2, 3, 4), max_edges=6):
    """Uniform-attachment supertrees with 1..max_edges edges."""
    r = draw(st.sampled_from(rs))
    m = draw(st.integers(min_value=1, max_value=max_edges))
    picks = draw(st.lists(st.integers(0, 10**9), min_size=m - 1, max_size=m - 1))
    hg = loose_path(r, 1).hg
    for p in picks:
        hg = attach_pendant(hg, p % hg.n)
    return hg


@st.composite
def supertrees_with_vertex(draw, rs=(2, 3, 4), max_edges=6):
    hg = draw(supertrees(rs=rs, max_edges=max_edges))
    v = draw(st.integers(0, 10**9)) % hg.n
    return hg, v


@st.composite
def small_hypergraphs(draw, rs=(2, 3), max_n=8, max_edges=6):
    """Arbitrary small uniform hypergraphs (not necessarily connected)."""
    r = draw(st.sampled_from(rs))
    n = draw(st.integers(min_value=r, max_value=max_n))
    pool = list(itertools.combinations(range(n), r))
    edges = draw(st.lists(st.sampled_from(pool), max_size=max_edges, unique=True))
    return build(r, n, edges)


def seeded_supertree_corpus(seed: int, count: int, rs=(2, 3, 4), max_n: int = 16):
    """Deterministic list of random supertrees with n <= max_n, cycling rs."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        r = rs[i % len(rs)]
        max_edges = (max_n - 1) // (r - 1)
        out.append(random_supertree(r, rng.randint(1, max_edges), rng))
    return out


def pendant_edges(hg: UniformHypergraph):
    """Edges with at most one vertex of degree >= 2."""
    return [e for e in hg.edges if sum(1 for v in e if hg.degree(v) >= 2) <= 1]
