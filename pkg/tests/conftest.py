from __future__ import annotations

import random

import pytest

from hurwitzdegen import (BoundaryDatum, HurwitzTuple, MarkedComponent, MarkedPoint,
                          PermGroup, is_inverting_involution, perm_from_cycles, rh_genus)
from hurwitzdegen import audit


@pytest.fixture(scope="session")
def a5():
    return audit.a5_group()


@pytest.fixture(scope="session")
def psl27():
    return audit.psl27_group()


@pytest.fixture(scope="session")
def s3():
    return PermGroup([perm_from_cycles(3, (0, 1)), perm_from_cycles(3, (0, 1, 2))])


@pytest.fixture(scope="session")
def s4():
    return PermGroup([perm_from_cycles(4, (0, 1, 2, 3)), perm_from_cycles(4, (0, 1))])


@pytest.fixture(scope="session")
def d4():
    return PermGroup([perm_from_cycles(4, (0, 1, 2, 3)), perm_from_cycles(4, (0, 2))])


@pytest.fixture(scope="session")
def d5():
    return PermGroup([perm_from_cycles(5, (0, 1, 2, 3, 4)),
                      perm_from_cycles(5, (1, 4), (2, 3))])


def inverting_pairs(G: PermGroup) -> list[tuple[int, int]]:
    return [(m, s) for m in range(G.order) for s in range(G.order)
            if is_inverting_involution(G, m, s)]


def random_valid_datum(G: PermGroup, rng: random.Random,
                       pairs: list[tuple[int, int]]) -> BoundaryDatum:
    """A random admissible datum: relations closed by a final cyclic point."""
    two_comp = rng.random() < 0.4
    node_m = rng.randrange(G.order) if two_comp else None
    comps = []
    for ci in range(2 if two_comp else 1):
        genus = 1 if rng.random() < 0.2 else 0
        handles = tuple((rng.randrange(G.order), rng.randrange(G.order))
                        for _ in range(genus))
        pts: list[MarkedPoint] = []
        if two_comp:
            m = node_m if ci == 0 else G.inv(node_m)
            pts.append(MarkedPoint.node_end(m, 0))
        if pairs and rng.random() < 0.35:
            pts.append(MarkedPoint.dihedral(*pairs[rng.randrange(len(pairs))]))
        for _ in range(rng.randrange(2, 5)):
            pts.append(MarkedPoint.cyclic(rng.randrange(G.order)))
        if ci == 0 and rng.random() < 0.5:
            # make full-image (hence often connected) covers common
            for gid in G.generator_ids:
                pts.append(MarkedPoint.cyclic(gid))
        acc = G.identity
        for a, b in handles:
            acc = G.mul(acc, G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))))
        for p in pts:
            acc = G.mul(acc, p.m)
        pts.append(MarkedPoint.cyclic(G.inv(acc)))
        comps.append(MarkedComponent(genus, handles, tuple(pts)))
    return BoundaryDatum(G, tuple(comps))


def random_rational_generating_tuples(G: PermGroup, rng: random.Random,
                                      want: int, max_tries: int = 3000) -> list[HurwitzTuple]:
    """Product-one tuples with full image whose smooth cover is rational.

    Rejection sampling; genus 0 pins the branch orders to triangle-group
    patterns, so these are the tuples whose degenerations stay all-rational.
    """
    out = []
    tries = 0
    while len(out) < want and tries < max_tries:
        tries += 1
        entries = [rng.randrange(G.order) for _ in range(rng.randrange(2, 4))]
        entries.append(G.inv(G.product(entries)))
        if any(g == G.identity for g in entries):
            continue
        if G.generated_subgroup(entries).order != G.order:
            continue
        orders = [G.element_order(g) for g in entries]
        if rh_genus(G.order, 0, orders) == 0:
            out.append(HurwitzTuple(G, tuple(entries)))
    return out
