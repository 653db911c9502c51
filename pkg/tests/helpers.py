"""Shared builders for small valid diagrams."""

from __future__ import annotations

import random
from math import gcd

from heegaard_rr.rrdiagram import diagram_from_hookup
from heegaard_rr.rrdiagram.synth import hexagon_labels


def random_labels(rng: random.Random, top: int = 6) -> tuple[int, ...]:
    while True:
        e1, e3 = rng.randint(1, top), rng.randint(1, top)
        if gcd(e1, e3) == 1:
            return hexagon_labels((e1, e1 + e3, e3), rng.random() < 0.5)


def random_counts(rng: random.Random, total: int) -> list[int]:
    cuts = sorted(rng.randint(0, total) for _ in range(2))
    k = [cuts[0], cuts[1] - cuts[0], total - cuts[1]]
    return k + k


def random_diagram(rng: random.Random, max_strands: int = 10):
    n = rng.randint(1, max_strands)
    la, lb = random_labels(rng), random_labels(rng)
    ca, cb = random_counts(rng, n), random_counts(rng, n)
    return diagram_from_hookup(la, lb, ca, cb, rng.randrange(2 * n))


def toy_diagram():
    """Labels (1,2,1) on both sides, one strand through each face pair."""
    labels = (1, 2, 1, -1, -2, -1)
    return diagram_from_hookup(labels, labels, [1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1], 0)
