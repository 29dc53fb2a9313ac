"""Shared deterministic generators for the test suite."""

from __future__ import annotations

import random

from arithmat.field import EssentialPair, NumberField, make_field
from arithmat.forms import (
    BinaryForm,
    form_discriminant,
    irreducibility_certificate,
    is_irreducible,
)


def random_pair(rng: random.Random, n: int, a0: int = 1, hi: int = 9) -> EssentialPair:
    """A random validated essential pair of degree n with scale a0.

    Coefficients are kept small so float verification layers stay well
    inside their tolerance budgets.
    """
    while True:
        a1 = rng.randint(1, hi) * a0 * a0
        rest = [rng.randint(-hi, hi) for _ in range(n)]
        rest[0] *= a0
        if rest[-1] == 0:
            continue
        form = BinaryForm([a1] + rest)
        disc = form_discriminant(form)
        if disc == 0 or disc % (a0 * a0):
            continue
        if n <= 5:
            if not is_irreducible(form):
                continue
        elif irreducibility_certificate(form) is not True:
            continue
        return EssentialPair(a0, form)


def random_field(rng: random.Random, n: int, a0: int = 1, hi: int = 9) -> NumberField:
    return make_field(random_pair(rng, n, a0=a0, hi=hi))


def field_pool(
    seed: int,
    degrees=(2, 3, 4, 5, 6),
    per_degree: int = 3,
    scaled=((2, 2), (3, 2), (4, 2), (2, 3), (3, 3)),
) -> list[NumberField]:
    """Deterministic mixed pool: a0 = 1 fields per degree plus scaled pairs."""
    rng = random.Random(seed)
    pool = [random_field(rng, n) for n in degrees for _ in range(per_degree)]
    pool += [random_field(rng, n, a0=a0) for n, a0 in scaled]
    return pool


def random_element(F: NumberField, rng: random.Random, bound: int = 10, nonzero: bool = False):
    while True:
        coords = [rng.randint(-bound, bound) for _ in range(F.n)]
        if not nonzero or any(coords):
            return F.element(coords)
