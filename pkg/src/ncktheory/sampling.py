"""Seeded random inputs shared by the tests, the acceptance suite and ``selftest``."""

from __future__ import annotations

import random

from .charring import Character, SuperChar


def random_character(rng: random.Random, nvars: int, max_rank: int = 4,
                     exp_range: int = 3) -> Character:
    """Sum of up to ``max_rank`` monomials (repeats allowed), each with coefficient 1."""
    terms: dict[tuple[int, ...], int] = {}
    for _ in range(rng.randint(0, max_rank)):
        e = tuple(rng.randint(-exp_range, exp_range) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + 1
    return Character(nvars, terms)


def random_superchar(rng: random.Random, max_nvars: int = 3, max_rank: int = 4,
                     exp_range: int = 3, nvars: int | None = None) -> SuperChar:
    """A SuperChar whose parts are honest characters of rank <= max_rank."""
    if nvars is None:
        nvars = rng.randint(1, max_nvars)
    return SuperChar(random_character(rng, nvars, max_rank, exp_range),
                     random_character(rng, nvars, max_rank, exp_range))


def random_superchars(seed: int, count: int, **kwargs) -> list[SuperChar]:
    rng = random.Random(seed)
    return [random_superchar(rng, **kwargs) for _ in range(count)]
