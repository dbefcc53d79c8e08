"""Random valid n-Lie algebras for property checks.

Candidates come from a few recipes and are kept only if the fundamental
identity holds:

* ``sparse``: each increasing tuple gets a random vector with some probability;
* ``lower``: products of ``e_X`` only land in ``span(e_j : j < min X)``, which
  keeps the algebra nilpotent and is accepted almost always;
* ``action``: ``[v, w_1, .., w_{n-1}] = M v`` for ``v`` in an abelian ideal
  ``V`` and a fixed ``(n-1)``-set ``w`` of basis vectors (solvable, usually
  not nilpotent);
* ``simple``: the simple algebra of dimension ``n+1`` summed with a random
  algebra on the remaining basis vectors;
* ``sum``: direct sum of two smaller random algebras;
* any of the above may be followed by a random change of basis.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra import NLieAlgebra, change_basis, direct_sum, validate_algebra
from .linalg import Field, rank

RECIPES = ("sparse", "lower", "action", "simple", "sum")


@dataclass(frozen=True)
class RandomAlgebraConfig:
    arities: tuple = (2, 3)
    max_dim: int = 4
    # chance of drawing dim < arity (always abelian)
    small_dim_probability: float = 0.1
    primes: tuple = (2, 3)
    density: float = 0.5
    twist_probability: float = 0.5
    max_tries: int = 400


def _random_vector(rng: random.Random, field: Field, d: int, limit: int) -> list:
    v = [0] * d
    for k in range(limit):
        if rng.random() < 0.5:
            v[k] = rng.randrange(1, field.modulus)
    return v


def _candidate(rng: random.Random, arity: int, dim: int, field: Field, recipe: str, density: float) -> NLieAlgebra:
    if recipe == "simple" and dim > arity:
        from .catalog import simple_algebra

        rest = dim - arity - 1
        base = simple_algebra(arity, field)
        if not rest:
            return base
        return direct_sum(base, random_algebra(rng, arity, rest, field, density=density, recipes=("lower", "action")))
    if recipe == "action" and dim >= arity:
        v = dim - arity + 1
        ws = tuple(range(v, dim))
        table = []
        for i in range(v):
            col = tuple(_random_vector(rng, field, v, v)) + (0,) * (arity - 1)
            if any(col):
                table.append(((i,) + ws, col))
        return NLieAlgebra(arity, dim, field, tuple(table))
    if recipe == "sum" and dim >= 2:
        left = rng.randrange(1, dim)
        parts = [
            random_algebra(rng, arity, left, field, density=density, recipes=("sparse", "lower", "action")),
            random_algebra(rng, arity, dim - left, field, density=density, recipes=("sparse", "lower", "action")),
        ]
        return direct_sum(*parts)
    lower = recipe == "lower"
    table = []
    for xs in itertools.combinations(range(dim), arity):
        if rng.random() < density:
            limit = xs[0] if lower else dim
            if limit:
                table.append((xs, tuple(_random_vector(rng, field, dim, limit))))
    return NLieAlgebra(arity, dim, field, tuple(table))


def random_invertible(rng: random.Random, field: Field, d: int) -> tuple:
    while True:
        m = tuple(tuple(rng.randrange(field.modulus) for _ in range(d)) for _ in range(d))
        if rank(m, field, d) == d:
            return m


def random_algebra(
    rng: random.Random,
    arity: int,
    dim: int,
    field: Field,
    *,
    density: float = 0.5,
    twist_probability: float = 0.5,
    recipes: tuple = RECIPES,
    max_tries: int = 400,
) -> NLieAlgebra:
    """A random algebra that passes :func:`validate_algebra` (finite fields only)."""
    for _ in range(max_tries):
        recipe = rng.choice(recipes)
        a = _candidate(rng, arity, dim, field, recipe, density)
        if validate_algebra(a, limit=1).ok:
            if dim and rng.random() < twist_probability:
                a = change_basis(a, random_invertible(rng, field, dim))
            return a
    return NLieAlgebra.abelian(arity, dim, field)


def random_algebras(count: int, seed: int = 0, config: RandomAlgebraConfig = RandomAlgebraConfig()):
    """Deterministic stream of ``count`` random valid algebras."""
    rng = random.Random(seed)
    for _ in range(count):
        arity = rng.choice(config.arities)
        if arity > config.max_dim or rng.random() < config.small_dim_probability:
            dim = rng.randint(0, min(arity, config.max_dim + 1) - 1)
        else:
            dim = rng.randint(arity, config.max_dim)
        field = Field.gf(rng.choice(config.primes))
        yield random_algebra(
            rng,
            arity,
            dim,
            field,
            density=config.density,
            twist_probability=config.twist_probability,
            max_tries=config.max_tries,
        )
