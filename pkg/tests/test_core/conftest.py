"""Seeded random finite designs shared by the property tests."""

import itertools
import random

import pytest

from ludics.core.designs.design import (
    DAIMON,
    OMEGA,
    Branch,
    Conj,
    Design,
    Predesign,
    Sum,
    Var,
)


class RandomDesigns:
    """Random finite designs over the names ``a/1``, ``b/0`` and ``c/2``.

    Choices depend only on the seed, so two generators with the same seed and
    different ``prefix`` produce alpha-equivalent designs. With ``pad_omega``
    every sum also lists the missing names with an explicit Omega body.
    """

    NAMES = {"a": 1, "b": 0, "c": 2}

    def __init__(self, seed: int = 0, prefix: str = "v", pad_omega: bool = False):
        self.rng = random.Random(seed)
        self.prefix = prefix
        self.pad_omega = pad_omega
        self._count = itertools.count()

    def positive(self, scope=(), depth: int = 4) -> Design:
        if depth <= 0 or self.rng.random() < 0.15:
            return DAIMON if self.rng.random() < 0.75 else OMEGA
        n = 1 if self.rng.random() < 0.75 else 2
        return Conj.of(self.predesign(scope, depth) for _ in range(n))

    def predesign(self, scope, depth: int) -> Predesign:
        action = self.rng.choice(sorted(self.NAMES))
        if scope and self.rng.random() < 0.6:
            head = Var(self.rng.choice(list(scope)))
        else:
            head = self.sum(scope, depth - 1, must=action)
        args = tuple(
            self.negative(scope, depth - 1) for _ in range(self.NAMES[action])
        )
        return Predesign(head, action, args)

    def negative(self, scope=(), depth: int = 3) -> Design:
        if scope and (depth <= 0 or self.rng.random() < 0.5):
            return Var(self.rng.choice(list(scope)))
        return self.sum(scope, depth)

    def sum(self, scope, depth: int, must: str | None = None) -> Sum:
        names = [n for n in sorted(self.NAMES) if self.rng.random() < 0.5]
        if must is not None and must not in names and self.rng.random() < 0.85:
            names = sorted(names + [must])
        branches = []
        for name in names:
            params = self._params(name)
            body = self.positive((*scope, *params), depth - 1)
            branches.append(Branch(name, params, body))
        if not self.pad_omega:
            return Sum.of(branches)
        for name in sorted(set(self.NAMES) - set(names)):
            branches.append(Branch(name, self._params(name), OMEGA))
        return Sum(tuple(sorted(branches, key=lambda b: b.name)))

    def _params(self, name: str) -> tuple[str, ...]:
        return tuple(
            f"{self.prefix}{next(self._count)}" for _ in range(self.NAMES[name])
        )


@pytest.fixture
def random_designs():
    """Factory of seeded random design generators."""
    return RandomDesigns
