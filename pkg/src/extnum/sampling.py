"""Random members of neutrices, external numbers, vectors and matrices.

Samples are exact :class:`NSReal` values.  Exponents are drawn close to the
valuation threshold of the neutrix (``q + 1/k`` for ``k`` in ``1, 2, 4, 8``)
so that strict and non-strict membership boundaries are exercised.  Every
sample is re-checked for membership before it is returned.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .external import ExternalNumber
from .matrix import FlexMatrix, FlexVector
from .neutrix import Base, Neutrix
from .nsreal import NSReal, ZERO

__all__ = ["SampleOracle", "PROBE_DENOMINATORS"]

PROBE_DENOMINATORS = (1, 2, 4, 8)


class SampleOracle:
    """Draws verified members using the given random source."""

    def __init__(self, rng: random.Random, denominators=PROBE_DENOMINATORS, zero_weight: float = 0.1):
        self.rng = rng
        self.denominators = tuple(denominators)
        self.zero_weight = zero_weight

    def coefficient(self) -> Fraction:
        rng = self.rng
        return Fraction(rng.choice((-1, 1)) * rng.randint(1, 9), rng.randint(1, 4))

    def _exponent(self, n: Neutrix) -> Fraction:
        rng = self.rng
        if n.is_line:
            return Fraction(rng.randint(-3, 2))
        if n.base is Base.POUND and rng.random() < 0.4:
            return n.q
        if rng.random() < 0.2:
            return n.q + rng.randint(1, 3)
        return n.q + Fraction(1, rng.choice(self.denominators))

    def member(self, n: Neutrix) -> NSReal:
        if n.is_zero or self.rng.random() < self.zero_weight:
            return ZERO
        e = self._exponent(n)
        x = NSReal.monomial(self.coefficient(), e)
        if self.rng.random() < 0.3:
            x = x + NSReal.monomial(self.coefficient(), e + Fraction(1, self.rng.choice(self.denominators)))
        if not n.contains(x):
            raise RuntimeError(f"sampler produced {x}, not a member of {n}")
        return x

    def sample(self, x: ExternalNumber) -> NSReal:
        value = x.rep + self.member(x.neut)
        if not x.contains(value):
            raise RuntimeError(f"sampler produced {value}, not a member of {x}")
        return value

    def sample_vector(self, v: FlexVector) -> list[NSReal]:
        return [self.sample(x) for x in v]

    def sample_matrix(self, a: FlexMatrix) -> list[list[NSReal]]:
        return [[self.sample(x) for x in row] for row in a.rows]
