"""The explicit nowhere-vanishing equivariant section over configuration spaces.

For a configuration of |T| >= 2 pairwise distinct points in R^m, taking the
i-th coordinate of every point and subtracting the mean gives m vectors in
the reduced standard representation (each sums to zero).  Distinct points
cannot agree in every coordinate, so the concatenated value is never zero,
and the construction visibly commutes with relabelling the points.

Arithmetic is exact rational by default; a floating mode exists for large
sweeps and carries an explicit 1e-12 tolerance contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rng import CounterRng

FLOAT_EPS = 1e-12


@dataclass(frozen=True)
class Configuration:
    points: tuple  # |T| tuples of m coordinates (Fraction or float)
    exact: bool = True

    def __post_init__(self):
        if len(self.points) < 1:
            raise ValueError("empty configuration")
        m = len(self.points[0])
        if any(len(pt) != m for pt in self.points):
            raise ValueError("points of mixed dimension")
        for i in range(len(self.points)):
            for j in range(i + 1, len(self.points)):
                if self._coincide(self.points[i], self.points[j]):
                    raise ValueError(f"points {i} and {j} coincide")

    def _coincide(self, a, b):
        if self.exact:
            return all(x == y for x, y in zip(a, b))
        return all(abs(x - y) <= FLOAT_EPS for x, y in zip(a, b))

    @property
    def m(self) -> int:
        return len(self.points[0])

    @property
    def size(self) -> int:
        return len(self.points)

    @staticmethod
    def from_rational(rows) -> "Configuration":
        return Configuration(tuple(tuple(Fraction(x) for x in pt) for pt in rows), exact=True)

    def permuted(self, sigma: tuple) -> "Configuration":
        """Point i moves to slot sigma[i]."""
        pts = [None] * self.size
        for i, pt in enumerate(self.points):
            pts[sigma[i]] = pt
        return Configuration(tuple(pts), exact=self.exact)


@dataclass(frozen=True)
class SectionValue:
    components: tuple  # m tuples, each of length |T|, each summing to zero
    exact: bool = True

    def __post_init__(self):
        t = len(self.components[0]) if self.components else 0
        for comp in self.components:
            total = sum(comp)
            if self.exact:
                if total != 0:
                    raise ValueError("component does not sum to zero")
            elif abs(total) > FLOAT_EPS * max(t, 1):
                raise ValueError("component sum exceeds the float tolerance")

    def is_zero(self) -> bool:
        if self.exact:
            return all(x == 0 for comp in self.components for x in comp)
        return all(abs(x) <= FLOAT_EPS for comp in self.components for x in comp)

    def norm_squared(self):
        return sum(x * x for comp in self.components for x in comp)

    def permuted(self, sigma: tuple) -> "SectionValue":
        comps = []
        for comp in self.components:
            out = [None] * len(comp)
            for i, x in enumerate(comp):
                out[sigma[i]] = x
            comps.append(tuple(out))
        return SectionValue(tuple(comps), exact=self.exact)


def section_eval(c: Configuration) -> SectionValue:
    """Coordinatewise mean-centering; rejects configurations of fewer than two
    points (the construction concerns point sets of cardinality at least two)."""
    if c.size < 2:
        raise ValueError("configuration must contain at least two points")
    t = c.size
    comps = []
    for axis in range(c.m):
        coords = [pt[axis] for pt in c.points]
        mean = sum(coords) / t if not c.exact else Fraction(sum(coords), t)
        comps.append(tuple(x - mean for x in coords))
    value = SectionValue(tuple(comps), exact=c.exact)
    if value.is_zero():
        raise AssertionError("section vanished on a configuration of distinct points")
    return value


@dataclass(frozen=True)
class EquivarianceReport:
    sigma: tuple
    equal: bool
    lhs: tuple
    rhs: tuple

    def to_json(self):
        return {"sigma": list(self.sigma), "equal": self.equal}


def equivariance_test(c: Configuration, sigma: tuple) -> EquivarianceReport:
    """section(sigma . c) == sigma . section(c), exact in rational mode."""
    lhs = section_eval(c.permuted(sigma))
    rhs = section_eval(c).permuted(sigma)
    if c.exact:
        equal = lhs.components == rhs.components
    else:
        equal = all(abs(x - y) <= FLOAT_EPS
                    for ca, cb in zip(lhs.components, rhs.components)
                    for x, y in zip(ca, cb))
    return EquivarianceReport(sigma, equal, lhs.components, rhs.components)


@dataclass(frozen=True)
class SectionCertificate:
    m: int
    t_size: int
    samples: int
    seed: int
    failures: int
    min_norm_squared_positive: bool
    copies_of_reduced_rep: int
    scaling_family: str
    forgetful_note: str

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.min_norm_squared_positive

    def to_json(self):
        return {"m": self.m, "t": self.t_size, "samples": self.samples,
                "seed": self.seed, "failures": self.failures,
                "min_norm_squared_positive": self.min_norm_squared_positive,
                "copies_of_reduced_rep": self.copies_of_reduced_rep,
                "scaling_family": self.scaling_family,
                "forgetful_precomposition": self.forgetful_note,
                "pass": self.passed}


def random_configuration(rng: CounterRng, m: int, t_size: int,
                         exact: bool = True) -> Configuration:
    while True:
        if exact:
            pts = tuple(tuple(rng.fraction(10 ** 6, 1000) for _ in range(m))
                        for _ in range(t_size))
        else:
            # order-one coordinates keep rounding inside the absolute tolerance
            pts = tuple(tuple(float(rng.fraction(1000, 1)) / 1000.0 for _ in range(m))
                        for _ in range(t_size))
        try:
            return Configuration(pts, exact=exact)
        except ValueError:
            continue  # coincidence; with 64-bit draws this is essentially unreachable


def nullhomotopy_certificate(m: int, t_size: int = 2, samples: int = 1000,
                             seed: int = 0, exact: bool = True) -> SectionCertificate:
    """Sampled nonvanishing report: as many section copies as the ambient
    dimension suffice, the homotopy being scalar inflation of the section."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if t_size < 2:
        raise ValueError("t_size must be >= 2")
    rng = CounterRng(seed)
    failures = 0
    min_norm = None
    for _ in range(samples):
        cfg = random_configuration(rng, m, t_size, exact=exact)
        value = section_eval(cfg)
        if value.is_zero():
            failures += 1
        nsq = value.norm_squared()
        if min_norm is None or nsq < min_norm:
            min_norm = nsq
    return SectionCertificate(
        m, t_size, samples, seed, failures,
        min_norm is not None and min_norm > 0,
        copies_of_reduced_rep=m,
        scaling_family="t * f for t in [0, infinity]",
        forgetful_note="sections for subsets pull back along forgetting points")
