"""Boundedness region C(rho(k)) + i a for the Cherednik kernel, and the
comparison constants c_lambda along reduced words."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq as Q

from .rootsys import (
    Multiplicity,
    Point,
    RootSystem,
    RootSystemError,
    dominant_rep,
    in_positive_cone,
    is_dominant,
    longest_word,
    pairing,
    reflect,
    rho,
)


@dataclass(frozen=True)
class SpectralParameter:
    re: Point
    im: Point

    def __post_init__(self):
        if len(self.re) != len(self.im):
            raise ValueError("real and imaginary parts have different ranks")
        object.__setattr__(self, "re", tuple(Q(v) for v in self.re))
        object.__setattr__(self, "im", tuple(Q(v) for v in self.im))

    @classmethod
    def real(cls, x: Sequence) -> "SpectralParameter":
        return cls(tuple(x), (0,) * len(x))


def in_convex_hull_of_orbit(desc: RootSystem, x: Sequence, kappa: Multiplicity) -> bool:
    """Is x in the convex hull of W rho(k)?

    x lies in the hull iff its dominant representative x_+ satisfies
    rho - x_+ in the real cone spanned by the simple roots.  Points with a
    component along the centre lie outside the span and are rejected by the
    coordinate solve.
    """
    if not kappa.nonnegative:
        raise RootSystemError("hull test needs k >= 0")
    x = tuple(Q(v) for v in x)
    if any(v for v, c in zip(x, desc.center_mask) if c):
        return False
    xp, _ = dominant_rep(desc, x)
    d = tuple(a - b for a, b in zip(rho(desc, kappa), xp))
    return in_positive_cone(desc, d, integral=False)


def is_bounded_spectral(desc: RootSystem, lam: SpectralParameter, kappa: Multiplicity) -> bool:
    return in_convex_hull_of_orbit(desc, lam.re, kappa)


def hf_constant(desc: RootSystem, lam: Sequence, kappa: Multiplicity, word: Sequence[int]):
    """prod_j (1 + k_{i_j} / <lam_(j), alpha_{i_j}^vee>) for w = s_{i_1} ... s_{i_r},

    where lam_(j) = s_{i_{j+1}} ... s_{i_r} lam.
    """
    lam = tuple(Q(v) for v in lam)
    word = tuple(word)
    out = Q(1)
    cur = lam
    for i in reversed(word):
        if not 1 <= i <= desc.n_simple:
            raise RootSystemError(f"letter {i} is not a simple reflection")
        a = desc.simple_roots[i - 1]
        p = pairing(cur, a)
        if p <= 0:
            raise RootSystemError(
                f"<lam_(j), alpha_{i}^vee> = {p} is not positive: word not reduced "
                "or lam not regular dominant")
        out *= 1 + desc.k(kappa, a) / p
        cur = reflect(a, cur)
    return out


def scaling_limit_check(desc: RootSystem, lam: Sequence, kappa: Multiplicity,
                        word: Sequence[int], ts: Sequence) -> list[tuple]:
    """[(t, c_{t lam})] for t in ts."""
    return [(Q(t), hf_constant(desc, [Q(t) * v for v in lam], kappa, word)) for t in ts]


def hj_constant(desc: RootSystem, kappa: Multiplicity):
    """The comparison constant at the dominant point rho(k) with a reduced
    word of the longest element."""
    r = rho(desc, kappa)
    if not is_dominant(desc, r):
        raise RootSystemError("rho(k) is not dominant")
    return hf_constant(desc, r, kappa, longest_word(desc))
