"""Cherednik operators on trigonometric polynomials and the spectral map.

    D_xi(k) = d_xi - <rho(k), xi> + sum_{alpha > 0} k_alpha <alpha, xi> (1 - s_alpha) / (1 - e^{-alpha})

On e^lam the reflection part is a finite geometric sum because
<alpha^vee, lam> is an integer, so the operator maps C(P) to itself and can
be applied exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq as Q

from .rootsys import Multiplicity, Point, RootSystem, Weight, dot, epsilon, rho, unit
from .trigpoly import TrigPoly


def divided_difference(alpha: Weight, lam: Weight) -> TrigPoly:
    """(1 - s_alpha) / (1 - e^{-alpha}) applied to e^lam."""
    m, r = divmod(2 * dot(lam, alpha), dot(alpha, alpha))
    if r:
        raise ValueError(f"{lam} is not integral against {alpha}")
    terms = {}
    for w, c in _dd_terms(alpha, lam, m):
        terms[w] = c
    return TrigPoly(len(lam), terms)


def _dd_terms(alpha, lam, m):
    # m >= 1: e^lam + e^{lam-alpha} + ... + e^{lam-(m-1)alpha}
    # m <= -1: -(e^{lam+alpha} + ... + e^{lam+(-m)alpha})
    if m > 0:
        for j in range(m):
            yield tuple(l - j * a for l, a in zip(lam, alpha)), 1
    elif m < 0:
        for j in range(1, -m + 1):
            yield tuple(l + j * a for l, a in zip(lam, alpha)), -1


def tilde(desc: RootSystem, lam: Weight, kappa: Multiplicity) -> Point:
    """Spectral vector lam + 1/2 sum_{alpha>0} k_alpha eps(<alpha, lam>) alpha."""
    acc = [Q(v) for v in lam]
    for r, kk, _ in desc.weighted_roots(kappa):
        half = kk * epsilon(dot(r, lam)) / 2
        for i, a in enumerate(r):
            if a:
                acc[i] += half * a
    return tuple(acc)


@dataclass(frozen=True)
class CherednikOp:
    desc: RootSystem
    kappa: Multiplicity
    xi: Point
    rho: Point = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(Q(v) for v in self.xi))
        object.__setattr__(self, "rho", rho(self.desc, self.kappa))

    def __call__(self, f: TrigPoly) -> TrigPoly:
        return apply(self, f)


def apply(op: CherednikOp, f: TrigPoly) -> TrigPoly:
    """D_xi(k) f, exact."""
    xi = op.xi
    shift = dot(op.rho, xi)
    roots = [(r, kk * dot(r, xi), nn) for r, kk, nn in op.desc.weighted_roots(op.kappa)]
    roots = [t for t in roots if t[1]]
    out: dict = {}
    for lam, c in f.terms.items():
        v = (dot(lam, xi) - shift) * c
        if v:
            out[lam] = out.get(lam, 0) + v
        for r, weight, nn in roots:
            m = 2 * dot(lam, r) // nn
            if m:
                wc = weight * c
                for w, sgn in _dd_terms(r, lam, m):
                    out[w] = out.get(w, 0) + (wc if sgn > 0 else -wc)
    return TrigPoly._raw(f.rank, {w: c for w, c in out.items() if c})


def apply_coordinates(desc: RootSystem, kappa: Multiplicity, f: TrigPoly) -> list[TrigPoly]:
    """[D_{e_1} f, ..., D_{e_n} f] sharing the divided-difference expansions."""
    n = desc.rank
    r_ = rho(desc, kappa)
    roots = desc.weighted_roots(kappa)
    outs = [dict() for _ in range(n)]
    for lam, c in f.terms.items():
        for i in range(n):
            v = (lam[i] - r_[i]) * c
            if v:
                outs[i][lam] = outs[i].get(lam, 0) + v
        for r, kk, nn in roots:
            m = 2 * dot(lam, r) // nn
            if not m:
                continue
            kc = kk * c
            coords = [(i, kc * a) for i, a in enumerate(r) if a]
            for w, sgn in _dd_terms(r, lam, m):
                for i, wc in coords:
                    d = outs[i]
                    d[w] = d.get(w, 0) + (wc if sgn > 0 else -wc)
    return [TrigPoly._raw(n, {w: c for w, c in o.items() if c}) for o in outs]


def check_eigen(desc: RootSystem, lam: Weight, kappa: Multiplicity, E: TrigPoly) -> bool:
    """D_{e_i} E = tilde(lam)_i E exactly for every coordinate direction."""
    if not E:
        raise ValueError("eigen check on the zero polynomial")
    spec = tilde(desc, lam, kappa)
    for i, image in enumerate(apply_coordinates(desc, kappa, E)):
        if image != E.scale(spec[i]):
            return False
    return True


def coordinate_op(desc: RootSystem, kappa: Multiplicity, i: int) -> CherednikOp:
    return CherednikOp(desc, kappa, unit(desc.rank, i))


def partial(xi: Sequence, f: TrigPoly) -> TrigPoly:
    """Directional derivative d_xi on C(P)."""
    xi = tuple(Q(v) for v in xi)
    return TrigPoly(f.rank, {lam: dot(lam, xi) * c for lam, c in f.terms.items()})
