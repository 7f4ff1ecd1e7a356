"""Non-symmetric and symmetric Heckman-Opdam polynomials at rational multiplicity.

E_lam is built from the minuscule representative by intertwiners:

    E_{s_j mu} = (s_j + c_j(k; mu)) E_mu

along an affine descent of lam, with c_j = k_j / <alpha_j^vee, mu~> for
j >= 1 and c_0 = k_0 / (1 - <beta^vee, mu~>).  Every step used here satisfies
the positivity condition under which the intertwiner needs no rescaling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq as Q

from .cherednik import check_eigen, tilde
from .rootsys import (
    Chooser,
    Multiplicity,
    Point,
    RootSystem,
    RootSystemError,
    Weight,
    affine_s0,
    descent_path,
    descent_steps,
    dominant_weight,
    is_dominant,
    pairing,
    reflect,
    rho,
    weyl_orbit,
)
from .trigpoly import TrigPoly, act_s


class DegenerateError(ValueError):
    """A recursion constant or normalisation would divide by zero."""


@dataclass(frozen=True)
class HOPolynomial:
    weight: Weight
    kappa: Multiplicity
    poly: TrigPoly
    spectral: Point

    def to_dict(self) -> dict:
        d = self.poly.to_dict()
        d["lambda"] = list(self.weight)
        d["kappa"] = self.kappa.as_strings()
        d["spectral"] = [str(Q(v)) for v in self.spectral]
        return d


def recursion_constant(desc: RootSystem, i: int, lam: Weight, kappa: Multiplicity):
    """c_i(k; lam) of the intertwiner (s_i + c_i) acting on E_lam."""
    lam = tuple(lam)
    if desc.s(i, lam) == lam:
        raise DegenerateError(f"s_{i} fixes {lam}")
    spec = tilde(desc, lam, kappa)
    k_i = desc.simple_k(kappa, i)
    if i == 0:
        den = 1 - pairing(spec, desc.beta())
    else:
        den = pairing(spec, desc.simple_roots[i - 1])
    if den == 0:
        raise DegenerateError(f"zero denominator in c_{i} at {lam}")
    return k_i / den


def nonsym_E(desc: RootSystem, lam: Sequence[int], kappa: Multiplicity,
             choose: Chooser | None = None) -> HOPolynomial:
    """E_lam(k; .) via the Sahi recursion.

    ``choose`` picks the letter among the valid descent steps at each
    weight; the default (smallest index) result is memoised.
    """
    lam = tuple(int(v) for v in lam)
    if len(lam) != desc.rank:
        raise RootSystemError(f"weight {lam} does not have rank {desc.rank}")
    if not desc.irreducible:
        poly = _product_E(desc, lam, kappa)
    elif choose is None or choose is min:
        poly = _E_memo(desc, kappa, lam)
    else:
        poly = _E_along(desc, kappa, lam, choose)
    return HOPolynomial(lam, kappa, poly, tilde(desc, lam, kappa))


def _intertwine(desc, kappa, j, mu, E):
    c = recursion_constant(desc, j, mu, kappa)
    return act_s(desc, j, E) + E.scale(c)


@lru_cache(maxsize=50000)
def _E_memo(desc: RootSystem, kappa: Multiplicity, lam: Weight) -> TrigPoly:
    steps = descent_steps(desc, lam)
    if not steps:
        return TrigPoly.monomial(lam)
    j = min(steps)
    mu = desc.s(j, lam)
    return _intertwine(desc, kappa, j, mu, _E_memo(desc, kappa, mu))


def _E_along(desc, kappa, lam, choose) -> TrigPoly:
    path, bottom = descent_path(desc, lam, choose)
    E = TrigPoly.monomial(bottom)
    mu = bottom
    for j in reversed(path):
        E = _intertwine(desc, kappa, j, mu, E)
        mu = desc.s(j, mu)
    return E


def factor_multiplicity(desc: RootSystem, kappa: Multiplicity, idx: int) -> Multiplicity:
    fac = desc.factors[idx]
    return fac.multiplicity(kappa[f"{idx}.{lab}"] for lab in fac.labels)


def _product_E(desc: RootSystem, lam: Weight, kappa: Multiplicity) -> TrigPoly:
    # E factorises over the orthogonal components; the centre carries e^{lam_c}
    n = desc.rank
    center = tuple(v if m else 0 for v, m in zip(lam, desc.center_mask))
    out = TrigPoly.monomial(center)
    comps = [c for c in desc.components if c.family != "center"]
    for idx, (fac, comp) in enumerate(zip(desc.factors, comps)):
        sub = nonsym_E(fac, lam[comp.start:comp.stop], factor_multiplicity(desc, kappa, idx))
        out = out * sub.poly.embed(n, comp.start)
    return out


# ---------------------------------------------------------------------------
# symmetric polynomials


def orbit_sum(desc: RootSystem, mu: Weight) -> TrigPoly:
    """m_mu = sum of e^eta over the W-orbit of mu."""
    return TrigPoly(desc.rank, {tuple(int(v) for v in eta): 1 for eta in weyl_orbit(desc, mu)})


def symmetrize(desc: RootSystem, f: TrigPoly) -> TrigPoly:
    """(1/#W) sum_{w in W} w.f, grouped by orbits.

    sum_w e^{w mu} = (#W / #W.mu) m_mu, so no group elements are enumerated.
    """
    groups: dict = {}
    for mu, c in f.terms.items():
        dom = dominant_weight(desc, mu)
        groups[dom] = groups.get(dom, 0) + c
    out = TrigPoly.zero(desc.rank)
    for dom, c in groups.items():
        if c:
            m = orbit_sum(desc, dom)
            out = out + m.scale(Q(c) / len(m))
    return out


def sym_P(desc: RootSystem, lam: Sequence[int], kappa: Multiplicity) -> TrigPoly:
    """P_lam = #(W.lam)/#W sum_w E_lam(k; w .), monic in m_lam."""
    lam = tuple(int(v) for v in lam)
    if not is_dominant(desc, lam):
        raise RootSystemError(f"{lam} is not dominant")
    E = nonsym_E(desc, lam, kappa).poly
    return symmetrize(desc, E).scale(len(weyl_orbit(desc, lam)))


def P_at_zero(desc: RootSystem, lam: Sequence[int], kappa: Multiplicity):
    """P_lam(k; 0) from the Harish-Chandra c-function product, exactly.

    Each positive root contributes
        Gamma(a + u) Gamma(a + m + v) / (Gamma(a + v) Gamma(a + m + u))
    with a = <rho, alpha^vee>, m = <lam, alpha^vee>, u = k_{alpha/2}/2 and
    v = u + k_alpha.  Since m is a nonnegative integer this is the ratio of
    Pochhammer symbols (a + v)_m / (a + u)_m.

    When some k vanish a factor can read 0/0.  P_lam(k; 0) is regular for
    k >= 0, so every linear factor is taken along k + t(1, ..., 1) and the
    value is the t -> 0 limit of the whole product.
    """
    lam = tuple(int(v) for v in lam)
    if not is_dominant(desc, lam):
        raise RootSystemError(f"{lam} is not dominant")
    one = desc.multiplicity([1] * len(desc.labels))
    r0, r1 = rho(desc, kappa), rho(desc, one)
    order, lead = 0, Q(1)

    def factor(c0, c1, sign):
        # multiply (sign=1) or divide (sign=-1) by c0 + c1 t
        nonlocal order, lead
        if c0 == 0:
            if c1 == 0:
                raise DegenerateError("identically vanishing Pochhammer factor")
            order += sign
            c0 = c1
        lead = lead * c0 if sign > 0 else lead / c0

    for root, lab in desc.positive_roots:
        m = pairing(lam, root)
        if m == 0:
            continue
        a0, a1 = pairing(r0, root), pairing(r1, root)
        u0, u1 = desc.half_root_k(kappa, root) / 2, desc.half_root_k(one, root) / 2
        k0 = kappa[lab]
        for j in range(int(m)):
            factor(a0 + u0 + k0 + j, a1 + u1 + 1, 1)
            factor(a0 + u0 + j, a1 + u1, -1)
    if order < 0:
        raise DegenerateError(f"Gamma pole at {lam}")
    return lead if order == 0 else Q(0)


def P_at_zero_gamma(desc: RootSystem, lam: Sequence[int], kappa: Multiplicity) -> float:
    """Same product through floating log-Gamma; display only."""
    r_ = rho(desc, kappa)
    lam = tuple(lam)
    total = 0.0
    for root, lab in desc.positive_roots:
        k_a = float(kappa[lab])
        if k_a == 0:
            continue
        a = float(pairing(r_, root))
        b = float(pairing(tuple(x + y for x, y in zip(lam, r_)), root))
        u = float(desc.half_root_k(kappa, root)) / 2
        v = u + k_a
        total += (math.lgamma(a + u) + math.lgamma(b + v)
                  - math.lgamma(a + v) - math.lgamma(b + u))
    return math.exp(total)


# ---------------------------------------------------------------------------
# Cherednik kernel at lattice spectral points


def kernel_at_spectral(desc: RootSystem, lam: Sequence[int], kappa: Multiplicity) -> TrigPoly:
    """G_k(lam~, .) = E_lam / E_lam(0)."""
    E = nonsym_E(desc, lam, kappa).poly
    z = E.eval_at_zero()
    if z == 0:
        raise DegenerateError(f"E_{tuple(lam)}(0) = 0")
    return E.scale(1 / z)


def spectral_image(desc: RootSystem, i: int, spec: Point) -> Point:
    """Action of s_i (i >= 1) or s_0 on a spectral point."""
    if i == 0:
        return affine_s0(desc, spec)
    return reflect(desc.simple_roots[i - 1], spec)


def kernel_recurrence_sides(desc: RootSystem, lam: Sequence[int], i: int, kappa: Multiplicity):
    """Both sides of the kernel recurrence at the spectral point lam~.

    (1 + c) G(s_i lam~, .)  and  (s_i + c) G(lam~, .),  with c the
    recursion constant; s_0 acts as e^beta s_beta.  Raises DegenerateError
    when the pair is not admissible.
    """
    lam = tuple(int(v) for v in lam)
    if not desc.irreducible:
        raise RootSystemError("kernel recurrence is checked on irreducible systems")
    mu = desc.s(i, lam)
    if mu == lam:
        raise DegenerateError(f"s_{i} fixes {lam}")
    spec = tilde(desc, lam, kappa)
    if spectral_image(desc, i, spec) != tilde(desc, mu, kappa):
        raise DegenerateError(f"s_{i} {lam}~ is not the spectral point of {mu}")
    c = recursion_constant(desc, i, lam, kappa)
    G_lam = kernel_at_spectral(desc, lam, kappa)
    G_mu = kernel_at_spectral(desc, mu, kappa)
    return G_mu.scale(1 + c), act_s(desc, i, G_lam) + G_lam.scale(c)


def check_kernel_recurrence(desc: RootSystem, lam: Sequence[int], i: int, kappa: Multiplicity) -> bool:
    lhs, rhs = kernel_recurrence_sides(desc, lam, i, kappa)
    return lhs == rhs


def is_valid_E(desc: RootSystem, E: HOPolynomial) -> bool:
    """Leading term 1 at e^lam and the joint eigen-equation."""
    return E.poly.coeff(E.weight) == 1 and check_eigen(desc, E.weight, E.kappa, E.poly)
