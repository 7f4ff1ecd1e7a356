"""The BC_n -> A_{n-1} degeneration k_1 + k_2 -> oo, k_1 / k_2 -> oo.

E_BC_infinity builds the limit polynomials with the limiting recursion
constants, and the identity checks compare them with Jack polynomials in
cosh^2(x/2).  convergence_table measures how far E^BC(kappa) still is from
the limit along a schedule of multiplicities.
"""
from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from gmpy2 import mpq as Q

from .hopoly import nonsym_E
from .jack import nonsym_jack
from .rootsys import Weight, descent_steps, epsilon, root_system
from .trigpoly import TrigPoly, act_s, substitute_cosh, symmetrize_signs


class LimitError(ValueError):
    pass


def limit_constant(i: int, k3, x: Sequence[int]):
    """c_i(oo; k_3; x), the limit of the BC_n recursion constant at x."""
    x = tuple(x)
    n = len(x)
    k3 = Q(k3)
    if i == 0:
        return Q(-epsilon(x[0]))
    if i == n:
        if x[-1] == 0:
            raise LimitError("s_n fixes x")
        return Q(epsilon(x[-1]))
    if not 0 < i < n:
        raise LimitError(f"index {i} out of range for rank {n}")
    a, b = i - 1, i  # 0-based positions of x_i and x_{i+1}
    if x[a] == x[b]:
        raise LimitError(f"s_{i} fixes x")
    if epsilon(x[a]) != epsilon(x[b]):
        return Q(0)

    def eps_pm(p, j):
        return epsilon(x[p] + x[j]) + epsilon(x[p] - x[j])

    def delta(j, p):
        return epsilon(x[j] + x[p]) - epsilon(x[j] - x[p])

    s = (sum(eps_pm(a, j) for j in range(a + 1, n))
         + sum(delta(j, a) for j in range(a))
         - sum(eps_pm(b, j) for j in range(b + 1, n))
         - sum(delta(j, b) for j in range(b)))
    den = x[a] - x[b] + k3 * s / 2
    if den == 0:
        raise LimitError(f"zero denominator in c_{i} at {x}")
    return k3 / den


def E_BC_infinity(lam: Sequence[int], k3) -> TrigPoly:
    """E_lam^BC(oo; k_3; .) via the limiting Sahi recursion from 1."""
    lam = tuple(int(v) for v in lam)
    k3 = Q(k3)
    if k3 < 0:
        raise LimitError("k_3 must be nonnegative")
    return _E_inf(lam, k3)


@lru_cache(maxsize=20000)
def _E_inf(lam: Weight, k3) -> TrigPoly:
    desc = root_system("BC", len(lam))
    steps = descent_steps(desc, lam)
    if not steps:
        return TrigPoly.monomial(lam)
    j = min(steps)
    mu = desc.s(j, lam)
    E = _E_inf(mu, k3)
    return act_s(desc, j, E) + E.scale(limit_constant(j, k3, mu))


def cosh_jack(eta: Sequence[int], k3) -> TrigPoly:
    """4^{|eta|} E_eta^Jack(k_3; cosh^2(x/2)) as a TrigPoly in x."""
    J = nonsym_jack(eta, k3).poly
    return substitute_cosh(J).scale(4 ** sum(eta))


def check_bcjack_identity(eta: Sequence[int], k3) -> bool:
    """E_{-eta}^BC(oo; k_3; x) == 4^{|eta|} E_eta^Jack(k_3; cosh^2(x/2))."""
    eta = tuple(int(v) for v in eta)
    if any(v < 0 for v in eta):
        raise LimitError(f"{eta} is not a composition")
    return E_BC_infinity(tuple(-v for v in eta), k3) == cosh_jack(eta, k3)


@dataclass(frozen=True)
class LambdaStar:
    """Data attached to a weight with positive entries at indices i_1 < ... < i_l.

    ``positive`` holds 1-based indices; ``sigma`` and ``sigma_star`` are
    0-based permutations p with (sigma x)_q = x_{p[q]}.
    """

    lam: Weight
    star: Weight
    double_star: Weight
    positive: tuple[int, ...]
    sigma: tuple[int, ...]
    sigma_star: tuple[int, ...]

    @property
    def ell(self) -> int:
        return len(self.positive)


def lambda_star(lam: Sequence[int]) -> LambdaStar:
    lam = tuple(int(v) for v in lam)
    pos = tuple(i for i, v in enumerate(lam) if v > 0)
    rest = tuple(i for i, v in enumerate(lam) if v <= 0)
    rev = tuple(reversed(pos))
    star = tuple(1 - lam[i] for i in rev) + tuple(lam[i] for i in rest)
    double_star = tuple(lam[i] for i in rest) + tuple(-lam[i] for i in rev)
    return LambdaStar(
        lam=lam,
        star=star,
        double_star=double_star,
        positive=tuple(i + 1 for i in pos),
        sigma=rev + rest,
        sigma_star=rest + rev,
    )


def _shift_factor(n: int, positive: Iterable[int]) -> TrigPoly:
    out = TrigPoly.constant(n)
    for i in positive:
        e = [0] * n
        e[i - 1] = 1
        out = out * (TrigPoly.monomial(e) + 1)
    return out


def mixed_sign_sides(lam: Sequence[int], k3) -> dict[str, tuple[TrigPoly, TrigPoly]]:
    """Left and right sides of the explicit formulas for E_lam^BC(oo; k_3).

    product:  E_lam = prod (e^{x_i} + 1) E_{lam*}(sigma x)
    jack:     E_lam = 4^{|lam|-l} prod (e^{x_i} + 1) E^Jack_{-lam*}(cosh^2(sigma x / 2))
    average:  sign average of E_lam = 4^{|lam|-l/2} prod cosh^2(x_i/2) E^Jack_{-lam*}(cosh^2(sigma x/2))
    average_star: sign average of E_lam = 4^{|lam|-l/2} E^Jack_{-lam**}(sigma* cosh^2(x/2))
    """
    ls = lambda_star(lam)
    n = len(ls.lam)
    ell = ls.ell
    size = sum(abs(v) for v in ls.lam)
    E = E_BC_infinity(ls.lam, k3)
    avg = symmetrize_signs(E)
    shift = _shift_factor(n, ls.positive)
    neg_star = tuple(-v for v in ls.star)
    jack_star = substitute_cosh(nonsym_jack(neg_star, k3).poly).permute_variables(ls.sigma)
    cosh_prod = substitute_cosh(TrigPoly.monomial(
        [1 if i + 1 in ls.positive else 0 for i in range(n)]))
    neg_dstar = tuple(-v for v in ls.double_star)
    jack_dstar = substitute_cosh(nonsym_jack(neg_dstar, k3).poly).permute_variables(ls.sigma_star)
    half_power = Q(2) ** (2 * size - ell)
    return {
        "product": (E, shift * E_BC_infinity(ls.star, k3).permute_variables(ls.sigma)),
        "jack": (E, shift * jack_star.scale(4 ** (size - ell))),
        "average": (avg, (cosh_prod * jack_star).scale(half_power)),
        "average_star": (avg, jack_dstar.scale(half_power)),
    }


def check_mixed_sign_identity(lam: Sequence[int], k3) -> bool:
    return all(a == b for a, b in mixed_sign_sides(lam, k3).values())


# ---------------------------------------------------------------------------
# numeric convergence


@dataclass(frozen=True)
class LimitSchedule:
    """(k_1, k_2) pairs with k_1 + k_2 and k_1 / k_2 both increasing."""

    points: tuple[tuple, ...]

    def __post_init__(self):
        pts = tuple((Q(a), Q(b)) for a, b in self.points)
        object.__setattr__(self, "points", pts)
        for k1, k2 in pts:
            if k1 <= 0 or k2 < 0:
                raise LimitError("schedule needs k_1 > 0 and k_2 >= 0")
        for (a1, a2), (b1, b2) in zip(pts, pts[1:]):
            if not a1 + a2 < b1 + b2:
                raise LimitError("k_1 + k_2 must increase along the schedule")
            ra = math.inf if a2 == 0 else a1 / a2
            rb = math.inf if b2 == 0 else b1 / b2
            if not (ra < rb or ra == rb == math.inf):
                raise LimitError("k_1 / k_2 must increase along the schedule")

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def default_schedule(ts: Sequence[int] = (10**2, 10**3, 10**4)) -> LimitSchedule:
    """k_1 = t, k_2 = round(sqrt t)."""
    return LimitSchedule(tuple((t, round(math.sqrt(t))) for t in ts))


def k2_zero_schedule(ts: Sequence[int] = (10, 10**2, 10**3, 10**4)) -> LimitSchedule:
    return LimitSchedule(tuple((t, 0) for t in ts))


def make_grid(n: int, lo=-2, hi=2, step=Q(1, 2)) -> list[tuple[float, ...]]:
    lo, hi, step = Q(lo), Q(hi), Q(step)
    if step <= 0:
        raise LimitError("grid step must be positive")
    count = int((hi - lo) / step)
    axis = [float(lo + j * step) for j in range(count + 1)]
    return list(itertools.product(axis, repeat=n))


@dataclass(frozen=True)
class ConvergenceRow:
    k1: object
    k2: object
    sup_error_poly: float
    sup_error_kernel: float


def limit_kernel(lam: Weight, k3) -> TrigPoly:
    """Normalised limit kernel.  For lam = -eta in -N_0^n this is the type A
    kernel at the lattice point, E_eta^Jack(cosh^2(x/2)) / E_eta^Jack(1)."""
    if all(v <= 0 for v in lam):
        eta = tuple(-v for v in lam)
        J = nonsym_jack(eta, k3).poly
        return substitute_cosh(J).scale(1 / J.eval_at_zero())
    E = E_BC_infinity(lam, k3)
    return E.scale(1 / E.eval_at_zero())


def convergence_table(lam: Sequence[int], k3, schedule: LimitSchedule,
                      grid: Sequence[Sequence[float]]) -> list[ConvergenceRow]:
    lam = tuple(int(v) for v in lam)
    n = len(lam)
    for x in grid:
        if len(x) != n or any(abs(v) > 20 for v in x):
            raise LimitError("grid points must have rank n and |x_i| <= 20")
    desc = root_system("BC", n)
    E_inf = E_BC_infinity(lam, k3)
    G_inf = limit_kernel(lam, k3)
    inf_vals = [E_inf.eval_real(x) for x in grid]
    ginf_vals = [G_inf.eval_real(x) for x in grid]
    rows = []
    for k1, k2 in schedule:
        kappa = desc.multiplicity([k1, k2, k3])
        E = nonsym_E(desc, lam, kappa).poly
        z = E.eval_at_zero()
        G = E.scale(1 / z)
        err_p = max((abs(E.eval_real(x) - v) for x, v in zip(grid, inf_vals)), default=0.0)
        err_g = max((abs(G.eval_real(x) - v) for x, v in zip(grid, ginf_vals)), default=0.0)
        rows.append(ConvergenceRow(k1, k2, err_p, err_g))
    return rows


def exact_error_at_zero(lam: Sequence[int], k3, k1, k2):
    """|E^BC(kappa; 0) - E^BC(oo; 0)| exactly."""
    lam = tuple(int(v) for v in lam)
    desc = root_system("BC", len(lam))
    E = nonsym_E(desc, lam, desc.multiplicity([k1, k2, k3])).poly
    return abs(E.eval_at_zero() - E_BC_infinity(lam, k3).eval_at_zero())


def table_to_csv(rows: Sequence[ConvergenceRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k1", "k2", "sup_error_poly", "sup_error_kernel"])
    for r in rows:
        w.writerow([format(float(v), ".17g")
                    for v in (r.k1, r.k2, r.sup_error_poly, r.sup_error_kernel)])
    return buf.getvalue()


def symmetric_limit_errors(lam: Sequence[int], k3, schedule: LimitSchedule,
                           grid: Sequence[Sequence[float]]) -> list[float]:
    """sup over the grid of |P^BC_lam(kappa; x) / P^BC_lam(kappa; 0) - Jack side|.

    The Jack side is P^Jack_lam(k_3; cosh^2(x/2)) / P^Jack_lam(k_3; 1).
    """
    from .hopoly import sym_P
    from .jack import sym_jack

    lam = tuple(int(v) for v in lam)
    desc = root_system("BC", len(lam))
    PJ = substitute_cosh(sym_jack(lam, k3))
    target = PJ.scale(1 / PJ.eval_at_zero())
    tvals = [target.eval_real(x) for x in grid]
    out = []
    for k1, k2 in schedule:
        P = sym_P(desc, lam, desc.multiplicity([k1, k2, k3]))
        P = P.scale(1 / P.eval_at_zero())
        out.append(max(abs(P.eval_real(x) - v) for x, v in zip(grid, tvals)))
    return out
