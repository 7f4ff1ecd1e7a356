"""Non-symmetric and symmetric Jack polynomials (index alpha = 1/k).

Built from E_0 = 1 with the Knop-Sahi raising operator

    Phi f(x) = x_n f(x_n, x_1, ..., x_{n-1}),   Phi eta = (eta_2, ..., eta_n, eta_1 + 1)

and the exchange step  E_{s_i eta} = (s_i + k / (bar_{i+1} - bar_i)) E_eta
for eta_i < eta_{i+1}.  Polynomials are TrigPoly objects with nonnegative
exponents, read as ordinary polynomials in x_1..x_n.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from gmpy2 import mpq as Q

from .trigpoly import TrigPoly


class JackError(ValueError):
    pass


@dataclass(frozen=True)
class JackPolynomial:
    eta: tuple[int, ...]
    k: object
    poly: TrigPoly

    def to_dict(self) -> dict:
        d = self.poly.to_dict()
        d["kind"] = "jack"
        d["eta"] = list(self.eta)
        d["k"] = str(Q(self.k))
        return d


def _check_k(k):
    k = Q(k)
    if k < 0:
        raise JackError("negative k is not supported")
    return k


def eta_bar(eta: Sequence[int], k) -> tuple:
    """bar_i = eta_i - k #{j < i: eta_j >= eta_i} - k #{j > i: eta_j > eta_i}."""
    k = Q(k)
    out = []
    for i, e in enumerate(eta):
        before = sum(1 for j in range(i) if eta[j] >= e)
        after = sum(1 for j in range(i + 1, len(eta)) if eta[j] > e)
        out.append(e - k * (before + after))
    return tuple(out)


def phi_index(eta: Sequence[int]) -> tuple[int, ...]:
    return tuple(eta[1:]) + (eta[0] + 1,)


def phi_poly(f: TrigPoly) -> TrigPoly:
    # x^a -> x^{(a_2, ..., a_n, a_1 + 1)}
    return f.map_exponents(lambda a: tuple(a[1:]) + (a[0] + 1,))


def swap_poly(f: TrigPoly, i: int) -> TrigPoly:
    """Exchange x_i and x_{i+1} (1-based i)."""
    def fn(a):
        a = list(a)
        a[i - 1], a[i] = a[i], a[i - 1]
        return tuple(a)
    return f.map_exponents(fn)


def raise_phi(P: JackPolynomial) -> JackPolynomial:
    return JackPolynomial(phi_index(P.eta), P.k, phi_poly(P.poly))


def exchange_constant(eta: Sequence[int], i: int, k):
    bar = eta_bar(eta, k)
    den = bar[i] - bar[i - 1]
    if den == 0:
        raise JackError(f"zero denominator exchanging at {i} for {tuple(eta)}")
    return Q(k) / den


def exchange_si(P: JackPolynomial, i: int) -> JackPolynomial:
    """E_{s_i eta} from E_eta; requires eta_i < eta_{i+1}."""
    eta = P.eta
    if not 1 <= i < len(eta):
        raise JackError(f"index {i} out of range")
    if not eta[i - 1] < eta[i]:
        raise JackError(f"exchange s_{i} needs eta_i < eta_(i+1), got {eta}")
    c = exchange_constant(eta, i, P.k)
    new = list(eta)
    new[i - 1], new[i] = new[i], new[i - 1]
    return JackPolynomial(tuple(new), P.k, swap_poly(P.poly, i) + P.poly.scale(c))


def _schedule_step(eta: tuple[int, ...], choose: Callable[[list[int]], int]):
    # undo one generator: an exchange if eta has a descent, else Phi
    descents = [i for i in range(1, len(eta)) if eta[i - 1] > eta[i]]
    if descents:
        i = choose(descents)
        prev = list(eta)
        prev[i - 1], prev[i] = prev[i], prev[i - 1]
        return ("s", i), tuple(prev)
    # weakly increasing and nonzero, so eta_n >= 1
    return ("phi", None), (eta[-1] - 1,) + tuple(eta[:-1])


def jack_schedule(eta: Sequence[int], choose: Callable[[list[int]], int] = min):
    """Generators (in application order from E_0) reaching eta."""
    eta = tuple(eta)
    ops = []
    while any(eta):
        op, eta = _schedule_step(eta, choose)
        ops.append(op)
    return list(reversed(ops))


def nonsym_jack(eta: Sequence[int], k, choose: Callable[[list[int]], int] | None = None) -> JackPolynomial:
    """E_eta^Jack(k; .) for a composition eta."""
    eta = tuple(int(v) for v in eta)
    if any(v < 0 for v in eta):
        raise JackError(f"{eta} is not a composition")
    k = _check_k(k)
    if choose is None or choose is min:
        return JackPolynomial(eta, k, _jack_memo(eta, k))
    P = JackPolynomial((0,) * len(eta), k, TrigPoly.constant(len(eta)))
    for op, i in jack_schedule(eta, choose):
        P = raise_phi(P) if op == "phi" else exchange_si(P, i)
    return P


@lru_cache(maxsize=20000)
def _jack_memo(eta: tuple[int, ...], k) -> TrigPoly:
    if not any(eta):
        return TrigPoly.constant(len(eta))
    (op, i), prev = _schedule_step(eta, min)
    P = JackPolynomial(prev, k, _jack_memo(prev, k))
    return (raise_phi(P) if op == "phi" else exchange_si(P, i)).poly


def composition_dominance_le(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Partial sums of mu never exceed those of lam, equal totals."""
    if sum(mu) != sum(lam):
        return False
    a = b = 0
    for x, y in zip(mu, lam):
        a += x
        b += y
        if a > b:
            return False
    return True


def jack_order(mu: Sequence[int], eta: Sequence[int]) -> bool:
    """mu ≼ eta: mu+ < eta+ in dominance, or same sort and mu <= eta."""
    mp = tuple(sorted(mu, reverse=True))
    ep = tuple(sorted(eta, reverse=True))
    if mp != ep:
        return composition_dominance_le(mp, ep)
    return composition_dominance_le(mu, eta)


# ---------------------------------------------------------------------------
# symmetric Jack polynomials


def symmetrize_variables(f: TrigPoly) -> TrigPoly:
    """(1/n!) sum_sigma f(sigma x)."""
    n = f.rank
    out = TrigPoly.zero(n)
    perms = list(permutations(range(n)))
    for p in perms:
        out = out + f.permute_variables(p)
    return out.scale(Q(1, len(perms)))


def is_partition(lam: Sequence[int]) -> bool:
    return all(v >= 0 for v in lam) and all(a >= b for a, b in zip(lam, lam[1:]))


def sym_jack(lam: Sequence[int], k, source: Sequence[int] | None = None) -> TrigPoly:
    """P_lam^Jack, monic in m_lam, by symmetrising E_source (default E_lam)."""
    lam = tuple(int(v) for v in lam)
    if not is_partition(lam):
        raise JackError(f"{lam} is not a partition")
    source = lam if source is None else tuple(source)
    if tuple(sorted(source, reverse=True)) != lam:
        raise JackError(f"{source} is not a rearrangement of {lam}")
    S = symmetrize_variables(nonsym_jack(source, k).poly)
    lead = S.coeff(lam)
    return S.scale(1 / lead)


def orbit_size(lam: Sequence[int]) -> int:
    """Number of distinct rearrangements of lam."""
    out = math.factorial(len(lam))
    for mult in Counter(lam).values():
        out //= math.factorial(mult)
    return out


def jack_at_one(lam: Sequence[int], k):
    """P_lam^Jack(k; 1, ..., 1) from the product formula.

        prod_{i<j} (lam_i - lam_j + (j - i) k)_k  prod_j Gamma(k) / Gamma(j k)

    Exact (a rational) for integer k, double precision through log-Gamma
    otherwise.  k = 0 is the limit value #(S_n lam).
    """
    lam = tuple(int(v) for v in lam)
    if not is_partition(lam):
        raise JackError(f"{lam} is not a partition")
    k = _check_k(k)
    n = len(lam)
    if k == 0:
        return Q(orbit_size(lam))
    if k.denominator == 1:
        kk = int(k)
        out = Q(1)
        for i in range(n):
            for j in range(i + 1, n):
                z = lam[i] - lam[j] + (j - i) * kk
                for t in range(kk):
                    out *= z + t
        for j in range(1, n + 1):
            # Gamma(k) / Gamma(jk) = 1 / ((k)(k+1)...(jk-1))
            for t in range(kk, j * kk):
                out /= t
        return out
    kf = float(k)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            z = lam[i] - lam[j] + (j - i) * kf
            total += math.lgamma(z + kf) - math.lgamma(z)
    for j in range(1, n + 1):
        total += math.lgamma(kf) - math.lgamma(j * kf)
    return math.exp(total)


def jack_at_one_is_exact(k) -> bool:
    return Q(k).denominator == 1
