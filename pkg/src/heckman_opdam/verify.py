"""Exhaustive and randomized verification suites behind `verify`.

Each suite returns a report dict
    {"suite", "checked", "failed", "first_counterexample"}
and cases are evaluated in a thread pool capped by CHEREDNIK_THREADS.  The
report only depends on the case order, never on completion order.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq as Q

from .cherednik import CherednikOp, check_eigen
from .hopoly import DegenerateError, kernel_recurrence_sides, nonsym_E
from .limits import check_bcjack_identity, check_mixed_sign_identity
from .rootsys import (
    Multiplicity,
    RootSystem,
    dot,
    reflect,
    rho,
    root_system,
    tri_order,
    weyl_orbit,
)
from .spectra import in_convex_hull_of_orbit
from .trigpoly import TrigPoly, act_s, act_s0

SUITES = ("eigen", "hecke", "triangular", "recurrence", "bcjack", "hull")

# sample multiplicities (k1, k2, k3); a family keeps the labels it has
KAPPA_SAMPLES = (
    (1, 0, 0),
    (1, 1, 1),
    (Q(1, 2), Q(1, 3), 2),
    (0, 0, 1),
    (2, 0, Q(1, 2)),
)
K3_SAMPLES = (0, Q(1, 2), 1, 2)


class SuiteError(ValueError):
    pass


def restrict_kappa(desc: RootSystem, sample: Sequence) -> Multiplicity:
    full = dict(zip(("k1", "k2", "k3"), sample))
    return desc.multiplicity(full[lab] for lab in desc.labels)


def thread_count() -> int:
    raw = os.environ.get("CHEREDNIK_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise SuiteError(f"CHEREDNIK_THREADS must be an integer, got {raw!r}")
    return min(4, os.cpu_count() or 1)


def _run(name: str, cases: Sequence, check: Callable) -> dict:
    """check(case) returns True (pass), False (fail) or None (not applicable)."""
    workers = thread_count()
    if workers > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, cases))
    else:
        results = [check(c) for c in cases]
    checked = failed = 0
    first = None
    for case, ok in zip(cases, results):
        if ok is None:
            continue
        checked += 1
        if not ok:
            failed += 1
            if first is None:
                first = _jsonable(case)
    return {"suite": name, "checked": checked, "failed": failed,
            "first_counterexample": first}


def _jsonable(x):
    if isinstance(x, Multiplicity):
        return x.as_strings()
    if isinstance(x, TrigPoly):
        return x.to_dict()
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    if isinstance(x, int) or isinstance(x, str):
        return x
    return str(x)


def box(n: int, bound: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(-bound, bound + 1), repeat=n))


def _kappas(desc, kappas):
    if kappas is None:
        return [restrict_kappa(desc, s) for s in KAPPA_SAMPLES]
    return list(kappas)


# ---------------------------------------------------------------------------


def eigen_suite(desc: RootSystem, kappas: Iterable[Multiplicity] | None = None, bound: int = 3) -> dict:
    cases = [(lam, k) for k in _kappas(desc, kappas) for lam in box(desc.rank, bound)]

    def check(case):
        lam, k = case
        return check_eigen(desc, lam, k, nonsym_E(desc, lam, k).poly)

    return _run("eigen", cases, check)


def triangular_suite(desc: RootSystem, kappas: Iterable[Multiplicity] | None = None, bound: int = 3) -> dict:
    cases = [(lam, k) for k in _kappas(desc, kappas) for lam in box(desc.rank, bound)]

    def check(case):
        lam, k = case
        E = nonsym_E(desc, lam, k).poly
        if E.coeff(lam) != 1:
            return False
        return all(c >= 0 and tri_order(desc, mu, lam) for mu, c in E.terms.items())

    return _run("triangular", cases, check)


def recurrence_suite(desc: RootSystem, kappas: Iterable[Multiplicity] | None = None, bound: int = 3) -> dict:
    letters = range(0 if desc.highest_short_root is not None else 1, desc.n_simple + 1)
    cases = [(lam, i, k) for k in _kappas(desc, kappas) for lam in box(desc.rank, bound)
             for i in letters]

    def check(case):
        lam, i, k = case
        try:
            lhs, rhs = kernel_recurrence_sides(desc, lam, i, k)
        except DegenerateError:
            return None
        return lhs == rhs

    return _run("recurrence", cases, check)


def random_trigpoly(rng: random.Random, n: int, terms: int = 5, bound: int = 3) -> TrigPoly:
    out = {}
    for _ in range(terms):
        w = tuple(rng.randint(-bound, bound) for _ in range(n))
        out[w] = Q(rng.randint(-9, 9), rng.randint(1, 5))
    return TrigPoly(n, out)


def hecke_sides(desc: RootSystem, kappa: Multiplicity, j: int, xi, f: TrigPoly):
    """Both sides of the Hecke relations applied to f.

    j >= 1:  s_j D_xi - D_{s_j xi} s_j = -k_j <xi, alpha_j>
    j = 0:   s_0 (D_{s_beta xi} + <xi, beta>) - D_xi s_0 = -k_0 <xi, beta>
    """
    if j == 0:
        b = desc.beta()
        lhs = (act_s0(desc, CherednikOp(desc, kappa, reflect(b, xi))(f) + f.scale(dot(xi, b)))
               - CherednikOp(desc, kappa, xi)(act_s0(desc, f)))
        return lhs, f.scale(-desc.simple_k(kappa, 0) * dot(xi, b))
    a = desc.simple_roots[j - 1]
    lhs = (act_s(desc, j, CherednikOp(desc, kappa, xi)(f))
           - CherednikOp(desc, kappa, reflect(a, xi))(act_s(desc, j, f)))
    return lhs, f.scale(-desc.simple_k(kappa, j) * dot(xi, a))


def hecke_suite(desc: RootSystem, kappas: Iterable[Multiplicity] | None = None,
                samples: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    n = desc.rank
    letters = range(0 if desc.highest_short_root is not None else 1, desc.n_simple + 1)
    cases = []
    for k in _kappas(desc, kappas):
        for _ in range(samples):
            f = random_trigpoly(rng, n)
            xi = tuple(Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
            cases.append((k, xi, f))

    def check(case):
        k, xi, f = case
        for j in letters:
            lhs, rhs = hecke_sides(desc, k, j, xi, f)
            if lhs != rhs:
                return False
        return True

    return _run("hecke", cases, check)


def bcjack_suite(rank: int, k3s: Iterable | None = None, bound: int = 2) -> dict:
    k3s = list(K3_SAMPLES if k3s is None else k3s)
    cases = [(lam, Q(k3)) for k3 in k3s for lam in box(rank, bound)]

    def check(case):
        lam, k3 = case
        if all(v <= 0 for v in lam) and not check_bcjack_identity(tuple(-v for v in lam), k3):
            return False
        return check_mixed_sign_identity(lam, k3)

    return _run("bcjack", cases, check)


# ---------------------------------------------------------------------------
# brute-force hull oracle (rank <= 2)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    if _cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def polygon_hull(points):
    """Andrew's monotone chain, exact; collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def hull_oracle(vertices, x) -> bool:
    """Is x in the convex hull of the given points (dimension 1 or 2)?"""
    x = tuple(Q(v) for v in x)
    vertices = [tuple(Q(v) for v in p) for p in vertices]
    if len(x) == 1:
        vals = [p[0] for p in vertices]
        return min(vals) <= x[0] <= max(vals)
    if len(x) != 2:
        raise SuiteError("hull oracle only handles rank <= 2")
    hull = polygon_hull(vertices)
    if len(hull) == 1:
        return x == hull[0]
    if len(hull) == 2:
        return _on_segment(x, hull[0], hull[1])
    for i in range(len(hull)):
        if _cross(hull[i], hull[(i + 1) % len(hull)], x) < 0:
            return False
    return True


def random_rational_point(rng: random.Random, n: int, scale) -> tuple:
    den = rng.randint(1, 12)
    bound = int(2 * scale * den) + 1
    return tuple(Q(rng.randint(-bound, bound), den) for _ in range(n))


def hull_suite(desc: RootSystem, kappas: Iterable[Multiplicity] | None = None,
               samples: int = 1000, seed: int = 0) -> dict:
    if desc.rank > 2:
        raise SuiteError("hull suite compares against a planar oracle; rank must be <= 2")
    rng = random.Random(seed)
    cases = []
    for k in _kappas(desc, kappas):
        r = rho(desc, k)
        scale = max([abs(v) for v in r] + [Q(1)])
        verts = weyl_orbit(desc, r)
        for s in range(samples):
            if s % 4 == 0:
                # points on the line through 0 and a vertex hit the boundary often
                v = rng.choice(verts)
                t = Q(rng.randint(0, 8), 6)
                x = tuple(t * c for c in v)
            else:
                x = random_rational_point(rng, desc.rank, scale)
            cases.append((k, x, tuple(verts)))

    def check(case):
        k, x, verts = case
        return in_convex_hull_of_orbit(desc, x, k) == hull_oracle(verts, x)

    return _run("hull", cases, check)


def run_suite(name: str, family: str = "BC", rank: int = 1,
              kappas: Iterable[Multiplicity] | None = None, k3s: Iterable | None = None) -> dict:
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    if name == "bcjack":
        return bcjack_suite(rank, k3s)
    desc = root_system(family, rank)
    fn = {
        "eigen": eigen_suite,
        "triangular": triangular_suite,
        "recurrence": recurrence_suite,
        "hecke": hecke_suite,
        "hull": hull_suite,
    }[name]
    return fn(desc, kappas)
