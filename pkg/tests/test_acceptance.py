"""Acceptance criteria 1-10.

Each test records a PASS/FAIL line (shown in the pytest terminal summary and
printed when this file is run as a script) and then asserts the criterion at
its stated tolerance and time budget.
"""
import itertools
import time

from gmpy2 import mpq as Q

from heckman_opdam.hopoly import P_at_zero, nonsym_E, sym_P
from heckman_opdam.jack import jack_at_one, jack_at_one_is_exact, nonsym_jack, sym_jack
from heckman_opdam.limits import (
    convergence_table,
    default_schedule,
    exact_error_at_zero,
    k2_zero_schedule,
    make_grid,
)
from heckman_opdam.rootsys import descent_steps, is_dominant, product, root_system
from heckman_opdam.trigpoly import TrigPoly
from heckman_opdam.verify import (
    KAPPA_SAMPLES,
    K3_SAMPLES,
    bcjack_suite,
    eigen_suite,
    hecke_suite,
    hull_suite,
    recurrence_suite,
    restrict_kappa,
    triangular_suite,
)

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE = {}

FAMILIES = ("BC", "B", "A")
BOX1 = [(fam, n) for fam in FAMILIES for n in (1, 2, 3)]


def record(num, ok, detail):
    ACCEPTANCE[num] = (ok, detail)
    return ok


def _suite_over(systems, runner):
    t0 = time.perf_counter()
    checked = failed = 0
    first = None
    for fam, n in systems:
        rep = runner(root_system(fam, n))
        checked += rep["checked"]
        failed += rep["failed"]
        if first is None and rep["first_counterexample"] is not None:
            first = (fam, n, rep["first_counterexample"])
    return checked, failed, first, time.perf_counter() - t0


def _report(num, checked, failed, first, secs, budget):
    ok = failed == 0 and checked > 0 and secs < budget
    detail = f"checked={checked} failed={failed} time={secs:.1f}s (<{budget}s)"
    if first is not None:
        detail += f" first={first}"
    record(num, ok, detail)
    assert failed == 0, detail
    assert secs < budget, detail


def test_criterion_01_eigen():
    _report(1, *_suite_over(BOX1, eigen_suite), 60)


def test_criterion_02_triangular():
    _report(2, *_suite_over(BOX1, triangular_suite), 30)


def test_criterion_03_hecke():
    systems = [(fam, n) for fam in FAMILIES for n in (1, 2)]
    _report(3, *_suite_over(systems, lambda d: hecke_suite(d, samples=100, seed=3)), 30)


def test_criterion_04_recurrence():
    _report(4, *_suite_over(BOX1, recurrence_suite), 30)


def test_criterion_05_bcjack():
    t0 = time.perf_counter()
    checked = failed = 0
    first = None
    for n in (1, 2, 3):
        rep = bcjack_suite(n, K3_SAMPLES, bound=2)
        checked += rep["checked"]
        failed += rep["failed"]
        first = first or rep["first_counterexample"]
    _report(5, checked, failed, first, time.perf_counter() - t0, 60)


def test_criterion_06_zero_values():
    t0 = time.perf_counter()
    checked = failed = 0
    first = None
    for fam, n in BOX1:
        d = root_system(fam, n)
        for sample in KAPPA_SAMPLES:
            k = restrict_kappa(d, sample)
            for lam in itertools.product(range(-3, 4), repeat=n):
                if not is_dominant(d, lam):
                    continue
                checked += 1
                if P_at_zero(d, lam, k) != sym_P(d, lam, k).eval_at_zero():
                    failed += 1
                    first = first or (fam, n, lam, k.as_strings())
    worst_rel = 0.0
    for n in (1, 2, 3):
        for lam in itertools.product(range(4), repeat=n):
            if list(lam) != sorted(lam, reverse=True):
                continue
            for k in (0, Q(1, 2), 1, 2, Q(5, 3), 3):
                checked += 1
                direct = sym_jack(lam, k).eval_poly((1,) * n)
                formula = jack_at_one(lam, k)
                if jack_at_one_is_exact(k):
                    ok = formula == direct
                else:
                    rel = abs(formula / float(direct) - 1)
                    worst_rel = max(worst_rel, rel)
                    ok = rel < 1e-10
                if not ok:
                    failed += 1
                    first = first or ("jack", lam, str(k))
    secs = time.perf_counter() - t0
    _report(6, checked, failed, first, secs, 30)
    assert worst_rel < 1e-10


def test_criterion_07_limit_convergence():
    t0 = time.perf_counter()
    problems = []
    # closed form on BC_1, lambda = 1, k2 = 0
    for k1 in (10, 100, 1000):
        exact = exact_error_at_zero((1,), 1, k1, 0)
        row = convergence_table((1,), 1, k2_zero_schedule((k1,)), [(0.0,)])[0]
        if exact != Q(1, 1 + k1) or abs(row.sup_error_poly - 1 / (1 + k1)) > 1e-15:
            problems.append(("closed form", k1, str(exact)))
    # box n <= 2, |lam| <= 2, grid |x_i| <= 2 step 1/2
    schedules = {"default": default_schedule(), "k2=0": k2_zero_schedule()}
    worst = {}
    nonmonotone = 0
    above = 0
    cases = 0
    for name, sched in schedules.items():
        for n in (1, 2):
            grid = make_grid(n, -2, 2, Q(1, 2))
            for k3 in K3_SAMPLES:
                for lam in itertools.product(range(-2, 3), repeat=n):
                    cases += 1
                    rows = convergence_table(lam, k3, sched, grid)
                    for col in ("sup_error_poly", "sup_error_kernel"):
                        errs = [getattr(r, col) for r in rows]
                        if any(b > a for a, b in zip(errs, errs[1:])):
                            nonmonotone += 1
                            problems.append(("nonmonotone", name, lam, str(k3), col))
                        last = errs[-1]
                        if last >= 1e-2:
                            above += 1
                        key = (name, col)
                        if last > worst.get(key, (0.0,))[0]:
                            worst[key] = (last, lam, str(k3))
    secs = time.perf_counter() - t0
    ok = not problems and above == 0 and secs < 120
    summary = "; ".join(f"{n}/{c.split('_')[-1]} max={v[0]:.3g} at lam={v[1]} k3={v[2]}"
                        for (n, c), v in sorted(worst.items()))
    detail = (f"closed form ok={not any(p[0] == 'closed form' for p in problems)} "
              f"nonmonotone={nonmonotone} above_1e-2={above}/{2 * cases} at k1=1e4; "
              f"{summary}; time={secs:.1f}s")
    record(7, ok, detail)
    assert not problems, problems[:5]
    assert above == 0, detail
    assert secs < 120, detail


def test_criterion_08_hull():
    t0 = time.perf_counter()
    checked = failed = 0
    first = None
    systems = [root_system(fam, n) for fam in FAMILIES for n in (1, 2)]
    for d in systems:
        rep = hull_suite(d, samples=1000, seed=8)
        checked += rep["checked"]
        failed += rep["failed"]
        first = first or rep["first_counterexample"]
    bc1 = root_system("BC", 1)
    for p in (product(bc1, center=1), product(bc1, bc1)):
        kappas = [p.multiplicity([Q(v) for v in vals]) for vals in
                  ([1, Q(1, 2), 0] * len(p.factors), [2, 0, 0] * len(p.factors))]
        rep = hull_suite(p, kappas, samples=1000, seed=9)
        checked += rep["checked"]
        failed += rep["failed"]
        first = first or rep["first_counterexample"]
    _report(8, checked, failed, first, time.perf_counter() - t0, 30)


def test_criterion_09_jack_exchange():
    ks = (Q(1, 2), Q(1, 3), 1, Q(7, 4), 5)
    bad = []
    for k in ks:
        k = Q(k)
        want = TrigPoly(2, {(1, 0): 1, (0, 1): k / (1 + k)})
        if nonsym_jack((1, 0), k).poly != want:
            bad.append(str(k))
    record(9, not bad, f"k in {[str(Q(k)) for k in ks]} failed={bad}")
    assert not bad


def _all_words(desc, lam, cap=64):
    """Every descent path from lam (letters in order applied), up to cap."""
    out = []

    def walk(x, path):
        if len(out) >= cap:
            return
        steps = descent_steps(desc, x)
        if not steps:
            out.append(tuple(path))
            return
        for j in steps:
            walk(desc.s(j, x), path + [j])

    walk(lam, [])
    return out


def _follow(path):
    it = iter(path)

    def choose(steps):
        j = next(it)
        assert j in steps
        return j
    return choose


def test_criterion_10_word_independence():
    t0 = time.perf_counter()
    checked = failed = multi = 0
    first = None
    for fam in FAMILIES:
        for n in (1, 2):
            d = root_system(fam, n)
            for sample in KAPPA_SAMPLES:
                k = restrict_kappa(d, sample)
                for lam in itertools.product(range(-2, 3), repeat=n):
                    words = _all_words(d, lam)
                    ref = nonsym_E(d, lam, k).poly
                    if len(words) > 1:
                        multi += 1
                    for w in words:
                        checked += 1
                        if nonsym_E(d, lam, k, choose=_follow(w)).poly != ref:
                            failed += 1
                            first = first or (fam, n, lam, w)
    secs = time.perf_counter() - t0
    ok = failed == 0 and multi > 0 and secs < 30
    record(10, ok, f"words={checked} weights_with_several_words={multi} failed={failed} time={secs:.1f}s (<30s)")
    assert failed == 0 and multi > 0, first
    assert secs < 30


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    status = 0
    for num, fn in enumerate(tests, start=1):
        try:
            fn()
        except AssertionError:
            status = 1
        ok, detail = ACCEPTANCE.get(num, (False, "did not record"))
        print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    sys.exit(status)
