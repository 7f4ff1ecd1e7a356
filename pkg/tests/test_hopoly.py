import itertools
from fractions import Fraction

import pytest
from gmpy2 import mpq as Q

from heckman_opdam.cherednik import apply_coordinates, tilde
from heckman_opdam.hopoly import (
    DegenerateError,
    P_at_zero,
    P_at_zero_gamma,
    check_kernel_recurrence,
    kernel_at_spectral,
    kernel_recurrence_sides,
    nonsym_E,
    recursion_constant,
    sym_P,
    symmetrize,
)
from heckman_opdam.rootsys import root_system, tri_order, weyl_orbit
from heckman_opdam.trigpoly import TrigPoly, act_s, act_weyl

BC1 = root_system("BC", 1)
K10 = BC1.multiplicity([1, 0, 0])


def test_recursion_constant_examples():
    assert recursion_constant(BC1, 0, (0,), K10) == Q(1, 2)
    assert recursion_constant(BC1, 1, (1,), K10) == Q(1, 3)
    z = BC1.multiplicity([0, 0, 0])
    assert recursion_constant(BC1, 1, (2,), z) == 0
    with pytest.raises(DegenerateError):
        recursion_constant(BC1, 1, (0,), K10)


def test_worked_polynomials():
    assert nonsym_E(BC1, (0,), K10).poly == TrigPoly.constant(1)
    assert nonsym_E(BC1, (1,), K10).poly == TrigPoly(1, {(1,): 1, (0,): Q(1, 2)})
    assert nonsym_E(BC1, (-1,), K10).poly == TrigPoly(1, {(-1,): 1, (1,): Q(1, 3), (0,): Q(2, 3)})
    a = root_system("A", 3)
    assert nonsym_E(a, (1, 0, 0), a.multiplicity([2])).poly == TrigPoly.monomial((1, 0, 0))


def test_sym_P_examples():
    assert sym_P(BC1, (1,), K10) == TrigPoly(1, {(1,): 1, (-1,): 1, (0,): 1})
    assert sym_P(BC1, (0,), K10) == TrigPoly.constant(1)
    a = root_system("A", 2)
    k = a.multiplicity([Q(2, 5)])
    P = sym_P(a, (1, 0), k)
    assert P.coeff((1, 0)) == 1 and P.coeff((0, 1)) == 1
    assert act_weyl(a, (1,), P) == P


def test_P_at_zero_examples():
    assert P_at_zero(BC1, (0,), K10) == 1
    assert P_at_zero(BC1, (1,), K10) == 3
    d = root_system("BC", 2)
    k = d.multiplicity([1, 1, 1])
    assert P_at_zero(d, (1, 0), k) == sym_P(d, (1, 0), k).eval_at_zero() == Q(14, 3)
    assert abs(P_at_zero_gamma(d, (2, 1), k) - float(P_at_zero(d, (2, 1), k))) < 1e-9


def test_kernel_examples():
    assert kernel_at_spectral(BC1, (0,), K10) == TrigPoly.constant(1)
    G = kernel_at_spectral(BC1, (-1,), K10)
    assert G == TrigPoly(1, {(-1,): Q(1, 2), (1,): Q(1, 6), (0,): Q(1, 3)})
    z = root_system("BC", 2).multiplicity([0, 0, 0])
    assert kernel_at_spectral(root_system("BC", 2), (2, -3), z) == TrigPoly.monomial((2, -3))


def test_kernel_recurrence_examples():
    assert check_kernel_recurrence(BC1, (1,), 1, K10)
    assert check_kernel_recurrence(BC1, (0,), 0, K10)
    z = BC1.multiplicity([0, 0, 0])
    assert check_kernel_recurrence(BC1, (2,), 1, z)
    with pytest.raises(DegenerateError):
        kernel_recurrence_sides(BC1, (0,), 1, K10)


def test_sym_P_matches_kernel_average():
    d = root_system("BC", 2)
    k = d.multiplicity([Q(1, 2), Q(1, 3), 2])
    for lam in [(1, 0), (2, 1), (2, 2)]:
        P = sym_P(d, lam, k)
        E = nonsym_E(d, lam, k).poly
        lhs = P.scale(1 / P.eval_at_zero())
        rhs = symmetrize(d, E).scale(1 / E.eval_at_zero())
        assert lhs == rhs
        for j in range(1, d.n_simple + 1):
            assert act_s(d, j, P) == P


def _explicit_symmetrize(desc, f):
    # enumerate W by words up to its order, dedup by action on a regular point
    group = {}
    reg = (7, 3, 1)[: desc.rank]
    todo = [()]
    while todo:
        w = todo.pop()
        image = reg
        for j in reversed(w):
            image = desc.s(j, image)
        if image in group:
            continue
        group[image] = w
        todo.extend(w + (j,) for j in range(1, desc.n_simple + 1))
    total = TrigPoly.zero(desc.rank)
    for w in group.values():
        total = total + act_weyl(desc, w, f)
    return total.scale(Q(1, len(group)))


def test_symmetrize_matches_group_enumeration():
    for fam, n, kv in [("BC", 2, [1, Q(1, 2), 3]), ("A", 3, [Q(1, 3)]), ("B", 2, [2, 1])]:
        d = root_system(fam, n)
        k = d.multiplicity(kv)
        for lam in itertools.product(range(-1, 3), repeat=n):
            E = nonsym_E(d, lam, k).poly
            assert symmetrize(d, E) == _explicit_symmetrize(d, E)


def _solve(rows, rhs):
    """Exact Gauss-Jordan solve of a consistent system over Fraction."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncol = len(rows[0]) if rows else 0
    piv = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    assert all(row[-1] == 0 for row in m[r:]), "inconsistent system"
    assert len(piv) == ncol, "solution not unique"
    out = [Fraction(0)] * ncol
    for i, c in enumerate(piv):
        out[c] = m[i][-1]
    return out


def linear_system_E(desc, lam, kappa, bound):
    """E_lam from the eigen-equations on the span of {mu : mu ⊴ lam}."""
    cands = [mu for mu in itertools.product(range(-bound, bound + 1), repeat=desc.rank)
             if mu != lam and tri_order(desc, mu, lam)]
    spec = tilde(desc, lam, kappa)
    basis = [TrigPoly.monomial(lam)] + [TrigPoly.monomial(mu) for mu in cands]
    images = [apply_coordinates(desc, kappa, b) for b in basis]
    keys = sorted({w for im in images for comp in im for w in comp.terms}
                  | {w for b in basis for w in b.terms})
    rows, rhs = [], []
    for i in range(desc.rank):
        for w in keys:
            # (D_i - spec_i)(e^lam + sum c_mu e^mu) = 0, coefficient of e^w
            def coeff(j):
                return Fraction(str((images[j][i] - basis[j].scale(spec[i])).coeff(w)))
            rows.append([coeff(j) for j in range(1, len(basis))])
            rhs.append(-coeff(0))
    sol = _solve(rows, rhs) if cands else []
    terms = {lam: 1}
    for mu, c in zip(cands, sol):
        if c:
            terms[mu] = Q(c.numerator, c.denominator)
    return TrigPoly(desc.rank, terms)


@pytest.mark.parametrize("fam,n,kv", [
    ("BC", 1, [Q(1, 2), Q(1, 3), 0]),
    ("BC", 2, [1, Q(1, 3), Q(2, 3)]),
    ("B", 2, [Q(3, 2), 1]),
    ("A", 2, [Q(5, 4)]),
])
def test_recursion_matches_linear_system(fam, n, kv):
    d = root_system(fam, n)
    k = d.multiplicity(kv)
    for lam in itertools.product(range(-2, 3), repeat=n):
        bound = max(abs(v) for v in lam) + 1
        assert nonsym_E(d, lam, k).poly == linear_system_E(d, lam, k, bound), lam


def test_dominance_support_inside_orbit_hull():
    d = root_system("BC", 2)
    k = d.multiplicity([1, 1, 1])
    E = nonsym_E(d, (2, -1), k).poly
    allowed = {mu for mu in itertools.product(range(-2, 3), repeat=2) if tri_order(d, mu, (2, -1))}
    assert E.support() <= allowed
    assert (2, -1) in weyl_orbit(d, (2, 1))


def test_to_dict():
    d = nonsym_E(BC1, (-1,), K10).to_dict()
    assert d["lambda"] == [-1]
    assert d["kappa"] == ["1", "0", "0"]
    assert d["spectral"] == ["-3/2"]
    assert {t["c"] for t in d["terms"]} == {"1", "1/3", "2/3"}
