"""Root systems of type A, B, BC and orthogonal products of them.

Everything lives in R^n with the standard dot product.  Roots are integer
vectors; weights are integer vectors (the weight lattice is Z^n for every
supported family); spectral points are tuples of exact rationals.

The dual affine Weyl group is generated by the simple reflections s_1..s_r
and the affine reflection s_0: x -> beta + s_beta(x), where beta is the
highest short root.  Letter 0 in an affine word always denotes s_0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq as Q

Weight = tuple[int, ...]
Point = tuple  # tuple of Q (or int) coordinates
AffineWord = tuple[int, ...]

FAMILIES = ("A", "B", "BC")

# multiplicity labels per family, in the order the CLI and tests pass them
KAPPA_LABELS = {
    "A": ("k3",),
    "B": ("k1", "k3"),
    "BC": ("k1", "k2", "k3"),
}


class RootSystemError(ValueError):
    pass


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def unit(n: int, i: int) -> Weight:
    return tuple(1 if j == i else 0 for j in range(n))


def coroot(alpha: Sequence) -> Point:
    """Return 2 alpha / <alpha, alpha> exactly."""
    nn = dot(alpha, alpha)
    if nn == 0:
        raise RootSystemError("coroot of the zero vector")
    return tuple(Q(2 * a, 1) / nn for a in alpha)


def pairing(x: Sequence, alpha: Sequence):
    """<x, alpha^vee>, exact."""
    return Q(2 * dot(x, alpha)) / dot(alpha, alpha)


def reflect(alpha: Sequence, x: Sequence) -> Point:
    """s_alpha x = x - <alpha^vee, x> alpha."""
    c = pairing(x, alpha)
    return tuple(xi - c * ai for xi, ai in zip(x, alpha))


def reflect_weight(alpha: Weight, lam: Weight) -> Weight:
    m, r = divmod(2 * dot(lam, alpha), dot(alpha, alpha))
    if r:
        raise RootSystemError(f"{lam} is not integral against {alpha}")
    return tuple(l - m * a for l, a in zip(lam, alpha))


@dataclass(frozen=True)
class Multiplicity:
    """Per-orbit multiplicity values, keyed by orbit label."""

    labels: tuple[str, ...]
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Q(v) for v in self.values))
        if len(self.labels) != len(self.values):
            raise RootSystemError("multiplicity arity mismatch")

    def __getitem__(self, label: str):
        return self.values[self.labels.index(label)]

    def get(self, label: str, default=0):
        if label in self.labels:
            return self[label]
        return Q(default)

    @property
    def nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def as_strings(self) -> list[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class Component:
    family: str
    start: int
    stop: int

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class RootSystem:
    """Positive roots, simple roots and affine data of a supported system.

    For a Product system the roots of every factor are embedded in disjoint
    coordinate blocks; coordinates not covered by any block form the
    centre c (the orthogonal complement of span R), on which W acts trivially.
    """

    family: str
    rank: int
    positive_roots: tuple[tuple[Weight, str], ...]
    simple_roots: tuple[Weight, ...]
    highest_short_root: Weight | None
    labels: tuple[str, ...]
    components: tuple[Component, ...] = ()
    factors: tuple["RootSystem", ...] = field(default=(), compare=False, repr=False)

    # -- basic data -----------------------------------------------------

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    @property
    def irreducible(self) -> bool:
        return self.family != "Product"

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        pos = tuple(r for r, _ in self.positive_roots)
        return pos + tuple(tuple(-a for a in r) for r in pos)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def center_mask(self) -> tuple[bool, ...]:
        covered = [False] * self.rank
        for c in self.components:
            if c.family == "center":
                continue
            for i in range(c.start, c.stop):
                covered[i] = True
        return tuple(not c for c in covered)

    def multiplicity(self, values: Iterable) -> Multiplicity:
        values = tuple(values)
        if len(values) != len(self.labels):
            raise RootSystemError(
                f"{self.family} expects {len(self.labels)} multiplicity values "
                f"{self.labels}, got {len(values)}"
            )
        return Multiplicity(self.labels, values)

    def label_of(self, root: Weight) -> str:
        for r, lab in self.positive_roots:
            if r == root or all(a == -b for a, b in zip(r, root)):
                return lab
        raise RootSystemError(f"{root} is not a root")

    def k(self, kappa: Multiplicity, root: Weight):
        """Multiplicity of a (positive or negative) root."""
        return kappa[self.label_of(root)]

    def half_root_k(self, kappa: Multiplicity, root: Weight):
        """k_{alpha/2}, zero when alpha/2 is not a root."""
        if any(a % 2 for a in root):
            return Q(0)
        half = tuple(a // 2 for a in root)
        if half in self.root_set:
            return self.k(kappa, half)
        return Q(0)

    def simple_k(self, kappa: Multiplicity, i: int):
        """k_i = k_{alpha_i} + 2 k_{2 alpha_i}; i = 0 gives k_beta."""
        if i == 0:
            return self.k(kappa, self._beta())
        a = self.simple_roots[i - 1]
        kk = self.k(kappa, a)
        double = tuple(2 * x for x in a)
        if double in self.root_set:
            kk += 2 * self.k(kappa, double)
        return kk

    def weighted_roots(self, kappa: Multiplicity):
        return _weighted_roots(self, kappa)

    # -- the affine reflection ------------------------------------------

    def _beta(self, component: int | None = None) -> Weight:
        if self.irreducible:
            if self.highest_short_root is None:
                raise RootSystemError("root system has no roots, s_0 undefined")
            return self.highest_short_root
        if component is None:
            raise RootSystemError("s_0 on a Product system needs a component")
        fac = self.factors[component]
        comp = [c for c in self.components if c.family != "center"][component]
        b = fac._beta()
        out = [0] * self.rank
        out[comp.start:comp.stop] = b
        return tuple(out)

    def beta(self, component: int | None = None) -> Weight:
        return self._beta(component)

    def s(self, i: int, lam: Weight, component: int | None = None) -> Weight:
        """Simple (i >= 1) or affine (i = 0) reflection of an integer weight."""
        if i == 0:
            b = self._beta(component)
            return tuple(x + y for x, y in zip(b, reflect_weight(b, lam)))
        return reflect_weight(self.simple_roots[i - 1], lam)


def affine_s0(desc: RootSystem, lam: Sequence, component: int | None = None) -> Point:
    """s_0 lam = beta + s_beta lam, for rational points."""
    b = desc.beta(component)
    return tuple(x + y for x, y in zip(b, reflect(b, lam)))


# ---------------------------------------------------------------------------
# construction


def _type_a(n: int):
    pos = []
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, -1
            pos.append((tuple(r), "k3"))
    simple = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        simple.append(tuple(r))
    beta = None
    if n >= 2:
        b = [0] * n
        b[0], b[-1] = 1, -1
        beta = tuple(b)
    return pos, simple, beta


def _type_b(n: int, with_double: bool):
    pos = []
    for i in range(n):
        pos.append((unit(n, i), "k1"))
        if with_double:
            pos.append((tuple(2 * x for x in unit(n, i)), "k2"))
    for i in range(n):
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = 1, -1
            plus = [0] * n
            plus[i], plus[j] = 1, 1
            pos.append((tuple(minus), "k3"))
            pos.append((tuple(plus), "k3"))
    simple = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        simple.append(tuple(r))
    simple.append(unit(n, n - 1))
    return pos, simple, unit(n, 0)


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Build A_{n-1} (in R^n), B_n or BC_n; ``rank`` is the ambient dimension n."""
    family = family.upper()
    if family not in FAMILIES:
        raise RootSystemError(f"unsupported root system family {family!r}")
    if rank < 1:
        raise RootSystemError("rank must be positive")
    if family == "A":
        pos, simple, beta = _type_a(rank)
    else:
        pos, simple, beta = _type_b(rank, with_double=(family == "BC"))
    return RootSystem(
        family=family,
        rank=rank,
        positive_roots=tuple(pos),
        simple_roots=tuple(simple),
        highest_short_root=beta,
        labels=KAPPA_LABELS[family],
        components=(Component(family, 0, rank),),
    )


def product(*factors: RootSystem, center: int = 0) -> RootSystem:
    """Orthogonal product of irreducible systems plus ``center`` trivial coordinates."""
    if not factors:
        raise RootSystemError("product needs at least one factor")
    n = sum(f.rank for f in factors) + center
    pos, simple, labels, comps = [], [], [], []
    off = 0
    for idx, f in enumerate(factors):
        if not f.irreducible:
            raise RootSystemError("nested products are not supported")
        pad = lambda r, o=off, m=f.rank: (0,) * o + tuple(r) + (0,) * (n - o - m)
        pos.extend((pad(r), f"{idx}.{lab}") for r, lab in f.positive_roots)
        simple.extend(pad(r) for r in f.simple_roots)
        labels.extend(f"{idx}.{lab}" for lab in f.labels)
        comps.append(Component(f.family, off, off + f.rank))
        off += f.rank
    if center:
        comps.append(Component("center", off, n))
    return RootSystem(
        family="Product",
        rank=n,
        positive_roots=tuple(pos),
        simple_roots=tuple(simple),
        highest_short_root=None,
        labels=tuple(labels),
        components=tuple(comps),
        factors=tuple(factors),
    )


@lru_cache(maxsize=None)
def _weighted_roots(desc: RootSystem, kappa: Multiplicity):
    """(root, k_alpha, <alpha, alpha>) for positive roots with k_alpha != 0."""
    out = []
    for r, lab in desc.positive_roots:
        kk = kappa[lab]
        if kk != 0:
            out.append((r, kk, dot(r, r)))
    return tuple(out)


# ---------------------------------------------------------------------------
# vectors attached to (desc, kappa)


def rho(desc: RootSystem, kappa: Multiplicity) -> Point:
    """rho(k) = 1/2 sum_{alpha > 0} k_alpha alpha."""
    acc = [Q(0)] * desc.rank
    for r, lab in desc.positive_roots:
        kk = kappa[lab]
        if kk:
            for i, a in enumerate(r):
                if a:
                    acc[i] += kk * a
    return tuple(a / 2 for a in acc)


def epsilon(t) -> int:
    """Sign convention with epsilon(0) = -1."""
    return 1 if t > 0 else -1


# ---------------------------------------------------------------------------
# finite Weyl group: dominance and orbits


def dominant_rep(desc: RootSystem, x: Sequence) -> tuple[Point, int]:
    """Move x into the closed dominant chamber by simple reflections.

    Returns the dominant representative and the number of reflections used,
    which is the length of the shortest w with w x = x_+.
    """
    x = tuple(x)
    steps = 0
    while True:
        for a in desc.simple_roots:
            if dot(a, x) < 0:
                x = reflect(a, x)
                steps += 1
                break
        else:
            return _tidy(x), steps


def _tidy(x: Sequence) -> Point:
    return tuple(int(v) if getattr(v, "denominator", 1) == 1 else v for v in x)


def dominant_weight(desc: RootSystem, lam: Weight) -> Weight:
    return _dominant_weight(desc, tuple(int(v) for v in lam))


@lru_cache(maxsize=100000)
def _dominant_weight(desc, lam):
    return tuple(int(v) for v in dominant_rep(desc, lam)[0])


def is_dominant(desc: RootSystem, x: Sequence) -> bool:
    return all(dot(a, x) >= 0 for a in desc.simple_roots)


def simple_root_coordinates(desc: RootSystem, d: Sequence):
    """Solve d = sum c_i alpha_i exactly; None when d is not in span R.

    Plain Gaussian elimination on the (n x r) system; the simple roots are
    linearly independent so a consistent solution is unique.
    """
    r = desc.n_simple
    n = desc.rank
    rows = [[Q(desc.simple_roots[j][i]) for j in range(r)] + [Q(d[i])] for i in range(n)]
    piv_cols = []
    row = 0
    for col in range(r):
        p = next((i for i in range(row, n) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[row], rows[p] = rows[p], rows[row]
        pv = rows[row][col]
        rows[row] = [v / pv for v in rows[row]]
        for i in range(n):
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[row])]
        piv_cols.append(col)
        row += 1
    if any(rows[i][r] != 0 for i in range(row, n)):
        return None
    coeffs = [Q(0)] * r
    for i, col in enumerate(piv_cols):
        coeffs[col] = rows[i][r]
    return tuple(coeffs)


def in_positive_cone(desc: RootSystem, d: Sequence, integral: bool = True) -> bool:
    c = simple_root_coordinates(desc, d)
    if c is None:
        return False
    if integral and any(v.denominator != 1 for v in c):
        return False
    return all(v >= 0 for v in c)


def dominance_le(desc: RootSystem, mu: Weight, lam: Weight) -> bool:
    """mu <= lam iff lam - mu is a nonnegative integer combination of simple roots."""
    return in_positive_cone(desc, tuple(l - m for l, m in zip(lam, mu)))


def tri_order(desc: RootSystem, mu: Weight, lam: Weight) -> bool:
    """The extended order mu ⊴ lam on all weights."""
    mp, lp = dominant_weight(desc, mu), dominant_weight(desc, lam)
    if mp != lp:
        return dominance_le(desc, mp, lp)
    return dominance_le(desc, lam, mu)


def weyl_orbit(desc: RootSystem, x: Sequence, cap: int = 100000) -> list:
    """All points of W.x, generated by simple reflections (sorted)."""
    start = _tidy(tuple(x))
    seen = {start}
    todo = [start]
    while todo:
        y = todo.pop()
        for a in desc.simple_roots:
            z = _tidy(reflect(a, y))
            if z not in seen:
                seen.add(z)
                if len(seen) > cap:
                    raise RootSystemError("orbit exceeds cap")
                todo.append(z)
    return sorted(seen)


def weyl_group_order(desc: RootSystem) -> int:
    """#W, as the orbit size of rho(1), which is regular."""
    return len(weyl_orbit(desc, rho(desc, desc.multiplicity([1] * len(desc.labels)))))


def longest_word(desc: RootSystem) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_r) for the longest element w_0 = s_{i_1}...s_{i_r}."""
    x = tuple(-v for v in rho(desc, desc.multiplicity([1] * len(desc.labels))))
    applied = []
    while True:
        for i, a in enumerate(desc.simple_roots, start=1):
            if dot(a, x) < 0:
                x = reflect(a, x)
                applied.append(i)
                break
        else:
            break
    # rho = s_{j_m} ... s_{j_1} (-rho), so w_0 = s_{j_m} ... s_{j_1}
    return tuple(reversed(applied))


# ---------------------------------------------------------------------------
# minuscule weights and the affine descent


def is_minuscule(desc: RootSystem, lam: Weight) -> bool:
    """<lam, alpha^vee> in {0, 1} for every positive root."""
    for r, _ in desc.positive_roots:
        if pairing(lam, r) not in (0, 1):
            return False
    return True


def descent_steps(desc: RootSystem, lam: Weight) -> list[int]:
    """Letters j with l(s_j lam) < l(lam) in the affine orbit.

    Read in the reconstruction direction mu = s_j lam -> lam these are exactly
    the steps with <alpha_j, mu> > 0 (j >= 1) or <beta^vee, mu> < 1 (j = 0),
    where the intertwiner (s_j + c_j) maps E_mu to E_lam on the nose.
    """
    if not desc.irreducible:
        raise RootSystemError("affine descent needs an irreducible system")
    out = []
    if desc.highest_short_root is not None and pairing(lam, desc.highest_short_root) > 1:
        out.append(0)
    for j, a in enumerate(desc.simple_roots, start=1):
        if dot(a, lam) < 0:
            out.append(j)
    return out


Chooser = Callable[[list[int]], int]


def descent_path(desc: RootSystem, lam: Weight, choose: Chooser = min):
    """Walk down to the minuscule representative.

    Returns (letters in the order applied to lam, minuscule weight).
    """
    lam = tuple(lam)
    path = []
    while True:
        steps = descent_steps(desc, lam)
        if not steps:
            return tuple(path), lam
        j = choose(steps)
        path.append(j)
        lam = desc.s(j, lam)


def descent_word(desc: RootSystem, lam: Weight, choose: Chooser = min) -> AffineWord:
    """Reduced word (i_1, ..., i_m) with E_lam = (s_{i_m}+c_m)...(s_{i_1}+c_1) e^{lam_bar}.

    s_{i_1} is applied first to the minuscule weight lam_bar; equivalently the
    letters taken in reverse order carry lam down to lam_bar.  Among valid
    steps the smallest index is taken unless ``choose`` says otherwise.
    """
    path, _ = descent_path(desc, lam, choose)
    return tuple(reversed(path))


def minuscule_rep(desc: RootSystem, lam: Weight) -> Weight:
    return descent_path(desc, lam)[1]


def apply_word(desc: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    """Apply s_{w[0]} s_{w[1]} ... s_{w[-1]} to lam (rightmost letter first)."""
    for j in reversed(word):
        lam = desc.s(j, lam)
    return lam
