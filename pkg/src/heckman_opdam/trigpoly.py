"""Exact sparse trigonometric polynomials, i.e. the group algebra C(P) of Z^n.

A TrigPoly is a finite sum  sum_lam c_lam e^lam  with exact rational
coefficients.  The same container doubles as an ordinary polynomial in
y_1..y_n when all exponents are nonnegative (used for Jack polynomials).
"""
from __future__ import annotations

import cmath
import json
import math
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq as Q

from .rootsys import RootSystem, Weight, dot, reflect_weight

OVERFLOW_LIMIT = 700


class TrigPoly:
    """Immutable sparse map exponent -> nonzero rational coefficient."""

    __slots__ = ("rank", "terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Weight, object] | None = None):
        self.rank = rank
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    if len(w) != rank:
                        raise ValueError(f"exponent {w} does not have rank {rank}")
                    clean[tuple(w)] = Q(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "TrigPoly":
        # terms already canonical: tuple keys, Q values, zeros dropped
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, lam: Sequence[int], c=1) -> "TrigPoly":
        lam = tuple(int(v) for v in lam)
        return cls(len(lam), {lam: c})

    @classmethod
    def constant(cls, rank: int, c=1) -> "TrigPoly":
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def zero(cls, rank: int) -> "TrigPoly":
        return cls._raw(rank, {})

    # -- container protocol -----------------------------------------------

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, lam: Sequence[int]):
        return self.terms.get(tuple(lam), Q(0))

    def support(self) -> set[Weight]:
        return set(self.terms)

    def __eq__(self, other):
        if isinstance(other, TrigPoly):
            return self.rank == other.rank and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"TrigPoly({self.rank}, {self.sorted_terms()})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append(f"({c})*e^{list(w)}")
        return " + ".join(parts)

    def sorted_terms(self) -> list[tuple[Weight, object]]:
        return sorted(self.terms.items())

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "TrigPoly"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(self.rank, other)
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        return TrigPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(self.rank, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TrigPoly":
        c = Q(c)
        if not c:
            return TrigPoly.zero(self.rank)
        return TrigPoly._raw(self.rank, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + c1 * c2
        return TrigPoly._raw(self.rank, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(1 / Q(c))

    def __pow__(self, m: int):
        out = TrigPoly.constant(self.rank)
        for _ in range(m):
            out = out * self
        return out

    # -- exponent maps ----------------------------------------------------

    def map_exponents(self, fn: Callable[[Weight], Weight], rank: int | None = None) -> "TrigPoly":
        """Linear extension of e^lam -> e^{fn(lam)} (fn need not be injective)."""
        out: dict = {}
        for w, c in self.terms.items():
            v = tuple(fn(w))
            out[v] = out.get(v, 0) + c
        return TrigPoly._raw(rank if rank is not None else self.rank,
                             {w: c for w, c in out.items() if c})

    def embed(self, rank: int, offset: int) -> "TrigPoly":
        """View as a polynomial on coordinates offset..offset+self.rank of R^rank."""
        pre = (0,) * offset
        post = (0,) * (rank - offset - self.rank)
        return TrigPoly._raw(rank, {pre + w + post: c for w, c in self.terms.items()})

    def permute_variables(self, perm: Sequence[int]) -> "TrigPoly":
        """f(x) -> f(x_{perm[0]}, ..., x_{perm[n-1]})  (0-based indices)."""
        n = self.rank

        def fn(w):
            out = [0] * n
            for p, a in enumerate(w):
                out[perm[p]] += a
            return tuple(out)

        return self.map_exponents(fn)

    # -- evaluation -------------------------------------------------------

    def eval(self, z: Sequence[complex]) -> complex:
        """sum c_lam exp(<lam, z>) in double precision."""
        total = 0j
        for w, c in self.terms.items():
            s = sum(a * complex(zi) for a, zi in zip(w, z))
            if abs(s.real) > OVERFLOW_LIMIT:
                raise OverflowError(f"exponent {s.real:.1f} out of double range")
            total += float(c) * cmath.exp(s)
        return total

    def eval_real(self, x: Sequence[float]) -> float:
        total = 0.0
        for w, c in self.terms.items():
            s = sum(a * float(xi) for a, xi in zip(w, x))
            if abs(s) > OVERFLOW_LIMIT:
                raise OverflowError(f"exponent {s:.1f} out of double range")
            total += float(c) * math.exp(s)
        return total

    def eval_at_zero(self):
        """Exact value at x = 0: the sum of the coefficients."""
        return sum(self.terms.values(), Q(0))

    def eval_poly(self, y: Sequence):
        """Evaluate as an ordinary polynomial sum c_w prod y_i^{w_i}.

        Exact when every y_i is rational, double precision otherwise.
        """
        exact = all(isinstance(v, int) or hasattr(v, "denominator") for v in y)
        y = [Q(v) for v in y] if exact else [float(v) for v in y]
        total = Q(0) if exact else 0.0
        for w, c in self.terms.items():
            t = c if exact else float(c)
            for yi, a in zip(y, w):
                if a:
                    t = t * yi ** a
            total += t
        return total

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"w": list(w), "c": str(c)} for w, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "TrigPoly":
        rank = int(data["rank"])
        terms: dict = {}
        for t in data["terms"]:
            w = tuple(int(v) for v in t["w"])
            terms[w] = terms.get(w, 0) + Q(t["c"])
        return cls(rank, terms)

    @classmethod
    def from_json(cls, text: str) -> "TrigPoly":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Weyl and affine actions


def act_weyl(desc: RootSystem, word: Iterable[int], f: TrigPoly) -> TrigPoly:
    """w.f for w = s_{word[0]} ... s_{word[-1]}; letters are simple indices >= 1.

    w.e^lam = e^{w lam}; on functions this is (w f)(x) = f(w^{-1} x).
    """
    word = tuple(word)
    if any(j < 1 or j > desc.n_simple for j in word):
        raise ValueError(f"letters must lie in 1..{desc.n_simple}: {word}")
    roots = [desc.simple_roots[j - 1] for j in reversed(word)]

    def fn(lam):
        for a in roots:
            lam = reflect_weight(a, lam)
        return lam

    return f.map_exponents(fn)


def act_s(desc: RootSystem, j: int, f: TrigPoly, component: int | None = None) -> TrigPoly:
    """Single generator of the dual affine Weyl group acting on exponents."""
    return f.map_exponents(lambda lam: desc.s(j, lam, component))


def act_s0(desc: RootSystem, f: TrigPoly, component: int | None = None) -> TrigPoly:
    """(s_0 f)(x) = e^{<beta, x>} f(s_beta x), i.e. e^lam -> e^{beta + s_beta lam}."""
    return act_s(desc, 0, f, component)


def symmetrize_signs(f: TrigPoly) -> TrigPoly:
    """Average of f over all sign changes of the coordinates."""
    n = f.rank
    out = f
    for i in range(n):
        flipped = out.map_exponents(lambda w, i=i: w[:i] + (-w[i],) + w[i + 1:])
        out = (out + flipped).scale(Q(1, 2))
    return out


# ---------------------------------------------------------------------------
# cosh^2 substitution


def _cosh_sq_powers(m: int) -> TrigPoly:
    # ((e^x + 2 + e^-x) / 4)^m in one variable, exact
    base = TrigPoly(1, {(1,): Q(1, 4), (0,): Q(1, 2), (-1,): Q(1, 4)})
    return base ** m


def substitute_cosh(f: TrigPoly) -> TrigPoly:
    """Compose a polynomial in y_1..y_n with y_i = cosh^2(x_i / 2).

    cosh^2(x/2) = (e^x + 2 + e^-x) / 4; the result is an exact TrigPoly in x.
    """
    n = f.rank
    cache: dict[int, TrigPoly] = {}
    out = TrigPoly.zero(n)
    for w, c in f.terms.items():
        if any(a < 0 for a in w):
            raise ValueError(f"negative exponent {w} cannot be substituted")
        term = TrigPoly.constant(n, c)
        for i, a in enumerate(w):
            if a:
                if a not in cache:
                    cache[a] = _cosh_sq_powers(a)
                term = term * cache[a].embed(n, i)
        out = out + term
    return out
