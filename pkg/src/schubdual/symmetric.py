"""Exact multivariate polynomials, Schur polynomials and Schur-basis
decomposition, plus the Chern-root computation of c(T Gr(k, n)).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from typing import Mapping, Sequence

from .partitions import Box, Partition, conjugate, lr_product, partitions_of

Exponent = tuple[int, ...]

DEFAULT_CEILING = 12


class NotSymmetricError(ValueError):
    pass


class MultiPoly:
    """Polynomial in a fixed number of variables with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if c:
                self.terms[exp] = self.terms.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly.constant(self.nvars, other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, p: int):
        out = MultiPoly.constant(self.nvars)
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {dict(sorted(self.terms.items(), reverse=True))})"

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def permuted(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute x_i -> x_{perm[i]}."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i]] = a
            out[tuple(new)] = c
        return MultiPoly(self.nvars, out)


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition, nvars: int) -> tuple[tuple[Exponent, int], ...]:
    # s_lam(x_1..x_n) = sum over horizontal strips lam/mu of s_mu(x_1..x_{n-1}) x_n^{|lam/mu|}
    if nvars == 0:
        return (((), 1),) if not lam else ()
    if len(lam) > nvars:
        return ()
    out: dict[Exponent, int] = {}
    for mu in _strip_predecessors(lam, nvars - 1):
        last = lam.size - mu.size
        for e, c in _schur_terms(mu, nvars - 1):
            key = e + (last,)
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


@lru_cache(maxsize=None)
def _strip_predecessors(lam: Partition, max_len: int) -> tuple[Partition, ...]:
    # mu with lam/mu a horizontal strip (interlacing lam_{i+1} <= mu_i <= lam_i)
    out = []
    ranges = [range(lam.part(i + 1), lam[i] + 1) for i in range(len(lam))]
    for parts in cartesian(*ranges):
        mu = Partition(parts)
        if len(mu) <= max_len:
            out.append(mu)
    return tuple(out)


def schur_polynomial(lam: Partition, nvars: int) -> MultiPoly:
    """s_lam in nvars variables; the zero polynomial if lam has too many parts."""
    return MultiPoly(nvars, dict(_schur_terms(Partition(lam), nvars)))


def complete_homogeneous(p: int, nvars: int) -> MultiPoly:
    return schur_polynomial(Partition([p]), nvars) if p >= 0 else MultiPoly(nvars)


def elementary(p: int, nvars: int) -> MultiPoly:
    return schur_polynomial(Partition([1] * p), nvars) if p >= 0 else MultiPoly(nvars)


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: tuple[int, ...]) -> int:
    """Number of SSYT of shape lam and content mu (mu any weak composition)."""
    mu = tuple(m for m in mu if m)
    if lam.size != sum(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    return sum(
        kostka(nu, mu[:-1])
        for nu in _strip_predecessors(lam, len(lam))
        if lam.size - nu.size == last
    )


def _is_dominant(block: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(block, block[1:]))


def _split(exp: Exponent, groups: Sequence[int]) -> list[tuple[int, ...]]:
    out, i = [], 0
    for g in groups:
        out.append(exp[i:i + g])
        i += g
    return out


def check_symmetric(p: MultiPoly, groups: Sequence[int] | None = None) -> None:
    """Raise NotSymmetricError unless p is fixed by every adjacent transposition
    inside each variable group."""
    groups = list(groups) if groups is not None else [p.nvars]
    if sum(groups) != p.nvars:
        raise ValueError(f"groups {groups} do not cover {p.nvars} variables")
    start = 0
    for g in groups:
        for i in range(start, start + g - 1):
            perm = list(range(p.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if p.permuted(perm) != p:
                raise NotSymmetricError(f"not symmetric under swapping variables {i} and {i + 1}")
        start += g


def schur_decompose(p: MultiPoly, groups: Sequence[int] | None = None) -> dict:
    """Expand p in the Schur basis.

    With ``groups=None`` the result maps Partition -> coefficient.  With
    groups, p must be symmetric in each block of variables separately and
    the result maps tuples of partitions (one per block) to coefficients of
    the product s_{lam_1}(block 1) * s_{lam_2}(block 2) * ...

    Repeatedly subtracts ``c * s_lam`` at the lexicographically greatest
    monomial.  Only dominant monomials are tracked, via Kostka numbers.
    """
    single = groups is None
    groups = [p.nvars] if single else list(groups)
    check_symmetric(p, groups)

    remaining = {
        e: c for e, c in p.terms.items() if all(_is_dominant(b) for b in _split(e, groups))
    }
    result: dict = {}
    while remaining:
        lead = max(remaining)
        c = remaining[lead]
        shapes = tuple(Partition(b) for b in _split(lead, groups))
        result[shapes[0] if single else shapes] = c
        per_group = []
        for shape, g in zip(shapes, groups):
            options = []
            for mu in partitions_of(shape.size, g):
                k = kostka(shape, tuple(mu))
                if k:
                    options.append((tuple(mu) + (0,) * (g - len(mu)), k))
            per_group.append(options)
        for combo in cartesian(*per_group):
            exp = sum((blk for blk, _ in combo), ())
            weight = 1
            for _, k in combo:
                weight *= k
            v = remaining.get(exp, 0) - c * weight
            if v:
                remaining[exp] = v
            else:
                remaining.pop(exp, None)
    return result


def schur_reassemble(expansion: Mapping[Partition, int], nvars: int) -> MultiPoly:
    out = MultiPoly(nvars)
    for lam, c in expansion.items():
        out = out + schur_polynomial(lam, nvars) * c
    return out


def _chern_root_product(k: int, q: int) -> MultiPoly:
    """prod_{i<k, j<q} (1 + x_i + y_j) in variables x_0..x_{k-1}, y_0..y_{q-1}."""
    nvars = k + q
    terms: dict[Exponent, int] = {(0,) * nvars: 1}
    for i in range(k):
        for j in range(q):
            xi, yj = i, k + j
            new: dict[Exponent, int] = {}
            for e, c in terms.items():
                new[e] = new.get(e, 0) + c
                ex = list(e)
                ex[xi] += 1
                ex = tuple(ex)
                new[ex] = new.get(ex, 0) + c
                ey = list(e)
                ey[yj] += 1
                ey = tuple(ey)
                new[ey] = new.get(ey, 0) + c
            terms = new
    return MultiPoly(nvars, terms)


def grassmannian_tangent_pieces(k: int, n: int, ceiling: int = DEFAULT_CEILING) -> list[dict[Partition, int]]:
    """Graded pieces of c(T Gr(k, n)) as {partition: coefficient} dicts.

    x are the Chern roots of the dual tautological subbundle, y those of the
    quotient bundle.  After splitting into s_a(x) s_b(y), each s_b(y) is the
    dual Jacobi-Trudi determinant in e_p(y); since c(Q) c(S) = 1 gives
    e_p(y) = h_p(x), that determinant becomes the Jacobi-Trudi determinant
    of s_{b'}(x), b' the conjugate.  Schubert classes are s_lam(x) with
    lam outside the k x (n-k) box sent to zero.
    """
    if not (1 <= k < n):
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if n > ceiling:
        raise ValueError(f"n={n} exceeds the ceiling {ceiling}")
    q = n - k
    box = Box(k, q)
    poly = _chern_root_product(k, q)
    split = schur_decompose(poly, [k, q])
    pieces: list[dict[Partition, int]] = [{} for _ in range(k * q + 1)]
    for (alpha, beta), c in split.items():
        beta_x = conjugate(beta)
        if not box.fits(alpha) or not box.fits(beta_x):
            continue
        for lam, m in lr_product(alpha, beta_x, box).items():
            piece = pieces[lam.size]
            piece[lam] = piece.get(lam, 0) + c * m
    return [{lam: c for lam, c in sorted(p.items(), reverse=True) if c} for p in pieces]


def tangent_chern_grassmannian(k: int, n: int, ceiling: int = DEFAULT_CEILING):
    """c_0..c_{k(n-k)} of T Gr(k, n) as ring elements of the Grassmannian."""
    from .cohomology import Grassmannian

    ctx = Grassmannian(k, n, ceiling=max(ceiling, k * (n - k)))
    return [ctx.element(p) for p in grassmannian_tangent_pieces(k, n, ceiling)]
