"""Finite graded cohomology rings with integration and tangent Chern classes.

Four kinds of context share one interface:

* ``Grassmannian(k, n)``: Schubert basis, partitions in the k x (n-k) box.
* ``ProjectiveSpace(n)``: basis h^i.
* ``MultiProjective(n_1, ..., n_s)``: basis prod h_j^{i_j}, Segre hyperplane.
* ``SplitProjectiveBundle(m, a)``: P(E) for E = sum O(-a_i) over P^m, lines
  in E, with xi = c_1(O(1)).  Relations h^{m+1} = 0 and prod(xi - a_i h) = 0.

Every context integrates its top basis monomial to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as cartesian
from math import comb
from typing import Hashable, Iterable, Mapping, Sequence

from .partitions import Box, Partition, box_partitions, box_partitions_by_degree, lr_product

DEFAULT_CEILING = 12


class ContextMismatchError(ValueError):
    pass


class CeilingError(ValueError):
    """Raised when a context's dimension exceeds the configured guard."""


class RingElement:
    """Finitely supported integer combination of a context's basis classes."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: "CohomologyContext", terms: Mapping[Hashable, int] | None = None):
        self.ctx = ctx
        clean: dict[Hashable, int] = {}
        for idx, c in (terms or {}).items():
            if c:
                ctx.check_index(idx)
                clean[idx] = clean.get(idx, 0) + int(c)
        self.terms = {i: c for i, c in clean.items() if c}

    def _same(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement) or other.ctx != self.ctx:
            raise ContextMismatchError(f"cannot combine elements of {self.ctx} and {getattr(other, 'ctx', other)}")

    def _lift(self, other):
        if isinstance(other, int):
            return self.ctx.one() * other
        self._same(other)
        return other

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, 0) + c
        return RingElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ctx, {i: c * other for i, c in self.terms.items()})
        return multiply(self.ctx, self, other)

    __rmul__ = __mul__

    def __pow__(self, p: int):
        if p < 0:
            raise ValueError("negative powers are not defined")
        out = self.ctx.one()
        for _ in range(p):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ctx.one() * other
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, idx) -> int:
        return self.terms.get(idx, 0)

    def piece(self, d: int) -> "RingElement":
        """The homogeneous component of degree d."""
        return RingElement(self.ctx, {i: c for i, c in self.terms.items() if self.ctx.degree(i) == d})

    def degrees(self) -> set[int]:
        return {self.ctx.degree(i) for i in self.terms}

    def pieces(self) -> list["RingElement"]:
        return [self.piece(d) for d in range(self.ctx.dimension + 1)]

    def to_text(self) -> str:
        return self.ctx.format_element(self)

    def to_json(self) -> dict[str, int]:
        return {self.ctx.format_index(i): c for i, c in self.ctx.sorted_terms(self)}

    def __repr__(self):
        return f"<{self.ctx.name}: {self.to_text()}>"


class CohomologyContext:
    """Common machinery; subclasses supply the basis and basis products."""

    kind = "abstract"
    hyperplane_name = "H"

    def __init__(self, dimension: int, ceiling: int = DEFAULT_CEILING):
        if dimension > ceiling:
            raise CeilingError(f"{self.name} has dimension {dimension} above the ceiling {ceiling}")
        self.dimension = dimension
        self.ceiling = ceiling

    # identity -------------------------------------------------------------
    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, CohomologyContext) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError

    # basis ----------------------------------------------------------------
    def basis(self, d: int) -> list:
        raise NotImplementedError

    def all_basis(self) -> list:
        return [i for d in range(self.dimension + 1) for i in self.basis(d)]

    def degree(self, idx) -> int:
        raise NotImplementedError

    def check_index(self, idx) -> None:
        if idx not in self._index_set():
            raise ValueError(f"{idx!r} is not a basis index of {self.name}")

    def _index_set(self) -> frozenset:
        cached = self.__dict__.get("_indices")
        if cached is None:
            cached = frozenset(self.all_basis())
            self.__dict__["_indices"] = cached
        return cached

    @property
    def top(self):
        (t,) = self.basis(self.dimension)
        return t

    @property
    def unit(self):
        (u,) = self.basis(0)
        return u

    def mul_basis(self, i, j) -> dict:
        raise NotImplementedError

    # elements -------------------------------------------------------------
    def element(self, terms: Mapping | None = None) -> RingElement:
        return RingElement(self, terms)

    def one(self) -> RingElement:
        return RingElement(self, {self.unit: 1})

    def zero(self) -> RingElement:
        return RingElement(self)

    def basis_element(self, idx) -> RingElement:
        return RingElement(self, {idx: 1})

    def hyperplane(self) -> RingElement:
        raise NotImplementedError

    def degree_one_classes(self) -> list:
        return self.basis(1)

    def tangent_chern(self) -> list[RingElement]:
        raise NotImplementedError

    # rendering ------------------------------------------------------------
    def format_index(self, idx) -> str:
        raise NotImplementedError

    def sorted_terms(self, u: RingElement) -> list:
        return sorted(u.terms.items(), key=lambda t: (self.degree(t[0]), _neg_key(t[0])))

    def format_element(self, u: RingElement) -> str:
        parts = []
        for idx, c in self.sorted_terms(u):
            name = self.format_index(idx)
            mag = abs(c)
            if name == "1":
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def _neg_key(idx):
    # descending lexicographic order inside one degree
    return tuple(-x for x in idx)


class Grassmannian(CohomologyContext):
    kind = "gr"
    hyperplane_name = "sigma1"

    def __init__(self, k: int, n: int, ceiling: int = DEFAULT_CEILING):
        if not (1 <= k < n):
            raise ValueError(f"Gr(k, n) needs 1 <= k < n, got k={k}, n={n}")
        self.k, self.n = k, n
        self.box = Box(k, n - k)
        super().__init__(k * (n - k), ceiling)

    def key(self):
        return ("gr", self.k, self.n)

    @property
    def name(self):
        return f"Gr({self.k},{self.n})"

    def basis(self, d):
        return box_partitions_by_degree(d, self.box)

    def all_basis(self):
        return box_partitions(self.box)

    def degree(self, idx):
        return idx.size

    def check_index(self, idx):
        if not isinstance(idx, Partition) or not self.box.fits(idx):
            raise ValueError(f"{idx!r} is not a partition in the {self.box.rows}x{self.box.cols} box")

    def mul_basis(self, i, j):
        return lr_product(i, j, self.box)

    def schubert(self, *parts: int) -> RingElement:
        return self.basis_element(Partition(parts))

    def hyperplane(self):
        return self.schubert(1)

    def tangent_chern(self):
        from .symmetric import grassmannian_tangent_pieces

        return [self.element(p) for p in grassmannian_tangent_pieces(self.k, self.n, ceiling=max(self.ceiling, self.n))]

    def format_index(self, idx):
        return f"s[{idx.to_text()}]" if idx else "1"


class MultiProjective(CohomologyContext):
    kind = "multi"
    hyperplane_name = "segre"

    def __init__(self, dims: Sequence[int], ceiling: int = DEFAULT_CEILING):
        dims = tuple(int(d) for d in dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"factor dimensions must be positive, got {dims}")
        self.dims = dims
        super().__init__(sum(dims), ceiling)

    def key(self):
        return ("multi",) + self.dims

    @property
    def name(self):
        return " x ".join(f"P^{d}" for d in self.dims)

    def basis(self, d):
        out = [e for e in cartesian(*(range(n + 1) for n in self.dims)) if sum(e) == d]
        return sorted(out, reverse=True)

    def degree(self, idx):
        return sum(idx)

    def mul_basis(self, i, j):
        e = tuple(a + b for a, b in zip(i, j))
        if any(x > n for x, n in zip(e, self.dims)):
            return {}
        return {e: 1}

    def h(self, j: int) -> RingElement:
        e = [0] * len(self.dims)
        e[j] = 1
        return self.basis_element(tuple(e))

    def hyperplane(self):
        out = self.zero()
        for j in range(len(self.dims)):
            out = out + self.h(j)
        return out

    def tangent_chern(self):
        total = self.one()
        for j, n in enumerate(self.dims):
            total = total * (self.one() + self.h(j)) ** (n + 1)
        return total.pieces()

    def format_index(self, idx):
        names = []
        for j, a in enumerate(idx):
            if a:
                names.append(f"h{j + 1}" + (f"^{a}" if a > 1 else ""))
        return "*".join(names) if names else "1"


class ProjectiveSpace(MultiProjective):
    kind = "pn"
    hyperplane_name = "h"

    def __init__(self, n: int, ceiling: int = DEFAULT_CEILING):
        super().__init__((n,), ceiling)
        self.n = n

    def key(self):
        return ("pn", self.n)

    @property
    def name(self):
        return f"P^{self.n}"

    def format_index(self, idx):
        (a,) = idx
        return "1" if a == 0 else ("h" if a == 1 else f"h^{a}")


@lru_cache(maxsize=None)
def _bundle_normal_form(m: int, a: tuple[int, ...], i: int, j: int) -> tuple[tuple[tuple[int, int], int], ...]:
    # h^i xi^j rewritten in the basis h^s xi^t (s <= m, t <= r)
    r = len(a) - 1
    if i > m:
        return ()
    if j <= r:
        return (((i, j), 1),)
    # xi^{r+1} = -sum_{t>=1} (-1)^t e_t(a) h^t xi^{r+1-t}
    out: dict[tuple[int, int], int] = {}
    for t in range(1, r + 2):
        coeff = -((-1) ** t) * _elementary_value(a, t)
        if not coeff:
            continue
        for idx, c in _bundle_normal_form(m, a, i + t, j - t):
            out[idx] = out.get(idx, 0) + coeff * c
    return tuple((k, v) for k, v in out.items() if v)


def _elementary_value(vals: Sequence[int], t: int) -> int:
    total = 0
    for combo in combinations(vals, t):
        p = 1
        for v in combo:
            p *= v
        total += p
    return total


class SplitProjectiveBundle(CohomologyContext):
    kind = "bundle"
    hyperplane_name = "xi"

    def __init__(self, m: int, a: Sequence[int], ceiling: int = DEFAULT_CEILING):
        a = tuple(int(x) for x in a)
        if m < 1 or not a:
            raise ValueError(f"need m >= 1 and a nonempty twist list, got m={m}, a={a}")
        self.m, self.a = m, a
        self.r = len(a) - 1
        super().__init__(m + self.r, ceiling)

    def key(self):
        return ("bundle", self.m) + self.a

    @property
    def name(self):
        return f"P(E_{self.m}({','.join(map(str, self.a))}))"

    def basis(self, d):
        return [(i, d - i) for i in range(min(d, self.m), -1, -1) if d - i <= self.r]

    def degree(self, idx):
        return idx[0] + idx[1]

    def mul_basis(self, i, j):
        return dict(_bundle_normal_form(self.m, self.a, i[0] + j[0], i[1] + j[1]))

    def h(self) -> RingElement:
        return self.basis_element((1, 0))

    def xi(self) -> RingElement:
        if self.r == 0:
            # P(line bundle) = base; xi = -a_0 h
            return self.element(dict(_bundle_normal_form(self.m, self.a, 0, 1)))
        return self.basis_element((0, 1))

    def hyperplane(self):
        return self.xi()

    def relation(self) -> RingElement:
        """prod_i (xi - a_i h), identically zero in the ring."""
        out = self.one()
        for ai in self.a:
            out = out * (self.xi() - self.h() * ai)
        return out

    def tangent_chern(self):
        total = (self.one() + self.h()) ** (self.m + 1)
        for ai in self.a:
            total = total * (self.one() + self.xi() - self.h() * ai)
        return total.pieces()

    def format_index(self, idx):
        i, j = idx
        names = []
        if i:
            names.append("h" + (f"^{i}" if i > 1 else ""))
        if j:
            names.append("xi" + (f"^{j}" if j > 1 else ""))
        return "*".join(names) if names else "1"


@dataclass(frozen=True)
class EmbeddingSpec:
    """A context with a degree-one class H, nonnegative in the degree-one basis."""

    ctx: CohomologyContext
    H: RingElement

    def __post_init__(self):
        if self.H.ctx != self.ctx:
            raise ContextMismatchError("H lives in a different context")
        if not self.H:
            raise ValueError("degenerate embedding: H is the zero class")
        if self.H.degrees() != {1}:
            raise ValueError("H must be homogeneous of degree 1")
        if any(c < 0 for c in self.H.terms.values()):
            raise ValueError("H must be a nonnegative combination of degree-one classes")

    @classmethod
    def standard(cls, ctx: CohomologyContext, multiple: int = 1) -> "EmbeddingSpec":
        return cls(ctx, ctx.hyperplane() * multiple)


# functional surface ---------------------------------------------------------

def multiply(ctx: CohomologyContext, u: RingElement, v: RingElement) -> RingElement:
    """Ring product; truncation can drop terms but never shifts degree."""
    for w in (u, v):
        if not isinstance(w, RingElement) or w.ctx != ctx:
            raise ContextMismatchError(f"element does not belong to {ctx.name}")
    out: dict = {}
    for i, a in u.terms.items():
        for j, b in v.terms.items():
            for k, c in ctx.mul_basis(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return RingElement(ctx, out)


def integrate(ctx: CohomologyContext, u: RingElement) -> int:
    if not isinstance(u, RingElement) or u.ctx != ctx:
        raise ContextMismatchError(f"element does not belong to {ctx.name}")
    return u.coefficient(ctx.top)


def hyperplane_power(spec: EmbeddingSpec, p: int) -> RingElement:
    if not (0 <= p <= spec.ctx.dimension):
        raise ValueError(f"power {p} outside 0..{spec.ctx.dimension}")
    return spec.H ** p


def tangent_chern(ctx: CohomologyContext) -> list[RingElement]:
    return ctx.tangent_chern()


def total_chern(ctx: CohomologyContext) -> RingElement:
    return sum(ctx.tangent_chern(), ctx.zero())


def euler_characteristic(ctx: CohomologyContext) -> int:
    return integrate(ctx, ctx.tangent_chern()[ctx.dimension])


def degree_of_embedding(spec: EmbeddingSpec) -> int:
    return integrate(spec.ctx, hyperplane_power(spec, spec.ctx.dimension))


def poly_in_ring(ctx: CohomologyContext, coeffs: Iterable[int], x: RingElement) -> RingElement:
    """sum_i coeffs[i] * x^i."""
    out, power = ctx.zero(), ctx.one()
    for c in coeffs:
        out = out + power * c
        power = power * x
    return out


def binomial_series(ctx: CohomologyContext, x: RingElement, exponent: int) -> RingElement:
    """(1 + x)^exponent for any integer exponent, truncated at the top degree.

    x must have no degree-zero part.
    """
    if x.piece(0):
        raise ValueError("series argument must have no constant term")
    coeffs = [_gen_binom(exponent, i) for i in range(ctx.dimension + 1)]
    return poly_in_ring(ctx, coeffs, x)


def _gen_binom(e: int, i: int) -> int:
    if e >= 0:
        return comb(e, i)
    return (-1) ** i * comb(-e + i - 1, i)
