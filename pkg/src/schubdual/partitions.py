"""Partition combinatorics: conjugation, boxes, Pieri strips and
Littlewood-Richardson coefficients.

Partitions are stored as tuples with trailing zeros stripped, so
``Partition((3, 1, 0)) == Partition((3, 1))``.  The canonical order on
partitions of a fixed size is lexicographic descending; every listing
returned here uses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(o <= self[i] for i, o in enumerate(other))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip().strip("[]()").strip()
        if not text:
            return cls()
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc

    def __repr__(self) -> str:
        return f"Partition([{self.to_text()}])"


@dataclass(frozen=True)
class Box:
    """A rows x cols rectangle; Gr(k, n) uses Box(k, n - k)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"box sides must be positive, got {self.rows}x{self.cols}")

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.rows and (not lam or lam[0] <= self.cols)

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        return Partition([self.cols] * self.rows)


def conjugate(lam: Partition) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def complement_in_box(lam: Partition, box: Box) -> Partition:
    lam = Partition(lam)
    if not box.fits(lam):
        raise ValueError(f"{lam} does not fit in a {box.rows}x{box.cols} box")
    return Partition(box.cols - lam.part(box.rows - 1 - i) for i in range(box.rows))


def horizontal_strip_successors(lam: Partition, p: int, box: Box | None = None) -> list[Partition]:
    """All mu containing lam with mu/lam a horizontal strip of p cells.

    With a box, lam must fit and results outside the box are dropped.  A
    horizontal strip is characterised by interlacing: lam_i <= mu_i <= lam_{i-1}.
    """
    lam = Partition(lam)
    if box is not None and not box.fits(lam):
        raise ValueError(f"{lam} does not fit in a {box.rows}x{box.cols} box")
    nrows = len(lam) + 1
    if box is not None:
        nrows = min(nrows, box.rows)
    out: list[Partition] = []

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == nrows:
            if left == 0:
                out.append(Partition(acc))
            return
        lo = lam.part(i)
        hi = lo + left if i == 0 else min(lam.part(i - 1), lo + left)
        if box is not None:
            hi = min(hi, box.cols)
        for v in range(hi, lo - 1, -1):
            rec(i + 1, left - (v - lo), acc + [v])

    if p >= 0:
        rec(0, p, [])
    return sorted(out, reverse=True)


def partitions_of(d: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of d in lexicographic descending order, optionally bounded."""
    if d < 0:
        return
    if max_part is None:
        max_part = d

    def rec(left: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if left == 0:
            yield Partition(acc)
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for v in range(min(left, cap), 0, -1):
            yield from rec(left - v, v, acc + [v])

    yield from rec(d, max_part, [])


def box_partitions_by_degree(d: int, box: Box) -> list[Partition]:
    return list(partitions_of(d, box.rows, box.cols))


def box_partitions(box: Box) -> list[Partition]:
    """Every partition in the box, by degree then lexicographic descending."""
    return [lam for d in range(box.area + 1) for lam in box_partitions_by_degree(d, box)]


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    # Fill nu/lam in reading order (rows top to bottom, right to left) with
    # content mu, rows weakly increasing, columns strictly increasing, and the
    # reading word a lattice word.
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, lam.part(r) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(mu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = 1 if above is None else above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += rec(idx + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return rec(0)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam, mu}.

    Counts LR skew tableaux of shape nu/lam and content mu.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not nu.contains(lam) or not nu.contains(mu):
        return 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr_product(lam: Partition, mu: Partition, box: Box | None) -> tuple[tuple[Partition, int], ...]:
    d = lam.size + mu.size
    max_len = len(lam) + len(mu)
    max_part = lam.part(0) + mu.part(0)
    if box is not None:
        max_len = min(max_len, box.rows)
        max_part = min(max_part, box.cols)
    out = []
    for nu in partitions_of(d, max_len, max_part):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_product(lam: Partition, mu: Partition, box: Box | None = None) -> dict[Partition, int]:
    """Expansion of s_lam * s_mu as {nu: c}, truncated to the box if given."""
    return dict(_lr_product(Partition(lam), Partition(mu), box))
