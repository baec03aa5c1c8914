"""Maya-diagram model of torus fixed points.

A diagram has n rows of cells grouped in blocks of width l; the cell at
(row i, in-block column x, block N in Z+1/2) sits at flat position
t = l*(N - 1/2) + x - 1, so block 1/2 covers t = 0..l-1.  Rows are stored as
the positions flipped relative to the vacuum (gray exactly on t < 0): a flip
at t >= 0 is a particle, at t < 0 a hole.

Statistics, for a query built from a weight pair (lam, mu):

* row charges: particles minus holes per row; row 1 matches the last profile
  entry of mu and row i+1 the i-th entry (the distinguished cross reads the
  wrapped entry).
* column statistic, convention "a" (default): per residue class of columns,
  particles in positive blocks minus holes in negative blocks, aggregated
  over all blocks and rows; convention "b" weights each block by its depth.
* base dimension v0: sum over holes of ceil(-t/l) plus sum over particles of
  floor(t/l) -- the winding count of the unwound diagram.  The hole part
  alone is the naive block-depth count; the particle part is forced by the
  partition fixture (the one-row, width-one case must count partitions by
  size).

With convention "a" and the v0 statistic above, a query fixes row charges,
residue-class counts and v0, which bounds hole positions by -v0*l and
particle positions below (v0+1)*l; enumeration over that window is complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .weights import (
    AffineWeight,
    coroot_pairing,
    dominance_leq,
    root_difference,
    simple_root,
    to_dominant,
)
from .young import GYDiagram, gyd_transpose
from .fock import string_top

CONVENTIONS = ("a", "b")
DEFAULT_CONVENTION = "a"


@dataclass(frozen=True)
class MayaDiagram:
    n: int
    l: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.l < 1:
            raise ValueError("need n >= 1 rows and block width l >= 1")
        rows = tuple(tuple(sorted(int(t) for t in row)) for row in self.rows)
        if len(rows) != self.n:
            raise ValueError("row count must equal n")
        for row in rows:
            if len(set(row)) != len(row):
                raise ValueError("flip positions within a row must be distinct")
        object.__setattr__(self, "rows", rows)

    def particles(self, i: int) -> tuple[int, ...]:
        return tuple(t for t in self.rows[i] if t >= 0)

    def holes(self, i: int) -> tuple[int, ...]:
        return tuple(t for t in self.rows[i] if t < 0)

    def sort_key(self):
        return self.rows


@dataclass(frozen=True)
class MayaStats:
    row_charge: tuple[int, ...]
    column_stat: tuple[int, ...]
    v0: int


def maya_stats(m: MayaDiagram, convention: str = DEFAULT_CONVENTION) -> MayaStats:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    charges = []
    col = [0] * m.l
    v0 = 0
    for i in range(m.n):
        ps, hs = m.particles(i), m.holes(i)
        charges.append(len(ps) - len(hs))
        for t in ps:
            depth = t // m.l + 1 if convention == "b" else 1
            col[t % m.l] += depth
            v0 += t // m.l
        for t in hs:
            depth = (-t - 1) // m.l + 1
            col[t % m.l] -= depth if convention == "b" else 1
            v0 += depth
    return MayaStats(tuple(charges), tuple(col), v0)


def maya_to_json(m: MayaDiagram) -> dict:
    return {"n": m.n, "l": m.l, "rows": [list(r) for r in m.rows]}


def maya_from_json(j: dict) -> MayaDiagram:
    return MayaDiagram(int(j["n"]), int(j["l"]), tuple(tuple(r) for r in j["rows"]))


# -- queries and enumeration -------------------------------------------


@dataclass(frozen=True)
class FixedPointQuery:
    n: int
    l: int
    row_charges: tuple[int, ...]
    column_stats: tuple[int, ...]
    v0: int

    def __post_init__(self):
        object.__setattr__(self, "row_charges", tuple(int(c) for c in self.row_charges))
        object.__setattr__(self, "column_stats", tuple(int(c) for c in self.column_stats))
        if len(self.row_charges) != self.n or len(self.column_stats) != self.l:
            raise ValueError("target lengths must match n and l")
        if sum(self.row_charges) != sum(self.column_stats):
            raise ValueError("inconsistent targets: row and column totals differ")
        if self.v0 < 0:
            raise ValueError("inconsistent targets: base dimension is negative")

    @classmethod
    def from_weights(cls, lam: AffineWeight, mu: AffineWeight) -> "FixedPointQuery":
        if lam.n != mu.n or lam.level != mu.level:
            raise ValueError("rank/level mismatch")
        if lam.level < 1:
            raise ValueError("queries need level >= 1")
        if not lam.is_dominant():
            raise ValueError("first weight must be dominant")
        if lam.charge != mu.charge:
            raise ValueError("inconsistent targets: charge mismatch")
        v0 = lam.delta - mu.delta
        if v0.denominator != 1 or v0 < 0:
            raise ValueError("inconsistent targets: base dimension must be a nonnegative integer")
        tlam = gyd_transpose(GYDiagram(lam.n, lam.level, lam.profile)).entries
        prof = mu.profile
        charges = (prof[-1],) + prof[:-1]
        return cls(lam.n, lam.level, charges, tlam, int(v0))


@dataclass(frozen=True)
class EnumerationResult:
    diagrams: tuple[MayaDiagram, ...]
    derived_bound: int
    complete: bool


def _subsets_within_cost(positions, costs, budget):
    """Subsets of the cost-sorted position list with total cost <= budget."""
    out = [((), 0)]
    for pos, cost in zip(positions, costs):
        extra = []
        for chosen, used in out:
            if used + cost <= budget:
                extra.append((chosen + (pos,), used + cost))
        out.extend(extra)
    return out


def _row_candidates(n: int, l: int, charge: int, budget: int) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """(flips, v0 contribution, residue-class counts) for one row within the budget.

    A hole at t < 0 costs ceil(-t/l) and a particle at t >= 0 costs
    floor(t/l), so every admissible flip lives in a window fixed by the
    budget; enumeration is pruned by remaining cost, not filtered after the
    fact.
    """
    holes_window = list(range(-1, -budget * l - 1, -1))
    hole_sets = _subsets_within_cost(holes_window, [(-h - 1) // l + 1 for h in holes_window], budget)
    particle_window = list(range((budget + 1) * l))
    particle_sets = _subsets_within_cost(particle_window, [p // l for p in particle_window], budget)
    by_count: dict[int, list] = {}
    for parts, pcost in particle_sets:
        by_count.setdefault(len(parts), []).append((parts, pcost))
    out = []
    for holes, hcost in hole_sets:
        pcount = charge + len(holes)
        for parts, pcost in by_count.get(pcount, ()):
            if hcost + pcost > budget:
                continue
            cols = [0] * l
            for p in parts:
                cols[p % l] += 1
            for h in holes:
                cols[h % l] -= 1
            out.append((tuple(sorted(holes + parts)), hcost + pcost, tuple(cols)))
    out.sort()
    return out


def enumerate_fixed_points(
    query: FixedPointQuery,
    energy_bound: Optional[int] = None,
    convention: str = DEFAULT_CONVENTION,
) -> EnumerationResult:
    """All diagrams matching the query targets, in lexicographic row order.

    The v0 target alone bounds every flip position, so the derived bound
    makes the enumeration complete; a smaller explicit energy_bound
    restricts the per-row contribution and is reported as incomplete.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    derived = query.v0
    bound = derived if energy_bound is None else min(energy_bound, derived)
    complete = bound >= derived
    n, l = query.n, query.l

    per_row = [_row_candidates(n, l, query.row_charges[i], bound) for i in range(n)]
    found: list[MayaDiagram] = []

    def fill(i: int, rows, used: int):
        if i == n:
            if used != query.v0:
                return
            m = MayaDiagram(n, l, tuple(rows))
            st = maya_stats(m, convention)
            if st.column_stat == query.column_stats:
                found.append(m)
            return
        for flips, cost, _cols in per_row[i]:
            if used + cost > query.v0:
                continue
            fill(i + 1, rows + [flips], used + cost)

    fill(0, [], 0)
    found.sort(key=MayaDiagram.sort_key)
    return EnumerationResult(tuple(found), derived, complete)


# -- existence, deformation, restriction --------------------------------


def t_fixed_point_exists(lam: AffineWeight, mu: AffineWeight) -> bool:
    """Dominance test: the orbit representative of mu lies below lam."""
    if lam.n != mu.n or lam.level != mu.level:
        raise ValueError("rank/level mismatch")
    if not lam.is_dominant():
        raise ValueError("first weight must be dominant")
    ok, _ = dominance_leq(to_dominant(mu), lam)
    return ok


@dataclass(frozen=True)
class DeformedPoint:
    mu1: AffineWeight
    mu2: AffineWeight
    v1: tuple[int, ...]
    v2: tuple[int, ...]


def deformed_fixed_points(
    lam1: AffineWeight, lam2: AffineWeight, mu: AffineWeight
) -> tuple[DeformedPoint, ...]:
    """All splittings mu = mu1 + mu2 with fixed points on both factors.

    Splittings range over the positive cone of lam1 + lam2 - mu; the delta
    coefficient of each factor follows from its share of alpha_0.
    """
    if lam1.n != lam2.n or lam1.n != mu.n:
        raise ValueError("rank mismatch")
    if lam1.level + lam2.level != mu.level:
        raise ValueError("levels of the factors must sum to the level of mu")
    if not (lam1.is_dominant() and lam2.is_dominant()):
        raise ValueError("factor weights must be dominant")
    total = root_difference(lam1 + lam2, mu)
    if not total.is_nonnegative():
        return ()
    n = mu.n
    alphas = [simple_root(n, a) for a in range(n)]
    out = []

    def assemble(coeffs):
        w = lam1
        for a, c in enumerate(coeffs):
            if c:
                w = w - alphas[a].scale(c)
        return w

    def splits(i, acc):
        if i == n:
            yield tuple(acc)
            return
        for c in range(total.coeffs[i] + 1):
            yield from splits(i + 1, acc + [c])

    for v1 in splits(0, []):
        mu1 = assemble(v1)
        v2 = tuple(t - c for t, c in zip(total.coeffs, v1))
        mu2 = lam2
        for a, c in enumerate(v2):
            if c:
                mu2 = mu2 - alphas[a].scale(c)
        if t_fixed_point_exists(lam1, mu1) and t_fixed_point_exists(lam2, mu2):
            out.append(DeformedPoint(mu1, mu2, v1, v2))
    return tuple(out)


@dataclass(frozen=True)
class Sl2Stratum:
    kappa: int
    tau1: int
    tau2: int
    v: int


@dataclass(frozen=True)
class Sl2RestrictionData:
    lambda_prime: int
    mu_prime: int
    strata: tuple[Sl2Stratum, ...]


def sl2_restriction(lam: AffineWeight, mu: AffineWeight, i: int, depth: int) -> Sl2RestrictionData:
    """Rank-one restriction data in direction i.

    mu' is the coroot pairing; lambda' is computed from the module side (the
    top of the i-string through mu) and satisfies lambda' >= |mu'| whenever
    mu itself is a module weight.  The tau data per stratum is reported for
    consistency checking, not used to derive lambda'.
    """
    mu_p = coroot_pairing(mu, i)
    lam_p = string_top(lam, mu, i, depth)
    if i == 0:
        base1 = mu.profile[-1] + mu.level
        base2 = mu.profile[0]
    else:
        base1 = mu.profile[i - 1]
        base2 = mu.profile[i]
    strata = []
    for v in range((lam_p - mu_p) // 2 + 1):
        strata.append(Sl2Stratum(kappa=mu_p + 2 * v, tau1=base1 + v, tau2=base2 - v, v=v))
    return Sl2RestrictionData(lam_p, mu_p, tuple(strata))


# -- unwinding and rank-one dimensions ----------------------------------


@dataclass(frozen=True)
class AInfinityWeight:
    """Top weight minus a finite nonnegative combination of doubly-infinite simple roots."""

    coeffs: tuple[tuple[int, int], ...]  # (index, coefficient), sorted

    def __post_init__(self):
        cc = tuple(sorted((int(i), int(c)) for i, c in self.coeffs if c))
        if any(c < 0 for _, c in cc):
            raise ValueError("coefficients must be nonnegative")
        if len({i for i, _ in cc}) != len(cc):
            raise ValueError("duplicate root indices")
        object.__setattr__(self, "coeffs", cc)

    def residue_totals(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for idx, c in self.coeffs:
            out[idx % n] += c
        return tuple(out)


def unwind_to_a_infinity(n: int, split: Sequence[tuple[int, int, int]]) -> AInfinityWeight:
    """Unwind a table of (residue i, winding m, count) to the line: index m*n + i."""
    coeffs: dict[int, int] = {}
    for i, m, v in split:
        if not 0 <= i < n:
            raise ValueError("residue out of range")
        if v < 0:
            raise ValueError("counts must be nonnegative")
        if v:
            idx = m * n + i
            coeffs[idx] = coeffs.get(idx, 0) + v
    return AInfinityWeight(tuple(coeffs.items()))


@dataclass(frozen=True)
class AttractingData:
    attracting_dim: int
    module_dim: int


def attracting_dim_a1(w: int, v: int) -> AttractingData:
    """Attracting-cell dimension v and companion module dimension w + 1."""
    if v < 0 or w < 0:
        raise ValueError("dimensions must be nonnegative")
    if v > w:
        raise ValueError("no fixed point: v exceeds w")
    return AttractingData(v, w + 1)
