"""Brute-force solution counting for binary norm equations over Z/p^k.

This is the oracle side of the torus-volume story: volumes of the unit-norm
set {|x^2 - d y^2| = 1} and the norm-one curve {x^2 - d y^2 = 1} are obtained
from residue counts with no reference to the closed forms they later verify.

Counts reported here are *solution-set* counts: the number of residue pairs
mod p^k that arise from genuine Z_p-points.  For the open unit-norm condition
and for smooth odd-p curves this equals the plain congruence count; at p = 2
the congruence count overshoots (solutions mod 2^k that fail to persist), so
the image is computed by enumerating at a deeper level and projecting.  The
raw congruence counts are kept alongside for transparency.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import is_prime, is_squarefree

_ENUM_BUDGET = 10 ** 9
# Newton: a mod-2^(k+2) congruence solution of the norm-one equation agrees
# with a true Z_2 solution mod 2^k (the gradient has valuation <= 1 there).
_P2_LIFT_BUFFER = 2


class Constraint(enum.Enum):
    UNIT_NORM = "unit"   # |x^2 - d y^2| = 1, an open 2-dimensional set
    NORM_ONE = "one"     # x^2 - d y^2 = 1, a smooth curve (dimension 1)


@dataclass(frozen=True)
class NormEquation:
    epsilon: int
    constraint: Constraint

    def __post_init__(self):
        if not is_squarefree(self.epsilon):
            raise ValueError(f"epsilon = {self.epsilon} must be squarefree")

    @property
    def dim(self) -> int:
        return 2 if self.constraint is Constraint.UNIT_NORM else 1


def _worker_cap() -> int:
    try:
        return max(1, int(os.environ.get("PADIC_ORBITS_THREADS", "1")))
    except ValueError:
        return 1


def _check_budget(p: int, k: int) -> None:
    if p ** (2 * k) > _ENUM_BUDGET:
        raise ValueError(f"enumeration budget exceeded: p^2k = {p ** (2 * k)} > {_ENUM_BUDGET}")


def _square_root_table(m: int) -> dict[int, list[int]]:
    """r -> all x in Z/m with x^2 = r, by one full pass."""
    table: dict[int, list[int]] = {}
    for x in range(m):
        table.setdefault(x * x % m, []).append(x)
    return table


def _unit_norm_count_mod_p(d: int, p: int) -> int:
    # The unit condition only depends on (x, y) mod p; plain double loop.
    # Partitioned over x so the count is a sum of independent range counts.
    parts = _worker_cap()
    bounds = [(i * p) // parts for i in range(parts + 1)]
    total = 0
    for lo, hi in zip(bounds, bounds[1:]):
        total += sum(
            1 for x in range(lo, hi) for y in range(p) if (x * x - d * y * y) % p != 0
        )
    return total


def _norm_one_congruence_count(d: int, p: int, k: int) -> int:
    """Plain count of pairs mod p^k with x^2 - d y^2 = 1 mod p^k."""
    m = p ** k
    sq = _square_root_table(m)
    parts = _worker_cap()
    bounds = [(i * m) // parts for i in range(parts + 1)]
    total = 0
    for lo, hi in zip(bounds, bounds[1:]):
        total += sum(len(sq.get((1 + d * y * y) % m, ())) for y in range(lo, hi))
    return total


def _norm_one_solution_pairs(d: int, p: int, k: int) -> set[tuple[int, int]]:
    m = p ** k
    sq = _square_root_table(m)
    out = set()
    for y in range(m):
        for x in sq.get((1 + d * y * y) % m, ()):
            out.add((x, y))
    return out


def _norm_one_image_count(d: int, p: int, k: int) -> int:
    if p != 2:
        # Smooth over Z_p for odd p: every congruence solution lifts.
        return _norm_one_congruence_count(d, p, k)
    deep = _norm_one_solution_pairs(d, 2, k + _P2_LIFT_BUFFER)
    mask = (1 << k) - 1
    return len({(x & mask, y & mask) for x, y in deep})


def count_mod(eq: NormEquation, p: int, k: int) -> int:
    """Number of residue pairs mod p^k on the solution set of eq.

    Unit-norm counts are exact congruence counts (the condition is determined
    mod p, so every residue pair lifts).  Norm-one counts at p = 2 are images
    of the 2-adic solution set, computed by buffered projection.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_budget(p, k)
    if eq.constraint is Constraint.UNIT_NORM:
        return _unit_norm_count_mod_p(eq.epsilon, p) * p ** (2 * (k - 1))
    return _norm_one_image_count(eq.epsilon, p, k)


def raw_count_mod(eq: NormEquation, p: int, k: int) -> int:
    """Literal congruence-solution count mod p^k (no lifting filter)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    _check_budget(p, k)
    if eq.constraint is Constraint.UNIT_NORM:
        return _unit_norm_count_mod_p(eq.epsilon, p) * p ** (2 * (k - 1))
    return _norm_one_congruence_count(eq.epsilon, p, k)


@dataclass(frozen=True)
class CountProfile:
    p: int
    equation: NormEquation
    counts: tuple[tuple[int, int], ...]
    raw_counts: tuple[tuple[int, int], ...]
    dim: int
    stabilized_from: Optional[int]
    volume: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.equation.epsilon,
            "constraint": self.equation.constraint.value,
            "dim": self.dim,
            "counts": [[k, str(n)] for k, n in self.counts],
            "raw_counts": [[k, str(n)] for k, n in self.raw_counts],
            "stabilized_from": self.stabilized_from,
            "volume": None if self.volume is None else _fr(self.volume),
        }


def _fr(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def volume_profile(eq: NormEquation, p: int, k_max: int) -> CountProfile:
    """Counts for k = 1..k_max plus stabilization detection and the volume.

    Stabilization at k0 means N_{k+1} = p^dim N_k for every k0 <= k < k_max;
    it is only declared once two consecutive scalings have been observed, and
    then volume = N_{k0} / p^(k0 * dim).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    counts = [(k, count_mod(eq, p, k)) for k in range(1, k_max + 1)]
    raw = [(k, raw_count_mod(eq, p, k)) for k in range(1, k_max + 1)]
    dim = eq.dim
    scale = p ** dim
    stabilized: Optional[int] = None
    for k0 in range(1, k_max - 1):
        if all(counts[i][1] == scale * counts[i - 1][1] for i in range(k0, k_max)):
            stabilized = k0
            break
    volume = None
    if stabilized is not None:
        volume = Fraction(counts[stabilized - 1][1], p ** (stabilized * dim))
    return CountProfile(p, eq, tuple(counts), tuple(raw), dim, stabilized, volume)


# --------------------------------------------------------------------------
# 2-adic digit tables


@dataclass(frozen=True)
class DigitConstraint:
    var: str          # "x" or "y"
    index: int
    status: str       # "forced" | "free" | "affine" | "irregular"
    value: Optional[int] = None              # for forced digits
    relation: Optional[str] = None           # for affine digits, e.g. "x1 + y1"

    def to_json(self) -> dict:
        return {
            "var": self.var,
            "index": self.index,
            "status": self.status,
            "value": self.value,
            "relation": self.relation,
        }

    def __repr__(self):
        name = f"{self.var}{self.index}"
        if self.status == "forced":
            return f"{name} = {self.value}"
        if self.status == "affine":
            return f"{name} = {self.relation}"
        return f"{name} {self.status}"


@dataclass(frozen=True)
class DigitComponent:
    anchor: tuple[int, int]   # (x0, y0)
    rows: tuple[DigitConstraint, ...]
    pattern_count: int
    volume: Fraction

    def to_json(self) -> dict:
        return {
            "anchor": list(self.anchor),
            "rows": [r.to_json() for r in self.rows],
            "pattern_count": self.pattern_count,
            "volume": _fr(self.volume),
        }


@dataclass(frozen=True)
class DigitTable:
    equation: NormEquation
    depth: int
    rows: tuple[DigitConstraint, ...]          # full solution set
    components: tuple[DigitComponent, ...]     # grouped by leading digits
    pattern_count: int
    volume_at_depth: Fraction

    def component_at(self, anchor: tuple[int, int]) -> DigitComponent:
        for c in self.components:
            if c.anchor == anchor:
                return c
        raise KeyError(f"no solution component with leading digits {anchor}")

    def to_json(self) -> dict:
        return {
            "d": self.equation.epsilon,
            "depth": self.depth,
            "rows": [r.to_json() for r in self.rows],
            "components": [c.to_json() for c in self.components],
            "pattern_count": self.pattern_count,
            "volume_at_depth": _fr(self.volume_at_depth),
        }


def _gauss_affine_fit(points: list[tuple[int, ...]], j: int) -> Optional[tuple[int, list[int]]]:
    """Fit c_j = a0 + sum a_i c_i over GF(2); None if no affine relation holds."""
    ncols = j + 1
    rows = [list((1,) + pt[:j]) + [pt[j]] for pt in points]
    pivots, r0 = [], 0
    for c in range(ncols):
        pr = next((r for r in range(r0, len(rows)) if rows[r][c]), None)
        if pr is None:
            continue
        rows[r0], rows[pr] = rows[pr], rows[r0]
        for r in range(len(rows)):
            if r != r0 and rows[r][c]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[r0])]
        pivots.append(c)
        r0 += 1
    if not all(any(row[:ncols]) or not row[ncols] for row in rows):
        return None
    coeff = [0] * ncols
    for idx, c in enumerate(pivots):
        coeff[c] = rows[idx][ncols]
    const, lin = coeff[0], coeff[1:]
    for pt in points:
        if (const ^ (sum(a & b for a, b in zip(lin, pt)) & 1)) != pt[j]:
            return None
    return const, lin


def _classify_digits(vecs: set[tuple[int, ...]], depth: int) -> tuple[DigitConstraint, ...]:
    names = [(v, i) for i in range(depth) for v in ("x", "y")]
    out = []
    for j, (var, idx) in enumerate(names):
        prev = {v[:j] for v in vecs}
        now = {v[: j + 1] for v in vecs}
        if len(now) == 2 * len(prev):
            out.append(DigitConstraint(var, idx, "free"))
            continue
        if len(now) != len(prev):
            out.append(DigitConstraint(var, idx, "irregular"))
            continue
        fit = _gauss_affine_fit(sorted(now), j)
        if fit is None:
            out.append(DigitConstraint(var, idx, "irregular"))
            continue
        const, lin = fit
        terms = [f"{names[i][0]}{names[i][1]}" for i in range(j) if lin[i]]
        if not terms:
            out.append(DigitConstraint(var, idx, "forced", value=const))
        else:
            rel = " + ".join(terms) + (" + 1" if const else "")
            out.append(DigitConstraint(var, idx, "affine", relation=rel))
    return tuple(out)


def digit_table(eq: NormEquation, depth: int) -> DigitTable:
    """2-adic digit analysis of the solution set, to the given digit depth.

    Enumerates solutions mod 2^(depth + buffer), projects to the first
    `depth` digits of (x, y), and classifies each digit in the order
    x0, y0, x1, y1, ... as forced, free, or affinely determined by earlier
    digits.  The same classification is emitted per solution component
    (grouped by the leading digit pair), which is the shape hand analyses
    of these equations usually take.
    """
    if eq.constraint is not Constraint.NORM_ONE:
        raise ValueError("digit tables are defined for the norm-one constraint")
    if not 1 <= depth <= 6:
        raise ValueError("depth must be between 1 and 6")
    pts = _norm_one_solution_pairs(eq.epsilon, 2, depth + _P2_LIFT_BUFFER + 1)
    mask = (1 << depth) - 1
    proj = {(x & mask, y & mask) for x, y in pts}

    def to_vec(x: int, y: int) -> tuple[int, ...]:
        return tuple(b for i in range(depth) for b in (((x >> i) & 1), ((y >> i) & 1)))

    vecs = {to_vec(x, y) for x, y in proj}
    by_anchor: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    for x, y in proj:
        by_anchor.setdefault((x & 1, y & 1), set()).add(to_vec(x, y))
    components = tuple(
        DigitComponent(
            anchor,
            _classify_digits(sub, depth),
            len(sub),
            Fraction(len(sub), 1 << depth),
        )
        for anchor, sub in sorted(by_anchor.items())
    )
    return DigitTable(
        eq,
        depth,
        _classify_digits(vecs, depth),
        components,
        len(vecs),
        Fraction(len(vecs), 1 << depth),
    )
