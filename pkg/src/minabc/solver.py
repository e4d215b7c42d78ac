"""Exact minimization of the closed-form ABC objective at a given order.

For a fixed branch size z the order equation is a linear Diophantine
constraint

    n_z * (7z + 1) + n_zp1 * (7z + 8) = R,

whose nonnegative solutions form one residue class modulo 7z + 8 (the
two coefficients differ by 7 and are coprime).  Feasible candidates are
therefore enumerated cell by cell -- a cell fixes z, the modified-branch
choice and the root-hub counts -- by jumping straight to the residue
class, never scanning.

Degree-threshold prunings restrict the search once the root degree is
large: candidates with root degree >= 1228 only need z in {50, 51, 52}
with no four-leg hubs and no forked/double-modified branch (a single
one-two-leg-hub branch survives up to degree 1440), root hubs disappear
at degree >= 2956, and beyond 3249 the number of size-51 branches is
capped at 364 and size-53 at 178.  Tier boundaries partition the
candidate space by root degree, so no candidate is seen twice.  The
unpruned path (``prune=False``) scans the full constraint box and is the
soundness oracle for the pruned one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal

import numpy as np

from .family import (
    MAX_FOUR_LEG,
    MAX_ROOT_HUBS,
    Z_MAX,
    Z_MIN,
    FamilyParams,
    closed_form_abc,
    closed_form_abc_hp,
    lex_key,
    order_of,
    validate,
)

MIN_FAMILY_ORDER = 107  # smallest member: a single size-15 branch
CHARACTERIZED_MIN_ORDER = 1000  # orders below are answered advisory-only

# Degree thresholds for the prunings.
PRUNE_DEGREE = 1228  # beyond: z in {50,51,52}, no four-leg hubs, no b_star/b2
PRUNE_DEGREE_NO_B1 = 1441  # beyond: no one-two-leg-hub branch either
PRUNE_DEGREE_NO_ROOT_HUBS = 2956  # beyond: no root hubs at all
PRUNE_DEGREE_COUNT_CAPS = 3249  # beyond: at most 364 size-51, 178 size-53 branches
CAP_51 = 364
CAP_53 = 178

HP_REQUIRED_ORDER = 10**9  # binary64 cannot rank candidates beyond this order
TIE_REL_TOL = 1e-12  # binary64 tie window (relative)
HP_TIE_REL_TOL = Decimal("1e-25")  # high-precision tie window (relative)

_SQRT2_HALF = math.sqrt(2.0) / 2.0


class InfeasibleOrderError(ValueError):
    """No member of the candidate family has the requested order."""


@dataclass(frozen=True)
class _Special:
    """The at-most-one modified branch attached to the root, if any."""

    kind: str  # "none" | "star" | "b1" | "b2" | "b4"
    order_add: int = 0
    degree_add: int = 0
    k1: int = 0
    k2: int = 0
    n4: int = 0


def _specials_for(z: int, *, allow_star=True, allow_b1=True, allow_b2=True, allow_b4=True):
    yield _Special("none")
    if allow_star:
        yield _Special("star", order_add=7 * z + 4, degree_add=1)
    if allow_b1:
        for k1 in range(z - 5, z + 1):
            yield _Special("b1", order_add=7 * k1 - 1, degree_add=1, k1=k1)
    if allow_b2:
        for k2 in range(z - 9, z + 1):
            yield _Special("b2", order_add=7 * k2 - 3, degree_add=1, k2=k2)
    if allow_b4:
        for n4 in range(1, MAX_FOUR_LEG + 1):
            yield _Special("b4", order_add=9 * n4, degree_add=n4, n4=n4)


@dataclass
class SolveResult:
    n: int
    best: FamilyParams
    abc_value: float
    abc_value_hp: Decimal
    ties: list[FamilyParams] = field(default_factory=list)
    nodes_explored: int = 0
    characterized: bool = True
    pruned: bool = True


@dataclass
class SolveOutcome:
    """One entry of a solve_range result; error is set instead of result
    when the order is infeasible."""

    n: int
    result: SolveResult | None = None
    error: str | None = None


class _Collector:
    """Running minimum plus all candidates near it.

    Keeps every candidate whose binary64 value is within a conservative
    window of the running minimum; the window is wide enough that any
    candidate tied with the final minimum at TIE_REL_TOL survives.
    """

    __slots__ = ("best", "near", "count", "window")

    def __init__(self, window: float = 5e-12):
        self.best = math.inf
        self.near: list[tuple[float, FamilyParams]] = []
        self.count = 0
        self.window = window

    def offer(self, values: np.ndarray, params_of) -> None:
        self.count += len(values)
        if not len(values):
            return
        m = float(values.min())
        if m < self.best:
            self.best = m
        cut = self.best * (1.0 + self.window) + 1e-300
        idx = np.nonzero(values <= cut)[0]
        for i in idx:
            self.near.append((float(values[i]), params_of(int(i))))

    def finalists(self) -> list[tuple[float, FamilyParams]]:
        cut = self.best * (1.0 + self.window) + 1e-300
        return [(v, p) for v, p in self.near if v <= cut]


def _cell_scan(
    n: int,
    z: int,
    special: _Special,
    collector: _Collector,
    *,
    n3_max: int | None,
    d_lo: int = 1,
    d_hi: int | None = None,
    nz_cap: int | None = None,
    nzp1_cap: int | None = None,
) -> None:
    """Enumerate and score every candidate of one (z, special) cell.

    Candidates are the lattice points of the order equation, intersected
    with the requested root-degree window and count caps.  Work is
    vectorized across the n3 axis and across the solutions of each line.
    """
    a = 7 * z + 1
    b = a + 7
    r_base = n - 1 - special.order_add
    if r_base < a:  # at least one plain branch is required
        return
    if n3_max is None:
        n3_max = MAX_ROOT_HUBS - special.n4
    n3_hi = min(n3_max, (r_base - a) // 7)
    if n3_hi < 0:
        return

    n3 = np.arange(0, n3_hi + 1, dtype=np.int64)
    R = r_base - 7 * n3
    binv = pow(b, -1, a)
    res = (R % a) * binv % a  # n_zp1 residue class mod a

    q_hi = R // b
    if nzp1_cap is not None:
        q_hi = np.minimum(q_hi, nzp1_cap)
    q_lo = np.zeros_like(R)
    if nz_cap is not None:
        q_lo = np.maximum(q_lo, -((a * nz_cap - R) // b))
    c_deg = special.degree_add + n3  # root degree minus n_z + n_zp1
    # degree window maps to an n_zp1 window: d = (R - 7*q)/a + c_deg
    s_lo = np.maximum(d_lo - c_deg, 1)  # at least one plain branch
    q_hi = np.minimum(q_hi, (R - a * s_lo) // 7)
    if d_hi is not None:
        s_hi = d_hi - c_deg
        q_lo = np.maximum(q_lo, -((a * s_hi - R) // 7))

    first = res + a * ((q_lo - res + a - 1) // a)
    last = res + a * ((q_hi - res) // a)
    counts = (last - first) // a + 1
    counts = np.where((counts > 0) & (R >= 0), counts, 0)
    total = int(counts.sum())
    if total == 0:
        return

    keep = counts > 0
    n3k, Rk, firstk, countsk = n3[keep], R[keep], first[keep], counts[keep]
    rows = np.repeat(np.arange(len(countsk)), countsk)
    offsets = np.arange(total) - np.repeat(np.cumsum(countsk) - countsk, countsk)
    n_zp1 = firstk[rows] + a * offsets
    n_z = (Rk[rows] - b * n_zp1) // a
    n3v = n3k[rows]
    d = n_z + n_zp1 + n3v + special.degree_add

    dd = d.astype(np.float64)

    def w(c: int) -> np.ndarray:
        return np.sqrt((dd + (c - 2)) / (dd * c))

    int_z = z * math.sqrt((z + 3) / ((z + 1) * 4.0)) + 6 * z * _SQRT2_HALF
    int_zp1 = (z + 1) * math.sqrt((z + 4) / ((z + 2) * 4.0)) + 6 * (z + 1) * _SQRT2_HALF
    values = n_z * (w(z + 1) + int_z) + n_zp1 * (w(z + 2) + int_zp1)
    values += n3v * (w(4) + 6 * _SQRT2_HALF)
    if special.kind == "star":
        values += w(z + 1) + z * math.sqrt((z + 3) / ((z + 1) * 4.0))
        values += (6 * z + 2) * _SQRT2_HALF + math.sqrt(5.0 / 12.0)
    elif special.kind == "b1":
        k1 = special.k1
        values += w(k1 + 1) + (k1 - 1) * math.sqrt((k1 + 3) / ((k1 + 1) * 4.0))
        values += math.sqrt((k1 + 2) / ((k1 + 1) * 3.0)) + (6 * (k1 - 1) + 4) * _SQRT2_HALF
    elif special.kind == "b2":
        k2 = special.k2
        values += w(k2 + 1) + (k2 - 2) * math.sqrt((k2 + 3) / ((k2 + 1) * 4.0))
        values += 2 * math.sqrt((k2 + 2) / ((k2 + 1) * 3.0)) + (6 * (k2 - 2) + 8) * _SQRT2_HALF
    elif special.kind == "b4":
        values += special.n4 * (w(5) + 8 * _SQRT2_HALF)

    def params_of(i: int) -> FamilyParams:
        return FamilyParams(
            z=z,
            n_z=int(n_z[i]),
            n_zp1=int(n_zp1[i]),
            n3=int(n3v[i]),
            n4=special.n4,
            b_star=1 if special.kind == "star" else 0,
            b1=1 if special.kind == "b1" else 0,
            b2=1 if special.kind == "b2" else 0,
            k1=special.k1,
            k2=special.k2,
        )

    collector.offer(values, params_of)


def _scan_all(n: int, collector: _Collector, *, prune: bool) -> None:
    if not prune:
        for z in range(Z_MIN, Z_MAX + 1):
            for sp in _specials_for(z):
                _cell_scan(n, z, sp, collector, n3_max=None)
        return

    # Tier A: unrestricted shapes while the root degree stays below 1228.
    for z in range(Z_MIN, Z_MAX + 1):
        for sp in _specials_for(z):
            _cell_scan(n, z, sp, collector, n3_max=None, d_hi=PRUNE_DEGREE - 1)

    # Tiers B: root degree >= 1228 forces z in {50, 51, 52}.
    for z in (50, 51, 52):
        # one-two-leg-hub branch still possible up to degree 1440
        for sp in _specials_for(z, allow_star=False, allow_b2=False, allow_b4=False):
            _cell_scan(
                n, z, sp, collector, n3_max=MAX_ROOT_HUBS,
                d_lo=PRUNE_DEGREE, d_hi=PRUNE_DEGREE_NO_B1 - 1,
            )
        plain = _Special("none")
        _cell_scan(
            n, z, plain, collector, n3_max=MAX_ROOT_HUBS,
            d_lo=PRUNE_DEGREE_NO_B1, d_hi=PRUNE_DEGREE_NO_ROOT_HUBS - 1,
        )
        _cell_scan(
            n, z, plain, collector, n3_max=0,
            d_lo=PRUNE_DEGREE_NO_ROOT_HUBS, d_hi=PRUNE_DEGREE_COUNT_CAPS - 1,
        )
        nz_cap = CAP_51 if z == 51 else None
        nzp1_cap = {50: CAP_51, 52: CAP_53}.get(z)
        _cell_scan(
            n, z, plain, collector, n3_max=0,
            d_lo=PRUNE_DEGREE_COUNT_CAPS, nz_cap=nz_cap, nzp1_cap=nzp1_cap,
        )


def solve(n: int, *, prune: bool = True, hp: bool | None = None) -> SolveResult:
    """Minimize the closed-form ABC objective over all candidates of order n.

    Raises InfeasibleOrderError when no candidate has that order.  With
    ``prune=False`` the full constraint box is enumerated (the soundness
    oracle for the prunings).  High-precision re-ranking of the leading
    candidates runs whenever requested, whenever binary64 values tie, and
    always for n > 1e9.
    """
    n = int(n)
    if n < MIN_FAMILY_ORDER:
        raise InfeasibleOrderError(f"no candidate tree has order {n} (minimum {MIN_FAMILY_ORDER})")
    if not prune and n > 20_000_000:
        raise ValueError(
            "unpruned enumeration visits ~25 candidates per vertex of order; "
            "beyond 2e7 use the pruned solver"
        )
    collector = _Collector()
    _scan_all(n, collector, prune=prune)
    finalists = collector.finalists()
    if not finalists:
        raise InfeasibleOrderError(f"no candidate tree has order {n}")

    best_val = min(v for v, _ in finalists)
    tied = [(v, p) for v, p in finalists if v <= best_val * (1.0 + TIE_REL_TOL)]
    hp_mode = bool(hp) or n > HP_REQUIRED_ORDER or len(tied) > 1

    if hp_mode:
        hp_vals = [(closed_form_abc_hp(p), p) for _, p in tied]
        hp_min = min(hv for hv, _ in hp_vals)
        close = [
            (hv, p)
            for hv, p in hp_vals
            if abs(hv - hp_min) <= HP_TIE_REL_TOL * abs(hp_min)
        ]
        best = min((p for _, p in close), key=lex_key)
        ties = sorted((p for _, p in close if p != best), key=lex_key)
        hp_best = closed_form_abc_hp(best)
    else:
        best = min((p for _, p in tied), key=lex_key)
        ties = []
        hp_best = closed_form_abc_hp(best)

    for p in [best] + ties:
        validate(p)
        assert order_of(p) == n
    return SolveResult(
        n=n,
        best=best,
        abc_value=closed_form_abc(best),
        abc_value_hp=hp_best,
        ties=ties,
        nodes_explored=collector.count,
        characterized=n >= CHARACTERIZED_MIN_ORDER,
        pruned=prune,
    )


def solve_range(n_lo: int, n_hi: int, *, prune: bool = True, hp: bool | None = None,
                threads: int = 1) -> list[SolveOutcome]:
    """Solve every order in [n_lo, n_hi]; per-order errors do not abort.

    ``threads`` > 1 fans orders out to a thread pool; outputs keep
    ascending order either way and are identical to a single-threaded run.
    """
    orders = list(range(int(n_lo), int(n_hi) + 1))

    def one(m: int) -> SolveOutcome:
        try:
            return SolveOutcome(n=m, result=solve(m, prune=prune, hp=hp))
        except InfeasibleOrderError as exc:
            return SolveOutcome(n=m, error=str(exc))

    if threads <= 1 or len(orders) <= 1:
        return [one(m) for m in orders]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, orders))


def enumerate_feasible(n: int):
    """Yield every valid parameter tuple of order n, each exactly once.

    Pure-Python generator over the same cell decomposition as the solver:
    for each cell the order equation is solved by modular inverse, so no
    counter is scanned.  Deterministic order: z ascending, modified-branch
    choice, n3 ascending, then n_zp1 ascending along the solution line.
    """
    n = int(n)
    for z in range(Z_MIN, Z_MAX + 1):
        a = 7 * z + 1
        b = a + 7
        binv = pow(b, -1, a)
        for sp in _specials_for(z):
            r_base = n - 1 - sp.order_add
            if r_base < a:
                continue
            n3_hi = min(MAX_ROOT_HUBS - sp.n4, (r_base - a) // 7)
            for n3 in range(0, n3_hi + 1):
                R = r_base - 7 * n3  # R >= a, so n_z + n_zp1 >= 1 on every solution
                q = (R % a) * binv % a
                while b * q <= R:
                    yield FamilyParams(
                        z=z,
                        n_z=(R - b * q) // a,
                        n_zp1=q,
                        n3=n3,
                        n4=sp.n4,
                        b_star=1 if sp.kind == "star" else 0,
                        b1=1 if sp.kind == "b1" else 0,
                        b2=1 if sp.kind == "b2" else 0,
                        k1=sp.k1,
                        k2=sp.k2,
                    )
                    q += a
