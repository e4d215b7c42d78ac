"""ABC-change expressions for the tree transformations T2..T15.

Each transformation rewires branches of a candidate tree; the change of
the ABC index it causes is a closed-form expression in the root degree
``dv`` and a few structural parameters.  Every expression comes in an
``exact`` form (degrees of unspecified neighbors replaced by a stated
worst-case bound, recorded in ``neighbor_degree_bound``) and one or more
``surrogate`` forms: weaker upper bounds that are monotone in ``dv``, so
negativity at a single crossover point certifies negativity for every
larger root degree.  All functions accept numpy arrays for ``dv`` (and
broadcast), which the negativity scanners rely on.

Branch-count pairs (n_k, n_km1) attached to several transformations are
pinned by two linear identities; :func:`solve_branch_counts` solves them
in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TRANSFORM_IDS = (
    "T2", "T3", "T4", "T5", "T6", "T7", "T8",
    "T9", "T10", "T11", "T12", "T13", "T14", "T15",
)


class UnknownFormError(ValueError):
    pass


class MissingFieldError(ValueError):
    pass


class NegativeCountError(ValueError):
    """A branch-count row is infeasible (negative solution)."""


def w(x, y):
    """Array-friendly edge weight sqrt((x + y - 2) / (x y)).

    Integer inputs compute in binary64; extended-precision inputs are
    preserved (the dominance checks evaluate in longdouble).
    """
    x = np.asarray(x)
    y = np.asarray(y)
    return np.sqrt((x + y - 2.0) / (x * y))


def solve_branch_counts(z: int, x: int, k: int, variant: str) -> tuple[int, int]:
    """Branch counts (n_k, n_km1) pinned by the two linear identities.

    variant "plus7":   n_k + n_km1 = x + 7   and   k n_k + (k-1) n_km1 = x z - 1
    variant "minus7":  n_k + n_km1 = x - 7   and   k n_k + (k-1) n_km1 = x z + 1

    Raises NegativeCountError when either count comes out negative.
    """
    if variant == "plus7":
        n_k = x * (z - k + 1) - 7 * k + 6
        n_km1 = x * (k - z) + 7 * k + 1
    elif variant == "minus7":
        n_k = x * (z - k + 1) + 7 * k - 6
        n_km1 = x * (k - z) - 7 * k - 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    if n_k < 0 or n_km1 < 0:
        raise NegativeCountError(f"(z={z}, x={x}, k={k}, {variant}) gives ({n_k}, {n_km1})")
    return n_k, n_km1


@dataclass(frozen=True)
class TransformParams:
    """Free variables of the ABC-change expressions.

    Only the fields used by the selected (transform, form) pair need to
    be set; ``dv`` may be a numpy array.  ``neighbor_degree_bound`` is
    the degree substituted for unspecified neighbors in exact forms.
    """

    dv: object = None  # root / parent degree
    z: int = 0
    x: int = 0
    k: int = 0
    n_k: int = 0
    n_km1: int = 0
    n3: int = 0
    n4: int = 0
    t: int = 0
    dw: int = 0  # subtree-root degree (T2 only)
    dx: int = 0  # sibling degrees (T10)
    dy: int = 0
    dz_parent: object = None  # common-parent degree (T10)
    neighbor_degree_bound: int = 0


# --- T2: bounds the size of branches carrying four-leg hubs ---------------

def t2_exact(dv, dw, z, x):
    return (
        -w(dv, z + 1) + w(dv, z)
        + (-w(dv, dw) + w(dv, dw + 1))
        + x * (-w(z + 1, 5) + w(z, 5))
        - (z - x) * w(z + 1, 4) + (z - x - 1) * w(z, 4)
        + w(dw + 1, 4) + (dw - 1) * (-w(dw, 4) + w(dw + 1, 4))
    )


def t2_surrogate_a(dw, z, x):
    """dv-free upper bound; decreases in z."""
    return (
        -np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / z)
        + (-w(z + 1, dw) + w(z + 1, dw + 1))
        + x * (-w(z + 1, 5) + w(z, 5))
        - 0.5
        + w(dw + 1, 4) + (dw - 1) * (-w(dw, 4) + w(dw + 1, 4))
    )


# --- T3: moves four-leg hubs from a branch to the root --------------------

def t3_exact(dv, z, x, nb):
    return (
        -w(dv, z + 1) + w(dv + x, z - x + 1)
        - x * w(z + 1, 5)
        - (z - x) * w(z + 1, 4) + (z - x) * w(z + 1 - x, 4)
        + x * w(dv + x, 5)
        + (dv - 1) * (-w(dv, nb) + w(dv + x, nb))
    )


def t3_surrogate_a(dv, z, x):
    """Neighbor degrees split between branch centers (16) and hubs (5)."""
    return (
        -(dv + x - 5) * w(dv, 16) + (dv + 2 * x - 5) * w(dv + x, 16)
        + (4 - x) * (-w(dv, 5) + w(dv + x, 5))
        + x * (-w(dv + x, 16) + w(dv + x, 5))
        + (z - x) * (-w(z + 1, 4) + w(z + 1 - x, 4))
        + (-w(dv, z + 1) + w(dv + x, z - x + 1))
        - x * w(z + 1, 5)
    )


def t3_surrogate_b(dv, z, x):
    """Decreasing in dv."""
    return (
        -(dv + x - 5) * w(dv, 16) + (dv + 2 * x - 5) * w(dv + x, 16)
        + x * (-np.sqrt(1.0 / 16) + np.sqrt(1.0 / 5))
        + (z - x) * (-w(z + 1, 4) + w(z + 1 - x, 4))
        + (-np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / (z - x + 1)))
        - x * w(z + 1, 5)
    )


# --- T4: splits x size-z branches into x+7 smaller ones (root grows by 7) --

def t4_exact(dv, z, x, k, n_k, n_km1, nb):
    return (
        -x * w(dv, z + 1) - x * z * w(z + 1, 4)
        - 3 * w(4, 2) - 3 * w(2, 1)
        + n_k * w(dv + 7, k + 1) + n_km1 * w(dv + 7, k)
        + k * n_k * w(k + 1, 4) + (k - 1) * n_km1 * w(k, 4)
        + (dv - x) * (-w(dv, nb) + w(dv + 7, nb))
    )


def t4_surrogate_a(dv, z, x, k, n_k, n_km1):
    return t4_exact(dv, z, x, k, n_k, n_km1, nb=4)


def t4_surrogate_b(dv, z, x, k, n_k, n_km1):
    """Decreasing in dv."""
    return (
        (dv - x + 7) * w(dv + 7, 4) - (dv - x) * w(dv, 4)
        + n_k * (-w(dv + 7, k) + w(dv + 7, k + 1))
        + (x + 7) * (-w(dv + 7, 4) + w(dv + 7, k))
        + x * (-np.sqrt(1.0 / (z + 1)) + 0.5)
        - x * z * w(z + 1, 4) - 3 * w(4, 2) - 3 * w(2, 1)
        + k * n_k * w(k + 1, 4) + (k - 1) * n_km1 * w(k, 4)
    )


# --- T5: merges x size-z branches into x-7 larger ones (root shrinks by 7) -

def t5_exact(dv, z, x, k, n_k, n_km1, nb):
    return (
        -x * w(dv, z + 1) - x * z * w(z + 1, 4)
        + 3 * w(4, 2) + 3 * w(2, 1)
        + n_k * w(dv - 7, k + 1) + n_km1 * w(dv - 7, k)
        + k * n_k * w(k + 1, 4) + (k - 1) * n_km1 * w(k, 4)
        + (dv - x) * (-w(dv, nb) + w(dv - 7, nb))
    )


def t5_surrogate_a(dv, z, x, k, n_k, n_km1):
    return t5_exact(dv, z, x, k, n_k, n_km1, nb=z + 2)


def _t5_tail_common(dv, z, x, k, n_k, n_km1):
    return (
        -7.0 / np.sqrt(z + 2)
        + n_k * (-w(dv - 7, k) + w(dv - 7, k + 1))
        + x * (-w(dv, z + 1) + w(dv - 7, k))
        - x * z * w(z + 1, 4) + 3 * w(4, 2) + 3 * w(2, 1)
        + k * n_k * w(k + 1, 4) + (k - 1) * n_km1 * w(k, 4)
    )


def t5_surrogate_b(dv, z, x, k, n_k, n_km1):
    """Decreasing in dv; for the z + 2 > k case (z = 51, k = 52)."""
    return _t5_tail_common(dv, z, x, k, n_k, n_km1) + 7 * (
        -w(dv - 7, k) + w(dv - 7, z + 2)
    )


def t5_surrogate_c(dv, z, x, k, n_k, n_km1):
    """Decreasing in dv; for the z + 2 <= k case."""
    return _t5_tail_common(dv, z, x, k, n_k, n_km1) + 7 * (
        -np.sqrt(1.0 / k) + np.sqrt(1.0 / (z + 2))
    )


def t5_with_root_hubs(dv, z, x, k, n_k, n_km1, n3, n4):
    """T5 bound refined for n3 three-leg and n4 four-leg hubs at the root."""
    return (
        -x * w(dv, z + 1) - x * z * w(z + 1, 4)
        + 3 * w(4, 2) + 3 * w(2, 1)
        + n_k * w(dv - 7, k + 1) + n_km1 * w(dv - 7, k)
        + k * n_k * w(k + 1, 4) + (k - 1) * n_km1 * w(k, 4)
        + (dv - x - n3 - n4) * (-w(dv, z + 2) + w(dv - 7, z + 2))
        + n3 * (-w(dv, 4) + w(dv - 7, 4))
        + n4 * (-w(dv, 5) + w(dv - 7, 5))
    )


# --- T6: merges 365 root hubs into a size-52 branch (root shrinks by 358) --

def t6_exact(dv, x, n4, nb):
    dvp = dv - 358
    return (
        (dv - x) * (-w(dv, nb) + w(dvp, nb))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        + (x - 365 - n4) * (-w(dv, 4) + w(dvp, 4))
        + n4 * (-w(dv, 5) + w(dvp, 5))
    )


def t6_surrogate_a(dv, x, k):
    """Worst case: neighbors at degree k + 1, four four-leg hubs."""
    return t6_exact(dv, x, 4, nb=k + 1)


def t6_surrogate_b(dv, x, k):
    """Decreasing in dv; for k >= 52."""
    dvp = dv - 358
    return (
        -358.0 / np.sqrt(k + 1)
        + 365 * (-w(dv, 4) + w(dvp, 53))
        + 358 * (-w(dvp, 53) + w(dvp, k + 1))
        + (x - 369) * (-w(dv, 4) + w(dvp, 4))
        + 4 * (-w(dv, 5) + w(dvp, 5))
        - 6 * w(2, 1) + 364 * w(53, 4)
    )


def t6_surrogate_c(dv, x):
    """Decreasing in dv; for k < 52 (k-dependence cancels)."""
    dvp = dv - 358
    return (
        365 * (-w(dv, 4) + w(dvp, 53))
        - 358.0 / np.sqrt(53)
        + (x - 369) * (-w(dv, 4) + w(dvp, 4))
        + 4 * (-w(dv, 5) + w(dvp, 5))
        - 6 * w(2, 1) + 364 * w(53, 4)
    )


def t6_refined(dv, k, n_k, n_km1):
    """Bound with capped counts of size-k and size-(k-1) branches
    (k != 52, 53); the leading coefficient absorbs x."""
    dvp = dv - 358
    return (
        (dv - n_k - n_km1) * (-w(dv, 4) + w(dvp, 4))
        + n_km1 * (-w(dv, k) + w(dvp, k))
        + n_k * (-w(dv, k + 1) + w(dvp, k + 1))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        - 369 * (-w(dv, 4) + w(dvp, 4))
        + 4 * (-w(dv, 5) + w(dvp, 5))
    )


def t6_refined_53(dv, x, n53):
    """k = 53: size-52 branches are uncapped, so they take the lead term."""
    dvp = dv - 358
    return (
        (dv - x - n53) * (-w(dv, 53) + w(dvp, 53))
        + n53 * (-w(dv, 54) + w(dvp, 54))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        + (x - 369) * (-w(dv, 4) + w(dvp, 4))
        + 4 * (-w(dv, 5) + w(dvp, 5))
    )


def t6_only_k(dv, x, k):
    """All non-hub children are centers of size-k branches."""
    dvp = dv - 358
    return (
        (dv - x) * (-w(dv, k + 1) + w(dvp, k + 1))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        + (x - 369) * (-w(dv, 4) + w(dvp, 4))
        + 4 * (-w(dv, 5) + w(dvp, 5))
    )


# T6 variants when one modified branch (two-leg hub or forked hub) exists;
# then no four-leg hubs occur and one extra child is worst-cased at k + 1.

def t6_refined_special(dv, k, n_k, n_km1):
    dvp = dv - 358
    return (
        (dv - 1 - n_k - n_km1) * (-w(dv, 4) + w(dvp, 4))
        + (-w(dv, k + 1) + w(dvp, k + 1))
        + n_km1 * (-w(dv, k) + w(dvp, k))
        + n_k * (-w(dv, k + 1) + w(dvp, k + 1))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        - 365 * (-w(dv, 4) + w(dvp, 4))
    )


def t6_refined_53_special(dv, x, n53):
    dvp = dv - 358
    return (
        (dv - x - 1 - n53) * (-w(dv, 53) + w(dvp, 53))
        + (n53 + 1) * (-w(dv, 54) + w(dvp, 54))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        + (x - 365) * (-w(dv, 4) + w(dvp, 4))
    )


def t6_only_k_special(dv, x, k):
    dvp = dv - 358
    return (
        (dv - x) * (-w(dv, k + 1) + w(dvp, k + 1))
        - w(dv, 4) + w(dvp, 53)
        + 6 * (-w(2, 1) + w(dvp, 53))
        + 364 * (-w(dv, 4) + w(53, 4))
        + (x - 365) * (-w(dv, 4) + w(dvp, 4))
    )


def t6_tail_special(dv, x, k):
    """Decreasing-in-dv tail of t6_only_k_special, k >= 52."""
    dvp = dv - 358
    return (
        -358.0 / np.sqrt(k + 1)
        + 365 * (-w(dv, 4) + w(dvp, 53))
        + 358 * (-w(dvp, 53) + w(dvp, k + 1))
        + (x - 365) * (-w(dv, 4) + w(dvp, 4))
        - 6 * w(2, 1) + 364 * w(53, 4)
    )


def t6_tail_special_small(dv, x):
    """Decreasing-in-dv tail of t6_only_k_special, k < 52."""
    dvp = dv - 358
    return (
        365 * (-w(dv, 4) + w(dvp, 53))
        - 358.0 / np.sqrt(53)
        + (x - 365) * (-w(dv, 4) + w(dvp, 4))
        - 6 * w(2, 1) + 364 * w(53, 4)
    )


# --- T7: replaces 2z-3 size-z branches and one four-leg hub by 2z-1
#         size-(z-1) branches (root grows by 1) ----------------------------

def t7_exact(dv, z, n3, n4, nb):
    return (
        -(2 * z - 3) * w(dv, z + 1) - (2 * z - 3) * z * w(z + 1, 4)
        - w(dv, 5) - w(4, 2) - w(2, 1)
        + (2 * z - 1) * w(dv + 1, z) + (2 * z - 1) * (z - 1) * w(z, 4)
        + n3 * (-w(dv, 4) + w(dv + 1, 4))
        + (n4 - 1) * (-w(dv, 5) + w(dv + 1, 5))
        + (dv - 2 * z + 3 - n3 - n4) * (-w(dv, nb) + w(dv + 1, nb))
    )


def t7_surrogate_a(dv, z, n3, n4):
    """Remaining children are size-z or size-(z+1) centers: nb = z + 1."""
    return t7_exact(dv, z, n3, n4, nb=z + 1)


def t7_surrogate_b(dv, z, n3, n4):
    """Remaining children are size-(z-1) or size-z centers: nb = z."""
    return t7_exact(dv, z, n3, n4, nb=z)


def t7_surrogate_c(dv, root_hub_cap):
    """Decreasing-in-dv tail for the z = 52 case with root-hub cap M.

    At dv = 1228 and M = 919 this evaluates to about -0.00201013, the
    worst margin of the whole four-leg exclusion argument.
    """
    M = root_hub_cap
    return (
        102 * (-np.sqrt(1.0 / 53) + np.sqrt(1.0 / 52))
        + (dv - 101 - M) * w(dv + 1, 53) - (dv - 102 - M) * w(dv, 53)
        + w(dv + 1, 52) - w(dv, 5)
        - 5252 * w(53, 4) - 2 * w(2, 1) + 5253 * w(52, 4)
    )


# --- T8: merges x root hubs onto x size-z branch centers (root loses x) ----

def t8_exact(dv, z, x, nb):
    return (
        x * (-w(dv, z + 1) + w(dv - x, z + 2))
        + x * z * (-w(z + 1, 4) + w(z + 2, 4))
        + x * (-w(dv, 4) + w(z + 2, 4))
        + (dv - 2 * x) * (-w(dv, nb) + w(dv - x, nb))
    )


def t8_surrogate_a(dv, z, x):
    """Size-(z+1) branches present: nb = z + 2."""
    return t8_exact(dv, z, x, nb=z + 2)


def t8_surrogate_a1(dv, z, x):
    """No size-(z+1) branches: nb = z + 1."""
    return t8_exact(dv, z, x, nb=z + 1)


def t8_refined_53(dv, x):
    """z = 52 with size-53 branches capped at 260 plus one forked branch."""
    return (
        x * (-w(dv, 53) + w(dv - x, 54))
        + 52 * x * (-w(53, 4) + w(54, 4))
        + x * (-w(dv, 4) + w(54, 4))
        + 261 * (-w(dv, 54) + w(dv - x, 54))
        + (dv - 2 * x - 261) * (-w(dv, 53) + w(dv - x, 53))
    )


def t8_surrogate_b(dv, x):
    """Decreasing in dv; tail of t8_refined_53."""
    return (
        x * (-w(dv, 53) + w(dv - x, 54))
        + 261 * (-w(dv, 54) + w(dv - x, 54))
        + x * (-w(dv, 4) + w(dv, 53))
        - x / np.sqrt(53)
        + 52 * x * (-w(53, 4) + w(54, 4))
        + x * w(54, 4)
    )


def t8_no_53(dv, x):
    """z = 52 with no size-53 branch present."""
    return (
        x * (-w(dv, 53) + w(dv - x, 54))
        + 52 * x * (-w(53, 4) + w(54, 4))
        + x * (-w(dv, 4) + w(54, 4))
        + (dv - 2 * x) * (-w(dv, 53) + w(dv - x, 53))
    )


def t8_surrogate_c(dv, x):
    """Decreasing in dv; tail of t8_no_53."""
    return (
        x * (-w(dv, 53) + w(dv - x, 54))
        + x * (-w(dv, 4) + w(dv, 53))
        - x / np.sqrt(53)
        + 52 * x * (-w(53, 4) + w(54, 4))
        + x * w(54, 4)
    )


# --- T9: splits a size-z branch with one two-leg hub, z odd ----------------

def t9_exact(dv, z, nb):
    return (
        (dv - 1) * (-w(dv, nb) + w(dv + 3, nb))
        - w(dv, z + 1)
        + 2 * w(dv + 3, (z - 1) / 2)
        - w(z + 1, 3)
        + 2 * w(dv + 3, 5)
        - (z - 1) * w(z + 1, 4)
        + (z - 3) * w((z - 1) / 2, 4)
    )


def t9_surrogate_a(dv, z):
    return t9_exact(dv, z, nb=4)


def t9_surrogate_b(dv, z):
    """Decreasing in dv >= z + 1."""
    half = (z - 1) / 2
    return (
        -(dv - 1) * w(dv, 4) + (dv + 2) * w(dv + 3, 4)
        + 2 * (-w(dv + 3, 4) + w(dv + 3, 5))
        - w(dv + 3, 4) + w(dv + 3, half)
        + (-np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / half))
        - w(z + 1, 3) - (z - 1) * w(z + 1, 4) + (z - 3) * w(half, 4)
    )


def t9_surrogate_c(z):
    """t9_surrogate_b pinned at its largest value dv = z + 1."""
    return t9_surrogate_b(z + 1, z)


# --- T10: rebalances two sibling branch centers (degrees dx >= dy) ---------

def t10_exact(dz_parent, dx, dy):
    dzp = dz_parent
    return (
        -w(dzp, dx) + w(dzp, dx - 1)
        - w(dzp, dy) + w(dzp, dy + 1)
        + (dx - 2) * (-w(dx, 4) + w(dx - 1, 4))
        - w(dx, 4) + w(dy + 1, 4)
        + (dy - 2) * (-w(dy, 4) + w(dy + 1, 4))
        - w(dy, 3) + w(dy + 1, 3)
    )


def t10_surrogate_a(dz_parent, dx, dy):
    """Decreasing in the parent degree."""
    dzp = dz_parent
    return (
        -np.sqrt(1.0 / dx) + np.sqrt(1.0 / (dx - 1))
        - w(dzp, dy) + w(dzp, dy + 1)
        + (dx - 2) * (-w(dx, 4) + w(dx - 1, 4))
        - w(dx, 4) + w(dy + 1, 4)
        + (dy - 2) * (-w(dy, 4) + w(dy + 1, 4))
        - w(dy, 3) + w(dy + 1, 3)
    )


# --- T11: dissolves a branch carrying two two-leg hubs (x = 2z - k) --------

def t11_exact(dv, z, k, nb):
    x = 2 * z - k
    return (
        (dv - x - 1) * (-w(dv, nb) + w(dv + 2, nb))
        - x * w(dv, z + 1) - x * z * w(z + 1, 4)
        - w(dv, k + 1) - (k - 2) * w(k + 1, 4) - 2 * w(k + 1, 3)
        + (x + 2) * w(dv + 2, z) + (x + 2) * (z - 1) * w(z, 4)
        + w(dv + 2, 5)
    )


def t11_surrogate_a(dv, z, k):
    return t11_exact(dv, z, k, nb=4)


def t11_surrogate_b(dv, z, k):
    """Decreasing in dv >= 146."""
    x = 2 * z - k
    return (
        -(dv - x - 1) * w(dv, 4) + (dv - x + 1) * w(dv + 2, 4)
        + 2 * (-w(dv + 2, 4) + w(dv, z + 1))
        + (-np.sqrt(1.0 / (k + 1)) + np.sqrt(1.0 / 5))
        + (x + 2) * (-np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / z))
        - x * z * w(z + 1, 4)
        - (k - 2) * w(k + 1, 4) - 2 * w(k + 1, 3)
        + (x + 2) * (z - 1) * w(z, 4)
    )


# --- T12: dissolves a branch carrying one two-leg hub (x = 6z - k - 5) ------

def t12_exact(dv, z, k, nb):
    x = 6 * z - k - 5
    return (
        (dv - x - 1) * (-w(dv, nb) + w(dv + 5, nb))
        - x * w(dv, z + 1) - x * z * w(z + 1, 4)
        - w(dv, k + 1) - (k - 1) * w(k + 1, 4) - w(k + 1, 3)
        - 2 * w(3, 2) - 2 * w(2, 1)
        + (x + 6) * w(dv + 5, z) + (x + 6) * (z - 1) * w(z, 4)
    )


def t12_surrogate_a(dv, z, k):
    """nb = 4 rearranged; equal to t12_exact(..., nb=4)."""
    x = 6 * z - k - 5
    return (
        -(dv - x - 1) * w(dv, 4) + (dv - x + 4) * w(dv + 5, 4)
        + 5 * (-w(dv + 5, 4) + w(dv, k + 1))
        - x * z * w(z + 1, 4) - (k - 1) * w(k + 1, 4)
        + 6 * (-w(dv, k + 1) + w(dv, z + 1))
        + (x + 6) * (-w(dv, z + 1) + w(dv + 5, z))
        - w(k + 1, 3) - 2 * w(3, 2) - 2 * w(2, 1)
        + (x + 6) * (z - 1) * w(z, 4)
    )


def t12_surrogate_b(dv, z, k):
    """Decreasing in dv >= x + 1."""
    x = 6 * z - k - 5
    return (
        -(dv - x - 1) * w(dv, 4) + (dv - x + 4) * w(dv + 5, 4)
        + 5 * (-w(dv + 5, 4) + w(dv, k + 1))
        - x * z * w(z + 1, 4) - (k - 1) * w(k + 1, 4)
        + 6 * (-w(dv, k + 1) + w(dv, z + 1))
        + (x + 6) * (-np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / z))
        - w(k + 1, 3) - 2 * w(3, 2) - 2 * w(2, 1)
        + (x + 6) * (z - 1) * w(z, 4)
    )


# --- T13: splits a forked size-z branch in half, z odd ----------------------

def t13_exact(dv, z, nb):
    half = (z + 1) / 2
    return (
        (dv - 1) * (-w(dv, nb) + w(dv + 2, nb))
        - w(dv, z + 1)
        + 2 * w(dv + 2, half)
        - z * w(z + 1, 4) + (z - 1) * w(half, 4)
        - w(4, 3) + w(dv + 2, 5)
    )


def t13_surrogate_a(dv, z):
    return t13_exact(dv, z, nb=4)


def t13_surrogate_b(dv, z):
    """Decreasing in dv >= z + 1."""
    half = (z + 1) / 2
    return (
        -(dv - 1) * w(dv, 4) + (dv + 1) * w(dv + 2, 4)
        + 2 * (-w(dv + 2, 4) + w(dv + 2, half))
        - np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / 5)
        - z * w(z + 1, 4) + (z - 1) * w(half, 4) - w(4, 3)
    )


def t13_surrogate_c(z):
    return t13_surrogate_b(z + 1, z)


# --- T14: turns a forked size-z branch into a size-(z+1)-like center --------

def t14_exact(dv, z):
    return (
        -w(dv, z + 1) + w(dv, z + 2)
        + (z - 1) * (-w(z + 1, 4) + w(z + 2, 4))
        - w(z + 1, 4) - w(4, 3) + 2 * w(z + 2, 3)
    )


def t14_surrogate_a(z):
    """t14_exact pinned at its largest value dv = z + 1."""
    return t14_exact(z + 1, z)


# --- T15: dissolves a forked branch among z - 1 plain ones (x = z - 1) ------

def t15_exact(dv, z, k, nb):
    x = z - 1
    return (
        (dv - x - 1) * (-w(dv, nb) + w(dv + 2, nb))
        - x * w(dv, z + 1) - x * z * w(z + 1, 4)
        - w(dv, k + 1) - k * w(k + 1, 4) - w(4, 3)
        + (x + 1) * w(dv + 2, z) + (x + 1) * (z - 1) * w(z, 4)
        + w(dv + 2, k) + (k - 1) * w(k, 4)
        + w(dv + 2, 5)
    )


def t15_surrogate_a(dv, z, k):
    """nb = 4 rearranged; equal to t15_exact(..., nb=4)."""
    x = z - 1
    return (
        -(dv - x - 1) * w(dv, 4) + (dv - x + 1) * w(dv + 2, 4)
        + (-w(dv + 2, 4) + w(dv, z + 1))
        + (-w(dv + 2, 4) + w(dv + 2, k))
        + (-w(dv, k + 1) + w(dv + 2, 5))
        + (x + 1) * (-w(dv, z + 1) + w(dv + 2, z))
        - x * z * w(z + 1, 4) - k * w(k + 1, 4) - w(4, 3)
        + (x + 1) * (z - 1) * w(z, 4) + (k - 1) * w(k, 4)
    )


def t15_surrogate_b(dv, z, k):
    """Decreasing in dv."""
    x = z - 1
    return (
        -(dv - x - 1) * w(dv, 4) + (dv - x + 1) * w(dv + 2, 4)
        + (-w(dv + 2, 4) + w(dv, z + 1))
        + (-w(dv + 2, 4) + w(dv + 2, k))
        + (-np.sqrt(1.0 / (k + 1)) + np.sqrt(1.0 / 5))
        + (x + 1) * (-np.sqrt(1.0 / (z + 1)) + np.sqrt(1.0 / z))
        - x * z * w(z + 1, 4) - k * w(k + 1, 4) - w(4, 3)
        + (x + 1) * (z - 1) * w(z, 4) + (k - 1) * w(k, 4)
    )


# --- dispatch ----------------------------------------------------------------

_FORMS = {
    ("T2", "exact"): (t2_exact, ("dv", "dw", "z", "x")),
    ("T2", "surrogate_a"): (t2_surrogate_a, ("dw", "z", "x")),
    ("T3", "exact"): (t3_exact, ("dv", "z", "x", "neighbor_degree_bound")),
    ("T3", "surrogate_a"): (t3_surrogate_a, ("dv", "z", "x")),
    ("T3", "surrogate_b"): (t3_surrogate_b, ("dv", "z", "x")),
    ("T4", "exact"): (t4_exact, ("dv", "z", "x", "k", "n_k", "n_km1", "neighbor_degree_bound")),
    ("T4", "surrogate_a"): (t4_surrogate_a, ("dv", "z", "x", "k", "n_k", "n_km1")),
    ("T4", "surrogate_b"): (t4_surrogate_b, ("dv", "z", "x", "k", "n_k", "n_km1")),
    ("T5", "exact"): (t5_exact, ("dv", "z", "x", "k", "n_k", "n_km1", "neighbor_degree_bound")),
    ("T5", "surrogate_a"): (t5_surrogate_a, ("dv", "z", "x", "k", "n_k", "n_km1")),
    ("T5", "surrogate_b"): (t5_surrogate_b, ("dv", "z", "x", "k", "n_k", "n_km1")),
    ("T5", "surrogate_c"): (t5_surrogate_c, ("dv", "z", "x", "k", "n_k", "n_km1")),
    ("T5", "with_root_hubs"): (t5_with_root_hubs, ("dv", "z", "x", "k", "n_k", "n_km1", "n3", "n4")),
    ("T6", "exact"): (t6_exact, ("dv", "x", "n4", "neighbor_degree_bound")),
    ("T6", "surrogate_a"): (t6_surrogate_a, ("dv", "x", "k")),
    ("T6", "surrogate_b"): (t6_surrogate_b, ("dv", "x", "k")),
    ("T6", "surrogate_c"): (t6_surrogate_c, ("dv", "x")),
    ("T7", "exact"): (t7_exact, ("dv", "z", "n3", "n4", "neighbor_degree_bound")),
    ("T7", "surrogate_a"): (t7_surrogate_a, ("dv", "z", "n3", "n4")),
    ("T7", "surrogate_b"): (t7_surrogate_b, ("dv", "z", "n3", "n4")),
    ("T7", "surrogate_c"): (t7_surrogate_c, ("dv", "n3")),
    ("T8", "exact"): (t8_exact, ("dv", "z", "x", "neighbor_degree_bound")),
    ("T8", "surrogate_a"): (t8_surrogate_a, ("dv", "z", "x")),
    ("T8", "surrogate_a1"): (t8_surrogate_a1, ("dv", "z", "x")),
    ("T8", "refined_53"): (t8_refined_53, ("dv", "x")),
    ("T8", "surrogate_b"): (t8_surrogate_b, ("dv", "x")),
    ("T8", "no_53"): (t8_no_53, ("dv", "x")),
    ("T8", "surrogate_c"): (t8_surrogate_c, ("dv", "x")),
    ("T9", "exact"): (t9_exact, ("dv", "z", "neighbor_degree_bound")),
    ("T9", "surrogate_a"): (t9_surrogate_a, ("dv", "z")),
    ("T9", "surrogate_b"): (t9_surrogate_b, ("dv", "z")),
    ("T9", "surrogate_c"): (t9_surrogate_c, ("z",)),
    ("T10", "exact"): (t10_exact, ("dz_parent", "dx", "dy")),
    ("T10", "surrogate_a"): (t10_surrogate_a, ("dz_parent", "dx", "dy")),
    ("T11", "exact"): (t11_exact, ("dv", "z", "k", "neighbor_degree_bound")),
    ("T11", "surrogate_a"): (t11_surrogate_a, ("dv", "z", "k")),
    ("T11", "surrogate_b"): (t11_surrogate_b, ("dv", "z", "k")),
    ("T12", "exact"): (t12_exact, ("dv", "z", "k", "neighbor_degree_bound")),
    ("T12", "surrogate_a"): (t12_surrogate_a, ("dv", "z", "k")),
    ("T12", "surrogate_b"): (t12_surrogate_b, ("dv", "z", "k")),
    ("T13", "exact"): (t13_exact, ("dv", "z", "neighbor_degree_bound")),
    ("T13", "surrogate_a"): (t13_surrogate_a, ("dv", "z")),
    ("T13", "surrogate_b"): (t13_surrogate_b, ("dv", "z")),
    ("T13", "surrogate_c"): (t13_surrogate_c, ("z",)),
    ("T14", "exact"): (t14_exact, ("dv", "z")),
    ("T14", "surrogate_a"): (t14_surrogate_a, ("z",)),
    ("T15", "exact"): (t15_exact, ("dv", "z", "k", "neighbor_degree_bound")),
    ("T15", "surrogate_a"): (t15_surrogate_a, ("dv", "z", "k")),
    ("T15", "surrogate_b"): (t15_surrogate_b, ("dv", "z", "k")),
}

# expression-argument name -> TransformParams field
_ARG_SOURCE = {"nb": "neighbor_degree_bound", "root_hub_cap": "n3"}


def available_forms(transform_id: str) -> tuple[str, ...]:
    return tuple(form for (tid, form) in _FORMS if tid == transform_id)


def delta_abc(transform_id: str, form: str, params: TransformParams):
    """Evaluate the ABC-change expression of a transformation.

    ``form`` is "exact" or a surrogate name (case-insensitive; the
    canonical surrogate names are surrogate_a, surrogate_b, ...).
    Returns a float, or an array when ``params.dv`` is an array.
    """
    if transform_id not in TRANSFORM_IDS:
        raise UnknownFormError(f"unknown transformation {transform_id!r}")
    key = (transform_id, form.lower())
    if key not in _FORMS:
        raise UnknownFormError(
            f"form {form!r} not available for {transform_id}; "
            f"have {available_forms(transform_id)}"
        )
    fn, _ = _FORMS[key]
    fn_argnames = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    args = []
    for arg in fn_argnames:
        source = _ARG_SOURCE.get(arg, arg)
        value = getattr(params, source)
        if value is None or (source == "neighbor_degree_bound" and value == 0):
            raise MissingFieldError(
                f"{transform_id}/{form} requires field {source!r} (argument {arg!r})"
            )
        args.append(value)
    return fn(*args)
