"""Built-in parameter tables for the negativity scans.

Four table families drive the verifier:

* ``large_z_table``  -- rows (z, x, k) for the branch-splitting bound
  (at least x size-z branches are impossible, 53 <= z <= 131); the
  branch-count pair of each row satisfies the plus7 identities.
* ``small_z_table``  -- rows (z, x, k, dv_threshold) for the
  branch-merging bound (15 <= z <= 51); minus7 identities.  A missing
  threshold means the claim starts at d(v) = z.
* ``max_root_hub_tables`` -- upper bounds on the number of root hubs for
  each maximal branch size k, in two variants: all branches plain
  (case 1) and one modified branch present (case 2).

Branch-count pairs are pinned by two linear identities per row, so
the tables store (z, x, k) and derive the counts; a consistency check
rejects any row whose counts drift from the identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .transforms import solve_branch_counts


@dataclass(frozen=True)
class BoundRow:
    z: int
    x: int
    k: int
    n_k: int
    n_km1: int
    dv_threshold: int | None = None  # None: claim starts at d(v) = z


@dataclass(frozen=True)
class BoundTable:
    transform: str
    name: str
    rows: tuple[BoundRow, ...]


# (z, x, k) for the splitting bound; counts follow from the plus7 identities.
_LARGE_Z = (
    (53, 261, 52), (54, 131, 52), (55, 90, 52), (56, 72, 52), (57, 60, 52),
    (58, 52, 52), (59, 45, 52), (60, 40, 52), (61, 36, 52), (62, 33, 52),
    (63, 30, 52), (64, 28, 52), (65, 26, 52), (66, 25, 52), (67, 23, 52),
    (68, 22, 52), (69, 21, 52), (70, 21, 53), (71, 20, 53), (72, 19, 53),
    (73, 19, 54), (74, 18, 54), (75, 17, 54), (76, 17, 54), (77, 17, 55),
    (78, 16, 55), (79, 16, 55), (80, 16, 56), (81, 15, 56), (82, 15, 56),
    (83, 15, 57), (84, 15, 58), (85, 15, 58), (86, 14, 58), (87, 14, 58),
    (88, 13, 58), (89, 13, 58), (90, 13, 59), (91, 13, 60), (92, 13, 60),
    (93, 13, 61), (94, 13, 62), (95, 13, 62), (96, 13, 63), (97, 13, 63),
    (98, 13, 64), (99, 13, 65), (100, 13, 65), (101, 13, 66), (102, 13, 67),
    (103, 13, 67), (104, 13, 68), (105, 13, 69), (106, 13, 69), (107, 13, 70),
    (108, 13, 71), (109, 13, 71), (110, 13, 72), (111, 13, 73), (112, 13, 73),
    (113, 13, 74), (114, 13, 75), (115, 13, 75), (116, 13, 76), (117, 13, 76),
    (118, 13, 77), (119, 13, 78), (120, 13, 78), (121, 13, 79), (122, 13, 80),
    (123, 13, 80), (124, 13, 81), (125, 13, 82), (126, 13, 82), (127, 13, 83),
    (128, 13, 84), (129, 13, 84), (130, 13, 85), (131, 13, 86),
)

# (z, x, dv_threshold, k) for the merging bound.
_SMALL_Z = (
    (51, 365, 3249, 52), (50, 183, 1358, 52), (49, 122, 825, 52),
    (48, 92, 572, 52), (47, 73, 430, 52), (46, 61, 333, 52),
    (45, 53, 263, 52), (44, 46, 215, 52), (43, 41, 177, 52),
    (42, 37, 146, 52), (41, 34, 120, 52), (40, 31, 100, 52),
    (39, 29, 80, 52), (38, 27, 64, 52), (37, 25, 47, 52),
    (36, 23, None, 52), (35, 22, None, 52), (34, 21, None, 52),
    (33, 20, None, 51), (32, 19, None, 51), (31, 18, None, 51),
    (30, 18, None, 50), (29, 17, None, 50), (28, 16, None, 50),
    (27, 16, None, 49), (26, 15, None, 49), (25, 15, None, 48),
    (24, 15, None, 46), (23, 15, None, 44), (22, 15, None, 42),
    (21, 15, None, 40), (20, 15, None, 38), (19, 15, None, 36),
    (18, 15, None, 34), (17, 15, None, 32), (16, 15, None, 31),
    (15, 14, None, 31),
)

# Maximal root-hub counts when the largest branch size is k and all
# branches are plain (case 1).  Keys 16..52 come with a size-(k-1)
# companion branch; key 15 is the single-size row.
MAX_ROOT_HUBS_PLAIN = {
    53: 919, 54: 882, 55: 798, 56: 749, 57: 717, 58: 693, 59: 672, 60: 654,
    61: 639, 62: 627, 63: 615, 64: 605, 65: 597, 66: 591, 67: 584, 68: 577,
    69: 573, 70: 571, 71: 569, 72: 564, 73: 562, 74: 560, 75: 554, 76: 552,
    77: 553, 78: 550, 79: 547, 80: 548, 81: 545, 82: 542, 83: 543, 84: 544,
    85: 545, 86: 541, 87: 538, 88: 535, 89: 531, 90: 532, 91: 533, 92: 533,
    93: 534, 94: 535, 95: 535, 96: 536, 97: 536, 98: 537, 99: 538, 100: 538,
    101: 539, 102: 539, 103: 540, 104: 540, 105: 541, 106: 541, 107: 542,
    108: 543, 109: 543, 110: 544, 111: 544, 112: 545, 113: 545, 114: 546,
    115: 546, 116: 547, 117: 547, 118: 548, 119: 548, 120: 549, 121: 549,
    122: 550, 123: 550, 124: 551, 125: 551, 126: 552, 127: 552, 128: 553,
    129: 553, 130: 553, 131: 554,
    52: 916, 51: 908, 50: 900, 49: 824, 48: 723, 47: 688, 46: 661, 45: 638,
    44: 618, 43: 601, 42: 587, 41: 574, 40: 563, 39: 553, 38: 543, 37: 533,
    36: 525, 35: 519, 34: 513, 33: 507, 32: 500, 31: 496, 30: 492, 29: 486,
    28: 482, 27: 478, 26: 474, 25: 472, 24: 469, 23: 467, 22: 465, 21: 462,
    20: 460, 19: 457, 18: 454, 17: 451, 16: 449, 15: 426,
}

# Same bounds when one modified branch (two-leg-hub or forked) exists
# (case 2); no four-leg hubs then.
MAX_ROOT_HUBS_SPECIAL = {
    53: 919, 54: 882, 55: 798, 56: 749, 57: 718, 58: 694, 59: 673, 60: 655,
    61: 640, 62: 628, 63: 617, 64: 607, 65: 599, 66: 593, 67: 586, 68: 579,
    69: 575, 70: 573, 71: 571, 72: 566, 73: 564, 74: 562, 75: 557, 76: 554,
    77: 555, 78: 553, 79: 550, 80: 551, 81: 548, 82: 545, 83: 546, 84: 547,
    85: 548, 86: 544, 87: 541, 88: 538, 89: 535, 90: 535, 91: 536, 92: 537,
    93: 537, 94: 538, 95: 538, 96: 539, 97: 540, 98: 540, 99: 541, 100: 542,
    101: 542, 102: 543, 103: 543, 104: 544, 105: 544, 106: 545, 107: 546,
    108: 546, 109: 547, 110: 547, 111: 548, 112: 548, 113: 549, 114: 549,
    115: 550, 116: 550, 117: 551, 118: 551, 119: 552, 120: 553, 121: 553,
    122: 554, 123: 554, 124: 554, 125: 555, 126: 555, 127: 556, 128: 556,
    129: 557, 130: 557, 131: 558,
    52: 916, 51: 908, 50: 900, 49: 824, 48: 724, 47: 688, 46: 661, 45: 639,
    44: 618, 43: 602, 42: 588, 41: 575, 40: 564, 39: 554, 38: 544, 37: 534,
    36: 526, 35: 520, 34: 514, 33: 508, 32: 501, 31: 497, 30: 493, 29: 487,
    28: 483, 27: 479, 26: 475, 25: 472, 24: 470, 23: 468, 22: 465, 21: 463,
    20: 460, 19: 457, 18: 454, 17: 451, 16: 448, 15: 426,
}


def large_z_table() -> BoundTable:
    rows = []
    for z, x, k in _LARGE_Z:
        n_k, n_km1 = solve_branch_counts(z, x, k, "plus7")
        rows.append(BoundRow(z=z, x=x, k=k, n_k=n_k, n_km1=n_km1))
    return BoundTable("T4", "large_z", tuple(rows))


def small_z_table() -> BoundTable:
    rows = []
    for z, x, thr, k in _SMALL_Z:
        n_k, n_km1 = solve_branch_counts(z, x, k, "minus7")
        rows.append(BoundRow(z=z, x=x, k=k, n_k=n_k, n_km1=n_km1, dv_threshold=thr))
    return BoundTable("T5", "small_z", tuple(rows))


def max_branch_count(k: int) -> int | None:
    """Largest feasible number of size-k branches, from the two tables.

    None for k = 52, which carries no bound.  For 15 <= k <= 51 the bound
    holds for root degrees at or above the small-z threshold of the row.
    """
    if k == 52:
        return None
    for z, x, kk in _LARGE_Z:
        if z == k:
            return x - 1
    for z, x, thr, kk in _SMALL_Z:
        if z == k:
            return x - 1
    raise KeyError(k)


def builtin_tables() -> dict[str, BoundTable]:
    """All built-in tables keyed by transformation."""
    hub_rows_plain = tuple(
        BoundRow(z=k, x=bound + 1, k=k, n_k=0, n_km1=0)
        for k, bound in sorted(MAX_ROOT_HUBS_PLAIN.items())
    )
    hub_rows_special = tuple(
        BoundRow(z=k, x=bound + 1, k=k, n_k=0, n_km1=0)
        for k, bound in sorted(MAX_ROOT_HUBS_SPECIAL.items())
    )
    return {
        "T4": large_z_table(),
        "T5": small_z_table(),
        "T6": BoundTable("T6", "max_root_hubs_plain", hub_rows_plain),
        "T6_special": BoundTable("T6", "max_root_hubs_special", hub_rows_special),
    }
