"""The parametrized family of candidate minimal-ABC trees.

Every candidate tree consists of a root carrying:

* ``n_z`` branches of size z and ``n_zp1`` of size z + 1.  A branch of
  size s has a center of degree s + 1 holding s three-leg units (a
  degree-4 hub with three pendant paths of length 2, 7 vertices each),
  so the branch has 7s + 1 vertices.
* optionally exactly one modified branch: either a size-z branch whose
  one hub forks into a two-leg sub-hub (``b_star``, 7z + 4 vertices), or
  a branch of size k1 with one two-leg hub instead of a three-leg hub
  (``b1``, 7k1 - 1 vertices), or a branch of size k2 with two two-leg
  hubs (``b2``, 7k2 - 3 vertices).
* ``n3`` three-leg hubs attached directly to the root (7 vertices each)
  and ``n4`` four-leg hubs (9 vertices each, at most 4, excluded by any
  of the modified branches above).

All pendant-path edges weigh exactly sqrt(2)/2, which is why the closed
form below collapses to a handful of terms per branch type.  The closed
form agrees with the edge-sum of the materialized tree; that round trip
is the central correctness gate for the objective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from decimal import Decimal, localcontext

from .trees import Tree, edge_weight

Z_MIN = 15
Z_MAX = 131
MAX_ROOT_HUBS = 919  # n3 + n4 cap
MAX_FOUR_LEG = 4  # n4 cap

SQRT2_HALF = math.sqrt(2.0) / 2.0


class InvalidParamsError(ValueError):
    """Raised when a parameter tuple violates the family constraints."""


@dataclass(frozen=True, order=True)
class FamilyParams:
    """Parameter tuple describing one candidate tree.

    Field order is irrelevant to validity; the dataclass ordering is not
    the tie-break ordering (see :func:`lex_key`).
    """

    z: int
    n_z: int = 0
    n_zp1: int = 0
    n3: int = 0
    n4: int = 0
    b_star: int = 0
    b1: int = 0
    b2: int = 0
    k1: int = 0
    k2: int = 0

    @property
    def b3(self) -> int:
        return 1 if self.n3 > 0 else 0

    @property
    def b4(self) -> int:
        return 1 if self.n4 > 0 else 0


def lex_key(p: FamilyParams) -> tuple:
    """Deterministic tie-break ordering for equal-ABC parameter tuples."""
    return (p.z, p.n_zp1, p.n_z, p.n3, p.n4, p.b_star, p.b1, p.b2, p.k1, p.k2)


def validate(p: FamilyParams) -> None:
    """Check the family constraints; raise InvalidParamsError on failure."""
    if not (Z_MIN <= p.z <= Z_MAX):
        raise InvalidParamsError(f"z={p.z} outside [{Z_MIN}, {Z_MAX}]")
    for name in ("n_z", "n_zp1", "n3", "n4"):
        if getattr(p, name) < 0:
            raise InvalidParamsError(f"{name} must be nonnegative")
    for name in ("b_star", "b1", "b2"):
        if getattr(p, name) not in (0, 1):
            raise InvalidParamsError(f"{name} must be 0 or 1")
    if p.n4 > MAX_FOUR_LEG:
        raise InvalidParamsError(f"n4={p.n4} exceeds {MAX_FOUR_LEG}")
    if p.n3 + p.n4 > MAX_ROOT_HUBS:
        raise InvalidParamsError(f"n3+n4={p.n3 + p.n4} exceeds {MAX_ROOT_HUBS}")
    if p.b_star + p.b1 + p.b2 + p.b4 > 1:
        raise InvalidParamsError("at most one of b_star, b1, b2, (n4>0) allowed")
    if p.b1:
        if not (p.z - 5 <= p.k1 <= p.z):
            raise InvalidParamsError(f"k1={p.k1} outside [z-5, z]")
    elif p.k1 != 0:
        raise InvalidParamsError("k1 must be 0 when b1=0")
    if p.b2:
        if not (p.z - 9 <= p.k2 <= p.z):
            raise InvalidParamsError(f"k2={p.k2} outside [z-9, z]")
    elif p.k2 != 0:
        raise InvalidParamsError("k2 must be 0 when b2=0")
    if p.n_z + p.n_zp1 < 1:
        raise InvalidParamsError("family members carry at least one size-z or size-(z+1) branch")


def is_valid(p: FamilyParams) -> bool:
    try:
        validate(p)
    except InvalidParamsError:
        return False
    return True


def root_degree(p: FamilyParams) -> int:
    """Degree of the root: one edge per branch attached to it."""
    return p.n_z + p.n_zp1 + p.b_star + p.b1 + p.b2 + p.n3 + p.n4


def branch_order(kind: str, size: int = 0) -> int:
    """Vertex count contributed by one branch of the given kind."""
    if kind == "plain":  # size-s branch of three-leg hubs
        return 7 * size + 1
    if kind == "star":  # one hub replaced by the forked variant
        return 7 * size + 4
    if kind == "one_two_leg":  # size-k branch with one two-leg hub
        return 7 * (size - 1) + 6
    if kind == "two_two_leg":  # size-k branch with two two-leg hubs
        return 7 * (size - 2) + 11
    if kind == "root3":  # three-leg hub at the root
        return 7
    if kind == "root4":  # four-leg hub at the root
        return 9
    raise ValueError(kind)


def order_of(p: FamilyParams) -> int:
    """Total vertex count of the candidate tree."""
    n = 1
    n += p.n_z * branch_order("plain", p.z)
    n += p.n_zp1 * branch_order("plain", p.z + 1)
    if p.b_star:
        n += branch_order("star", p.z)
    if p.b1:
        n += branch_order("one_two_leg", p.k1)
    if p.b2:
        n += branch_order("two_two_leg", p.k2)
    n += p.n3 * branch_order("root3")
    n += p.n4 * branch_order("root4")
    return n


def _objective_terms(p: FamilyParams, w, half_sqrt2):
    """Term list of the closed-form objective, generic over the arithmetic.

    ``w`` is the edge-weight function and ``half_sqrt2`` the value of
    sqrt(2)/2 in the target arithmetic (float or Decimal).
    """
    d = root_degree(p)
    z = p.z
    terms = []
    if p.n_z:
        terms.append(p.n_z * w(d, z + 1))
        terms.append(p.n_z * z * w(z + 1, 4))
        terms.append(6 * p.n_z * z * half_sqrt2)
    if p.n_zp1:
        terms.append(p.n_zp1 * w(d, z + 2))
        terms.append(p.n_zp1 * (z + 1) * w(z + 2, 4))
        terms.append(6 * p.n_zp1 * (z + 1) * half_sqrt2)
    if p.n3:
        terms.append(p.n3 * w(d, 4))
        terms.append(6 * p.n3 * half_sqrt2)
    if p.n4:
        terms.append(p.n4 * w(d, 5))
        terms.append(8 * p.n4 * half_sqrt2)
    if p.b1:
        k1 = p.k1
        terms.append(w(d, k1 + 1))
        terms.append((k1 - 1) * w(k1 + 1, 4))
        terms.append(w(k1 + 1, 3))
        terms.append((6 * (k1 - 1) + 4) * half_sqrt2)
    if p.b2:
        k2 = p.k2
        terms.append(w(d, k2 + 1))
        terms.append((k2 - 2) * w(k2 + 1, 4))
        terms.append(2 * w(k2 + 1, 3))
        terms.append((6 * (k2 - 2) + 8) * half_sqrt2)
    if p.b_star:
        terms.append(w(d, z + 1))
        terms.append(z * w(z + 1, 4))
        terms.append((6 * z + 2) * half_sqrt2)
        terms.append(w(4, 3))
    return terms


def closed_form_abc(p: FamilyParams) -> float:
    """ABC value of the candidate tree, evaluated term by term in binary64."""
    validate(p)
    return math.fsum(_objective_terms(p, edge_weight, SQRT2_HALF))


def closed_form_abc_hp(p: FamilyParams, precision: int = 40) -> Decimal:
    """Closed-form ABC value carrying ``precision`` significant digits.

    Software decimal arithmetic; used to separate candidates whose
    binary64 values collide (mandatory for orders beyond 1e9, where the
    objective magnitude exhausts binary64's relative resolution).
    """
    validate(p)
    with localcontext() as ctx:
        ctx.prec = precision + 10

        def w(x, y):
            return (Decimal(int(x) + int(y) - 2) / Decimal(int(x) * int(y))).sqrt()

        half = Decimal(2).sqrt() / 2
        total = Decimal(0)
        for t in _objective_terms(p, w, half):
            total += t
        ctx.prec = precision
        return +total


def materialize(p: FamilyParams) -> Tree:
    """Build the explicit tree for ``p`` with deterministic numbering.

    Root is vertex 0; branches are laid out in declaration order (size-z
    branches, size-(z+1) branches, the modified branch if any, then root
    hubs) and depth-first within a branch, so exports are reproducible
    byte for byte.
    """
    validate(p)
    n = order_of(p)
    adj: list[list[int]] = [[] for _ in range(n)]
    counter = [0]

    def new_vertex() -> int:
        counter[0] += 1
        return counter[0]

    def connect(u: int, v: int) -> None:
        adj[u].append(v)
        adj[v].append(u)

    def add_path(at: int, length: int) -> None:
        prev = at
        for _ in range(length):
            nxt = new_vertex()
            connect(prev, nxt)
            prev = nxt

    def add_hub(at: int, legs: int) -> int:
        hub = new_vertex()
        connect(at, hub)
        for _ in range(legs):
            add_path(hub, 2)
        return hub

    def add_plain_branch(size: int) -> None:
        center = new_vertex()
        connect(0, center)
        for _ in range(size):
            add_hub(center, 3)

    for _ in range(p.n_z):
        add_plain_branch(p.z)
    for _ in range(p.n_zp1):
        add_plain_branch(p.z + 1)
    if p.b_star:
        center = new_vertex()
        connect(0, center)
        for _ in range(p.z - 1):
            add_hub(center, 3)
        forked = add_hub(center, 2)  # forked hub: two legs plus a two-leg sub-hub
        add_hub(forked, 2)
    if p.b1:
        center = new_vertex()
        connect(0, center)
        for _ in range(p.k1 - 1):
            add_hub(center, 3)
        add_hub(center, 2)
    if p.b2:
        center = new_vertex()
        connect(0, center)
        for _ in range(p.k2 - 2):
            add_hub(center, 3)
        add_hub(center, 2)
        add_hub(center, 2)
    for _ in range(p.n3):
        add_hub(0, 3)
    for _ in range(p.n4):
        add_hub(0, 4)

    assert counter[0] == n - 1, "materialized order mismatch"
    return Tree(n, tuple(tuple(a) for a in adj), 0)


@dataclass(frozen=True)
class StructureSummary:
    order: int
    root_degree: int
    degree_multiset: dict


def summarize(p: FamilyParams) -> StructureSummary:
    """Order, root degree and degree census without building the tree."""
    validate(p)
    counts: dict[int, int] = {}

    def add(degree: int, count: int = 1) -> None:
        if count:
            counts[degree] = counts.get(degree, 0) + count

    def add_hubs(parent_degree_unused: int, three_leg: int, two_leg: int) -> None:
        add(4, three_leg)
        add(1, 3 * three_leg)
        add(2, 3 * three_leg)
        add(3, two_leg)
        add(1, 2 * two_leg)
        add(2, 2 * two_leg)

    d = root_degree(p)
    add(d)
    # plain branches
    for size, count in ((p.z, p.n_z), (p.z + 1, p.n_zp1)):
        for _ in range(0):  # pragma: no cover - placeholder for clarity
            pass
        if count:
            add(size + 1, count)
            add(4, size * count)
            add(1, 3 * size * count)
            add(2, 3 * size * count)
    if p.b_star:
        add(p.z + 1)
        # z - 1 three-leg hubs, the forked hub (degree 4) and its sub-hub (degree 3)
        add_hubs(0, p.z - 1, 0)
        add(4)
        add(1, 2)
        add(2, 2)
        add(3)
        add(1, 2)
        add(2, 2)
    if p.b1:
        add(p.k1 + 1)
        add_hubs(0, p.k1 - 1, 1)
    if p.b2:
        add(p.k2 + 1)
        add_hubs(0, p.k2 - 2, 2)
    add_hubs(0, p.n3, 0)
    add(5, p.n4)
    add(1, 4 * p.n4)
    add(2, 4 * p.n4)

    order = sum(counts.values())
    assert order == order_of(p)
    return StructureSummary(order=order, root_degree=d, degree_multiset=counts)


def with_fields(p: FamilyParams, **kw) -> FamilyParams:
    return replace(p, **kw)
