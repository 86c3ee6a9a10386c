"""Combinatorial fixed-point data for Hamiltonian circle actions.

The central object is a :class:`Configuration`: the integer moment values of
six isolated fixed points of a circle action on a ten-dimensional manifold,
together with a multiset of weighted edges pairing positive and negative
weight slots between the points.  Everything downstream (constraint checks,
cohomology, search) consumes these values.

Conventions baked into the types:

* fixed points are indexed ``0..5`` in increasing moment order, so point
  ``i`` has Morse index ``2i`` and carries ``i`` downward and ``5 - i``
  upward weight slots;
* the moment map is normalized so the minimum value is ``0``;
* an edge ``(lo, hi, w, mult)`` contributes ``mult`` copies of ``+w`` at
  ``lo`` and ``mult`` copies of ``-w`` at ``hi``.

Constructors validate only the *shape* of the data (index ranges, positive
weights, increasing moment values).  Slot-count structure is checked by
:func:`validate_structure`, and everything else (divisibility, mod-k
consistency, ...) is reported by the ``constraints`` module so that invalid
data remains representable and inspectable.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from math import gcd

N_POINTS = 6
DIM = 5  # complex dimension: five weights per fixed point

#: all unordered vertex pairs (lo < hi), in lexicographic order
PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(N_POINTS) for j in range(i + 1, N_POINTS)
)


class StructureError(ValueError):
    """A configuration violates the slot-count structure."""


class SchemaError(ValueError):
    """A JSON document does not match the configuration schema."""


@dataclass(frozen=True, order=True)
class WeightEdge:
    """``mult`` parallel weight-``w`` edges from vertex ``lo`` up to ``hi``."""

    lo: int
    hi: int
    w: int
    mult: int = 1

    def __post_init__(self) -> None:
        if not (0 <= self.lo < self.hi < N_POINTS):
            raise ValueError(f"edge endpoints out of range: ({self.lo}, {self.hi})")
        if self.w < 1:
            raise ValueError(f"edge weight must be positive, got {self.w}")
        if self.mult < 1:
            raise ValueError(f"edge multiplicity must be positive, got {self.mult}")


@dataclass(frozen=True)
class MomentProfile:
    """Strictly increasing integer moment values, normalized to start at 0."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != N_POINTS:
            raise ValueError(f"expected {N_POINTS} moment values, got {len(vals)}")
        if vals[0] != 0:
            raise ValueError("moment values must be normalized so the minimum is 0")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"moment values must be strictly increasing: {vals}")

    @classmethod
    def from_gaps(cls, gaps) -> "MomentProfile":
        vals = [0]
        for g in gaps:
            vals.append(vals[-1] + int(g))
        return cls(tuple(vals))

    @property
    def gaps(self) -> tuple[int, ...]:
        v = self.values
        return tuple(v[i + 1] - v[i] for i in range(N_POINTS - 1))

    @property
    def width(self) -> int:
        return self.values[-1]

    def flipped(self) -> "MomentProfile":
        top = self.values[-1]
        return MomentProfile(tuple(top - v for v in reversed(self.values)))


@dataclass(frozen=True)
class Configuration:
    """Moment profile plus the edge multiset; the object every check consumes.

    Edges are normalized on construction: parallel edges with equal weight
    are merged into one entry and the tuple is sorted by ``(lo, hi, w)``,
    which makes equality, hashing and serialization canonical.
    """

    profile: MomentProfile
    edges: tuple[WeightEdge, ...]
    label: str = ""
    effective: bool = False

    def __post_init__(self) -> None:
        merged: Counter = Counter()
        for e in self.edges:
            merged[(e.lo, e.hi, e.w)] += e.mult
        norm = tuple(
            WeightEdge(lo, hi, w, m) for (lo, hi, w), m in sorted(merged.items())
        )
        object.__setattr__(self, "edges", norm)

    @property
    def moment(self) -> tuple[int, ...]:
        return self.profile.values

    def gap(self, i: int, j: int) -> int:
        return self.profile.values[j] - self.profile.values[i]

    def max_weight(self) -> int:
        return max(e.w for e in self.edges) if self.edges else 0

    def weight_gcd(self) -> int:
        g = 0
        for e in self.edges:
            g = gcd(g, e.w)
        return g


@dataclass(frozen=True)
class WeightSystem:
    """Per-vertex signed weight multisets with their sums and products.

    ``weights[i]`` is the sorted multiset of the five signed weights at
    vertex ``i``; ``gamma[i]`` its sum; ``lam_minus[i]`` the product of its
    negative entries (empty product = 1); ``lam[i]`` the product of all.
    """

    weights: tuple[tuple[int, ...], ...]
    gamma: tuple[int, ...]
    lam_minus: tuple[int, ...]
    lam: tuple[int, ...]


@dataclass(frozen=True)
class IsotropyComponent:
    """One connected component of the subgraph of edges with ``k | w``.

    ``within_degree``/``within_down`` count the slots (total / downward)
    each member vertex has inside the subgraph; ``divisible_count`` counts
    the weights divisible by ``k`` in the vertex's full weight multiset.
    The component is *saturated* when the subgraph accounts for every
    divisible weight at every member vertex; exactly those components model
    full fixed submanifolds of the order-``k`` subgroup.
    """

    k: int
    vertices: tuple[int, ...]
    within_degree: tuple[int, ...]
    within_down: tuple[int, ...]
    divisible_count: tuple[int, ...]
    saturated: bool
    edges: tuple[WeightEdge, ...]


# ---------------------------------------------------------------------------
# structural validation


def slot_counts(c: Configuration) -> tuple[list[int], list[int]]:
    """Return ``(up, down)`` slot counts per vertex."""
    up = [0] * N_POINTS
    down = [0] * N_POINTS
    for e in c.edges:
        up[e.lo] += e.mult
        down[e.hi] += e.mult
    return up, down


def structure_problems(c: Configuration) -> list[str]:
    """Describe every slot-count violation; empty iff structurally valid."""
    up, down = slot_counts(c)
    problems = []
    for v in range(N_POINTS):
        total = up[v] + down[v]
        if total != DIM:
            problems.append(f"vertex {v} has {total} slots, expected {DIM}")
        if down[v] != v:
            problems.append(f"vertex {v} has {down[v]} downward slots, expected {v}")
    return problems


def validate_structure(c: Configuration) -> None:
    problems = structure_problems(c)
    if problems:
        raise StructureError("; ".join(problems))


# ---------------------------------------------------------------------------
# derived data


def derive_weight_system(c: Configuration) -> WeightSystem:
    """Unfold the edge multiset into per-vertex signed weight multisets."""
    validate_structure(c)
    signed: list[list[int]] = [[] for _ in range(N_POINTS)]
    for e in c.edges:
        signed[e.lo].extend([e.w] * e.mult)
        signed[e.hi].extend([-e.w] * e.mult)
    weights = tuple(tuple(sorted(ws)) for ws in signed)
    gamma = tuple(sum(ws) for ws in weights)
    lam_minus = []
    lam = []
    for ws in weights:
        neg = 1
        tot = 1
        for w in ws:
            tot *= w
            if w < 0:
                neg *= w
        lam_minus.append(neg)
        lam.append(tot)
    return WeightSystem(weights, gamma, tuple(lam_minus), tuple(lam))


def isotropy_components(
    c: Configuration, k: int, ws: WeightSystem | None = None
) -> list[IsotropyComponent]:
    """Connected components of the subgraph of edges whose weight ``k`` divides."""
    if k < 2:
        raise ValueError(f"isotropy order must be at least 2, got {k}")
    if ws is None:
        ws = derive_weight_system(c)
    kedges = [e for e in c.edges if e.w % k == 0]
    adj: dict[int, set[int]] = {}
    for e in kedges:
        adj.setdefault(e.lo, set()).add(e.hi)
        adj.setdefault(e.hi, set()).add(e.lo)
    seen: set[int] = set()
    comps: list[IsotropyComponent] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        members: set[int] = set()
        while stack:
            v = stack.pop()
            if v in members:
                continue
            members.add(v)
            stack.extend(adj[v] - members)
        seen |= members
        vertices = tuple(sorted(members))
        comp_edges = tuple(e for e in kedges if e.lo in members)
        deg = {v: 0 for v in vertices}
        dwn = {v: 0 for v in vertices}
        for e in comp_edges:
            deg[e.lo] += e.mult
            deg[e.hi] += e.mult
            dwn[e.hi] += e.mult
        divc = tuple(sum(1 for w in ws.weights[v] if w % k == 0) for v in vertices)
        within = tuple(deg[v] for v in vertices)
        saturated = all(d == dc for d, dc in zip(within, divc))
        comps.append(
            IsotropyComponent(
                k=k,
                vertices=vertices,
                within_degree=within,
                within_down=tuple(dwn[v] for v in vertices),
                divisible_count=divc,
                saturated=saturated,
                edges=comp_edges,
            )
        )
    return comps


def isotropy_orders(c: Configuration) -> list[int]:
    """All k >= 2 dividing at least one edge weight."""
    out = []
    top = c.max_weight()
    for k in range(2, top + 1):
        if any(e.w % k == 0 for e in c.edges):
            out.append(k)
    return out


# ---------------------------------------------------------------------------
# flip symmetry and canonical form


def flip(c: Configuration) -> Configuration:
    """The same data under the reversed circle action."""
    prof = c.profile.flipped()
    edges = tuple(
        WeightEdge(N_POINTS - 1 - e.hi, N_POINTS - 1 - e.lo, e.w, e.mult)
        for e in c.edges
    )
    return Configuration(prof, edges, label=c.label, effective=c.effective)


def sort_key(c: Configuration):
    return (c.profile.values, tuple((e.lo, e.hi, e.w, e.mult) for e in c.edges))


def canonicalize(c: Configuration) -> Configuration:
    """The lexicographically smaller of ``c`` and its flip; idempotent."""
    f = flip(c)
    return c if sort_key(c) <= sort_key(f) else f


# ---------------------------------------------------------------------------
# JSON serialization
#
# Schema: { "label": str, "moment": [6 ints, increasing, first 0],
#           "edges": [ {"lo": int, "hi": int, "w": int, "mult": int}, ... ],
#           "effective": bool }   -- edges sorted by (lo, hi, w).


def config_to_dict(c: Configuration) -> dict:
    return {
        "label": c.label,
        "moment": list(c.profile.values),
        "edges": [
            {"lo": e.lo, "hi": e.hi, "w": e.w, "mult": e.mult} for e in c.edges
        ],
        "effective": c.effective,
    }


def config_from_dict(d) -> Configuration:
    if not isinstance(d, dict):
        raise SchemaError("configuration document must be a JSON object")
    for key in ("moment", "edges"):
        if key not in d:
            raise SchemaError(f"missing required key {key!r}")
    moment = d["moment"]
    if not isinstance(moment, list) or not all(isinstance(v, int) for v in moment):
        raise SchemaError("'moment' must be a list of integers")
    raw_edges = d["edges"]
    if not isinstance(raw_edges, list):
        raise SchemaError("'edges' must be a list")
    edges = []
    for item in raw_edges:
        if not isinstance(item, dict):
            raise SchemaError("each edge must be an object")
        try:
            edges.append(
                WeightEdge(
                    int(item["lo"]),
                    int(item["hi"]),
                    int(item["w"]),
                    int(item.get("mult", 1)),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad edge entry {item!r}: {exc}") from exc
    label = d.get("label", "")
    effective = bool(d.get("effective", False))
    if not isinstance(label, str):
        raise SchemaError("'label' must be a string")
    try:
        profile = MomentProfile(tuple(moment))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return Configuration(profile, tuple(edges), label=label, effective=effective)


def config_dumps(c: Configuration) -> str:
    return json.dumps(config_to_dict(c), indent=2)


def config_loads(text: str) -> Configuration:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return config_from_dict(doc)
