"""Exact predicates a realizable configuration must satisfy.

Each checker implements one necessary condition on the fixed-point data of
a Hamiltonian circle action with six isolated fixed points, phrased over a
:class:`~hamfix.model.Configuration`.  Violations are returned as data, not
raised, so the search can consume them as pruning signals and the CLI can
render them as reports.

Component-level checks (mod-k weight congruence, smallest-weight balance,
index/Betti regularity) are applied to subgraph components of edges with
``k | w``; balance and regularity beyond dimension-constancy are restricted
to *saturated* components, the ones that model a full isotropy submanifold.

The ``check_*`` functions collect every violation of one rule;
:func:`check_all` aggregates them all into a report, and :func:`is_valid`
decides the same predicate with early exit for the enumeration hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    DIM,
    N_POINTS,
    PAIRS,
    Configuration,
    IsotropyComponent,
    WeightSystem,
    derive_weight_system,
    isotropy_components,
    isotropy_orders,
    structure_problems,
)

RULES = (
    "Divisibility",
    "ModK",
    "SmallestWeightBalance",
    "ComponentRegularity",
    "IndexBound",
    "ExtremalEdge",
    "C1Consistency",
    "GammaRelation",
    "Effectiveness",
    "Structure",
)

C1_MIN = 1
C1_MAX = N_POINTS  # the multiple of the symplectic generator is between 1 and n+1


@dataclass(frozen=True, order=True)
class Violation:
    """One failed predicate, located at the vertices/edges involved."""

    rule: str
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, int, int], ...] = ()
    detail: str = ""

    def __post_init__(self) -> None:
        if not self.vertices and not self.edges:
            raise ValueError("a violation must name at least one vertex or edge")

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "location": {
                "vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges],
            },
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    c1: int | None
    violations: tuple[Violation, ...]

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "c1": self.c1,
            "violations": [v.to_dict() for v in self.violations],
        }


# ---------------------------------------------------------------------------
# rule cores: generators over a shared weight-system analysis


def _iter_divisibility(c: Configuration, ws: WeightSystem):
    phi = c.profile.values
    for e in c.edges:
        gap = phi[e.hi] - phi[e.lo]
        if gap % e.w != 0:
            yield Violation(
                "Divisibility",
                vertices=(e.lo, e.hi),
                edges=((e.lo, e.hi, e.w),),
                detail=f"weight {e.w} does not divide moment gap {gap}",
            )
    for v in range(N_POINTS):
        for w in set(ws.weights[v]):
            if w < 0:
                ok = any((phi[v] - phi[q]) % (-w) == 0 for q in range(v))
            else:
                ok = any((phi[q] - phi[v]) % w == 0 for q in range(v + 1, N_POINTS))
            if not ok:
                side = "lower" if w < 0 else "higher"
                yield Violation(
                    "Divisibility",
                    vertices=(v,),
                    detail=f"weight {w} at vertex {v} divides no gap to a {side} vertex",
                )


def _residues(weights, k: int) -> tuple[int, ...]:
    return tuple(sorted(w % k for w in weights))


def _iter_mod(ws: WeightSystem, comp: IsotropyComponent):
    k = comp.k
    base = comp.vertices[0]
    base_res = _residues(ws.weights[base], k)
    for v in comp.vertices[1:]:
        res = _residues(ws.weights[v], k)
        if res != base_res:
            yield Violation(
                "ModK",
                vertices=(base, v),
                detail=(
                    f"weights at {base} and {v} differ mod {k}: {base_res} vs {res}"
                ),
            )


def _iter_balance(edges, lam_of, dim: int, k: int | None, vertices):
    """Smallest-weight pairing balance across index levels.

    With w the smallest weight among ``edges``, the number of ``-w`` slots
    at points of index level m+1 must equal the number of ``+w`` slots at
    level m.
    """
    if not edges:
        return
    wmin = min(e.w for e in edges)
    plus: dict[int, int] = {}
    minus: dict[int, int] = {}
    for e in edges:
        if e.w == wmin:
            lo, hi = lam_of(e.lo), lam_of(e.hi)
            plus[lo] = plus.get(lo, 0) + e.mult
            minus[hi] = minus.get(hi, 0) + e.mult
    scope = "globally" if k is None else f"in the k={k} component {vertices}"
    for m in range(dim):
        np_ = plus.get(m, 0)
        nm = minus.get(m + 1, 0)
        if np_ != nm:
            yield Violation(
                "SmallestWeightBalance",
                vertices=tuple(vertices),
                detail=(
                    f"{scope}: smallest weight {wmin} has {np_} positive slots at "
                    f"index level {m} but {nm} negative slots at level {m + 1}"
                ),
            )


def _iter_regularity(comp: IsotropyComponent):
    where = f"k={comp.k} component {comp.vertices}"
    if len(set(comp.divisible_count)) != 1:
        yield Violation(
            "ComponentRegularity",
            vertices=comp.vertices,
            detail=(
                f"{where}: divisible-weight counts {comp.divisible_count} "
                "are not constant"
            ),
        )
        return
    if not comp.saturated:
        return
    d = comp.divisible_count[0]
    levels = [0] * (d + 1)
    for lam in comp.within_down:
        levels[lam] += 1
    if levels[0] != 1 or levels[d] != 1:
        yield Violation(
            "ComponentRegularity",
            vertices=comp.vertices,
            detail=f"{where}: expected unique minimum and maximum, levels {levels}",
        )
    for m in range(d + 1):
        if levels[m] == 0:
            yield Violation(
                "ComponentRegularity",
                vertices=comp.vertices,
                detail=f"{where}: no vertex at index level {m} of {d}",
            )
        if levels[m] != levels[d - m]:
            yield Violation(
                "ComponentRegularity",
                vertices=comp.vertices,
                detail=(
                    f"{where}: index level counts {levels} are not "
                    "symmetric under duality"
                ),
            )
    for p, (v, lam) in enumerate(zip(comp.vertices, comp.within_down)):
        if lam > p:
            yield Violation(
                "IndexBound",
                vertices=(v,),
                detail=(
                    f"{where}: vertex {v} has index level {lam} with only "
                    f"{p} lower vertices in the component"
                ),
            )


def _comp_balance_args(comp: IsotropyComponent):
    if not comp.saturated or len(set(comp.divisible_count)) != 1:
        return None
    lam = dict(zip(comp.vertices, comp.within_down))
    return comp.edges, lam.__getitem__, comp.divisible_count[0], comp.k, comp.vertices


def _iter_extremal(c: Configuration):
    gaps = c.profile.gaps
    for lo, hi, g in ((0, 1, gaps[0]), (N_POINTS - 2, N_POINTS - 1, gaps[-1])):
        if not any(e.lo == lo and e.hi == hi and e.w == g for e in c.edges):
            yield Violation(
                "ExtremalEdge",
                vertices=(lo, hi),
                detail=f"no edge of weight {g} between vertices {lo} and {hi}",
            )


def _c1_of(c: Configuration, ws: WeightSystem) -> int | Violation:
    phi = c.profile.values
    k = None
    first_pair = None
    for i, j in PAIRS:
        kij = Fraction(ws.gamma[i] - ws.gamma[j], phi[j] - phi[i])
        if k is None:
            k = kij
            first_pair = (i, j)
        elif kij != k:
            return Violation(
                "C1Consistency",
                vertices=(i, j),
                detail=(
                    f"pair ({i},{j}) gives weight-sum ratio {kij}, "
                    f"pair {first_pair} gives {k}"
                ),
            )
    assert k is not None
    if k.denominator != 1:
        return Violation(
            "C1Consistency",
            vertices=first_pair,
            detail=f"weight-sum ratio {k} is not an integer",
        )
    kval = int(k)
    if not C1_MIN <= kval <= C1_MAX:
        return Violation(
            "C1Consistency",
            vertices=first_pair,
            detail=f"weight-sum ratio {kval} outside [{C1_MIN}, {C1_MAX}]",
        )
    return kval


def _iter_gamma_relation(c: Configuration, ws: WeightSystem, k: int):
    phi = c.profile.values
    down_mult: dict[tuple[int, int], int] = {}
    for e in c.edges:
        down_mult[(e.hi, e.w)] = down_mult.get((e.hi, e.w), 0) + e.mult
    biggest = {
        v: max(abs(x) for x in ws.weights[v]) for v in range(N_POINTS)
    }
    for e in c.edges:
        i, j, w = e.lo, e.hi, e.w
        if -w in ws.weights[i]:
            continue
        if w != max(biggest[i], biggest[j]):
            continue
        s = down_mult[(j, w)]
        lhs = j - i + s
        rhs = Fraction(k * (phi[j] - phi[i]), w)
        if lhs != rhs:
            yield Violation(
                "GammaRelation",
                vertices=(i, j),
                edges=((i, j, w),),
                detail=(
                    f"edge ({i},{j},{w}): index relation gives {lhs}, "
                    f"weight sums give {rhs}"
                ),
            )


def _iter_effectiveness(c: Configuration):
    g = c.weight_gcd()
    if g != 1:
        yield Violation(
            "Effectiveness",
            vertices=tuple(range(N_POINTS)),
            detail=f"gcd of all edge weights is {g}, expected 1",
        )


# ---------------------------------------------------------------------------
# public checkers (spec surface)


def check_divisibility(c: Configuration) -> list[Violation]:
    """Every edge weight divides its moment gap; every signed weight divides
    some moment gap on its own side (redundant second form)."""
    return list(_iter_divisibility(c, derive_weight_system(c)))


def check_mod(c: Configuration) -> list[Violation]:
    """Weight multisets agree mod k across each k-divisible subgraph component."""
    ws = derive_weight_system(c)
    out: list[Violation] = []
    for k in isotropy_orders(c):
        for comp in isotropy_components(c, k, ws=ws):
            out.extend(_iter_mod(ws, comp))
    return out


def check_smallest_weight_balance(c: Configuration) -> list[Violation]:
    """Balance of the smallest weight, globally and per saturated component."""
    ws = derive_weight_system(c)
    out = list(_iter_balance(c.edges, lambda v: v, DIM, None, tuple(range(N_POINTS))))
    for k in isotropy_orders(c):
        for comp in isotropy_components(c, k, ws=ws):
            args = _comp_balance_args(comp)
            if args is not None:
                out.extend(_iter_balance(*args))
    return out


def check_component_regularity(c: Configuration) -> list[Violation]:
    """Constant dimension per component; Morse/duality shape when saturated."""
    ws = derive_weight_system(c)
    out: list[Violation] = []
    for k in isotropy_orders(c):
        for comp in isotropy_components(c, k, ws=ws):
            out.extend(_iter_regularity(comp))
    return out


def check_extremal_edges(c: Configuration) -> list[Violation]:
    """The two extremal gaps are realized by edges of exactly that weight."""
    return list(_iter_extremal(c))


def compute_c1(c: Configuration) -> int | Violation:
    """The common multiple k with Gamma_i - Gamma_j = k (phi_j - phi_i).

    All fifteen vertex pairs must give the same integral value in
    ``[1, 6]``; otherwise a C1Consistency violation describing the first
    offending pair is returned.
    """
    return _c1_of(c, derive_weight_system(c))


def check_gamma_relation(c: Configuration, k: int) -> list[Violation]:
    """Index/multiplicity relation for dominating edges.

    For an edge (i, j, w) whose weight is largest in absolute value among
    all weights at both endpoints, with no ``-w`` slot at i and ``s``
    negative slots of weight w at j:  j - i + s = k (phi_j - phi_i) / w.
    """
    return list(_iter_gamma_relation(c, derive_weight_system(c), k))


def check_effectiveness(c: Configuration) -> list[Violation]:
    return list(_iter_effectiveness(c))


def check_all(c: Configuration, effective: bool | None = None) -> CheckReport:
    """Run every checker; aggregate violations into a PASS/FAIL report.

    ``effective`` overrides the configuration's own effectiveness flag;
    when the flag is set the gcd-of-weights check is included.
    """
    problems = structure_problems(c)
    if problems:
        violations = tuple(
            Violation("Structure", vertices=tuple(range(N_POINTS)), detail=p)
            for p in problems
        )
        return CheckReport(passed=False, c1=None, violations=violations)

    ws = derive_weight_system(c)
    violations: list[Violation] = []
    violations.extend(_iter_divisibility(c, ws))
    comps_by_k = [
        comp for k in isotropy_orders(c) for comp in isotropy_components(c, k, ws=ws)
    ]
    for comp in comps_by_k:
        violations.extend(_iter_mod(ws, comp))
    violations.extend(_iter_balance(c.edges, lambda v: v, DIM, None, tuple(range(N_POINTS))))
    for comp in comps_by_k:
        args = _comp_balance_args(comp)
        if args is not None:
            violations.extend(_iter_balance(*args))
    for comp in comps_by_k:
        violations.extend(_iter_regularity(comp))
    violations.extend(_iter_extremal(c))
    c1 = _c1_of(c, ws)
    c1_value: int | None
    if isinstance(c1, Violation):
        violations.append(c1)
        c1_value = None
    else:
        c1_value = c1
        violations.extend(_iter_gamma_relation(c, ws, c1_value))
    flag = c.effective if effective is None else effective
    if flag:
        violations.extend(_iter_effectiveness(c))
    ordered = tuple(sorted(violations))
    return CheckReport(passed=not ordered, c1=c1_value, violations=ordered)


def is_valid(c: Configuration, effective: bool | None = None) -> bool:
    """Exactly ``check_all(c, effective).passed``, with early exit.

    Cheap and lethal rules run first; used as the enumeration's final gate.
    """
    if structure_problems(c):
        return False
    if any(True for _ in _iter_extremal(c)):
        return False
    ws = derive_weight_system(c)
    c1 = _c1_of(c, ws)
    if isinstance(c1, Violation):
        return False
    for _ in _iter_divisibility(c, ws):
        return False
    for _ in _iter_balance(c.edges, lambda v: v, DIM, None, range(N_POINTS)):
        return False
    for k in isotropy_orders(c):
        for comp in isotropy_components(c, k, ws=ws):
            for _ in _iter_regularity(comp):
                return False
            args = _comp_balance_args(comp)
            if args is not None:
                for _ in _iter_balance(*args):
                    return False
            for _ in _iter_mod(ws, comp):
                return False
    for _ in _iter_gamma_relation(c, ws, c1):
        return False
    flag = c.effective if effective is None else effective
    if flag and c.weight_gcd() != 1:
        return False
    return True
