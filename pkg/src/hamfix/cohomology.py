"""Exact cohomological invariants from fixed-point restrictions.

All classes are represented by their restrictions to the six fixed points.
A degree-2m class restricts at vertex ``i`` to ``coeffs[i] * t**m`` for the
equivariant generator ``t``, so a class is a degree plus six rational
coefficients; products multiply coefficients and add degrees.  Everything
is computed with ``fractions.Fraction`` -- integrality failures are real
obstructions, never rounding noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    DIM,
    N_POINTS,
    Configuration,
    WeightSystem,
    derive_weight_system,
)


class CohomologyError(ValueError):
    """Base class for cohomological obstructions."""


class IntegralityError(CohomologyError):
    """A quantity that must be an integer is not."""


class DualityError(CohomologyError):
    """The ring multipliers fail the duality identity q_i q_{5-i} = q_5."""


class ConsistencyError(CohomologyError):
    """Restrictions are inconsistent with a basis expansion."""


@dataclass(frozen=True)
class EquivariantClass:
    """Degree-homogeneous class; restriction at vertex i is coeffs[i] t^(deg/2)."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.degree % 2 != 0 or self.degree < 0:
            raise ValueError(f"degree must be a nonnegative even integer: {self.degree}")
        if len(self.coeffs) != N_POINTS:
            raise ValueError("one restriction per fixed point required")
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))

    def __mul__(self, other: "EquivariantClass") -> "EquivariantClass":
        return EquivariantClass(
            self.degree + other.degree,
            tuple(a * b for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __pow__(self, n: int) -> "EquivariantClass":
        return EquivariantClass(self.degree * n, tuple(x**n for x in self.coeffs))

    def scaled(self, r) -> "EquivariantClass":
        r = Fraction(r)
        return EquivariantClass(self.degree, tuple(r * x for x in self.coeffs))


@dataclass(frozen=True)
class EquivariantBasis:
    """Module basis with the triangular vanishing pattern.

    ``classes[i]`` vanishes at vertices below ``i`` and restricts at vertex
    ``i`` to the product of the negative weights there times ``t**i``.
    """

    classes: tuple[EquivariantClass, ...]
    a: tuple[int, ...]
    lam_minus: tuple[int, ...]


@dataclass(frozen=True)
class RingPresentation:
    """Rational multipliers q_i with alpha_i = q_i [omega]^i, and a_i = 1/q_i."""

    q: tuple[Fraction, ...]
    a: tuple[int, ...]


@dataclass(frozen=True)
class ChernReport:
    """Basis expansions of the equivariant Chern classes.

    ``equivariant[m-1]`` lists the integers d_{m,0..m} with
    c_m = sum_i d_{m,i} t^(m-i) basis_i; ``ordinary`` is the diagonal
    (d_{1,1}, ..., d_{5,5}) giving the ordinary Chern classes.
    """

    equivariant: tuple[tuple[int, ...], ...]
    ordinary: tuple[int, ...]


# ---------------------------------------------------------------------------


def one_class() -> EquivariantClass:
    return EquivariantClass(0, (Fraction(1),) * N_POINTS)


def u_tilde(c: Configuration) -> EquivariantClass:
    """Equivariant extension of the symplectic generator: restricts to -phi_i t."""
    return EquivariantClass(2, tuple(Fraction(-v) for v in c.profile.values))


def lambda_products(ws: WeightSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-vertex products of the negative weights and of all weights."""
    lam_minus = []
    lam = []
    for weights in ws.weights:
        neg = 1
        tot = 1
        for w in weights:
            tot *= w
            if w < 0:
                neg *= w
        lam_minus.append(neg)
        lam.append(tot)
    return tuple(lam_minus), tuple(lam)


def ring_presentation(c: Configuration) -> RingPresentation:
    """Multipliers of the integral generators in each even degree.

    q_i is the product of the negative weights at vertex i divided by the
    product of the moment gaps down from it.  Raises IntegralityError when
    some 1/q_i is not an integer, DualityError when q_i q_{5-i} != q_5.
    """
    ws = derive_weight_system(c)
    phi = c.profile.values
    q = []
    a = []
    for i in range(N_POINTS):
        denom = 1
        for j in range(i):
            denom *= phi[j] - phi[i]
        qi = Fraction(ws.lam_minus[i], denom)
        ai = 1 / qi
        if ai.denominator != 1:
            raise IntegralityError(
                f"generator multiplier at vertex {i} is {qi}; its inverse "
                f"{ai} is not an integer"
            )
        q.append(qi)
        a.append(int(ai))
    for i in range(N_POINTS):
        if q[i] * q[N_POINTS - 1 - i] != q[N_POINTS - 1]:
            raise DualityError(
                f"duality fails: q_{i} * q_{N_POINTS - 1 - i} = "
                f"{q[i] * q[N_POINTS - 1 - i]} != q_{N_POINTS - 1} = {q[N_POINTS - 1]}"
            )
    return RingPresentation(tuple(q), tuple(a))


def equivariant_basis(c: Configuration) -> EquivariantBasis:
    """Build the triangular basis classes and verify their vanishing pattern."""
    rp = ring_presentation(c)
    ws = derive_weight_system(c)
    phi = c.profile.values
    classes = []
    for i in range(N_POINTS):
        coeffs = []
        for p in range(N_POINTS):
            prod = Fraction(1)
            for j in range(i):
                prod *= phi[j] - phi[p]
            coeffs.append(prod / rp.a[i])
        cls = EquivariantClass(2 * i, tuple(coeffs))
        assert all(cls.coeffs[p] == 0 for p in range(i))
        assert cls.coeffs[i] == ws.lam_minus[i]
        classes.append(cls)
    return EquivariantBasis(tuple(classes), rp.a, ws.lam_minus)


def elementary_symmetric(values, m: int) -> int:
    """sigma_m of an integer multiset, by the product recurrence."""
    coeffs = [1] + [0] * m
    for v in values:
        for d in range(min(m, len(coeffs) - 1), 0, -1):
            coeffs[d] += v * coeffs[d - 1]
    return coeffs[m]


def chern_restrictions(ws: WeightSystem, m: int) -> EquivariantClass:
    """m-th equivariant Chern class: restriction sigma_m(weights at i) t^m."""
    if not 1 <= m <= DIM:
        raise ValueError(f"Chern degree must be in 1..{DIM}, got {m}")
    return EquivariantClass(
        2 * m,
        tuple(Fraction(elementary_symmetric(w, m)) for w in ws.weights),
    )


def expand_in_basis(
    x: EquivariantClass,
    basis: EquivariantBasis,
    require_integral: bool = False,
) -> tuple:
    """Coefficients d_0..d_m with x = sum d_i t^(m-i) basis_i.

    Solved triangularly from the restrictions at the lowest m+1 vertices,
    then verified against the remaining ones (ConsistencyError on mismatch).
    With ``require_integral`` every coefficient must be an integer.
    """
    m = x.degree // 2
    if m > DIM:
        raise ValueError(f"degree {x.degree} exceeds the manifold dimension")
    d: list[Fraction] = []
    for p in range(m + 1):
        acc = Fraction(0)
        for i in range(p):
            acc += d[i] * basis.classes[i].coeffs[p]
        lead = basis.classes[p].coeffs[p]
        d.append((x.coeffs[p] - acc) / lead)
    for p in range(m + 1, N_POINTS):
        acc = sum((d[i] * basis.classes[i].coeffs[p] for i in range(m + 1)), Fraction(0))
        if acc != x.coeffs[p]:
            raise ConsistencyError(
                f"expansion solved at vertices 0..{m} restricts to {acc} at "
                f"vertex {p}, but the class restricts to {x.coeffs[p]}"
            )
    if require_integral:
        bad = [i for i, v in enumerate(d) if v.denominator != 1]
        if bad:
            raise IntegralityError(
                f"expansion coefficients at positions {bad} are not integers: "
                f"{[str(d[i]) for i in bad]}"
            )
        return tuple(int(v) for v in d)
    return tuple(d)


def total_chern(c: Configuration) -> ChernReport:
    """Expand every equivariant Chern class; the diagonal gives the ordinary ones."""
    basis = equivariant_basis(c)
    ws = derive_weight_system(c)
    rows = []
    for m in range(1, DIM + 1):
        rows.append(expand_in_basis(chern_restrictions(ws, m), basis, require_integral=True))
    ordinary = tuple(rows[m - 1][m] for m in range(1, DIM + 1))
    if ordinary[-1] != N_POINTS:
        raise ConsistencyError(
            f"top Chern coefficient {ordinary[-1]} != number of fixed points {N_POINTS}"
        )
    return ChernReport(tuple(rows), ordinary)


def localize_integral(x: EquivariantClass, ws: WeightSystem) -> Fraction:
    """Fixed-point localization: sum of restrictions over full weight products.

    Returns sum_i coeffs[i] / Lambda_i.  For classes of cohomological degree
    below the manifold dimension this must come out to exactly 0.
    """
    if x.degree > 2 * DIM:
        raise ValueError(f"degree {x.degree} exceeds the manifold dimension")
    _, lam = lambda_products(ws)
    return sum(
        (x.coeffs[i] / lam[i] for i in range(N_POINTS)), Fraction(0)
    )


def cohomology_report(c: Configuration) -> dict:
    """Ring, Chern and localization summary in the report JSON shape."""
    ws = derive_weight_system(c)
    rp = ring_presentation(c)
    chern = total_chern(c)
    omega5 = localize_integral(u_tilde(c) ** DIM, ws)
    euler = localize_integral(chern_restrictions(ws, DIM), ws)
    return {
        "ring_q": [str(v) for v in rp.q],
        "a": list(rp.a),
        "chern_ordinary": list(chern.ordinary),
        "chern_equivariant": [list(row) for row in chern.equivariant],
        "integrals": {"omega5": str(omega5), "euler": str(euler)},
    }
