"""Exact closed-form invariants of G_q(g).

Every exponent below is written as a rational expression in q and T^(g+1),
where T = (q+1)(q+2)/2. They are evaluated with :class:`fractions.Fraction`
and converted to integers through :func:`as_integer`, which raises
:class:`IntegralityError` instead of silently truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .generator import (
    FamilyParams,
    IntegralityError,
    as_integer,
    clique_edges,
    edge_count,
    node_count,
)

__all__ = [
    "FactoredPolynomial",
    "IntegralityError",
    "MatchingProfile",
    "PreconditionError",
    "acyclic_orientations",
    "chromatic_exponent",
    "chromatic_from_tutte",
    "chromatic_number",
    "chromatic_polynomial",
    "domination_number",
    "double_factorial",
    "eval_polynomial",
    "exponent_table",
    "forests_separating_pair_in_complete",
    "independence_number",
    "matching_exponent",
    "matching_profile_recursive",
    "perfect_matchings",
    "root_connected_acyclic",
    "spanning_tree_exponents",
    "spanning_trees",
    "spanning_trees_recursive",
    "tutte_x_axis",
]


class PreconditionError(ValueError):
    """Parameters fall outside the range where a formula applies."""


def double_factorial(n: int) -> int:
    """n!! with the conventions 0!! = (-1)!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class FactoredPolynomial:
    """``leading * prod((x - root) ** multiplicity)`` with distinct integer roots."""

    leading: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, leading: int, factors) -> "FactoredPolynomial":
        merged: dict[int, int] = {}
        for root, mult in factors:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                merged[root] = merged.get(root, 0) + mult
        if leading == 0:
            merged = {}
        return cls(leading, tuple(sorted(merged.items())))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def roots(self) -> list[int]:
        return [r for r, _ in self.factors]

    def multiplicity(self, root: int) -> int:
        return dict(self.factors).get(root, 0)

    def __call__(self, x) -> Fraction:
        return eval_polynomial(self, x)

    def substitute_affine(self, sign: int, shift: int) -> "FactoredPolynomial":
        """Polynomial in y obtained by putting x = sign*y + shift (sign = +-1)."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        leading = self.leading * sign ** (self.degree % 2)
        return FactoredPolynomial.make(leading, [((r - shift) * sign, m) for r, m in self.factors])

    def __mul__(self, other: "FactoredPolynomial") -> "FactoredPolynomial":
        return FactoredPolynomial.make(self.leading * other.leading, self.factors + other.factors)

    def expand(self, max_degree: int = 4096) -> list[int]:
        """Integer coefficients in ascending powers of x."""
        if self.degree > max_degree:
            raise OverflowError(f"degree {self.degree} exceeds expansion limit {max_degree}")
        coeffs = [self.leading]
        for root, mult in self.factors:
            for _ in range(mult):
                nxt = [0] * (len(coeffs) + 1)
                for i, c in enumerate(coeffs):
                    nxt[i + 1] += c
                    nxt[i] -= root * c
                coeffs = nxt
        return coeffs

    def format(self, var: str = "x") -> str:
        parts = []
        for root, mult in sorted(self.factors, key=lambda f: (abs(f[0]), f[0])):
            if root == 0:
                base = var
            elif root > 0:
                base = f"({var}-{root})"
            else:
                base = f"({var}+{-root})"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        if not parts:
            return str(self.leading)
        body = "*".join(parts)
        if self.leading == 1:
            return body
        if self.leading == -1:
            return "-" + body
        return f"{self.leading}*{body}"

    def __str__(self) -> str:
        return self.format()


def eval_polynomial(fp: FactoredPolynomial, x) -> Fraction:
    x = Fraction(x)
    value = Fraction(fp.leading)
    for root, mult in fp.factors:
        value *= (x - root) ** mult
        if value == 0:
            break
    return value


@dataclass(frozen=True)
class MatchingProfile:
    """``A``: matchings with exactly the two designated hubs vacant; ``B``: perfect matchings."""

    A: int
    B: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.B, self.A)


def _growth_power(p: FamilyParams) -> int:
    return clique_edges(p.q) ** (p.g + 1)


def domination_rational(p: FamilyParams) -> Fraction:
    q, g = p.q, p.g
    if g == 0:
        return Fraction(1)
    return Fraction(q * q + 2 * q - 1, q + 3) * clique_edges(q) ** (g - 1) + Fraction(2 * (q + 2), q + 3)


def exponent_table(p: FamilyParams) -> dict[str, Fraction]:
    """Raw rational values of every closed-form quantity that must be integral.

    Keys: ``N`` node count, ``E`` chromatic multiplicity, ``F`` power of (q+1)
    in the perfect-matching count (even q only), ``a``/``b`` powers of 2 and (q+2) in the
    spanning-tree count, ``gamma`` domination number.
    """
    q, g = p.q, p.g
    T = _growth_power(p)
    d = q * (q + 3) ** 2
    c = Fraction(2, q * (q + 3))
    lin = Fraction(q + 1, q + 3) * g
    table = {
        "N": Fraction(2, q + 3) * T + Fraction(2 * (q + 2), q + 3),
        "E": c * T - c,
        "F": -Fraction(2 * (q + 2), d) * T + Fraction(q + 2, q + 3) * g + Fraction((q + 1) * (q + 2) ** 2, d),
        "a": Fraction(2 * (q + 1), d) * T - lin - Fraction((q + 1) ** 2 * (q + 2), d),
        "b": Fraction(2 * (q * q + 2 * q - 1), d) * T + lin + Fraction(q**3 + 2 * q * q - q + 2, d),
        "gamma": domination_rational(p),
    }
    if q % 2:
        del table["F"]
    return table


def _exponent(p: FamilyParams, key: str) -> int:
    return as_integer(exponent_table(p)[key], f"{key}({p.q},{p.g})")


def chromatic_exponent(p: FamilyParams) -> int:
    """Shared multiplicity E(q, g) of the non-trivial chromatic roots."""
    return _exponent(p, "E")


def matching_exponent(p: FamilyParams) -> int:
    """Power F(q, g) of (q+1) in the perfect-matching count; may be negative."""
    _require_even(p, "matching exponent")
    return _exponent(p, "F")


def spanning_tree_exponents(p: FamilyParams) -> tuple[int, int]:
    """Powers of 2 and of (q+2) in the spanning-tree count."""
    return _exponent(p, "a"), _exponent(p, "b")


def independence_number(p: FamilyParams) -> int:
    return clique_edges(p.q) ** p.g


def domination_number(p: FamilyParams) -> int:
    return _exponent(p, "gamma")


def chromatic_number(p: FamilyParams) -> int:
    return p.q + 2


def chromatic_polynomial(p: FamilyParams) -> FactoredPolynomial:
    e = chromatic_exponent(p)
    return FactoredPolynomial.make(1, [(0, 1), (1, 1)] + [(i, e) for i in range(2, p.q + 2)])


def tutte_x_axis(p: FamilyParams) -> FactoredPolynomial:
    """T(G_q(g); x, 0) in factored form."""
    e = chromatic_exponent(p)
    return FactoredPolynomial.make(1, [(0, 1)] + [(-i, e) for i in range(1, p.q + 1)])


def chromatic_from_tutte(tutte: FactoredPolynomial, components: int, sign_exponent: int) -> FactoredPolynomial:
    """(-l)^k * (-1)^s * T(1 - l, 0) as a factored polynomial in l."""
    shifted = tutte.substitute_affine(-1, 1)
    sign = (-1) ** ((components + sign_exponent) % 2)
    return shifted * FactoredPolynomial.make(sign, [(0, components)])


def acyclic_orientations(p: FamilyParams) -> int:
    return 2 * (factorial(p.q + 2) // 2) ** chromatic_exponent(p)


def root_connected_acyclic(p: FamilyParams) -> int:
    return factorial(p.q + 1) ** chromatic_exponent(p)


def _require_even(p: FamilyParams, what: str) -> None:
    if p.q % 2:
        raise PreconditionError(f"{what} is defined only for even q (q >= 2); got q={p.q}")


def perfect_matchings(p: FamilyParams) -> int:
    _require_even(p, "perfect-matchings")
    q = p.q
    value = Fraction(double_factorial(q + 1)) ** chromatic_exponent(p) * Fraction(q + 1) ** matching_exponent(p)
    return as_integer(value, f"N_per({q},{p.g})")


def matching_profile_recursive(p: FamilyParams) -> MatchingProfile:
    _require_even(p, "matching-profile")
    q = p.q
    lo, hi = double_factorial(q - 1), double_factorial(q + 1)
    a, b = lo, hi
    for _ in range(p.g):
        a, b = (
            lo * b ** (q // 2) * a ** ((q * q + 2 * q + 2) // 2),
            hi * b ** (q // 2 + 1) * a ** (q * (q + 2) // 2),
        )
    return MatchingProfile(a, b)


def spanning_trees(p: FamilyParams) -> int:
    two, qp2 = spanning_tree_exponents(p)
    if two < 0 or qp2 < 0:
        raise IntegralityError(f"negative spanning-tree exponent at ({p.q},{p.g})")
    return 2**two * (p.q + 2) ** qp2


def spanning_trees_recursive(p: FamilyParams) -> int:
    q = p.q
    count = (q + 2) ** q
    for step in range(p.g):
        prev = FamilyParams(q, step)
        m, n = edge_count(prev), node_count(prev)
        count *= 2 ** (m - n + 1) * (q + 2) ** ((q - 1) * m + n - 1)
    return count


def forests_separating_pair_in_complete(q: int) -> int:
    """Two-tree spanning forests of K_q with two fixed nodes in different trees."""
    if q < 3:
        raise PreconditionError(f"q must be >= 3, got {q}")
    return 2 * q ** (q - 3)
