"""Sparse multivariate polynomials over an exact field.

Exponents are tuples of non-negative ints of length ``n``; a polynomial is a
map from exponents to nonzero coefficients.  The same class houses operator
polynomials (which act by differentiation) and dual forms (which are acted
on); the two live in different copies of the polynomial ring and the
differentiation action ties them together.

Monomial order everywhere is graded lex with x1 > x2 > ... > xn; within one
degree that is plain descending lex on exponent tuples.
"""

from __future__ import annotations

import random
from math import comb, factorial

from .fields import QQ, PrimeField


def monomials_of_degree(n: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree, descending graded-lex.

    The list has C(n + degree - 1, degree) entries and the order is
    deterministic: (2,0,0) > (1,1,0) > (1,0,1) > (0,2,0) > ...
    """
    if n < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    out: list[tuple[int, ...]] = []

    def build(prefix: tuple[int, ...], remaining_vars: int, remaining_deg: int) -> None:
        if remaining_vars == 1:
            out.append(prefix + (remaining_deg,))
            return
        for e in range(remaining_deg, -1, -1):
            build(prefix + (e,), remaining_vars - 1, remaining_deg - e)

    build((), n, degree)
    return out


def count_monomials(n: int, degree: int) -> int:
    return comb(n + degree - 1, degree)


class Poly:
    """Immutable sparse polynomial attached to a field descriptor."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field, terms: dict | None = None):
        self.n = n
        self.field = field
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError(f"exponent {exp} has length {len(exp)}, expected {n}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                if not field.is_zero(c):
                    clean[tuple(exp)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, field) -> "Poly":
        return cls(n, field, {})

    @classmethod
    def constant(cls, n: int, field, value) -> "Poly":
        return cls(n, field, {(0,) * n: value})

    @classmethod
    def one(cls, n: int, field) -> "Poly":
        return cls.constant(n, field, field.one)

    @classmethod
    def monomial(cls, n: int, field, exp: tuple[int, ...], coeff=None) -> "Poly":
        return cls(n, field, {tuple(exp): field.one if coeff is None else coeff})

    @classmethod
    def variable(cls, n: int, field, index: int) -> "Poly":
        """The variable x_{index}, 1-indexed."""
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        exp = tuple(1 if j == index - 1 else 0 for j in range(n))
        return cls(n, field, {exp: field.one})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; undefined (raises) for the zero polynomial."""
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exp: tuple[int, ...]):
        return self.terms.get(tuple(exp), self.field.zero)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        from .grammar import format_poly

        return f"Poly({format_poly(self)!r})"

    def _check_compatible(self, other: "Poly") -> None:
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
        if self.field != other.field:
            raise ValueError(f"fields differ: {self.field!r} vs {other.field!r}")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        F = self.field
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = F.add(terms.get(exp, F.zero), c)
            if F.is_zero(s):
                terms.pop(exp, None)
            else:
                terms[exp] = s
        return Poly(self.n, F, terms)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(self.n, F, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        F = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(terms.get(e, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.n, F, terms)

    def scale(self, c) -> "Poly":
        F = self.field
        if F.is_zero(c):
            return Poly.zero(self.n, F)
        return Poly(self.n, F, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.n, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point):
        """Exact evaluation at a point given as a length-n coefficient vector."""
        if len(point) != self.n:
            raise ValueError(f"point has length {len(point)}, expected {self.n}")
        F = self.field
        total = F.zero
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                for _ in range(e):
                    v = F.mul(v, x)
            total = F.add(total, v)
        return total

    def map_to_field(self, field) -> "Poly":
        """Reinterpret rational coefficients in another exact field."""
        if field == self.field:
            return self
        if self.field != QQ:
            raise ValueError("can only move polynomials out of the rational field")
        terms = {
            e: field.from_fraction(c.numerator, c.denominator)
            for e, c in self.terms.items()
        }
        return Poly(self.n, field, terms)


def diff_action(p: Poly, target: Poly) -> Poly:
    """Apply the differential operator ``p`` to the form ``target``.

    Plain differentiation, no factorial normalization: x_j acts as d/dX_j.
    The operator and the form must share the variable count and field; in
    prime-field mode the modulus must exceed the degree of ``target`` so that
    the falling factorials below stay invertible.
    """
    p._check_compatible(target)
    F = p.field
    if isinstance(F, PrimeField) and not target.is_zero():
        if F.p <= target.degree():
            raise ValueError(
                f"prime {F.p} must exceed deg F = {target.degree()} for the "
                "differentiation action to be faithful"
            )
    terms: dict = {}
    for op_exp, op_c in p.terms.items():
        for t_exp, t_c in target.terms.items():
            mult = 1
            for a, b in zip(op_exp, t_exp):
                if a > b:
                    mult = 0
                    break
                # falling factorial b * (b-1) * ... * (b-a+1)
                for r in range(a):
                    mult *= b - r
            if mult == 0:
                continue
            e = tuple(b - a for a, b in zip(op_exp, t_exp))
            c = F.mul(F.mul(op_c, t_c), F.from_int(mult))
            s = F.add(terms.get(e, F.zero), c)
            if F.is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
    return Poly(p.n, F, terms)


class LinearChange:
    """An invertible linear change of coordinates x_i -> sum_j m[i][j] x_j."""

    def __init__(self, matrix, field):
        self.n = len(matrix)
        self.field = field
        self.matrix = [list(row) for row in matrix]
        for row in self.matrix:
            if len(row) != self.n:
                raise ValueError("change-of-coordinates matrix must be square")
        from .linalg import ExactMatrix

        if field.is_zero(ExactMatrix(self.matrix, field).det()):
            raise ValueError("change-of-coordinates matrix is singular")

    @classmethod
    def identity(cls, n: int, field) -> "LinearChange":
        m = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls(m, field)

    def inverse(self) -> "LinearChange":
        from .linalg import ExactMatrix

        return LinearChange(ExactMatrix(self.matrix, self.field).inverse_entries(), self.field)

    def apply(self, p: Poly) -> Poly:
        """Substitute each variable of ``p`` by its image linear form."""
        if p.n != self.n:
            raise ValueError(f"variable counts differ: {p.n} vs {self.n}")
        if p.field != self.field:
            raise ValueError("field mismatch between change and polynomial")
        F = self.field
        images = [
            Poly(self.n, F, {
                tuple(1 if k == j else 0 for k in range(self.n)): self.matrix[i][j]
                for j in range(self.n)
                if not F.is_zero(self.matrix[i][j])
            })
            for i in range(self.n)
        ]
        result = Poly.zero(self.n, F)
        for exp, c in p.terms.items():
            term = Poly.constant(self.n, F, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result


def apply_change(g: LinearChange, p: Poly) -> Poly:
    return g.apply(p)


def random_linear_form(n: int, field: PrimeField, rng: random.Random) -> Poly:
    """A uniformly random nonzero linear form over a prime field.

    Deterministic given the RNG state; the all-zero draw is resampled.
    """
    if not isinstance(field, PrimeField):
        raise ValueError("random linear forms require a prime field")
    while True:
        coeffs = [field.rand(rng) for _ in range(n)]
        if any(coeffs):
            break
    terms = {
        tuple(1 if j == i else 0 for j in range(n)): c
        for i, c in enumerate(coeffs)
        if c
    }
    return Poly(n, field, terms)


def random_linear_change(n: int, field: PrimeField, rng: random.Random) -> LinearChange:
    """A uniformly random invertible change of coordinates (resampled until invertible)."""
    if not isinstance(field, PrimeField):
        raise ValueError("random coordinate changes require a prime field")
    from .linalg import ExactMatrix

    while True:
        m = [[field.rand(rng) for _ in range(n)] for _ in range(n)]
        if not field.is_zero(ExactMatrix(m, field).det()):
            return LinearChange(m, field)


def multi_factorial(exp: tuple[int, ...]) -> int:
    """Product of the factorials of the entries."""
    out = 1
    for e in exp:
        out *= factorial(e)
    return out
