"""Concrete catalog: quadric-web orbits, their classifier, and sharp examples.

The catalog covers the twelve four-dimensional spaces of quadrics in four
variables that occur (up to coordinate change) as degree-two parts of the
relevant ideals, with their Hilbert functions; a conjugation-invariant
classifier; degree-two generic initial ideals under lex; inverse-system
samplers; and the trivial-extension dual forms whose algebras have h-vector
(1, d+2, ..., d+2, 1) and fail the weak Lefschetz property.
"""

from __future__ import annotations

import random
from enum import Enum
from itertools import permutations
from math import comb

from .duality import DualForm, hilbert_function
from .errors import HypothesisViolationError, InternalInconsistencyError
from .fields import DEFAULT_PRIME, QQ, PrimeField
from .grammar import parse_poly
from .linalg import ExactMatrix
from .poly import (
    LinearChange,
    Poly,
    monomials_of_degree,
    multi_factorial,
    random_linear_change,
)


class OrbitLabel(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII_X3X4 = "VIII_x3x4"
    VIII_X3SQ_X2X4 = "VIII_x3sq_x2x4"
    VIII_X3SQ = "VIII_x3sq"
    IX = "IX"
    X = "X"
    UNKNOWN = "Unknown"

    @classmethod
    def from_text(cls, text: str) -> "OrbitLabel":
        for label in cls:
            if label.value.lower() == text.lower():
                return label
        raise ValueError(f"unknown orbit label {text!r}")


CATALOG_LABELS = tuple(l for l in OrbitLabel if l is not OrbitLabel.UNKNOWN)

_REPRESENTATIVES: dict[OrbitLabel, tuple[str, str, str, str]] = {
    OrbitLabel.I: ("x1*x3", "x1*x4", "x2*x3", "x2*x4"),
    OrbitLabel.II: ("x1^2", "x2^2", "x3^2", "x1*x2 + x1*x3 + x2*x3"),
    OrbitLabel.III: ("x1^2", "x2^2", "x3^2", "x1*x3 + x2*x3"),
    OrbitLabel.IV: ("x1^2", "x1*x2", "x1*x3 - x2^2", "x3^2"),
    OrbitLabel.V: ("x1^2", "x1*x2", "x1*x3 - x2^2", "x2*x3"),
    OrbitLabel.VI: ("x1^2", "x1*x3", "x2^2", "x2*x3"),
    OrbitLabel.VII: ("x1^2", "x1*x2", "x1*x3", "x2*x3"),
    OrbitLabel.VIII_X3X4: ("x1^2", "x1*x2", "x2^2", "x3*x4"),
    OrbitLabel.VIII_X3SQ_X2X4: ("x1^2", "x1*x2", "x2^2", "x3^2 + x2*x4"),
    OrbitLabel.VIII_X3SQ: ("x1^2", "x1*x2", "x2^2", "x3^2"),
    OrbitLabel.IX: ("x1^2", "x1*x2", "x2^2", "x1*x4 - x2*x3"),
    OrbitLabel.X: ("x1^2", "x1*x2", "x2^2", "x1*x3"),
}

#: The three possible Hilbert functions of the quadric ideals, degrees 0..5.
HF_FLAT = (1, 4, 6, 6, 6, 6)
HF_SLOW = (1, 4, 6, 7, 8, 9)
HF_FAST = (1, 4, 6, 8, 10, 12)

EXPECTED_WEB_HF: dict[OrbitLabel, tuple[int, ...]] = {
    OrbitLabel.I: HF_FAST,
    OrbitLabel.II: HF_FLAT,
    OrbitLabel.III: HF_FLAT,
    OrbitLabel.IV: HF_FLAT,
    OrbitLabel.V: HF_SLOW,
    OrbitLabel.VI: HF_SLOW,
    OrbitLabel.VII: HF_FAST,
    OrbitLabel.VIII_X3X4: HF_FLAT,
    OrbitLabel.VIII_X3SQ_X2X4: HF_FLAT,
    OrbitLabel.VIII_X3SQ: HF_FLAT,
    OrbitLabel.IX: HF_FAST,
    OrbitLabel.X: HF_FAST,
}

#: Degree-2 gin outcomes: the generic pivot set and the special one.
GENERIC_GIN2 = ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1))
SPECIAL_GIN2 = ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (0, 2, 0, 0))


class QuadricWeb:
    """A four-dimensional space of quadrics in four variables."""

    def __init__(self, quadrics):
        quadrics = list(quadrics)
        if len(quadrics) != 4:
            raise ValueError("a quadric web needs exactly four generators")
        field = quadrics[0].field
        for q in quadrics:
            if q.n != 4:
                raise ValueError("web quadrics must live in four variables")
            if q.field != field:
                raise ValueError("web quadrics must share one field")
            if q.is_zero() or not q.is_homogeneous() or q.degree() != 2:
                raise ValueError("web generators must be nonzero quadrics")
        self.quadrics = quadrics
        self.field = field
        if self.coefficient_matrix().rank() != 4:
            raise ValueError("web quadrics are linearly dependent")

    def coefficient_matrix(self) -> ExactMatrix:
        mons = monomials_of_degree(4, 2)
        idx = {m: j for j, m in enumerate(mons)}
        field = self.field
        rows = []
        for q in self.quadrics:
            row = [field.zero] * len(mons)
            for e, c in q.terms.items():
                row[idx[e]] = c
            rows.append(row)
        return ExactMatrix(rows, field)

    def transformed(self, change: LinearChange) -> "QuadricWeb":
        return QuadricWeb([change.apply(q) for q in self.quadrics])

    def map_to_field(self, field) -> "QuadricWeb":
        return QuadricWeb([q.map_to_field(field) for q in self.quadrics])

    def __repr__(self):
        return f"QuadricWeb({self.quadrics!r})"


def orbit_representative(label: OrbitLabel, field=QQ) -> QuadricWeb:
    """The verbatim generator set of one catalog orbit."""
    if label is OrbitLabel.UNKNOWN:
        raise ValueError("no representative for the Unknown label")
    return QuadricWeb([parse_poly(t, 4, field) for t in _REPRESENTATIVES[label]])


def quadric_ideal_hf(web: QuadricWeb, up_to: int) -> tuple[int, ...]:
    """Hilbert function of the quotient by the web ideal, degrees 0..up_to."""
    if up_to < 2:
        raise ValueError("need up_to >= 2")
    field = web.field
    out = [1, 4]
    for i in range(2, up_to + 1):
        mons = monomials_of_degree(4, i)
        idx = {m: j for j, m in enumerate(mons)}
        rows = []
        for q in web.quadrics:
            for m in monomials_of_degree(4, i - 2):
                prod = q * Poly.monomial(4, field, m)
                row = [field.zero] * len(mons)
                for e, c in prod.terms.items():
                    row[idx[e]] = c
                rows.append(row)
        out.append(comb(i + 3, 3) - ExactMatrix(rows, field).rank())
    return tuple(out)


def gin2(web: QuadricWeb, trials: int, seed: int) -> tuple[tuple[int, ...], ...]:
    """Degree-2 part of the lex generic initial ideal as a pivot monomial set.

    Per trial, a random coordinate change is applied, the four transformed
    quadrics are row-reduced against the lex-descending degree-2 monomial
    columns, and the pivot columns are read off.  The result is the
    lex-greatest outcome over trials (the one with the smallest column index
    tuple), which is the generic value with overwhelming probability.
    """
    if not isinstance(web.field, PrimeField):
        raise ValueError("gin2 samples random coordinate changes and needs a prime field")
    if trials < 1:
        raise ValueError("need at least one trial")
    field = web.field
    master = random.Random(seed)
    best: tuple[int, ...] | None = None
    for _ in range(trials):
        rng = random.Random(master.getrandbits(63))
        g = random_linear_change(4, field, rng)
        pivots = web.transformed(g).coefficient_matrix().pivot_columns()
        if len(pivots) < 4:
            raise InternalInconsistencyError("independent web lost rank under a coordinate change")
        tup = tuple(pivots)
        if best is None or tup < best:
            best = tup
    mons = monomials_of_degree(4, 2)
    return tuple(mons[c] for c in best)


# -- classifier internals ------------------------------------------------------

def _symmetric_matrix(q: Poly, n: int):
    """Symmetric matrix of a quadric (off-diagonal entries are halves)."""
    field = q.field
    half = field.inv(field.from_int(2))
    m = [[field.zero] * n for _ in range(n)]
    for e, c in q.terms.items():
        support = [i for i, x in enumerate(e) if x]
        if len(support) == 1:
            i = support[0]
            m[i][i] = c
        else:
            i, j = support
            m[i][j] = m[j][i] = field.mul(c, half)
    return m


def _common_kernel(web: QuadricWeb) -> list[list]:
    stacked = []
    for q in web.quadrics:
        stacked.extend(_symmetric_matrix(q, 4))
    return ExactMatrix(stacked, web.field).kernel_basis()


def _reduce_to_three_variables(web: QuadricWeb, kernel_vec) -> list[Poly]:
    """Change coordinates so the common kernel is the last variable; drop it."""
    field = web.field
    pivot = next(i for i, x in enumerate(kernel_vec) if not field.is_zero(x))
    cols = [[field.one if r == j else field.zero for r in range(4)]
            for j in range(4) if j != pivot][:3]
    cols.append(list(kernel_vec))
    matrix = [[cols[j][i] for j in range(4)] for i in range(4)]
    change = LinearChange(matrix, field)
    reduced = []
    for q in web.quadrics:
        t = change.apply(q)
        terms = {}
        for e, c in t.terms.items():
            if e[3] != 0:
                raise InternalInconsistencyError("kernel reduction left a trailing variable")
            terms[e[:3]] = c
        reduced.append(Poly(3, field, terms))
    return reduced


def _dual_pencil(reduced: list[Poly]):
    """Orthogonal complement of a three-variable web inside the dual quadrics.

    Returns the two symmetric 3x3 matrices spanning it, or None when the
    complement does not have dimension two.
    """
    field = reduced[0].field
    mons = monomials_of_degree(3, 2)
    rows = []
    for q in reduced:
        rows.append([
            field.mul(q.terms.get(w, field.zero), field.from_int(multi_factorial(w)))
            for w in mons
        ])
    kernel = ExactMatrix(rows, field).kernel_basis()
    if len(kernel) != 2:
        return None
    out = []
    for v in kernel:
        terms = {w: c for w, c in zip(mons, v) if not field.is_zero(c)}
        out.append(_symmetric_matrix(Poly(3, field, terms), 3))
    return out


def _poly_det(entries, n: int, field) -> Poly:
    """Leibniz determinant of a small matrix of polynomials."""
    size = len(entries)
    total = Poly.zero(n, field)
    for perm in permutations(range(size)):
        sign = 1
        seen = list(perm)
        for i in range(size):
            for j in range(i + 1, size):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Poly.constant(n, field, field.one if sign > 0 else field.neg(field.one))
        for i in range(size):
            term = term * entries[i][perm[i]]
        total = total + term
    return total


def _pencil_form(m1, m2, field) -> list[list[Poly]]:
    """Matrix with binary-form entries alpha*m1 + beta*m2."""
    size = len(m1)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            terms = {}
            if not field.is_zero(m1[i][j]):
                terms[(1, 0)] = m1[i][j]
            if not field.is_zero(m2[i][j]):
                terms[(0, 1)] = m2[i][j]
            row.append(Poly(2, field, terms))
        out.append(row)
    return out


# univariate helpers over F_p; coefficient lists are low-degree first

def _utrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _uderiv(c, p):
    return _utrim([(j * c[j]) % p for j in range(1, len(c))])


def _umonic(c, p):
    if not c:
        return c
    inv = pow(c[-1], p - 2, p)
    return [(x * inv) % p for x in c]


def _udivmod(a, b, p):
    a = a[:]
    out = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        out[shift] = f
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - f * b[j]) % p
        _utrim(a)
        if not a:
            break
    return _utrim(out), a


def _ugcd(a, b, p):
    a, b = _utrim(a[:]), _utrim(b[:])
    while b:
        a, b = b, _udivmod(a, b, p)[1]
    return _umonic(a, p)


def _yun_signature(c, p) -> tuple[int, ...]:
    """Multiplicity signature of a squarefree decomposition f = prod a_j^j.

    Entry j-1 is the degree of a_j.  Valid since p far exceeds the degree.
    """
    f = _umonic(_utrim(c[:]), p)
    degree = len(f) - 1
    sig = [0] * degree
    d = _uderiv(f, p)
    a = _ugcd(f, d, p)
    b = _udivmod(f, a, p)[0]
    cpart = _udivmod(d, a, p)[0]
    j = 1
    while len(b) > 1:
        db = _uderiv(b, p)
        diff = _utrim([
            ((cpart[k] if k < len(cpart) else 0) - (db[k] if k < len(db) else 0)) % p
            for k in range(max(len(cpart), len(db), 1))
        ])
        aj = _ugcd(b, diff, p)
        sig[j - 1] += len(aj) - 1
        b = _udivmod(b, aj, p)[0]
        cpart = _udivmod(diff, aj, p)[0]
        j += 1
        if j > degree + 1:
            raise InternalInconsistencyError("squarefree decomposition failed to terminate")
    return tuple(sig)


def _binary_signature(form: Poly, rng: random.Random) -> tuple[int, ...] | None:
    """Squarefree signature of a binary form, or None for the zero form.

    A random coordinate change moves all roots away from infinity before
    dehomogenizing, so the signature is that of the projective root divisor.
    """
    if form.is_zero():
        return None
    field = form.field
    p = field.p
    e = form.degree()
    for _ in range(8):
        g = random_linear_change(2, field, rng)
        t = g.apply(form)
        coeffs = [t.terms.get((e - j, j), 0) for j in range(e + 1)]
        univ = coeffs[::-1]  # coefficient of beta^j becomes coefficient of t^(e-j)
        if univ[-1] == 0:
            continue
        return _yun_signature(univ, p)
    raise InternalInconsistencyError("failed to dehomogenize a binary form")


def _rank_one_locus_degree(pencil, field, rng: random.Random) -> int:
    """Number of distinct rank-<=1 members of a pencil of symmetric matrices.

    Computed as the degree of the squarefree part of the gcd of all 2x2
    minors along the pencil, after a shared random basis change keeps common
    roots off infinity.
    """
    p = field.p
    for _ in range(8):
        g = random_linear_change(2, field, rng)
        entries = _pencil_form(*pencil, field)
        size = len(entries)
        gcd_poly: list[int] | None = None
        degenerate = False
        for r1 in range(size):
            for r2 in range(r1 + 1, size):
                for c1 in range(size):
                    for c2 in range(c1 + 1, size):
                        minor = (
                            entries[r1][c1] * entries[r2][c2]
                            - entries[r1][c2] * entries[r2][c1]
                        )
                        if minor.is_zero():
                            continue
                        t = g.apply(minor)
                        univ = _utrim([t.terms.get((2 - j, j), 0) for j in range(3)][::-1])
                        if len(univ) - 1 < 2:
                            # the change sent a root of this minor to infinity
                            degenerate = True
                            break
                        gcd_poly = univ if gcd_poly is None else _ugcd(gcd_poly, univ, p)
                    if degenerate:
                        break
                if degenerate:
                    break
            if degenerate:
                break
        if degenerate:
            continue
        if gcd_poly is None:
            raise InternalInconsistencyError("pencil of quadrics is entirely rank one")
        gcd_poly = _utrim(gcd_poly[:])
        if len(gcd_poly) - 1 == 0:
            return 0
        repeated = _ugcd(gcd_poly, _uderiv(gcd_poly, p), p)
        return (len(gcd_poly) - 1) - (len(repeated) - 1)
    raise InternalInconsistencyError("failed to normalize the rank-one locus")


def _quartic_signature(web: QuadricWeb, rng: random.Random) -> tuple[int, ...] | None:
    """Squarefree signature of the determinant along a random member pencil."""
    field = web.field
    for _ in range(8):
        ms = []
        for _ in range(2):
            coeffs = [field.rand(rng) for _ in range(4)]
            member = Poly.zero(4, field)
            for c, q in zip(coeffs, web.quadrics):
                member = member + q.scale(c)
            if member.is_zero():
                break
            ms.append(_symmetric_matrix(member, 4))
        if len(ms) < 2:
            continue
        det = _poly_det(_pencil_form(ms[0], ms[1], field), 2, field)
        sig = _binary_signature(det, rng)
        if sig is not None:
            return sig
    return None


def classify_web_report(web: QuadricWeb, seed: int) -> tuple[OrbitLabel, dict]:
    """Orbit label of a quadric web together with the invariant evidence.

    Decision tree over computable invariants: the Hilbert function of the web
    ideal up to degree 5; the common kernel of the member matrices; the
    squarefree signature of the determinant along pencils (of the web itself
    in the four-variable branch, of the canonical dual pencil in the
    three-variable branch); and the rank-one locus of the dual pencil.  Webs
    outside the catalog orbits may come back Unknown.
    """
    if not isinstance(web.field, PrimeField):
        raise ValueError("classification runs over a prime field")
    master = random.Random(seed)
    gin_seed = master.getrandbits(63)
    rng = random.Random(master.getrandbits(63))

    pivots = gin2(web, trials=3, seed=gin_seed)
    if pivots == GENERIC_GIN2:
        raise HypothesisViolationError(
            "degree-2 generic initial ideal is the generic set; "
            "the classifier needs the special set"
        )
    if pivots != SPECIAL_GIN2:
        raise InternalInconsistencyError(f"gin2 returned a non-Borel-fixed set {pivots}")

    hf = quadric_ideal_hf(web, 5)
    kernel = _common_kernel(web)
    evidence: dict = {
        "gin2": "special",
        "web_hf": list(hf),
        "common_kernel_dim": len(kernel),
        "pencil_det_signature": None,
        "dual_pencil_det_signature": None,
        "rank_one_points": None,
    }

    def done(label: OrbitLabel) -> tuple[OrbitLabel, dict]:
        evidence["label"] = label.value
        return label, evidence

    if hf not in (HF_FAST, HF_SLOW, HF_FLAT) or len(kernel) > 1:
        return done(OrbitLabel.UNKNOWN)

    if not kernel:
        sig = _quartic_signature(web, rng)
        evidence["pencil_det_signature"] = list(sig) if sig else None
        table = {
            HF_FAST: {(0, 2, 0, 0): OrbitLabel.I, (0, 0, 0, 1): OrbitLabel.IX},
            HF_SLOW: {},
            HF_FLAT: {
                (2, 1, 0, 0): OrbitLabel.VIII_X3X4,
                (1, 0, 1, 0): OrbitLabel.VIII_X3SQ_X2X4,
            },
        }[hf]
        return done(table.get(sig, OrbitLabel.UNKNOWN))

    pencil = _dual_pencil(_reduce_to_three_variables(web, kernel[0]))
    if pencil is None:
        return done(OrbitLabel.UNKNOWN)
    det = _poly_det(_pencil_form(*pencil, web.field), 2, web.field)
    if det.is_zero():
        evidence["dual_pencil_det_signature"] = "zero"
        r1 = _rank_one_locus_degree(pencil, web.field, rng)
        evidence["rank_one_points"] = r1
        if hf == HF_FAST:
            table = {2: OrbitLabel.VII, 1: OrbitLabel.X}
            return done(table.get(r1, OrbitLabel.UNKNOWN))
        if hf == HF_FLAT and r1 == 0:
            return done(OrbitLabel.VIII_X3SQ)
        return done(OrbitLabel.UNKNOWN)
    sig = _binary_signature(det, rng)
    evidence["dual_pencil_det_signature"] = list(sig)
    table = {
        HF_FLAT: {
            (3, 0, 0): OrbitLabel.II,
            (1, 1, 0): OrbitLabel.III,
            (0, 0, 1): OrbitLabel.IV,
        },
        HF_SLOW: {(0, 0, 1): OrbitLabel.V, (1, 1, 0): OrbitLabel.VI},
        HF_FAST: {},
    }[hf]
    return done(table.get(sig, OrbitLabel.UNKNOWN))


def classify_web(web: QuadricWeb, seed: int) -> OrbitLabel:
    """Conjugation-invariant orbit label of a quadric web; see classify_web_report."""
    return classify_web_report(web, seed)[0]


# -- inverse systems and sharp examples ---------------------------------------


def inverse_system_sample(web: QuadricWeb, degree: int, seed: int) -> DualForm:
    """A random form of the given degree annihilated by every web quadric.

    Uniformly random coordinates over the kernel of the stacked contraction
    maps; deterministic given the seed.
    """
    if degree < 2:
        raise ValueError("need degree >= 2")
    if not isinstance(web.field, PrimeField):
        raise ValueError("inverse-system sampling needs a prime field")
    field = web.field
    cols = monomials_of_degree(4, degree)
    out_mons = monomials_of_degree(4, degree - 2)
    rows = []
    for q in web.quadrics:
        for w in out_mons:
            row = []
            for v in cols:
                total = field.zero
                for u, c in q.terms.items():
                    if all(wi + ui == vi for wi, ui, vi in zip(w, u, v)):
                        mult = 1
                        for a, b in zip(u, v):
                            for r in range(a):
                                mult *= b - r
                        total = field.add(total, field.mul(c, field.from_int(mult)))
                row.append(total)
            rows.append(row)
    kernel = ExactMatrix(rows, field).kernel_basis()
    if not kernel:
        raise ValueError(f"the web has no inverse system in degree {degree}")
    rng = random.Random(seed)
    while True:
        combo = [field.rand(rng) for _ in kernel]
        if any(combo):
            break
    terms: dict = {}
    for c, vec in zip(combo, kernel):
        if field.is_zero(c):
            continue
        for m, x in zip(cols, vec):
            if field.is_zero(x):
                continue
            s = field.add(terms.get(m, field.zero), field.mul(c, x))
            if field.is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
    return DualForm(Poly(4, field, terms))


_QUINTIC_TAIL = (
    ((0, 0, 5, 0), 4, 120),
    ((0, 0, 4, 1), 5, 24),
    ((0, 0, 3, 2), 6, 12),
    ((0, 0, 2, 3), 7, 12),
    ((0, 0, 1, 4), 8, 24),
    ((0, 0, 0, 5), 9, 120),
)

_QUINTIC_TABLES: dict[OrbitLabel, tuple] = {
    OrbitLabel.V: (
        ((0, 2, 0, 3), 1, 12),
        ((1, 0, 1, 3), 1, 6),
        ((1, 0, 0, 4), 2, 24),
        ((0, 1, 0, 4), 3, 24),
    ) + _QUINTIC_TAIL,
    OrbitLabel.VI: (
        ((1, 1, 0, 3), 1, 6),
        ((1, 0, 0, 4), 2, 24),
        ((0, 1, 0, 4), 3, 24),
    ) + _QUINTIC_TAIL,
}


def parametric_quintic(label: OrbitLabel, coeffs, field=QQ) -> DualForm:
    """The normalized 9-parameter quintic annihilated by web V or VI.

    Coefficients are written with the factorial denominators that make the
    pairing matrices against monomial bases come out as the bare parameters.
    """
    if label not in _QUINTIC_TABLES:
        raise ValueError("parametric quintics exist for labels V and VI only")
    coeffs = list(coeffs)
    if len(coeffs) != 9:
        raise ValueError("need nine coefficients")
    terms: dict = {}
    for exp, idx, den in _QUINTIC_TABLES[label]:
        c = field.mul(field.from_int(coeffs[idx - 1]), field.from_fraction(1, den))
        if not field.is_zero(c):
            terms[exp] = field.add(terms.get(exp, field.zero), c)
    poly = Poly(4, field, terms)
    if poly.is_zero():
        raise ValueError("all coefficients vanish")
    return DualForm(poly)


def parametric_family_form(label: OrbitLabel, degree: int, coeffs, field=QQ) -> DualForm:
    """General inverse-system element of odd degree for webs VII, IX or X.

    The basis elements are normalized by dividing each monomial by the
    product of factorials of its exponents, so pairings against monomial
    operator bases produce the bare parameters; web IX ties two monomials
    per middle basis element.  Takes 2*degree + 2 coefficients.
    """
    if degree < 5 or degree % 2 == 0:
        raise ValueError("need an odd degree >= 5")
    d = degree
    elements: list[list[tuple[int, ...]]]
    if label is OrbitLabel.VII:
        elements = [[(1, 0, 0, d - 1)]]
        elements += [[(0, d + 1 - j, 0, j - 1)] for j in range(1, d + 1)]
        elements += [[(0, 0, d + 1 - j, j - 1)] for j in range(1, d + 1)]
        elements.append([(0, 0, 0, d)])
    elif label is OrbitLabel.IX:
        elements = [[(1, 0, d - 1, 0)]]
        elements += [[(1, 0, d - 1 - j, j), (0, 1, d - j, j - 1)] for j in range(1, d)]
        elements.append([(0, 1, 0, d - 1)])
        elements += [[(0, 0, d - j, j)] for j in range(0, d + 1)]
    elif label is OrbitLabel.X:
        elements = [[(1, 0, 0, d - 1)]]
        elements += [[(0, 1, d - j, j - 1)] for j in range(1, d + 1)]
        elements += [[(0, 0, d + 1 - j, j - 1)] for j in range(1, d + 2)]
    else:
        raise ValueError("parametric families exist for labels VII, IX and X only")
    coeffs = list(coeffs)
    if len(coeffs) != 2 * d + 2:
        raise ValueError(f"need {2 * d + 2} coefficients for degree {d}")
    terms: dict = {}
    for c, elem in zip(coeffs, elements):
        cf = field.from_int(c) if isinstance(c, int) else c
        for e in elem:
            part = field.mul(cf, field.from_fraction(1, multi_factorial(e)))
            s = field.add(terms.get(e, field.zero), part)
            if field.is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
    poly = Poly(4, field, terms)
    if poly.is_zero():
        raise ValueError("all coefficients vanish")
    return DualForm(poly)


def perazzo_dual_form(d: int, field=QQ) -> DualForm:
    """Trivial-extension dual form of socle degree d in d+2 variables.

    The algebra has h-vector (1, d+2, ..., d+2, 1) and fails the weak
    Lefschetz property for every d >= 3; the middle multiplication maps have
    rank exactly d+1 for a general linear form.
    """
    if d < 3:
        raise ValueError("need socle degree d >= 3")
    n = d + 2
    terms = {}
    for i in range(1, d + 1):
        exp = [0] * n
        exp[i - 1] = 1
        exp[d] = d - i
        exp[d + 1] = i - 1
        terms[tuple(exp)] = field.one
    return DualForm(Poly(n, field, terms))


#: Stored six-variable cubic with h-vector (1, 6, 6, 1) failing the WLP;
#: a trivial-extension block plus an independent cube.
_CUBIC_16661_TEXT = "X1*X4^2 + X2*X4*X5 + X3*X5^2 + X6^3"


def exceptional_hvector_examples(verify: bool = True, trials: int = 5, seed: int = 20240901):
    """The three h-vectors that do not force the WLP, with witnesses.

    Returns (HVector, DualForm) pairs over the rationals.  With
    ``verify=True`` each entry is re-checked on load: the Hilbert function
    must match exactly and a seeded weak Lefschetz check over the default
    prime field must fail.
    """
    from .lefschetz import Verdict, wlp_check

    entries = [
        ((1, 5, 5, 1), perazzo_dual_form(3)),
        ((1, 6, 6, 1), DualForm(parse_poly(_CUBIC_16661_TEXT, 6, QQ))),
        ((1, 6, 6, 6, 1), perazzo_dual_form(4)),
    ]
    out = []
    for expected, form in entries:
        h = hilbert_function(form)
        if tuple(h) != expected:
            raise InternalInconsistencyError(
                f"catalog form for {expected} has Hilbert function {tuple(h)}"
            )
        if verify:
            modular = DualForm(form.poly.map_to_field(PrimeField(DEFAULT_PRIME)))
            report = wlp_check(modular, trials=trials, seed=seed)
            if report.verdict is not Verdict.FAILS:
                raise InternalInconsistencyError(
                    f"catalog form for {expected} did not fail the WLP"
                )
        out.append((h, form))
    return out
