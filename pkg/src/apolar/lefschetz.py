"""Weak and strong Lefschetz checks, Hessians, and snake-lemma bookkeeping.

The rank of multiplication by ell^k from [A]_i to [A]_{i+k} equals the rank
of the i-th catalecticant of the contracted dual form ell^k applied to F,
because that contraction presents the image algebra.  Genericity of ell is
handled Monte-Carlo style over a big prime field: one successful sample is a
certificate that the property holds (maximal rank is an open condition),
while uniform failure across seeded trials is reported as failure together
with the data needed to re-run the experiment.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .duality import (
    DualForm,
    HVector,
    catalecticant,
    contract,
    hilbert_function,
    monomials_of_degree,
    quotient_basis,
    span_dimension,
)
from .errors import InternalInconsistencyError
from .fields import PrimeField
from .grammar import format_poly
from .linalg import ExactMatrix
from .poly import Poly, diff_action, random_linear_form


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class DegreeRecord:
    """Rank bookkeeping for one multiplication map."""

    i: int
    k: int
    expected: int
    achieved: int

    @property
    def maximal(self) -> bool:
        return self.achieved == self.expected

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "k": self.k,
            "expected": self.expected,
            "achieved": self.achieved,
            "maximal": self.maximal,
        }


@dataclass
class WlpReport:
    h: HVector
    records: list[DegreeRecord]
    verdict: Verdict
    failing_degrees: tuple[int, ...]  # source degrees i of deficient maps
    dual_failing_degrees: tuple[int, ...]  # their mirrors d - i under duality
    trials_used: int
    seed: int
    field_description: str
    certificate_trial: int | None = None
    certificate_form: str | None = None

    def to_dict(self) -> dict:
        return {
            "h": list(self.h),
            "sperner": self.h.sperner,
            "socle_degree": self.h.socle_degree,
            "records": [r.to_dict() for r in self.records],
            "verdict": self.verdict.value,
            "failing_degrees": list(self.failing_degrees),
            "dual_failing_degrees": list(self.dual_failing_degrees),
            "trials_used": self.trials_used,
            "seed": self.seed,
            "field": self.field_description,
            "certificate_trial": self.certificate_trial,
            "certificate_form": self.certificate_form,
            "monte_carlo": "one maximal-rank sample certifies holds; uniform failure is probabilistic",
        }


@dataclass
class SlpReport:
    h: HVector
    records: list[DegreeRecord]  # the k = d - 2i diagonal
    verdict: Verdict
    failing_pairs: tuple[tuple[int, int], ...]  # (i, k) of deficient maps
    trials_used: int
    seed: int
    field_description: str
    all_pairs_checked: bool = True
    certificate_trial: int | None = None
    certificate_form: str | None = None

    def to_dict(self) -> dict:
        return {
            "h": list(self.h),
            "records": [r.to_dict() for r in self.records],
            "verdict": self.verdict.value,
            "failing_pairs": [list(p) for p in self.failing_pairs],
            "trials_used": self.trials_used,
            "seed": self.seed,
            "field": self.field_description,
            "all_pairs_checked": self.all_pairs_checked,
            "certificate_trial": self.certificate_trial,
            "certificate_form": self.certificate_form,
        }


def mult_map_rank(F: DualForm, ell: Poly, i: int, k: int) -> int:
    """Rank of multiplication by ell^k from [A]_i to [A]_{i+k}.

    Equals the rank of the i-th catalecticant of ell^k applied to F, with
    rank 0 when the contraction vanishes.
    """
    _require_linear(ell)
    if k < 0 or i < 0 or i + k > F.degree:
        raise ValueError(f"degrees out of range: i={i}, k={k}, d={F.degree}")
    if k == 0:
        return catalecticant(F, i).rank()
    G = diff_action(ell ** k, F.poly)
    if G.is_zero():
        return 0
    return catalecticant(DualForm(G), i).rank()


def _require_linear(ell: Poly) -> None:
    if ell.is_zero() or not ell.is_homogeneous() or ell.degree() != 1:
        raise ValueError("expected a nonzero linear form")


def _require_prime_field(F: DualForm, what: str) -> None:
    if not isinstance(F.field, PrimeField):
        raise ValueError(f"{what} samples generic forms and needs a prime field")


def _consecutive_ranks(F: DualForm, ell: Poly) -> list[int]:
    """achieved rank of x ell from [A]_i to [A]_{i+1} for i = 0..d-1."""
    d = F.degree
    B = contract(ell, F)
    if B is None:
        return [0] * d
    h_b = hilbert_function(B)
    return [h_b[i] if i <= B.degree else 0 for i in range(d)]


def is_wl_element(F: DualForm, ell: Poly) -> list[DegreeRecord]:
    """Per-degree ranks of multiplication by the given linear form."""
    _require_linear(ell)
    h = hilbert_function(F)
    achieved = _consecutive_ranks(F, ell)
    return [
        DegreeRecord(i, 1, min(h[i], h[i + 1]), achieved[i])
        for i in range(F.degree)
    ]


def _trial_seeds(seed: int, trials: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(63) for _ in range(trials)]


def wlp_check(F: DualForm, trials: int, seed: int) -> WlpReport:
    """Monte-Carlo weak Lefschetz check with a reproducibility certificate.

    Holds as soon as one sampled form has maximal rank at every degree
    simultaneously; otherwise the failure degrees are the union over trials
    of the deficient source degrees.
    """
    _require_prime_field(F, "wlp_check")
    if trials < 1:
        raise ValueError("need at least one trial")
    h = hilbert_function(F)
    d = F.degree
    expected = [min(h[i], h[i + 1]) for i in range(d)]
    best = [0] * d
    misses: set[int] = set()
    for t, ts in enumerate(_trial_seeds(seed, trials)):
        rng = random.Random(ts)
        ell = random_linear_form(F.n, F.field, rng)
        achieved = _consecutive_ranks(F, ell)
        if any(a > e for a, e in zip(achieved, expected)):
            raise InternalInconsistencyError("multiplication rank exceeded its bound")
        best = [max(a, b) for a, b in zip(best, achieved)]
        bad = [i for i in range(d) if achieved[i] < expected[i]]
        if not bad:
            records = [DegreeRecord(i, 1, expected[i], achieved[i]) for i in range(d)]
            return WlpReport(
                h=h,
                records=records,
                verdict=Verdict.HOLDS,
                failing_degrees=(),
                dual_failing_degrees=(),
                trials_used=t + 1,
                seed=seed,
                field_description=F.field.describe(),
                certificate_trial=t,
                certificate_form=format_poly(ell, var="x"),
            )
        misses.update(bad)
    records = [DegreeRecord(i, 1, expected[i], best[i]) for i in range(d)]
    failing = tuple(sorted(misses))
    dual = tuple(sorted({d - i for i in failing}))
    return WlpReport(
        h=h,
        records=records,
        verdict=Verdict.FAILS,
        failing_degrees=failing,
        dual_failing_degrees=dual,
        trials_used=trials,
        seed=seed,
        field_description=F.field.describe(),
    )


def slp_check(F: DualForm, trials: int, seed: int) -> SlpReport:
    """Monte-Carlo strong Lefschetz check.

    The reported records follow the k = d - 2i diagonal that already decides
    the property for a Gorenstein algebra, but every pair (i, k) with k >= 1
    and i + k <= d is verified directly per trial - cheap at this scale and
    independent of any reduction argument.
    """
    _require_prime_field(F, "slp_check")
    if trials < 1:
        raise ValueError("need at least one trial")
    h = hilbert_function(F)
    d = F.degree
    pairs = [(i, k) for k in range(1, d + 1) for i in range(0, d - k + 1)]
    diag = [(i, d - 2 * i) for i in range(d // 2 + 1)]
    best: dict[tuple[int, int], int] = {p: 0 for p in pairs}
    misses: set[tuple[int, int]] = set()
    for t, ts in enumerate(_trial_seeds(seed, trials)):
        rng = random.Random(ts)
        ell = random_linear_form(F.n, F.field, rng)
        achieved: dict[tuple[int, int], int] = {}
        for k in range(1, d + 1):
            G = diff_action(ell ** k, F.poly)
            if G.is_zero():
                for i in range(0, d - k + 1):
                    achieved[(i, k)] = 0
                continue
            Gd = DualForm(G)
            h_g = hilbert_function(Gd)
            for i in range(0, d - k + 1):
                achieved[(i, k)] = h_g[i] if i <= Gd.degree else 0
        if any(achieved[p] > min(h[p[0]], h[p[0] + p[1]]) for p in pairs):
            raise InternalInconsistencyError("multiplication rank exceeded its bound")
        bad = [p for p in pairs if achieved[p] < min(h[p[0]], h[p[0] + p[1]])]
        for p in pairs:
            best[p] = max(best[p], achieved[p])
        if not bad:
            records = [
                DegreeRecord(i, k, h[i], achieved[(i, k)] if k else h[i])
                for i, k in diag
            ]
            return SlpReport(
                h=h,
                records=records,
                verdict=Verdict.HOLDS,
                failing_pairs=(),
                trials_used=t + 1,
                seed=seed,
                field_description=F.field.describe(),
                certificate_trial=t,
                certificate_form=format_poly(ell, var="x"),
            )
        misses.update(bad)
    records = [
        DegreeRecord(i, k, h[i], best[(i, k)] if k else h[i]) for i, k in diag
    ]
    return SlpReport(
        h=h,
        records=records,
        verdict=Verdict.FAILS,
        failing_pairs=tuple(sorted(misses)),
        trials_used=trials,
        seed=seed,
        field_description=F.field.describe(),
    )


# -- Hessians ----------------------------------------------------------------


@dataclass
class HessianMatrix:
    """Square matrix of forms over a chosen monomial basis of [A]_i."""

    basis: list[tuple[int, ...]]
    entries: list[list[Poly]]

    @property
    def size(self) -> int:
        return len(self.basis)


def hessian(F: DualForm, i: int) -> HessianMatrix:
    """The i-th Hessian of F over the greedy quotient basis of [A]_i.

    Entry (u, v) is (m_u m_v) applied to F, a form of degree d - 2i in the
    dual variables.
    """
    if not 0 <= 2 * i <= F.degree:
        raise ValueError(f"hessian index {i} outside 0..{F.degree // 2}")
    basis = quotient_basis(F, i)
    field = F.field
    size = len(basis)
    entries: list[list[Poly]] = [[None] * size for _ in range(size)]  # type: ignore
    for a in range(size):
        for b in range(a, size):
            prod = tuple(x + y for x, y in zip(basis[a], basis[b]))
            value = diff_action(Poly.monomial(F.n, field, prod), F.poly)
            entries[a][b] = value
            entries[b][a] = value
    return HessianMatrix(basis=basis, entries=entries)


def hessian_det_at(F: DualForm, i: int, point) -> object:
    """Exact determinant of the i-th Hessian evaluated at a point."""
    if len(point) != F.n:
        raise ValueError(f"point has length {len(point)}, expected {F.n}")
    H = hessian(F, i)
    field = F.field
    m = [[H.entries[a][b].evaluate(point) for b in range(H.size)] for a in range(H.size)]
    return ExactMatrix(m, field).det()


def hessian_rank_at(F: DualForm, i: int, point) -> int:
    """Exact rank of the i-th Hessian evaluated at a point."""
    H = hessian(F, i)
    field = F.field
    m = [[H.entries[a][b].evaluate(point) for b in range(H.size)] for a in range(H.size)]
    return ExactMatrix(m, field).rank()


# -- snake-lemma ledger -------------------------------------------------------


@dataclass(frozen=True)
class SnakeRecord:
    """Ranks and dimensions of the three vertical maps at one degree."""

    i: int
    dims_b: tuple[int, int]
    dims_a: tuple[int, int]
    dims_c: tuple[int, int]
    rank_b: int
    rank_a: int
    rank_c: int

    def _flags(self, rank, dims) -> tuple[bool, bool]:
        return rank == dims[0], rank == dims[1]

    @property
    def consistent(self) -> bool:
        b_inj, b_surj = self._flags(self.rank_b, self.dims_b)
        a_inj, a_surj = self._flags(self.rank_a, self.dims_a)
        c_inj, c_surj = self._flags(self.rank_c, self.dims_c)
        if b_inj and c_inj and not a_inj:
            return False
        if b_surj and c_surj and not a_surj:
            return False
        return True

    def to_dict(self) -> dict:
        return {
            "i": self.i,
            "B": {"dims": list(self.dims_b), "rank": self.rank_b},
            "A": {"dims": list(self.dims_a), "rank": self.rank_a},
            "C": {"dims": list(self.dims_c), "rank": self.rank_c},
            "consistent": self.consistent,
        }


@dataclass
class SnakeLedger:
    records: list[SnakeRecord]
    consistent: bool

    def to_dict(self) -> dict:
        return {
            "records": [r.to_dict() for r in self.records],
            "consistent": self.consistent,
        }


def snake_consistency(F: DualForm, g: Poly, ell: Poly) -> SnakeLedger:
    """Rank ledger for B = A/(0:g), A, C = A/(g) under multiplication by ell.

    For each degree i the ledger records dimensions and the rank of the three
    multiplication maps, and checks the snake-lemma implication: flanking
    maps both injective (resp. surjective) force the middle one to be so.
    """
    _require_linear(ell)
    if g.is_zero():
        raise ValueError("expected a nonzero form g")
    if not g.is_homogeneous():
        raise ValueError("g must be homogeneous")
    s = 0 if not g.terms else g.degree()
    d = F.degree
    if s > d:
        raise ValueError(f"degree of g exceeds socle degree {d}")
    h_a = hilbert_function(F)
    B = contract(g, F)
    h_b: tuple[int, ...] = tuple(hilbert_function(B)) if B is not None else ()

    def dim_a(j: int) -> int:
        return h_a[j] if 0 <= j <= d else 0

    def dim_b(j: int) -> int:
        return h_b[j] if 0 <= j < len(h_b) else 0

    field = F.field
    mons = {j: monomials_of_degree(F.n, j) for j in range(d + 2)}
    records = []
    for i in range(d + 1):
        b_dims = (dim_b(i - s), dim_b(i + 1 - s))
        a_dims = (dim_a(i), dim_a(i + 1))
        c_dims = (a_dims[0] - b_dims[0], a_dims[1] - b_dims[1])
        # left map: x ell on the Gorenstein quotient presented by g o F
        if B is None or i - s < 0 or i + 1 - s > B.degree:
            rank_b = 0
        else:
            rank_b = mult_map_rank(B, ell, i - s, 1)
        rank_a = mult_map_rank(F, ell, i, 1) if i + 1 <= d else 0
        # right map: image of x ell inside [A/(g)]_{i+1}, computed as a span
        # dimension gain over the submodule g * [A]_{i+1-s}
        if i + 1 > d:
            rank_c = 0
        else:
            g_ops = (
                [g * Poly.monomial(F.n, field, m) for m in mons[i + 1 - s]]
                if i + 1 - s >= 0
                else []
            )
            ell_ops = [ell * Poly.monomial(F.n, field, m) for m in mons[i]]
            denom = span_dimension(F, g_ops, i + 1)
            rank_c = span_dimension(F, ell_ops + g_ops, i + 1) - denom
        records.append(
            SnakeRecord(
                i=i,
                dims_b=b_dims,
                dims_a=a_dims,
                dims_c=c_dims,
                rank_b=rank_b,
                rank_a=rank_a,
                rank_c=rank_c,
            )
        )
    return SnakeLedger(records=records, consistent=all(r.consistent for r in records))
