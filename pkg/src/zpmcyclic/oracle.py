"""Brute-force verification: spans, inner products and codeword scans.

Nothing here consults the closed-form criteria of :mod:`zpmcyclic.codes`
except :func:`crosscheck`, whose whole job is to compare the two.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import BudgetExceeded, LengthMismatch, ZeroCode
from .ring_poly import Poly, RingParams, quotient_reduce

DEFAULT_CODEWORD_BUDGET = 10**7
DEFAULT_PROFILE_BUDGET = 10**6

Vector = tuple[int, ...]


def inner_product(u: Sequence[int], v: Sequence[int], ring: RingParams) -> int:
    if len(u) != len(v):
        raise LengthMismatch(f"{len(u)} != {len(v)}")
    return sum(a * b for a, b in zip(u, v)) % ring.q


def to_vector(f: Poly, n: int) -> Vector:
    g = quotient_reduce(f, n)
    return tuple(g[i] for i in range(n))


def cyclic_shifts(f: Poly, n: int) -> list[Vector]:
    v = to_vector(f, n)
    return [v[n - s :] + v[: n - s] for s in range(n)]


@dataclass(frozen=True)
class SpanBasis:
    """Row-triangular (Howell-style) basis of a submodule of Z_{p^m}^n.

    Each row's pivot is p^v at a column strictly right of the previous row's
    pivot; entries above a pivot are reduced below that pivot.
    """

    ring: RingParams
    n: int
    rows: tuple[Vector, ...]
    pivots: tuple[tuple[int, int], ...]  # (column, valuation)

    @property
    def cardinality(self) -> int:
        m = self.ring.m
        return self.ring.p ** sum(m - v for _, v in self.pivots)

    def contains(self, word: Sequence[int]) -> bool:
        q = self.ring.q
        w = [x % q for x in word]
        if len(w) != self.n:
            raise LengthMismatch(f"{len(w)} != {self.n}")
        p = self.ring.p
        for row, (c, v) in zip(self.rows, self.pivots):
            pv = p**v
            if w[c] % pv:
                return False
            k = w[c] // pv
            if k:
                w = [(a - k * b) % q for a, b in zip(w, row)]
        return not any(w)

    def contains_module(self, other: SpanBasis) -> bool:
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return self.rows == other.rows and self.ring == other.ring

    def __hash__(self) -> int:
        return hash((self.ring, self.rows))


def triangularize(vectors: Sequence[Sequence[int]], ring: RingParams, n: int) -> SpanBasis:
    p, m, q = ring.p, ring.m, ring.q
    pool = [[x % q for x in v] for v in vectors]
    pool = [v for v in pool if any(v)]
    rows: list[list[int]] = []
    pivots: list[tuple[int, int]] = []
    for c in range(n):
        live = [v for v in pool if v[c]]
        if not live:
            continue
        best = min(live, key=lambda v: ring.valuation(v[c]))
        vb = ring.valuation(best[c])
        unit = best[c] // p**vb
        inv = pow(unit, -1, q)
        piv = [x * inv % q for x in best]
        pv = p**vb
        rest = []
        for v in pool:
            if v is best:
                continue
            k = v[c] // pv
            if k:
                v = [(a - k * b) % q for a, b in zip(v, piv)]
            if any(v):
                rest.append(v)
        # annihilated multiple of the pivot row can still be nonzero further right
        tail = [x * p ** (m - vb) % q for x in piv]
        if any(tail):
            rest.append(tail)
        for i, row in enumerate(rows):
            k = row[c] // pv
            if k:
                rows[i] = [(a - k * b) % q for a, b in zip(row, piv)]
        rows.append(piv)
        pivots.append((c, vb))
        pool = rest
    return SpanBasis(ring, n, tuple(tuple(r) for r in rows), tuple(pivots))


def span_from_generators(gens: Sequence[Poly], ring: RingParams, n: int) -> SpanBasis:
    vectors = [s for g in gens for s in cyclic_shifts(g, n)]
    return triangularize(vectors, ring, n)


def bruteforce_self_orthogonal(gens: Sequence[Poly], ring: RingParams, n: int) -> bool:
    shifts = [s for g in gens for s in cyclic_shifts(g, n)]
    return all_orthogonal(shifts, shifts, ring)


def all_orthogonal(us: Sequence[Vector], vs: Sequence[Vector], ring: RingParams) -> bool:
    q = ring.q
    for u in us:
        for v in vs:
            if sum(a * b for a, b in zip(u, v)) % q:
                return False
    return True


def enumerate_codewords(basis: SpanBasis, budget: int = DEFAULT_CODEWORD_BUDGET) -> Iterator[Vector]:
    size = basis.cardinality
    if size > budget:
        raise BudgetExceeded(size, budget, "codewords")
    return _codewords(basis)


def _codewords(basis: SpanBasis) -> Iterator[Vector]:
    p, m, q, n = basis.ring.p, basis.ring.m, basis.ring.q, basis.n
    ranges = [range(p ** (m - v)) for _, v in basis.pivots]
    rows = basis.rows
    for coeffs in itertools.product(*ranges):
        w = [0] * n
        for k, row in zip(coeffs, rows):
            if k:
                for i, x in enumerate(row):
                    w[i] += k * x
        yield tuple(x % q for x in w)


def bruteforce_min_euclidean_weight(basis: SpanBasis, budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
    from .codes import euclidean_weight

    if basis.cardinality < 2:
        raise ZeroCode("the zero code has no nonzero codeword")
    return min(euclidean_weight(w, basis.ring) for w in enumerate_codewords(basis, budget) if any(w))


# ---------------------------------------------------------------------------
# equivalence harness
# ---------------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    checked: int = 0
    failure: dict | None = None

    def fail(self, **detail) -> None:
        if self.passed:
            self.passed = False
            self.failure = detail

    def to_json(self) -> dict:
        out = {"check": self.name, "passed": self.passed, "checked": self.checked}
        if self.failure is not None:
            out["failure"] = self.failure
        return out


@dataclass
class CrosscheckReport:
    p: int
    m: int
    n: int
    profiles: int = 0
    counts: dict = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "profiles": self.profiles,
            "passed": self.passed,
            "counts": self.counts,
            "checks": [c.to_json() for c in self.checks],
        }


def bruteforce_classify(profile) -> dict:
    """Brute-force facts about one profile's code, from its product-form generator."""
    from .codes import GeneratorForm, generator_polynomial, half_up

    basis = profile.basis
    ring, n = basis.ring, basis.n
    g = generator_polynomial(profile, GeneratorForm.REDUCED)
    gens = [] if g.is_zero() else [g]
    span = span_from_generators(gens, ring, n)
    so = bruteforce_self_orthogonal(gens, ring, n)
    threshold = ring.p ** half_up(ring.m)
    trivial = so and all(x % threshold == 0 for x in to_vector(g, n))
    self_dual = so and span.cardinality**2 == ring.q**n
    return {"gens": gens, "span": span, "so": so, "trivial": trivial, "self_dual": self_dual}


def crosscheck(p: int, m: int, n: int, profile_budget: int = DEFAULT_PROFILE_BUDGET) -> CrosscheckReport:
    from . import codes
    from .factorization import ModulusKind, hensel_lift

    shifted = hensel_lift(p, m, n, ModulusKind.SHIFTED)
    ring = shifted.ring
    total = (m + 1) ** shifted.r
    if total > profile_budget:
        raise BudgetExceeded(total, profile_budget, "profiles")

    report = CrosscheckReport(p, m, n)
    so_check = CheckResult("self_orthogonality")
    card_check = CheckResult("cardinality")
    span_check = CheckResult("span_equality")
    dual_check = CheckResult("duality")
    found = {"so": 0, "trivial": 0, "nontrivial": 0, "self_dual": 0}

    for profile in codes.enumerate_profiles(shifted, codes.ProfileFilter.ALL, profile_budget):
        report.profiles += 1
        facts = bruteforce_classify(profile)
        exps = list(profile.exponents)

        so_check.checked += 1
        if facts["so"] != codes.is_self_orthogonal(profile):
            so_check.fail(profile=exps, bruteforce=facts["so"])

        card_check.checked += 1
        span = facts["span"]
        if span.cardinality != codes.cardinality(profile):
            card_check.fail(profile=exps, span=span.cardinality, formula=codes.cardinality(profile))

        span_check.checked += 1
        std_span = span_from_generators(codes.standard_generators(profile.on(ModulusKind.STANDARD)), ring, n)
        if std_span.cardinality != span.cardinality or not std_span.contains_module(span):
            span_check.fail(profile=exps)

        dual_check.checked += 1
        dual = codes.dual_profile(profile)
        dual_gens = codes.code_generators(dual)
        dual_shifts = [s for g in dual_gens for s in cyclic_shifts(g, n)]
        own_shifts = [s for g in facts["gens"] for s in cyclic_shifts(g, n)]
        dual_size = span_from_generators(dual_gens, ring, n).cardinality
        if span.cardinality * dual_size != ring.q**n or not all_orthogonal(own_shifts, dual_shifts, ring):
            dual_check.fail(profile=exps)

        if facts["so"]:
            found["so"] += 1
            found["trivial" if facts["trivial"] else "nontrivial"] += 1
        if facts["self_dual"]:
            found["self_dual"] += 1

    g, d = shifted.gamma, shifted.delta
    expected = {
        "so": codes.count_so(g, d, m),
        "trivial": codes.count_trivial(g, d, m),
        "nontrivial": codes.count_nontrivial(g, d, m),
        "self_dual": codes.count_self_dual(d, m)[1],
    }
    count_check = CheckResult("counts", checked=len(expected))
    if found != expected:
        count_check.fail(bruteforce=found, formula=expected)
    report.counts = found
    report.checks = [so_check, card_check, span_check, dual_check, count_check]
    return report
