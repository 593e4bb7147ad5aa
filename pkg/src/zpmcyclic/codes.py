"""Cyclic codes over Z_{p^m} described by exponent profiles.

A cyclic code of odd length n with gcd(n, p) = 1 is determined by one
exponent a_k in [0, m] per basic irreducible factor of the modulus: in the
k-th Chinese-remainder component the code is the ideal generated by p^{a_k}.
Exponents are stored in the canonical factor order of :class:`FactorBasis`,
which is the same for the standard (x^n - 1) and shifted (x^n + p - 1)
bases, so one exponent vector names the same code on either basis.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetExceeded, NotSelfDual, WrongModulusKind, ZpmError
from .factorization import FactorBasis, ModulusKind, check_length, cyclotomic_cosets, hensel_lift
from .oracle import DEFAULT_CODEWORD_BUDGET, DEFAULT_PROFILE_BUDGET, enumerate_codewords, span_from_generators
from .ring_poly import Poly, RingParams, poly_prod, quotient_reduce


def half_up(m: int) -> int:
    return (m + 1) // 2


@dataclass(frozen=True)
class ExponentProfile:
    basis: FactorBasis
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if len(exps) != self.basis.r:
            raise ZpmError(f"expected {self.basis.r} exponents, got {len(exps)}")
        m = self.basis.ring.m
        if any(not 0 <= a <= m for a in exps):
            raise ZpmError(f"exponents must lie in [0, {m}]")
        object.__setattr__(self, "exponents", exps)

    @property
    def m(self) -> int:
        return self.basis.ring.m

    def on(self, kind: ModulusKind | str) -> ExponentProfile:
        """The same code described over the other modulus basis."""
        b = self.basis
        return ExponentProfile(hensel_lift(b.ring.p, b.ring.m, b.n, kind), self.exponents)

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "basis_order": self.basis.labels()}

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


def make_profile(p: int, m: int, n: int, exponents: Sequence[int], kind=ModulusKind.SHIFTED) -> ExponentProfile:
    return ExponentProfile(hensel_lift(p, m, n, kind), tuple(exponents))


class GeneratorForm(str, enum.Enum):
    PAPER_NORMAL = "paper_normal"
    REDUCED = "reduced"


def generator_polynomial(profile: ExponentProfile, form: GeneratorForm | str = GeneratorForm.PAPER_NORMAL) -> Poly:
    """p^mu * prod f_k^(a_k - mu) with mu the least exponent.

    Uses Q(x) = prod f_k = p in the quotient ring; ``reduced`` additionally
    folds the result modulo x^n - 1.
    """
    basis = profile.basis
    if basis.modulus_kind is not ModulusKind.SHIFTED:
        raise WrongModulusKind("product-form generators need the shifted basis")
    ring = basis.ring
    mu = min(profile.exponents, default=0)
    g = poly_prod((f ** (a - mu) for f, a in zip(basis.factors, profile.exponents)), ring)
    g = g * ring.p**mu
    if GeneratorForm(form) is GeneratorForm.REDUCED:
        g = quotient_reduce(g, basis.n)
    return g


def standard_generators(profile: ExponentProfile) -> list[Poly]:
    """Nonzero members of (G^_1, p G^_2, ..., p^{m-1} G^_m) for the standard basis."""
    basis = profile.basis
    if basis.modulus_kind is not ModulusKind.STANDARD:
        raise WrongModulusKind("standard generators need the x^n - 1 basis")
    ring, n = basis.ring, basis.n
    xn1 = Poly.x_n_minus_1(n, ring)
    gens = []
    for j in range(ring.m):
        group = [f for f, a in zip(basis.factors, profile.exponents) if a == j]
        if not group:
            continue
        g_hat = xn1 // poly_prod(group, ring)
        gens.append(g_hat * ring.p**j)
    return gens


def code_generators(profile: ExponentProfile) -> list[Poly]:
    """A spanning set of the code (as ideal generators) for either basis kind."""
    if profile.basis.modulus_kind is ModulusKind.SHIFTED:
        g = generator_polynomial(profile, GeneratorForm.REDUCED)
        return [] if g.is_zero() else [g]
    return standard_generators(profile)


def dual_profile(profile: ExponentProfile) -> ExponentProfile:
    m, a = profile.m, profile.exponents
    return ExponentProfile(profile.basis, tuple(m - a[j] for j in profile.basis.pairing))


def is_self_orthogonal(profile: ExponentProfile) -> bool:
    m, a = profile.m, profile.exponents
    for k, j in enumerate(profile.basis.pairing):
        if k == j and a[k] < half_up(m):
            return False
        if a[k] + a[j] < m:
            return False
    return True


def is_self_dual(profile: ExponentProfile) -> bool:
    return profile == dual_profile(profile)


class Triviality(str, enum.Enum):
    NOT_SELF_ORTHOGONAL = "not_self_orthogonal"
    TRIVIAL = "trivial"
    NONTRIVIAL = "nontrivial"


def classify_triviality(profile: ExponentProfile) -> Triviality:
    if not is_self_orthogonal(profile):
        return Triviality.NOT_SELF_ORTHOGONAL
    if all(a >= half_up(profile.m) for a in profile.exponents):
        return Triviality.TRIVIAL
    return Triviality.NONTRIVIAL


def cardinality(profile: ExponentProfile) -> int:
    m = profile.m
    e = sum((m - a) * d for a, d in zip(profile.exponents, profile.basis.degrees))
    return profile.basis.ring.p**e


# ---------------------------------------------------------------------------
# closed-form counts
# ---------------------------------------------------------------------------


def count_so(gamma: int, delta: int, m: int) -> int:
    return (m - half_up(m) + 1) ** gamma * ((m + 1) * (m + 2) // 2) ** delta


def count_trivial(gamma: int, delta: int, m: int) -> int:
    return (m - half_up(m) + 1) ** (gamma + 2 * delta)


def count_nontrivial(gamma: int, delta: int, m: int) -> int:
    return count_so(gamma, delta, m) - count_trivial(gamma, delta, m)


def count_nontrivial_expanded(gamma: int, delta: int, m: int) -> int:
    """Factored form of the nontrivial count, kept as an independent cross-check."""
    c = m - half_up(m) + 1
    return c**gamma * (((m + 1) * (m + 2) // 2) ** delta - c ** (2 * delta))


def count_self_dual(delta: int, m: int) -> tuple[int, int]:
    """(formula, actual): (m+1)^delta, and the same value only when m is even."""
    formula = (m + 1) ** delta
    return formula, formula if m % 2 == 0 else 0


@dataclass(frozen=True)
class CodeCounts:
    n: int
    gamma: int
    delta: int
    total_so: int
    trivial_so: int
    nontrivial_so: int
    selfdual_formula: int
    selfdual_actual: int

    def row(self) -> tuple[int, ...]:
        return (
            self.n,
            self.gamma,
            self.delta,
            self.trivial_so,
            self.nontrivial_so,
            self.selfdual_formula,
            self.selfdual_actual,
        )


def code_counts(p: int, m: int, n: int) -> CodeCounts:
    RingParams(p, m)
    part = cyclotomic_cosets(p, n)
    g, d = part.gamma, part.delta
    sd_formula, sd_actual = count_self_dual(d, m)
    return CodeCounts(
        n, g, d, count_so(g, d, m), count_trivial(g, d, m), count_nontrivial(g, d, m), sd_formula, sd_actual
    )


def nontrivial_exists(p: int, n: int) -> bool:
    """True iff -1 is not a power of p modulo n."""
    check_length(p, n)
    target = (-1) % n
    x = 1 % n
    while True:
        if x == target:
            return False
        x = x * p % n
        if x == 1 % n:
            return True


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


class ProfileFilter(str, enum.Enum):
    ALL = "all"
    SO = "so"
    NONTRIVIAL_SO = "nontrivial_so"
    SELF_DUAL = "sd"


def _allowed(k: int, prefix: list[int], pairing, m: int, flt: ProfileFilter) -> Sequence[int]:
    if flt is ProfileFilter.ALL:
        return range(m + 1)
    j = pairing[k]
    if flt is ProfileFilter.SELF_DUAL:
        if j == k:
            return (m // 2,) if m % 2 == 0 else ()
        return (m - prefix[j],) if j < k else range(m + 1)
    if j == k:
        return range(half_up(m), m + 1)
    return range(m - prefix[j], m + 1) if j < k else range(m + 1)


def enumerate_profiles(
    basis: FactorBasis,
    filter: ProfileFilter | str = ProfileFilter.ALL,
    budget: int = DEFAULT_PROFILE_BUDGET,
) -> Iterator[ExponentProfile]:
    """Lexicographic stream of profiles satisfying ``filter``."""
    flt = ProfileFilter(filter)
    m, r = basis.ring.m, basis.r
    if (m + 1) ** r > budget:
        raise BudgetExceeded((m + 1) ** r, budget, "profiles")
    pairing = basis.pairing
    ceil = half_up(m)

    def walk(prefix: list[int]):
        k = len(prefix)
        if k == r:
            if flt is ProfileFilter.NONTRIVIAL_SO and all(a >= ceil for a in prefix):
                return
            yield ExponentProfile(basis, tuple(prefix))
            return
        for a in _allowed(k, prefix, pairing, m, flt):
            prefix.append(a)
            yield from walk(prefix)
            prefix.pop()

    return walk([])


# ---------------------------------------------------------------------------
# Euclidean weight and Type
# ---------------------------------------------------------------------------


def euclidean_weight(word: Sequence[int], ring: RingParams) -> int:
    q = ring.q
    return sum(min(e * e, (q - e) * (q - e)) for e in (x % q for x in word))


class CodeType(str, enum.Enum):
    TYPE_I = "type_I"
    TYPE_II = "type_II"


def classify_type(profile: ExponentProfile, budget: int = DEFAULT_CODEWORD_BUDGET) -> CodeType:
    """Exhaustive Euclidean-weight scan with early exit on the first witness."""
    if not is_self_dual(profile):
        raise NotSelfDual(f"profile {profile} is not self-dual")
    ring, n = profile.basis.ring, profile.basis.n
    size = cardinality(profile)
    if size > budget:
        raise BudgetExceeded(size, budget, "codewords")
    span = span_from_generators(code_generators(profile), ring, n)
    modulus = ring.p ** (ring.m + 1)
    for word in enumerate_codewords(span, budget):
        if euclidean_weight(word, ring) % modulus:
            return CodeType.TYPE_I
    return CodeType.TYPE_II


def all_profiles_box(basis: FactorBasis) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(basis.ring.m + 1), repeat=basis.r)


def gcd_ok(p: int, n: int) -> bool:
    return n % 2 == 1 and math.gcd(p, n) == 1
