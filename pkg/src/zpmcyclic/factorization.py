"""Factorization of x^n - 1 and of Q(x) = x^n + (p - 1) over Z_{p^m}.

The mod-p factors are minimal polynomials of powers of a primitive n-th root
of unity, one per p-cyclotomic coset, computed in an explicit extension
field.  They are then Hensel-lifted to Z_{p^m} along a balanced factor tree.
Everything is deterministic: same inputs, same factor order, same output.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import EvenLength, NonCoprime, ZpmError
from .ring_poly import (
    Poly,
    RingParams,
    change_ring,
    poly_gcd,
    poly_prod,
    poly_xgcd,
    powmod,
    reciprocal,
    reduce_mod_p,
)


class ModulusKind(str, enum.Enum):
    STANDARD = "standard"  # x^n - 1
    SHIFTED = "shifted"  # x^n + (p - 1), congruent to p modulo x^n - 1

    def __str__(self) -> str:
        return self.value


def check_length(p: int, n: int) -> None:
    RingParams(p, 1)  # raises NotPrime
    if not isinstance(n, int) or n < 1:
        raise ZpmError(f"length must be a positive integer, got {n}")
    if n % 2 == 0:
        raise EvenLength(f"length n={n} must be odd")
    if math.gcd(n, p) != 1:
        raise NonCoprime(f"gcd(n={n}, p={p}) != 1")


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NonCoprime(f"{a} is not invertible modulo {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def prime_factors(k: int) -> list[int]:
    out, d = [], 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def modulus_poly(ring: RingParams, n: int, kind: ModulusKind) -> Poly:
    const = -1 if ModulusKind(kind) is ModulusKind.STANDARD else ring.p - 1
    return Poly((const,) + (0,) * (n - 1) + (1,), ring)


# ---------------------------------------------------------------------------
# cyclotomic cosets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetPartition:
    """p-cyclotomic cosets modulo n with the negation pairing i -> -i."""

    n: int
    p: int
    cosets: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]

    @property
    def gamma(self) -> int:
        return sum(1 for k, j in enumerate(self.pairing) if k == j)

    @property
    def delta(self) -> int:
        return sum(1 for k, j in enumerate(self.pairing) if k < j)

    def index_of(self, i: int) -> int:
        i %= self.n
        for k, c in enumerate(self.cosets):
            if i in c:
                return k
        raise KeyError(i)


@functools.lru_cache(maxsize=None)
def cyclotomic_cosets(p: int, n: int) -> CosetPartition:
    check_length(p, n)
    seen = [False] * n
    cosets = []
    for i in range(n):
        if seen[i]:
            continue
        orbit, j = [], i
        while not seen[j]:
            seen[j] = True
            orbit.append(j)
            j = j * p % n
        cosets.append(tuple(sorted(orbit)))
    where = {i: k for k, c in enumerate(cosets) for i in c}
    pairing = tuple(where[(-c[0]) % n] for c in cosets)
    return CosetPartition(n, p, tuple(cosets), pairing)


def gamma_delta(p: int, n: int) -> tuple[int, int]:
    part = cyclotomic_cosets(p, n)
    return part.gamma, part.delta


# ---------------------------------------------------------------------------
# extension field GF(p^t) = Z_p[y] / (irr)
# ---------------------------------------------------------------------------


def is_irreducible_mod_p(f: Poly) -> bool:
    """Rabin's test over Z_p: x^{p^d} = x mod f and gcd(x^{p^{d/r}} - x, f) = 1."""
    if f.ring.m != 1:
        f = reduce_mod_p(f)
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    p = f.ring.p
    x = Poly.monomial(1, f.ring)
    f = f * pow(f.lead, -1, p)
    if powmod(x, p**d, f) != x % f:
        return False
    for r in prime_factors(d):
        h = powmod(x, p ** (d // r), f) - x
        if poly_gcd(h, f).degree != 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def first_irreducible(p: int, t: int) -> Poly:
    """Lexicographically first monic irreducible of degree t (ascending coefficients)."""
    ring = RingParams(p, 1)
    # for t > 1 a zero constant term means x | f, so the sweep starts at c_0 = 1
    first = range(p) if t == 1 else range(1, p)
    for low in itertools.product(first, *[range(p)] * (t - 1)):
        f = Poly(low + (1,), ring)
        # a root in Z_p rules f out cheaply; the selected polynomial is unchanged
        if t > 1 and any(f(a) == 0 for a in range(p)):
            continue
        if is_irreducible_mod_p(f):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class ExtensionField:
    """GF(p^t) realized as residues modulo a fixed irreducible polynomial.

    Elements are tuples of length t (ascending coefficients).
    """

    def __init__(self, p: int, t: int):
        self.p = p
        self.t = t
        self.modulus = first_irreducible(p, t)
        # reduction rule: y^t = -(c_0 + ... + c_{t-1} y^{t-1})
        self._tail = tuple((-c) % p for c in self.modulus.coeffs[:t])
        self.one = (1,) + (0,) * (t - 1)
        self.zero = (0,) * t

    @property
    def order(self) -> int:
        return self.p**self.t

    def scalar(self, a: int) -> tuple[int, ...]:
        return (a % self.p,) + (0,) * (self.t - 1)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, t = self.p, self.t
        prod = [0] * (2 * t - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        tail = self._tail
        for k in range(2 * t - 2, t - 1, -1):
            c = prod[k] % p
            if c:
                base = k - t
                for j, u in enumerate(tail):
                    if u:
                        prod[base + j] += c * u
        return tuple(c % p for c in prod[:t])

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        """Nonzero elements in lexicographic order of their coefficient tuples."""
        for a in itertools.product(range(self.p), repeat=self.t):
            if any(a):
                yield a

    def root_of_unity(self, n: int):
        """First g^{(p^t-1)/n} (g in lexicographic order) of exact order n."""
        if (self.order - 1) % n:
            raise ZpmError(f"{n} does not divide p^t - 1")
        cofactor = (self.order - 1) // n
        primes = prime_factors(n)
        for g in self.elements():
            eps = self.pow(g, cofactor)
            if all(self.pow(eps, n // r) != self.one for r in primes):
                return eps
        raise AssertionError("no primitive root found")  # pragma: no cover


def _minimal_polynomial(field: ExtensionField, roots) -> Poly:
    # coefficients of prod (x - beta), ascending, each in the extension field
    coeffs = [field.one]
    for beta in roots:
        nb = field.neg(beta)
        nxt = [field.zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = field.add(nxt[k + 1], c)
            nxt[k] = field.add(nxt[k], field.mul(c, nb))
        coeffs = nxt
    if any(any(c[1:]) for c in coeffs):
        raise AssertionError("minimal polynomial left the prime field")
    return Poly(tuple(c[0] for c in coeffs), RingParams(field.p, 1))


def _sort_key(f: Poly):
    g = reduce_mod_p(f)
    return (g.degree, g.coeffs)


@dataclass(frozen=True)
class _ModPFactors:
    factors: tuple[Poly, ...]
    cosets: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]


def _canonical_order(factors, cosets, pairing) -> _ModPFactors:
    keys = [_sort_key(f) for f in factors]
    singles = sorted((k for k in range(len(factors)) if pairing[k] == k), key=keys.__getitem__)
    pairs = []
    for k in range(len(factors)):
        j = pairing[k]
        if k != j and keys[k] < keys[j]:
            pairs.append((k, j))
    pairs.sort(key=lambda kj: keys[kj[0]])
    order = singles + [i for kj in pairs for i in kj]
    pos = {old: new for new, old in enumerate(order)}
    return _ModPFactors(
        tuple(factors[k] for k in order),
        tuple(cosets[k] for k in order),
        tuple(pos[pairing[k]] for k in order),
    )


@functools.lru_cache(maxsize=None)
def _factor_mod_p(p: int, n: int) -> _ModPFactors:
    part = cyclotomic_cosets(p, n)
    t = multiplicative_order(p, n)
    field = ExtensionField(p, t)
    eps = field.root_of_unity(n)
    factors = [_minimal_polynomial(field, [field.pow(eps, j) for j in c]) for c in part.cosets]
    return _canonical_order(factors, part.cosets, part.pairing)


def factor_mod_p(p: int, n: int) -> list[Poly]:
    """Monic irreducible factors of x^n - 1 over Z_p in canonical order."""
    check_length(p, n)
    return list(_factor_mod_p(p, n).factors)


# ---------------------------------------------------------------------------
# Hensel lifting
# ---------------------------------------------------------------------------


def _hensel_step(f, g, h, s, t, ring):
    """One quadratic step: inputs valid modulo the current power, outputs modulo ``ring``."""
    f, g, h, s, t = (change_ring(a, ring) for a in (f, g, h, s, t))
    one = Poly.constant(1, ring)
    e = f - g * h
    q, r = divmod(s * e, h)
    g2 = g + t * e + q * g
    h2 = h + r
    b = s * g2 + t * h2 - one
    c, d = divmod(s * b, h2)
    s2 = s - d
    t2 = t - t * b - c * g2
    return g2, h2, s2, t2


def lift_two(f: Poly, g0: Poly, h0: Poly) -> tuple[Poly, Poly]:
    """Lift f = g0 h0 (mod p) to monic g, h with f = g h over f's ring."""
    p, m = f.ring.p, f.ring.m
    _, s, t = poly_xgcd(g0, h0)
    g, h, k = g0, h0, 1
    while k < m:
        k = min(2 * k, m)
        g, h, s, t = _hensel_step(f, g, h, s, t, RingParams(p, k))
    return change_ring(g, f.ring), change_ring(h, f.ring)


def lift_factors(f: Poly, seeds: Sequence[Poly]) -> list[Poly]:
    """Multifactor lift along a balanced tree; seeds are monic, pairwise coprime mod p."""
    if len(seeds) == 1:
        return [f]
    mid = len(seeds) // 2
    res = f.ring.residue()
    left = poly_prod(seeds[:mid], res)
    right = poly_prod(seeds[mid:], res)
    g, h = lift_two(f, left, right)
    return lift_factors(g, seeds[:mid]) + lift_factors(h, seeds[mid:])


@dataclass(frozen=True)
class FactorBasis:
    """Ordered basic irreducible factors of the modulus over Z_{p^m}."""

    ring: RingParams
    n: int
    modulus_kind: ModulusKind
    factors: tuple[Poly, ...]
    pairing: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    @property
    def gamma(self) -> int:
        return sum(1 for k, j in enumerate(self.pairing) if k == j)

    @property
    def delta(self) -> int:
        return sum(1 for k, j in enumerate(self.pairing) if k < j)

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    @property
    def modulus(self) -> Poly:
        return modulus_poly(self.ring, self.n, self.modulus_kind)

    def labels(self) -> list[str]:
        out = []
        for k, j in enumerate(self.pairing):
            if k == j:
                out.append(f"self_reciprocal[{k}]")
            else:
                out.append(f"pair[{min(k, j)},{max(k, j)}]")
        return out

    def to_json(self) -> dict:
        return {
            "p": self.ring.p,
            "m": self.ring.m,
            "n": self.n,
            "modulus_kind": str(self.modulus_kind),
            "factors": [f.to_json() for f in self.factors],
            "pairing": list(self.pairing),
            "gamma": self.gamma,
            "delta": self.delta,
        }


@functools.lru_cache(maxsize=None)
def hensel_lift(p: int, m: int, n: int, modulus_kind: ModulusKind | str = ModulusKind.STANDARD) -> FactorBasis:
    check_length(p, n)
    kind = ModulusKind(modulus_kind)
    ring = RingParams(p, m)
    base = _factor_mod_p(p, n)
    lifted = lift_factors(modulus_poly(ring, n, kind), base.factors)
    return FactorBasis(ring, n, kind, tuple(lifted), base.pairing, base.cosets)


def reciprocal_partner_mod_p(basis: FactorBasis, k: int) -> int:
    """Index of the factor whose reduction equals the reciprocal of factor k's reduction."""
    target = reciprocal(reduce_mod_p(basis.factors[k]))
    for j, f in enumerate(basis.factors):
        if reduce_mod_p(f) == target:
            return j
    raise AssertionError("reciprocal not among factors")  # pragma: no cover


def count_cyclotomic_factors(p: int, n: int) -> int:
    """Sum over d | n of phi(d) / ord_d(p)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            phi = sum(1 for a in range(1, d + 1) if math.gcd(a, d) == 1)
            total += phi // multiplicative_order(p, d)
    return total
