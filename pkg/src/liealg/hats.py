"""Hat maps: index reductions Z -> ring that drive the graded family.

A hat map sends an integer index to a canonical representative in its
codomain ring: the balanced mod-3 map picks representatives {-1, 0, 1},
the identity map leaves integers alone (giving truncated Witt tables
downstream), ``ZModHat`` is the natural homomorphism onto Z_p, and
``RangeHat`` reduces mod p onto an arbitrary complete residue system.

Besides evaluation, this module checks the algebraic properties a hat
map needs for the family construction to work (it must preserve
multiplication and "almost" preserve addition) and scans the hatted
Jacobi identity

    c_hat(i,j,k) + c_hat(j,k,i) + c_hat(k,i,j) = 0,
    where c(i,j,k) = (i - j)(i + j - k),

for counterexamples.  The scan walks one representative per cyclic
class of index triples (largest index first), since the sum above is
invariant under cyclic rotation; the first failing representative is
reported together with its three hat values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable

from .fields import PrimeField, QQ, is_prime

__all__ = [
    "BalancedMod3",
    "IdentityHat",
    "ZModHat",
    "RangeHat",
    "MOD3_BALANCED",
    "IDENTITY_HAT",
    "HatPropertyReport",
    "HatScanWitness",
    "hat_properties",
    "jacobi_hat_scan",
]


class BalancedMod3:
    """i mod 3 with representatives {-1, 0, 1}."""

    name = "mod3"

    def value(self, i: int) -> int:
        return (i + 1) % 3 - 1

    def same(self, a: int, b: int) -> bool:
        return a == b

    def sum_is_zero(self, values: Iterable[int]) -> bool:
        return sum(values) == 0

    def default_field(self):
        return QQ

    def __eq__(self, other):
        return isinstance(other, BalancedMod3)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "BalancedMod3()"


class IdentityHat:
    """The identity map on Z; reduces nothing."""

    name = "identity"

    def value(self, i: int) -> int:
        return i

    def same(self, a: int, b: int) -> bool:
        return a == b

    def sum_is_zero(self, values: Iterable[int]) -> bool:
        return sum(values) == 0

    def default_field(self):
        return QQ

    def __eq__(self, other):
        return isinstance(other, IdentityHat)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "IdentityHat()"


class ZModHat:
    """Natural ring homomorphism Z -> Z_p, residues in [0, p).

    Codomain arithmetic is mod p, so equality and zero tests reduce
    first; the default scalar field exists only for prime p.
    """

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be at least 2")
        self.p = p

    @property
    def name(self) -> str:
        return f"zmod:{self.p}"

    def value(self, i: int) -> int:
        return i % self.p

    def same(self, a: int, b: int) -> bool:
        return (a - b) % self.p == 0

    def sum_is_zero(self, values: Iterable[int]) -> bool:
        return sum(values) % self.p == 0

    def default_field(self):
        if not is_prime(self.p):
            raise ValueError(
                f"Z_{self.p} is not a field (composite modulus); "
                "no scalar field available")
        return PrimeField(self.p)

    def __eq__(self, other):
        return isinstance(other, ZModHat) and other.p == self.p

    def __hash__(self):
        return hash(("zmod", self.p))

    def __repr__(self):
        return f"ZModHat({self.p})"


class RangeHat:
    """Reduction mod p onto a chosen complete residue system in Z.

    Unlike ``ZModHat`` the codomain is Z itself, so sums and products of
    hat values are honest integers; this is how reductions with
    unbalanced representative sets (e.g. {0, 1} for p = 2) break the
    hatted Jacobi identity.
    """

    def __init__(self, p: int, representatives: Iterable[int]):
        reps = sorted(set(representatives))
        if len(reps) != p or sorted(r % p for r in reps) != list(range(p)):
            raise ValueError(
                f"representatives must form a complete residue system mod {p}")
        self.p = p
        self.representatives = tuple(reps)
        self._by_residue = {r % p: r for r in reps}

    @property
    def name(self) -> str:
        reps = ",".join(str(r) for r in self.representatives)
        return f"modrange:{self.p}:{{{reps}}}"

    def value(self, i: int) -> int:
        return self._by_residue[i % self.p]

    def same(self, a: int, b: int) -> bool:
        return a == b

    def sum_is_zero(self, values: Iterable[int]) -> bool:
        return sum(values) == 0

    def default_field(self):
        return QQ

    def __eq__(self, other):
        return (isinstance(other, RangeHat) and other.p == self.p
                and other.representatives == self.representatives)

    def __hash__(self):
        return hash(("modrange", self.p, self.representatives))

    def __repr__(self):
        return f"RangeHat({self.p}, {self.representatives})"


MOD3_BALANCED = BalancedMod3()
IDENTITY_HAT = IdentityHat()


@dataclass(frozen=True)
class HatPropertyReport:
    """Which structural identities a hat map satisfies on a window.

    multiplicative: hat(ij) = hat(i) hat(j)
    add1:           hat(i+j) = hat(hat(i) + hat(j)) and hat(-i) = -hat(i)
    add2:           hat(i-j) = 0  iff  hat(i) = hat(j)
    """
    multiplicative: bool
    add1: bool
    add2: bool
    witnesses: dict = dc_field(default_factory=dict)


def hat_properties(hat, window: Iterable[int]) -> HatPropertyReport:
    """Exhaustively check the three hat identities over all window pairs."""
    points = sorted(set(window))
    results = {"multiplicative": True, "add1": True, "add2": True}
    witnesses: dict[str, tuple] = {}

    def fail(key, witness):
        if results[key]:
            results[key] = False
            witnesses[key] = witness

    for i in points:
        if results["add1"] and not hat.same(hat.value(-i), -hat.value(i)):
            fail("add1", (i,))
    for i, j in itertools.product(points, repeat=2):
        if results["multiplicative"] and not hat.same(
                hat.value(i * j), hat.value(i) * hat.value(j)):
            fail("multiplicative", (i, j))
        if results["add1"] and not hat.same(
                hat.value(i + j), hat.value(hat.value(i) + hat.value(j))):
            fail("add1", (i, j))
        if results["add2"] and (
                (hat.value(i - j) == 0) != hat.same(hat.value(i), hat.value(j))):
            fail("add2", (i, j))
        if not any(results.values()):
            break
    return HatPropertyReport(results["multiplicative"], results["add1"],
                             results["add2"], witnesses)


@dataclass(frozen=True)
class HatScanWitness:
    """A triple where the hatted Jacobi identity fails."""
    i: int
    j: int
    k: int
    hat_values: tuple[int, int, int]


def _c(i: int, j: int, k: int) -> int:
    return (i - j) * (i + j - k)


def jacobi_hat_scan(hat, window: Iterable[int]) -> HatScanWitness | None:
    """Scan the hatted Jacobi identity over cyclic-class representatives.

    Returns the first representative triple (i, j, k), i = max index,
    whose hatted cyclic sum is nonzero, or None if the identity holds
    on the whole window.
    """
    points = sorted(set(window))
    for i in points:
        for j in points:
            if j > i:
                break
            for k in points:
                if k > i:
                    break
                values = (hat.value(_c(i, j, k)),
                          hat.value(_c(j, k, i)),
                          hat.value(_c(k, i, j)))
                if not hat.sum_is_zero(values):
                    return HatScanWitness(i, j, k, values)
    return None
