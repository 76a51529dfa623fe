"""Rings, elements and ideals with exact canonical-form arithmetic.

Supported rings: the integers Z, modular integers Z/n (n ≥ 2), univariate
polynomials over a prime field GF(p)[x], and finite products of modular-integer
rings.  Every ideal is kept in a canonical form that makes equality structural:

- Integers: a generator g ≥ 0 ((0) is the zero ideal, (1) the unit ideal).
- ModularIntegers(n): a divisor d of n with 1 ≤ d ≤ n; d = n is the zero
  ideal and d = 1 the unit ideal.
- PolynomialsOverPrimeField(p): a monic generator as an ascending coefficient
  tuple with no trailing zeros; () is the zero ideal, (1,) the unit ideal.
- FiniteProduct(moduli): a tuple of per-component divisors, one ideal of
  Z/n_i in each coordinate.

All values are immutable; operations return new objects and never mutate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as _cartesian

from . import _intmath, _polymath
from .errors import DomainError, RingMismatch, UnsupportedEnumeration


# ---------------------------------------------------------------------------
# ring descriptors


class RingDescriptor:
    """Base class; concrete rings are frozen dataclasses below."""

    def is_finite(self) -> bool:
        raise NotImplementedError

    def size(self) -> int | None:
        """Number of elements, or None for infinite rings."""
        return None

    def element(self, value) -> RingElement:
        """Canonicalize a raw payload into an element of this ring."""
        return RingElement(self, self._canonical(value))

    def zero(self) -> RingElement:
        raise NotImplementedError

    def one(self) -> RingElement:
        raise NotImplementedError

    def elements(self):
        """Iterate all elements in canonical order (finite rings only)."""
        raise UnsupportedEnumeration(f"cannot enumerate elements of {self}")

    def _canonical(self, value):
        raise NotImplementedError


@dataclass(frozen=True)
class Integers(RingDescriptor):
    def is_finite(self) -> bool:
        return False

    def zero(self) -> RingElement:
        return RingElement(self, 0)

    def one(self) -> RingElement:
        return RingElement(self, 1)

    def _canonical(self, value):
        return int(value)

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class ModularIntegers(RingDescriptor):
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError("modulus must be at least 2")

    def is_finite(self) -> bool:
        return True

    def size(self) -> int:
        return self.modulus

    def zero(self) -> RingElement:
        return RingElement(self, 0)

    def one(self) -> RingElement:
        return RingElement(self, 1)

    def elements(self):
        for r in range(self.modulus):
            yield RingElement(self, r)

    def _canonical(self, value):
        return int(value) % self.modulus

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class PolynomialsOverPrimeField(RingDescriptor):
    characteristic: int

    def __post_init__(self):
        if not _intmath.is_prime(self.characteristic):
            raise DomainError("coefficient field characteristic must be prime")

    def is_finite(self) -> bool:
        return False

    def zero(self) -> RingElement:
        return RingElement(self, _polymath.ZERO)

    def one(self) -> RingElement:
        return RingElement(self, _polymath.ONE)

    def _canonical(self, value):
        if isinstance(value, int):
            value = (value,)
        return _polymath.normalize(value, self.characteristic)

    def __str__(self) -> str:
        return f"GF({self.characteristic})[x]"


@dataclass(frozen=True)
class FiniteProduct(RingDescriptor):
    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli:
            raise DomainError("a product ring needs at least one factor")
        for n in self.moduli:
            if n < 2:
                raise DomainError("every product factor modulus must be at least 2")

    def is_finite(self) -> bool:
        return True

    def size(self) -> int:
        return math.prod(self.moduli)

    def zero(self) -> RingElement:
        return RingElement(self, (0,) * len(self.moduli))

    def one(self) -> RingElement:
        return RingElement(self, (1,) * len(self.moduli))

    def elements(self):
        for tup in _cartesian(*(range(n) for n in self.moduli)):
            yield RingElement(self, tup)

    def _canonical(self, value):
        tup = tuple(value)
        if len(tup) != len(self.moduli):
            raise DomainError("element arity does not match the product ring")
        return tuple(int(v) % n for v, n in zip(tup, self.moduli))

    def __str__(self) -> str:
        return " x ".join(f"Z/{n}" for n in self.moduli)


def same_ring(*objs) -> RingDescriptor:
    rings = {o.ring for o in objs}
    if len(rings) != 1:
        raise RingMismatch(f"operands belong to different rings: {sorted(map(str, rings))}")
    return next(iter(rings))


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class RingElement:
    ring: RingDescriptor
    value: object

    def is_zero(self) -> bool:
        return self == self.ring.zero()

    def is_one(self) -> bool:
        return self == self.ring.one()

    def is_unit(self) -> bool:
        r = self.ring
        if isinstance(r, Integers):
            return self.value in (1, -1)
        if isinstance(r, ModularIntegers):
            return math.gcd(self.value, r.modulus) == 1
        if isinstance(r, PolynomialsOverPrimeField):
            return _polymath.degree(self.value) == 0
        return all(math.gcd(v, n) == 1 for v, n in zip(self.value, r.moduli))

    def __add__(self, other: RingElement) -> RingElement:
        r = same_ring(self, other)
        if isinstance(r, Integers):
            return RingElement(r, self.value + other.value)
        if isinstance(r, ModularIntegers):
            return RingElement(r, (self.value + other.value) % r.modulus)
        if isinstance(r, PolynomialsOverPrimeField):
            return RingElement(r, _polymath.add(self.value, other.value, r.characteristic))
        return RingElement(r, tuple((a + b) % n for a, b, n in zip(self.value, other.value, r.moduli)))

    def __neg__(self) -> RingElement:
        r = self.ring
        if isinstance(r, Integers):
            return RingElement(r, -self.value)
        if isinstance(r, ModularIntegers):
            return RingElement(r, (-self.value) % r.modulus)
        if isinstance(r, PolynomialsOverPrimeField):
            return RingElement(r, _polymath.neg(self.value, r.characteristic))
        return RingElement(r, tuple((-a) % n for a, n in zip(self.value, r.moduli)))

    def __sub__(self, other: RingElement) -> RingElement:
        return self + (-other)

    def __mul__(self, other: RingElement) -> RingElement:
        r = same_ring(self, other)
        if isinstance(r, Integers):
            return RingElement(r, self.value * other.value)
        if isinstance(r, ModularIntegers):
            return RingElement(r, (self.value * other.value) % r.modulus)
        if isinstance(r, PolynomialsOverPrimeField):
            return RingElement(r, _polymath.mul(self.value, other.value, r.characteristic))
        return RingElement(r, tuple((a * b) % n for a, b, n in zip(self.value, other.value, r.moduli)))

    def __pow__(self, e: int) -> RingElement:
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def sort_key(self):
        r = self.ring
        if isinstance(r, Integers):
            return (abs(self.value), self.value)
        if isinstance(r, ModularIntegers):
            return (self.value,)
        if isinstance(r, PolynomialsOverPrimeField):
            return (_polymath.degree(self.value), self.value)
        return self.value

    def __str__(self) -> str:
        r = self.ring
        if isinstance(r, PolynomialsOverPrimeField):
            return _polymath.to_string(self.value)
        if isinstance(r, FiniteProduct):
            return "(" + ",".join(str(v) for v in self.value) + ")"
        return str(self.value)

    def __repr__(self) -> str:
        return f"<{self} in {self.ring}>"


def product_of(elements) -> RingElement:
    """Product of a nonempty iterable of same-ring elements."""
    elements = list(elements)
    ring = same_ring(*elements)
    out = ring.one()
    for e in elements:
        out = out * e
    return out


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    ring: RingDescriptor
    data: object

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_generators(ring: RingDescriptor, elements) -> Ideal:
        """Ideal generated by the given elements (canonicalized)."""
        payloads = [ring.element(e).value if not isinstance(e, RingElement) else e.value for e in elements]
        for e in elements:
            if isinstance(e, RingElement) and e.ring != ring:
                raise RingMismatch("generator from a different ring")
        if isinstance(ring, Integers):
            return Ideal(ring, math.gcd(*payloads) if payloads else 0)
        if isinstance(ring, ModularIntegers):
            return Ideal(ring, math.gcd(ring.modulus, *payloads))
        if isinstance(ring, PolynomialsOverPrimeField):
            g = _polymath.ZERO
            for c in payloads:
                g = _polymath.gcd(g, c, ring.characteristic)
            return Ideal(ring, g)
        divisors = tuple(
            math.gcd(n, *(t[i] for t in payloads)) if payloads else n
            for i, n in enumerate(ring.moduli)
        )
        return Ideal(ring, divisors)

    @staticmethod
    def principal(element: RingElement) -> Ideal:
        return Ideal.from_generators(element.ring, [element])

    @staticmethod
    def zero_ideal(ring: RingDescriptor) -> Ideal:
        return Ideal.from_generators(ring, [])

    @staticmethod
    def unit_ideal(ring: RingDescriptor) -> Ideal:
        return Ideal.principal(ring.one())

    def __post_init__(self):
        r, d = self.ring, self.data
        if isinstance(r, Integers):
            assert isinstance(d, int) and d >= 0
        elif isinstance(r, ModularIntegers):
            assert isinstance(d, int) and 1 <= d <= r.modulus and r.modulus % d == 0
        elif isinstance(r, PolynomialsOverPrimeField):
            assert d == _polymath.ZERO or d[-1] == 1
        else:
            assert len(d) == len(r.moduli)
            assert all(1 <= x <= n and n % x == 0 for x, n in zip(d, r.moduli))

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        r = self.ring
        if isinstance(r, Integers):
            return self.data == 0
        if isinstance(r, ModularIntegers):
            return self.data == r.modulus
        if isinstance(r, PolynomialsOverPrimeField):
            return self.data == _polymath.ZERO
        return all(x == n for x, n in zip(self.data, r.moduli))

    def is_unit(self) -> bool:
        r = self.ring
        if isinstance(r, Integers):
            return self.data == 1
        if isinstance(r, ModularIntegers):
            return self.data == 1
        if isinstance(r, PolynomialsOverPrimeField):
            return self.data == _polymath.ONE
        return all(x == 1 for x in self.data)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def generator_element(self) -> RingElement:
        """The canonical single generator as a ring element."""
        r = self.ring
        if isinstance(r, Integers):
            return RingElement(r, self.data)
        if isinstance(r, ModularIntegers):
            return RingElement(r, self.data % r.modulus)
        if isinstance(r, PolynomialsOverPrimeField):
            return RingElement(r, self.data)
        return RingElement(r, tuple(x % n for x, n in zip(self.data, r.moduli)))

    def generators(self) -> tuple[RingElement, ...]:
        return (self.generator_element(),)

    def component_ideals(self) -> tuple[Ideal, ...]:
        """Per-coordinate ideals of a product-ring ideal."""
        r = self.ring
        if not isinstance(r, FiniteProduct):
            raise DomainError("component_ideals applies to product rings only")
        return tuple(Ideal(ModularIntegers(n), x) for x, n in zip(self.data, r.moduli))

    def contains(self, element: RingElement) -> bool:
        if element.ring != self.ring:
            raise RingMismatch("element from a different ring")
        r = self.ring
        if isinstance(r, Integers):
            return element.value == 0 if self.data == 0 else element.value % self.data == 0
        if isinstance(r, ModularIntegers):
            return element.value % self.data == 0
        if isinstance(r, PolynomialsOverPrimeField):
            if self.data == _polymath.ZERO:
                return element.value == _polymath.ZERO
            return _polymath.divides(self.data, element.value, r.characteristic)
        return all(v % x == 0 for v, x in zip(element.value, self.data))

    def contains_ideal(self, other: Ideal) -> bool:
        same_ring(self, other)
        return self.contains(other.generator_element())

    def elements(self):
        """All elements of the ideal (finite rings only)."""
        r = self.ring
        if isinstance(r, ModularIntegers):
            for k in range(r.modulus // self.data):
                yield RingElement(r, k * self.data % r.modulus)
        elif isinstance(r, FiniteProduct):
            for tup in _cartesian(*(range(0, n, x or n) for x, n in zip(self.data, r.moduli))):
                yield RingElement(r, tuple(v % n for v, n in zip(tup, r.moduli)))
        else:
            raise UnsupportedEnumeration(f"cannot enumerate elements of an ideal of {r}")

    def sort_key(self):
        r = self.ring
        if isinstance(r, Integers):
            return (0, self.data) if self.data else (1, 0)
        if isinstance(r, ModularIntegers):
            return (self.data,)
        if isinstance(r, PolynomialsOverPrimeField):
            if self.data == _polymath.ZERO:
                return (1, -1, ())
            return (0, _polymath.degree(self.data), self.data)
        return self.data

    def __str__(self) -> str:
        r = self.ring
        if isinstance(r, PolynomialsOverPrimeField):
            return f"({_polymath.to_string(self.data)})"
        return f"({self.generator_element()})"

    def __repr__(self) -> str:
        return f"<ideal {self} of {self.ring}>"


# ---------------------------------------------------------------------------
# lattice operations


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    """Smallest ideal containing both: generated by the union of generators."""
    r = same_ring(a, b)
    if isinstance(r, Integers):
        return Ideal(r, math.gcd(a.data, b.data))
    if isinstance(r, ModularIntegers):
        return Ideal(r, math.gcd(a.data, b.data))
    if isinstance(r, PolynomialsOverPrimeField):
        return Ideal(r, _polymath.gcd(a.data, b.data, r.characteristic))
    return Ideal(r, tuple(math.gcd(x, y) for x, y in zip(a.data, b.data)))


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    r = same_ring(a, b)
    if isinstance(r, Integers):
        return Ideal(r, math.lcm(a.data, b.data))
    if isinstance(r, ModularIntegers):
        return Ideal(r, math.lcm(a.data, b.data))
    if isinstance(r, PolynomialsOverPrimeField):
        return Ideal(r, _polymath.lcm(a.data, b.data, r.characteristic))
    return Ideal(r, tuple(math.lcm(x, y) for x, y in zip(a.data, b.data)))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    r = same_ring(a, b)
    if isinstance(r, Integers):
        return Ideal(r, a.data * b.data)
    if isinstance(r, ModularIntegers):
        return Ideal(r, math.gcd(a.data * b.data, r.modulus))
    if isinstance(r, PolynomialsOverPrimeField):
        return Ideal(r, _polymath.mul(a.data, b.data, r.characteristic))
    return Ideal(r, tuple(math.gcd(x * y, n) for x, y, n in zip(a.data, b.data, r.moduli)))


def ideal_colon(a: Ideal, b: Ideal) -> Ideal:
    """The colon ideal (a : b) = {x : x*b ⊆ a}."""
    r = same_ring(a, b)
    if isinstance(r, Integers):
        if b.data == 0:
            return Ideal(r, 1)
        if a.data == 0:
            return Ideal(r, 0)
        return Ideal(r, a.data // math.gcd(a.data, b.data))
    if isinstance(r, ModularIntegers):
        return Ideal(r, a.data // math.gcd(a.data, b.data))
    if isinstance(r, PolynomialsOverPrimeField):
        p = r.characteristic
        if b.data == _polymath.ZERO:
            return Ideal(r, _polymath.ONE)
        if a.data == _polymath.ZERO:
            return Ideal(r, _polymath.ZERO)
        g = _polymath.gcd(a.data, b.data, p)
        return Ideal(r, _polymath.monic(_polymath.divmod_poly(a.data, g, p)[0], p))
    return Ideal(r, tuple(x // math.gcd(x, y) for x, y in zip(a.data, b.data)))


def ideal_colon_element(a: Ideal, x: RingElement) -> Ideal:
    """(a : x) = {y : y*x ∈ a}."""
    if x.ring != a.ring:
        raise RingMismatch("element from a different ring")
    return ideal_colon(a, Ideal.principal(x))


def radical(a: Ideal) -> Ideal:
    """Smallest radical ideal containing a: all x with some power in a."""
    r = a.ring
    if isinstance(r, Integers):
        return Ideal(r, 0 if a.data == 0 else _intmath.radical_int(a.data))
    if isinstance(r, ModularIntegers):
        # rad(dZ/nZ) contracts to rad(dZ)/nZ; the squarefree part of d divides n
        return Ideal(r, _intmath.radical_int(a.data))
    if isinstance(r, PolynomialsOverPrimeField):
        if a.data == _polymath.ZERO:
            return a
        return Ideal(r, _polymath.radical(a.data, r.characteristic))
    return Ideal(r, tuple(_intmath.radical_int(x) for x in a.data))


def is_prime_ideal(a: Ideal) -> bool:
    """Prime: proper, and xy ∈ a implies x ∈ a or y ∈ a."""
    r = a.ring
    if isinstance(r, Integers):
        return a.data == 0 or _intmath.is_prime(a.data)
    if isinstance(r, ModularIntegers):
        return _intmath.is_prime(a.data)
    if isinstance(r, PolynomialsOverPrimeField):
        if a.data == _polymath.ZERO:
            return True
        return _polymath.is_irreducible(a.data, r.characteristic)
    proper = [i for i, x in enumerate(a.data) if x > 1]
    if len(proper) != 1:
        return False
    i = proper[0]
    return _intmath.is_prime(a.data[i])


def is_primary_ideal(a: Ideal) -> bool:
    """Primary: proper, and xy ∈ a implies x ∈ a or y ∈ rad(a)."""
    r = a.ring
    if isinstance(r, Integers):
        return a.data == 0 or (a.data > 1 and _intmath.is_prime_power(a.data))
    if isinstance(r, ModularIntegers):
        return a.data > 1 and _intmath.is_prime_power(a.data)
    if isinstance(r, PolynomialsOverPrimeField):
        if a.data == _polymath.ZERO:
            return True
        facs = _polymath.factorize(a.data, r.characteristic) if a.data != _polymath.ONE else ()
        return len(facs) == 1
    proper = [i for i, x in enumerate(a.data) if x > 1]
    if len(proper) != 1:
        return False
    i = proper[0]
    return _intmath.is_prime_power(a.data[i])


def enumerate_divisor_ideals(a: Ideal) -> list[Ideal]:
    """All ideals containing a, in canonical order.

    Complete for this catalog: every ideal is principal and the ideals above a
    principal ideal correspond to divisors of its generator.  Raises for the
    zero ideal of an infinite ring, whose lattice is infinite.
    """
    r = a.ring
    if isinstance(r, Integers):
        if a.data == 0:
            raise UnsupportedEnumeration("the zero ideal of Z has infinitely many divisors")
        return [Ideal(r, d) for d in _intmath.divisors(a.data)]
    if isinstance(r, ModularIntegers):
        return [Ideal(r, d) for d in _intmath.divisors(a.data)]
    if isinstance(r, PolynomialsOverPrimeField):
        if a.data == _polymath.ZERO:
            raise UnsupportedEnumeration("the zero ideal of a polynomial ring has infinitely many divisors")
        return [Ideal(r, f) for f in _polymath.monic_divisors(a.data, r.characteristic)]
    lists = [_intmath.divisors(x) for x in a.data]
    return [Ideal(r, tup) for tup in _cartesian(*lists)]


# operator sugar: I + J, I & J, I * J
Ideal.__add__ = ideal_sum
Ideal.__and__ = ideal_intersection
Ideal.__mul__ = ideal_product
Ideal.colon = ideal_colon
Ideal.colon_element = ideal_colon_element
Ideal.radical = radical
Ideal.is_prime = is_prime_ideal
Ideal.is_primary = is_primary_ideal
Ideal.divisor_ideals = enumerate_divisor_ideals


def intersect_all(ideals, ring: RingDescriptor | None = None) -> Ideal:
    """Intersection of an iterable of ideals; the unit ideal if empty."""
    ideals = list(ideals)
    if not ideals:
        if ring is None:
            raise DomainError("empty intersection needs an explicit ring")
        return Ideal.unit_ideal(ring)
    out = ideals[0]
    for i in ideals[1:]:
        out = ideal_intersection(out, i)
    return out
