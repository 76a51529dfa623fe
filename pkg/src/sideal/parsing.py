"""Text forms for rings, elements, ideals, and multiplicative sets.

Grammar (whitespace-insensitive):

  ring      :=  Z  |  Z/12  |  GF(5)[x]  |  Z/2 x Z/2 x Z/2
  ideal     :=  (6)  |  (4, 6)  |  (x^2+1)  |  (0,1,0)  |  ((0,1),(1,0))
  mult set  :=  units  |  complement(3)  |  complement(2,3)  |  gen(2,5)
                |  set{(1,1,1),(1,0,0)}

Polynomial literals are sums of monomials like 2x^3+x+4.  Errors carry the
0-based offset of the offending character and, when known, the expected
token.
"""

from __future__ import annotations

from . import _polymath
from .errors import ParseError
from .multiplicative_sets import (
    ComplementOfPrimes,
    ExplicitFinite,
    GeneratedBy,
    MultiplicativeSet,
    UnitsOnly,
)
from .ring_core import (
    FiniteProduct,
    Ideal,
    Integers,
    ModularIntegers,
    PolynomialsOverPrimeField,
    RingDescriptor,
    RingElement,
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, expected: str | None = None):
        raise ParseError(message, self.pos, expected)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            self.error(f"expected {literal!r}", expected=literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer", expected="integer")
        return int(self.text[start : self.pos])

    def done(self) -> None:
        self.skip_ws()
        if self.pos < len(self.text):
            self.error(f"unexpected trailing input {self.text[self.pos:]!r}")


def parse_ring(text: str) -> RingDescriptor:
    s = _Scanner(text)
    if s.take("GF"):
        s.expect("(")
        p = s.integer()
        s.expect(")")
        s.expect("[")
        s.expect("x")
        s.expect("]")
        s.done()
        return PolynomialsOverPrimeField(p)
    moduli = []
    while True:
        s.expect("Z")
        if s.take("/"):
            moduli.append(s.integer())
        else:
            if moduli:
                s.error("plain Z cannot appear inside a product", expected="Z/n")
            s.done()
            return Integers()
        if not s.take("x"):
            break
    s.done()
    if len(moduli) == 1:
        return ModularIntegers(moduli[0])
    return FiniteProduct(tuple(moduli))


def _parse_poly(s: _Scanner, p: int):
    """Sum of monomials: coefficient, x, x^k, or coefficient*x^k forms."""
    coeffs: dict[int, int] = {}
    sign = 1
    if s.take("-"):
        sign = -1
    elif s.take("+"):
        pass
    while True:
        s.skip_ws()
        coefficient = 1
        got_number = False
        if s.peek().isdigit():
            coefficient = s.integer()
            got_number = True
        s.take("*")
        if s.take("x"):
            exponent = 1
            if s.take("^"):
                exponent = s.integer()
        else:
            if not got_number:
                s.error("expected a monomial", expected="coefficient or x")
            exponent = 0
        coeffs[exponent] = coeffs.get(exponent, 0) + sign * coefficient
        if s.take("+"):
            sign = 1
        elif s.take("-"):
            sign = -1
        else:
            break
    top = max(coeffs, default=0)
    return _polymath.normalize(tuple(coeffs.get(i, 0) for i in range(top + 1)), p)


def parse_element_from(s: _Scanner, ring: RingDescriptor) -> RingElement:
    if isinstance(ring, (Integers, ModularIntegers)):
        return ring.element(s.integer())
    if isinstance(ring, PolynomialsOverPrimeField):
        return ring.element(_parse_poly(s, ring.characteristic))
    s.expect("(")
    coords = [s.integer()]
    while s.take(","):
        coords.append(s.integer())
    s.expect(")")
    if len(coords) != len(ring.moduli):
        s.error(f"expected {len(ring.moduli)} coordinates, got {len(coords)}")
    return ring.element(tuple(coords))


def parse_element(text: str, ring: RingDescriptor) -> RingElement:
    s = _Scanner(text)
    x = parse_element_from(s, ring)
    s.done()
    return x


def parse_ideal(text: str, ring: RingDescriptor) -> Ideal:
    s = _Scanner(text)
    s.expect("(")
    generators = []
    if isinstance(ring, FiniteProduct) and s.peek() != "(":
        # bare coordinate list: (0,1,0) is one generator of the product ring
        coords = [s.integer()]
        while s.take(","):
            coords.append(s.integer())
        if len(coords) != len(ring.moduli):
            s.error(f"expected {len(ring.moduli)} coordinates, got {len(coords)}")
        generators.append(ring.element(tuple(coords)))
    else:
        generators.append(parse_element_from(s, ring))
        while s.take(","):
            generators.append(parse_element_from(s, ring))
    s.expect(")")
    s.done()
    return Ideal.from_generators(ring, generators)


def parse_mult_set(text: str, ring: RingDescriptor) -> MultiplicativeSet:
    s = _Scanner(text)
    if s.take("units"):
        s.done()
        return UnitsOnly(ring)
    if s.take("complement"):
        s.expect("(")
        primes = [parse_element_from(s, ring)]
        while s.take(","):
            primes.append(parse_element_from(s, ring))
        s.expect(")")
        s.done()
        return ComplementOfPrimes(ring, tuple(primes))
    if s.take("gen"):
        s.expect("(")
        generators = [parse_element_from(s, ring)]
        while s.take(","):
            generators.append(parse_element_from(s, ring))
        s.expect(")")
        s.done()
        return GeneratedBy(ring, tuple(generators))
    if s.take("set"):
        s.expect("{")
        members = [parse_element_from(s, ring)]
        while s.take(","):
            members.append(parse_element_from(s, ring))
        s.expect("}")
        s.done()
        return ExplicitFinite(ring, tuple(members))
    s.error("expected a multiplicative set", expected="units|complement|gen|set")
