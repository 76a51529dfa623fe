"""Polynomial arithmetic over a prime field F_p.

A polynomial is a tuple of coefficients in [0, p), ascending degree, with no
trailing zeros; () is the zero polynomial.  This mirrors the usual dense
coefficient-list representation and makes equality and hashing structural.

Factorization is deterministic trial division over monic polynomials of lower
degree, enumerated by (degree, coefficient tuple); no randomized algorithms.
"""

from __future__ import annotations

from itertools import product as _cartesian

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)


def normalize(coeffs, p: int) -> Poly:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    """Degree of f, with degree(0) = -1."""
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return normalize([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def neg(f: Poly, p: int) -> Poly:
    return tuple((-c) % p for c in f)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    return add(f, neg(g, p), p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return normalize(out, p)


def scale(f: Poly, c: int, p: int) -> Poly:
    return normalize([a * c for a in f], p)


def divmod_poly(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], p - 2, p)
    rem = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(rem) >= len(g) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g):
            break
        shift = len(rem) - len(g)
        factor = rem[-1] * inv_lead % p
        q[shift] = factor
        for i, b in enumerate(g):
            rem[shift + i] = (rem[shift + i] - factor * b) % p
    return normalize(q, p), normalize(rem, p)


def divides(g: Poly, f: Poly, p: int) -> bool:
    """Whether g divides f (g ≠ 0)."""
    if not g:
        return not f
    return divmod_poly(f, g, p)[1] == ZERO


def monic(f: Poly, p: int) -> Poly:
    if not f or f[-1] == 1:
        return f
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, divmod_poly(f, g, p)[1]
    return monic(f, p)


def lcm(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ZERO
    d = gcd(f, g, p)
    return monic(divmod_poly(mul(f, g, p), d, p)[0], p)


def pow_poly(f: Poly, e: int, p: int) -> Poly:
    out = ONE
    base = f
    while e:
        if e & 1:
            out = mul(out, base, p)
        base = mul(base, base, p)
        e >>= 1
    return out


def monic_polys_of_degree(d: int, p: int):
    """All monic degree-d polynomials, ascending lexicographic coefficient order."""
    for lower in _cartesian(range(p), repeat=d):
        yield lower + (1,)


def residues_mod(m: Poly, p: int):
    """All residues modulo a nonzero m: polynomials of degree < deg(m)."""
    if not m:
        raise ValueError("zero modulus")
    for coeffs in _cartesian(range(p), repeat=degree(m)):
        yield normalize(coeffs, p)


def factorize(f: Poly, p: int) -> tuple[tuple[Poly, int], ...]:
    """Factor a nonzero f into monic irreducibles ((g, e), ...), sorted by
    (degree, coefficients).  Constant factors are dropped (units)."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    f = monic(f, p)
    out: dict[Poly, int] = {}
    d = 1
    while degree(f) >= 1:
        if d > degree(f) // 2:
            out[f] = out.get(f, 0) + 1
            break
        found = False
        for g in monic_polys_of_degree(d, p):
            if divides(g, f, p):
                e = 0
                while divides(g, f, p):
                    f = divmod_poly(f, g, p)[0]
                    e += 1
                out[g] = out.get(g, 0) + e
                found = True
                break
        if not found:
            d += 1
    return tuple(sorted(out.items(), key=lambda t: (degree(t[0]), t[0])))


def is_irreducible(f: Poly, p: int) -> bool:
    if degree(f) < 1:
        return False
    for d in range(1, degree(f) // 2 + 1):
        for g in monic_polys_of_degree(d, p):
            if divides(g, f, p):
                return False
    return True


def monic_divisors(f: Poly, p: int) -> list[Poly]:
    """All monic divisors of nonzero f, sorted by (degree, coefficients)."""
    ds = [ONE]
    for g, e in factorize(f, p):
        ds = [mul(d, pow_poly(g, k, p), p) for d in ds for k in range(e + 1)]
    return sorted(set(ds), key=lambda q: (degree(q), q))


def radical(f: Poly, p: int) -> Poly:
    """Product of the distinct monic irreducible factors of nonzero f."""
    out = ONE
    for g, _ in factorize(f, p):
        out = mul(out, g, p)
    return out


def to_string(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{var}" if c == 1 else f"{c}{var}")
        else:
            terms.append(f"{var}^{i}" if c == 1 else f"{c}{var}^{i}")
    return "+".join(terms)
