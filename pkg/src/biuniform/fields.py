"""Exact arithmetic in prime fields GF(p) and their extensions GF(p^s).

An element of GF(p^s) is an immutable tuple of s residues in [0, p),
listed in ascending powers of the generator, so equality is tuple
equality and every value has exactly one encoding.  Prime fields are the
s == 1 case and carry no modulus; extension fields reduce products
modulo a monic irreducible polynomial of degree s.

The module also bundles the number theory the rest of the package leans
on: Miller-Rabin primality and next-prime search, quadratic residue
tests by Euler's criterion, and a deterministic ascending search for
irreducible polynomials checked with Rabin's criterion.

Everything here is a pure function on immutable values; concurrent use
needs no coordination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union


class FieldMismatchError(ValueError):
    """Raised when operands belong to different fields."""


# ---------------------------------------------------------------------------
# Integer primality
# ---------------------------------------------------------------------------

# Deterministic Miller-Rabin witness set, complete for n < 3.3e24 > 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_ROUNDS_LARGE = 40


def _mr_composite_witness(n: int, a: int) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 2**64; above that, 40 pseudorandom rounds seeded
    from n itself (error probability < 4**-40, and reproducible).
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n < 2**64:
        witnesses: Sequence[int] = _MR_WITNESSES
    else:
        rng = random.Random(n)
        witnesses = [rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_LARGE)]
    return not any(_mr_composite_witness(n, a) for a in witnesses)


def next_prime(lower: int) -> int:
    """Smallest prime strictly greater than ``lower`` (arbitrary size)."""
    if lower < 2:
        raise ValueError("lower bound must be at least 2")
    n = lower + 1
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


# ---------------------------------------------------------------------------
# Polynomials over GF(p), as trimmed ascending coefficient lists
# ---------------------------------------------------------------------------


def _ptrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        ai = a[i] if i < len(a) else 0
        bi = b[i] if i < len(b) else 0
        out[i] = (ai - bi) % p
    return _ptrim(out)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list, list]:
    rem = list(a)
    _ptrim(rem)
    db = len(b) - 1
    lead_inv = pow(b[-1], -1, p)
    quo = [0] * max(0, len(rem) - db)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = rem[-1] * lead_inv % p
        quo[shift] = factor
        for j in range(db + 1):
            rem[shift + j] = (rem[shift + j] - factor * b[j]) % p
        _ptrim(rem)
    return _ptrim(quo), rem


def _pmod(a: Sequence[int], b: Sequence[int], p: int) -> list:
    return _pdivmod(a, b, p)[1]


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list:
    r0, r1 = _ptrim(list(a)), _ptrim(list(b))
    while r1:
        r0, r1 = r1, _pmod(r0, r1, p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [c * inv % p for c in r0]
    return r0


def _ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list:
    result = [1]
    acc = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), mod, p)
        acc = _pmod(_pmul(acc, acc, p), mod, p)
        e >>= 1
    return result


def _pinvmod(a: Sequence[int], mod: Sequence[int], p: int) -> list:
    # extended Euclid; mod is irreducible so the gcd is a nonzero constant
    r0, r1 = _ptrim(list(mod)), _ptrim(list(a))
    t0: list = []
    t1: list = [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    c_inv = pow(r0[0], -1, p)
    return [c * c_inv % p for c in t0]


# ---------------------------------------------------------------------------
# Irreducibility (Rabin's criterion) and deterministic search
# ---------------------------------------------------------------------------


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test: x^(p^s) == x mod f, and for every prime r | s the
    polynomial x^(p^(s/r)) - x is coprime with f."""
    f = [c % p for c in coeffs]
    s = len(_ptrim(list(f))) - 1
    if s < 1:
        return False
    x = [0, 1]
    if _ppowmod(x, p**s, f, p) != _pmod(x, f, p):
        return False
    for r in _prime_factors(s):
        g = _psub(_ppowmod(x, p ** (s // r), f, p), _pmod(x, f, p), p)
        if len(_pgcd(f, g, p)) != 1:
            return False
    return True


@dataclass(frozen=True)
class PrimePoly:
    """Monic polynomial over GF(p), coefficients in ascending powers."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise ValueError("coefficients must lie in [0, p)")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def find_irreducible(q0: int, s: int) -> PrimePoly:
    """Monic irreducible of degree s over GF(q0), found by scanning the
    non-leading coefficient vectors in ascending base-q0 counter order."""
    if not is_prime(q0):
        raise ValueError("base characteristic must be prime")
    if s < 2:
        raise ValueError("degree must be at least 2")
    v = 0
    while True:
        digits = []
        rest = v
        for _ in range(s):
            digits.append(rest % q0)
            rest //= q0
        if rest == 0:
            candidate = digits + [1]
            if is_irreducible(candidate, q0):
                return PrimePoly(q0, tuple(candidate))
        v += 1


# ---------------------------------------------------------------------------
# Fields and elements
# ---------------------------------------------------------------------------


class Field:
    """Finite field of order p**s with canonical element encoding.

    ``Field(p)`` is the prime field.  ``Field(p, modulus)`` is the
    extension defined by a monic irreducible ``modulus`` of degree >= 2,
    given as ascending coefficients over GF(p).
    """

    __slots__ = ("p", "s", "modulus")

    def __init__(self, p: int, modulus: Optional[Sequence[int]] = None):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        if modulus is None:
            self.s = 1
            self.modulus = None
        else:
            mod = tuple(int(c) for c in modulus)
            if len(mod) < 3:
                raise ValueError("modulus must have degree >= 2; omit it for a prime field")
            if any(not 0 <= c < p for c in mod):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if mod[-1] != 1:
                raise ValueError("modulus must be monic")
            if not is_irreducible(mod, p):
                raise ValueError("modulus is reducible")
            self.s = len(mod) - 1
            self.modulus = mod

    # -- basic protocol ------------------------------------------------

    @property
    def order(self) -> int:
        return self.p**self.s

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.p == other.p and self.s == other.s and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.s})"

    # -- element constructors -------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.s)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.s - 1))

    def from_int(self, value: int) -> "FieldElement":
        """Embed an integer via the prime subfield (reducing mod p)."""
        return FieldElement(self, (value % self.p,) + (0,) * (self.s - 1))

    def element(self, value: Union[int, Sequence[int]]) -> "FieldElement":
        if isinstance(value, int):
            return self.from_int(value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.s:
            raise ValueError(f"at most {self.s} coefficients expected")
        coeffs += [0] * (self.s - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def generator(self) -> "FieldElement":
        """The class of x in GF(p)[x]/(modulus); only for extensions."""
        if self.s == 1:
            raise ValueError("prime fields have no polynomial generator")
        return FieldElement(self, (0, 1) + (0,) * (self.s - 2))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in ascending canonical order."""
        for v in range(self.order):
            coeffs = []
            rest = v
            for _ in range(self.s):
                coeffs.append(rest % self.p)
                rest //= self.p
            yield FieldElement(self, tuple(coeffs))

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.s)))

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "p": str(self.p),
            "s": self.s,
            "modulus": [str(c) for c in self.modulus] if self.modulus else None,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Field":
        modulus = data.get("modulus")
        if modulus is not None:
            modulus = [int(c) for c in modulus]
        return cls(int(data["p"]), modulus)

    def element_from_json(self, data: Sequence[str]) -> "FieldElement":
        coeffs = tuple(int(c) for c in data)
        if len(coeffs) != self.s:
            raise ValueError(f"expected {self.s} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficient out of range")
        return FieldElement(self, coeffs)

    # -- arithmetic kernels on raw coefficient tuples --------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        p = self.p
        if self.s == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * self.s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        return self._reduce(prod)

    def _reduce(self, coeffs: list) -> tuple:
        p, s, mod = self.p, self.s, self.modulus
        c = list(coeffs) + [0] * max(0, s - len(coeffs))
        for i in range(len(c) - 1, s - 1, -1):
            top = c[i]
            if top:
                c[i] = 0
                for j in range(s):
                    c[i - s + j] = (c[i - s + j] - top * mod[j]) % p
        return tuple(c[:s])

    def _inv(self, a):
        if all(x == 0 for x in a):
            raise ZeroDivisionError("cannot invert the zero element")
        if self.s == 1:
            return (pow(a[0], -1, self.p),)
        inv = _pinvmod(list(a), list(self.modulus), self.p)
        inv += [0] * (self.s - len(inv))
        return tuple(inv)

    def _pow(self, a, e: int):
        if e < 0:
            a = self._inv(a)
            e = -e
        if self.s == 1:
            return (pow(a[0], e, self.p),)
        result = self.one.coeffs
        acc = a
        while e:
            if e & 1:
                result = self._mul(result, acc)
            acc = self._mul(acc, acc)
            e >>= 1
        return result


class FieldElement:
    """Immutable field element; a length-s tuple of residues."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    def _same_field(self, other: "FieldElement"):
        if self.field != other.field:
            raise FieldMismatchError(f"operands in {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field._add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field._sub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field, self.field._mul(self.coeffs, self.field._inv(other.coeffs)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.coeffs))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement(self.field, self.field._pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.s))

    def __repr__(self):
        if self.field.s == 1:
            return str(self.coeffs[0])
        return repr(list(self.coeffs))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


# ---------------------------------------------------------------------------
# Quadratic residues
# ---------------------------------------------------------------------------


def _require_odd_prime_field(field: Field):
    if field.s != 1 or field.p == 2:
        raise ValueError("quadratic character is defined here only for odd prime fields")


def is_square(a: FieldElement) -> bool:
    """Euler's criterion: a^((q-1)/2) == 1, for nonzero a in an odd prime field."""
    _require_odd_prime_field(a.field)
    if not a:
        raise ValueError("zero input: the quadratic character of 0 is undefined")
    q = a.field.p
    return pow(a.coeffs[0], (q - 1) // 2, q) == 1


def nonzero_squares(field: Field) -> list[FieldElement]:
    """The (q-1)/2 nonzero squares of an odd prime field, ascending."""
    _require_odd_prime_field(field)
    q = field.p
    residues = {i * i % q for i in range(1, q // 2 + 1)}
    return [field.from_int(r) for r in sorted(residues)]


def find_nonsquare_scalar(field: Field, m: int, ell: int) -> FieldElement:
    """Scaling constant c such that (-1)**(m + ell) * c is a non-square.

    Takes the smallest non-square nu by ascending scan and returns
    (-1)**(m + ell) * nu, so the defining property holds regardless of
    the parity of m + ell.
    """
    _require_odd_prime_field(field)
    nu = None
    for v in range(2, field.p):
        if not is_square(field.from_int(v)):
            nu = field.from_int(v)
            break
    assert nu is not None  # every odd prime field has a non-square
    return nu if (m + ell) % 2 == 0 else -nu
