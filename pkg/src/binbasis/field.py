"""Exact arithmetic in GF(2^m) for m <= 32.

Field elements are plain ints: bit i of an element is the coefficient of
x^i in its polynomial representative modulo the field's irreducible
modulus. Addition is XOR; multiplication is carry-less multiplication
followed by modular reduction, served from exp/log tables once the field
is small enough to afford them.
"""

from __future__ import annotations

import functools

# Largest degree for which exp/log multiplication tables are built.
_TABLE_MAX_DEGREE = 16


def _poly_mul_gf2(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials given as bit masks."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod_gf2(a: int, mod: int) -> int:
    """Remainder of a modulo mod in GF(2)[x]."""
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def _poly_gcd_gf2(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod_gf2(a, b)
    return a


def is_irreducible(poly: int, degree: int) -> bool:
    """Whether a degree-`degree` polynomial over GF(2) is irreducible.

    Checks gcd(x^(2^k) - x, poly) = 1 for k <= degree/2 and
    x^(2^degree) = x modulo poly.
    """
    if poly.bit_length() - 1 != degree:
        return False
    x = _poly_mod_gf2(2, poly)
    t = x
    for k in range(1, degree + 1):
        t = _poly_mod_gf2(_poly_mul_gf2(t, t), poly)
        if k <= degree // 2 and _poly_gcd_gf2(t ^ x, poly) != 1:
            return False
    return t == x


@functools.lru_cache(maxsize=None)
def canonical_modulus(degree: int) -> int:
    """Lexicographically smallest irreducible polynomial of the degree."""
    if not 1 <= degree <= 32:
        raise ValueError(f"degree must be in 1..32, got {degree}")
    for candidate in range(1 << degree, 1 << (degree + 1)):
        if is_irreducible(candidate, degree):
            return candidate
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


class Field:
    """GF(2^m) with a fixed irreducible modulus.

    Immutable after construction; all operations are pure functions of
    their arguments, so instances are safe to share across threads.
    """

    def __init__(self, degree: int, modulus: int | None = None):
        if not 1 <= degree <= 32:
            raise ValueError(f"degree must be in 1..32, got {degree}")
        if modulus is None:
            modulus = canonical_modulus(degree)
        elif not is_irreducible(modulus, degree):
            raise ValueError(
                f"0x{modulus:x} is not an irreducible polynomial of degree {degree}"
            )
        self.degree = degree
        self.modulus = modulus
        self.order = 1 << degree
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None
        if degree <= _TABLE_MAX_DEGREE:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_spec(cls, text: str) -> "Field":
        """Parse a field spec string of the form `<m>:0x<modulus-hex>`."""
        try:
            left, right = text.split(":")
            degree = int(left)
            if not right.lower().startswith("0x"):
                raise ValueError
            modulus = int(right, 16)
        except ValueError:
            raise ValueError(f"bad field spec {text!r}; expected '<m>:0x<hex>'")
        return cls(degree, modulus)

    def spec_string(self) -> str:
        return f"{self.degree}:0x{self.modulus:x}"

    def __repr__(self) -> str:
        return f"Field({self.spec_string()!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.modulus))

    # -- raw arithmetic ------------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        """Field addition: XOR of representatives. Self-inverse."""
        return a ^ b

    def _mul_raw(self, a: int, b: int) -> int:
        return _poly_mod_gf2(_poly_mul_gf2(a, b), self.modulus)

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse, a^(2^m - 2) for nonzero a."""
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self._exp is not None:
            return self._exp[self.order - 1 - self._log[a]]
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        """a^e by square-and-multiply; e >= 0."""
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 0 if e else 1
        if self._exp is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def pow2k(self, a: int, d: int) -> int:
        """Frobenius power a^(2^d) by d squarings; GF(2)-linear in a."""
        if d < 0:
            raise ValueError("negative Frobenius exponent")
        for _ in range(d):
            a = self.mul(a, a)
        return a

    # -- subfield structure --------------------------------------------------

    def trace_rel(self, a: int, sub_deg: int, sup_deg: int) -> int:
        """Relative trace from GF(2^sup_deg) down to GF(2^sub_deg).

        Tr(a) = sum of a^(2^(sub_deg * j)) for j < sup_deg/sub_deg.
        """
        if sup_deg % sub_deg != 0 or self.degree % sup_deg != 0:
            raise ValueError(
                f"need {sub_deg} | {sup_deg} | {self.degree} for a relative trace"
            )
        if not self.in_subfield(a, sup_deg):
            raise ValueError(f"element {a:#x} is not in GF(2^{sup_deg})")
        acc = a
        t = a
        for _ in range(sup_deg // sub_deg - 1):
            t = self.pow2k(t, sub_deg)
            acc ^= t
        return acc

    def in_subfield(self, a: int, d: int) -> bool:
        """Whether a lies in the subfield GF(2^d); requires d | m."""
        if d <= 0 or self.degree % d != 0:
            raise ValueError(f"{d} does not divide the field degree {self.degree}")
        return self.pow2k(a, d) == a

    def primitive_element(self) -> int:
        """The element of smallest bit pattern with order 2^m - 1."""
        if self._primitive is None:
            self._primitive = self._find_primitive()
        return self._primitive

    def _find_primitive(self) -> int:
        group_order = self.order - 1
        if group_order == 1:
            return 1
        primes = _factorize(group_order)
        for a in range(2, self.order):
            if all(self._pow_raw(a, group_order // p) != 1 for p in primes):
                return a
        raise AssertionError("no primitive element found")  # unreachable

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def subfield_generator(self, d: int) -> int:
        """Generator of GF(2^d)*: the primitive element to the cofactor power."""
        if d <= 0 or self.degree % d != 0:
            raise ValueError(f"{d} does not divide the field degree {self.degree}")
        cofactor = (self.order - 1) // ((1 << d) - 1)
        return self.pow(self.primitive_element(), cofactor)

    # -- internals -----------------------------------------------------------

    def _build_tables(self) -> None:
        g = self.primitive_element()
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        t = 1
        for i in range(n):
            exp[i] = t
            exp[i + n] = t
            log[t] = i
            t = self._mul_raw(t, g)
        self._exp = exp
        self._log = log


_FIELDS: dict[tuple[int, int | None], Field] = {}


def get_field(degree: int, modulus: int | None = None) -> Field:
    """Shared Field instance (table construction is done once per spec)."""
    key = (degree, modulus)
    if key not in _FIELDS:
        field = Field(degree, modulus)
        _FIELDS[key] = field
        _FIELDS[(degree, field.modulus)] = field
    return _FIELDS[key]


def element_to_hex(a: int) -> str:
    """Serialized element form: lowercase hex, no prefix."""
    return format(a, "x")


def element_from_hex(text: str) -> int:
    value = int(text, 16)
    if value < 0:
        raise ValueError(f"negative element {text!r}")
    return value
