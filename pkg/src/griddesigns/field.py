"""Exact arithmetic in the finite field GF(p^k).

The field is modeled as Z_p[x]/(f(x)) for a primitive monic modulus f, so the
residue class of x generates the multiplicative group.  Elements are length-k
coefficient vectors over Z_p (coefficient i multiplies x^i).  Construction
precomputes the full power table of x and its inverse log table; multiplication,
exponentiation, and discrete logs are table lookups, while plain polynomial
reduction is kept around as the table builder.

Beyond the ring operations the module provides the linear-algebra helpers used
by the design constructions: Z_p-spans, basis tests, and the little-endian
base-p integer encoding that turns elements into graph vertex ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_MAX_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial arithmetic on little-endian coefficient tuples
# ---------------------------------------------------------------------------

def poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int],
                 p: int) -> tuple[int, ...]:
    """Product of two length-k coefficient vectors, reduced by the monic modulus.

    This is the reduction-based multiply: it builds the tables and doubles as
    an independent cross-check for the table-based product in tests.
    """
    k = len(a)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # cancel degrees 2k-2 .. k using prod[i] -= c * x^(i-k) * modulus
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i]
        if c:
            base = i - k
            for j in range(k + 1):
                prod[base + j] = (prod[base + j] - c * modulus[j]) % p
    return tuple(prod[:k])


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a by b over Z_p (b need not be monic; leading coeff != 0)."""
    rem = [c % p for c in a]
    db = len(b) - 1
    inv_lead = pow(b[db], -1, p)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            factor = (c * inv_lead) % p
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - factor * b[j]) % p
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def _is_irreducible(modulus: Sequence[int], p: int, k: int) -> bool:
    """Trial division by all monic polynomials of degree 1..k//2."""
    for d in range(1, k // 2 + 1):
        for v in range(p**d):
            divisor = _digits(v, p, d) + (1,)
            rem = _poly_rem(modulus, divisor, p)
            if rem == (0,):
                return False
    return True


def _digits(v: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(v % p)
        v //= p
    return tuple(out)


def _x_coeffs(modulus: Sequence[int], p: int, k: int) -> tuple[int, ...]:
    """The residue class of x as a reduced coefficient vector."""
    if k == 1:
        return ((-modulus[0]) % p,)
    return (0, 1) + (0,) * (k - 2)


def _generator_powers(modulus: Sequence[int], p: int,
                      k: int) -> list[tuple[int, ...]] | None:
    """Successive powers of x mod the modulus, or None when x has order < p^k-1.

    Order exactly p^k-1 forces every nonzero residue to be a power of x, which
    simultaneously certifies irreducibility and primitivity.
    """
    q = p**k
    one = (1,) + (0,) * (k - 1)
    x = _x_coeffs(modulus, p, k)
    powers = [one]
    cur = x
    while cur != one:
        powers.append(cur)
        if len(powers) > q - 1:
            return None
        cur = poly_mul_mod(cur, x, modulus, p)
    return powers if len(powers) == q - 1 else None


# ---------------------------------------------------------------------------
# field spec and elements
# ---------------------------------------------------------------------------

class FieldSpec:
    """An instantiated GF(p^k): modulus plus precomputed power/log tables.

    Immutable after construction; safe to share across threads and processes.
    Use :func:`make_field` instead of calling this directly.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...],
                 powers: list[tuple[int, ...]]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p**k
        # power_table[e] = integer encoding of x^e, e in [0, p^k-1)
        self.power_table: tuple[int, ...] = tuple(
            self._encode_coeffs(c) for c in powers)
        log_table: list[int | None] = [None] * self.order
        for e, enc in enumerate(self.power_table):
            log_table[enc] = e
        self.log_table: tuple[int | None, ...] = tuple(log_table)
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))
        self.x = self.decode(self.power_table[1 % (self.order - 1)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.k}), modulus={self.modulus})"

    def _encode_coeffs(self, coeffs: Sequence[int]) -> int:
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    # -- element construction ------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def decode(self, n: int) -> FieldElement:
        """Inverse of encode: little-endian base-p digits become coefficients."""
        if not 0 <= n < self.order:
            raise ValueError(f"encoding {n} out of range [0, {self.order})")
        return FieldElement(self, _digits(n, self.p, self.k))

    def encode(self, a: FieldElement) -> int:
        self._check_owns(a)
        return self._encode_coeffs(a.coeffs)

    def elements(self) -> Iterable[FieldElement]:
        return (self.decode(n) for n in range(self.order))

    def x_pow(self, e: int) -> FieldElement:
        """x^e via the power table; the exponent is reduced mod p^k-1."""
        return self.decode(self.power_table[e % (self.order - 1)])

    def dlog(self, a: FieldElement) -> int:
        self._check_owns(a)
        e = self.log_table[self._encode_coeffs(a.coeffs)]
        if e is None:
            raise ValueError("discrete log of zero is undefined")
        return e

    def _check_owns(self, a: FieldElement) -> None:
        if a.field != self:
            raise ValueError("element belongs to a different field")

    # -- linear algebra over the prime subfield ------------------------------

    def span(self, elems: Sequence[FieldElement]) -> set[FieldElement]:
        """The Z_p-linear span of the given elements (the zero space if empty)."""
        basis = self._row_reduce(elems)
        out = set()
        for scalars in itertools.product(range(self.p), repeat=len(basis)):
            acc = (0,) * self.k
            for s, vec in zip(scalars, basis):
                if s:
                    acc = tuple((a + s * b) % self.p for a, b in zip(acc, vec))
            out.add(FieldElement(self, acc))
        return out

    def is_basis(self, elems: Sequence[FieldElement]) -> bool:
        """True iff the k given elements span the whole field over Z_p."""
        if len(elems) != self.k:
            raise ValueError(f"a basis of GF({self.p}^{self.k}) needs exactly "
                             f"{self.k} elements, got {len(elems)}")
        return len(self._row_reduce(elems)) == self.k

    def _row_reduce(self, elems: Sequence[FieldElement]) -> list[tuple[int, ...]]:
        """Row-reduce coefficient vectors mod p; returns the nonzero rows."""
        rows = []
        for a in elems:
            self._check_owns(a)
            rows.append(list(a.coeffs))
        basis: list[list[int]] = []
        pivots: list[int] = []
        for row in rows:
            for piv, brow in zip(pivots, basis):
                factor = row[piv]
                if factor:
                    row = [(r - factor * b) % self.p for r, b in zip(row, brow)]
            lead = next((i for i, c in enumerate(row) if c), None)
            if lead is None:
                continue
            inv = pow(row[lead], -1, self.p)
            row = [(c * inv) % self.p for c in row]
            basis.append(row)
            pivots.append(lead)
        return [tuple(r) for r in basis]


@dataclass(frozen=True)
class FieldElement:
    """A field element as its reduced coefficient vector."""
    field: FieldSpec
    coeffs: tuple[int, ...]

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: FieldElement) -> FieldElement:
        """Table-based product: add discrete logs, look up the power."""
        self._check(other)
        spec = self.field
        ea = spec.log_table[spec.encode(self)]
        eb = spec.log_table[spec.encode(other)]
        if ea is None or eb is None:
            return spec.zero
        return spec.x_pow(ea + eb)

    def __rmul__(self, scalar: int) -> FieldElement:
        """Scalar multiple over the prime subfield (repeated addition)."""
        if not isinstance(scalar, int):
            return NotImplemented
        p = self.field.p
        s = scalar % p
        return FieldElement(self.field, tuple((s * a) % p for a in self.coeffs))

    def __pow__(self, e: int) -> FieldElement:
        spec = self.field
        log = spec.log_table[spec.encode(self)]
        if log is None:
            if e == 0:
                return spec.one
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return spec.zero
        return spec.x_pow(log * e)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise ValueError("elements belong to different fields")

    def __repr__(self) -> str:
        return f"<GF({self.field.p}^{self.field.k}) {power_of_x_str(self)}>"


def power_of_x_str(a: FieldElement) -> str:
    """Render an element in power-of-x notation: "0", "1", or "x^e"."""
    if a.is_zero():
        return "0"
    e = a.field.dlog(a)
    return "1" if e == 0 else f"x^{e}"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def make_field(p: int, k: int, modulus: Sequence[int] | None = None,
               max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """Build GF(p^k), choosing a primitive modulus when none is supplied.

    The default modulus is the primitive monic degree-k polynomial with the
    smallest little-endian base-p encoding of its coefficient vector.  For
    GF(16) that is x^4 + x + 1, which the rest of the package relies on.

    A supplied modulus must be monic of degree k and primitive; each failure
    mode (non-prime p, non-monic, wrong degree, reducible, imprimitive) is
    reported with its own message.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p**k > max_order:
        raise ValueError(f"field order {p**k} exceeds the size bound {max_order}")

    if modulus is not None:
        if len(modulus) != k + 1:
            raise ValueError(f"modulus must have degree {k} "
                             f"({k + 1} coefficients), got {len(modulus)}")
        mod = tuple(int(c) % p for c in modulus)
        if mod[-1] != 1:
            raise ValueError("modulus must be monic (leading coefficient 1)")
        powers = _generator_powers(mod, p, k)
        if powers is None:
            if not _is_irreducible(mod, p, k):
                raise ValueError("modulus is reducible over Z_p")
            raise ValueError("modulus is irreducible but not primitive "
                             "(x does not generate the multiplicative group)")
        return FieldSpec(p, k, mod, powers)

    # smallest candidate by integer encoding; constant term 0 can never be
    # primitive (x would not be invertible), so start at 1
    for v in range(1, p**k):
        mod = _digits(v, p, k) + (1,)
        if mod[0] == 0:
            continue
        powers = _generator_powers(mod, p, k)
        if powers is not None:
            return FieldSpec(p, k, mod, powers)
    raise RuntimeError(f"no primitive polynomial found for GF({p}^{k})")
