"""Exact arithmetic in GF(p^e) and in towers GF(q) < GF(q^l).

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``x**i`` in the polynomial representation, so ``0`` and ``1``
are the additive and multiplicative identities and the prime subfield is
``range(p)``.  Scalar operations work on these codes with plain polynomial
arithmetic; the ``v*`` methods are numpy-vectorized equivalents driven by
log/antilog tables that are built from the scalar path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import config
from .errors import FieldError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "FieldTower",
    "make_field",
    "field_of_order",
    "make_tower",
    "rel_trace",
    "arith",
    "is_prime",
    "prime_factors",
]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists low-degree-first ---------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim((x - y) % p for x, y in zip(a, b))


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        c = r[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        r = _trim(r)
    return _trim(q), r


def _poly_powmod(base, exp, mod, p):
    result = [1]
    base = _poly_divmod(base, mod, p)[1]
    while exp:
        if exp & 1:
            result = _poly_divmod(_poly_mul(result, base, p), mod, p)[1]
        base = _poly_divmod(_poly_mul(base, base, p), mod, p)[1]
        exp >>= 1
    return result


def _is_irreducible(f, p):
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    e = len(f) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not _poly_divmod(f, g, p)[1]:
                return False
    return True


def _monic_polys(p, e):
    # lexicographic with the constant coefficient compared first
    for low in itertools.product(range(p), repeat=e):
        yield list(low) + [1]


class FieldSpec:
    """The finite field GF(p^e) with a fixed monic modulus.

    Instances are immutable and cached by :func:`make_field`; build them
    through that function rather than directly.
    """

    def __init__(self, p, e, modulus, primitive):
        self.p = p
        self.e = e
        self.modulus = tuple(modulus)
        self.order = p**e
        self.primitive = primitive
        self._powers = tuple(p**i for i in range(e))

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- encoding -----------------------------------------------------------
    def coeffs(self, x):
        """Polynomial coefficients of element code ``x`` (length e, low degree first)."""
        self._check(x)
        out = []
        for _ in range(self.e):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs):
        cs = list(cs)
        if len(cs) > self.e or any(not 0 <= c < self.p for c in cs):
            raise FieldError(f"invalid coefficients {cs} for {self}")
        return sum(c * pw for c, pw in zip(cs, self._powers))

    def _check(self, x):
        if not (isinstance(x, (int, np.integer)) and 0 <= x < self.order):
            raise FieldError(f"{x!r} is not an element code of {self}")

    def element(self, x):
        return FieldElement(self, int(x))

    def elements(self):
        return [FieldElement(self, x) for x in range(self.order)]

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    # -- scalar arithmetic on codes (polynomial route) ----------------------
    def add(self, a, b):
        return self.from_coeffs((x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a):
        return self.from_coeffs((-x) % self.p for x in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        prod = _poly_mul(_trim(self.coeffs(a)), _trim(self.coeffs(b)), self.p)
        return self.from_coeffs(_poly_divmod(prod, self.modulus, self.p)[1])

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm in GF(p)[x]."""
        if a == 0:
            raise FieldError("inversion of zero")
        p = self.p
        r0, r1 = list(self.modulus), _trim(self.coeffs(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        c = pow(r0[0], p - 2, p)
        s = _poly_divmod([x * c % p for x in s0], self.modulus, p)[1]
        return self.from_coeffs(s)

    def pow(self, a, k):
        """Square-and-multiply; negative exponents go through :meth:`inv`."""
        self._check(a)
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def mul_order(self, a):
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_factors(n):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    # -- vectorized arithmetic ----------------------------------------------
    @cached_property
    def exp_table(self):
        """``exp_table[i] = primitive**i`` for ``0 <= i < 2(order-1)``."""
        n = self.order - 1
        tab = np.empty(2 * n, dtype=np.int64)
        if self.e > 1 and self.primitive == self.p:
            powers = self._powers_of_x(n)
            tab[:n] = powers
            x = self._times_x(int(powers[-1]))
        else:
            x = 1
            for i in range(n):
                tab[i] = x
                x = self.mul(x, self.primitive)
        if x != 1:
            raise FieldError(f"{self.primitive} is not primitive in {self}")
        tab[n:] = tab[:n]
        tab.setflags(write=False)
        return tab

    def _times_x(self, y):
        # shift up one degree, then reduce the overflow with the monic modulus
        lead, low = divmod(y, self._powers[-1])
        y = low * self.p
        if lead:
            y = self.sub(y, self.from_coeffs(lead * c % self.p for c in self.modulus[:-1]))
        return y

    def _powers_of_x(self, count):
        p, e = self.p, self.e
        out = np.empty(count, dtype=np.int64)
        if p == 2:
            top = 1 << e
            mask = sum(c << i for i, c in enumerate(self.modulus))
            y = 1
            for i in range(count):
                out[i] = y
                y <<= 1
                if y & top:
                    y ^= mask
            return out
        red = [(-c) % p for c in self.modulus[:-1]]
        cs = [1] + [0] * (e - 1)
        pw = self._powers
        for i in range(count):
            out[i] = sum(c * w for c, w in zip(cs, pw))
            lead = cs[-1]
            cs = [0] + cs[:-1]
            if lead:
                cs = [(c + lead * r) % p for c, r in zip(cs, red)]
        return out

    @cached_property
    def log_table(self):
        tab = np.zeros(self.order, dtype=np.int64)
        tab[self.exp_table[: self.order - 1]] = np.arange(self.order - 1)
        tab.setflags(write=False)
        return tab

    @cached_property
    def _neg_table(self):
        return self.vneg_digits(np.arange(self.order, dtype=np.int64))

    def _digits(self, a):
        return [(a // pw) % self.p for pw in self._powers]

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw, x, y in zip(self._powers, self._digits(a), self._digits(b)):
            out += ((x + y) % self.p) * pw
        return out

    def vneg_digits(self, a):
        out = np.zeros_like(a)
        for pw, x in zip(self._powers, self._digits(a)):
            out += ((-x) % self.p) * pw
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        return self._neg_table[a]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.order == 2:
            return a & b
        prod = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("inversion of zero")
        n = self.order - 1
        return self.exp_table[(n - self.log_table[a]) % n]

    def vpow(self, a, k):
        a = np.asarray(a, dtype=np.int64)
        n = self.order - 1
        if k == 0:
            return np.ones_like(a)
        res = self.exp_table[(self.log_table[a] * k) % n]
        if k < 0 and np.any(a == 0):
            raise FieldError("inversion of zero")
        return np.where(a == 0, 0, res)


@dataclass(frozen=True)
class FieldElement:
    owner: FieldSpec
    value: int

    def __post_init__(self):
        self.owner._check(self.value)

    @property
    def coeffs(self):
        return self.owner.coeffs(self.value)

    def _other(self, b):
        if isinstance(b, FieldElement):
            if b.owner != self.owner:
                raise FieldError(f"mixed fields {self.owner} and {b.owner}")
            return b.value
        if isinstance(b, int):
            return self.owner.from_coeffs([b % self.owner.p])
        return NotImplemented

    def __add__(self, b):
        b = self._other(b)
        return FieldElement(self.owner, self.owner.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, b):
        b = self._other(b)
        return FieldElement(self.owner, self.owner.sub(self.value, b))

    def __rsub__(self, b):
        return FieldElement(self.owner, self.owner.sub(self._other(b), self.value))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.value))

    def __mul__(self, b):
        b = self._other(b)
        return FieldElement(self.owner, self.owner.mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.owner, self.owner.inv(self.value))

    def __truediv__(self, b):
        b = self._other(b)
        return FieldElement(self.owner, self.owner.mul(self.value, self.owner.inv(b)))

    def __pow__(self, k):
        return FieldElement(self.owner, self.owner.pow(self.value, k))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.owner}({self.value})"


def arith(kind, a, b=None):
    """Dispatch ``add``/``sub``/``mul``/``inv``/``pow`` on field elements."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        if not isinstance(b, FieldElement):
            raise FieldError("mul expects two field elements")
        return a * b
    if kind == "inv":
        return a.inverse()
    if kind == "pow":
        return a ** int(b)
    raise ValueError(f"unknown operation {kind!r}")


@lru_cache(maxsize=None)
def _make_field(p, e, bound):
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if e < 1:
        raise FieldError("extension degree must be at least 1")
    order = p**e
    if order > bound:
        raise FieldError(f"field order {p}^{e} exceeds bound {bound}")
    n = order - 1
    factors = prime_factors(n)
    if e == 1:
        g = next(
            g for g in range(1, p) if all(pow(g, n // r, p) != 1 for r in factors)
        )
        return FieldSpec(p, 1, ((-g) % p, 1), g)
    prime_roots = {
        g for g in range(1, p) if all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))
    }
    for f in _monic_polys(p, e):
        # the norm of a primitive root, (-1)^e f(0), generates GF(p)*
        if (-1) ** e * f[0] % p not in prime_roots:
            continue
        # x of order exactly p^e - 1 already forces irreducibility; trial
        # division below is the independent confirmation
        if _poly_powmod([0, 1], n, f, p) != [1]:
            continue
        if any(_poly_powmod([0, 1], n // r, f, p) == [1] for r in factors):
            continue
        if not _is_irreducible(f, p):  # pragma: no cover
            raise FieldError(f"primitive test accepted reducible {f}")
        return FieldSpec(p, e, f, p)  # the root x has code p
    raise FieldError(f"no primitive polynomial of degree {e} over GF({p})")  # pragma: no cover


def make_field(p, e=1, bound=None):
    """Return the canonical GF(p^e).

    The modulus is the first monic irreducible polynomial (constant
    coefficient compared first) whose root is primitive, and that root is the
    primitive element.  For prime fields the primitive element is the
    smallest primitive residue ``g`` and the modulus is ``x - g``.
    """
    return _make_field(int(p), int(e), config.FIELD_ORDER_BOUND if bound is None else int(bound))


def field_of_order(q, bound=None):
    """The canonical field with ``q`` elements; ``q`` must be a prime power."""
    q = int(q)
    factors = prime_factors(q) if q > 1 else []
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = factors[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return make_field(p, e, bound)


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(q) embedded in GF(q^ell), both realized inside GF(p^(e*ell))."""

    base: FieldSpec
    top: FieldSpec
    ell: int
    embed_table: np.ndarray
    basis: tuple

    def embed(self, x):
        if isinstance(x, FieldElement):
            if x.owner != self.base:
                raise FieldError(f"{x} is not in the base field {self.base}")
            return FieldElement(self.top, int(self.embed_table[x.value]))
        self.base._check(x)
        return int(self.embed_table[x])

    def embed_array(self, a):
        return self.embed_table[np.asarray(a, dtype=np.int64)]

    @cached_property
    def _restrict_table(self):
        tab = np.full(self.top.order, -1, dtype=np.int64)
        tab[self.embed_table] = np.arange(self.base.order)
        return tab

    def restrict(self, y):
        """Inverse of the embedding; raises if ``y`` is not in the image."""
        x = int(self._restrict_table[y])
        if x < 0:
            raise FieldError(f"{y} does not lie in the embedded {self.base}")
        return x

    def restrict_array(self, a):
        out = self._restrict_table[np.asarray(a, dtype=np.int64)]
        if np.any(out < 0):
            raise FieldError(f"values do not lie in the embedded {self.base}")
        return out

    def combine(self, coords):
        """``sum(basis[i] * embed(coords[..., i]))`` for base-field coordinate arrays."""
        coords = np.asarray(coords, dtype=np.int64)
        top = self.top
        out = np.zeros(coords.shape[:-1], dtype=np.int64)
        for i, b in enumerate(self.basis):
            out = top.vadd(out, top.vmul(self.embed_array(coords[..., i]), b))
        return out

    @cached_property
    def coordinate_table(self):
        """Row ``y`` holds the base-field coordinates of top element ``y`` in :attr:`basis`."""
        q = self.base.order
        coords = np.array(list(itertools.product(range(q), repeat=self.ell)), dtype=np.int64)
        values = self.combine(coords)
        if len(np.unique(values)) != len(values):
            raise FieldError("tower basis is not linearly independent")
        tab = np.empty_like(coords)
        tab[values] = coords
        tab.setflags(write=False)
        return tab

    def trace_array(self, a):
        a = np.asarray(a, dtype=np.int64)
        top, q = self.top, self.base.order
        acc = np.zeros_like(a)
        term = a
        for _ in range(self.ell):
            acc = top.vadd(acc, term)
            term = top.vpow(term, q)
        return self.restrict_array(acc)


@lru_cache(maxsize=None)
def _make_tower(base, ell, bound):
    if ell < 1:
        raise FieldError("tower degree must be at least 1")
    top = make_field(base.p, base.e * ell, bound)
    q = base.order
    cofactor = (top.order - 1) // (q - 1)
    beta = top.primitive
    # the constant coefficients of the base modulus live in the prime subfield
    def vanishes(y):
        acc = 0
        for c in reversed(base.modulus):
            acc = top.add(top.mul(acc, y), c)
        return acc == 0

    s = 1
    while True:
        gamma = top.pow(beta, cofactor * s)
        if vanishes(gamma):
            break
        s += 1
    emb = np.zeros(q, dtype=np.int64)
    y = 1
    for i in range(q - 1):
        emb[base.pow(base.primitive, i)] = y
        y = top.mul(y, gamma)
    emb.setflags(write=False)
    basis = tuple(top.pow(beta, i) for i in range(ell))
    tower = FieldTower(base, top, ell, emb, basis)
    if q <= 256:
        _check_embedding(tower)
    if top.order <= 1 << 16:
        tower.coordinate_table  # noqa: B018 - validates the basis
    return tower


def _check_embedding(tower):
    base, top = tower.base, tower.top
    a, b = np.meshgrid(np.arange(base.order), np.arange(base.order), indexing="ij")
    e = tower.embed_table
    if e[0] != 0 or e[1] != 1 or len(np.unique(e)) != base.order:
        raise FieldError("embedding is not injective or does not fix 0 and 1")
    if not np.array_equal(e[base.vadd(a, b)], top.vadd(e[a], e[b])):
        raise FieldError("embedding is not additive")
    if not np.array_equal(e[base.vmul(a, b)], top.vmul(e[a], e[b])):
        raise FieldError("embedding is not multiplicative")


def make_tower(base, ell, bound=None):
    """Build GF(q) < GF(q^ell) with an explicit embedding and power basis."""
    return _make_tower(base, int(ell), config.FIELD_ORDER_BOUND if bound is None else int(bound))


def rel_trace(tower, a):
    """Relative trace from the top of ``tower`` down to its base field.

    Accepts an element code or a :class:`FieldElement` of the top field and
    returns the same kind of object for the base field.
    """
    if isinstance(a, FieldElement):
        if a.owner != tower.top:
            raise FieldError(f"{a} is not in {tower.top}")
        return FieldElement(tower.base, rel_trace(tower, a.value))
    top = tower.top
    top._check(a)
    acc, term = 0, a
    for _ in range(tower.ell):
        acc = top.add(acc, term)
        term = top.pow(term, tower.base.order)
    return tower.restrict(acc)
