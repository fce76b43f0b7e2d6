"""Finite field tower GF(p) < GF(q) < GF(q^2), q = p^m.

Elements of GF(q^2) are plain integers in ``[0, q^2)``: the base-p digits
of the integer, little-endian, are the coefficients of a polynomial over
GF(p) reduced modulo the tower's defining polynomial.  0 is zero and 1 is
the unit.

Every arithmetic method accepts either Python ints or integer numpy arrays
(broadcasting like numpy) and returns the same kind.  Log/antilog tables
are built when q^2 <= 2**16, full addition and multiplication tables when
q^2 <= 1024; larger towers fall back to polynomial arithmetic.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, NotADivisor, NotPrime, ParseError, PreconditionError, SizeExceeded

SIZE_GUARD = 2**31
LOG_TABLE_LIMIT = 2**16
FULL_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
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


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**m``; raise PreconditionError if q is not a prime power."""
    if q < 2:
        raise PreconditionError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise PreconditionError(f"{q} is not a prime power")
    p = ps[0]
    m = round(math.log(q, p))
    if p**m != q:
        raise PreconditionError(f"{q} is not a prime power")
    return p, m


# ---------------------------------------------------------------------------
# polynomials over GF(p), little-endian coefficient lists
# ---------------------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, f, p):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Ben-Or test: f of degree D is irreducible over GF(p) iff
    gcd(f, x^(p^i) - x) = 1 for every 1 <= i <= D // 2."""
    f = _trim([c % p for c in coeffs])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    x = [0, 1]
    power = x
    for _ in range(deg // 2):
        # power <- power^p mod f
        acc = [1]
        base = power
        e = p
        while e:
            if e & 1:
                acc = _poly_mulmod(acc, base, f, p)
            base = _poly_mulmod(base, base, f, p)
            e >>= 1
        power = acc
        g = _poly_gcd(f, _poly_sub(power, x, p), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Monic irreducible of the given degree with the smallest integer encoding."""
    for low in range(p**degree):
        coeffs = []
        r = low
        for _ in range(degree):
            coeffs.append(r % p)
            r //= p
        coeffs.append(1)
        if coeffs[0] == 0:
            continue
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _vectorize(func, nin, *args):
    return np.asarray(np.frompyfunc(func, nin, 1)(*args), dtype=np.int64)


class FieldTower:
    """GF(q^2) with q = p^m, plus the q-power Frobenius and the norm to GF(q).

    Immutable after construction.  Use :func:`build_tower` for the canonical
    (smallest modulus, smallest primitive element) tower.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise PreconditionError("extension degree must be positive")
        if p ** (2 * m) > SIZE_GUARD:
            raise SizeExceeded(f"{p}^{2 * m} exceeds 2^31")
        self.p = p
        self.m = m
        self.q = p**m
        self.order = self.q * self.q
        self.degree = 2 * m
        if modulus is None:
            modulus = smallest_irreducible(p, self.degree)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != self.degree + 1 or modulus[-1] != 1:
            raise PreconditionError("modulus must be monic of degree 2m")
        if not is_irreducible(modulus, p):
            raise PreconditionError("modulus is reducible")
        self.modulus = modulus
        self._weights = p ** np.arange(self.degree, dtype=np.int64)
        self._tabled = self.order <= LOG_TABLE_LIMIT
        self._full = self.order <= FULL_TABLE_LIMIT
        self.generator = self._find_generator()
        if self._tabled:
            self._build_tables()

    # -- scalar polynomial arithmetic (table-free) ------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.degree):
            out.append(a % self.p)
            a //= self.p
        return _trim(out)

    def _encode(self, coeffs) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _add_scalar(self, a: int, b: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.degree):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def _neg_scalar(self, a: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.degree):
            out += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return out

    def _mul_scalar(self, a: int, b: int) -> int:
        return self._encode(_poly_mulmod(self._digits(a), self._digits(b), self.modulus, self.p))

    def _pow_scalar(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._mul_scalar(acc, a)
            a = self._mul_scalar(a, a)
            e >>= 1
        return acc

    def _find_generator(self) -> int:
        n = self.order - 1
        cofactors = [n // r for r in prime_factors(n)]
        for g in range(1, self.order):
            if all(self._pow_scalar(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _build_tables(self):
        Q = self.order
        exp = np.empty(2 * (Q - 1), dtype=np.int64)
        x = 1
        for i in range(Q - 1):
            exp[i] = x
            x = self._mul_scalar(x, self.generator)
        exp[Q - 1:] = exp[: Q - 1]
        log = np.zeros(Q, dtype=np.int64)
        log[exp[: Q - 1]] = np.arange(Q - 1)
        self._exp, self._log = exp, log

        elems = np.arange(Q, dtype=np.int64)
        digits = (elems[:, None] // self._weights[None, :]) % self.p
        self._digit_table = digits
        self._neg = ((-digits) % self.p) @ self._weights
        inv = np.zeros(Q, dtype=np.int64)
        inv[1:] = exp[(Q - 1 - log[1:]) % (Q - 1)]
        self._inv = inv
        frob = np.zeros(Q, dtype=np.int64)
        frob[1:] = exp[(log[1:] * self.q) % (Q - 1)]
        self._frob = frob
        if self._full:
            self._add_table = ((digits[:, None, :] + digits[None, :, :]) % self.p) @ self._weights
            s = log[:, None] + log[None, :]
            mul = exp[s % (Q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
            self._mul_table = mul
        for t in ("_exp", "_log", "_neg", "_inv", "_frob", "_digit_table"):
            getattr(self, t).setflags(write=False)

    # -- public element API -------------------------------------------------

    @staticmethod
    def _pack(result, scalar):
        return int(result) if scalar else result

    def _prep(self, *xs):
        scalar = all(isinstance(x, (int, np.integer)) for x in xs)
        return [np.asarray(x, dtype=np.int64) for x in xs], scalar

    def add(self, a, b):
        (a, b), scalar = self._prep(a, b)
        if self._full:
            r = self._add_table[a, b]
        elif self.p == 2:
            r = a ^ b
        elif self._tabled:
            r = ((self._digit_table[a] + self._digit_table[b]) % self.p) @ self._weights
        else:
            r = _vectorize(self._add_scalar, 2, a, b)
        return self._pack(r, scalar)

    def neg(self, a):
        (a,), scalar = self._prep(a)
        if self._tabled:
            r = self._neg[a]
        else:
            r = _vectorize(self._neg_scalar, 1, a)
        return self._pack(r, scalar)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        (a, b), scalar = self._prep(a, b)
        if self._full:
            r = self._mul_table[a, b]
        elif self._tabled:
            r = self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
            r = np.where((a == 0) | (b == 0), 0, r)
        else:
            r = _vectorize(self._mul_scalar, 2, a, b)
        return self._pack(r, scalar)

    def inv(self, a):
        (a,), scalar = self._prep(a)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self._tabled:
            r = self._inv[a]
        else:
            r = _vectorize(lambda x: self._pow_scalar(x, self.order - 2), 1, a)
        return self._pack(r, scalar)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            raise PreconditionError("exponent must be non-negative")
        (a,), scalar = self._prep(a)
        if e == 0:
            r = np.ones_like(a)
        elif self._tabled:
            r = self._exp[(self._log[a] * (e % (self.order - 1))) % (self.order - 1)]
            r = np.where(a == 0, 0, r)
        else:
            r = _vectorize(lambda x: self._pow_scalar(x, e), 1, a)
        return self._pack(r, scalar)

    def frob(self, a):
        """The q-power map x -> x^q, an involution of GF(q^2)."""
        (a,), scalar = self._prep(a)
        if self._tabled:
            r = self._frob[a]
        else:
            r = _vectorize(lambda x: self._pow_scalar(x, self.q), 1, a)
        return self._pack(r, scalar)

    def norm(self, a):
        """x -> x^(q+1), landing in the subfield GF(q)."""
        return self.mul(a, self.frob(a))

    def from_int(self, c: int) -> int:
        """Image of the integer c in the prime field."""
        return c % self.p

    # -- structure ----------------------------------------------------------

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def subfield(self) -> np.ndarray:
        """Elements of GF(q), in increasing encoding order."""
        e = self.elements
        return e[self.frob(e) == e]

    def in_subfield(self, a) -> bool:
        return bool(np.all(self.frob(a) == np.asarray(a)))

    def subgroup(self, n: int) -> np.ndarray:
        """The n-th roots of unity as g^((q^2-1)/n * j), j = 0..n-1."""
        if n < 1 or (self.order - 1) % n:
            raise NotADivisor(f"{n} does not divide {self.order - 1}")
        step = (self.order - 1) // n
        g = self.pow(self.generator, step)
        out = np.empty(n, dtype=np.int64)
        x = 1
        for j in range(n):
            out[j] = x
            x = self.mul(x, g)
        return out

    def norm_preimage(self, b: int) -> int:
        """Smallest element whose norm is b."""
        e = self.elements
        hits = np.nonzero(self.norm(e) == b)[0]
        if not len(hits):
            raise PreconditionError(f"{b} is not a norm")
        return int(e[hits[0]])

    def header(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.degree}) p={self.p} modulus={coeffs}"

    def __eq__(self, other):
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldTower(p={self.p}, m={self.m}, modulus={self.modulus}, generator={self.generator})"


def build_tower(p: int, m: int) -> FieldTower:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise PreconditionError("extension degree must be positive")
    if p ** (2 * m) > SIZE_GUARD:
        raise SizeExceeded(f"{p}^{2 * m} exceeds 2^31")
    return FieldTower(p, m)


@lru_cache(maxsize=None)
def tower_for_q(q: int) -> FieldTower:
    """Canonical tower whose base field has q elements (cached)."""
    p, m = prime_power(q)
    return build_tower(p, m)


def parse_header(line: str) -> FieldTower:
    """Inverse of :meth:`FieldTower.header`."""
    try:
        parts = dict(tok.split("=", 1) for tok in line.split()[1:])
        p = int(parts["p"])
        modulus = tuple(int(c) for c in parts["modulus"].split(","))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad field header: {line!r}") from exc
    if (len(modulus) - 1) % 2:
        raise ParseError("modulus degree must be even")
    tower = FieldTower(p, (len(modulus) - 1) // 2, modulus)
    canon = tower_for_q(tower.q) if tower.modulus == smallest_irreducible(p, tower.degree) else None
    return canon if canon is not None else tower


def arith(t: FieldTower, a, b, op: str):
    """Dispatch one of add/sub/mul/div/neg/inv/pow; unary ops ignore b."""
    if op in ("neg", "inv", "frob", "norm"):
        return getattr(t, op)(a)
    if op == "pow":
        return t.pow(a, b)
    if op not in ("add", "sub", "mul", "div"):
        raise PreconditionError(f"unknown operation {op!r}")
    return getattr(t, op)(a, b)
