"""Coefficient domains for Mumford arithmetic: Q, F_p, F_p^2, Z/p^k.

Each domain is a small context object exposing the same protocol over
opaque element values (ints, int pairs, or Fractions), so the Cantor
group law in mumford.py runs unchanged over any of them:

    zero, one, from_int(n), add, sub, mul, neg, inv, div,
    is_zero, eq, key(e)   (hashable canonical form)

The capped-precision rings Zpk / Zp2k are not fields; inverting a
non-unit raises NonInvertible, and the caller owns the retry policy.
F_p^2 is realized as F_p[s] / (s^2 - nu) with nu the smallest positive
non-residue mod p; elements are (a, b) pairs meaning a + b*s.
"""

from __future__ import annotations

from fractions import Fraction

from .intarith import legendre, sqrt_mod_p


class NonInvertible(ArithmeticError):
    """Division by a non-unit in a capped-precision ring (or by zero)."""


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod an odd prime p."""
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return n


class QQ:
    """The rationals, wrapping fractions.Fraction."""

    zero = Fraction(0)
    one = Fraction(1)
    name = "Q"

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise NonInvertible("1/0 in Q")
        return 1 / a

    @classmethod
    def div(cls, a, b):
        return a * cls.inv(b)

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def eq(a, b):
        return a == b

    @staticmethod
    def key(a):
        return a


class GFp:
    """Prime field F_p; elements are ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1 % p
        self.name = f"F{p}"

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise NonInvertible(f"1/0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def key(self, a):
        return a % self.p

    def is_square(self, a) -> bool:
        return a % self.p == 0 or legendre(a, self.p) == 1

    def sqrt(self, a):
        return sqrt_mod_p(a, self.p)


class GFp2:
    """F_p^2 = F_p[s]/(s^2 - nu); elements are (a, b) for a + b*s."""

    def __init__(self, p: int, nu: int | None = None):
        if p == 2:
            raise ValueError("GFp2 requires an odd prime")
        self.p = p
        self.nu = smallest_nonresidue(p) if nu is None else nu
        if legendre(self.nu, p) != -1:
            raise ValueError(f"{self.nu} is a residue mod {p}")
        self.zero = (0, 0)
        self.one = (1, 0)
        self.name = f"F{p}^2"

    def from_int(self, n):
        return (n % self.p, 0)

    def embed(self, a: int):
        return (a % self.p, 0)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def sub(self, a, b):
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def mul(self, a, b):
        return (
            (a[0] * b[0] + self.nu * a[1] * b[1]) % self.p,
            (a[0] * b[1] + a[1] * b[0]) % self.p,
        )

    def neg(self, a):
        return (-a[0] % self.p, -a[1] % self.p)

    def conj(self, a):
        return (a[0], -a[1] % self.p)

    def norm(self, a) -> int:
        return (a[0] * a[0] - self.nu * a[1] * a[1]) % self.p

    def inv(self, a):
        n = self.norm(a)
        if n == 0:
            raise NonInvertible(f"1/0 in F_{self.p}^2")
        ninv = pow(n, -1, self.p)
        return (a[0] * ninv % self.p, -a[1] * ninv % self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a[0] % self.p == 0 and a[1] % self.p == 0

    def eq(self, a, b):
        return (a[0] - b[0]) % self.p == 0 and (a[1] - b[1]) % self.p == 0

    def key(self, a):
        return (a[0] % self.p, a[1] % self.p)

    def pow(self, a, e: int):
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def frob(self, a):
        """Frobenius x -> x^p, which is conjugation here."""
        return self.conj(a)

    def is_square(self, a) -> bool:
        """a is a square in F_p^2 iff its norm is a residue mod p."""
        if self.is_zero(a):
            return True
        return legendre(self.norm(a), self.p) == 1

    def sqrt(self, a):
        """A square root in F_p^2 of a square element."""
        if self.is_zero(a):
            return self.zero
        if a[1] % self.p == 0:
            x = a[0] % self.p
            if legendre(x, self.p) == 1:
                return (sqrt_mod_p(x, self.p), 0)
            # x = nu * square, so sqrt = sqrt(x/nu) * s
            y = x * pow(self.nu, -1, self.p) % self.p
            return (0, sqrt_mod_p(y, self.p))
        # general case: solve (u + v s)^2 = a via norms
        n = self.norm(a)
        if legendre(n, self.p) != 1:
            raise ValueError("not a square in F_p^2")
        w = sqrt_mod_p(n, self.p)
        for sign in (1, -1):
            half = (a[0] + sign * w) * pow(2, -1, self.p) % self.p
            if half == 0 or legendre(half, self.p) == 1:
                u = sqrt_mod_p(half, self.p)
                if u == 0:
                    continue
                v = a[1] * pow(2 * u, -1, self.p) % self.p
                cand = (u, v)
                if self.eq(self.mul(cand, cand), a):
                    return cand
        raise ValueError("sqrt search failed in F_p^2")


class Zpk:
    """Capped-precision ring Z/p^k with unit-only division."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.modulus = p**k
        self.zero = 0
        self.one = 1 % self.modulus
        self.name = f"Z{p}^{k}"

    def from_int(self, n):
        return n % self.modulus

    def from_fraction(self, q: Fraction):
        if q.denominator % self.p == 0:
            raise NonInvertible(f"denominator divisible by {self.p}")
        return q.numerator * pow(q.denominator, -1, self.modulus) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def inv(self, a):
        if a % self.p == 0:
            raise NonInvertible(f"non-unit division in Z/{self.p}^{self.k}")
        return pow(a, -1, self.modulus)

    def div(self, a, b):
        return a * self.inv(b) % self.modulus

    def is_zero(self, a):
        return a % self.modulus == 0

    def eq(self, a, b):
        return (a - b) % self.modulus == 0

    def key(self, a):
        return a % self.modulus

    def residue(self, a) -> int:
        return a % self.p

    def valuation(self, a) -> int:
        """v_p of a representative; k when a = 0 mod p^k."""
        a %= self.modulus
        if a == 0:
            return self.k
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def sqrt_unit(self, a):
        """Square root of a unit square (odd p), lifted Newton-style."""
        r = sqrt_mod_p(a % self.p, self.p)
        mod = self.p
        while mod < self.modulus:
            mod = min(mod * mod, self.modulus)
            r = (r - (r * r - a) * pow(2 * r, -1, mod)) % mod
        return r % self.modulus


class Zp2k:
    """Unramified quadratic extension of Z/p^k: pairs (a, b) = a + b*s, s^2 = nu."""

    def __init__(self, p: int, k: int, nu: int | None = None):
        self.p = p
        self.k = k
        self.modulus = p**k
        self.nu = smallest_nonresidue(p) if nu is None else nu
        self.zero = (0, 0)
        self.one = (1 % self.modulus, 0)
        self.name = f"Z{p}^{k}[s]"

    def from_int(self, n):
        return (n % self.modulus, 0)

    def embed(self, a: int):
        return (a % self.modulus, 0)

    def add(self, a, b):
        return ((a[0] + b[0]) % self.modulus, (a[1] + b[1]) % self.modulus)

    def sub(self, a, b):
        return ((a[0] - b[0]) % self.modulus, (a[1] - b[1]) % self.modulus)

    def mul(self, a, b):
        return (
            (a[0] * b[0] + self.nu * a[1] * b[1]) % self.modulus,
            (a[0] * b[1] + a[1] * b[0]) % self.modulus,
        )

    def neg(self, a):
        return (-a[0] % self.modulus, -a[1] % self.modulus)

    def conj(self, a):
        return (a[0], -a[1] % self.modulus)

    def inv(self, a):
        n = (a[0] * a[0] - self.nu * a[1] * a[1]) % self.modulus
        if n % self.p == 0:
            raise NonInvertible(f"non-unit division in Z/{self.p}^{self.k}[s]")
        ninv = pow(n, -1, self.modulus)
        return (a[0] * ninv % self.modulus, -a[1] * ninv % self.modulus)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a[0] % self.modulus == 0 and a[1] % self.modulus == 0

    def eq(self, a, b):
        return (a[0] - b[0]) % self.modulus == 0 and (a[1] - b[1]) % self.modulus == 0

    def key(self, a):
        return (a[0] % self.modulus, a[1] % self.modulus)

    def residue(self, a) -> tuple[int, int]:
        return (a[0] % self.p, a[1] % self.p)

    def is_base(self, a) -> bool:
        return a[1] % self.modulus == 0

    def sqrt_unit(self, a):
        """Square root of a unit square, by Newton from the residue field."""
        fp2 = GFp2(self.p, self.nu)
        r = fp2.sqrt(self.residue(a))
        r = (r[0], r[1])
        mod = self.p
        while mod < self.modulus:
            mod = min(mod * mod, self.modulus)
            sub = Zp2k.__new__(Zp2k)
            sub.p, sub.k, sub.modulus, sub.nu = self.p, 0, mod, self.nu
            err = sub.sub(sub.mul(r, r), (a[0] % mod, a[1] % mod))
            r = sub.sub(r, sub.mul(err, sub.inv(sub.add(r, r))))
        return (r[0] % self.modulus, r[1] % self.modulus)
