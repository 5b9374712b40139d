"""Exact integer helpers: primality, factoring, square roots mod p, CRT.

Everything here is deterministic (Miller-Rabin uses a fixed witness set
that is proven correct below 3.3 * 10^24, far beyond anything the
pipelines feed it).
"""

from __future__ import annotations

import math
from fractions import Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound by sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def next_prime(n: int) -> int:
    n += 1
    if n <= 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


class FactoringError(Exception):
    """Raised when an integer resists the trial-division + rho pipeline."""


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n (deterministic seed sweep)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 40):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise FactoringError(f"rho failed on {n}")


def factorize(n: int, trial_bound: int = 100_000) -> dict[int, int]:
    """Prime factorization {p: multiplicity} of |n|; n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    while p * p <= n and p <= trial_bound:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def prime_support(n: int) -> set[int]:
    """Set of primes dividing n (n != 0)."""
    return set(factorize(n))


def squarefree_part(n: int) -> int:
    """Largest squarefree d with n = d * square, sign preserved; n != 0."""
    if n == 0:
        raise ValueError("squarefree part of 0 undefined")
    d = -1 if n < 0 else 1
    for p, e in factorize(n).items():
        if e % 2:
            d *= p
    return d


def valuation(n: int, p: int) -> int:
    """v_p(n) for n != 0."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rat_valuation(t: Fraction, p: int) -> int:
    if t == 0:
        raise ValueError("valuation of 0 is infinite")
    return valuation(t.numerator, p) - valuation(t.denominator, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1}; p an odd prime."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def sqrt_mod_p(a: int, p: int) -> int:
    """A square root of a mod p (p prime, a a residue); raises if none."""
    a %= p
    if p == 2 or a == 0:
        return a
    if legendre(a, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, x = 0, t
        while x != 1:
            x = x * x % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def lift_sqrt_mod_pk(a: int, p: int, k: int) -> int:
    """Square root of a mod p^k for a a unit square (Hensel / Newton).

    For p = 2 requires a = 1 mod 8 and k >= 3.
    """
    pk = p**k
    a %= pk
    if p != 2:
        x = sqrt_mod_p(a, p)
        mod = p
        while mod < pk:
            mod = min(mod * mod, pk)
            inv = pow(2 * x, -1, mod)
            x = (x - (x * x - a) * inv) % mod
        return x
    if a % 8 != 1:
        raise ValueError(f"{a} is not a square unit in Z_2")
    # lift mod 2^j -> 2^(j+1); roots mod 8 of x^2 = 1 are odd, start at 1
    x = 1
    for j in range(3, k):
        if (x * x - a) % (1 << (j + 1)):
            x += 1 << (j - 1)
    return x % pk


def crt(residues: list[int], moduli: list[int]) -> int:
    """Solve x = r_i mod m_i for pairwise coprime moduli."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        g = math.gcd(m, mi)
        if g != 1:
            raise ValueError("moduli not coprime")
        h = (r - x) * pow(m, -1, mi) % mi
        x += m * h
        m *= mi
    return x % m
