"""Factorization of integer polynomials of degree at most 10.

Zassenhaus pipeline: Yun's squarefree decomposition, factorization modulo
a prime where the reduction stays squarefree, Hensel lifting past the
Mignotte coefficient bound, and subset recombination.  The degree cap
keeps the recombination loop trivial (at most 2^10 subsets).
"""

from __future__ import annotations

import itertools
import math

from .intarith import next_prime
from .intpoly import IPoly, poly_gcd

DEGREE_CAP = 10


class DegreeTooLarge(ValueError):
    pass


# -- arithmetic mod p on ascending coefficient lists ---------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    return _trim([(x + y) % p for x, y in itertools.zip_longest(a, b, fillvalue=0)])


def _psub(a, b, p):
    return _trim([(x - y) % p for x, y in itertools.zip_longest(a, b, fillvalue=0)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in reversed(range(len(q))):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _trim(q), _trim(a)


def _pgcd(a, b, p):
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _pderiv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _ppow_mod(base, e, mod, p):
    out = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            out = _pdivmod(_pmul(out, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return out


def _pxgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([x * inv % p for x in r0], [x * inv % p for x in s0], [x * inv % p for x in t0])


def _factor_mod_p(f: list[int], p: int) -> list[list[int]]:
    """Monic irreducible factors of a squarefree monic f over F_p."""
    stages: list[tuple[list[int], int]] = []
    v = f[:]
    xp = [0, 1]
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            stages.append((v, len(v) - 1))
            break
        xp = _ppow_mod(xp, p, v, p)
        g = _pgcd(v, _psub(xp, [0, 1], p), p)
        if len(g) - 1 > 0:
            stages.append((g, d))
            v = _pdivmod(v, g, p)[0]
            xp = _pdivmod(xp, v, p)[1]

    factors: list[list[int]] = []
    state = 1
    for poly, d in stages:
        work = [poly]
        while work:
            h = work.pop()
            if len(h) - 1 == d:
                factors.append(h)
                continue
            # Cantor-Zassenhaus split with a deterministic element sweep
            while True:
                state = (state * 1103515245 + 12345) % (1 << 31)
                r = _trim([(state >> (3 * i)) % p for i in range(len(h) - 1)])
                if not r:
                    continue
                if p == 2:
                    acc, cur = r[:], r[:]
                    for _ in range(d - 1):
                        cur = _pdivmod(_pmul(cur, cur, 2), h, 2)[1]
                        acc = _padd(acc, cur, 2)
                    g = _pgcd(h, acc, 2)
                else:
                    e = (p**d - 1) // 2
                    g = _pgcd(h, _psub(_ppow_mod(r, e, h, p), [1], p), p)
                if 0 < len(g) - 1 < len(h) - 1:
                    work.append(g)
                    work.append(_pdivmod(h, g, p)[0])
                    break
    return factors


# -- Hensel lifting -------------------------------------------------------------


def _zmul(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _trim(out)


def _hensel_pair(F, g, h, s, t, p, m):
    """One linear lift step for monic F = g*h (mod m), s*g + t*h = 1 (mod p).

    Returns (g', h') mod m*p with the factors still monic.
    """
    M = m * p
    prod = _zmul(g, h, M)
    e = [(x - y) % M for x, y in itertools.zip_longest([c % M for c in F], prod, fillvalue=0)]
    e = _trim([(c // m) % p for c in e])
    q, u = _pdivmod(_pmul(t, e, p), g, p)
    v = _padd(_pmul(s, e, p), _pmul(q, h, p), p)
    g2 = _trim([(x + m * y) % M for x, y in itertools.zip_longest(g, u, fillvalue=0)])
    h2 = _trim([(x + m * y) % M for x, y in itertools.zip_longest(h, v, fillvalue=0)])
    return g2, h2


def _hensel_lift_tree(F: list[int], facs: list[list[int]], p: int, modulus: int) -> list[list[int]]:
    """Lift monic mod-p factors of F (monic mod `modulus`) to mod `modulus`."""
    if len(facs) == 1:
        return [[c % modulus for c in F]]
    half = len(facs) // 2
    gl, hl = facs[:half], facs[half:]
    g = [1]
    for fac in gl:
        g = _pmul(g, fac, p)
    h = [1]
    for fac in hl:
        h = _pmul(h, fac, p)
    _, s, t = _pxgcd(g, h, p)
    m = p
    while m < modulus:
        g, h = _hensel_pair(F, g, h, s, t, p, m)
        m *= p
    return _hensel_lift_tree(g, gl, p, modulus) + _hensel_lift_tree(h, hl, p, modulus)


# -- squarefree decomposition ----------------------------------------------------


def _squarefree_decompose(f: IPoly) -> list[tuple[IPoly, int]]:
    """Yun's algorithm on primitive f: [(g_i, i)] with f = prod g_i^i (up to sign)."""
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    out: list[tuple[IPoly, int]] = []
    w, _ = f.divmod_exact(g)
    y, _ = f.derivative().divmod_exact(g)
    i = 1
    while w.degree > 0:
        z = y - w.derivative()
        h = poly_gcd(w, z)
        if h.degree > 0:
            out.append((h, i))
        w, _ = w.divmod_exact(h)
        y, _ = z.divmod_exact(h)
        i += 1
    if w.coeffs not in ((1,), (-1,)):
        # residual constant folds into content handling upstream
        pass
    return out


# -- public entry points -----------------------------------------------------------


def factor_squarefree_primitive(f: IPoly) -> list[IPoly]:
    """Irreducible factors of a primitive squarefree f, each primitive, lc > 0."""
    if f.lc < 0:
        f = -f
    out: list[IPoly] = []
    while f[0] == 0 and f.degree >= 1:
        out.append(IPoly((0, 1)))
        f = IPoly(f.coeffs[1:])
    if f.degree < 1:
        return out
    if f.degree == 1:
        out.append(f)
        return out

    lc = f.lc
    p = 2
    while True:
        if lc % p:
            fp = _trim([c % p for c in f.coeffs])
            if len(fp) - 1 == f.degree and len(_pgcd(fp, _pderiv(fp, p), p)) - 1 == 0:
                break
        p = next_prime(p)

    inv = pow(lc, -1, p)
    fmon = [c * inv % p for c in f.coeffs]
    modfacs = _factor_mod_p(fmon, p)
    if len(modfacs) == 1:
        out.append(f)
        return out

    norm = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    bound = (1 << (f.degree + 1)) * norm * abs(lc)
    modulus = p
    while modulus < 2 * bound + 1:
        modulus *= p
    lc_inv = pow(lc, -1, modulus)
    F = [c * lc_inv % modulus for c in f.coeffs]
    lifted = _hensel_lift_tree(F, modfacs, p, modulus)

    remaining = list(range(len(lifted)))
    cur = f
    r = 1
    while 2 * r <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, r):
            cand = [cur.lc % modulus]
            for idx in combo:
                cand = _zmul(cand, lifted[idx], modulus)
            sym = [c - modulus if 2 * c > modulus else c for c in cand]
            g = IPoly(sym).primitive()
            if g.degree < 1:
                continue
            if g.lc < 0:
                g = -g
            if g.divides(cur):
                cur, _ = cur.divmod_exact(g)
                out.append(g)
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            r += 1
    if cur.degree >= 1:
        out.append(cur)
    return out


def factor_ipoly(f: IPoly) -> tuple[int, list[tuple[IPoly, int]]]:
    """Full factorization over Q: (content, [(irreducible primitive, mult)]).

    content * prod(g^mult) == f exactly, each g primitive with lc > 0.
    Raises DegreeTooLarge above DEGREE_CAP.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.degree > DEGREE_CAP:
        raise DegreeTooLarge(f"degree {f.degree} exceeds cap {DEGREE_CAP}")
    content = f.content()
    if f.degree == 0:
        return content, []
    prim = f.primitive()
    pieces: list[tuple[IPoly, int]] = []
    for sqf, mult in _squarefree_decompose(prim):
        for g in factor_squarefree_primitive(sqf):
            pieces.append((g, mult))
    merged: dict[tuple, int] = {}
    order: list[IPoly] = []
    for g, m in pieces:
        if g.coeffs not in merged:
            order.append(g)
            merged[g.coeffs] = 0
        merged[g.coeffs] += m
    out = [(g, merged[g.coeffs]) for g in order]
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return content, out


def is_squarefree(f: IPoly) -> bool:
    if f.degree < 1:
        return False
    return poly_gcd(f, f.derivative()).degree == 0
