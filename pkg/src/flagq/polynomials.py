"""Sparse integer polynomials, Schubert and Grothendieck polynomials.

A polynomial is a dict mapping exponent tuples (trailing zeros trimmed) to
integer coefficients; the key () is the constant term.  x_i has exponent 1 in
slot i-1.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .weyl import Permutation

Poly = dict[tuple[int, ...], int]


def pad(k: tuple[int, ...], l: int) -> tuple[int, ...]:
    return k + (0,) * (l - len(k))


def trim_exponents(k: tuple[int, ...]) -> tuple[int, ...]:
    k = list(k)
    while k and k[-1] == 0:
        k.pop()
    return tuple(k)


def trim_perm(w: Permutation) -> Permutation:
    """Drop trailing fixed points: the stable form of a permutation."""
    w = list(w)
    while w and w[-1] == len(w):
        w.pop()
    return tuple(w)


def embed_perm(w: Permutation, n: int) -> Permutation:
    if len(w) > n:
        raise ValueError(f"{w} does not fit in S_{n}")
    return w + tuple(range(len(w) + 1, n + 1))


def code(w: Permutation) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    n = len(w)
    return tuple(
        sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n)
    )


def perm_from_code(c: tuple[int, ...]) -> Permutation:
    c = list(c)
    m = max([c[i] + i + 1 for i in range(len(c))] + [len(c)]) if c else 1
    c = c + [0] * (m - len(c))
    avail = list(range(1, m + 1))
    out = []
    for ci in c:
        out.append(avail.pop(ci))
    return tuple(out)


def xvar(i: int) -> Poly:
    return {(0,) * (i - 1) + (1,): 1}


def pmul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            l = max(len(k1), len(k2))
            k = trim_exponents(tuple(a + b for a, b in zip(pad(k1, l), pad(k2, l))))
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def padd(f: Poly, g: Poly, scale: int = 1) -> Poly:
    out = dict(f)
    for k, c in g.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def divided_diff(f: Poly, i: int) -> Poly:
    """Newton divided difference: (f - s_i f) / (x_i - x_{i+1}).

    Acts monomial by monomial via the telescoping sum
    x^a y^b -> sign * sum of x^j y^{a+b-1-j}.
    """
    out: Poly = {}
    for k, c in f.items():
        k2 = pad(k, i + 1)
        a, b = k2[i - 1], k2[i]
        if a == b:
            continue
        if a > b:
            rng, sg = range(b, a), 1
        else:
            rng, sg = range(a, b), -1
        for j in rng:
            kk = list(k2)
            kk[i - 1], kk[i] = j, a + b - 1 - j
            kk = trim_exponents(tuple(kk))
            v = out.get(kk, 0) + sg * c
            if v:
                out[kk] = v
            else:
                out.pop(kk, None)
    return out


def isobaric_diff(f: Poly, i: int) -> Poly:
    """pi_i f = partial_i((1 - x_{i+1}) f)."""
    return divided_diff(padd(f, pmul(xvar(i + 1), f), -1), i)


@lru_cache(maxsize=None)
def schubert(w: Permutation) -> Poly:
    """Schubert polynomial S_w, indexed by a trimmed permutation."""
    w = trim_perm(w)
    if not w:
        return {(): 1}
    m = len(w)
    if w == tuple(range(m, 0, -1)):
        return {trim_exponents(tuple(m - i for i in range(1, m + 1))): 1}
    for i in range(1, m):
        if w[i - 1] < w[i]:
            wsi = list(w)
            wsi[i - 1], wsi[i] = wsi[i], wsi[i - 1]
            return divided_diff(schubert(tuple(wsi)), i)
    raise AssertionError("unreachable: w has an ascent unless w = w_0")


@lru_cache(maxsize=None)
def grothendieck(w: Permutation) -> Poly:
    """Grothendieck polynomial G_w, via isobaric divided differences."""
    w = trim_perm(w)
    if not w:
        return {(): 1}
    m = len(w)
    if w == tuple(range(m, 0, -1)):
        return {trim_exponents(tuple(m - i for i in range(1, m + 1))): 1}
    for i in range(1, m):
        if w[i - 1] < w[i]:
            wsi = list(w)
            wsi[i - 1], wsi[i] = wsi[i], wsi[i - 1]
            return isobaric_diff(grothendieck(tuple(wsi)), i)
    raise AssertionError("unreachable: w has an ascent unless w = w_0")


@lru_cache(maxsize=None)
def complete_homog(k: int, i: int) -> Poly:
    """h_k(x_1, ..., x_i)."""
    out: Poly = {}
    for comb in itertools.combinations_with_replacement(range(1, i + 1), k):
        e = [0] * i
        for c in comb:
            e[c - 1] += 1
        kk = trim_exponents(tuple(e))
        out[kk] = out.get(kk, 0) + 1
    return out


def normal_form(f: Poly, n: int) -> Poly:
    """Reduce modulo the ideal (e_1, ..., e_n) of Z[x_1..x_n].

    In the quotient h_{n-i+1}(x_1..x_i) = 0, giving the rewrite
    x_i^{n-i+1} -> x_i^{n-i+1} - h_{n-i+1}(x_1..x_i), which strictly lowers
    the leading monomial.  The result has exponent of x_i below n-i+1, i.e.
    is supported on Lehmer codes of S_n.
    """
    f = dict(f)
    work = True
    while work:
        work = False
        for k in list(f):
            if k not in f:
                continue
            for i in range(1, len(k) + 1):
                e = k[i - 1]
                if e >= n - i + 1:
                    c = f.pop(k)
                    rest = list(k)
                    rest[i - 1] = e - (n - i + 1)
                    sub = pmul({trim_exponents(tuple(rest)): 1}, complete_homog(n - i + 1, i))
                    sub = padd(sub, {k: 1}, -1)
                    f = padd(f, sub, -c)
                    work = True
                    break
    return f


def expand_schubert_homog(f: Poly, n: int) -> dict[Permutation, int]:
    """Expand a homogeneous polynomial in Schubert polynomials of S_n.

    Peels the maximal monomial in the reversed-exponent order; for S_w this
    is x^{code(w)}, so the leading code identifies the next permutation.
    """
    out: dict[Permutation, int] = {}
    f = dict(f)
    while f:
        mx = max(len(k) for k in f)
        lt = max(f, key=lambda k: tuple(reversed(pad(k, mx))))
        w = perm_from_code(pad(lt, mx))
        if len(trim_perm(w)) > n:
            raise ValueError(f"leading code {lt} is not a code of S_{n}")
        c = f[lt]
        out[trim_perm(w)] = c
        f = padd(f, schubert(trim_perm(w)), -c)
    return out


def expand_grothendieck(f: Poly, n: int) -> dict[Permutation, int]:
    """Expand f in {G_w : w in S_n} modulo (e_1, ..., e_n).

    Works up from the lowest total degree: the degree-d layer of what
    remains is a sum of Schubert polynomials (G_w = S_w + higher order), and
    subtracting the matched G_w's clears the layer.
    """
    out: dict[Permutation, int] = {}
    f = normal_form(f, n)
    while f:
        d = min(sum(k) for k in f)
        layer = {k: c for k, c in f.items() if sum(k) == d}
        for w, c in expand_schubert_homog(layer, n).items():
            out[w] = c
            f = padd(f, grothendieck(w), -c)
    return out
