"""Small finite groups as (elements, multiplication) pairs."""
from __future__ import annotations

import itertools


def cyclic(n):
    elems = list(range(n))
    return elems, (lambda a, b: (a + b) % n)


def product(g, h):
    (ea, ma), (eb, mb) = g, h
    elems = [f"{a}{b}" for a in ea for b in eb]
    lookup = {f"{a}{b}": (a, b) for a in ea for b in eb}

    def mult(x, y):
        (a1, b1), (a2, b2) = lookup[x], lookup[y]
        return f"{ma(a1, a2)}{mb(b1, b2)}"

    return elems, mult


def symmetric(n):
    """S_n with elements in one-line notation, e.g. '213'; product is
    composition (x*y)(i) = x(y(i))."""
    perms = list(itertools.permutations(range(1, n + 1)))
    name = {p: "".join(map(str, p)) for p in perms}
    back = {v: k for k, v in name.items()}

    def mult(x, y):
        px, py = back[x], back[y]
        return name[tuple(px[py[i] - 1] for i in range(n))]

    return [name[p] for p in perms], mult


def dihedral(n):
    """Symmetries of the n-gon: 'r{k}' rotations and 's{k}' reflections with
    s_k = r^k s_0 and s_0 r s_0 = r^-1."""
    elems = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]

    def mult(x, y):
        kx, ky = int(x[1:]), int(y[1:])
        if x[0] == "r" and y[0] == "r":
            return f"r{(kx + ky) % n}"
        if x[0] == "r":
            return f"s{(kx + ky) % n}"
        if y[0] == "r":
            return f"s{(kx - ky) % n}"
        return f"r{(kx - ky) % n}"

    return elems, mult


def identity_element(elems, mult):
    for e in elems:
        if all(mult(e, x) == x and mult(x, e) == x for x in elems):
            return e
    return None


def inverse_element(elems, mult, x):
    e = identity_element(elems, mult)
    for y in elems:
        if mult(x, y) == e and mult(y, x) == e:
            return y
    return None


def center(elems, mult):
    return [z for z in elems if all(mult(z, x) == mult(x, z) for x in elems)]
