"""Regenerate src/ssweil/_moduli.py.

For every supported (p, r) pick the least primitive monic polynomial of
degree r over F_p, where "least" compares the lower coefficients as the
little-endian base-p integer used for field elements.
"""
import sys
from sympy import factorint

PRIMES_FULL = (2, 3, 5, 7, 11, 13)
PRIMES_SMALL = (17, 19, 23, 29, 31, 37, 41, 43, 47)
LIMIT = 2 ** 32


def pairs():
    for p in PRIMES_FULL:
        rmax = 24 if p == 2 else 8
        for r in range(1, rmax + 1):
            if p ** r <= LIMIT:
                yield p, r
    for p in PRIMES_SMALL:
        for r in (1, 2):
            yield p, r


def mulmod(a, b, f, p):
    r = len(f) - 1
    prod = [0] * (2 * r - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, r - 1, -1):
        c = prod[k]
        if c:
            for i in range(r + 1):
                prod[k - r + i] = (prod[k - r + i] - c * f[i]) % p
    return prod[:r]


def powmod(a, e, f, p):
    r = len(f) - 1
    res = [1] + [0] * (r - 1)
    while e:
        if e & 1:
            res = mulmod(res, a, f, p)
        a = mulmod(a, a, f, p)
        e >>= 1
    return res


def is_primitive(f, p, primes):
    r = len(f) - 1
    q = p ** r
    x = [0, 1] + [0] * (r - 2) if r > 1 else [(-f[0]) % p]
    one = [1] + [0] * (r - 1)
    if powmod(x, q - 1, f, p) != one:
        return False
    return all(powmod(x, (q - 1) // l, f, p) != one for l in primes)


def least_primitive(p, r):
    primes = list(factorint(p ** r - 1))
    for n in range(p ** r):
        low = [(n // p ** i) % p for i in range(r)]
        f = low + [1]
        if f[0] and is_primitive(f, p, primes):
            return tuple(f)
    raise RuntimeError((p, r))


def main(path):
    lines = ['"""Fixed primitive moduli, generated by scripts/gen_moduli.py."""', "",
             "MODULI = {"]
    for p, r in pairs():
        lines.append(f"    ({p}, {r}): {least_primitive(p, r)!r},")
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
