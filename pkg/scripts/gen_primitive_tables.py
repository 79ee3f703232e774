"""Regenerate src/mwclab/tables.py.

Enumerates every primitive polynomial over GF(2) for degrees 3..13 by
brute force (order test on x modulo the candidate), then derives the
Gold preferred-pair partner for the odd degrees we ship: the partner is
the primitive polynomial whose all-ones-state LFSR output is a cyclic
shift of the decimation-by-3 of the first polynomial's output.

Self-contained on purpose: the package imports the table this script
writes, so the script cannot import the package.

Usage: python scripts/gen_primitive_tables.py > src/mwclab/tables.py
"""

import sys

import numpy as np

# prime factorizations of 2**n - 1, needed for the order test
FACTORS = {
    3: (7,),
    4: (3, 5),
    5: (31,),
    6: (3, 7),
    7: (127,),
    8: (3, 5, 17),
    9: (7, 73),
    10: (3, 11, 31),
    11: (23, 89),
    12: (3, 5, 7, 13),
    13: (8191,),
}

GOLD_DEGREES = (5, 7, 9, 11)


def polymulmod(a, b, mod, n):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> n) & 1:
            a ^= mod
    return r


def polypowmod(base, exp, mod, n):
    r = 1
    while exp:
        if exp & 1:
            r = polymulmod(r, base, mod, n)
        base = polymulmod(base, base, mod, n)
        exp >>= 1
    return r


def is_primitive(poly, n):
    # primitive <=> x has multiplicative order 2**n - 1 mod poly
    order = (1 << n) - 1
    if polypowmod(2, order, poly, n) != 1:
        return False
    for q in FACTORS[n]:
        if polypowmod(2, order // q, poly, n) == 1:
            return False
    return True


def primitive_polys(n):
    out = []
    for c in range(1 << (n - 1)):
        poly = (1 << n) | (c << 1) | 1
        # even-weight polynomials are divisible by x + 1
        if bin(poly).count("1") % 2 == 1 and is_primitive(poly, n):
            out.append(poly)
    return out


def lfsr_sequence(poly, n):
    # Fibonacci LFSR, all-ones start, output is the LSB, bit b -> 1 - 2b
    M = (1 << n) - 1
    taps = poly & M
    state = M
    out = np.empty(M, dtype=np.int8)
    for t in range(M):
        out[t] = 1 - 2 * (state & 1)
        fb = bin(state & taps).count("1") & 1
        state = (state >> 1) | (fb << (n - 1))
    return out


def gold_partner(polys, n):
    M = (1 << n) - 1
    a = lfsr_sequence(polys[0], n).astype(np.float64)
    dec = a[(3 * np.arange(M)) % M]
    fd = np.fft.fft(dec)
    for q in polys:
        b = lfsr_sequence(q, n).astype(np.float64)
        cc = np.fft.ifft(np.conj(np.fft.fft(b)) * fd).real
        if np.rint(cc).max() == M:
            return q
    raise RuntimeError(f"no partner found for degree {n}")


def main():
    tables = {n: primitive_polys(n) for n in FACTORS}
    pairs = {n: (tables[n][0], gold_partner(tables[n], n)) for n in GOLD_DEGREES}

    w = sys.stdout.write
    w('"""Primitive polynomial tables over GF(2), degrees 3..13.\n\n')
    w("Generated by scripts/gen_primitive_tables.py; do not edit by hand.\n")
    w("Polynomials are encoded as integers with bit i holding the\n")
    w("coefficient of x**i, so x**3 + x + 1 is 0b1011 = 0xb.  Each tuple\n")
    w("lists every primitive polynomial of its degree in ascending\n")
    w("encoding order.\n")
    w('"""\n\n')
    w("# prime factorizations of 2**n - 1 (order tests and table checksums)\n")
    w("MERSENNE_FACTORS = {\n")
    for n, fs in FACTORS.items():
        w(f"    {n}: {fs!r},\n")
    w("}\n\n")
    w("PRIMITIVE_POLYS = {\n")
    for n, polys in tables.items():
        w(f"    {n}: (\n")
        for i in range(0, len(polys), 10):
            row = ", ".join(f"0x{p:x}" for p in polys[i : i + 10])
            w(f"        {row},\n")
        w("    ),\n")
    w("}\n\n")
    w("# (base polynomial, partner polynomial) per odd degree; the partner\n")
    w("# generates the decimation-by-3 orbit of the base m-sequence, which\n")
    w("# makes the pair preferred (3-valued cross-correlation)\n")
    w("GOLD_PREFERRED_PAIRS = {\n")
    for n, (p, q) in pairs.items():
        w(f"    {n}: (0x{p:x}, 0x{q:x}),\n")
    w("}\n")


if __name__ == "__main__":
    main()
