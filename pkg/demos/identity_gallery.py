"""Verify a sample of the registered q-series identities and show the
first few coefficients of each side."""

from qbiject.identities import Cache, registry, verify

SAMPLE = ["AG", "BR", "GORDON_TE", "BRESSOUD_UF", "AGP_FORM", "ISAAC_BIS"]

cache = Cache()
reg = registry()

for key in SAMPLE:
    entry = reg[key]
    print(key, "-", entry.description)
    for r in (2, 3):
        for i in entry.i_range(r):
            rep = verify(key, r, i, 30, cache)
            status = "ok" if rep.ok else "MISMATCH at q^%d" % rep.mismatch_degree
            print("  r=%d i=%d  %s  coeffs %s ..." % (r, i, status, rep.lhs[:8]))
    print()
