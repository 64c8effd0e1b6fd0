# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel: the n=2 perfect-element search in int64 arithmetic.

Mirrors _scan_py.scan element for element.  Norms are factored through a
smallest-prime-factor sieve, split exponents are recovered by repeated exact
division, and the delta_2 product is accumulated per prime power.  Only
callable for bounds the wrapper certifies int64-safe (<= 10^7)."""

from libc.stdlib cimport free, malloc

ctypedef long long i64

cdef enum:
    CLS_INERT = 0
    CLS_RAMIFIED = 1
    CLS_SPLIT = 2


cdef i64 _isqrt(i64 x) noexcept:
    cdef i64 s
    if x < 0:
        return -1
    s = <i64> ((<double> x) ** 0.5)
    while s > 0 and s * s > x:
        s -= 1
    while (s + 1) * (s + 1) <= x:
        s += 1
    return s


cdef i64 _modpow(i64 base, i64 e, i64 mod) noexcept:
    cdef i64 out = 1
    base %= mod
    while e:
        if e & 1:
            out = out * base % mod
        base = base * base % mod
        e >>= 1
    return out


cdef int _classify(i64 p, i64 d) noexcept:
    if p == 2:
        if d == -1 or d == -2:
            return CLS_RAMIFIED
        if d == -7:
            return CLS_SPLIT
        return CLS_INERT
    if (-d) % p == 0:
        return CLS_RAMIFIED
    if _modpow(d % p + p, (p - 1) >> 1, p) == 1:
        return CLS_SPLIT
    return CLS_INERT


cdef bint _solve_norm(i64 p, i64 d, bint half, i64 *ap, i64 *bp) noexcept:
    # First (a, b) with N(a, b) = p; any solution serves, the delta_2
    # contribution is symmetric in the conjugate pair.
    cdef i64 v, u, rem, vmax, b, a
    if half:
        vmax = _isqrt(4 * p // (-d))
        for v in range(vmax + 1):
            rem = 4 * p + d * v * v
            u = _isqrt(rem)
            if u >= 0 and u * u == rem and (u - v) % 2 == 0:
                ap[0] = (u - v) >> 1
                bp[0] = v
                return True
    else:
        vmax = _isqrt(p // (-d))
        for b in range(vmax + 1):
            rem = p + d * b * b
            a = _isqrt(rem)
            if a >= 0 and a * a == rem:
                ap[0] = a
                bp[0] = b
                return True
    return False


cdef i64 _geo(i64 p, i64 r) noexcept:
    # 1 + p + ... + p^r
    cdef i64 out = 1, term = 1, j
    for j in range(r):
        term *= p
        out += term
    return out


cdef i64 _split_exponent(i64 x, i64 y, i64 p, i64 pa, i64 pb,
                         i64 d, bint half, i64 c, i64 emax) noexcept:
    # Times (pa, pb) divides (x, y), capped at emax.
    cdef i64 r = 0, re, im
    while r < emax:
        if half:
            re = x * (pa + pb) - c * y * pb
            im = y * pa - x * pb
        else:
            re = x * pa - d * y * pb
            im = y * pa - x * pb
        if re % p != 0 or im % p != 0:
            break
        x = re // p
        y = im // p
        r += 1
    return r


cdef i64 _element(i64 a, i64 b, i64 n, i64 d, bint half, i64 c,
                  i64 t, bint odd_only, int *spf, dict pcache,
                  list hits, i64 scanned) except? -1:
    cdef i64 m, p, e, delta, r1, r2, pa, pb
    cdef int cls
    cdef tuple cached
    if odd_only and n % 2 == 0:
        return scanned
    scanned += 1
    if n == 1:
        return scanned
    delta = 1
    m = n
    while m > 1:
        p = spf[m]
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        cached = pcache.get(p)
        if cached is None:
            cls = _classify(p, d)
            pa = pb = 0
            if cls != CLS_INERT:
                if not _solve_norm(p, d, half, &pa, &pb):
                    raise RuntimeError(f"norm equation unsolvable for p={p}, d={d}")
            cached = (cls, pa, pb)
            pcache[p] = cached
        cls = cached[0]
        pa = cached[1]
        pb = cached[2]
        if cls == CLS_INERT:
            if e & 1:
                raise RuntimeError(f"odd inert exponent at p={p}, n={n}")
            delta *= _geo(p * p, e >> 1)
        elif cls == CLS_RAMIFIED:
            delta *= _geo(p, e)
        else:
            r1 = _split_exponent(a, b, p, pa, pb, d, half, c, e)
            r2 = e - r1
            delta *= _geo(p, r1) * _geo(p, r2)
    if delta == t * n:
        hits.append((a, b))
    return scanned


def scan(int d, i64 bound, i64 t, bint odd_only):
    """Hits [(a, b), ...] (raster order) and the scanned-element count."""
    cdef i64 QH, c, n, a, b, amax, bmax, s, lo, hi, i, j
    cdef bint half
    cdef int *spf
    cdef dict pcache = {}
    cdef list hits = []
    cdef i64 scanned = 0

    if d not in (-1, -2, -3, -7, -11, -19, -43, -67, -163):
        raise ValueError(f"unsupported d={d}")
    if bound < 1 or bound > 50_000_000:
        raise ValueError(f"kernel bound out of range: {bound}")
    if t < 2 or t > 1_000_000:
        raise ValueError(f"kernel t out of range: {t}")

    half = d % 4 == -3  # C remainder: true exactly for the d = 1 mod 4 rings
    c = (d - 1) // 4 if half else 0
    QH = (1 - d) // 4 if half else 0

    spf = <int *> malloc((bound + 1) * sizeof(int))
    if spf == NULL:
        raise MemoryError("smallest-prime-factor sieve allocation failed")
    try:
        for i in range(bound + 1):
            spf[i] = 0
        i = 2
        while i <= bound:
            if spf[i] == 0:
                spf[i] = <int> i
                j = i * i
                while j <= bound:
                    if spf[j] == 0:
                        spf[j] = <int> i
                    j += i
            i += 1

        # Raster order matches the pure backend's iter_sector_coords.
        if d == -1:
            amax = _isqrt(bound)
            for a in range(1, amax + 1):
                bmax = _isqrt(bound - a * a)
                for b in range(0, bmax + 1):
                    n = a * a + b * b
                    scanned = _element(a, b, n, d, half, c, t, odd_only,
                                       spf, pcache, hits, scanned)
        elif d == -2:
            amax = _isqrt(bound)
            for a in range(1, amax + 1):
                scanned = _element(a, 0, a * a, d, half, c, t, odd_only,
                                   spf, pcache, hits, scanned)
            bmax = _isqrt(bound // 2)
            for b in range(1, bmax + 1):
                amax = _isqrt(bound - 2 * b * b)
                for a in range(-amax, amax + 1):
                    n = a * a + 2 * b * b
                    scanned = _element(a, b, n, d, half, c, t, odd_only,
                                       spf, pcache, hits, scanned)
        elif d == -3:
            amax = _isqrt(bound)
            for a in range(1, amax + 1):
                b = 0
                n = a * a
                while n <= bound:
                    scanned = _element(a, b, n, d, half, c, t, odd_only,
                                       spf, pcache, hits, scanned)
                    b += 1
                    n = a * a + a * b + b * b
        else:
            amax = _isqrt(bound)
            for a in range(1, amax + 1):
                scanned = _element(a, 0, a * a, d, half, c, t, odd_only,
                                   spf, pcache, hits, scanned)
            bmax = _isqrt(4 * bound // (-d))
            for b in range(1, bmax + 1):
                s = _isqrt(4 * bound + d * b * b)
                lo = -((s + b) // 2)
                hi = (s - b) >> 1  # arithmetic shift: floor even when s < b
                for a in range(lo, hi + 1):
                    n = a * a + a * b + QH * b * b
                    scanned = _element(a, b, n, d, half, c, t, odd_only,
                                       spf, pcache, hits, scanned)
    finally:
        free(spf)
    return hits, scanned
