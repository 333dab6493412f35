"""Brute-force reference implementations used as oracles in tests.

Everything here is deliberately naive and independent of the package
internals: membership uses the ``in`` operator, counting scans every window,
first occurrences come from ``str.find``, and the ordering shapes are tested
by reconstructing the expected partner string instead of diffing positions.
"""


def distinct_factors(w, n):
    return sorted({w[i : i + n] for i in range(len(w) - n + 1)})


def occurrences(w, v):
    n = len(v)
    return sum(1 for i in range(len(w) - n + 1) if w[i : i + n] == v)


def saturated(w, n):
    half = len(w) // 2
    return all(w.find(v) + n <= half for v in distinct_factors(w, n))


def successor(w, v):
    fs = distinct_factors(w, len(v))
    i = fs.index(v)
    return fs[i + 1] if i + 1 < len(fs) else None


def nfop_pair_ok(v, vp, variant=3):
    # final-letter step
    if v[:-1] == vp[:-1] and v[-1] < vp[-1]:
        if variant == 1 or ord(vp[-1]) - ord(v[-1]) == 1:
            return True
    # adjacent ascending transposition: rebuild the expected partner
    for i in range(len(v) - 1):
        a, b = v[i], v[i + 1]
        if a < b and (variant == 1 or ord(b) - ord(a) == 1):
            if vp == v[:i] + b + a + v[i + 2 :]:
                return True
    return False


def nfop_verdict(w, max_len, variant=3):
    """(status, violation length or None, pair or None), same scan order
    as the real check."""
    skipped = False
    for n in range(1, max_len + 1):
        if not saturated(w, n):
            skipped = True
            continue
        fs = distinct_factors(w, n)
        for v, vp in zip(fs, fs[1:]):
            if not nfop_pair_ok(v, vp, variant):
                return "Violated", n, (v, vp)
    if skipped:
        return "Indeterminate", None, None
    return "ConsistentUpTo", None, None


def minimal_imbalance(w, max_len):
    """(u, (0u0, 1u1)) for the shortest then lex-least u, or None."""
    for m in range(2, max_len + 1):
        candidates = [""] if m == 2 else distinct_factors(w, m - 2)
        for u in candidates:
            lo, hi = "0" + u + "0", "1" + u + "1"
            if lo in w and hi in w:
                return u, (lo, hi)
    return None


def balance_verdict(w, max_len):
    """(status, pair) matching the real check's outcome fields."""
    hit = minimal_imbalance(w, max_len)
    if hit is None:
        return "ConsistentUpTo", None
    return "Violated", hit[1]


def hamming(v, vp):
    return sum(1 for a, b in zip(v, vp) if a != b)
