"""Enumerates the small family instances shared by several test modules."""

from liftlab.families import family_code

QS = (2, 3, 4, 5, 7, 8, 9)
LIMIT = 1 << 22


def _families(max_n):
    for q in QS:
        for m in range(2, 8):
            n = (q**m - 1) // (q - 1)
            if n > max_n:
                break
            yield ("simplex", q, m, {})
            yield ("hamming", q, m, {})
            if q >= 3:
                for h in range(1, (m - 1) * (q - 1) + 1):
                    yield ("prm", q, m, {"h": h})
    for m in range(2, 6):
        if 2**m > max_n:
            break
        for r in range(m):
            yield ("rm", 2, m, {"order": r})


def base_instances(max_n=40):
    """(label, code) for every base family member of length <= max_n."""
    seen = set()
    for fam, q, m, extra in _families(max_n):
        C = family_code(fam, q, m, extra.get("order", 1), extra.get("h", 1))
        label = f"{fam}-q{q}-m{m}" + "".join(f"-{k}{v}" for k, v in extra.items())
        if label not in seen:
            seen.add(label)
            yield label, C


def lifted_instances(max_n=40, limit=LIMIT, max_ell=4):
    """(label, code, ell) with both the lifted code and its dual of size <= limit."""
    for label, C in base_instances(max_n):
        q = C.field.order
        for ell in range(1, max_ell + 1):
            Q = q**ell
            if Q > 1 << 12:
                break
            if C.k == C.n:
                if Q**C.k > limit:
                    break
            elif max(Q**C.k, Q ** (C.n - C.k)) > limit:
                break
            yield f"{label}-l{ell}", C, ell
