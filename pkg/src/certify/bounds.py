from __future__ import annotations

from ..convert.dyadic import chaind_bound
from ..utils.errors import InvalidInputError


def chordal_bound(m: int, n: int, k: int) -> int:
    return (m + n) * (k - 1)


def sr_bound(m: int, n: int, k: int) -> int:
    return 2 * (m + n) * (k - 1)


def chain3_bound(m: int, n: int, k: int) -> int:
    return (3 * m + 6 * n) * (k - 1)


def gig_bound(m: int, n: int, k: int) -> int:
    return 27 * (m + n) * (k - 1)


def class_bound(klass: str, m: int, n: int, k: int, d: int = None) -> int:
    """Edge bound for a K_{k,k}-free graph of the class with |U| = m, |V| = n"""
    if k < 1 or m < 0 or n < 0:
        raise InvalidInputError(f"Bad bound parameters m={m}, n={n}, k={k}")
    if klass == "chordal":
        return chordal_bound(m, n, k)
    if klass == "sr":
        return sr_bound(m, n, k)
    if klass == "chain3":
        return chain3_bound(m, n, k)
    if klass == "gig":
        return gig_bound(m, n, k)
    if klass == "chaind":
        if d is None:
            raise InvalidInputError("chaind needs the dimension d")
        return chaind_bound(d, m, n, k)
    raise InvalidInputError(f"Unknown bound class {klass!r}")
