"""Canonical small systems used throughout the package and its tests."""

from .core import Carrier, CountingSystem, EndoMap


def cyc(n, label="s"):
    """n-cycle: elements 0..n-1, successor mod n, base 0."""
    labels = tuple(f"e{i}" for i in range(n))
    f = EndoMap(tuple((i + 1) % n for i in range(n)))
    return CountingSystem(Carrier(labels), 0, (label,), (f,))


def rho(t, ell):
    """Tail of length t feeding a cycle of length ell; base 0.

    Carrier 0..t+ell-1 with f(i) = i+1 except f(t+ell-1) = t.  With t >= 1 the
    map is not injective; t = 0 gives cyc(ell).
    """
    n = t + ell
    labels = tuple(f"e{i}" for i in range(n))
    table = tuple(i + 1 if i < n - 1 else t for i in range(n))
    return CountingSystem(Carrier(labels), 0, ("s",), (EndoMap(table),))


def zpair(n):
    """Mod-n model of the integers: successor and predecessor, base 0."""
    labels = tuple(f"e{i}" for i in range(n))
    plus = EndoMap(tuple((i + 1) % n for i in range(n)))
    minus = EndoMap(tuple((i - 1) % n for i in range(n)))
    return CountingSystem(Carrier(labels), 0, ("+", "-"), (plus, minus))


def one_point():
    return CountingSystem(Carrier(("e0",)), 0, ("s",), (EndoMap((0,)),))


SIGN_ODOT_LINES = (
    "odot",
    "+ + = +",
    "+ - = -",
    "- + = -",
    "- - = +",
    "unit +",
)


def rho_collapse(t, ell, k):
    """Exponent collapse for the tail-and-cycle shape: identity below the
    tail length, then reduced modulo the cycle length."""
    if k < t:
        return k
    return (k - t) % ell + t
