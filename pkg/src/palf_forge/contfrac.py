"""Hirzebruch-Jung (minus-sign) continued fractions over the rationals.

``[n_1, ..., n_k]`` denotes ``n_1 - 1/(n_2 - 1/(... - 1/n_k))``. Everything is
exact; an evaluation that divides by zero returns ``None`` (undefined) rather
than raising, since admissibility testing is driven by exactly that event.
"""

from fractions import Fraction
from math import gcd


def hj_expand(p, q):
    """Expansion of ``p/q`` with every entry at least 2.

    >>> hj_expand(81, 47)
    [2, 4, 3, 3, 2]
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise TypeError("p and q must be integers")
    if not 1 <= q < p:
        raise ValueError(f"need 1 <= q < p, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    entries = []
    while q:
        a = -(-p // q)  # ceiling
        entries.append(a)
        p, q = q, a * q - p
    return entries


def tail_values(t):
    """Right-to-left partial evaluations ``[x_1, ..., x_k]``.

    ``x_k = n_k`` and ``x_i = n_i - 1/x_{i+1}``. Once a zero denominator is
    met, that value and every value to its left are ``None``.
    """
    if not t:
        raise ValueError("empty continued fraction")
    xs = [None] * len(t)
    x = Fraction(t[-1])
    xs[-1] = x
    for i in range(len(t) - 2, -1, -1):
        if x is None or x == 0:
            x = None
        else:
            x = t[i] - 1 / x
        xs[i] = x
    return xs


def evaluate(t):
    """Value of ``[t_1, ..., t_k]`` as a Fraction, or ``None`` if undefined."""
    return tail_values(t)[0]


def is_admissible(t):
    """True when every denominator ``x_2, ..., x_k`` is strictly positive."""
    xs = tail_values(t)
    if xs[0] is None:
        return False
    return all(x > 0 for x in xs[1:])


def fraction_of(t):
    """``(p, q)`` with ``[t] = p/q`` in lowest terms, for a defined positive value."""
    v = evaluate(t)
    if v is None:
        raise ValueError(f"continued fraction {list(t)} is undefined")
    return v.numerator, v.denominator


def dual_expansion(p, q):
    """Expansion of ``p/(p-q)``, the dual of ``hj_expand(p, q)``."""
    return hj_expand(p, p - q)
