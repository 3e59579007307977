"""Admissible k-tuples, strict blowups and the index set of lens space fillings.

Tuples are plain Python tuples of ints and all positions are 1-based, to keep
the blowup/blowdown index arithmetic readable against the formulas.
"""

from dataclasses import dataclass
from fractions import Fraction

from .contfrac import dual_expansion, evaluate, is_admissible


class InconsistencyError(RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""


def is_member(t):
    """Membership in Z_k: admissible, nonnegative and evaluating to 0."""
    t = tuple(t)
    if not t or any(x < 0 for x in t):
        return False
    return is_admissible(t) and evaluate(t) == 0


def check_member(t):
    t = tuple(t)
    if not is_member(t):
        raise ValueError(f"{t} is not an admissible tuple evaluating to 0")
    return t


def u(l):
    """The height-0 tuple ``(1, 2, ..., 2, 1)`` of length ``l``; ``u(1) = (0,)``."""
    if l < 1:
        raise ValueError("length must be positive")
    if l == 1:
        return (0,)
    return (1,) + (2,) * (l - 2) + (1,)


def is_u(t):
    return tuple(t) == u(len(t))


def strict_blowup(t, j):
    """psi_j: insert a 1 after position ``j`` and bump its neighbours."""
    t = tuple(t)
    r = len(t)
    if not 1 <= j <= r:
        raise IndexError(f"blowup index {j} out of range 1..{r}")
    if j == r:
        return t[:-1] + (t[-1] + 1, 1)
    return t[: j - 1] + (t[j - 1] + 1, 1, t[j] + 1) + t[j + 1:]


def strict_blowdown(t, i):
    """Left inverse of ``strict_blowup(., i - 1)``; position ``i`` must hold 1."""
    t = tuple(t)
    n = len(t)
    if not 2 <= i <= n:
        raise IndexError(f"blowdown index {i} out of range 2..{n}")
    if t[i - 1] != 1:
        raise ValueError(f"entry {i} of {t} is {t[i - 1]}, not 1")
    if i == n:
        return t[: i - 2] + (t[i - 2] - 1,)
    return t[: i - 2] + (t[i - 2] - 1, t[i] - 1) + t[i + 1:]


def height(t):
    """``|n| - 2(k - 1)``; the number of interior blowups above some u_l."""
    t = check_member(t)
    return sum(t) - 2 * (len(t) - 1)


@dataclass(frozen=True)
class BlowdownTrace:
    """Leftmost-1 blowdowns ``(tuple, index)`` applied in order, and the end tuple."""

    steps: tuple
    terminal: tuple

    @property
    def blowup_indices(self):
        """Interior blowup indices j, outermost (last performed blowdown) first."""
        return tuple(i - 1 for _, i in reversed(self.steps))


def leftmost_index(t):
    for i in range(2, len(t) + 1):
        if t[i - 1] == 1:
            return i
    return None


def leftmost_blowdown_trace(t):
    t = check_member(t)
    s = height(t)
    steps = []
    cur = t
    for _ in range(s):
        i = leftmost_index(cur)
        if i is None or i == len(cur):
            raise InconsistencyError(f"no interior 1 in {cur} at positive height")
        steps.append((cur, i))
        cur = strict_blowdown(cur, i)
        if not is_member(cur):
            raise InconsistencyError(f"blowdown left Z_k: {cur}")
    if not is_u(cur):
        raise InconsistencyError(f"trace of {t} ended at {cur}, not u_{len(cur)}")
    return BlowdownTrace(tuple(steps), cur)


def canonical_blowup_sequence(t):
    """Blowup indices taking ``(1, 1)`` to ``t`` (empty for ``(0)`` and ``(1, 1)``).

    End blowups build ``u_{k-s}`` first, then the leftmost trace is replayed
    backwards. An index equal to the current length is an end blowup.
    """
    t = check_member(t)
    if len(t) == 1:
        return ()
    trace = leftmost_blowdown_trace(t)
    l = len(trace.terminal)
    seq = list(range(2, l))  # (1,1) -> (1,2,1) -> ... -> u_l
    seq.extend(trace.blowup_indices)
    return tuple(seq)


def replay_blowups(seq):
    t = (1, 1)
    for j in seq:
        t = strict_blowup(t, j)
    return t


def enumerate_fillings(p, q):
    """Z_k(p/(p-q)): members of Z_k bounded componentwise by ``[b_1..b_k]``."""
    b = dual_expansion(p, q)
    k = len(b)
    if k == 1:
        return [(0,)]
    found = []

    # Grow suffixes right to left; each tail value is a denominator of the next.
    def extend(pos, suffix, x):
        if pos == 0:
            if x == 0:
                found.append(suffix)
            return
        if x <= 0:
            return
        for v in range(1, b[pos - 1] + 1):
            extend(pos - 1, (v,) + suffix, v - 1 / x)

    for v in range(1, b[-1] + 1):
        extend(k - 1, (v,), Fraction(v))
    return sorted(found)


def omit(m, j):
    m = tuple(m)
    if not 1 <= j <= len(m):
        raise IndexError(f"omit index {j} out of range 1..{len(m)}")
    return m[: j - 1] + m[j:]


def splice(z, j, value):
    z = tuple(z)
    if not 1 <= j <= len(z) + 1:
        raise IndexError(f"splice index {j} out of range 1..{len(z) + 1}")
    return z[: j - 1] + (value,) + z[j - 1:]


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def tuple_sequence(n):
    """``n_0 = u_k, ..., n_s = n`` built recursively from the leftmost trace."""
    n = check_member(n)
    k = len(n)
    if height(n) == 0:
        return [n]
    i = leftmost_index(n)
    j = i - 1
    inner = tuple_sequence(strict_blowdown(n, i))
    return [u(k)] + [strict_blowup(x, j) for x in inner]


def lemma_tuple_sequence(n, m):
    """Pairs ``(n_i, m_i)`` with ``m_i = n + m - n_i`` along ``tuple_sequence(n)``."""
    n = check_member(n)
    m = tuple(m)
    if len(m) != len(n):
        raise ValueError("n and m must have the same length")
    if height(n) == 0:
        raise ValueError(f"{n} has height 0; there is no sequence to build")
    total = _vadd(n, m)
    return [(ni, _vsub(total, ni)) for ni in tuple_sequence(n)]


def blowdown_grouping(seq):
    """Indices ``i`` whose ``m_i`` is componentwise nonnegative."""
    return [i for i, (_, mi) in enumerate(seq) if all(x >= 0 for x in mi)]


def leftmost_reductions(n, m):
    """Pairs ``(n^i, m^i)`` for i = 0..s: the leftmost trace with m carried along.

    Each blowdown at position ``i`` omits the ``i``-th entry of ``m``.
    """
    trace = leftmost_blowdown_trace(n)
    out = [(tuple(n), tuple(m))]
    cur_m = tuple(m)
    for t, i in trace.steps:
        cur_m = omit(cur_m, i)
        out.append((strict_blowdown(t, i), cur_m))
    return out
