"""Artin action of braids on free groups, and full twists on strand subsets.

Braid words are sequences of signed ints read top to bottom: ``i`` is the
generator sigma_i and ``-i`` its inverse. A word ``b_1 ... b_m`` acts on the
free group by ``phi(b_1) o ... o phi(b_m)`` with

    sigma_i:      x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
    sigma_i^-1:   x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

Handedness conventions shared by the twist oracle and the framed braids:

* A right-handed full twist on a block of adjacent strands is written in
  inverse generators, ``(sigma_a^-1 ... sigma_{b-1}^-1)^(b-a+1)``; it acts by
  ``x_i -> X^-1 x_i X`` on the block, ``X = x_a ... x_b``.
* A strand subset is gathered into a block by moving each later strand left
  with positive generators, then twisted, then ungathered.

These are the choices under which the lantern relation holds in the order
``delta beta gamma`` and the two framed braid descriptions coincide; the
mirrored choices fail both checks.
"""

from functools import lru_cache

from . import freegroup as fg

RIGHT_TWIST_LETTER = -1
GATHER_LETTER = 1


def rmul(images, letter):
    """Images of ``F o phi(letter)`` given the images of ``F``."""
    i = abs(letter)
    imgs = list(images)
    fi, fj = imgs[i - 1], imgs[i]
    if letter > 0:
        imgs[i - 1] = fg.reduce_word(fi + fj + fg.invert(fi))
        imgs[i] = fi
    else:
        imgs[i - 1] = fj
        imgs[i] = fg.reduce_word(fg.invert(fj) + fi + fj)
    return tuple(imgs)


def braid_images(n, letters, start=None):
    imgs = fg.identity(n) if start is None else tuple(start)
    for b in letters:
        if not 1 <= abs(b) <= n - 1:
            raise ValueError(f"generator {b} out of range for {n} strands")
        imgs = rmul(imgs, b)
    return imgs


def invert_letters(letters):
    return tuple(-b for b in reversed(letters))


def block_full_twist_letters(a, b, power=1):
    """Word for ``power`` right-handed full twists on adjacent strands a..b."""
    m = b - a + 1
    one = tuple(RIGHT_TWIST_LETTER * i for i in range(a, b)) * m
    if power >= 0:
        return one * power
    return invert_letters(one) * (-power)


def block_full_twist_images(n, a, b, power=1):
    x = tuple(range(a, b + 1))
    xp = x * abs(power) if power else ()
    left, right = (fg.invert(xp), xp) if power > 0 else (xp, fg.invert(xp))
    return tuple(
        fg.reduce_word(left + (g,) + right) if a <= g <= b else (g,)
        for g in range(1, n + 1)
    )


def gather_letters(strands):
    """Letters moving sorted ``strands`` into a block at ``strands[0]``."""
    strands = sorted(strands)
    first = strands[0]
    letters = []
    for idx, p in enumerate(strands[1:], start=1):
        target = first + idx
        for q in range(p - 1, target - 1, -1):
            letters.append(GATHER_LETTER * q)
    return tuple(letters), first, first + len(strands) - 1


def convex_full_twist_letters(strands, power=1):
    g, a, b = gather_letters(strands)
    return g + block_full_twist_letters(a, b, power) + invert_letters(g)


@lru_cache(maxsize=None)
def convex_full_twist_images(n, strands, power=1):
    """Images of the full twist on ``strands`` (a sorted tuple), via the closed form."""
    g, a, b = gather_letters(strands)
    imgs = braid_images(n, g)
    imgs = fg.compose(imgs, block_full_twist_images(n, a, b, power))
    return braid_images(n, invert_letters(g), start=imgs)


def permutation(n, letters):
    """Strand permutation of a braid word (position -> starting strand)."""
    perm = list(range(1, n + 1))
    for b in letters:
        i = abs(b)
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)
