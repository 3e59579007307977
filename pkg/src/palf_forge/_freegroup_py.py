"""Pure-Python free group kernels.

Words are tuples of nonzero ints: ``g`` is the generator x_g (1-based) and
``-g`` its inverse. Automorphisms are tuples of generator images.

This module is the reference implementation; ``_freegroup_cy`` mirrors it
letter for letter.
"""


def reduce_word(word):
    """Freely reduce ``word``."""
    out = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(word):
    return tuple(-a for a in reversed(word))


def apply(images, word):
    """Image of ``word`` under the endomorphism with generator ``images``."""
    out = []
    push = out.append
    pop = out.pop
    for a in word:
        img = images[a - 1] if a > 0 else None
        if img is None:
            seq = [-b for b in reversed(images[-a - 1])]
        else:
            seq = img
        for b in seq:
            if out and out[-1] == -b:
                pop()
            else:
                push(b)
    return tuple(out)


def compose(outer, inner):
    """Images of ``outer`` after ``inner`` (``inner`` applied first)."""
    return tuple(apply(outer, w) for w in inner)


def total_length(images):
    return sum(len(w) for w in images)
