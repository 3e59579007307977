"""Equality oracle for words of convex Dehn twists on a holed disk.

Each hole ``i`` is capped by a disk containing the two punctures ``2i - 1`` and
``2i``. This sends a twist about a curve enclosing holes ``S`` to the full
twist on the gathered punctures of ``S``, giving a braid on ``2k`` strands
which then acts on the free group of rank ``2k`` by the Artin action.

Capping boundary circles by twice-punctured disks induces an injective map of
mapping class groups (no complementary piece is a disk, a once-punctured disk
or an annulus), and the Artin action of the braid group is faithful. So equal
images certify equal mapping classes and unequal images refute equality.
A twist about a single hole survives as a full twist on its puncture pair,
which is why each hole is doubled.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import artin
from . import freegroup as fg
from .openbook import ConvexTwist, TwistWord


def strands_of(holes):
    return tuple(s for h in sorted(holes) for s in (2 * h - 1, 2 * h))


def twist_counts(word):
    """Per-hole signed count: sum of signs of the twists whose curve encloses the hole."""
    counts = [0] * word.page_holes
    for t in word:
        for h in t.holes:
            counts[h - 1] += t.sign
    return tuple(counts)


@dataclass(frozen=True)
class MCGImage:
    page_holes: int
    images: tuple
    counts: tuple

    def __matmul__(self, other):
        """Composite ``self o other``."""
        if other.page_holes != self.page_holes:
            raise ValueError("page sizes differ")
        return MCGImage(
            self.page_holes,
            fg.compose(self.images, other.images),
            tuple(a + b for a, b in zip(self.counts, other.counts)),
        )

    @property
    def size(self):
        return fg.total_length(self.images)

    def maps_boundary_to_conjugate(self):
        """Does the product of all generators go to a conjugate of itself?"""
        n = 2 * self.page_holes
        img = fg.apply(self.images, tuple(range(1, n + 1)))
        return _is_cyclic_rotation_conjugate(img, tuple(range(1, n + 1)))


def _is_cyclic_rotation_conjugate(w, target):
    # Cyclically reduce w, then compare against rotations of target.
    w = list(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    if len(w) != len(target):
        return False
    doubled = tuple(target) * 2
    n = len(target)
    return any(doubled[i:i + n] == tuple(w) for i in range(n))


def identity_image(k):
    return MCGImage(k, fg.identity(2 * k), (0,) * k)


@lru_cache(maxsize=None)
def _sparse_twist(k, holes, sign):
    imgs = artin.convex_full_twist_images(2 * k, strands_of(holes), sign)
    return tuple((g, w) for g, w in enumerate(imgs, start=1) if w != (g,))


def twist_image(t, k):
    if t.holes[-1] > k:
        raise ValueError(f"twist {t} does not fit on {k} holes")
    sparse = _sparse_twist(k, t.holes, t.sign)
    imgs = list(fg.identity(2 * k))
    for g, w in sparse:
        imgs[g - 1] = w
    counts = [0] * k
    for h in t.holes:
        counts[h - 1] = t.sign
    return MCGImage(k, tuple(imgs), tuple(counts))


def _compose_images(imgs, t, k):
    # imgs o T, recomputing only generators that T moves.
    new = list(imgs)
    for g, w in _sparse_twist(k, t.holes, t.sign):
        new[g - 1] = fg.apply(imgs, w)
    return new


def word_image(w):
    k = w.page_holes
    imgs = fg.identity(2 * k)
    for t in w:
        imgs = _compose_images(imgs, t, k)
    return MCGImage(k, tuple(imgs), twist_counts(w))


def equal(w1, w2):
    """Do two twist words define the same mapping class?"""
    if w1.page_holes != w2.page_holes:
        raise ValueError(f"page sizes differ: {w1.page_holes} vs {w2.page_holes}")
    if twist_counts(w1) != twist_counts(w2):
        return False
    return word_image(w1).images == word_image(w2).images


def is_trivial(w):
    return word_image(w).images == fg.identity(2 * w.page_holes)


def as_word(k, spec):
    """Build a TwistWord from ``[(holes, sign), ...]`` or bare hole tuples."""
    twists = []
    for item in spec:
        if isinstance(item, ConvexTwist):
            twists.append(item)
        elif len(item) == 2 and isinstance(item[1], int) and not isinstance(item[0], int):
            twists.append(ConvexTwist(tuple(item[0]), item[1]))
        else:
            twists.append(ConvexTwist(tuple(item)))
    return TwistWord(k, tuple(twists))
