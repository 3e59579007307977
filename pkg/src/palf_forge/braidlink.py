"""Framed braid surgery descriptions and their agreement with the open book picture.

A tuple ``n`` in Z_k gives a framed pure braid on ``k`` strands in two ways:
by handle slides of the linear chain of unknots (``slide_framings`` followed by
``braid_word``), and by blowing down the (-1)-curves of the stabilizations
(``braid_from_stabilization``). ``verify_equivalence`` compares the two.
"""

from dataclasses import dataclass, field

from . import artin
from . import openbook as ob
from . import tuples as tp


@dataclass(frozen=True)
class FramedBraid:
    strand_count: int
    word: tuple
    framings: tuple

    def __post_init__(self):
        word = tuple(self.word)
        framings = tuple(self.framings)
        if len(framings) != self.strand_count:
            raise ValueError("one framing per strand is required")
        for b in word:
            if not 1 <= abs(b) <= self.strand_count - 1:
                raise ValueError(f"generator {b} out of range for {self.strand_count} strands")
        if artin.permutation(self.strand_count, word) != tuple(range(1, self.strand_count + 1)):
            raise ValueError("word is not a pure braid")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "framings", framings)

    def images(self):
        """Artin images on the rank-``strand_count`` free group."""
        return artin.braid_images(self.strand_count, self.word)

    def is_trivial(self):
        return self.images() == artin.fg.identity(self.strand_count)


@dataclass(frozen=True)
class SurgeryPresentation:
    """A framed braid together with marked unknots ``(strands, sign, multiplicity)``."""

    braid: FramedBraid
    marked_unknots: tuple = ()

    def __post_init__(self):
        k = self.braid.strand_count
        for strands, sign, mult in self.marked_unknots:
            if not strands or min(strands) < 1 or max(strands) > k:
                raise ValueError(f"bad strand set {strands}")
            if sign not in (1, -1) or mult < 0:
                raise ValueError("sign must be +1 or -1 and multiplicity nonnegative")


def slide_framings(n):
    n = tp.check_member(n)
    out = list(n)
    for i in range(len(n) - 2, -1, -1):
        out[i] = n[i] + out[i + 1] - 2
    return tuple(out)


def braid_word(nprime):
    """Strand ``j`` wraps around strands ``1..j-1`` exactly ``n'_j - 1`` times."""
    nprime = tuple(nprime)
    k = len(nprime)
    if k < 1:
        raise ValueError("need at least one strand")
    letters = []
    for j in range(2, k + 1):
        reps = nprime[j - 1] - 1
        if reps < 0:
            raise ValueError(f"framing {nprime[j - 1]} at strand {j} gives a negative wrap count")
        block = [-i for i in range(j - 1, 0, -1)] + [-i for i in range(1, j)]
        letters.extend(block * reps)
    return FramedBraid(k, tuple(letters), nprime)


def braid_from_stabilization(trace, word=None):
    """Blow down one (-1)-curve per stabilizing twist, in trace order.

    Each curve links the strands of its final hole set; blowing it down puts a
    right-handed full twist on those strands and raises each of their framings
    by one.
    """
    if word is None:
        word, _ = ob.replay_stabilizations(trace.blowups)
    k = word.page_holes
    if trace.page_holes != k:
        raise ValueError("trace and word disagree on page size")
    letters = []
    framings = [0] * k
    for t in word:
        letters.extend(artin.convex_full_twist_letters(t.holes, 1))
        for h in t.holes:
            framings[h - 1] += 1
    return FramedBraid(k, tuple(letters), tuple(framings))


def surgery_presentation(n, m):
    """Framed braid for ``n`` plus the link L: ``|m_i|`` unknots around strands ``1..i``."""
    word, trace = ob.stabilization_word(n)
    braid = braid_from_stabilization(trace, word)
    marked = tuple(
        (tuple(range(1, i + 1)), -1 if mi > 0 else 1, abs(mi))
        for i, mi in enumerate(m, start=1)
        if mi
    )
    return SurgeryPresentation(braid, marked)


@dataclass(frozen=True)
class EquivalenceReport:
    tuple: tuple
    slide: tuple
    stabilization: tuple
    framings_agree: bool
    braids_agree: bool
    detail: str = field(default="")

    @property
    def passed(self):
        return self.framings_agree and self.braids_agree


def verify_equivalence(n):
    n = tp.check_member(n)
    slide = slide_framings(n)
    if len(n) == 1:
        return EquivalenceReport(n, slide, slide, True, True, "single strand")
    from_slides = braid_word(slide)
    word, trace = ob.stabilization_word(n)
    from_stab = braid_from_stabilization(trace, word)
    fr = from_slides.framings == from_stab.framings
    br = from_slides.images() == from_stab.images()
    detail = ""
    if not fr:
        detail = f"framings {from_slides.framings} vs {from_stab.framings}"
    elif not br:
        detail = "Artin images differ"
    return EquivalenceReport(n, slide, from_stab.framings, fr, br, detail)


def blowup_framing_effect(nprime, j):
    nprime = tuple(nprime)
    r = len(nprime)
    if not 1 <= j <= r - 1:
        raise IndexError(f"blowup index {j} out of range 1..{r - 1}")
    head = tuple(x + 1 for x in nprime[:j])
    return head + (nprime[j], nprime[j] + 1) + nprime[j + 1:]
