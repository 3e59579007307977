"""Convex Dehn twists on a holed disk and the stabilization algorithm.

Holes are labelled 1..k left to right (equivalently counterclockwise near the
outer boundary). A convex twist is determined by the set of holes its curve
encloses together with a handedness sign. Words are written in functional
order: the rightmost twist acts first.
"""

from dataclasses import dataclass, field

from . import tuples as tp


@dataclass(frozen=True, order=True)
class ConvexTwist:
    holes: tuple
    sign: int = 1

    def __post_init__(self):
        holes = tuple(sorted(set(self.holes)))
        if not holes:
            raise ValueError("a convex twist needs at least one hole")
        if holes[0] < 1:
            raise ValueError(f"hole labels start at 1: {holes}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "holes", holes)

    @property
    def inverse(self):
        return ConvexTwist(self.holes, -self.sign)

    def __str__(self):
        s = "{" + ",".join(map(str, self.holes)) + "}"
        return s if self.sign > 0 else s + "^-1"


def alpha(i):
    return ConvexTwist((i,))


def gamma(i, sign=1):
    return ConvexTwist(tuple(range(1, i + 1)), sign)


def beta(j):
    return ConvexTwist(tuple(range(1, j + 1)) + (j + 2,))


def delta(j):
    return ConvexTwist((j + 1, j + 2))


@dataclass(frozen=True)
class TwistWord:
    page_holes: int
    twists: tuple = ()

    def __post_init__(self):
        tw = tuple(self.twists)
        for t in tw:
            if t.holes[-1] > self.page_holes:
                raise ValueError(f"twist {t} exceeds page with {self.page_holes} holes")
        object.__setattr__(self, "twists", tw)

    def __len__(self):
        return len(self.twists)

    def __iter__(self):
        return iter(self.twists)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return TwistWord(self.page_holes, self.twists[i])
        return self.twists[i]

    def __add__(self, other):
        if isinstance(other, TwistWord):
            if other.page_holes != self.page_holes:
                raise ValueError("page sizes differ")
            other = other.twists
        return TwistWord(self.page_holes, self.twists + tuple(other))

    def replace(self, start, stop, new):
        return TwistWord(self.page_holes, self.twists[:start] + tuple(new) + self.twists[stop:])

    def inverse(self):
        return TwistWord(self.page_holes, tuple(t.inverse for t in reversed(self.twists)))

    @property
    def is_positive(self):
        return all(t.sign > 0 for t in self.twists)

    def __str__(self):
        return " ".join(map(str, self.twists)) or "1"


def lift_holes(holes, j):
    """Hole set after splitting hole ``j + 1`` into the new holes ``j + 1, j + 2``."""
    out = []
    for h in holes:
        if h <= j:
            out.append(h)
        elif h == j + 1:
            out.extend((j + 1, j + 2))
        else:
            out.append(h + 1)
    return tuple(out)


def lift_twist(t, j):
    return ConvexTwist(lift_holes(t.holes, j), t.sign)


def lift_word(w, j):
    return TwistWord(w.page_holes + 1, tuple(lift_twist(t, j) for t in w))


@dataclass(frozen=True)
class StabilizationStep:
    holes_before: int
    blowup_index: int
    inserted_hole: int
    twist: ConvexTwist
    lifted: bool


@dataclass(frozen=True)
class StabilizationTrace:
    target: tuple
    blowups: tuple
    steps: tuple = field(default=())

    @property
    def page_holes(self):
        return len(self.target)


def initial_openbook(target):
    target = tuple(target)
    if target == (0,):
        return TwistWord(1)
    if target == (1, 1):
        return TwistWord(2, (alpha(2),))
    raise ValueError(f"initial open books exist only for (0) and (1,1), not {target}")


def stabilize_interior(w, j):
    r = w.page_holes
    if not 1 <= j <= r - 1:
        raise IndexError(f"interior stabilization index {j} out of range 1..{r - 1}")
    return lift_word(w, j) + (beta(j),)


def stabilize_end(w):
    r = w.page_holes
    return TwistWord(r + 1, w.twists + (alpha(r + 1),))


def replay_stabilizations(blowups):
    """Words and trace for an explicit blowup sequence starting at ``(1, 1)``."""
    w = initial_openbook((1, 1))
    t = (1, 1)
    steps = []
    for j in blowups:
        r = w.page_holes
        if j == r:
            w = stabilize_end(w)
            steps.append(StabilizationStep(r, j, r + 1, w.twists[-1], False))
        else:
            w = stabilize_interior(w, j)
            steps.append(StabilizationStep(r, j, j + 1, w.twists[-1], True))
        t = tp.strict_blowup(t, j)
    return w, StabilizationTrace(t, tuple(blowups), tuple(steps))


def stabilization_word(n):
    """Right-handed stabilizing twists for ``n`` along its canonical blowup sequence."""
    n = tp.check_member(n)
    if n == (0,):
        return TwistWord(1), StabilizationTrace(n, ())
    return replay_stabilizations(tp.canonical_blowup_sequence(n))
