"""Lantern substitutions, substitution scripts and rational blowdowns.

A substitution script rewrites the monodromy of the minimal resolution into
the monodromy of a given filling, one lantern substitution per unit of height.
Besides the substitution itself, a step may insert or remove a cancelling pair
(a twist next to its inverse) and swap adjacent twists whose curves can be
made disjoint. Every step is certified by the mapping class oracle.

Scripts are built recursively: the first step is a lantern on the minimal
resolution, and the remaining steps are those of the tuple with its leftmost
1 blown down, lifted to one more hole.
"""

from dataclasses import dataclass, field
from math import gcd, isqrt

from . import contfrac as cf
from . import filling as fl
from . import mcgcheck as mc
from . import openbook as ob
from . import tuples as tp
from .openbook import ConvexTwist, TwistWord


class PatternNotFound(ValueError):
    pass


class OracleRefutation(tp.InconsistencyError):
    pass


def commutes(s, t):
    """Convex curves about hole sets ``s`` and ``t`` can be made disjoint."""
    s, t = set(s), set(t)
    if s <= t or t <= s:
        return True
    if s & t:
        return False
    # Disjoint sets interleave if some a < b < c < d alternate between them.
    marks = [1 if h in s else 0 for h in sorted(s | t)]
    changes = sum(1 for x, y in zip(marks, marks[1:]) if x != y)
    return changes <= 1 or (changes == 2 and marks[0] == marks[-1])


def _interval(lo, hi):
    return tuple(range(lo, hi + 1))


@dataclass(frozen=True)
class LanternMove:
    """Lantern on consecutive hole intervals ``P, Q, R``.

    The four boundary twists ``Q, R, P, PQR`` (pairwise commuting) are replaced
    by the three interior twists ``QR, PR, PQ``, read cyclically starting at
    ``rotation``.
    """

    page_holes: int
    p: tuple
    q: tuple
    r: tuple
    rotation: int = 0

    def __post_init__(self):
        for blk in (self.p, self.q, self.r):
            if not blk or tuple(blk) != _interval(blk[0], blk[-1]):
                raise ValueError(f"lantern blocks must be nonempty intervals, got {blk}")
        if self.q[0] != self.p[-1] + 1 or self.r[0] != self.q[-1] + 1:
            raise ValueError("lantern blocks must be consecutive")
        if self.r[-1] > self.page_holes:
            raise ValueError("lantern exceeds page")
        if self.rotation not in (0, 1, 2):
            raise ValueError("rotation is 0, 1 or 2")

    @classmethod
    def standard(cls, k, j, rotation=0):
        """``alpha_{j+1} alpha_{j+2} gamma_j gamma_{j+2} = delta_j beta_j gamma_{j+1}``."""
        return cls(k, _interval(1, j), (j + 1,), (j + 2,), rotation)

    @property
    def consumed(self):
        p, q, r = self.p, self.q, self.r
        return tuple(ConvexTwist(s) for s in (q, r, p, p + q + r))

    @property
    def produced(self):
        p, q, r = self.p, self.q, self.r
        out = (q + r, p + r, p + q)
        rot = self.rotation
        return tuple(ConvexTwist(s) for s in out[rot:] + out[:rot])

    def lift(self, j):
        lh = lambda blk: ob.lift_holes(blk, j)
        return LanternMove(self.page_holes + 1, lh(self.p), lh(self.q), lh(self.r), self.rotation)

    def relation(self):
        """The two sides as words, consumed side in the order ``Q R P PQR``."""
        k = self.page_holes
        return TwistWord(k, self.consumed), TwistWord(k, self.produced)

    def as_dict(self):
        return {
            "page_holes": self.page_holes,
            "blocks": [list(self.p), list(self.q), list(self.r)],
            "consumed": [list(t.holes) for t in self.consumed],
            "produced": [list(t.holes) for t in self.produced],
        }


# Ops act on a TwistWord at a 0-based position.


@dataclass(frozen=True)
class Commute:
    pos: int
    kind = "commute"

    def apply(self, w):
        a, b = w[self.pos], w[self.pos + 1]
        if not commutes(a.holes, b.holes):
            raise tp.InconsistencyError(f"{a} and {b} do not commute")
        return w.replace(self.pos, self.pos + 2, (b, a))

    def lift(self, j):
        return self

    def as_dict(self):
        return {"kind": self.kind, "pos": self.pos}


@dataclass(frozen=True)
class InsertPair:
    pos: int
    first: ConvexTwist
    kind = "insert_pair"

    def apply(self, w):
        return w.replace(self.pos, self.pos, (self.first, self.first.inverse))

    def lift(self, j):
        return InsertPair(self.pos, ob.lift_twist(self.first, j))

    def as_dict(self):
        return {"kind": self.kind, "pos": self.pos, "holes": list(self.first.holes),
                "sign": self.first.sign}


@dataclass(frozen=True)
class RemovePair:
    pos: int
    kind = "remove_pair"

    def apply(self, w):
        a, b = w[self.pos], w[self.pos + 1]
        if a.inverse != b:
            raise tp.InconsistencyError(f"{a} {b} is not a cancelling pair")
        return w.replace(self.pos, self.pos + 2, ())

    def lift(self, j):
        return self

    def as_dict(self):
        return {"kind": self.kind, "pos": self.pos}


@dataclass(frozen=True)
class Lantern:
    pos: int
    move: LanternMove
    kind = "lantern"

    def apply(self, w):
        got = sorted(w[self.pos:self.pos + 4])
        if len(got) != 4 or got != sorted(self.move.consumed):
            raise PatternNotFound(f"no lantern pattern at {self.pos} in {w}")
        return w.replace(self.pos, self.pos + 4, self.move.produced)

    def lift(self, j):
        return Lantern(self.pos, self.move.lift(j))

    def as_dict(self):
        return {"kind": self.kind, "pos": self.pos, **self.move.as_dict()}


def op_from_dict(d):
    kind = d["kind"]
    if kind == "commute":
        return Commute(d["pos"])
    if kind == "remove_pair":
        return RemovePair(d["pos"])
    if kind == "insert_pair":
        return InsertPair(d["pos"], ConvexTwist(tuple(d["holes"]), d["sign"]))
    if kind == "lantern":
        p, q, r = (tuple(b) for b in d["blocks"])
        move = LanternMove(d["page_holes"], p, q, r)
        rot = [LanternMove(move.page_holes, p, q, r, i).produced for i in range(3)]
        want = tuple(ConvexTwist(tuple(h)) for h in d["produced"])
        return Lantern(d["pos"], LanternMove(move.page_holes, p, q, r, rot.index(want)))
    raise ValueError(f"unknown op kind {kind!r}")


class _Tracker:
    """A word together with the ops applied to it."""

    def __init__(self, word):
        self.word = word
        self.ops = []

    def do(self, op):
        self.word = op.apply(self.word)
        self.ops.append(op)

    def move(self, src, dst):
        while src < dst:
            self.do(Commute(src))
            src += 1
        while src > dst:
            self.do(Commute(src - 1))
            src -= 1

    def gamma_block_end(self, l, start):
        """Index just past the gamma_l block, scanning a pure gamma region from ``start``."""
        w = self.word
        i = start
        while i < len(w) and len(w[i].holes) <= l:
            i += 1
        return i


@dataclass(frozen=True)
class ScriptStep:
    index: int
    before: TwistWord
    after: TwistWord
    ops: tuple
    source: tuple  # (n_{i-1}, m_{i-1})
    target: tuple  # (n_i, m_i)
    certified: bool

    @property
    def lantern_count(self):
        return sum(1 for op in self.ops if op.kind == "lantern")

    def as_dict(self):
        return {
            "index": self.index,
            "source": {"n": list(self.source[0]), "m": list(self.source[1])},
            "target": {"n": list(self.target[0]), "m": list(self.target[1])},
            "certified": self.certified,
            "ops": [op.as_dict() for op in self.ops],
        }


@dataclass(frozen=True)
class SubstitutionScript:
    n: tuple
    m: tuple
    initial: TwistWord
    steps: tuple = field(default=())

    @property
    def final(self):
        return self.steps[-1].after if self.steps else self.initial

    @property
    def certified(self):
        return all(s.certified for s in self.steps)

    def replay(self):
        w = self.initial
        for s in self.steps:
            for op in s.ops:
                w = op.apply(w)
        return w

    def as_dict(self):
        out = []
        for s in self.steps:
            for op in s.ops:
                out.append({**op.as_dict(), "step": s.index, "certified": s.certified})
        return {"n": list(self.n), "m": list(self.m), "steps": out}


def base_monodromy(k, m):
    """``alpha_2 ... alpha_k`` followed by the signed gamma powers."""
    if len(m) != k:
        raise ValueError("m must have one entry per hole")
    return TwistWord(k, tuple(ob.alpha(i) for i in range(2, k + 1)) + fl.gamma_tail(m))


def _verbatim(n, m):
    return fl.monodromy(fl.FillingSpec(n, m))


def _base_step_ops(k, j, m0):
    """Ops taking ``W(u_k, m0)`` to ``W(psi_j(u_{k-1}), m1)``."""
    tr = _Tracker(base_monodromy(k, m0))
    g0 = k - 1  # gamma region starts after alpha_2..alpha_k
    for l in (j, j + 2):
        if m0[l - 1] <= 0:
            tr.do(InsertPair(tr.gamma_block_end(l, g0), ob.gamma(l, -1)))
    # alpha_{j+1} alpha_{j+2} sit at j-1, j; pull the consumed gammas in behind them.
    tr.move(tr.gamma_block_end(j, g0) - 1, j + 1)
    tr.move(tr.gamma_block_end(j + 2, g0 + 1) - 1, j + 2)
    tr.do(Lantern(j - 1, LanternMove.standard(k, j)))
    # Prefix is now alpha_2..alpha_j delta beta gamma_{j+1} alpha_{j+3}..alpha_k.
    dst = tr.gamma_block_end(j + 1, k) - 1
    tr.move(j + 1, dst)
    if m0[j] <= -1:
        tr.do(RemovePair(dst - 1))
    tr.move(j, k - 2)
    return tr


def _to_lifted(tr, k, j, c):
    """Verbatim word on ``k`` holes to lifted form ending in ``beta_j gamma_{j+1}^c``."""
    g0 = k - 1
    end = tr.gamma_block_end(j + 1, g0)
    for idx in range(abs(c)):
        tr.move(end - 1 - idx, len(tr.word) - 1 - idx)
    tr.move(k - 2, len(tr.word) - abs(c) - 1)


def _from_lifted(tr, k, j, c):
    c = abs(c)
    tr.move(len(tr.word) - c - 1, k - 2)
    dst = tr.gamma_block_end(j, k - 1)
    for idx in range(c):
        tr.move(len(tr.word) - c + idx, dst + idx)


def _script_ops(n, m):
    """Per-step op lists along ``lemma_tuple_sequence(n, m)``."""
    k = len(n)
    seq = tp.lemma_tuple_sequence(n, m)
    i = tp.leftmost_index(n)
    j = i - 1
    steps = [_base_step_ops(k, j, seq[0][1]).ops]
    if len(seq) == 2:
        return steps
    sub_n = tp.strict_blowdown(n, i)
    sub_m = tp.omit(m, j + 1)
    c = m[j]  # m_{i, j+1} is the same for every i >= 1
    for t, sub_ops in enumerate(_script_ops(sub_n, sub_m), start=1):
        tr = _Tracker(_verbatim(*seq[t]))
        _to_lifted(tr, k, j, c)
        for op in sub_ops:
            tr.do(op.lift(j))
        _from_lifted(tr, k, j, c)
        steps.append(tr.ops)
    return steps


def lemma_script(n, m, certify=True):
    """Script from ``W(u_k, n + m - u_k)`` to ``W(n, m)`` through the lemma sequence."""
    n = tp.check_member(n)
    m = tuple(m)
    if tp.height(n) == 0:
        w = _verbatim(n, m)
        return SubstitutionScript(n, m, w, ())
    seq = tp.lemma_tuple_sequence(n, m)
    initial = _verbatim(*seq[0])
    steps = []
    w = initial
    for t, ops in enumerate(_script_ops(n, m), start=1):
        before = w
        for op in ops:
            w = op.apply(w)
        expected = _verbatim(*seq[t])
        if w != expected:
            raise tp.InconsistencyError(f"step {t} ended at {w}, expected {expected}")
        ok = mc.equal(before, w) if certify else True
        if certify and not ok:
            raise OracleRefutation(f"step {t} of the script for {n} is not a relation")
        steps.append(ScriptStep(t, before, w, tuple(ops), seq[t - 1], seq[t], ok))
    return SubstitutionScript(n, m, initial, tuple(steps))


def lantern_substitute(w, move, pos=None):
    """Gather the consumed twists by legal commutations and substitute.

    Returns the new word and the ops used. The first twist of the pattern that
    occurs is kept in place and the other three are brought next to it.
    """
    tr = _Tracker(w)
    if pos is None:
        want = list(move.consumed)
        found = []
        for idx, t in enumerate(tr.word):
            if t in want:
                want.remove(t)
                found.append(idx)
        if want:
            raise PatternNotFound(f"{', '.join(map(str, want))} missing from {w}")
        anchor = found[0]
        try:
            for off, src in enumerate(found[1:], start=1):
                tr.move(src, anchor + off)
        except tp.InconsistencyError as exc:
            raise PatternNotFound(f"cannot gather the pattern in {w}: {exc}") from exc
        pos = anchor
    tr.do(Lantern(pos, move))
    return tr.word, tuple(tr.ops)


@dataclass(frozen=True)
class BlowdownStep:
    source: fl.FillingSpec
    target: fl.FillingSpec
    group: tuple  # (a, b) indices into the lemma sequence
    reduced_holes: int
    ball: fl.FillingSpec
    plumbing: fl.FillingSpec
    weights: tuple
    pbar: int
    qbar: int
    certified: bool

    @property
    def lens_space(self):
        return (self.pbar ** 2, self.pbar * self.qbar - 1)

    def relation(self):
        return fl.monodromy(self.plumbing), fl.monodromy(self.ball)

    def as_dict(self):
        pw, bw = self.relation()
        return {
            "group": list(self.group),
            "source": {"n": list(self.source.n), "m": list(self.source.m)},
            "target": {"n": list(self.target.n), "m": list(self.target.m)},
            "reduced_holes": self.reduced_holes,
            "ball": {"n": list(self.ball.n), "m": list(self.ball.m)},
            "plumbing": {"n": list(self.plumbing.n), "m": list(self.plumbing.m)},
            "weights": list(self.weights),
            "pbar": self.pbar,
            "qbar": self.qbar,
            "lens_space": list(self.lens_space),
            "plumbing_word": [_twist_dict(t) for t in pw],
            "ball_word": [_twist_dict(t) for t in bw],
            "certified": self.certified,
        }


def _twist_dict(t):
    return {"holes": list(t.holes), "sign": t.sign}


def _identify(n_red, m_red, span, certify):
    """Rational ball and plumbing for the first ``span`` steps of the reduced pair."""
    kk = len(n_red)
    big_n, big_m = tp.lemma_tuple_sequence(n_red, m_red)[span]
    ones = [x for x in range(2, kk) if big_n[x - 1] == 1]
    if len(ones) != 1:
        raise tp.InconsistencyError(f"{big_n} has {len(ones)} interior 1s, expected exactly one")
    js = ones[0]
    e = tuple(1 if x == js else 0 for x in range(1, kk + 1))
    if any(a - b < 0 for a, b in zip(big_m, e)):
        raise tp.InconsistencyError(f"unit vector at {js} exceeds {big_m}")
    ball = fl.FillingSpec(big_n, e)
    uu = tp.u(kk)
    bprime = tuple(a + b for a, b in zip(big_n, e))
    plumbing = fl.FillingSpec(uu, tuple(a - b for a, b in zip(bprime, uu)))
    # The chain b' may start or end with a 1 (a blowable -1 sphere), so the
    # value need not exceed 1; the lens space is read off modulo P.
    val = cf.evaluate(bprime)
    big_p = val.numerator
    diff = (big_p - val.denominator) % big_p
    c = cf.hj_expand(big_p, diff)
    pbar = isqrt(big_p)
    if pbar * pbar != big_p or (diff + 1) % pbar:
        raise tp.InconsistencyError(f"boundary L({big_p},{diff}) is not of the form L(p^2, pq-1)")
    qbar = (diff + 1) // pbar
    if gcd(pbar, qbar) != 1 or not 0 < qbar < pbar:
        raise tp.InconsistencyError(f"bad blowdown parameters ({pbar},{qbar})")
    ok = True
    if certify:
        ok = mc.equal(fl.monodromy(plumbing), fl.monodromy(ball))
        if not ok:
            raise OracleRefutation(f"plumbing and ball words differ for {big_n}")
    return ball, plumbing, tuple(-x for x in c), pbar, qbar, ok


def rational_blowdown_sequence(p, q, n, certify=True):
    spec = fl.lisca_filling(p, q, n)
    n, m = spec.n, spec.m
    if tp.height(n) == 0:
        return []
    seq = tp.lemma_tuple_sequence(n, m)
    groups = tp.blowdown_grouping(seq)
    if groups[0] != 0 or groups[-1] != len(seq) - 1:
        raise tp.InconsistencyError(f"grouping {groups} does not span the sequence")
    reductions = tp.leftmost_reductions(n, m)
    out = []
    for a, b in zip(groups, groups[1:]):
        n_red, m_red = reductions[a]
        ball, plumbing, weights, pbar, qbar, ok = _identify(n_red, m_red, b - a, certify)
        out.append(BlowdownStep(
            source=fl.FillingSpec(*seq[a]),
            target=fl.FillingSpec(*seq[b]),
            group=(a, b),
            reduced_holes=len(n_red),
            ball=ball,
            plumbing=plumbing,
            weights=weights,
            pbar=pbar,
            qbar=qbar,
            certified=ok,
        ))
    return out


@dataclass(frozen=True)
class DaisyRelation:
    pbar: int
    lhs: TwistWord
    rhs: TwistWord
    certified: bool
    step: BlowdownStep


def daisy(pbar):
    """Relation between the two fillings of ``L(pbar^2, pbar - 1)``."""
    if not isinstance(pbar, int) or pbar < 2:
        raise ValueError("pbar must be an integer >= 2")
    p, q = pbar * pbar, pbar - 1
    fills = [n for n in tp.enumerate_fillings(p, q) if tp.height(n) > 0]
    if len(fills) != 1:
        raise tp.InconsistencyError(f"L({p},{q}) should have one non-minimal filling")
    steps = rational_blowdown_sequence(p, q, fills[0])
    if len(steps) != 1:
        raise tp.InconsistencyError("expected a single rational blowdown")
    lhs, rhs = steps[0].relation()
    return DaisyRelation(pbar, lhs, rhs, mc.equal(lhs, rhs), steps[0])
