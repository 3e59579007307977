"""The 4-manifolds W(n, m): monodromy words, handlebodies and homology.

``W(n, m)`` is the total space of the (achiral) Lefschetz fibration whose
monodromy is the stabilization word of ``n`` followed by ``|m_i|`` twists about
``gamma_i``, right-handed when ``m_i > 0`` and left-handed when ``m_i < 0``.
With ``m = b - n`` it is one of Lisca's minimal symplectic fillings of the
lens space ``L(p, q)``.

The handlebody has one dotted circle per hole and one 2-handle per twist,
attached with framing ``-sign`` relative to the page. Pages are drawn flat,
so twist curves on different pages are unlinked and each curve links the
dotted circles of the holes it encloses once.
"""

from dataclasses import dataclass, field

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from . import contfrac as cf
from . import openbook as ob
from . import tuples as tp


@dataclass(frozen=True)
class FillingSpec:
    n: tuple
    m: tuple

    def __post_init__(self):
        n = tp.check_member(self.n)
        m = tuple(int(x) for x in self.m)
        if len(m) != len(n):
            raise ValueError(f"n has length {len(n)} but m has length {len(m)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)

    @property
    def k(self):
        return len(self.n)

    @property
    def twist_count(self):
        return (self.k - 1) + sum(abs(x) for x in self.m)

    @property
    def is_positive(self):
        return all(x >= 0 for x in self.m)


def lisca_filling(p, q, n):
    n = tuple(n)
    b = cf.dual_expansion(p, q)
    if len(n) != len(b):
        raise ValueError(f"L({p},{q}) needs {len(b)}-tuples, got {n}")
    if not tp.is_member(n):
        raise ValueError(f"{n} is not in Z_{len(n)}")
    if any(x > y for x, y in zip(n, b)):
        raise ValueError(f"{n} exceeds the bound {tuple(b)} componentwise")
    return FillingSpec(n, tuple(y - x for x, y in zip(n, b)))


def gamma_tail(m):
    twists = []
    for i, mi in enumerate(m, start=1):
        twists.extend([ob.gamma(i, 1 if mi > 0 else -1)] * abs(mi))
    return tuple(twists)


def monodromy(spec):
    w, _ = ob.stabilization_word(spec.n)
    return w + gamma_tail(spec.m)


def incidence_matrix(word):
    """Rows are the homology classes of the twist curves in the page."""
    k = word.page_holes
    return [[1 if h in t.holes else 0 for h in range(1, k + 1)] for t in word]


def linking_matrix(word):
    """Surgery matrix on dotted circles (0-framed) then 2-handles."""
    k, a = word.page_holes, incidence_matrix(word)
    size = k + len(a)
    q = [[0] * size for _ in range(size)]
    for r, (row, t) in enumerate(zip(a, word)):
        for h, v in enumerate(row):
            q[k + r][h] = q[h][k + r] = v
        q[k + r][k + r] = -t.sign
    return q


def _dm(rows, ncols):
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(rows), ncols), ZZ)


def rank(rows, ncols):
    if not rows or not ncols:
        return 0
    return _dm(rows, ncols).rank()


def determinant(rows):
    if not rows:
        return 1
    return int(_dm(rows, len(rows)).det())


def cokernel_factors(rows, ncols):
    """Nonzero invariant factors of the lattice spanned by ``rows`` in Z^ncols."""
    if not rows or not ncols:
        return ()
    return tuple(int(d) for d in invariant_factors(_dm(rows, ncols)) if d != 0)


@dataclass(frozen=True)
class InvariantReport:
    euler_characteristic: int
    b1: int
    b2: int
    torsion: tuple
    boundary_order: object  # int, or None when H_1 of the boundary is infinite
    rational_ball: bool
    one_handles: int = field(default=0)
    two_handles: int = field(default=0)

    def as_dict(self):
        return {
            "euler_characteristic": self.euler_characteristic,
            "b1": self.b1,
            "b2": self.b2,
            "torsion": list(self.torsion),
            "boundary_order": self.boundary_order,
            "rational_ball": self.rational_ball,
        }


def word_invariants(word):
    k, a = word.page_holes, incidence_matrix(word)
    n = len(a)
    r = rank(a, k)
    torsion = tuple(d for d in cokernel_factors(a, k) if d > 1)
    det = abs(determinant(linking_matrix(word)))
    b1, b2 = k - r, n - r
    return InvariantReport(
        euler_characteristic=1 - k + n,
        b1=b1,
        b2=b2,
        torsion=torsion,
        boundary_order=det if det else None,
        rational_ball=(b1 == 0 and b2 == 0),
        one_handles=k,
        two_handles=n,
    )


def invariants(spec):
    return word_invariants(monodromy(spec))


def is_rational_ball_piece(spec):
    """The blowdown criterion: a single ``m_j = +-1``, zero elsewhere, at some ``n_j = 1``."""
    nz = [j for j, x in enumerate(spec.m) if x]
    return len(nz) == 1 and abs(spec.m[nz[0]]) == 1 and spec.n[nz[0]] == 1


def minimal_resolution(p, q):
    """Height-0 filling ``W(u_k, b - u_k)`` and the plumbing weights ``-a_i``."""
    b = cf.dual_expansion(p, q)
    weights = [-a for a in cf.hj_expand(p, q)]
    spec = lisca_filling(p, q, tp.u(len(b)))
    return spec, weights


@dataclass(frozen=True)
class Handlebody:
    one_handles: tuple
    two_handles: tuple
    linking: tuple

    def as_dict(self):
        return {
            "one_handles": [{"hole": h} for h in self.one_handles],
            "two_handles": [
                {"holes": list(t.holes), "sign": t.sign, "framing": -t.sign}
                for t in self.two_handles
            ],
            "linking_matrix": [list(r) for r in self.linking],
        }


def export_handlebody(spec):
    w = monodromy(spec)
    return Handlebody(
        tuple(range(1, w.page_holes + 1)),
        tuple(w.twists),
        tuple(tuple(r) for r in linking_matrix(w)),
    )
