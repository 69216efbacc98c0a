"""Brute-force graded Betti numbers for arbitrary monomial ideals.

The rank of the degree-b strand of the minimal free resolution equals the
reduced homology rank, in dimension i - 1, of the upper Koszul complex of
the ideal at the multidegree b.  Summing over the multidegrees dividing
the lcm of the generators (all Betti multidegrees do) gives the graded
table.  Homology is computed over the rationals via exact fraction-free
integer elimination, realizing the characteristic-0 convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .betti import BettiTable
from .errors import BudgetExceededError, DomainError
from .ideals import MonomialIdeal

DEFAULT_MULTIDEGREE_BUDGET = 2 * 10**6


@dataclass(frozen=True)
class SimplicialComplexSmall:
    """Tiny simplicial complex: a downward-closed set of vertex subsets.
    The empty face is present exactly when the complex is nonempty."""

    vertices: tuple
    faces: frozenset

    def __post_init__(self):
        for f in self.faces:
            for v in f:
                if v not in self.vertices:
                    raise DomainError("face uses an unknown vertex")
                if f - {v} not in self.faces:
                    raise DomainError("face set is not downward closed")

    @property
    def dim(self):
        return max((len(f) for f in self.faces), default=0) - 1


def upper_koszul(I: MonomialIdeal, b) -> SimplicialComplexSmall:
    """Faces are the squarefree subsets tau of the support of b with
    x^b / x^tau still in the ideal."""
    if len(b) != I.n:
        raise DomainError("multidegree lives in a different ring")
    supp = tuple(t + 1 for t, e in enumerate(b) if e > 0)
    faces = set()
    for r in range(len(supp) + 1):
        for tau in combinations(supp, r):
            m = list(b)
            for v in tau:
                m[v - 1] -= 1
            if I.contains(tuple(m)):
                faces.add(frozenset(tau))
    return SimplicialComplexSmall(supp, frozenset(faces))


def integer_matrix_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for rr in range(r, nrows):
            if m[rr][c]:
                piv = rr
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for rr in range(r + 1, nrows):
            for cc in range(c + 1, ncols):
                m[rr][cc] = (m[r][c] * m[rr][cc] - m[rr][c] * m[r][cc]) // prev
            m[rr][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


def _boundary_rank(faces_by_dim, k):
    # rank of the boundary map C_k -> C_{k-1}; dimension -1 holds the empty face
    top = faces_by_dim.get(k, [])
    bottom = faces_by_dim.get(k - 1, [])
    if not top or not bottom:
        return 0
    index = {f: t for t, f in enumerate(bottom)}
    rows = []
    for face in top:
        row = [0] * len(bottom)
        verts = sorted(face)
        for pos, v in enumerate(verts):
            row[index[frozenset(face - {v})]] = (-1) ** pos
        rows.append(row)
    return integer_matrix_rank(rows)


def _ranks_from_faces(faces):
    faces_by_dim = {}
    for f in faces:
        faces_by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in faces_by_dim.values():
        fs.sort(key=sorted)
    top = max(faces_by_dim)
    boundary = {k: _boundary_rank(faces_by_dim, k) for k in range(0, top + 2)}
    ranks = {}
    for k in range(-1, top + 1):
        nk = len(faces_by_dim.get(k, []))
        ranks[k] = nk - boundary.get(k, 0) - boundary.get(k + 1, 0)
    return ranks


def reduced_homology_ranks(C: SimplicialComplexSmall) -> dict:
    """Ranks of reduced rational homology, keyed by dimension from -1 up
    to the dimension of the complex.  The void complex has no entries."""
    if not C.faces:
        return {}
    return _ranks_from_faces(C.faces)


def _membership_table(I: MonomialIdeal, lcm_exp):
    # b in I for every divisor b of the lcm, in one pass over product order:
    # b is in I iff b is a generator or some coordinate decrement stays in I.
    gen_set = I._gen_set
    table = {}
    ranges = [range(e + 1) for e in lcm_exp]
    for b in product(*ranges):
        if b in gen_set:
            table[b] = True
            continue
        hit = False
        for t in range(len(b)):
            if b[t] and table[b[:t] + (b[t] - 1,) + b[t + 1:]]:
                hit = True
                break
        table[b] = hit
    return table


def oracle_betti(I: MonomialIdeal, budget: int = DEFAULT_MULTIDEGREE_BUDGET) -> BettiTable:
    """Exact characteristic-0 Betti table of an arbitrary monomial ideal.

    Scans the multidegrees dividing the lcm of the generators; raises
    BudgetExceededError when there are more than `budget` of them.
    """
    if I.is_zero:
        return BettiTable(I.n, {})
    lcm_exp = [0] * I.n
    for g in I.gens:
        for t, e in enumerate(g):
            if e > lcm_exp[t]:
                lcm_exp[t] = e
    ndiv = 1
    for e in lcm_exp:
        ndiv *= e + 1
    if ndiv > budget:
        raise BudgetExceededError(
            f"{ndiv} multidegrees exceed the budget {budget}; "
            "use the stable-ideal formula or a smaller input",
            partial_count=0,
        )
    member = _membership_table(I, lcm_exp)
    entries = {}
    for b, inside in member.items():
        if not inside:
            continue
        supp = [t for t in range(I.n) if b[t]]
        s = len(supp)
        present = []
        full = True
        for r in range(s + 1):
            for tau in combinations(supp, r):
                m = list(b)
                for t in tau:
                    m[t] -= 1
                if member[tuple(m)]:
                    present.append(frozenset(t + 1 for t in tau))
                else:
                    full = False
        if full:
            continue  # a full simplex is contractible
        j = sum(b)
        for dim, rank in _ranks_from_faces(present).items():
            if rank:
                key = (dim + 1, j)
                entries[key] = entries.get(key, 0) + rank
    return BettiTable(I.n, entries)
