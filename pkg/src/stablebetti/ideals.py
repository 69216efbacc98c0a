"""Monomial ideals, graded pieces, structural predicates and the counting
invariants that drive everything else.

Count conventions: m_{i,d}(I) is the number of minimal generators of
degree d with max index i; mu_{i,j}(I) counts ALL degree-j monomials of I
with max index i (the generators of the degree-j component ideal).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotStableError, UnitIdealError
from .monomials import (
    deglex_key,
    divides,
    enumerate_degree,
    max_index,
    monomials_with_max_index,
    mul,
    swap_variable,
)
from .macaulay import binom


class MonomialIdeal:
    """A monomial ideal given by its minimal generating set.

    Generators are stored deglex descending.  The zero ideal (empty
    generating set) exists only as the output of component_ideal below
    the initial degree; every other constructor rejects it.
    """

    __slots__ = ("n", "gens", "_gen_set")

    def __init__(self, n, gens, *, _allow_zero=False):
        gens = tuple(sorted({tuple(g) for g in gens}, key=deglex_key, reverse=True))
        if n < 1:
            raise DomainError("need at least one variable")
        if not gens and not _allow_zero:
            raise DomainError("empty generating set: the zero ideal is not constructible here")
        for g in gens:
            if len(g) != n:
                raise DomainError("generator length does not match the variable count")
            if any(e < 0 for e in g):
                raise DomainError("negative exponent")
            if not any(g):
                raise UnitIdealError("the monomial 1 generates the unit ideal")
        for a in gens:
            for b in gens:
                if a is not b and divides(a, b):
                    raise DomainError("generating set is not minimal; use minimalize()")
        self.n = n
        self.gens = gens
        self._gen_set = frozenset(gens)

    @classmethod
    def zero(cls, n):
        return cls(n, (), _allow_zero=True)

    @property
    def is_zero(self):
        return not self.gens

    def contains(self, u):
        if len(u) != self.n:
            raise DomainError("monomial lives in a different ring")
        return any(divides(g, u) for g in self.gens)

    def min_gen_degree(self):
        return min(sum(g) for g in self.gens) if self.gens else None

    def max_gen_degree(self):
        return max(sum(g) for g in self.gens) if self.gens else None

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self._gen_set == other._gen_set
        )

    def __hash__(self):
        return hash((self.n, self._gen_set))

    def __repr__(self):
        return f"MonomialIdeal(n={self.n}, gens={list(self.gens)})"


def minimalize(n, raw) -> MonomialIdeal:
    """Inclusion-minimal generating set of the ideal generated by raw."""
    raw = sorted({tuple(g) for g in raw}, key=sum)
    if not raw:
        raise DomainError("empty generating set")
    kept = []
    for g in raw:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, kept)


def contains(I: MonomialIdeal, u) -> bool:
    return I.contains(u)


def ideal_sum(*ideals) -> MonomialIdeal:
    ns = {I.n for I in ideals}
    if len(ns) != 1:
        raise DomainError("summands live in different rings")
    gens = [g for I in ideals for g in I.gens]
    return minimalize(ns.pop(), gens)


def restrict_to_subring(I: MonomialIdeal, ell: int) -> MonomialIdeal:
    """I intersected with the subring on the first ell variables, as an
    ideal there.  May be zero."""
    if not 1 <= ell <= I.n:
        raise DomainError("subring index out of range")
    gens = [g[:ell] for g in I.gens if max_index(g) <= ell]
    if not gens:
        return MonomialIdeal.zero(ell)
    return MonomialIdeal(ell, gens)


def graded_component(I: MonomialIdeal, d: int) -> list:
    """All degree-d monomials of I, deglex descending."""
    if d < 0:
        raise DomainError("degree must be nonnegative")
    return [u for u in enumerate_degree(I.n, d) if I.contains(u)]


def component_ideal(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """Ideal generated by the degree-d part of I (possibly zero)."""
    comp = graded_component(I, d)
    if not comp:
        return MonomialIdeal.zero(I.n)
    return MonomialIdeal(I.n, comp)


def times_maximal(I: MonomialIdeal, q: int) -> MonomialIdeal:
    """Multiply by the q-th power of the maximal ideal (x_1, ..., x_n)."""
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q == 0 or I.is_zero:
        return I
    shifts = enumerate_degree(I.n, q)
    return minimalize(I.n, [mul(g, s) for g in I.gens for s in shifts])


def is_stable(I: MonomialIdeal) -> bool:
    """Each generator u admits every exchange (u / x_{m(u)}) x_i, i < m(u),
    inside the ideal."""
    for g in I.gens:
        e = max_index(g)
        for i in range(1, e):
            if not I.contains(swap_variable(g, e, i)):
                return False
    return True


def is_strongly_stable(I: MonomialIdeal) -> bool:
    """Each generator admits every exchange (u / x_j) x_i for x_j | u and
    i < j inside the ideal."""
    for g in I.gens:
        for j in range(2, I.n + 1):
            if g[j - 1] == 0:
                continue
            for i in range(1, j):
                if not I.contains(swap_variable(g, j, i)):
                    return False
    return True


def is_lexsegment(I: MonomialIdeal) -> bool:
    """Every graded component is a top segment in deglex, checked through
    the maximal generator degree plus one stabilization degree."""
    if I.is_zero:
        return True
    for d in range(0, I.max_gen_degree() + 2):
        comp = graded_component(I, d)
        if comp != enumerate_degree(I.n, d)[: len(comp)]:
            return False
    return True


def is_piecewise_lex_up_to(I: MonomialIdeal, ell: int) -> bool:
    """For an ideal generated in one degree d: within every max-index
    class i <= ell, the generators are the biggest count-many degree-d
    monomials of that class."""
    if I.is_zero:
        raise DomainError("zero ideal")
    if not 1 <= ell <= I.n:
        raise DomainError("ell out of range")
    degs = {sum(g) for g in I.gens}
    if len(degs) != 1:
        raise DomainError("ideal must be generated in a single degree")
    d = degs.pop()
    for i in range(1, ell + 1):
        mine = {g for g in I.gens if max_index(g) == i}
        top = monomials_with_max_index(i, d, I.n)[: len(mine)]
        if mine != set(top):
            return False
    return True


def generator_counts(I: MonomialIdeal, *, require_stable: bool = True) -> dict:
    """Map (i, d) -> number of minimal generators of degree d with max
    index i.  The checked entry point demands stability, which is where
    these counts feed the Betti formula; pass require_stable=False to
    count on an arbitrary monomial ideal.
    """
    if require_stable and not is_stable(I):
        raise NotStableError("ideal is not stable; pass require_stable=False to count anyway")
    counts = {}
    for g in I.gens:
        key = (max_index(g), sum(g))
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_vector(I: MonomialIdeal) -> tuple:
    """Totals (m_1, ..., m_n): generators counted by max index."""
    m = [0] * I.n
    for g in I.gens:
        m[max_index(g) - 1] += 1
    return tuple(m)


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Rows j = jmin, jmin+1, ... of the matrix (mu_{i,j}); each row has n
    entries.  Rows below jmin are zero and rows beyond the stored range
    follow the stabilization rule mu_{i,j} = sum_{q<=i} mu_{q,j-1}."""

    n: int
    jmin: int
    rows: tuple

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("need at least one variable")
        if self.jmin < 1 and self.rows:
            raise DomainError("jmin must be positive")
        for row in self.rows:
            if len(row) != self.n:
                raise DomainError("row length does not match the variable count")
            if any(x < 0 for x in row):
                raise DomainError("negative entry")

    @property
    def jmax(self):
        return self.jmin + len(self.rows) - 1

    @property
    def is_zero(self):
        return all(not any(r) for r in self.rows)

    def row(self, j: int) -> tuple:
        """mu row at degree j, extending by zeros below and by the
        stabilization rule above the stored range."""
        if not self.rows or j < self.jmin:
            return (0,) * self.n
        if j <= self.jmax:
            return tuple(self.rows[j - self.jmin])
        cur = tuple(self.rows[-1])
        for _ in range(j - self.jmax):
            acc, nxt = 0, []
            for x in cur:
                acc += x
                nxt.append(acc)
            cur = tuple(nxt)
        return cur

    def canonical(self) -> "GeneratorMatrix":
        """Strip leading zero rows and trailing rows implied by the
        stabilization rule."""
        rows = [tuple(r) for r in self.rows]
        jmin = self.jmin
        while rows and not any(rows[0]):
            rows.pop(0)
            jmin += 1
        while len(rows) >= 2:
            prev = rows[-2]
            acc, implied = 0, []
            for x in prev:
                acc += x
                implied.append(acc)
            if rows[-1] == tuple(implied):
                rows.pop()
            else:
                break
        if not rows:
            return GeneratorMatrix(self.n, 1, ())
        return GeneratorMatrix(self.n, jmin, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.n, a.jmin, a.rows) == (b.n, b.jmin, b.rows)

    def __hash__(self):
        c = self.canonical()
        return hash((c.n, c.jmin, c.rows))


def generator_matrix(I: MonomialIdeal) -> GeneratorMatrix:
    """Matrix of generators of a strongly stable ideal: row j counts the
    degree-j monomials of I by max index, from the initial degree through
    the maximal generator degree."""
    if I.is_zero:
        return GeneratorMatrix(I.n, 1, ())
    if not is_strongly_stable(I):
        raise NotStableError("matrix of generators requires a strongly stable ideal")
    rows = []
    for j in range(I.min_gen_degree(), I.max_gen_degree() + 1):
        row = [0] * I.n
        for u in graded_component(I, j):
            row[max_index(u) - 1] += 1
        rows.append(tuple(row))
    return GeneratorMatrix(I.n, I.min_gen_degree(), tuple(rows))


def matrix_to_counts(M: GeneratorMatrix) -> dict:
    """Recover the new-generator counts m_{i,j} = mu_{i,j} - sum_{q<=i}
    mu_{q,j-1} from a generator matrix.  Raises if any count would be
    negative (the cumulative inequality fails)."""
    counts = {}
    for j in range(M.jmin, M.jmin + len(M.rows)):
        row, prev = M.row(j), M.row(j - 1)
        acc = 0
        for i in range(1, M.n + 1):
            acc += prev[i - 1]
            m = row[i - 1] - acc
            if m < 0:
                raise DomainError(
                    f"cumulative inequality fails at (i={i}, j={j}): "
                    f"mu={row[i - 1]} < running sum {acc}"
                )
            if m:
                counts[(i, j)] = m
    return counts


def counts_to_matrix(counts: dict, n: int) -> GeneratorMatrix:
    """Inverse of matrix_to_counts, built degree by degree."""
    for (i, j), c in counts.items():
        if not 1 <= i <= n:
            raise DomainError("max-index key out of range")
        if j < 1:
            raise DomainError("degree key must be positive")
        if c < 0:
            raise DomainError("counts must be nonnegative")
    if not counts or all(c == 0 for c in counts.values()):
        return GeneratorMatrix(n, 1, ())
    degs = [j for (_, j), c in counts.items() if c]
    jmin, jmax = min(degs), max(degs)
    rows = []
    prev = (0,) * n
    for j in range(jmin, jmax + 1):
        acc = 0
        row = []
        for i in range(1, n + 1):
            acc += prev[i - 1]
            row.append(counts.get((i, j), 0) + acc)
        rows.append(tuple(row))
        prev = tuple(row)
    return GeneratorMatrix(n, jmin, tuple(rows))


def hilbert_function(I: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials outside I (the Hilbert function of
    the quotient)."""
    if d < 0:
        raise DomainError("degree must be nonnegative")
    return binom(I.n + d - 1, d) - len(graded_component(I, d))
