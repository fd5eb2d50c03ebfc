"""Ring presentations of H*(G/P) and Schubert polynomials.

Everything is degree-by-degree integer lattice work.  The expansion matrix of
degree m writes each monomial in the chosen generators as an integer vector
over the Schubert basis of that degree (computed by ``characteristic``);
generators are grown until those vectors span the full lattice, relations are
a degreewise-minimal generating set of the kernel, and Schubert polynomials
come out of the Smith normal form of the expansion matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characteristics import characteristic
from .errors import NonSurjective, TruncatedTable
from .intlinalg import (
    hnf_rows,
    integer_diagonalize,
    kernel_basis,
    lattice_contains,
    smith_normal_form,
    solve_in_row_lattice,
)
from .weyl import CosetEntry, CosetTable

__all__ = [
    "GeneratorSet",
    "ExpansionMatrix",
    "Relation",
    "Presentation",
    "SchubertPolynomial",
    "monomial_basis",
    "expansion_matrix",
    "find_generators",
    "find_relations",
    "schubert_polynomials",
    "integer_diagonalize",
]


@dataclass(frozen=True)
class GeneratorSet:
    """Special Schubert classes chosen as ring generators, ascending degree."""

    entries: tuple[CosetEntry, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(e.m for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> tuple[str, ...]:
        return tuple(f"y{i + 1}" for i in range(len(self.entries)))


@dataclass(frozen=True)
class ExpansionMatrix:
    """Rows: generator monomials of one degree; columns: Schubert classes."""

    degree: int
    monomials: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def b(self) -> int:
        return len(self.monomials)

    @property
    def beta(self) -> int:
        return len(self.rows[0]) if self.rows else 0


@dataclass(frozen=True)
class Relation:
    """One relation polynomial: sorted ((exponents, coefficient), ...)."""

    degree: int
    terms: tuple[tuple[tuple[int, ...], int], ...]


@dataclass(frozen=True)
class Presentation:
    generators: GeneratorSet
    relations: tuple[Relation, ...]
    bound: int


@dataclass(frozen=True)
class SchubertPolynomial:
    """Polynomial in the generators mapping exactly onto one Schubert class."""

    degree: int
    index: int
    terms: tuple[tuple[tuple[int, ...], int], ...]


def monomial_basis(degrees, m: int) -> list[tuple[int, ...]]:
    """Exponent vectors of weighted degree m, in descending lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(idx: int, left: int, cur: list[int]) -> None:
        if idx == len(degrees):
            if left == 0:
                out.append(tuple(cur))
            return
        top = left // degrees[idx]
        for e in range(top, -1, -1):
            cur.append(e)
            rec(idx + 1, left - e * degrees[idx], cur)
            cur.pop()

    rec(0, m, [])
    out.sort(reverse=True)
    return out


def _expand_monomial(table: CosetTable, gens: GeneratorSet, exps, m: int) -> list[int]:
    classes = []
    for g, e in zip(gens.entries, exps):
        classes.extend([g] * e)
    return [characteristic(table, w, classes) for w in table.layer(m)]


def expansion_matrix(table: CosetTable, gens: GeneratorSet, m: int) -> ExpansionMatrix:
    """The b(m) x beta(m) integer matrix of pi_m on the monomial basis."""
    if not table.complete and m > table.max_length:
        raise TruncatedTable(f"degree {m} beyond max_length={table.max_length}")
    monomials = tuple(monomial_basis(gens.degrees, m))
    rows = tuple(tuple(_expand_monomial(table, gens, exps, m)) for exps in monomials)
    return ExpansionMatrix(m, monomials, rows)


def find_generators(table: CosetTable, max_degree: int | None = None,
                    tie_break: str = "lowest") -> GeneratorSet:
    """Minimal special Schubert classes spanning every degree up to the bound.

    Degree by degree, the images of the monomials in the generators found so
    far are compared against the full Schubert lattice; while the map is not
    onto, the first basis class (in index order) whose unit vector enlarges
    the image lattice is adjoined.  ``tie_break="highest"`` scans indexes in
    reverse; the per-degree generator count is invariant under that choice.
    """
    if max_degree is None:
        table.require_complete("find_generators without explicit max_degree")
        max_degree = table.top_length
    if not table.complete and max_degree > table.max_length:
        raise TruncatedTable(f"max_degree {max_degree} beyond table bound")
    chosen: list[CosetEntry] = []
    for m in range(1, max_degree + 1):
        beta = len(table.layer(m))
        if beta == 0:
            continue
        gens = GeneratorSet(tuple(chosen))
        rows = [list(r) for r in expansion_matrix(table, gens, m).rows]
        full = [[1 if i == j else 0 for j in range(beta)] for i in range(beta)]
        order = range(beta) if tie_break == "lowest" else range(beta - 1, -1, -1)
        while True:
            h = hnf_rows(rows, beta)
            if h == full:
                break
            for i in order:
                unit = [1 if j == i else 0 for j in range(beta)]
                if not lattice_contains(h, unit):
                    chosen.append(table.entry(m, i + 1))
                    rows.append(unit)
                    break
    return GeneratorSet(tuple(chosen))


def generator_set_from_words(table: CosetTable, words) -> GeneratorSet:
    """Build a GeneratorSet from explicit class words, ascending degree.

    find_generators makes one canonical choice; this constructor admits any
    other valid system of special Schubert classes (the spanning checks in
    find_relations and schubert_polynomials still apply).
    """
    entries = [table.lookup_word(w) for w in words]
    entries.sort(key=lambda e: (e.m, e.i))
    return GeneratorSet(tuple(entries))


def _relation_degree_rows(relations, degrees, m: int,
                          index_of: dict) -> list[list[int]]:
    """Coefficient vectors over B(m) of {monomial * f} for known relations f."""
    rows = []
    for rel in relations:
        gap = m - rel.degree
        if gap < 0:
            continue
        for mono in monomial_basis(degrees, gap):
            shifted: dict = {}
            for exps, coef in rel.terms:
                key = tuple(x + y for x, y in zip(exps, mono))
                shifted[key] = coef
            row = [0] * len(index_of)
            for exps, coef in shifted.items():
                row[index_of[exps]] = coef
            rows.append(row)
    return rows


def _relation_terms(vec, monomials):
    """Terms in canonical monomial order, sign fixed so the leader is positive."""
    terms = [(monomials[i], c) for i, c in enumerate(vec) if c]
    if not terms:
        return None
    if terms[0][1] < 0:
        terms = [(e, -c) for e, c in terms]
    return tuple(terms)


def find_relations(table: CosetTable, gens: GeneratorSet,
                   max_degree: int | None = None) -> Presentation:
    """Degreewise-minimal generating set of the relation ideal up to a bound.

    At each degree the kernel lattice of the expansion matrix is compared
    with the sublattice generated by lower-degree relations; the quotient's
    minimal generators (one per nontrivial invariant factor of the inclusion,
    found through Smith normal form) are adjoined as new relations.
    """
    if max_degree is None:
        table.require_complete("find_relations without explicit max_degree")
        max_degree = table.top_length
    degrees = gens.degrees
    relations: list[Relation] = []
    for m in range(1, max_degree + 1):
        beta = len(table.layer(m))
        monomials = tuple(monomial_basis(degrees, m))
        if not monomials:
            continue
        index_of = {e: i for i, e in enumerate(monomials)}
        matrix = expansion_matrix(table, gens, m)
        diag = smith_normal_form([list(r) for r in matrix.rows]).diagonal if matrix.rows else []
        if beta and (len([d for d in diag if d]) < beta or any(d not in (0, 1) for d in diag)):
            raise NonSurjective(f"generators do not span the Schubert basis at degree {m}")
        kernel = kernel_basis([list(r) for r in matrix.rows])
        if beta == 0:
            kernel = [[1 if i == j else 0 for j in range(len(monomials))]
                      for i in range(len(monomials))]
        if not kernel:
            continue
        old_rows = _relation_degree_rows(relations, degrees, m, index_of)
        # coordinates of the old sublattice inside the kernel lattice
        coords = []
        for row in old_rows:
            c = solve_in_row_lattice(kernel, row)
            if c is None:
                raise NonSurjective(
                    f"degree-{m} relation multiple escapes the kernel lattice"
                )  # pragma: no cover
            coords.append(c)
        rank = len(kernel)
        new_vecs: list[list[int]] = []
        if not coords:
            new_vecs = [row[:] for row in kernel]
        else:
            res = smith_normal_form(coords)
            diag = [res.d[i][i] if i < len(res.d) and i < len(res.d[0]) else 0
                    for i in range(rank)]
            # primed kernel basis rows: Q^{-1} @ kernel
            for idx in range(rank):
                d = diag[idx] if idx < len(diag) else 0
                if d == 1:
                    continue
                vec = [0] * len(monomials)
                for t in range(rank):
                    c = res.q_inv[idx][t]
                    if c:
                        for col in range(len(monomials)):
                            vec[col] += c * kernel[t][col]
                new_vecs.append(vec)
        batch = []
        for vec in new_vecs:
            terms = _relation_terms(vec, monomials)
            if terms is not None:
                batch.append(Relation(m, terms))
        batch.sort(key=lambda r: r.terms[0][0], reverse=True)
        relations.extend(batch)
    return Presentation(gens, tuple(relations), max_degree)


def schubert_polynomials(table: CosetTable, gens: GeneratorSet, m: int) -> list[SchubertPolynomial]:
    """One polynomial per degree-m Schubert class, verified by re-expansion."""
    matrix = expansion_matrix(table, gens, m)
    beta = matrix.beta
    if beta == 0:
        return []
    if matrix.b == 0:
        raise NonSurjective(f"no generator monomials in degree {m}")
    p, d, q = integer_diagonalize([list(r) for r in matrix.rows])
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    if len([x for x in diag if x]) < beta or any(x not in (0, 1) for x in diag):
        raise NonSurjective(f"expansion matrix not onto at degree {m}")
    # coefficients of the polynomials over the monomial basis: Q @ P[:beta]
    coeff = [[sum(q[i][t] * p[t][col] for t in range(beta)) for col in range(matrix.b)]
             for i in range(beta)]
    out = []
    for i in range(beta):
        # verify pi(G) = s_{m,i+1} exactly, by re-expansion through the matrix
        image = [sum(coeff[i][r] * matrix.rows[r][col] for r in range(matrix.b))
                 for col in range(beta)]
        expected = [1 if col == i else 0 for col in range(beta)]
        if image != expected:
            raise NonSurjective(
                f"diagonalization did not invert the expansion at degree {m}"
            )  # pragma: no cover
        terms = tuple(
            (matrix.monomials[r], coeff[i][r]) for r in range(matrix.b) if coeff[i][r]
        )
        out.append(SchubertPolynomial(m, i + 1, terms))
    return out
