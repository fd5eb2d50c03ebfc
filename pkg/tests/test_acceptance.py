"""Acceptance suite: one test per exit criterion, exact values throughout.

Each test prints a single "criterion N: PASS" line (visible with -s or -rP);
an assertion failure marks the criterion red.  The two golden tables assert
exact integers with zero tolerance; runtimes are reported against the stated
targets and guarded with a doubled envelope so slow CI hardware does not mask
value regressions.
"""

import time
from itertools import permutations

import pytest

from flagcalc import (
    builtin_cartan,
    characteristic,
    enumerate_cosets,
    multiply_schubert,
    simple_reflection,
    structure_matrix,
)
from flagcalc.intlinalg import lattice_equal, smith_normal_form
from flagcalc.oracle import (
    borel_inverse_components,
    coset_to_partition,
    lr_coefficient,
)
from flagcalc.polyint import poly_mul
from flagcalc.presentation import (
    expansion_matrix,
    find_generators,
    find_relations,
    generator_set_from_words,
    monomial_basis,
    schubert_polynomials,
)
from flagcalc.weyl import identity_matrix, mat_mul

from conftest import load_data

E6P2_GENERATOR_WORDS = [[2], [5, 4, 2], [6, 5, 4, 2], [1, 3, 6, 5, 4, 2]]


def report(num, message):
    print(f"criterion {num}: PASS - {message}")


def _column_classes(table):
    k = next(iter(table.k_set))
    return {r: table.lookup_word(tuple(range(k - r + 1, k + 1))) for r in range(1, k + 1)}


# --------------------------------------------------------------------------
# criterion 3: minimized-decomposition table of W(P_4; SU(9)), lengths 1..8
# --------------------------------------------------------------------------

def test_criterion_3_coset_words(g94_len8):
    golden = load_data("g94_coset_words.json")
    assert list(g94_len8.betti[1:9]) == golden["betti"] == [1, 2, 3, 5, 6, 8, 9, 11]
    expected = {}
    for m, i, word in golden["entries"]:
        expected.setdefault(m, []).append((i, word))
    for m in range(1, 9):
        layer = g94_len8.layer(m)
        assert [(e.i, list(e.word)) for e in layer] == expected[m]
    report(3, "45 minimized words and indexes match, betti (1,2,3,5,6,8,9,11)")


# --------------------------------------------------------------------------
# criterion 4: structure matrices of the two length-4 words over G2
# --------------------------------------------------------------------------

def test_criterion_4_structure_matrices():
    g2 = builtin_cartan("G", 2)
    a_u = structure_matrix(g2, (1, 2, 1, 2))
    a_v = structure_matrix(g2, (2, 1, 2, 1))
    assert a_u.rows == ((0, 1, -2, 1), (0, 0, 3, -2), (0, 0, 0, 1), (0, 0, 0, 0))
    assert a_v.rows == ((0, 3, -2, 3), (0, 0, 1, -2), (0, 0, 0, 3), (0, 0, 0, 0))
    report(4, "G2 words (1,2,1,2) and (2,1,2,1) give the printed matrices")


# --------------------------------------------------------------------------
# criterion 5: coset-space cardinalities
# --------------------------------------------------------------------------

def test_criterion_5_counts(g94, g2t):
    assert g2t.size == 12
    assert enumerate_cosets(builtin_cartan("F", 4), {1, 2, 3, 4}).size == 1152
    e6t = enumerate_cosets(builtin_cartan("E", 6), {1, 2, 3, 4, 5, 6})
    assert e6t.size == 51840
    assert g94.size == 126
    report(5, "G2/T=12, F4/T=1152, E6/T=51840, G_{9,4}=126")


# --------------------------------------------------------------------------
# criterion 6: exhaustive oracle equivalence on G_{5,2} and G_{6,3}
# --------------------------------------------------------------------------

@pytest.mark.parametrize("fixture_name", ["g52", "g63"])
def test_criterion_6_oracle_equivalence(fixture_name, request):
    table = request.getfixturevalue(fixture_name)
    entries = list(table.entries())
    compared = 0
    for u in entries:
        for v in entries:
            if u.m + v.m > table.top_length:
                continue
            expansion = multiply_schubert(table, u, v).as_dict()
            for coef in expansion.values():
                assert coef >= 0
            lam, mu = coset_to_partition(table, u), coset_to_partition(table, v)
            for w in table.layer(u.m + v.m):
                nu = coset_to_partition(table, w)
                assert expansion.get((w.m, w.i), 0) == lr_coefficient(lam, mu, nu)
                compared += 1
    report(6, f"{fixture_name}: {compared} coefficients equal the LR oracle")


# --------------------------------------------------------------------------
# criterion 7: property suite
# --------------------------------------------------------------------------

def test_criterion_7_properties(g42, b2t, g2t, g94, g52, g63, e6p2, cp3):
    # permutation symmetry and 3-factor associativity, exhaustively
    checked_assoc = 0
    for table in (g42, b2t, g2t):
        entries = [e for e in table.entries() if e.m >= 1]
        top = table.top_length
        for u in entries:
            for v in entries:
                if u.m + v.m > top:
                    continue
                uv = multiply_schubert(table, u, v).as_dict()
                for z in entries:
                    total = u.m + v.m + z.m
                    if total > top:
                        continue
                    vz = multiply_schubert(table, v, z).as_dict()
                    for w in table.layer(total):
                        direct = characteristic(table, w, [u, v, z])
                        assert direct >= 0
                        for perm in permutations([u, v, z]):
                            assert characteristic(table, w, list(perm)) == direct
                        left = sum(
                            c * characteristic(table, w, [table.entry(m, i), z])
                            for (m, i), c in uv.items()
                        )
                        right = sum(
                            c * characteristic(table, w, [u, table.entry(m, i)])
                            for (m, i), c in vz.items()
                        )
                        assert direct == left == right
                        checked_assoc += 1
    # Betti symmetry on every complete table in the suite
    for table in (g42, b2t, g2t, g94, g52, g63, e6p2, cp3):
        assert table.betti == tuple(reversed(table.betti))
    # involutions across the builtin catalogue
    groups = [("A", r) for r in range(1, 9)] + [("B", r) for r in range(2, 6)]
    groups += [("C", r) for r in range(2, 6)] + [("D", r) for r in range(3, 7)]
    groups += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    for series, rank in groups:
        cm = builtin_cartan(series, rank)
        ident = identity_matrix(rank)
        for i in range(1, rank + 1):
            s = simple_reflection(cm, i)
            assert mat_mul(s, s) == ident
    report(7, f"symmetry+associativity on {checked_assoc} triples, betti symmetry, "
              f"involutions for {len(groups)} groups")


# --------------------------------------------------------------------------
# criterion 8: presentation soundness and completeness
# --------------------------------------------------------------------------

def _ideal_degree_rows(polys, degrees, m):
    monos = monomial_basis(degrees, m)
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for d, terms in polys:
        gap = m - d
        if gap < 0:
            continue
        for mono in monomial_basis(degrees, gap):
            row = [0] * len(monos)
            for exps, coef in terms:
                row[index[tuple(x + y for x, y in zip(exps, mono))]] = coef
            rows.append(row)
    return rows, len(monos)


def test_criterion_8_grassmannian_ideals(g42, g52):
    for table, n in ((g42, 4), (g52, 5)):
        k = 2
        gens = find_generators(table)
        assert gens.degrees == (1, 2)
        pres = find_relations(table, gens)
        ours = [(r.degree, r.terms) for r in pres.relations]
        borel = [
            (deg, tuple(poly.items()))
            for deg, poly in zip(range(n - k + 1, n + 1), borel_inverse_components(k, n))
        ]
        for m in range(1, table.top_length + 1):
            rows_a, cols = _ideal_degree_rows(ours, gens.degrees, m)
            rows_b, _ = _ideal_degree_rows(borel, gens.degrees, m)
            if rows_a or rows_b:
                assert lattice_equal(rows_a, rows_b, cols), (n, m)
    report(8, "G_{4,2} and G_{5,2} ideals equal the formal-inverse ideals degreewise")


def test_criterion_8_e6p2_presentation(e6p2):
    for gens in (
        find_generators(e6p2, 6),
        generator_set_from_words(e6p2, E6P2_GENERATOR_WORDS),
    ):
        assert gens.degrees == (1, 3, 4, 6)
        pres = find_relations(e6p2, gens, 9)
        polys = [(r.degree, r.terms) for r in pres.relations]
        for m in range(1, 10):
            matrix = expansion_matrix(e6p2, gens, m)
            index = {e: i for i, e in enumerate(matrix.monomials)}
            # soundness: every emitted relation maps to zero
            for rel in pres.relations:
                if rel.degree != m:
                    continue
                image = [0] * matrix.beta
                for exps, coef in rel.terms:
                    row = matrix.rows[index[exps]]
                    image = [a + coef * b for a, b in zip(image, row)]
                assert not any(image)
            # completeness: the degree-m quotient is free of rank beta(m)
            rows, cols = _ideal_degree_rows(polys, gens.degrees, m)
            beta = len(e6p2.layer(m))
            if rows:
                diag = [d for d in smith_normal_form(rows).diagonal if d]
                assert all(d == 1 for d in diag)
                assert cols - len(diag) == beta
            else:
                assert cols == beta
    report(8, "E6/P2: relations sound and quotient ranks equal beta(m) through degree 9")


# --------------------------------------------------------------------------
# criterion 9: Schubert polynomials
# --------------------------------------------------------------------------

def _image_vector(matrix, terms):
    index = {e: i for i, e in enumerate(matrix.monomials)}
    image = [0] * matrix.beta
    for exps, coef in terms:
        row = matrix.rows[index[exps]]
        image = [a + coef * b for a, b in zip(image, row)]
    return image


def test_criterion_9_e6p2_schubert_polynomials(e6p2):
    gens = generator_set_from_words(e6p2, E6P2_GENERATOR_WORDS)
    golden = load_data("e6p2_schubert_polynomials.json")
    degree_slot = {e.m: idx for idx, e in enumerate(gens.entries)}
    for m in (8, 9):
        matrix = expansion_matrix(e6p2, gens, m)
        ours = schubert_polynomials(e6p2, gens, m)
        assert len(ours) == len(e6p2.layer(m)) == 5
        for sp in ours:
            expected = [1 if col == sp.index - 1 else 0 for col in range(matrix.beta)]
            assert _image_vector(matrix, sp.terms) == expected
        for kstr, terms in golden[str(m)].items():
            k = int(kstr)
            golden_terms = []
            for term in terms:
                exps = [0] * len(gens.entries)
                for d, e in term["exps"].items():
                    exps[degree_slot[int(d)]] = e
                golden_terms.append((tuple(exps), term["coef"]))
            expected = [1 if col == k - 1 else 0 for col in range(matrix.beta)]
            # the difference of ours and the golden polynomial lies in ker pi
            assert _image_vector(matrix, golden_terms) == expected
    report(9, "E6/P2 degrees 8 and 9: pi(G)=s for all k, golden polynomials "
              "differ from ours by kernel elements")


def _giambelli_determinant(lam, k):
    """Dual Jacobi-Trudi determinant in the column classes c_1..c_k."""
    conj = []
    for col in range(1, (lam[0] if lam else 0) + 1):
        conj.append(sum(1 for part in lam if part >= col))
    size = len(conj)
    if size == 0:
        return {(0,) * k: 1}

    def c_poly(idx):
        if idx == 0:
            return {(0,) * k: 1}
        if idx < 0 or idx > k:
            return {}
        exps = [0] * k
        exps[idx - 1] = 1
        return {tuple(exps): 1}

    total: dict = {}
    for perm in permutations(range(size)):
        sign = 1
        for a in range(size):
            for b in range(a + 1, size):
                if perm[a] > perm[b]:
                    sign = -sign
        prod = {(0,) * k: sign}
        for i in range(size):
            prod = poly_mul(prod, c_poly(conj[i] - (i + 1) + (perm[i] + 1)))
            if not prod:
                break
        for e, c in prod.items():
            v = total.get(e, 0) + c
            if v:
                total[e] = v
            else:
                del total[e]
    return total


def test_criterion_9_g42_giambelli(g42):
    gens = find_generators(g42)
    for m in range(1, g42.top_length + 1):
        matrix = expansion_matrix(g42, gens, m)
        ours = schubert_polynomials(g42, gens, m)
        for sp, entry in zip(ours, g42.layer(m)):
            lam = coset_to_partition(g42, entry)
            det = _giambelli_determinant(lam, 2)
            expected = [1 if col == sp.index - 1 else 0 for col in range(matrix.beta)]
            assert _image_vector(matrix, sp.terms) == expected
            assert _image_vector(matrix, tuple(det.items())) == expected
    report(9, "G_{4,2}: polynomials match the Giambelli determinant images in every degree")


# --------------------------------------------------------------------------
# criterion 1: Table of G_{9,4} top-degree characteristics (108 values)
# --------------------------------------------------------------------------

def test_criterion_1_g94_table(g94):
    golden = load_data("g94_characteristics.json")
    top = g94.entry(20, 1)
    classes = _column_classes(g94)
    # single-monomial latency, measured on a cold table
    fresh = enumerate_cosets(builtin_cartan("A", 8), {4})
    fresh_top = fresh.entry(20, 1)
    fresh_classes = _column_classes(fresh)
    t0 = time.time()
    value = characteristic(fresh, fresh_top, [fresh_classes[3]] * 4 + [fresh_classes[4]] * 2)
    single = time.time() - t0
    assert value == 1
    assert single < 1.0, f"single monomial took {single:.2f}s (target 1s)"
    t0 = time.time()
    order = sorted(golden["entries"],
                   key=lambda row: sum(int(r) * e for r, e in row["exps"].items() if r != "1"))
    for row in order:
        monomial = []
        for r, e in row["exps"].items():
            monomial.extend([classes[int(r)]] * e)
        value = characteristic(g94, top, monomial)
        assert value >= 0
        assert value == row["value"], (row, value)
    elapsed = time.time() - t0
    assert elapsed < 1200, f"full table took {elapsed:.0f}s (target 600s, envelope 2x)"
    report(1, f"all 108 values exact; table {elapsed:.0f}s (target 600s), "
              f"single monomial {single * 1000:.0f}ms (target 1000ms)")


# --------------------------------------------------------------------------
# criterion 2: Table of E6/P2 top-degree characteristics (50 values)
# --------------------------------------------------------------------------

def test_criterion_2_e6p2_table(e6p2):
    golden = load_data("e6p2_characteristics.json")
    top = e6p2.entry(21, 1)
    gens = generator_set_from_words(e6p2, E6P2_GENERATOR_WORDS)
    by_degree = {e.m: e for e in gens.entries}
    t0 = time.time()
    order = sorted(golden["entries"],
                   key=lambda row: sum(int(r) * e for r, e in row["exps"].items() if r != "1"))
    for row in order:
        monomial = []
        for r, e in row["exps"].items():
            monomial.extend([by_degree[int(r)]] * e)
        value = characteristic(e6p2, top, monomial)
        assert value >= 0
        assert value == row["value"], (row, value)
    elapsed = time.time() - t0
    assert elapsed < 600, f"full table took {elapsed:.0f}s (target 300s, envelope 2x)"
    # end-to-end through the CLI, on a cold table
    from click.testing import CliRunner

    from flagcalc.cli import main as cli_main

    result = CliRunner().invoke(cli_main, ["char", "--group", "E6", "--k", "2",
                                           "--w", "top", "--classes", "y1^21"])
    assert result.exit_code == 0
    assert result.output.strip() == "y1^21 = 151164"
    report(2, f"all 50 values exact (and y1^21 via the CLI); table {elapsed:.0f}s "
              f"(target 300s)")
