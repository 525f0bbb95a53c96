"""Clifford layer: orbits and stabilizers of characters, characters above,
full ramification, extensions, and the invariant-theta theorem scans."""

from __future__ import annotations

import numpy as np
import pytest

from groupchar import (
    TheoremViolation,
    abelian,
    abelian_invariant_factors,
    agl1,
    alt,
    build_triple,
    c5c5_c3,
    compute_table,
    conjugate_character,
    cyclic,
    dihedral,
    extension_alternative,
    extensions_of,
    extraspecial_2,
    generalized_quaternion,
    invariant_rows,
    irr_above,
    is_fully_ramified,
    orbit_of,
    quotient_class,
    ramification_report,
    ramification_scan_pair,
    section_centralizer,
    stabilizer_of,
    sym,
)


def _s3_with_a3():
    g = sym(3)
    sub = g.subgroup(np.nonzero(g.elt_order % 2 == 1)[0])
    return g, sub, compute_table(sub.as_group())


def _q8_with_center():
    g = generalized_quaternion(8)
    sub = g.center()
    return g, sub, compute_table(sub.as_group())


def test_conjugation_permutes_a3_characters():
    g, sub, table_n = _s3_with_a3()
    transposition = min(x for x in range(6) if g.elt_order[x] == 2)
    theta = table_n.rows[1]
    image = conjugate_character(theta, transposition, sub)
    assert image.index == 2  # the two nontrivial linear characters swap
    assert conjugate_character(image, transposition, sub).index == 1
    trivial = conjugate_character(table_n.rows[0], transposition, sub)
    assert trivial.index == 0


def test_invariant_rows_and_stabilizers():
    g, sub, table_n = _s3_with_a3()
    inv = invariant_rows(g, sub, table_n)
    assert list(inv) == [True, False, False]
    assert stabilizer_of(table_n.rows[1], g, sub).order == 3
    assert stabilizer_of(table_n.rows[0], g, sub).order == 6
    assert orbit_of(table_n.rows[1], g, sub) == (1, 2)

    a4 = alt(4)
    v4 = a4.minimal_normal_subgroups()[0]
    table_v = compute_table(v4.as_group())
    theta = table_v.rows[1]
    assert stabilizer_of(theta, a4, v4).order == 4
    assert len(orbit_of(theta, a4, v4)) == 3


def test_irr_above_frozen_counts():
    g, sub, table_n = _s3_with_a3()
    above = irr_above(g, sub, table_n.rows[1])
    assert [(chi.degree, e) for chi, e in above] == [(2, 1)]

    q8, z, table_z = _q8_with_center()
    above = irr_above(q8, z, table_z.rows[1])
    assert [(chi.degree, e) for chi, e in above] == [(2, 2)]

    a4 = alt(4)
    v4 = a4.minimal_normal_subgroups()[0]
    theta = compute_table(v4.as_group()).rows[1]
    above = irr_above(a4, v4, theta)
    assert [(chi.degree, e) for chi, e in above] == [(3, 1)]


@pytest.mark.parametrize("sign", ["+", "-"])
def test_extraspecial_above_center(sign):
    g = extraspecial_2(2, sign)
    z = g.center()
    table_z = compute_table(z.as_group())
    above = irr_above(g, z, table_z.rows[1])
    assert [(chi.degree, e) for chi, e in above] == [(4, 4)]
    triple = build_triple(g, z, table_z.rows[1])
    assert is_fully_ramified(triple) == (True, 4)


def test_fully_ramified_verdicts():
    q8, z, table_z = _q8_with_center()
    triple = build_triple(q8, z, table_z.rows[1])
    assert is_fully_ramified(triple) == (True, 2)

    c4 = cyclic(4)
    c2 = c4.subgroup([0, 2])
    table_c2 = compute_table(c2.as_group())
    triple = build_triple(c4, c2, table_c2.rows[1])
    assert is_fully_ramified(triple) == (False, None)

    # theta not invariant: the verdict comes from the stabilizer
    g, sub, table_n = _s3_with_a3()
    triple = build_triple(g, sub, table_n.rows[1])
    assert is_fully_ramified(triple) == (True, 1)

    # degenerate N = G
    full = g.subgroup(range(6))
    table_full = compute_table(full.as_group())
    triple = build_triple(g, full, table_full.rows[1])
    assert is_fully_ramified(triple) == (True, 1)


def test_extensions_frozen_counts():
    q8 = generalized_quaternion(8)
    z = q8.center()
    # a cyclic order-4 subgroup through the center
    gen4 = min(x for x in range(8) if q8.elt_order[x] == 4)
    c4 = q8.generated_subgroup([gen4])
    table_z = compute_table(z.as_group())
    theta = table_z.rows[1]
    assert len(extensions_of(theta, z, c4)) == 2
    full = q8.subgroup(range(8))
    assert len(extensions_of(theta, z, full)) == 0
    # Gallagher bookkeeping: the trivial character has |M:N| extensions
    # when M/N is abelian
    assert len(extensions_of(table_z.rows[0], z, full)) == 4


def test_extension_alternative_q8_chain():
    q8 = generalized_quaternion(8)
    z = q8.center()
    gen4 = min(x for x in range(8) if q8.elt_order[x] == 4)
    c4 = q8.generated_subgroup([gen4])
    theta = compute_table(z.as_group()).rows[1]
    out = extension_alternative(q8, z, c4, theta)
    assert out["extendible"] is True
    assert out["invariant_extension"] is False
    assert out["transitive"] is True


def test_section_centralizer():
    q8 = generalized_quaternion(8)
    z = q8.center()
    gen4 = min(x for x in range(8) if q8.elt_order[x] == 4)
    c4 = q8.generated_subgroup([gen4])
    assert section_centralizer(q8, c4, z).order == 8

    s4 = sym(4)
    v4 = s4.subgroup([0, 7, 16, 23])
    assert section_centralizer(s4, v4, s4.trivial_subgroup()).order == 4


@pytest.mark.parametrize(
    "invariants,expected",
    [
        ([2, 2], [2, 2]),
        ([4], [4]),
        ([2, 4], [2, 4]),
        ([2, 2, 12], [2, 2, 12]),
        ([360], [360]),
        ([2, 6, 6], [2, 6, 6]),
    ],
)
def test_abelian_invariant_factors_round_trip(invariants, expected):
    assert abelian_invariant_factors(abelian(invariants)) == expected


def test_abelian_invariant_factors_trivial_and_errors():
    assert abelian_invariant_factors(cyclic(1)) == []
    with pytest.raises(ValueError):
        abelian_invariant_factors(sym(3))


def test_quotient_class_verdicts():
    assert quotient_class(sym(3)) == "supersolvable"
    assert quotient_class(cyclic(15)) == "supersolvable"
    assert quotient_class(c5c5_c3()) == "odd"
    assert quotient_class(sym(4)) == "other"


def test_ramification_report_q8_center():
    q8, z, table_z = _q8_with_center()
    rep = ramification_report(q8, z, table_z.rows[1])
    assert rep == {
        "invariant": True,
        "distinct_degrees": True,
        "count_above": 1,
        "degrees_above": [2],
        "fully_ramified": True,
        "e": 2,
        "quotient_class": "supersolvable",
    }
    rep0 = ramification_report(q8, z, table_z.rows[0])
    assert rep0["count_above"] == 4
    assert rep0["fully_ramified"] is False
    assert rep0["distinct_degrees"] is False


def test_scan_records_shape():
    g = agl1(5)
    kernel = g.minimal_normal_subgroups()[0]
    records = ramification_scan_pair(g, kernel)
    # only the trivial character of the kernel is invariant: 4 linear above
    assert len(records) == 1
    rec = records[0]
    assert rec["theta"] == 0 and rec["count_above"] == 4
    assert rec["quotient_abelian"] is True
    assert rec["fully_ramified"] is False

    q8, z, _ = _q8_with_center()
    records = ramification_scan_pair(q8, z)
    assert len(records) == 2
    fully = [r for r in records if r["fully_ramified"]]
    assert len(fully) == 1 and fully[0]["e"] == 2


def test_scan_over_dihedral_family_raises_nothing():
    for n in range(3, 12):
        g = dihedral(n)
        for sub in g.normal_subgroups():
            if 1 < sub.order < g.order:
                ramification_scan_pair(g, sub)
