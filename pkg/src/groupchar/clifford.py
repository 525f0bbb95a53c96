"""Characters above a normal subgroup: conjugation, stabilizers, ramification.

All operations work on exact character tables.  Characters of a subgroup
always live on its materialized standalone group (`Subgroup.as_group()`),
whose local ids are the parent ids in sorted order; the id maps travel with
the Subgroup object.

The per-pair scan (`ramification_scan_pair`) asserts, for every invariant
character θ of N with pairwise distinct degrees above it and a supersolvable
or odd-order quotient G/N, that exactly one character of G lies above θ and
that its ramification index e satisfies e² = |G:N|; it also asserts the
two-characters-above fact (equal degrees) and, for fully ramified θ with
abelian quotient, the A × A invariant-factor shape of G/N.  Violations are
raised as TheoremViolation, never swallowed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ._arith import prime_factors
from .chartable import (
    Character,
    CharacterTable,
    compute_table,
    restriction_multiplicities,
)
from .errors import ContractViolation, TheoremViolation
from .groups import Group, Subgroup

__all__ = [
    "conjugate_character",
    "stabilizer_of",
    "orbit_of",
    "irr_above",
    "CharacterTriple",
    "build_triple",
    "is_fully_ramified",
    "extensions_of",
    "section_centralizer",
    "extension_alternative",
    "abelian_invariant_factors",
    "quotient_class",
    "ramification_report",
    "ramification_scan_pair",
]


def _local_rank(sub: Subgroup) -> np.ndarray:
    """Parent id -> local id map (-1 outside the subgroup)."""
    key = "local_rank"
    arr = sub._cache.get(key)
    if arr is None:
        arr = np.full(sub.parent.order, -1, dtype=np.int64)
        arr[sub.as_array()] = np.arange(sub.order)
        sub._cache[key] = arr
    return arr


def class_fusion(group: Group, sub: Subgroup, table_n: CharacterTable):
    """Partition of N's classes into G-conjugation blocks (list of arrays)."""
    cc_g = group.conjugacy_classes()
    rank = _local_rank(sub)
    class_of_n = table_n.classes.class_of
    mask = sub.member_mask()
    blocks = []
    for c in range(len(cc_g.reps)):
        members = cc_g.members[c]
        if not mask[members[0]]:
            continue
        blocks.append(np.unique(class_of_n[rank[members]]))
    return blocks


def invariant_rows(group: Group, sub: Subgroup, table_n: CharacterTable) -> np.ndarray:
    """Boolean mask over rows of N's table: is θ fixed by G-conjugation?"""
    coeffs = table_n._coeffs
    inv_mask = np.ones(len(table_n.rows), dtype=bool)
    for block in class_fusion(group, sub, table_n):
        if block.size < 2:
            continue
        ref = coeffs[:, block[0], :]
        inv_mask &= np.all(coeffs[:, block, :] == ref[:, None, :], axis=(1, 2))
    return inv_mask


def _row_lookup(table: CharacterTable) -> dict[bytes, int]:
    lut = getattr(table, "_lookup", None)
    if lut is None:
        lut = {table._coeffs[r].tobytes(): r for r in range(len(table.rows))}
        table._lookup = lut
    return lut


def _conjugation_class_map(group: Group, sub: Subgroup, table_n: CharacterTable,
                           g: int) -> np.ndarray:
    """sigma with sigma[j] = N-class of g x_j g^{-1} for N-class reps x_j."""
    mul, inv = group.mul, group.inv
    rank = _local_rank(sub)
    reps_parent = sub.to_parent(np.asarray(table_n.classes.reps))
    conj = mul[mul[g, reps_parent], inv[g]]
    return table_n.classes.class_of[rank[conj]]


def conjugate_character(theta: Character, g: int, sub: Subgroup) -> Character:
    """θ^g with θ^g(x) = θ(g x g^{-1}); again a row of N's table."""
    table_n = theta.table
    group = sub.parent
    sigma = _conjugation_class_map(group, sub, table_n, g)
    new_coeffs = table_n._coeffs[theta.index][sigma]
    idx = _row_lookup(table_n).get(np.ascontiguousarray(new_coeffs).tobytes())
    if idx is None:
        raise ContractViolation("conjugate character is not a table row")
    return table_n.rows[idx]


def _conjugation_profile(group: Group, sub: Subgroup, table_n: CharacterTable):
    """For every g: the induced permutation of N's classes (|G| x k_N)."""
    mul, inv = group.mul, group.inv
    rank = _local_rank(sub)
    reps_parent = sub.to_parent(np.asarray(table_n.classes.reps))
    conj = mul[mul[:, reps_parent], inv[:, None]]
    return table_n.classes.class_of[rank[conj]]


def stabilizer_of(theta: Character, group: Group, sub: Subgroup) -> Subgroup:
    """G(θ) = {g in G : θ^g = θ}; contains N."""
    table_n = theta.table
    profile = _conjugation_profile(group, sub, table_n)
    _, vids = np.unique(table_n._coeffs[theta.index], axis=0, return_inverse=True)
    fixed = np.all(vids[profile] == vids[None, :], axis=1)
    stab = Subgroup(group, np.nonzero(fixed)[0])
    if not sub.is_subset_of(stab):
        raise ContractViolation("stabilizer does not contain the normal subgroup")
    if group.order % stab.order:
        raise ContractViolation("stabilizer size does not divide the group order")
    return stab


def orbit_of(theta: Character, group: Group, sub: Subgroup) -> tuple[int, ...]:
    """Sorted row indices of the G-orbit of θ in Irr(N)."""
    table_n = theta.table
    profile = _conjugation_profile(group, sub, table_n)
    lut = _row_lookup(table_n)
    coeffs = table_n._coeffs[theta.index]
    seen = set()
    for g in range(group.order):
        key = np.ascontiguousarray(coeffs[profile[g]]).tobytes()
        idx = lut.get(key)
        if idx is None:
            raise ContractViolation("conjugate character left the table")
        seen.add(idx)
    return tuple(sorted(seen))


def irr_above(group: Group, sub: Subgroup, theta: Character):
    """Rows of Irr(G) lying above θ, each with its Clifford multiplicity e.

    Asserts homogeneity: every such χ restricts to e times the sum over one
    orbit of N-characters (common e, common degree, support = orbit of θ).
    """
    table_g = compute_table(group)
    table_n = theta.table
    mults = restriction_multiplicities(table_g, sub, table_n)
    orbit = orbit_of(theta, group, sub)
    out = []
    for r in np.nonzero(mults[:, theta.index])[0]:
        row_m = mults[r]
        support = tuple(np.nonzero(row_m)[0])
        if support != orbit:
            raise ContractViolation("restriction support is not the orbit of θ")
        vals = row_m[list(support)]
        if not np.all(vals == vals[0]):
            raise ContractViolation("Clifford multiplicities are not homogeneous")
        degs = {table_n.rows[t].degree for t in support}
        if degs != {theta.degree}:
            raise ContractViolation("orbit members have unequal degrees")
        e = int(vals[0])
        chi = table_g.rows[r]
        if chi.degree != e * len(support) * theta.degree:
            raise ContractViolation("degree bookkeeping fails for Irr(G|θ)")
        out.append((chi, e))
    return out


@dataclass(frozen=True)
class CharacterTriple:
    """(G, N, θ) with the θ-stabilizer and the characters of G above θ."""

    group: Group
    sub: Subgroup
    theta: Character
    stabilizer: Subgroup
    above: tuple  # pairs (Character of G, multiplicity e)


def build_triple(group: Group, sub: Subgroup, theta: Character) -> CharacterTriple:
    stab = stabilizer_of(theta, group, sub)
    orbit = orbit_of(theta, group, sub)
    if group.order // stab.order != len(orbit):
        raise ContractViolation("orbit size does not match stabilizer index")
    above = tuple(irr_above(group, sub, theta))
    return CharacterTriple(group, sub, theta, stab, above)


def _transfer_into(sub_outer: Subgroup, sub_inner: Subgroup, theta: Character):
    """Re-express θ (a character of sub_inner ≤ parent) inside sub_outer.

    Returns (outer group, inner-as-subgroup-of-outer, θ on the new copy).
    Local ids sort by parent id on both routes, so the materialized tables
    coincide row for row; this is asserted, not assumed.
    """
    outer = sub_outer.as_group()
    rank = _local_rank(sub_outer)
    inner_local = rank[sub_inner.as_array()]
    if inner_local.min() < 0:
        raise ValueError("inner subgroup is not contained in the outer one")
    inner_in_outer = Subgroup(outer, inner_local)
    regrown = inner_in_outer.as_group()
    if not np.array_equal(regrown.mul, sub_inner.as_group().mul):
        raise ContractViolation("subgroup materialization is not id-stable")
    table_new = compute_table(regrown)
    if not np.array_equal(table_new._coeffs, theta.table._coeffs):
        raise ContractViolation("re-materialized table rows differ")
    theta_new = table_new.rows[theta.index]
    return outer, inner_in_outer, theta_new


def is_fully_ramified(triple: CharacterTriple):
    """(True, e) iff θ has a unique character above it in its stabilizer,
    of degree e·θ(1) with e² = |G(θ):N|; evaluated for the pair (G(θ), N).

    When true, the degree formula at the top level is asserted: the unique
    χ ∈ Irr(G|θ) has χ(1) = |G:G(θ)| · e · θ(1).
    """
    group, sub, theta = triple.group, triple.sub, triple.theta
    stab = triple.stabilizer
    if stab.order == group.order:
        verdict = _fully_ramified_at_top(triple)
    else:
        stab_group, sub_in_stab, theta_s = _transfer_into(stab, sub, theta)
        verdict = is_fully_ramified(build_triple(stab_group, sub_in_stab, theta_s))
    if verdict[0]:
        e = verdict[1]
        if len(triple.above) != 1:
            raise ContractViolation(
                "fully ramified in the stabilizer but |Irr(G|θ)| ≠ 1"
            )
        chi, _ = triple.above[0]
        expected = (group.order // stab.order) * e * theta.degree
        if chi.degree != expected:
            raise ContractViolation(
                f"degree formula fails: χ(1) = {chi.degree}, "
                f"|G:G(θ)|·e·θ(1) = {expected}"
            )
    return verdict


def _fully_ramified_at_top(triple: CharacterTriple):
    group, sub, theta = triple.group, triple.sub, triple.theta
    if len(triple.above) != 1:
        return False, None
    chi, e = triple.above[0]
    if chi.degree == e * theta.degree and e * e == group.order // sub.order:
        return True, e
    return False, None


def extensions_of(theta: Character, sub_n: Subgroup, sub_m: Subgroup):
    """Rows of M's table restricting exactly to θ (N ≤ M, θ M-invariant).

    When M/N is abelian and θ is linear, a nonzero count must equal |M:N|
    (Gallagher); that count is asserted.
    """
    if not sub_n.is_subset_of(sub_m):
        raise ValueError("need N ≤ M to extend characters")
    m_group, n_in_m, theta_m = _transfer_into(sub_m, sub_n, theta)
    table_m = compute_table(m_group)
    table_n = theta_m.table
    if not bool(invariant_rows(m_group, n_in_m, table_n)[theta_m.index]):
        raise ValueError("character is not invariant in M")
    mults = restriction_multiplicities(table_m, n_in_m, table_n)
    exts = [
        table_m.rows[r]
        for r in np.nonzero(mults[:, theta_m.index])[0]
        if table_m.rows[r].degree == theta_m.degree
    ]
    qm = m_group.quotient(n_in_m)
    if qm.image.is_abelian and theta.degree == 1 and exts:
        if len(exts) != qm.image.order:
            raise ContractViolation(
                f"extension count {len(exts)} differs from |M:N| = {qm.image.order}"
            )
    return exts


def section_centralizer(group: Group, sub_m: Subgroup, sub_n: Subgroup) -> Subgroup:
    """C_G(M/N) = {g : [g, m] ∈ N for all m ∈ M}."""
    mul, inv = group.mul, group.inv
    m_els = sub_m.as_array()
    gm = mul[:, m_els]
    gmg = mul[gm, inv[:, None]]
    comm = mul[gmg, inv[m_els][None, :]]
    ok = sub_n.member_mask()[comm].all(axis=1)
    return Subgroup(group, np.nonzero(ok)[0])


def extension_alternative(group: Group, sub_n: Subgroup, sub_m: Subgroup,
                          theta: Character) -> dict:
    """For N ◁ M ◁ G (M normal in G) and θ invariant and extendible to M:
    either some extension of θ is G-invariant, or C_G(M/N) permutes the
    extensions transitively.  Returns the verdict; raises TheoremViolation
    if both branches fail."""
    if not sub_m.is_normal:
        raise ValueError("M must be normal in G for conjugation to act")
    exts = extensions_of(theta, sub_n, sub_m)
    if not exts:
        return {"extendible": False, "invariant_extension": None, "transitive": None}
    m_group = sub_m.as_group()
    table_m = compute_table(m_group)
    inv_m = invariant_rows(group, sub_m, table_m)
    ext_rows = {phi.index for phi in exts}
    if any(inv_m[i] for i in ext_rows):
        return {"extendible": True, "invariant_extension": True, "transitive": None}
    cent = section_centralizer(group, sub_m, sub_n)
    orbit = set()
    first = exts[0]
    for c in cent.elements:
        orbit.add(conjugate_character(first, int(c), sub_m).index)
    transitive = ext_rows <= orbit
    if not transitive:
        raise TheoremViolation(
            "no G-invariant extension and C_G(M/N) not transitive on extensions",
            {"group": group.label, "m_order": sub_m.order, "n_order": sub_n.order,
             "theta": theta.index, "extensions": sorted(ext_rows),
             "centralizer_orbit": sorted(orbit)},
        )
    return {"extendible": True, "invariant_extension": False, "transitive": True}


def abelian_invariant_factors(group: Group) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an abelian group, ascending."""
    if not group.is_abelian:
        raise ValueError("invariant factors require an abelian group")
    n = group.order
    if n == 1:
        return []
    orders = group.elt_order
    per_prime: list[list[int]] = []
    for p in prime_factors(n):
        # lam: exponent partition of the p-primary part, descending,
        # recovered from the sizes of the layers {a : a^(p^k) = 1}.
        logs = [0]
        k = 1
        while True:
            c = int(np.count_nonzero(np.isin(orders, [p ** j for j in range(k + 1)])))
            lg = 0
            while p ** lg < c:
                lg += 1
            if p ** lg != c:
                raise ContractViolation("p-torsion layer is not a p-power")
            logs.append(lg)
            if lg == logs[-2]:
                break
            k += 1
        ranks = [logs[i + 1] - logs[i] for i in range(len(logs) - 1)]
        lam = []
        for k_part in range(1, len(ranks) + 1):
            upper = ranks[k_part] if k_part < len(ranks) else 0
            lam.extend([k_part] * (ranks[k_part - 1] - upper))
        lam.sort(reverse=True)
        per_prime.append([p ** a for a in lam])
    depth = max(len(lam) for lam in per_prime)
    factors = []
    for j in range(depth):
        f = 1
        for lam in per_prime:
            if j < len(lam):
                f *= lam[j]
        factors.append(f)
    factors.reverse()
    total = 1
    for f in factors:
        total *= f
    if total != n:
        raise ContractViolation("invariant factors do not multiply to the order")
    return factors


def quotient_class(image: Group) -> str:
    """'supersolvable', else 'odd', else 'other' (theorem hypotheses)."""
    if image.is_supersolvable():
        return "supersolvable"
    if image.order % 2:
        return "odd"
    return "other"


def _assert_pair_theorems(group: Group, sub: Subgroup, table_g, table_n,
                          inv_mask, mults, qclass, quotient_image, records):
    """Shared assertion core for one pair (G, N): iterate the invariant θ."""
    index = group.order // sub.order
    theta_degrees = table_n.degrees
    for t in range(len(table_n.rows)):
        if not inv_mask[t]:
            continue
        col = mults[:, t]
        above = np.nonzero(col)[0]
        degrees_above = [int(table_g.degrees[r]) for r in above]
        count = len(above)
        # Homogeneity for invariant θ: χ|_N = e·θ exactly.
        for r in above:
            if np.count_nonzero(mults[r]) != 1:
                raise ContractViolation("invariant θ with non-singleton support")
            if int(col[r]) * int(theta_degrees[t]) != int(table_g.degrees[r]):
                raise ContractViolation("invariant θ restriction degree mismatch")
        distinct = len(set(degrees_above)) == len(degrees_above)
        fully = False
        e_val = None
        if count == 1:
            e_val = int(col[above[0]])
            fully = e_val * e_val == index
        if distinct and qclass in ("supersolvable", "odd"):
            if count != 1 or not fully:
                raise TheoremViolation(
                    "distinct degrees above an invariant character with a "
                    "supersolvable-or-odd quotient must be fully ramified",
                    {"group": group.label, "n_order": sub.order, "theta": t,
                     "count_above": count, "degrees_above": degrees_above,
                     "quotient": qclass},
                )
        if count == 2 and degrees_above[0] != degrees_above[1]:
            raise TheoremViolation(
                "exactly two characters above an invariant character "
                "must share a degree",
                {"group": group.label, "n_order": sub.order, "theta": t,
                 "degrees_above": degrees_above},
            )
        if fully and quotient_image.is_abelian:
            factors = abelian_invariant_factors(quotient_image)
            if any(v % 2 for v in Counter(factors).values()):
                raise TheoremViolation(
                    "fully ramified over an abelian quotient requires the "
                    "A x A invariant-factor shape",
                    {"group": group.label, "n_order": sub.order, "theta": t,
                     "invariant_factors": factors},
                )
        records.append({
            "theta": t,
            "theta_degree": int(theta_degrees[t]),
            "invariant": True,
            "count_above": count,
            "degrees_above": degrees_above,
            "distinct_degrees": distinct,
            "fully_ramified": fully,
            "e": e_val,
            "quotient_class": qclass,
            "quotient_abelian": bool(quotient_image.is_abelian),
        })


def ramification_scan_pair(group: Group, sub: Subgroup) -> list[dict]:
    """Run the invariant-θ assertions for one normal subgroup; see module doc."""
    table_g = compute_table(group)
    table_n = compute_table(sub.as_group())
    inv_mask = invariant_rows(group, sub, table_n)
    records: list[dict] = []
    if not inv_mask.any():
        return records
    mults = restriction_multiplicities(table_g, sub, table_n)
    qm = group.quotient(sub)
    qclass = quotient_class(qm.image)
    _assert_pair_theorems(group, sub, table_g, table_n, inv_mask, mults,
                          qclass, qm.image, records)
    return records


def ramification_report(group: Group, sub: Subgroup, theta: Character) -> dict:
    """Report {invariant, distinct_degrees, count_above, fully_ramified,
    quotient_class} for one triple, with the theorem assertions applied
    when θ is invariant (violations raise TheoremViolation)."""
    table_g = compute_table(group)
    table_n = theta.table
    inv_mask = invariant_rows(group, sub, table_n)
    invariant = bool(inv_mask[theta.index])
    qm = group.quotient(sub)
    qclass = quotient_class(qm.image)
    mults = restriction_multiplicities(table_g, sub, table_n)
    above = np.nonzero(mults[:, theta.index])[0]
    degrees_above = [int(table_g.degrees[r]) for r in above]
    distinct = len(set(degrees_above)) == len(degrees_above)
    triple = build_triple(group, sub, theta)
    fully, e_val = is_fully_ramified(triple)
    report = {
        "invariant": invariant,
        "distinct_degrees": distinct,
        "count_above": len(above),
        "degrees_above": degrees_above,
        "fully_ramified": fully,
        "e": e_val,
        "quotient_class": qclass,
    }
    if invariant:
        records: list[dict] = []
        single = np.zeros(len(table_n.rows), dtype=bool)
        single[theta.index] = True
        _assert_pair_theorems(group, sub, table_g, table_n, single, mults,
                              qclass, qm.image, records)
    return report
