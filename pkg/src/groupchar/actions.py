"""Linear actions of matrix groups on finite vector spaces: orbit facts.

A LinearAction is a list of invertible n×n generator matrices over GF(p).
The generated matrix group is closed by breadth-first products (bounded),
and the action on the p^n vectors is stored as one permutation per
generator (vectors are numbered little-endian: id = Σ v_j p^j).

The checks mirror three orbit facts: orbit sizes divide the group order
and sum to p^n − 1 on the nonzero vectors; for odd p the orbit of −v has
the size of the orbit of v; for a group of odd order in odd characteristic
two orbits on the nonzero vectors always share a length, which forces the
distinct-size hypothesis of the transitivity lemma into its transitive
case.  Each is asserted where the statement is unconditional.
"""

from __future__ import annotations

import numpy as np

from ._arith import is_prime
from .errors import (
    BoundExceeded,
    EvenCharacteristic,
    EvenOrder,
    InvalidAction,
    TheoremViolation,
)

__all__ = [
    "LinearAction",
    "orbit_sizes",
    "is_transitive_nonzero",
    "regular_orbit_count",
    "negation_pairing",
    "dade_duplicate_check",
    "distinct_sizes_scan",
    "gl_elements",
    "odd_order_subgroup_actions",
]

ORDER_BOUND = 10 ** 6
SPACE_BOUND = 2 ** 20


def _rank_mod(a: np.ndarray, p: int) -> int:
    m = a.astype(np.int64) % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        r += 1
    return r


class LinearAction:
    """A finite matrix group acting on GF(p)^n, with per-generator vector
    permutations and the orbit partition computed lazily."""

    def __init__(self, p: int, n: int, generators, *,
                 order_bound: int = ORDER_BOUND):
        if not is_prime(p):
            raise InvalidAction(f"{p} is not prime")
        if n < 1:
            raise InvalidAction("dimension must be at least 1")
        if p ** n > SPACE_BOUND:
            raise BoundExceeded("vector space size", p ** n, SPACE_BOUND)
        self.p = p
        self.n = n
        gens = []
        for g in generators:
            m = np.asarray(g, dtype=np.int64) % p
            if m.shape != (n, n):
                raise InvalidAction(f"generator shape {m.shape} is not ({n}, {n})")
            if _rank_mod(m, p) != n:
                raise InvalidAction("generator matrix is singular")
            gens.append(m)
        self.generators = gens
        self.group_order = self._close_group(order_bound)
        self._vector_perms = self._build_perms()
        self._orbit_data: tuple[np.ndarray, np.ndarray] | None = None

    def _close_group(self, bound: int) -> int:
        seen = {np.eye(self.n, dtype=np.int64).tobytes()}
        frontier = [np.eye(self.n, dtype=np.int64)]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = a @ g % self.p
                    key = b.tobytes()
                    if key not in seen:
                        if len(seen) >= bound:
                            raise BoundExceeded("matrix group order",
                                                len(seen) + 1, bound)
                        seen.add(key)
                        nxt.append(b)
            frontier = nxt
        return len(seen)

    def _all_vectors(self) -> np.ndarray:
        ids = np.arange(self.p ** self.n, dtype=np.int64)
        return np.stack(
            [(ids // self.p ** j) % self.p for j in range(self.n)], axis=1
        )

    def _build_perms(self) -> list[np.ndarray]:
        vectors = self._all_vectors()
        powers = self.p ** np.arange(self.n, dtype=np.int64)
        perms = []
        for g in self.generators:
            w = vectors @ g.T % self.p
            perms.append(w @ powers)
        return perms

    def orbits(self) -> tuple[np.ndarray, np.ndarray]:
        """(orbit_label per vector id, orbit sizes indexed by label).

        Labels are dense, assigned in increasing order of the orbit's
        minimal vector id; {0} is always orbit 0.  Breadth-first search
        over generator images suffices: in a finite group every inverse is
        a positive power, so forward reachability is the full orbit.
        """
        if self._orbit_data is None:
            size = self.p ** self.n
            labels = np.full(size, -1, dtype=np.int64)
            current = 0
            for start in range(size):
                if labels[start] >= 0:
                    continue
                labels[start] = current
                frontier = np.array([start], dtype=np.int64)
                while frontier.size and self._vector_perms:
                    images = np.unique(
                        np.concatenate(
                            [perm[frontier] for perm in self._vector_perms]
                        )
                    )
                    fresh = images[labels[images] < 0]
                    labels[fresh] = current
                    frontier = fresh
                current += 1
            sizes = np.bincount(labels, minlength=current)
            self._orbit_data = (labels, sizes.astype(np.int64))
        return self._orbit_data

    def __repr__(self):
        return (f"LinearAction(p={self.p}, n={self.n}, "
                f"generators={len(self.generators)}, order={self.group_order})")


def orbit_sizes(action: LinearAction) -> list[int]:
    """Sorted orbit sizes on the nonzero vectors; sum and divisibility are
    asserted against p^n − 1 and the group order."""
    labels, sizes = action.orbits()
    zero_label = int(labels[0])
    if int(sizes[zero_label]) != 1:
        raise TheoremViolation(
            "the zero vector must be a fixed point",
            {"p": action.p, "n": action.n},
        )
    out = sorted(int(s) for i, s in enumerate(sizes) if i != zero_label)
    if sum(out) != action.p ** action.n - 1:
        raise TheoremViolation(
            "orbit sizes do not sum to the number of nonzero vectors",
            {"sizes": out, "p": action.p, "n": action.n},
        )
    for s in out:
        if action.group_order % s:
            raise TheoremViolation(
                "an orbit size does not divide the group order",
                {"size": s, "group_order": action.group_order},
            )
    return out


def is_transitive_nonzero(action: LinearAction) -> bool:
    return len(orbit_sizes(action)) == 1


def regular_orbit_count(action: LinearAction) -> int:
    return sum(1 for s in orbit_sizes(action) if s == action.group_order)


def negation_pairing(action: LinearAction) -> bool:
    """For odd p: −O is an orbit of the same size as O, for every orbit O.

    Always expected true (−I commutes with every linear map); false would
    expose an orbit-computation bug.
    """
    if action.p == 2:
        raise EvenCharacteristic("negation is trivial in characteristic 2")
    vectors = action._all_vectors()
    powers = action.p ** np.arange(action.n, dtype=np.int64)
    neg_ids = (-vectors) % action.p @ powers
    labels, sizes = action.orbits()
    # -O must be a single orbit of the same size: the (label, label of -v)
    # pairs collapse to one image label per source label.
    pairs = np.unique(np.stack([labels, labels[neg_ids]], axis=1), axis=0)
    if len(np.unique(pairs[:, 0])) != len(pairs):
        return False
    return bool(np.all(sizes[pairs[:, 0]] == sizes[pairs[:, 1]]))


def dade_duplicate_check(action: LinearAction) -> bool:
    """Odd-order groups in odd characteristic always have two orbits of
    equal length on the nonzero vectors; asserted, with witnesses."""
    if action.p == 2:
        raise EvenCharacteristic("the duplicate-length fact needs odd p")
    if action.group_order % 2 == 0:
        raise EvenOrder("the duplicate-length fact needs an odd-order group")
    sizes = orbit_sizes(action)
    if len(sizes) == len(set(sizes)):
        raise TheoremViolation(
            "odd-order action with pairwise distinct orbit sizes",
            {"p": action.p, "n": action.n, "group_order": action.group_order,
             "sizes": sizes},
        )
    return True


def _is_irreducible(action: LinearAction) -> bool:
    """No proper nonzero invariant subspace: the orbit of every nonzero
    vector (one representative per orbit suffices) spans the whole space."""
    labels, sizes = action.orbits()
    vectors = action._all_vectors()
    ids = np.arange(action.p ** action.n, dtype=np.int64)
    for lab in range(len(sizes)):
        members = ids[labels == lab]
        if len(members) == 1 and members[0] == 0:
            continue
        if _rank_mod(vectors[members], action.p) != action.n:
            return False
    return True


def distinct_sizes_scan(action: LinearAction) -> dict:
    """Record the transitivity lemma's hypotheses and, when they all hold
    with pairwise distinct orbit sizes, assert the transitive conclusion.

    The duplicate-length fact makes the distinct-size hypothesis reachable
    only in the transitive case for odd/odd actions; the scan records the
    hypothesis flags rather than extrapolating beyond them.
    """
    sizes = orbit_sizes(action)
    distinct = len(sizes) == len(set(sizes))
    flags = {
        "char_odd": action.p != 2,
        "order_odd": action.group_order % 2 == 1,
        "irreducible": _is_irreducible(action),
        "distinct": distinct,
    }
    transitive = len(sizes) == 1
    asserted = all(flags.values())
    if asserted and not transitive:
        raise TheoremViolation(
            "odd-order irreducible action with distinct orbit sizes must "
            "be transitive on nonzero vectors",
            {"p": action.p, "n": action.n, "group_order": action.group_order,
             "sizes": sizes},
        )
    if transitive and action.group_order % (action.p ** action.n - 1):
        raise TheoremViolation(
            "transitive action order not divisible by the orbit length",
            {"group_order": action.group_order,
             "orbit": action.p ** action.n - 1},
        )
    return {**flags, "transitive": transitive, "asserted": asserted,
            "sizes": sizes}


# -- exhaustive desk-scale enumerations ------------------------------------------


def gl_elements(p: int, n: int, bound: int = 5000) -> list[np.ndarray]:
    """Every invertible n×n matrix over GF(p), lexicographically ordered."""
    count = p ** (n * n)
    if count > 10 ** 7:
        raise BoundExceeded("matrix space", count, 10 ** 7)
    out = []
    for code in range(count):
        digits = []
        c = code
        for _ in range(n * n):
            digits.append(c % p)
            c //= p
        m = np.array(digits, dtype=np.int64).reshape(n, n)
        if _rank_mod(m, p) == n:
            out.append(m)
            if len(out) > bound:
                raise BoundExceeded("general linear group", len(out), bound)
    return out


def _subgroup_closure(elements: list[np.ndarray], seed: list[int], p: int,
                      index: dict[bytes, int]) -> frozenset[int] | None:
    cur = {0} | set(seed)
    frontier = list(cur)
    while frontier:
        nxt = []
        for i in frontier:
            for j in list(cur):
                for k_mat in (elements[i] @ elements[j] % p,
                              elements[j] @ elements[i] % p):
                    k = index[k_mat.tobytes()]
                    if k not in cur:
                        cur.add(k)
                        nxt.append(k)
        frontier = nxt
    return frozenset(cur)


def odd_order_subgroup_actions(p: int, n: int) -> list[LinearAction]:
    """All odd-order subgroups of GL(n, p) as actions, found by closing
    single elements and element pairs (complete when every odd subgroup is
    2-generated, which covers the desk-scale cases: GL(1, p) is cyclic and
    the odd subgroups of GL(2, 3) have order 1 or 3)."""
    elements = gl_elements(p, n)
    order = len(elements)
    ident = np.eye(n, dtype=np.int64).tobytes()
    index = {m.tobytes(): i for i, m in enumerate(elements)}
    id_pos = index[ident]
    if id_pos != 0:
        elements[0], elements[id_pos] = elements[id_pos], elements[0]
        index = {m.tobytes(): i for i, m in enumerate(elements)}

    def elt_order(i: int) -> int:
        k, cur = 1, elements[i]
        while cur.tobytes() != ident:
            cur = cur @ elements[i] % p
            k += 1
        return k

    odd_elems = [i for i in range(order) if elt_order(i) % 2 == 1]
    found: set[frozenset[int]] = set()
    for i in odd_elems:
        found.add(_subgroup_closure(elements, [i], p, index))
    for a in range(len(odd_elems)):
        for b in range(a + 1, len(odd_elems)):
            closed = _subgroup_closure(
                elements, [odd_elems[a], odd_elems[b]], p, index
            )
            if len(closed) % 2 == 1:
                found.add(closed)
    out = []
    for subset in sorted(found, key=lambda s: (len(s), sorted(s))):
        if len(subset) % 2 == 0:
            continue
        gens = [elements[i] for i in sorted(subset) if i != 0]
        action = LinearAction(p, n, gens if gens else [])
        if action.group_order != len(subset):
            raise TheoremViolation(
                "subgroup closure and action closure disagree",
                {"expected": len(subset), "got": action.group_order},
            )
        out.append(action)
    return out
