"""Finite groups as explicit multiplication tables on dense element ids.

A group of order n lives on ids 0..n-1 with 0 the identity.  Everything
downstream (conjugacy classes, subgroup lattices, quotients, character
tables) is exact integer table arithmetic, mostly vectorized with numpy.
Groups are immutable once built; derived data is cached on the instance,
so sharing instances across threads is safe after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._arith import factorize, lcm, p_part, prime_power
from .errors import BoundExceeded, ContractViolation, NotNormal

SUBGROUP_BOUND = 2000  # default ceiling for subgroup-lattice operations

_EXHAUSTIVE_ASSOCIATIVITY = 256
_RANDOM_TRIPLE_FACTOR = 10


def _bound_or_default(bound: int | None) -> int:
    return SUBGROUP_BOUND if bound is None else bound


class Group:
    """A finite group given by its full n x n multiplication table."""

    __slots__ = ("order", "mul", "inv", "elt_order", "label", "_cache")

    def __init__(self, mul, label: str = "G", *, validate: bool = True):
        mul = np.ascontiguousarray(np.asarray(mul, dtype=np.int64))
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise ValueError("multiplication table must be a nonempty square")
        n = int(mul.shape[0])
        if int(mul.min()) < 0 or int(mul.max()) >= n:
            raise ValueError("table entries must be element ids 0..n-1")
        ids = np.arange(n)
        if not (np.array_equal(mul[0], ids) and np.array_equal(mul[:, 0], ids)):
            raise ValueError("element 0 must be a two-sided identity")
        # Inverses: the identity must appear exactly once per row, and the
        # row inverse must also be the column inverse.
        zero_counts = np.count_nonzero(mul == 0, axis=1)
        if not np.array_equal(zero_counts, np.ones(n, dtype=zero_counts.dtype)):
            raise ValueError("some element has no unique right inverse")
        inv = np.argmax(mul == 0, axis=1)
        if not np.array_equal(mul[inv, ids], np.zeros(n, dtype=np.int64)):
            raise ValueError("right inverses are not left inverses")
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "elt_order", self._element_orders())
        if validate:
            self._check_associativity()

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Group is immutable")

    def __repr__(self):
        return f"Group({self.label}, order={self.order})"

    # -- construction-time checks -------------------------------------------

    def _element_orders(self) -> np.ndarray:
        n = self.order
        ids = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = ids.copy()  # g^1
        k = 1
        while (orders == 0).any():
            if k > n:
                raise ValueError("power chains do not return to the identity")
            orders[(orders == 0) & (cur == 0)] = k
            cur = self.mul[cur, ids]
            k += 1
        return orders

    def _check_associativity(self) -> None:
        n, mul = self.order, self.mul
        if n <= _EXHAUSTIVE_ASSOCIATIVITY:
            for a in range(n):
                left = mul[mul[a], :]
                right = mul[a][mul]
                if not np.array_equal(left, right):
                    raise ValueError(f"associativity fails at element {a}")
        else:
            rng = np.random.default_rng(0)
            m = _RANDOM_TRIPLE_FACTOR * n * n
            a = rng.integers(0, n, m)
            b = rng.integers(0, n, m)
            c = rng.integers(0, n, m)
            if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
                raise ValueError("associativity fails on sampled triples")

    # -- elementary queries ---------------------------------------------------

    @property
    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            self._cache["abelian"] = bool(np.array_equal(self.mul, self.mul.T))
        return self._cache["abelian"]

    @property
    def exponent(self) -> int:
        if "exponent" not in self._cache:
            self._cache["exponent"] = lcm(int(o) for o in self.elt_order)
        return self._cache["exponent"]

    @property
    def is_cyclic(self) -> bool:
        return int(self.elt_order.max()) == self.order

    def power(self, g: int, k: int) -> int:
        k %= int(self.elt_order[g])
        out = 0
        for _ in range(k):
            out = int(self.mul[out, g])
        return out

    # -- conjugacy classes ------------------------------------------------------

    def conjugacy_classes(self) -> "ConjugacyClasses":
        if "classes" in self._cache:
            return self._cache["classes"]
        n, mul, inv = self.order, self.mul, self.inv
        class_of = np.full(n, -1, dtype=np.int64)
        reps: list[int] = []
        sizes: list[int] = []
        members: list[np.ndarray] = []
        for g in range(n):
            if class_of[g] >= 0:
                continue
            orbit = np.unique(mul[mul[:, g], inv])  # h g h^{-1} over all h
            class_of[orbit] = len(reps)
            reps.append(g)
            sizes.append(len(orbit))
            members.append(orbit)
        rep_arr = np.array(reps, dtype=np.int64)
        inverse_class = class_of[self.inv[rep_arr]]
        cc = ConjugacyClasses(
            group=self,
            reps=tuple(reps),
            sizes=tuple(sizes),
            members=tuple(members),
            class_of=class_of,
            inverse_class=tuple(int(k) for k in inverse_class),
        )
        self._cache["classes"] = cc
        return cc

    def centralizer(self, g: int) -> "Subgroup":
        mask = self.mul[:, g] == self.mul[g, :]
        return Subgroup(self, np.nonzero(mask)[0])

    def center(self) -> "Subgroup":
        cc = self.conjugacy_classes()
        singles = [r for r, s in zip(cc.reps, cc.sizes) if s == 1]
        return Subgroup(self, np.array(sorted(singles)), normal=True)

    def derived_subgroup(self) -> "Subgroup":
        if "derived" in self._cache:
            return self._cache["derived"]
        n, mul, inv = self.order, self.mul, self.inv
        a = np.repeat(np.arange(n), n)
        b = np.tile(np.arange(n), n)
        comm = np.unique(mul[mul[mul[a, b], inv[a]], inv[b]])
        # The commutator set is closed under conjugation, so its closure is
        # automatically normal.
        sub = Subgroup(self, self._closure(comm), normal=True)
        self._cache["derived"] = sub
        return sub

    # -- subgroup plumbing ---------------------------------------------------------

    def _closure(self, seed, cap: int | None = None) -> np.ndarray | None:
        """Multiplicative closure of seed (plus identity); None if cap exceeded."""
        cur = np.unique(np.append(np.asarray(seed, dtype=np.int64), 0))
        while True:
            nxt = np.unique(self.mul[np.ix_(cur, cur)])
            if cap is not None and len(nxt) > cap:
                return None
            if len(nxt) == len(cur):
                return nxt
            cur = nxt

    def subgroup(self, elements) -> "Subgroup":
        """Wrap an element set after verifying it is a subgroup."""
        els = np.unique(np.asarray(list(elements), dtype=np.int64))
        if len(els) == 0 or els[0] != 0:
            raise ValueError("a subgroup must contain the identity 0")
        closed = self._closure(els)
        if len(closed) != len(els):
            raise ValueError("element set is not multiplicatively closed")
        return Subgroup(self, els)

    def generated_subgroup(self, gens) -> "Subgroup":
        return Subgroup(self, self._closure(np.asarray(list(gens), dtype=np.int64)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, np.array([0]), normal=True)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order), normal=True)

    def normal_closure(self, seed) -> "Subgroup":
        """Smallest normal subgroup containing the seed elements."""
        seed = np.unique(np.append(np.asarray(list(seed), dtype=np.int64), 0))
        conj = np.unique(self.mul[self.mul[:, seed], self.inv[:, None]])
        return Subgroup(self, self._closure(conj), normal=True)

    def _class_atoms(self) -> list[tuple[int, np.ndarray]]:
        """(rep, normal closure) for each nontrivial conjugacy class."""
        if "atoms" in self._cache:
            return self._cache["atoms"]
        cc = self.conjugacy_classes()
        atoms = []
        for rep in cc.reps[1:]:
            atoms.append((rep, self.normal_closure([rep]).as_array()))
        self._cache["atoms"] = atoms
        return atoms

    def minimal_normal_subgroups(self, bound: int | None = None) -> list["Subgroup"]:
        """Inclusion-minimal nontrivial normal subgroups.

        Every minimal normal subgroup is the normal closure of any of its
        nontrivial classes, so the inclusion-minimal class closures are
        exactly the minimal normal subgroups.
        """
        self._require_bound("minimal_normal_subgroups", bound)
        if "minimal_normals" in self._cache:
            return self._cache["minimal_normals"]
        seen: dict[tuple, np.ndarray] = {}
        for _, els in self._class_atoms():
            seen.setdefault(tuple(els.tolist()), els)
        mins = []
        for key, els in seen.items():
            s = set(key)
            if not any(set(other) < s for other in seen):
                mins.append(els)
        mins.sort(key=lambda e: (len(e), tuple(e.tolist())))
        out = [Subgroup(self, e, normal=True) for e in mins]
        self._cache["minimal_normals"] = out
        return out

    def normal_subgroups(self, bound: int | None = None) -> list["Subgroup"]:
        """All normal subgroups, via join closure of class-closure atoms.

        The atoms are the normal closures of single classes; every normal
        subgroup is a join of atoms, and the join of two normal subgroups is
        their one-pass product set.
        """
        self._require_bound("normal_subgroups", bound)
        if "normal_subgroups" in self._cache:
            return self._cache["normal_subgroups"]
        atoms: dict[tuple, tuple[int, np.ndarray]] = {}
        for rep, els in self._class_atoms():
            atoms.setdefault(tuple(els.tolist()), (rep, els))
        atom_list = list(atoms.values())
        trivial = np.array([0], dtype=np.int64)
        found: dict[tuple, np.ndarray] = {(0,): trivial}
        queue: list[np.ndarray] = [trivial]
        for _, els in atom_list:
            key = tuple(els.tolist())
            if key not in found:
                found[key] = els
                queue.append(els)
        while queue:
            cur = queue.pop()
            cur_set = set(cur.tolist())
            for rep, els in atom_list:
                if rep in cur_set:
                    continue
                join = np.unique(self.mul[np.ix_(cur, els)])
                key = tuple(join.tolist())
                if key not in found:
                    found[key] = join
                    queue.append(join)
        subs = sorted(found.values(), key=lambda e: (len(e), tuple(e.tolist())))
        out = [Subgroup(self, e, normal=True) for e in subs]
        self._cache["normal_subgroups"] = out
        return out

    def _require_bound(self, what: str, bound: int | None) -> None:
        b = _bound_or_default(bound)
        if self.order > b:
            raise BoundExceeded(what, self.order, b)

    # -- quotients -------------------------------------------------------------

    def quotient(self, normal: "Subgroup") -> "QuotientMap":
        if normal.parent is not self:
            raise ValueError("subgroup belongs to a different group")
        if not normal.is_normal:
            raise NotNormal(f"{normal} is not normal in {self.label}")
        n = self.order
        els = normal.as_array()
        coset_min = self.mul[:, els].min(axis=1)
        reps = np.unique(coset_min)  # sorted; coset of 0 has min 0
        rank = np.full(n, -1, dtype=np.int64)
        rank[reps] = np.arange(len(reps))
        projection = rank[coset_min]
        img_mul = projection[self.mul[np.ix_(reps, reps)]]
        image = Group(img_mul, label=f"{self.label}/{normal.short_label()}")
        # Full homomorphism check, plus fiber sizes.
        if not np.array_equal(
            projection[self.mul], img_mul[projection[:, None], projection[None, :]]
        ):
            raise ContractViolation("quotient projection is not a homomorphism")
        fibers = np.bincount(projection, minlength=len(reps))
        if not np.all(fibers == normal.order):
            raise ContractViolation("quotient fibers have unequal sizes")
        return QuotientMap(self, normal, image, projection, reps)

    # -- radicals and series ------------------------------------------------------

    def radicals(self, p: int, bound: int | None = None) -> "PRadicals":
        """O_p, O_{p'}, the p-residual O^{p'}, and the Fitting subgroup."""
        self._require_bound("radicals", bound)
        key = ("radicals", p)
        if key in self._cache:
            return self._cache[key]
        o_p = self._class_radical(p, mode="p")
        o_pp = self._class_radical(p, mode="p'")
        residual = self._p_residual(p)
        fit = self._fitting()
        out = PRadicals(p=p, o_p=o_p, o_p_prime=o_pp, p_residual=residual, fitting=fit)
        self._cache[key] = out
        return out

    def _class_radical(self, p: int, mode: str) -> "Subgroup":
        """Union of classes whose normal closure is a p-group (or p'-group).

        An element lies in O_p(G) exactly when its normal closure is a
        p-group, and similarly for O_{p'}; the union of those classes is the
        radical itself, which we re-verify to be closed.
        """
        members: list[np.ndarray] = [np.array([0], dtype=np.int64)]
        cc = self.conjugacy_classes()
        for (rep, els), cls in zip(self._class_atoms(), cc.members[1:]):
            m = len(els)
            if mode == "p":
                ok = p_part(m, p) == m
            else:
                ok = m % p != 0
            if ok:
                members.append(cls)
        union = np.unique(np.concatenate(members))
        closed = self._closure(union)
        if len(closed) != len(union):
            raise ContractViolation("radical element set is not closed")
        return Subgroup(self, union, normal=True)

    def _p_residual(self, p: int) -> "Subgroup":
        """O^{p'}(G): the subgroup generated by all p-elements.

        The set of p-elements is conjugation-closed, so the closure is the
        smallest normal subgroup with a p'-quotient.
        """
        seed = np.nonzero(
            np.array([p_part(int(o), p) == int(o) for o in self.elt_order])
        )[0]
        return Subgroup(self, self._closure(seed), normal=True)

    def _fitting(self) -> "Subgroup":
        if "fitting" in self._cache:
            return self._cache["fitting"]
        cur = np.array([0], dtype=np.int64)
        for p in sorted(factorize(self.order)):
            op = self._class_radical(p, mode="p").as_array()
            cur = np.unique(self.mul[np.ix_(cur, op)])  # join of normals
        sub = Subgroup(self, cur, normal=True)
        self._cache["fitting"] = sub
        return sub

    def iterated_series(self, p: int, bound: int | None = None) -> "IteratedSeries":
        """O_p(G) <= O_{p,p'}(G) <= O_{p,p',p}(G), built through quotients."""
        self._require_bound("iterated_series", bound)
        o1 = self.radicals(p, bound).o_p
        q1 = self.quotient(o1)
        x = q1.image.radicals(p).o_p_prime
        o2 = q1.preimage(x)
        q2 = self.quotient(o2)
        y = q2.image.radicals(p).o_p
        o3 = q2.preimage(y)
        for sub in (o2, o3):
            if not sub.is_normal:
                raise ContractViolation("iterated series member not normal")
        return IteratedSeries(p=p, o_p=o1, o_p_pprime=o2, o_p_pprime_p=o3)

    def chief_series(self, bound: int | None = None) -> list["ChiefFactor"]:
        """A chief series, one minimal normal step of the quotient at a time."""
        self._require_bound("chief_series", bound)
        if "chief_series" in self._cache:
            return self._cache["chief_series"]
        out: list[ChiefFactor] = []
        current = self.trivial_subgroup()
        while current.order < self.order:
            q = self.quotient(current)
            m = q.image.minimal_normal_subgroups()[0]
            above = q.preimage(m)
            out.append(
                ChiefFactor(
                    below=current, above=above, section=m.as_group(), order=m.order
                )
            )
            current = above
        self._cache["chief_series"] = out
        return out

    def is_solvable(self, bound: int | None = None) -> bool:
        if "solvable" not in self._cache:
            self._cache["solvable"] = all(
                f.section.is_abelian for f in self.chief_series(bound)
            )
        return self._cache["solvable"]

    def is_nilpotent(self, bound: int | None = None) -> bool:
        self._require_bound("is_nilpotent", bound)
        return self._fitting().order == self.order

    def is_supersolvable(self, bound: int | None = None) -> bool:
        # p-groups: every chief factor is central of order p.
        if prime_power(self.order) is not None or self.order == 1:
            return True
        return all(
            prime_power(f.order) is not None and prime_power(f.order)[1] == 1
            for f in self.chief_series(bound)
        )


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy class data; classes are ordered by minimal element id."""

    group: Group
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    members: tuple[np.ndarray, ...]
    class_of: np.ndarray
    inverse_class: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)


class Subgroup:
    """A subgroup of a parent group, stored as a sorted element-id tuple."""

    __slots__ = ("parent", "elements", "_cache")

    def __init__(self, parent: Group, elements, *, normal: bool | None = None):
        els = np.unique(np.asarray(elements, dtype=np.int64))
        if els[0] != 0:
            raise ValueError("subgroups contain the identity")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "elements", tuple(int(e) for e in els))
        object.__setattr__(self, "_cache", {})
        if normal is not None:
            self._cache["normal"] = normal

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Subgroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_array(self) -> np.ndarray:
        if "arr" not in self._cache:
            self._cache["arr"] = np.array(self.elements, dtype=np.int64)
        return self._cache["arr"]

    def member_mask(self) -> np.ndarray:
        if "mask" not in self._cache:
            mask = np.zeros(self.parent.order, dtype=bool)
            mask[self.as_array()] = True
            self._cache["mask"] = mask
        return self._cache["mask"]

    def __contains__(self, g: int) -> bool:
        return bool(self.member_mask()[g])

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.label})"

    def short_label(self) -> str:
        return f"N{self.order}"

    @property
    def is_normal(self) -> bool:
        if "normal" not in self._cache:
            G = self.parent
            els = self.as_array()
            conj = G.mul[G.mul[:, els], G.inv[:, None]]
            self._cache["normal"] = bool(self.member_mask()[conj].all())
        return self._cache["normal"]

    def is_subset_of(self, other: "Subgroup") -> bool:
        return bool(other.member_mask()[self.as_array()].all())

    def intersection(self, other: "Subgroup") -> "Subgroup":
        mask = self.member_mask() & other.member_mask()
        return Subgroup(self.parent, np.nonzero(mask)[0])

    def as_group(self) -> Group:
        """Materialize with dense local ids (sorted by parent id)."""
        if "group" not in self._cache:
            els = self.as_array()
            rank = np.full(self.parent.order, -1, dtype=np.int64)
            rank[els] = np.arange(len(els))
            local = rank[self.parent.mul[np.ix_(els, els)]]
            if local.min() < 0:
                raise ValueError("element set is not multiplicatively closed")
            self._cache["group"] = Group(
                local, label=f"{self.parent.label}.sub{self.order}"
            )
        return self._cache["group"]

    def to_parent(self, local_id):
        """Map local (materialized) ids to parent ids; scalar or array."""
        if isinstance(local_id, (int, np.integer)):
            return self.elements[local_id]
        return self.as_array()[np.asarray(local_id, dtype=np.int64)]

    def from_parent(self, parent_id: int) -> int:
        if "rank" not in self._cache:
            rank = {e: i for i, e in enumerate(self.elements)}
            self._cache["rank"] = rank
        return self._cache["rank"][parent_id]


@dataclass(frozen=True)
class QuotientMap:
    """A surjection G -> G/N with kernel N; cosets labelled by minimal id."""

    source: Group
    kernel: Subgroup
    image: Group
    projection: np.ndarray  # length |G|, values are image ids
    coset_reps: np.ndarray  # image id -> minimal source id in the coset

    def __call__(self, g: int) -> int:
        return int(self.projection[g])

    def preimage(self, sub: Subgroup) -> Subgroup:
        """Pull an (often normal) subgroup of the image back to the source."""
        if sub.parent is not self.image:
            raise ValueError("subgroup does not live in the quotient image")
        mask = np.isin(self.projection, sub.as_array())
        return Subgroup(self.source, np.nonzero(mask)[0], normal=None)


@dataclass(frozen=True)
class PRadicals:
    p: int
    o_p: Subgroup
    o_p_prime: Subgroup
    p_residual: Subgroup  # O^{p'}(G)
    fitting: Subgroup


@dataclass(frozen=True)
class IteratedSeries:
    p: int
    o_p: Subgroup
    o_p_pprime: Subgroup
    o_p_pprime_p: Subgroup


@dataclass(frozen=True)
class ChiefFactor:
    below: Subgroup
    above: Subgroup
    section: Group  # isomorphic copy of above/below
    order: int


# -- Frobenius structure -------------------------------------------------------


def is_frobenius_with_kernel(G: Group, N: Subgroup) -> bool:
    """True when G is a Frobenius group with kernel N.

    Criterion: N is a proper nontrivial normal subgroup and the centralizer
    of every nonidentity element of N stays inside N.  Read in the other
    direction this says exactly that no element outside N fixes a nonidentity
    element of N under conjugation.
    """
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if N.order in (1, G.order) or not N.is_normal:
        return False
    mask = N.member_mask()
    for x in N.elements:
        if x == 0:
            continue
        cent = G.mul[:, x] == G.mul[x, :]
        if np.any(cent & ~mask):
            return False
    return True


def frobenius_complement(G: Group, N: Subgroup) -> Subgroup | None:
    """A Frobenius complement to N, or None if G is not Frobenius over N.

    Searches closures of 1, 2, then 3 generators chosen outside N with order
    dividing |G:N|; falls back to full subgroup enumeration (never needed for
    groups with small complements, but keeps the contract total).
    """
    if not is_frobenius_with_kernel(G, N):
        return None
    m = G.order // N.order
    mask = N.member_mask()
    cands = [
        g
        for g in range(1, G.order)
        if not mask[g] and m % int(G.elt_order[g]) == 0
    ]

    def check(els: np.ndarray | None) -> Subgroup | None:
        if els is None or len(els) != m:
            return None
        if np.count_nonzero(mask[els]) != 1:
            return None
        return Subgroup(G, els)

    for g in cands:
        if int(G.elt_order[g]) == m:
            hit = check(G._closure([g]))
            if hit:
                return hit
    for i, g1 in enumerate(cands):
        for g2 in cands[i + 1 :]:
            hit = check(G._closure([g1, g2], cap=m))
            if hit:
                return hit
    for i, g1 in enumerate(cands):
        for j, g2 in enumerate(cands[i + 1 :], start=i + 1):
            base = G._closure([g1, g2], cap=m)
            if base is None:
                continue
            for g3 in cands[j + 1 :]:
                hit = check(G._closure(np.append(base, g3), cap=m))
                if hit:
                    return hit
    for H in all_subgroups(G):
        hit = check(H.as_array())
        if hit:
            return hit
    return None


def all_subgroups(G: Group, max_count: int = 100_000) -> list[Subgroup]:
    """Every subgroup, by closing known subgroups with one extra generator.

    Exponential in bad cases; used only as a documented fallback and in tests
    on small groups.
    """
    found: dict[tuple, np.ndarray] = {}
    queue: list[np.ndarray] = []
    for g in range(G.order):
        els = G._closure([g])
        key = tuple(els.tolist())
        if key not in found:
            found[key] = els
            queue.append(els)
    while queue:
        cur = queue.pop()
        cur_set = set(cur.tolist())
        for g in range(1, G.order):
            if g in cur_set:
                continue
            els = G._closure(np.append(cur, g))
            key = tuple(els.tolist())
            if key not in found:
                if len(found) >= max_count:
                    raise BoundExceeded("all_subgroups", len(found) + 1, max_count)
                found[key] = els
                queue.append(els)
    subs = sorted(found.values(), key=lambda e: (len(e), tuple(e.tolist())))
    return [Subgroup(G, e) for e in subs]


def pprime_elements_fpf(G: Group, N: Subgroup, p: int) -> bool:
    """Do all nontrivial p'-elements act fixed-point-freely on N?

    Element-wise criterion; equivalent to a p'-Hall subgroup acting as a
    Frobenius complement on N when one exists, since a Hall subgroup acts
    freely exactly when each of its nontrivial elements does.
    """
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    els = N.as_array()
    nontrivial = els[els != 0]
    if len(nontrivial) == 0:
        return True
    for g in range(1, G.order):
        if math.gcd(int(G.elt_order[g]), p) != 1:
            continue
        conj = G.mul[G.mul[g, nontrivial], G.inv[g]]
        if np.any(conj == nontrivial):
            return False
    return True
