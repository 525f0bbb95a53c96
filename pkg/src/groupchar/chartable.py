"""Exact irreducible character tables of small finite groups.

The pipeline is the classical class-algebra method: the class-multiplication
matrices commute and have a common eigenbasis over a prime field F_q chosen
with q ≡ 1 (mod e) and q > 2|G| (e the group exponent), so iterative
eigenspace splitting recovers the central characters mod q; degrees follow
from the orthogonality relation, and each value is lifted to an exact
cyclotomic integer by extracting root-of-unity multiplicities, which are
genuine nonnegative integers below q and therefore unambiguous residues.

Everything is deterministic: fixed prime choice, fixed splitting order
(increasing class size, ties by representative id), canonical row order
(trivial character first, then by degree and lexicographic coefficients).
"""

from __future__ import annotations

import numpy as np

import math

from ._arith import euler_phi, is_prime
from ._modlinalg import (
    charpoly_mod,
    inv_mod,
    nullspace_mod,
    poly_roots_mod,
    rref_mod,
    sqrt_mod,
    element_of_order,
)
from .cyclotomic import Cyclotomic, _reduction_table
from .errors import (
    BoundExceeded,
    ContractViolation,
    NonIntegral,
    NoSuitablePrime,
    SplitFailure,
)
from .groups import Group, Subgroup

TABLE_ORDER_BOUND = 512

_PRIME_SEARCH_CAP = 2_000_000


def dixon_prime(exponent: int, order: int) -> int:
    """Smallest prime q ≡ 1 (mod exponent) with q > 2 * order."""
    e = exponent
    t = (2 * order) // e + 1
    while e * t + 1 <= _PRIME_SEARCH_CAP:
        q = e * t + 1
        if q > 2 * order and is_prime(q):
            return q
        t += 1
    raise NoSuitablePrime(f"no prime q = 1 mod {e} with q > {2 * order} below cap")


class Character:
    """One row of a character table: exact values per conjugacy class."""

    __slots__ = ("table", "index", "degree", "values")

    def __init__(self, table: "CharacterTable", index: int, degree: int, values):
        self.table = table
        self.index = index
        self.degree = degree
        self.values = tuple(values)

    @property
    def parent(self) -> Group:
        return self.table.group

    @property
    def is_linear(self) -> bool:
        return self.degree == 1

    def kernel(self) -> Subgroup:
        """{g : χ(g) = χ(1)}, decided via the trivial-root multiplicities."""
        return self.table._kernel_subgroup(self.index)

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[self.table.classes.class_of[g]]

    def __repr__(self):
        return f"<Character deg={self.degree} of {self.table.group.label}>"


class CharacterTable:
    """All irreducible characters of a group, exactly.

    Public fields: ``group``, ``classes``, ``rows`` (trivial character
    first, then sorted by degree and lexicographic coefficient vectors),
    ``conductor`` (= group exponent), ``prime`` (the working modulus).
    """

    def __init__(self, group, classes, rows_data, conductor, prime, root,
                 coeffs, modq, kernel_mask):
        self.group = group
        self.classes = classes
        self.conductor = conductor
        self.prime = prime
        self.root = root
        self._coeffs = coeffs            # (rows, classes, phi(e)) exact ints
        self._modq = modq                # (rows, classes) values mod prime
        self._kernel_mask = kernel_mask  # (rows, classes) bool: class in kernel
        self._zero_mask = ~coeffs.any(axis=2)
        self.degrees = np.array([d for d, _ in rows_data], dtype=np.int64)
        self.rows = tuple(
            Character(self, i, int(d), vals) for i, (d, vals) in enumerate(rows_data)
        )
        self._kernels: dict[int, Subgroup] = {}

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def _kernel_subgroup(self, index: int) -> Subgroup:
        if index not in self._kernels:
            g = self.group
            cls = self.classes
            member_classes = np.nonzero(self._kernel_mask[index])[0]
            elems = np.sort(np.concatenate([cls.members[k] for k in member_classes]))
            sub = Subgroup(g, elems)
            prod = g.mul[np.ix_(elems, elems)]
            if not np.all(sub.member_mask()[prod]):
                raise ContractViolation("character kernel is not closed")
            if not sub.is_normal:
                raise ContractViolation("character kernel is not normal")
            self._kernels[index] = sub
        return self._kernels[index]

    def __repr__(self):
        return (f"<CharacterTable {self.group.label}: {len(self.rows)} rows, "
                f"conductor {self.conductor}, prime {self.prime}>")


def compute_table(group: Group, bound: int = TABLE_ORDER_BOUND) -> CharacterTable:
    """Exact character table of ``group`` (cached on the group)."""
    cached = group._cache.get("table")
    if cached is not None:
        return cached
    n = group.order
    if n > bound:
        raise BoundExceeded("character table order", n, bound)

    cc = group.conjugacy_classes()
    k = len(cc.reps)
    e = group.exponent
    q = dixon_prime(e, n)
    z = element_of_order(e, q)
    zpow = np.ones(e, dtype=np.int64)
    for i in range(1, e):
        zpow[i] = zpow[i - 1] * z % q

    sizes = np.asarray(cc.sizes, dtype=np.int64)
    inv_sizes = np.array([inv_mod(int(s), q) for s in sizes], dtype=np.int64)
    omegas = _split_central_characters(group, cc, q)

    # Degrees from first orthogonality: d^2 = |G| / sum_k w_k w_{k*} / |C_k|.
    invcls = cc.inverse_class
    t_sums = (omegas * omegas[:, invcls] % q * inv_sizes[None, :] % q).sum(axis=1) % q
    sqrt_cap = math.isqrt(n)
    degrees = np.empty(k, dtype=np.int64)
    for r in range(k):
        ts = int(t_sums[r])
        if ts == 0:
            raise ContractViolation("degenerate degree sum in table recovery")
        dsq = n * inv_mod(ts, q) % q
        roots = sqrt_mod(dsq, q)
        if roots is None:
            raise ContractViolation("degree square has no modular root")
        cands = [c for c in roots if 1 <= c <= sqrt_cap]
        if len(cands) != 1:
            raise ContractViolation("ambiguous degree recovery")
        degrees[r] = cands[0]
    if int((degrees * degrees).sum()) != n:
        raise ContractViolation("degree squares do not sum to group order")
    for d in degrees:
        if n % int(d):
            raise ContractViolation("character degree does not divide group order")

    # Character values mod q: X[r, k] = d_r * omega_{r,k} / |C_k|.
    modq = degrees[:, None] * omegas % q * inv_sizes[None, :] % q

    # Lift every value to an exact cyclotomic integer.
    phi = euler_phi(e)
    red = np.array(_reduction_table(e), dtype=np.int64)
    coeffs = np.zeros((k, k, phi), dtype=np.int64)
    kernel_mask = np.zeros((k, k), dtype=bool)
    mul = group.mul
    for c in range(k):
        rep = int(cc.reps[c])
        o = int(group.elt_order[rep])
        step = e // o
        powers = np.empty(o, dtype=np.int64)
        powers[0] = 0
        for t in range(1, o):
            powers[t] = mul[powers[t - 1], rep]
        pow_classes = cc.class_of[powers]
        jt = np.outer(np.arange(o), np.arange(o))
        w = zpow[(-jt % o) * step]                    # w[j, t] = z_o^{-jt}
        inv_o = inv_mod(o, q)
        mults = modq[:, pow_classes] @ w.T % q * inv_o % q
        if not np.array_equal(mults.sum(axis=1), degrees):
            raise ContractViolation("root multiplicities do not sum to degree")
        kernel_mask[:, c] = mults[:, 0] == degrees
        exps = np.arange(o, dtype=np.int64) * step % e
        coeffs[:, c, :] = mults @ red[exps]

    # Cross-check the lift against the modular table.
    powz = zpow[:phi]
    if not np.array_equal(coeffs @ powz % q, modq):
        raise ContractViolation("lifted values disagree with modular table")

    # Canonical row order: trivial first, then (degree, lex coefficients).
    one = np.zeros(phi, dtype=np.int64)
    one[0] = 1
    trivial_rows = np.nonzero(
        (degrees == 1) & np.all(coeffs == one[None, None, :], axis=(1, 2))
    )[0]
    if trivial_rows.size != 1:
        raise ContractViolation("trivial character not uniquely identified")
    triv = int(trivial_rows[0])
    rest = [r for r in range(k) if r != triv]
    rest.sort(key=lambda r: (int(degrees[r]), tuple(coeffs[r].ravel().tolist())))
    order = [triv] + rest

    degrees = degrees[order]
    coeffs = coeffs[order]
    modq = modq[order]
    kernel_mask = kernel_mask[order]

    rows_data = []
    for r in range(k):
        vals = [Cyclotomic(e, coeffs[r, c]) for c in range(k)]
        rows_data.append((int(degrees[r]), vals))

    table = CharacterTable(group, cc, rows_data, e, q, z, coeffs, modq, kernel_mask)
    group._cache["table"] = table
    return table


def _split_central_characters(group: Group, cc, q: int) -> np.ndarray:
    """Common eigenbasis of the class matrices over F_q, one row per character,
    normalized so the identity-class coordinate is 1."""
    k = len(cc.reps)
    mul, inv = group.mul, group.inv
    reps = cc.reps

    matrices: dict[int, np.ndarray] = {}

    def class_matrix(i: int) -> np.ndarray:
        m = matrices.get(i)
        if m is None:
            members = cc.members[i]
            prod_classes = cc.class_of[mul[np.ix_(inv[members], reps)]]
            m = np.zeros((k, k), dtype=np.int64)
            np.add.at(
                m,
                (prod_classes.ravel(), np.tile(np.arange(k), members.size)),
                1,
            )
            matrices[i] = m
        return m

    full, piv = rref_mod(np.eye(k, dtype=np.int64), q)
    blocks: list[tuple[np.ndarray, list[int]]] = [(full, piv)]
    class_order = sorted(range(1, k), key=lambda i: (int(cc.sizes[i]), int(reps[i])))

    for i in class_order:
        if all(b.shape[0] == 1 for b, _ in blocks):
            break
        mat_t = class_matrix(i).T
        new_blocks: list[tuple[np.ndarray, list[int]]] = []
        for basis, pivots in blocks:
            d = basis.shape[0]
            if d == 1:
                new_blocks.append((basis, pivots))
                continue
            mapped = basis @ mat_t % q
            coords = mapped[:, pivots]              # action matrix (row form)
            if not np.array_equal(coords @ basis % q, mapped):
                raise SplitFailure("class matrix does not preserve the block")
            poly = charpoly_mod(coords.T, q)
            found = 0
            for lam in poly_roots_mod(poly, q):
                shifted = (coords.T - int(lam) * np.eye(d, dtype=np.int64)) % q
                null = nullspace_mod(shifted, q)
                if null.shape[0] == 0:
                    continue
                found += null.shape[0]
                sub_basis, sub_piv = rref_mod(null @ basis % q, q)
                new_blocks.append((sub_basis, sub_piv))
            if found != d:
                raise SplitFailure("eigenspaces do not fill the block")
        blocks = new_blocks

    if any(b.shape[0] != 1 for b, _ in blocks):
        raise SplitFailure("classes exhausted before one-dimensional split")
    omegas = np.zeros((k, k), dtype=np.int64)
    for r, (basis, _) in enumerate(blocks):
        v = basis[0]
        if int(v[0]) == 0:
            raise SplitFailure("eigenvector vanishes on the identity class")
        omegas[r] = v * inv_mod(int(v[0]), q) % q
    return omegas


def inner_product(chi: Character, psi: Character) -> int:
    """⟨χ, ψ⟩ = (1/|G|) Σ_g χ(g) conj(ψ(g)); must be a rational integer."""
    if chi.table.group is not psi.table.group:
        raise ValueError("inner product needs characters of the same group")
    sizes = chi.table.classes.sizes
    total = Cyclotomic.zero(chi.table.conductor)
    for c in range(len(sizes)):
        total = total + int(sizes[c]) * (chi.values[c] * psi.values[c].conjugate())
    n = chi.table.group.order
    if not total.is_integer() or total.as_int() % n:
        raise NonIntegral(f"inner product {total} is not divisible by |G| = {n}")
    return total.as_int() // n


def restrict(chi: Character, sub: Subgroup, table_n: CharacterTable) -> list[int]:
    """Multiplicity vector of χ|_N over the rows of N's table (exact)."""
    if sub.parent is not chi.table.group:
        raise ValueError("subgroup does not belong to the character's group")
    if table_n.group is not sub.as_group():
        raise ValueError("table does not match the materialized subgroup")
    g = chi.table.group
    ccn = table_n.classes
    nsize = sub.order
    # Value of chi at each class of N (via parent class lookup).
    parent_class = g.conjugacy_classes().class_of[sub.to_parent(ccn.reps)]
    mults: list[int] = []
    for theta in table_n.rows:
        total = Cyclotomic.zero(chi.table.conductor)
        for j in range(len(ccn.reps)):
            term = chi.values[parent_class[j]] * theta.values[j].conjugate()
            total = total + int(ccn.sizes[j]) * term
        if not total.is_integer() or total.as_int() % nsize:
            raise NonIntegral(f"restriction multiplicity {total} not integral")
        m = total.as_int() // nsize
        if m < 0:
            raise NonIntegral("negative restriction multiplicity")
        mults.append(m)
    if sum(m * t.degree for m, t in zip(mults, table_n.rows)) != chi.degree:
        raise ContractViolation("restriction degrees do not add up")
    return mults


def verify_table(table: CharacterTable) -> dict:
    """Exact verification of both orthogonality relations and degree facts.

    Raises ContractViolation on any failure; returns a small summary dict.
    """
    group = table.group
    n = group.order
    k = len(table.classes.reps)
    if len(table.rows) != k:
        raise ContractViolation("row count differs from class count")
    degrees = table.degrees
    if int((degrees * degrees).sum()) != n:
        raise ContractViolation("sum of degree squares is not the group order")
    for d in degrees:
        if n % int(d):
            raise ContractViolation("degree does not divide group order")
    if not all(v == 1 for v in (c.as_int() for c in table.rows[0].values)):
        raise ContractViolation("first row is not the trivial character")

    e = table.conductor
    phi = euler_phi(e)
    red = np.array(_reduction_table(e), dtype=np.int64)
    red2 = red[np.arange(2 * phi - 1) % e]
    coeffs = table._coeffs
    conj = coeffs[:, table.classes.inverse_class, :]
    sizes = np.asarray(table.classes.sizes, dtype=np.int64)

    # Row orthogonality: sum_k |C_k| chi_r(g_k) conj(chi_s(g_k)) = |G| delta_rs.
    gram = _weighted_gram(coeffs, conj, sizes, red2, phi, sum_axis=1)
    _check_gram(gram, np.full(k, n, dtype=np.int64), "row orthogonality")

    # Column orthogonality: sum_r chi_r(g_k) conj(chi_r(g_l)) = |C(g_k)| delta_kl.
    gramc = _weighted_gram(
        coeffs.transpose(1, 0, 2),
        conj.transpose(1, 0, 2),
        np.ones(k, dtype=np.int64),
        red2,
        phi,
        sum_axis=1,
    )
    _check_gram(gramc, n // sizes, "column orthogonality")

    return {
        "order": n,
        "classes": k,
        "conductor": e,
        "prime": table.prime,
        "degrees": [int(d) for d in degrees],
    }


def _weighted_gram(a, b, weights, red2, phi, sum_axis):
    """Gram[r, s, :] = sum_k w_k * (a[r,k] ⊛ conj-side b[s,k]) in coeff space."""
    bw = b * weights[None, :, None]
    prod = np.tensordot(a, bw, axes=([sum_axis], [sum_axis]))  # (r, i, s, j)
    r_dim, _, s_dim, _ = prod.shape
    out = np.zeros((r_dim, s_dim, phi), dtype=np.int64)
    for t in range(2 * phi - 1):
        lo = max(0, t - phi + 1)
        hi = min(phi - 1, t)
        anti = np.zeros((r_dim, s_dim), dtype=np.int64)
        for i in range(lo, hi + 1):
            anti += prod[:, i, :, t - i]
        out += anti[:, :, None] * red2[t][None, None, :]
    return out


def _check_gram(gram, diagonal, what: str):
    k = gram.shape[0]
    expected = np.zeros_like(gram)
    expected[np.arange(k), np.arange(k), 0] = diagonal
    if not np.array_equal(gram, expected):
        raise ContractViolation(f"{what} fails exactly")


def restriction_multiplicities(
    table_g: CharacterTable, sub: Subgroup, table_n: CharacterTable
) -> np.ndarray:
    """Multiplicities ⟨χ_r|_N, θ_t⟩ for all rows at once (exact integers).

    Works in F_q of the parent table: multiplicities are nonnegative integers
    bounded by the largest degree (< q), so the residues determine them.
    """
    g = table_g.group
    q = table_g.prime
    e_g = table_g.conductor
    e_n = table_n.conductor
    if e_g % e_n:
        raise ContractViolation("subgroup exponent does not divide group exponent")
    step = e_g // e_n
    phi_n = euler_phi(e_n)
    # zeta_{e_n} -> root^step in F_q.
    base = pow(int(table_g.root), step, q)
    powvec = np.empty(phi_n, dtype=np.int64)
    acc = 1
    for i in range(phi_n):
        powvec[i] = acc
        acc = acc * base % q
    theta_q = table_n._coeffs @ powvec % q                       # (T, Kn)
    theta_conj = theta_q[:, table_n.classes.inverse_class]

    parent_class = g.conjugacy_classes().class_of[sub.to_parent(table_n.classes.reps)]
    n_sizes = np.asarray(table_n.classes.sizes, dtype=np.int64)
    weighted = table_g._modq[:, parent_class] * n_sizes[None, :] % q
    inv_n = inv_mod(sub.order, q)
    mults = weighted @ theta_conj.T % q * inv_n % q              # (R, T)
    max_deg = int(table_g.degrees.max())
    if int(mults.max(initial=0)) > max_deg:
        raise ContractViolation("restriction multiplicity exceeds degree bound")
    if not np.array_equal(mults @ table_n.degrees, table_g.degrees):
        raise ContractViolation("bulk restriction degrees do not add up")
    return mults
