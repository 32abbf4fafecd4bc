"""Ideal equivalence machinery.

Contains the projectivity and invertibility predicates, the pairwise weak
right equivalence test, maximal-order computation for quaternion algebras
over Q, conductors, finite quotient modules with their submodule recursion,
and the enumeration of weak right equivalence classes with a prescribed
right order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import Lattice, Order
from .linalg import (
    hnf,
    identity_matrix,
    mat_frac,
    mat_inverse,
    mat_mul,
    snf,
)


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def is_left_projective(i: Lattice) -> bool:
    """True when qinv(I) * I equals the right order of I."""
    return i.quasi_inverse().mul(i) == i.right_order().lattice


def is_right_projective(i: Lattice) -> bool:
    """True when I * qinv(I) equals the left order of I."""
    return i.mul(i.quasi_inverse()) == i.left_order().lattice


def is_invertible(i: Lattice) -> bool:
    """Two-sided invertibility with compatible products.

    Checks I*I' = O_L(I), I'*I = O_R(I), O_R(I) = O_L(I') and
    O_R(I') = O_L(I) for I' the quasi-inverse.
    """
    inv = i.quasi_inverse()
    ol = i.left_order().lattice
    orr = i.right_order().lattice
    return (i.mul(inv) == ol
            and inv.mul(i) == orr
            and inv.left_order().lattice == orr
            and inv.right_order().lattice == ol)


def is_weakly_right_equivalent(i: Lattice, j: Lattice) -> bool:
    """Pairwise weak right equivalence via the two colon lattices.

    With C1 = (I:J)_L and C2 = (J:I)_L, returns whether C1 is invertible
    with inverse C2 and the two products are compatible.
    """
    c1 = i.colon_left(j)
    c2 = j.colon_left(i)
    ol1 = c1.left_order().lattice
    or1 = c1.right_order().lattice
    proj = c1.mul(c2) == ol1 and c2.mul(c1) == or1
    if not proj:
        return False
    com = (ol1 == c2.right_order().lattice and or1 == c2.left_order().lattice)
    return com


# ---------------------------------------------------------------------------
# Maximal orders (quaternion kind over Q)
# ---------------------------------------------------------------------------

def _enlarge_at_prime(o: Order, p: int) -> Order | None:
    """An order strictly between O and (1/p)O, or None if none exists.

    If O is not p-maximal there is always such an order (take O + p^k O'
    for a maximal O' above O and the largest useful k), so returning None
    for every prime divisor of the reduced discriminant certifies maximality.
    """
    alg = o.algebra
    lat = o.lattice
    basis = lat.basis_elements()
    n = alg.dim
    # Candidate lattices correspond to nonzero subspaces of (1/p)O / O.
    for vecs in _nonzero_subspaces_mod_p(n, p):
        gens = list(lat.basis_matrix())
        for v in vecs:
            gens.append([Fraction(sum(v[t] * basis[t][c] for t in range(n)), p)
                         for c in range(n)])
        cand = Lattice.from_rows(alg, gens)
        if cand == lat:
            continue
        try:
            return Order(cand)
        except ValueError:
            continue
    return None


def _nonzero_subspaces_mod_p(n: int, p: int):
    """All nonzero subspaces of F_p^n, as lists of basis row vectors.

    Enumerated in row-reduced echelon form, deterministically.
    """
    from itertools import combinations, product
    for dim in range(1, n + 1):
        for pivots in combinations(range(n), dim):
            free_positions = []
            for r, pc in enumerate(pivots):
                for c in range(pc + 1, n):
                    if c not in pivots:
                        free_positions.append((r, c))
            for values in product(range(p), repeat=len(free_positions)):
                mat = [[0] * n for _ in range(dim)]
                for r, pc in enumerate(pivots):
                    mat[r][pc] = 1
                for (r, c), val in zip(free_positions, values):
                    mat[r][c] = val
                yield mat


def maximal_order_above(o: Order) -> Order:
    """A maximal order containing O in a quaternion algebra over Q.

    Repeatedly enlarges O inside (1/p)O at primes dividing the reduced
    discriminant; terminates when no prime admits an enlargement, which
    certifies maximality.
    """
    if o.algebra.kind != "quaternion":
        raise ValueError("maximal order search requires a quaternion algebra")
    current = o
    while True:
        d = current.reduced_discriminant
        enlarged = None
        for p in _prime_divisors(d):
            enlarged = _enlarge_at_prime(current, p)
            if enlarged is not None:
                break
        if enlarged is None:
            return current
        current = enlarged


def _prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def conductor(o: Order, o_prime: Order) -> Lattice:
    """The conductor (O : O')_R = {x : O' x ⊆ O}, for O ⊆ O'.

    Asserts the containments required of the quotient construction:
    the conductor lies in O and is a left O'-ideal.
    """
    if not o.lattice.is_sublattice_of(o_prime.lattice):
        raise ValueError("conductor requires O ⊆ O'")
    f = o.lattice.colon_right(o_prime.lattice)
    if not f.is_sublattice_of(o.lattice):
        raise RuntimeError("conductor not contained in the order")
    if not o_prime.lattice.is_sublattice_of(f.left_order().lattice):
        raise RuntimeError("conductor is not left stable under the overorder")
    return f


# ---------------------------------------------------------------------------
# Finite quotient modules
# ---------------------------------------------------------------------------

@dataclass
class FiniteModule:
    """The finite right module G = O'/f with the actions of O and O'.

    The group is presented by invariant factors d_1 | ... | d_m (all > 1);
    elements are integer vectors modulo the d_i.  ``action`` maps each basis
    element of O to an integer matrix acting on the right; ``oprime_action``
    does the same for a basis of O'.  ``lift_matrix`` carries G-coordinates
    to algebra coordinates, for lifting generators back into O'.
    """

    invariants: tuple[int, ...]
    action: list[list[list[int]]]
    oprime_action: list[list[list[int]]]
    lift_matrix: list[list[Fraction]]

    @property
    def size(self) -> int:
        s = 1
        for d in self.invariants:
            s *= d
        return s


def quotient_module(o: Order, o_prime: Order, f: Lattice) -> FiniteModule:
    """Present O'/f with its right O- and O'-actions.

    ``f`` must be a finite-index sublattice of O' stable under right
    multiplication by O and by O'.
    """
    alg = o.algebra
    n = alg.dim
    bp = o_prime.lattice.basis_matrix()
    bp_inv = mat_inverse(bp)
    # f in O'-coordinates; integral because f ⊆ O'.
    rel = mat_mul(f.basis_matrix(), bp_inv)
    rel_int = [[int(x) for x in row] for row in rel]
    if any(Fraction(x) != y for row_i, row_f in zip(rel_int, rel)
           for x, y in zip(row_i, row_f)):
        raise ValueError("conductor is not contained in the overorder")
    s, _, v = snf(rel_int)
    d = [s[i][i] for i in range(n)]
    v_inv = mat_inverse(v)
    keep = [i for i in range(n) if d[i] != 1]
    invariants = tuple(d[i] for i in keep)

    def action_matrices(gens_lattice: Lattice) -> list[list[list[int]]]:
        mats = []
        for w in gens_lattice.basis_elements():
            rw = mat_frac(alg.right_mul_matrix(w))
            a = mat_mul(mat_mul(bp, rw), bp_inv)        # O'-coords action
            ag = mat_mul(mat_mul(v_inv, a), mat_frac(v))  # G-coords action
            mat = [[int(ag[i][j]) for j in keep] for i in keep]
            for r_i, i in enumerate(keep):
                for c_j, j in enumerate(keep):
                    if Fraction(mat[r_i][c_j]) != ag[i][j]:
                        raise RuntimeError("non-integral module action")
            mats.append(mat)
        return mats

    lift = mat_mul([[Fraction(v_inv[i][j]) for j in range(n)] for i in keep], bp)
    return FiniteModule(invariants=invariants,
                        action=action_matrices(o.lattice),
                        oprime_action=action_matrices(o_prime.lattice),
                        lift_matrix=lift)


# Submodules of G are represented as integer lattices L with D ⊆ L ⊆ Z^m,
# D = diag(invariants), kept in HNF for dedup.

def _canon_sublattice(rows: list[list[int]], invariants) -> tuple[tuple[int, ...], ...]:
    m = len(invariants)
    full = rows + [[invariants[i] if j == i else 0 for j in range(m)] for i in range(m)]
    h, _ = hnf(full)
    return tuple(tuple(r) for r in h[:m])


def _module_closure(rows, mats, invariants):
    """Closure of the span of ``rows`` (plus relations) under the action."""
    current = _canon_sublattice([list(r) for r in rows], invariants)
    while True:
        gens = [list(r) for r in current]
        for mat in mats:
            for r in current:
                gens.append([sum(r[i] * mat[i][j] for i in range(len(r)))
                             for j in range(len(r))])
        nxt = _canon_sublattice(gens, invariants)
        if nxt == current:
            return current
        current = nxt


def _sublattice_order(lat: tuple[tuple[int, ...], ...]) -> int:
    """|L / D| is det(D)/det(L); here return |Z^m / L| = det(L)."""
    d = 1
    for i in range(len(lat)):
        d *= lat[i][i]
    return d


def _maximal_submodules(lat, mod: FiniteModule):
    """Maximal proper sub-O-modules of the module presented by ``lat``."""
    m = len(mod.invariants)
    # |lat / D| = prod(invariants) / det(lat)
    size = mod.size // _sublattice_order(lat)
    if size == 1:
        return []
    out = []
    for p in _prime_divisors(size):
        subs = _stable_maximal_subspaces_mod_p(lat, mod, p)
        out.extend(subs)
    # Deduplicate canonically.
    seen = []
    for s in out:
        if s not in seen:
            seen.append(s)
    return seen


def _stable_maximal_subspaces_mod_p(lat, mod: FiniteModule, p: int):
    """Preimages in ``lat`` of maximal O-stable subspaces of lat/(p*lat + D)."""
    m = len(mod.invariants)
    lat_rows = [list(r) for r in lat]
    plat_plus_d = _canon_sublattice(
        [[p * x for x in r] for r in lat_rows], mod.invariants)
    # Coordinates of the quotient V = lat / (p*lat + D): express the relation
    # lattice in lat-coordinates and take SNF.
    lat_inv = mat_inverse(mat_frac(lat_rows))
    rel = mat_mul(mat_frac([list(r) for r in plat_plus_d]), lat_inv)
    rel_int = [[int(x) for x in row] for row in rel]
    s, _, v = snf(rel_int)
    d = [s[i][i] for i in range(m)]
    keep = [i for i in range(m) if d[i] == p]
    if any(d[i] not in (1, p) for i in range(m)):
        raise RuntimeError("quotient by p*L + D is not an F_p vector space")
    if not keep:
        return []
    v_inv = mat_inverse(v)
    dim = len(keep)
    # Induced action of O on V in the keep-coordinates, mod p.
    acts = []
    for a in mod.action:
        big = mat_mul(mat_mul(mat_frac(lat_rows), mat_frac(a)), lat_inv)
        vg = mat_mul(mat_mul(v_inv, big), mat_frac(v))
        acts.append([[int(vg[i][j]) % p for j in keep] for i in keep])

    out = []
    for basis_rows in _proper_subspaces_mod_p(dim, p):
        if not _is_stable_subspace(basis_rows, acts, p, dim):
            continue
        out.append(basis_rows)
    maximal = [w for w in out
               if not any(w is not w2 and _subspace_leq(w, w2, p, dim) and w != w2
                          for w2 in out)]
    result = []
    for w in maximal:
        # Lift the subspace back into lat-coordinates.
        gens = [list(r) for r in plat_plus_d]
        for vec in w:
            full = [0] * m
            for c, i in enumerate(keep):
                full[i] = vec[c]
            # back through v: lat-coords = full * v^{-1}
            lc = [sum(full[i] * int(v_inv[i][j]) for i in range(m)) for j in range(m)]
            gens.append([sum(lc[i] * lat_rows[i][j] for i in range(m))
                         for j in range(m)])
        result.append(_canon_sublattice(gens, mod.invariants))
    return [r for r in result if r != lat]


def _proper_subspaces_mod_p(dim: int, p: int):
    """All proper subspaces of F_p^dim, including zero, in RREF."""
    from itertools import combinations, product
    yield []
    for d in range(1, dim):
        for pivots in combinations(range(dim), d):
            free = [(r, c) for r, pc in enumerate(pivots)
                    for c in range(pc + 1, dim) if c not in pivots]
            for values in product(range(p), repeat=len(free)):
                mat = [[0] * dim for _ in range(d)]
                for r, pc in enumerate(pivots):
                    mat[r][pc] = 1
                for (r, c), val in zip(free, values):
                    mat[r][c] = val
                yield [row[:] for row in mat]


def _rref_mod_p(rows, p, dim):
    mat = [[x % p for x in row] for row in rows]
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p != 0:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        r += 1
    return [row for row in mat[:r]]


def _is_stable_subspace(basis_rows, acts, p, dim) -> bool:
    if not basis_rows:
        return True
    ref = _rref_mod_p(basis_rows, p, dim)
    for a in acts:
        for row in basis_rows:
            img = [sum(row[i] * a[i][j] for i in range(dim)) % p for j in range(dim)]
            if not _in_span_mod_p(img, ref, p, dim):
                return False
    return True


def _in_span_mod_p(vec, ref, p, dim) -> bool:
    v = [x % p for x in vec]
    for row in ref:
        c = next((i for i in range(dim) if row[i] != 0), None)
        if c is not None and v[c] != 0:
            f = v[c]
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return all(x == 0 for x in v)


def _subspace_leq(w1, w2, p, dim) -> bool:
    ref2 = _rref_mod_p(w2, p, dim) if w2 else []
    return all(_in_span_mod_p(row, ref2, p, dim) for row in w1)


def saturated_submodules(mod: FiniteModule):
    """All sub-O-modules H of G with H * O' = G.

    Recursion over maximal submodules, pruning branches whose closure under
    the O'-action is already proper (their submodules can never saturate).
    Results are canonical HNF sublattice presentations, sorted.
    """
    m = len(mod.invariants)
    if m == 0:
        return [tuple()]
    full = _canon_sublattice(identity_matrix(m), mod.invariants)
    results = []
    seen = set()
    stack = [full]
    while stack:
        lat = stack.pop()
        if lat in seen:
            continue
        seen.add(lat)
        closure = _module_closure(lat, mod.oprime_action, mod.invariants)
        if closure != full:
            continue  # no submodule of lat can saturate either
        results.append(lat)
        stack.extend(_maximal_submodules(lat, mod))
    results.sort()
    return results


def submodule_to_ideal(lat, mod: FiniteModule, o: Order, f: Lattice) -> Lattice:
    """The right O-ideal generated by lifts of the submodule and f."""
    alg = o.algebra
    m = len(mod.invariants)
    gens = list(f.basis_matrix())
    obasis = o.lattice.basis_elements()
    for row in lat:
        lifted = [sum(Fraction(row[i]) * mod.lift_matrix[i][j] for i in range(m))
                  for j in range(alg.dim)]
        el = alg.element(lifted)
        for w in obasis:
            gens.append(list(alg.mul(el, w)))
    return Lattice.from_rows(alg, gens)


# ---------------------------------------------------------------------------
# Weak right equivalence classes
# ---------------------------------------------------------------------------

@dataclass
class WeakClassSet:
    """Representatives of the weak right equivalence classes of an order."""

    order: Order
    overorder: Order
    conductor: Lattice
    representatives: list[Lattice]

    def __len__(self) -> int:
        return len(self.representatives)


def weak_right_equivalence_classes(o: Order, o_prime: Order | None = None,
                                   budget: int | None = None) -> WeakClassSet:
    """Enumerate weak right equivalence classes with right order O.

    Defaults to a maximal overorder O'.  If a custom overorder is supplied
    it must pass the weak-equivalence gate for dual(O) * O', which is checked.
    ``budget`` caps the size of the quotient module O'/conductor.
    """
    alg = o.algebra
    if alg.kind != "quaternion" and o_prime is None:
        raise ValueError("automatic overorder choice requires a quaternion algebra")
    if o_prime is None:
        o_prime = maximal_order_above(o)
    gate = o.lattice.trace_dual().mul(o_prime.lattice)
    if not is_weakly_right_equivalent(gate, o_prime.lattice):
        raise ValueError("overorder fails the dual-extension equivalence gate")
    f = conductor(o, o_prime)
    mod = quotient_module(o, o_prime, f)
    if budget is not None and mod.size > budget:
        from .errors import ResourceBudgetExceededError
        raise ResourceBudgetExceededError(
            f"quotient module of size {mod.size} exceeds budget {budget}")
    reps: list[Lattice] = []
    for sub in saturated_submodules(mod):
        ideal = submodule_to_ideal(sub, mod, o, f)
        if ideal.right_order().lattice != o.lattice:
            continue
        if any(is_weakly_right_equivalent(ideal, j) for j in reps):
            continue
        reps.append(ideal)
    reps.sort(key=lambda l: l.sort_key())
    return WeakClassSet(order=o, overorder=o_prime, conductor=f, representatives=reps)
