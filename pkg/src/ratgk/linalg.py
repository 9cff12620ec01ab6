"""Linear algebra over GF(p) and group actions on GF(p)^n.

Vectors are rows acting on the right (v -> v*M).  A ModuleAction couples a
realized group with a matrix representation; on top of it live orbits,
stabilizers, induced modules, module simplicity, Brauer-character
rationality and the eigenvector property (the p = 5 scalar-2 form).
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence, TYPE_CHECKING

from .elements import (FpMat, all_vectors, decode_digits, encode_vec,
                       identity_flat, mat_inv_flat, mat_mul_flat,
                       mat_pow_flat, vec_mat_flat)
from .errors import InvalidAction, RatgkError
from .numth import coprime_residues

if TYPE_CHECKING:
    from .groups import FiniteGroup, Subgroup


# --- polynomials over GF(p): coefficient tuples, ascending degree ---

def poly_mul(a, b, p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(c % p for c in out)


def poly_string(coeffs, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" + (f"^{k}" if k > 1 else ""))
    return " + ".join(terms) or "0"


def charpoly(M: FpMat) -> tuple[int, ...]:
    """Monic characteristic polynomial of M, coefficients ascending.

    Faddeev-LeVerrier when the divisions 1..n are units mod p (always true
    here with p = 5, n <= 4); otherwise direct expansion of det(xI - M)
    over GF(p)[x].
    """
    n, p = M.dim, M.p
    if n < p:
        return _charpoly_leverrier(M.entries, n, p)
    return _charpoly_expand(M.entries, n, p)


def _charpoly_leverrier(m, n: int, p: int):
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    acc = identity_flat(n)
    for k in range(1, n + 1):
        acc = mat_mul_flat(acc, m, n, p)
        trace = sum(acc[i * (n + 1)] for i in range(n)) % p
        c = (-trace * pow(k, -1, p)) % p
        coeffs[n - k] = c
        if k < n:
            acc = tuple((x + c * y) % p for x, y in zip(acc, identity_flat(n)))
    return tuple(coeffs)


def _charpoly_expand(m, n: int, p: int):
    # det(xI - M) by cofactor expansion over the polynomial ring
    def det(rows, cols):
        if len(rows) == 1:
            i, j = rows[0], cols[0]
            if i == j:
                return ((-m[i * n + j]) % p, 1)
            return ((-m[i * n + j]) % p,)
        total = (0,)
        i = rows[0]
        for idx, j in enumerate(cols):
            entry = ((-m[i * n + j]) % p,) + ((1,) if i == j else ())
            minor = det(rows[1:], cols[:idx] + cols[idx + 1:])
            term = poly_mul(entry, minor, p)
            if idx % 2:
                term = tuple((-c) % p for c in term)
            total = tuple((a + b) % p for a, b in
                          itertools.zip_longest(total, term, fillvalue=0))
        return total
    out = det(tuple(range(n)), tuple(range(n)))
    return out + (0,) * (n + 1 - len(out))


# --- GF(p) row-space helpers ---

def rref(rows: Sequence[Sequence[int]], n: int, p: int) -> list[list[int]]:
    """Reduced row echelon form; returns the nonzero rows."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]]


def rank(rows, n: int, p: int) -> int:
    return len(rref(rows, n, p))


def nullspace(m, n: int, p: int) -> list[tuple[int, ...]]:
    """Basis of {v : v*M = 0} for a flat n x n matrix (row vectors)."""
    # v*M = 0 means M^T v^T = 0; row-reduce M^T and read free variables
    mt = [[m[j * n + i] for j in range(n)] for i in range(n)]
    red = rref(mt, n, p)
    pivots = []
    for row in red:
        pivots.append(next(c for c in range(n) if row[c]))
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, piv in zip(red, pivots):
            v[piv] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


def span_vectors(basis: Sequence[Sequence[int]], n: int, p: int) -> list[tuple[int, ...]]:
    """All vectors in the span of the basis rows (basis assumed independent)."""
    out = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                for j in range(n):
                    v[j] = (v[j] + c * row[j]) % p
        out.append(tuple(v))
    return out


# --- module actions ---

class ModuleAction:
    """A realized group acting on GF(p)^n by right matrix multiplication.

    rep maps every element payload to a flat matrix; the constructor checks
    rep(1) = I, invertibility, and the homomorphism law on all generator
    pairs (a full element-pair check is quadratic and lives in the tests).
    """

    def __init__(self, group: "FiniteGroup", dim: int, p: int,
                 rep: "dict | Callable", check: bool = True):
        self.group = group
        self.dim = dim
        self.p = p
        if callable(rep) and not isinstance(rep, dict):
            rep = {g: rep(g) for g in group.elements}
        self._rep = {g: tuple(int(x) % p for x in m) for g, m in rep.items()}
        if check:
            self._validate()

    def _validate(self):
        G = self.group
        n, p = self.dim, self.p
        if set(self._rep) != set(G.elements):
            raise InvalidAction("representation must cover exactly the group elements")
        if self._rep[G.identity] != identity_flat(n):
            raise InvalidAction("identity must map to the identity matrix")
        for m in self._rep.values():
            if len(m) != n * n:
                raise InvalidAction("representation matrix has wrong shape")
            try:
                mat_inv_flat(m, n, p)
            except ZeroDivisionError:
                raise InvalidAction("representation matrix is singular") from None
        for a in G.gens:
            for b in G.gens:
                lhs = self._rep[G.mul(a, b)]
                rhs = mat_mul_flat(self._rep[a], self._rep[b], n, p)
                if lhs != rhs:
                    raise InvalidAction("rep(ab) != rep(a) rep(b) on generators")

    @classmethod
    def natural(cls, matrix_group) -> "ModuleAction":
        """A matrix group (or a matrix-subgroup view) acting on its own row space."""
        ident = matrix_group.identity
        if not isinstance(ident, FpMat):
            raise InvalidAction("natural actions need matrix elements")
        return cls(matrix_group, ident.dim, ident.p,
                   {g: g.entries for g in matrix_group.elements}, check=False)

    @classmethod
    def from_generator_images(cls, group: "FiniteGroup", dim: int, p: int,
                              images: Sequence) -> "ModuleAction":
        """Extend images of the generators to the whole group.

        Requires the group's enumeration to be a closure order (every
        non-identity element is an earlier element times a generator), which
        holds for generated permutation/matrix groups.
        """
        if len(images) != len(group.gens):
            raise InvalidAction("need exactly one matrix per generator")
        flat = []
        for img in images:
            if isinstance(img, FpMat):
                flat.append(img.entries)
            else:
                flat.append(tuple(int(x) % p for row in img for x in row))
        gen_inv = [group.inv(g) for g in group.gens]
        rep = {group.identity: identity_flat(dim)}
        for idx, g in enumerate(group.elements):
            if g in rep:
                continue
            for gi, (gen, ginv) in enumerate(zip(group.gens, gen_inv)):
                prev = group.mul(g, ginv)
                if prev in rep and group.index(prev) < idx:
                    rep[g] = mat_mul_flat(rep[prev], flat[gi], dim, p)
                    break
            else:
                raise InvalidAction("group enumeration is not a closure order; "
                                    "cannot extend generator images")
        return cls(group, dim, p, rep)

    def matrix_of(self, g) -> tuple[int, ...]:
        return self._rep[g]

    def fpmat_of(self, g) -> FpMat:
        return FpMat(self._rep[g], self.dim, self.p)

    def apply(self, v, g) -> tuple[int, ...]:
        return vec_mat_flat(v, self._rep[g], self.dim, self.p)

    def kernel(self) -> "Subgroup":
        ident = identity_flat(self.dim)
        members = [g for g in self.group.elements if self._rep[g] == ident]
        return self.group.subgroup_of_elements(members)

    def conjugated_by(self, basis_change) -> "ModuleAction":
        """The same action in a new basis: rep'(g) = P^-1 rep(g) P."""
        n, p = self.dim, self.p
        P = basis_change.entries if isinstance(basis_change, FpMat) else tuple(basis_change)
        Pinv = mat_inv_flat(P, n, p)
        rep = {g: mat_mul_flat(Pinv, mat_mul_flat(m, P, n, p), n, p)
               for g, m in self._rep.items()}
        return ModuleAction(self.group, n, p, rep, check=False)

    def restricted_to(self, H: "Subgroup") -> "ModuleAction":
        view = H.to_group()
        return ModuleAction(view, self.dim, self.p,
                            {g: self._rep[g] for g in view.elements}, check=False)

    # --- orbits ---

    def orbit(self, v) -> list[tuple[int, ...]]:
        """Orbit of v under the whole group, in BFS discovery order."""
        v = tuple(int(x) % self.p for x in v)
        if len(v) != self.dim:
            raise RatgkError(f"vector has length {len(v)}, action is {self.dim}-dimensional")
        gens = self.group.gens or (self.group.identity,)
        out = [v]
        seen = {v}
        qpos = 0
        while qpos < len(out):
            w = out[qpos]
            qpos += 1
            for g in gens:
                u = self.apply(w, g)
                if u not in seen:
                    seen.add(u)
                    out.append(u)
        return out

    def stabilizer(self, v) -> "Subgroup":
        v = tuple(int(x) % self.p for x in v)
        members = [g for g in self.group.elements if self.apply(v, g) == v]
        return self.group.subgroup_of_elements(members)

    def orbit_partition(self) -> list[list[tuple[int, ...]]]:
        """Orbits of all p^n vectors, ordered by least unseen vector code."""
        seen = set()
        orbits = []
        for v in all_vectors(self.dim, self.p):
            if v in seen:
                continue
            orb = self.orbit(v)
            seen.update(orb)
            orbits.append(orb)
        return orbits


def induce_module(inner: ModuleAction, S: "FiniteGroup", H: "Subgroup") -> ModuleAction:
    """The induced action of S on the direct sum of [S:H] copies of the
    inner H-module, via the block-monomial construction over the right
    transversal (identity representative first, then least encodings).

    Block t of the image of a vector under g receives block r through
    rep_inner(h), where t·g = h·r with r in the transversal.
    """
    if H.parent is not S:
        raise RatgkError("H must be a subgroup of S")
    m, p = inner.dim, inner.p
    reps, coset_of = S.right_transversal(H)
    k = len(reps)
    dim = k * m
    rep = {}
    for g in S.elements:
        big = [0] * (dim * dim)
        for t_idx, t in enumerate(reps):
            tg = S.mul(t, g)
            r_idx = coset_of[tg]
            h = S.mul(tg, S.inv(reps[r_idx]))
            block = inner.matrix_of(h)
            for i in range(m):
                for j in range(m):
                    big[(t_idx * m + i) * dim + (r_idx * m + j)] = block[i * m + j]
        rep[g] = tuple(big)
    return ModuleAction(S, dim, p, rep, check=False)


def is_simple_module(act: ModuleAction) -> bool:
    """True iff the orbit of every nonzero vector spans the whole space.

    Orbits partition the nonzero vectors and the span is constant on each
    orbit, so one check per orbit suffices.
    """
    n, p = act.dim, act.p
    for orb in act.orbit_partition():
        if orb[0] == (0,) * n:
            continue
        if rank(orb, n, p) < n:
            return False
    return True


def brauer_character_is_rational(act: ModuleAction) -> bool:
    """True iff char(rep(g)) = char(rep(g)^m) for every g and every m
    coprime to the order of g.

    The Brauer character value at g is the sum of the Teichmueller lifts of
    the eigenvalues of rep(g); rationality at g says the value is fixed by
    every Galois twist zeta -> zeta^m, i.e. the eigenvalue multiset of
    rep(g)^m matches that of rep(g) -- equality of characteristic
    polynomials, checked exactly mod p.
    """
    G = act.group
    n, p = act.dim, act.p
    for g in G.elements:
        o = G.element_order(g)
        if o % p == 0:
            raise RatgkError(f"element order {o} divisible by p={p}; "
                             "Brauer characters need p'-elements")
        m = act.matrix_of(g)
        base = charpoly(FpMat(m, n, p))
        power = m
        for e in range(2, o):
            power = mat_mul_flat(power, m, n, p)
            if _coprime(e, o) and charpoly(FpMat(power, n, p)) != base:
                return False
    return True


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return a == 1


def eigenvector_property(act: ModuleAction):
    """Whether every vector v has some g with v*rep(g) = 2v (p = 5 only).

    Returns (holds, witnesses) with one witness per satisfied vector, the
    first in enumeration order; when the property fails, witnesses still
    carry the satisfied part and the failing vectors map to None.
    """
    n, p = act.dim, act.p
    if p != 5:
        raise RatgkError("the scalar-2 eigenvector test is specific to GF(5)")
    zero = (0,) * n
    witnesses = {zero: act.group.identity}
    for g in act.group.elements:
        m = act.matrix_of(g)
        shifted = tuple((x - 2 if i % (n + 1) == 0 else x) % p
                        for i, x in enumerate(m))
        basis = nullspace(shifted, n, p)
        if not basis:
            continue
        for v in span_vectors(basis, n, p):
            witnesses.setdefault(v, g)
    holds = len(witnesses) == p ** n
    if not holds:
        for v in all_vectors(n, p):
            witnesses.setdefault(v, None)
    return holds, witnesses
