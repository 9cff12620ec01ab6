"""Group element payloads and exact GF(p) matrix arithmetic.

Conventions, fixed package-wide:

* vectors are rows and matrices act on the right: the image of v under M
  is v*M with all arithmetic mod p;
* permutations compose left factor first: (f*g)(x) = g(f(x)), matching the
  right-action convention;
* canonical integer encodings are little-endian digit strings, e.g. entry k
  of a flat row-major matrix contributes entries[k] * p**k.

Element payloads are small immutable values.  Multiplication lives on the
group objects (see groups.py), since products such as semidirect pairs need
group context to multiply.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidGenerators


@dataclass(frozen=True, slots=True)
class Perm:
    """A permutation of {0, ..., degree-1}, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise InvalidGenerators(f"not a bijection on {n} points: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: tuple[int, ...]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    def cycle_string(self) -> str:
        seen = [False] * self.degree
        parts = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1:
                parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"


@dataclass(frozen=True, slots=True)
class FpMat:
    """A dim x dim matrix over GF(p), entries flat row-major in [0, p)."""

    entries: tuple[int, ...]
    dim: int
    p: int

    def __post_init__(self):
        if len(self.entries) != self.dim * self.dim:
            raise InvalidGenerators(
                f"need {self.dim * self.dim} entries, got {len(self.entries)}")
        if any(not 0 <= e < self.p for e in self.entries):
            raise InvalidGenerators("matrix entries must be reduced mod p")

    @classmethod
    def from_rows(cls, rows, p: int) -> "FpMat":
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise InvalidGenerators("matrix rows must form a square")
        return cls(tuple(int(e) % p for row in rows for e in row), dim, p)

    @classmethod
    def identity(cls, dim: int, p: int) -> "FpMat":
        return cls(identity_flat(dim), dim, p)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        n = self.dim
        return tuple(self.entries[i * n:(i + 1) * n] for i in range(n))

    def row_string(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows()) + "]"

    def is_invertible(self) -> bool:
        try:
            mat_inv_flat(self.entries, self.dim, self.p)
        except ZeroDivisionError:
            return False
        return True


# --- flat row-major matrix arithmetic mod p ---

def identity_flat(n: int) -> tuple[int, ...]:
    return tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))


def mat_mul_flat(a, b, n: int, p: int) -> tuple[int, ...]:
    out = [0] * (n * n)
    for i in range(n):
        ia = i * n
        for k in range(n):
            aik = a[ia + k]
            if aik:
                kb = k * n
                for j in range(n):
                    out[ia + j] += aik * b[kb + j]
    return tuple(x % p for x in out)


def vec_mat_flat(v, m, n: int, p: int) -> tuple[int, ...]:
    """Row vector times matrix: (v*M)_j = sum_k v_k M[k][j]."""
    out = [0] * n
    for k in range(n):
        vk = v[k]
        if vk:
            kn = k * n
            for j in range(n):
                out[j] += vk * m[kn + j]
    return tuple(x % p for x in out)


def mat_inv_flat(m, n: int, p: int) -> tuple[int, ...]:
    """Inverse mod p by Gauss-Jordan; ZeroDivisionError if singular."""
    aug = [list(m[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix mod p")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n + j] for i in range(n) for j in range(n))


def mat_pow_flat(m, e: int, n: int, p: int) -> tuple[int, ...]:
    result = identity_flat(n)
    base = tuple(m)
    while e:
        if e & 1:
            result = mat_mul_flat(result, base, n, p)
        base = mat_mul_flat(base, base, n, p)
        e >>= 1
    return result


# --- canonical integer encodings (little-endian digits) ---

def encode_digits(digits, base: int) -> int:
    code = 0
    for d in reversed(digits):
        code = code * base + d
    return code


def decode_digits(code: int, base: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        code, d = divmod(code, base)
        out.append(d)
    return tuple(out)


def encode_mat(entries, p: int) -> int:
    return encode_digits(entries, p)


def decode_mat(code: int, n: int, p: int) -> tuple[int, ...]:
    return decode_digits(code, p, n * n)


def encode_perm(images, degree: int) -> int:
    return encode_digits(images, degree)


def decode_perm(code: int, degree: int) -> tuple[int, ...]:
    return decode_digits(code, degree, degree)


def encode_vec(v, p: int) -> int:
    return encode_digits(v, p)


def all_vectors(n: int, p: int) -> list[tuple[int, ...]]:
    """All of GF(p)^n in encoding order (code 0, 1, 2, ...)."""
    return [decode_digits(c, p, n) for c in range(p ** n)]
