# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ratgk._core.pure."""

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libc.stdint cimport int64_t

from ratgk.errors import CapExceeded


cdef inline void _decode(int64_t code, int base, int length, int* out) noexcept:
    cdef int i
    for i in range(length):
        out[i] = <int>(code % base)
        code //= base


cdef inline int64_t _encode(const int* digits, int base, int length) noexcept:
    cdef int64_t code = 0
    cdef int i
    for i in range(length - 1, -1, -1):
        code = code * base + digits[i]
    return code


cdef inline void _mat_mul(const int* a, const int* b, int n, int p, int* out) noexcept:
    cdef int i, j, k, aik, acc
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                aik = a[i * n + k]
                if aik:
                    acc += aik * b[k * n + j]
            out[i * n + j] = acc % p


cdef int _inv_mod(int a, int p) noexcept:
    cdef int x
    a %= p
    for x in range(1, p):
        if (a * x) % p == 1:
            return x
    return 0


cdef int _mat_inv(const int* m, int n, int p, int* out) except -1:
    """Gauss-Jordan inverse mod p; raises on singular input."""
    cdef vector[int] aug
    aug.resize(n * 2 * n)
    cdef int i, j, col, piv, f, w = 2 * n
    for i in range(n):
        for j in range(n):
            aug[i * w + j] = m[i * n + j]
            # note: conditional expressions assigned straight into vector
            # elements miscompile under Cython 3.2, hence the branches
            if i == j:
                aug[i * w + n + j] = 1
            else:
                aug[i * w + n + j] = 0
    for col in range(n):
        piv = -1
        for i in range(col, n):
            if aug[i * w + col] % p:
                piv = i
                break
        if piv < 0:
            raise ZeroDivisionError("singular matrix mod p")
        if piv != col:
            for j in range(w):
                aug[col * w + j], aug[piv * w + j] = aug[piv * w + j], aug[col * w + j]
        f = _inv_mod(aug[col * w + col], p)
        for j in range(w):
            aug[col * w + j] = (aug[col * w + j] * f) % p
        for i in range(n):
            if i != col and aug[i * w + col] % p:
                f = aug[i * w + col]
                for j in range(w):
                    aug[i * w + j] = (aug[i * w + j] - f * aug[col * w + j]) % p
                    if aug[i * w + j] < 0:
                        aug[i * w + j] += p
    for i in range(n):
        for j in range(n):
            out[i * n + j] = aug[i * w + n + j]
    return 0


def mat_closure(gen_codes, int dim, int p, int cap):
    """BFS closure of invertible dim x dim matrices mod p; codes in BFS order."""
    cdef int n = dim, sz = dim * dim
    cdef int ngens = len(gen_codes)
    cdef vector[int] gens
    gens.resize(ngens * sz)
    cdef int gi, i
    cdef int64_t code
    for gi in range(ngens):
        code = gen_codes[gi]
        _decode(code, p, sz, &gens[gi * sz])

    cdef vector[int] store
    cdef vector[int64_t] order
    cdef unordered_map[int64_t, int] seen
    cdef vector[int] prod
    prod.resize(sz)

    store.resize(sz)
    for i in range(sz):
        if i % (n + 1) == 0:
            store[i] = 1
        else:
            store[i] = 0
    cdef int64_t id_code = _encode(&store[0], p, sz)
    order.push_back(id_code)
    seen[id_code] = 0

    cdef size_t qpos = 0
    cdef int count = 1
    while qpos < order.size():
        for gi in range(ngens):
            _mat_mul(&store[qpos * sz], &gens[gi * sz], n, p, &prod[0])
            code = _encode(&prod[0], p, sz)
            if seen.find(code) == seen.end():
                seen[code] = count
                count += 1
                if count > cap:
                    raise CapExceeded(cap, count)
                order.push_back(code)
                for i in range(sz):
                    store.push_back(prod[i])
        qpos += 1
    return [order[i] for i in range(<int>order.size())]


def perm_closure(gen_codes, int degree, int cap):
    """BFS closure of permutations on {0..degree-1}; codes in BFS order."""
    cdef int ngens = len(gen_codes)
    cdef vector[int] gens
    gens.resize(ngens * degree)
    cdef int gi, i
    cdef int64_t code
    for gi in range(ngens):
        code = gen_codes[gi]
        _decode(code, degree, degree, &gens[gi * degree])

    cdef vector[int] store
    cdef vector[int64_t] order
    cdef unordered_map[int64_t, int] seen
    cdef vector[int] prod
    prod.resize(degree)

    store.resize(degree)
    for i in range(degree):
        store[i] = i
    cdef int64_t id_code = _encode(&store[0], degree, degree)
    order.push_back(id_code)
    seen[id_code] = 0

    cdef size_t qpos = 0
    cdef int count = 1
    while qpos < order.size():
        for gi in range(ngens):
            for i in range(degree):
                prod[i] = gens[gi * degree + store[qpos * degree + i]]
            code = _encode(&prod[0], degree, degree)
            if seen.find(code) == seen.end():
                seen[code] = count
                count += 1
                if count > cap:
                    raise CapExceeded(cap, count)
                order.push_back(code)
                for i in range(degree):
                    store.push_back(prod[i])
        qpos += 1
    return [order[i] for i in range(<int>order.size())]


def mat_class_partition(codes, int dim, int p, gen_positions):
    """Conjugacy class ids (numbered by first appearance in element order)."""
    cdef int n = dim, sz = dim * dim
    cdef int nelem = len(codes)
    cdef int ngens = len(gen_positions)
    cdef vector[int] mats
    mats.resize(nelem * sz)
    cdef unordered_map[int64_t, int] index
    cdef int i, gi
    cdef int64_t code
    for i in range(nelem):
        code = codes[i]
        _decode(code, p, sz, &mats[i * sz])
        index[code] = i

    cdef vector[int] gmats, ginvs
    gmats.resize(ngens * sz)
    ginvs.resize(ngens * sz)
    cdef int pos
    for gi in range(ngens):
        pos = gen_positions[gi]
        for i in range(sz):
            gmats[gi * sz + i] = mats[pos * sz + i]
        _mat_inv(&gmats[gi * sz], n, p, &ginvs[gi * sz])

    cdef vector[int] class_id
    class_id.resize(nelem)
    for i in range(nelem):
        class_id[i] = -1
    cdef vector[int] queue
    cdef vector[int] tmp1, tmp2
    tmp1.resize(sz)
    tmp2.resize(sz)
    cdef int next_id = 0, start, x, j
    cdef size_t qpos
    for start in range(nelem):
        if class_id[start] >= 0:
            continue
        class_id[start] = next_id
        queue.clear()
        queue.push_back(start)
        qpos = 0
        while qpos < queue.size():
            x = queue[qpos]
            qpos += 1
            for gi in range(ngens):
                _mat_mul(&ginvs[gi * sz], &mats[x * sz], n, p, &tmp1[0])
                _mat_mul(&tmp1[0], &gmats[gi * sz], n, p, &tmp2[0])
                code = _encode(&tmp2[0], p, sz)
                j = index[code]
                if class_id[j] < 0:
                    class_id[j] = next_id
                    queue.push_back(j)
        next_id += 1
    return [class_id[i] for i in range(nelem)]


def mat_element_orders(codes, int dim, int p):
    """Multiplicative order of each matrix in a realized matrix group."""
    cdef int n = dim, sz = dim * dim
    cdef int nelem = len(codes)
    cdef vector[int] m, acc, tmp, ident
    m.resize(sz)
    acc.resize(sz)
    tmp.resize(sz)
    ident.resize(sz)
    cdef int i, j, k, is_id
    for j in range(sz):
        if j % (n + 1) == 0:
            ident[j] = 1
        else:
            ident[j] = 0
    cdef int64_t code
    out = []
    for i in range(nelem):
        code = codes[i]
        _decode(code, p, sz, &m[0])
        for j in range(sz):
            acc[j] = m[j]
        k = 1
        while True:
            is_id = 1
            for j in range(sz):
                if acc[j] != ident[j]:
                    is_id = 0
                    break
            if is_id:
                break
            _mat_mul(&acc[0], &m[0], n, p, &tmp[0])
            for j in range(sz):
                acc[j] = tmp[j]
            k += 1
        out.append(k)
    return out
