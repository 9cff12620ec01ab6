"""Pure-Python reference kernels for the hot enumeration loops.

The compiled module ratgk._core._speed implements the same four functions
with identical outputs; which one the package uses is decided at import in
ratgk._core.  Everything here is deterministic:

* closures run breadth-first from the identity, multiplying on the right by
  the generators in the order given;
* class partitions scan elements in enumeration order and label classes by
  first appearance, members sorted by element index.

Elements cross this boundary as canonical integer codes (little-endian
base-p digits of the flat row-major matrix, or base-degree digits of a
permutation's image tuple).
"""

from ..errors import CapExceeded


def _decode(code, base, length):
    out = []
    for _ in range(length):
        code, d = divmod(code, base)
        out.append(d)
    return out


def _encode(digits, base):
    code = 0
    for d in reversed(digits):
        code = code * base + d
    return code


def _mat_mul(a, b, n, p):
    out = [0] * (n * n)
    for i in range(n):
        ia = i * n
        for k in range(n):
            aik = a[ia + k]
            if aik:
                kb = k * n
                for j in range(n):
                    out[ia + j] += aik * b[kb + j]
    for i in range(n * n):
        out[i] %= p
    return out


def _mat_inv(m, n, p):
    aug = [list(m[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [aug[i][n + j] for i in range(n) for j in range(n)]


def mat_closure(gen_codes, dim, p, cap):
    """BFS closure of invertible dim x dim matrices mod p; codes in BFS order."""
    n = dim
    identity = [1 if i % (n + 1) == 0 else 0 for i in range(n * n)]
    id_code = _encode(identity, p)
    gens = [_decode(c, p, n * n) for c in gen_codes]
    order = [id_code]
    known = {id_code: identity}
    qpos = 0
    while qpos < len(order):
        current = known[order[qpos]]
        qpos += 1
        for g in gens:
            prod = _mat_mul(current, g, n, p)
            code = _encode(prod, p)
            if code not in known:
                known[code] = prod
                order.append(code)
                if len(order) > cap:
                    raise CapExceeded(cap, len(order))
    return order


def perm_closure(gen_codes, degree, cap):
    """BFS closure of permutations on {0..degree-1}; codes in BFS order."""
    identity = list(range(degree))
    id_code = _encode(identity, degree)
    gens = [_decode(c, degree, degree) for c in gen_codes]
    order = [id_code]
    known = {id_code: identity}
    qpos = 0
    while qpos < len(order):
        current = known[order[qpos]]
        qpos += 1
        for g in gens:
            prod = [g[current[i]] for i in range(degree)]
            code = _encode(prod, degree)
            if code not in known:
                known[code] = prod
                order.append(code)
                if len(order) > cap:
                    raise CapExceeded(cap, len(order))
    return order


def mat_class_partition(codes, dim, p, gen_positions):
    """Conjugacy class ids for a realized matrix group.

    codes lists the whole group; gen_positions indexes the generators within
    it.  Returns class_id per element; ids numbered by first appearance.
    """
    n = dim
    mats = [_decode(c, p, n * n) for c in codes]
    index = {c: i for i, c in enumerate(codes)}
    gens = [mats[i] for i in gen_positions]
    gen_invs = [_mat_inv(g, n, p) for g in gens]
    class_id = [-1] * len(codes)
    next_id = 0
    for start in range(len(codes)):
        if class_id[start] >= 0:
            continue
        class_id[start] = next_id
        queue = [start]
        qpos = 0
        while qpos < len(queue):
            x = mats[queue[qpos]]
            qpos += 1
            for g, gi in zip(gens, gen_invs):
                y = _mat_mul(_mat_mul(gi, x, n, p), g, n, p)
                j = index[_encode(y, p)]
                if class_id[j] < 0:
                    class_id[j] = next_id
                    queue.append(j)
        next_id += 1
    return class_id


def mat_element_orders(codes, dim, p):
    """Multiplicative order of each matrix in a realized matrix group."""
    n = dim
    identity = [1 if i % (n + 1) == 0 else 0 for i in range(n * n)]
    orders = []
    for c in codes:
        m = _decode(c, p, n * n)
        acc = list(m)
        k = 1
        while acc != identity:
            acc = _mat_mul(acc, m, n, p)
            k += 1
        orders.append(k)
    return orders
