"""Small number-theory helpers: primes, totients, p-parts."""

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    k = 1
    while n % p == 0:
        k *= p
        n //= p
    return k


def euler_phi(n: int) -> int:
    result = n
    for p in prime_factors(n):
        result -= result // p
    return result


def coprime_residues(n: int) -> list[int]:
    """All m in [1, n) with gcd(m, n) = 1; [1] when n = 1."""
    if n == 1:
        return [1]
    return [m for m in range(1, n) if math.gcd(m, n) == 1]


def is_prime_power(n: int, p: int) -> bool:
    """True iff n is a power of p (n = 1 counts)."""
    while n % p == 0:
        n //= p
    return n == 1
