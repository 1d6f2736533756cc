"""
Exact integer matrix arithmetic on tuples.
"""

from __future__ import annotations

from math import comb

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(row_a, row_b)) for row_a, row_b in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    columns = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, column)) for column in columns)
        for row in a
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def mat_pow(a: Matrix, e: int) -> Matrix:
    """Square-and-multiply power; e >= 0."""
    if e == 0:
        return identity(len(a))
    elif e == 1:
        return a
    elif e % 2 == 1:
        return mat_mul(a, mat_pow(a, e - 1))
    else:
        half = mat_pow(a, e // 2)
        return mat_mul(half, half)


def geometric_sum(a: Matrix, r: int) -> tuple[Matrix, Matrix]:
    """
    Return (I + a + ... + a^(r-1), a^r) by binary doubling.

    Uses S(2h) = S(h) + a^h S(h) and S(2h+1) = S(2h) + a^(2h).
    """
    n = len(a)
    total = zeros(n)
    power = identity(n)
    for bit in bin(r)[2:] if r > 0 else "":
        total = mat_add(total, mat_mul(power, total))
        power = mat_mul(power, power)
        if bit == "1":
            total = mat_add(total, power)
            power = mat_mul(power, a)
    return total, power


def jordan_block(n: int, eigenvalue: int) -> Matrix:
    """The n x n upper bidiagonal matrix with `eigenvalue` on the diagonal."""
    return tuple(
        tuple(eigenvalue if i == j else 1 if j == i + 1 else 0 for j in range(n))
        for i in range(n)
    )


def jordan_power(n: int, eigenvalue: int, k: int) -> Matrix:
    """J_n(eigenvalue)^k from the binomial closed form; eigenvalue is +1 or -1."""
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            d = j - i
            if d < 0 or d > k:
                row.append(0)
            else:
                sign = -1 if eigenvalue < 0 and (k - d) % 2 else 1
                row.append(sign * comb(k, d))
        rows.append(tuple(row))
    return tuple(rows)
