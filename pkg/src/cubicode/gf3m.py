"""Exact arithmetic in F_3 and its degree-m extensions F_{3^m}.

Field elements are encoded as integers in [0, 3^m): the base-3 digits of
the code are the coefficients of the element in the polynomial basis,
constant term in the least significant digit.  Every degree uses a fixed
modulus, the first monic irreducible polynomial of that degree in the
same digit encoding, so element codes, orderings and exports are
reproducible across runs.

Multiplication, inversion and the quadratic character run over
discrete-log tables for a fixed primitive element.  Supported degrees
are 1..8 (fields up to 6561 elements); everything is exact integer
arithmetic.
"""

from __future__ import annotations

import functools

import numpy as np

MAX_DEGREE = 8


# ---------------------------------------------------------------------------
# polynomial helpers (dense coefficient lists over F_3, constant term first)


def _digits(value: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        out.append(value % 3)
        value //= 3
    return out


def _poly_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % 3
    return out


def _poly_rem(f, g):
    """Remainder of f modulo the monic polynomial g."""
    r = list(f)
    dg = len(g) - 1
    for top in range(len(r) - 1, dg - 1, -1):
        c = r[top]
        if c:
            for j in range(dg + 1):
                r[top - dg + j] = (r[top - dg + j] - c * g[j]) % 3
    out = r[:dg]
    out += [0] * (dg - len(out))
    return out


def _has_root(f) -> bool:
    return any(sum(c * x**i for i, c in enumerate(f)) % 3 == 0 for x in range(3))


def _is_irreducible(f) -> bool:
    """Monic f over F_3: root test, then trial division up to half the degree."""
    deg = len(f) - 1
    if deg == 1:
        return True
    if _has_root(f):
        return False
    for d in range(2, deg // 2 + 1):
        for tail in range(3**d):
            g = _digits(tail, d) + [1]
            if not any(_poly_rem(f, g)):
                return False
    return True


def smallest_irreducible(m: int) -> tuple[int, ...]:
    """First monic irreducible of degree m in the digit encoding order."""
    for tail in range(3**m):
        f = _digits(tail, m) + [1]
        if _is_irreducible(f):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {m}")  # unreachable


def _prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


# ---------------------------------------------------------------------------


class GF3m:
    """The finite field F_{3^m} on integer-coded elements.

    Attributes:
        m: extension degree.
        q: field size 3^m.
        modulus: modulus coefficients, constant term first, monic degree m.
        generator: the fixed primitive element behind the log tables.
    """

    def __init__(self, m: int) -> None:
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        self.m = m
        self.q = 3**m
        self.modulus = smallest_irreducible(m)
        self._exp, self._log = self._build_log_tables()
        self._tables: dict[str, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"GF3m(m={self.m})"

    # -- encoding ------------------------------------------------------------

    def _check(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element code of F_(3^{self.m})")

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Polynomial-basis coefficients of x, constant term first."""
        self._check(x)
        return tuple(_digits(x, self.m))

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.m or any(c not in (0, 1, 2) for c in coeffs):
            raise ValueError(f"need {self.m} coefficients in {{0, 1, 2}}")
        return sum(c * 3**i for i, c in enumerate(coeffs))

    def elements(self) -> range:
        """All elements in canonical order (0, 1, 2, x, x+1, ...)."""
        return range(self.q)

    # -- raw polynomial arithmetic (used to bootstrap the log tables) --------

    def _mul_raw(self, x: int, y: int) -> int:
        f = _poly_mul(_digits(x, self.m), _digits(y, self.m))
        r = _poly_rem(f, list(self.modulus))
        return sum(c * 3**i for i, c in enumerate(r))

    def _pow_raw(self, x: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_raw(out, x)
            x = self._mul_raw(x, x)
            e >>= 1
        return out

    def _build_log_tables(self):
        n = self.q - 1
        primitive = None
        for g in range(2, self.q):
            if all(self._pow_raw(g, n // p) != 1 for p in _prime_factors(n)):
                primitive = g
                break
        if primitive is None:
            raise RuntimeError("no primitive element found")  # unreachable
        exp = [1] * n
        log = [-1] * self.q
        val = 1
        for i in range(n):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, primitive)
        self.generator = primitive
        return exp, log

    # -- arithmetic -----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        z, shift = 0, 1
        for _ in range(self.m):
            z += ((x % 3 + y % 3) % 3) * shift
            x //= 3
            y //= 3
            shift *= 3
        return z

    def neg(self, x: int) -> int:
        self._check(x)
        z, shift = 0, 1
        for _ in range(self.m):
            z += (-(x % 3) % 3) * shift
            x //= 3
            shift *= 3
        return z

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0 if e else 1
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def frobenius(self, x: int) -> int:
        return self.pow(x, 3)

    def trace(self, x: int) -> int:
        """Absolute trace to F_3: x + x^3 + ... + x^(3^(m-1)).  Returns 0, 1 or 2."""
        acc, t = 0, x
        for _ in range(self.m):
            acc = self.add(acc, t)
            t = self.frobenius(t)
        return acc

    def quadratic_character(self, x: int) -> int:
        """+1 on nonzero squares, -1 on nonsquares.  Not defined at 0."""
        self._check(x)
        if x == 0:
            raise ValueError("the quadratic character is not defined at 0")
        return 1 if self._log[x] % 2 == 0 else -1

    def squares(self) -> tuple[int, ...]:
        """The (q-1)/2 nonzero squares, ascending."""
        return tuple(sorted(self._exp[i] for i in range(0, self.q - 1, 2)))

    def nonsquares(self) -> tuple[int, ...]:
        return tuple(sorted(self._exp[i] for i in range(1, self.q - 1, 2)))

    # -- bulk tables (lazy, for the vectorized evaluation paths) --------------

    @property
    def mul_table(self) -> np.ndarray:
        """(q, q) int16 product table."""
        if "mul" not in self._tables:
            t = np.zeros((self.q, self.q), dtype=np.int16)
            for a in range(1, self.q):
                for b in range(1, self.q):
                    t[a, b] = self.mul(a, b)
            self._tables["mul"] = t
        return self._tables["mul"]

    @property
    def add_table(self) -> np.ndarray:
        """(q, q) int16 sum table."""
        if "add" not in self._tables:
            t = np.zeros((self.q, self.q), dtype=np.int16)
            for a in range(self.q):
                for b in range(self.q):
                    t[a, b] = self.add(a, b)
            self._tables["add"] = t
        return self._tables["add"]

    @property
    def trace_table(self) -> np.ndarray:
        """(q,) int8 absolute traces."""
        if "trace" not in self._tables:
            self._tables["trace"] = np.array(
                [self.trace(x) for x in range(self.q)], dtype=np.int8
            )
        return self._tables["trace"]

    @property
    def trace_mul_table(self) -> np.ndarray:
        """(q, q) int8 table of trace(x*y), the workhorse of bulk evaluation."""
        if "trace_mul" not in self._tables:
            self._tables["trace_mul"] = self.trace_table[self.mul_table]
        return self._tables["trace_mul"]


@functools.lru_cache(maxsize=None)
def get_field(m: int) -> GF3m:
    return GF3m(m)
