"""Exact Laurent polynomial arithmetic in the variable A = q^(1/4).

All link invariants in this package are integer Laurent polynomials in a
single variable A, with q = A^4.  A polynomial is stored densely as a
minimum exponent ``val`` plus a tuple of coefficients, lowest degree first.
Coefficients are Python ints, so nothing ever overflows; the zero
polynomial is the empty tuple with ``val = 0``.

Cabling produces polynomials whose supports are nearly contiguous on a
step-4 lattice, so the dense form wins over a sparse map.  Bulk sums of
many shifted polynomials go through :class:`PolyAccumulator`, which works
on a numpy object array (exact int arithmetic, vectorized slice adds).

Evaluation at the root of unity A0 = exp(i*pi/2N) first reduces every
exponent mod 4N and accumulates exact integer sums per residue class, so
polynomials of huge degree lose no precision before the single final pass
of at most 4N complex multiply-adds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "LaurentPoly",
    "NotDivisible",
    "PolyAccumulator",
    "RootOfUnityPoint",
    "divide_by_quantum_integer",
    "quantum_integer",
]

# Spans at or below this stay on plain-list code paths; larger ones use the
# numpy object-array kernels.
_NP_SPAN = 4096


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder.

    Divisibility is an invariant everywhere this package divides (connected
    sums, normalization), so this error signals either a caller bug or a
    violated invariant, never a rounding problem.
    """


@dataclass(frozen=True)
class RootOfUnityPoint:
    """The evaluation point A0 = exp(i*pi/2N), a primitive 4N-th root of unity.

    Equivalently q0 = A0^4 = exp(2*pi*i/N).  A0^(2N) = -1 and A0^(4N) = 1.
    """

    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be a positive integer")

    @property
    def order(self) -> int:
        return 4 * self.N

    @property
    def a0(self) -> complex:
        return cmath.exp(1j * math.pi / (2 * self.N))

    def powers(self) -> list[complex]:
        """All powers A0^k for k = 0..4N-1, each computed from its own angle."""
        n = self.N
        return [cmath.exp(1j * math.pi * k / (2 * n)) for k in range(4 * n)]


class LaurentPoly:
    """An integer Laurent polynomial, dense coefficients plus an offset.

    ``coeffs[i]`` is the coefficient of A^(val + i); the stored tuple never
    has a zero first or last entry.  Equality is exponent-by-exponent.

    >>> LaurentPoly(-2, (1, 0, 3, 0, -1))
    LaurentPoly('-A^2 + 3 + A^-2')
    >>> LaurentPoly(0, ()).is_zero()
    True
    """

    __slots__ = ("val", "coeffs", "_arr")

    def __init__(self, val: int, coeffs: Sequence[int]):
        lo, hi = 0, len(coeffs)
        while lo < hi and not coeffs[lo]:
            lo += 1
            val += 1
        while lo < hi and not coeffs[hi - 1]:
            hi -= 1
        if lo == hi:
            self.val = 0
            self.coeffs = ()
        else:
            self.val = val
            self.coeffs = tuple(coeffs[lo:hi])
        self._arr = None

    def _object_array(self) -> np.ndarray:
        # Cached numpy copy of the coefficients; not part of the value, and
        # idempotent under racing writers, so sharing stays coordination-free.
        if self._arr is None:
            self._arr = np.array(self.coeffs, dtype=object)
        return self._arr

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def monomial(coeff: int, exponent: int) -> "LaurentPoly":
        return LaurentPoly(exponent, (coeff,))

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, int]]) -> "LaurentPoly":
        """Build from (exponent, coefficient) pairs; repeats accumulate."""
        terms = [(e, c) for e, c in terms if c]
        if not terms:
            return LaurentPoly.zero()
        lo = min(e for e, _ in terms)
        hi = max(e for e, _ in terms)
        out = [0] * (hi - lo + 1)
        for e, c in terms:
            out[e - lo] += c
        return LaurentPoly(lo, out)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def mindeg(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return self.val

    @property
    def maxdeg(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return self.val + len(self.coeffs) - 1

    def support(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for every nonzero term, ascending."""
        v = self.val
        for i, c in enumerate(self.coeffs):
            if c:
                yield v + i, c

    def num_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def max_abs_coeff(self) -> int:
        if not self.coeffs:
            return 0
        return max(abs(c) for c in self.coeffs if c)

    def abs_coeff_sum(self) -> int:
        """Sum of |coefficients|; bounds |P(z)| on the unit circle."""
        return sum(abs(c) for c in self.coeffs)

    # -- ring operations ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    __hash__ = None  # compare by value; not usable as a dict key

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.val, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        out = [0] * (hi - lo)
        out[self.val - lo: self.val - lo + len(self.coeffs)] = self.coeffs
        o = other.val - lo
        for i, c in enumerate(other.coeffs):
            if c:
                out[o + i] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            if other == 1:
                return self
            return LaurentPoly(self.val, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        # Schoolbook convolution, driven by the operand with fewer terms.
        a, b = self, other
        if len(a.coeffs) > len(b.coeffs):
            a, b = b, a
        span = len(a.coeffs) + len(b.coeffs) - 1
        if span > _NP_SPAN:
            acc = PolyAccumulator()
            for i, c in enumerate(a.coeffs):
                if c:
                    acc.add(c, a.val + i, b)
            return acc.result()
        out = [0] * span
        bc = b.coeffs
        for i, c in enumerate(a.coeffs):
            if c:
                for j, d in enumerate(bc):
                    if d:
                        out[i + j] += c * d
        return LaurentPoly(a.val + b.val, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_shift(self, coeff: int, shift: int) -> "LaurentPoly":
        """coeff * A^shift * self; shares the coefficient tuple when coeff = 1."""
        if coeff == 0 or not self.coeffs:
            return LaurentPoly.zero()
        out = LaurentPoly.__new__(LaurentPoly)
        out.val = self.val + shift
        out.coeffs = self.coeffs if coeff == 1 else tuple(c * coeff for c in self.coeffs)
        out._arr = self._arr if coeff == 1 else None
        return out

    def exact_divide(self, b: "LaurentPoly") -> "LaurentPoly":
        """Return q with self = q * b exactly, else raise NotDivisible.

        Long division against the top term of b; every intermediate
        coefficient quotient must be an exact integer and the remainder
        must vanish.

        >>> (quantum_integer(3) + 1).exact_divide(quantum_integer(2))
        LaurentPoly('A^2 + A^-2')
        """
        if b.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        nb = len(b.coeffs)
        if len(self.coeffs) < nb:
            raise NotDivisible("degree span smaller than the divisor's")
        rem = list(self.coeffs)
        bc = b.coeffs
        btop = bc[-1]
        q = [0] * (len(rem) - nb + 1)
        for k in range(len(rem) - 1, nb - 2, -1):
            c = rem[k]
            if not c:
                continue
            cq, r = divmod(c, btop)
            if r:
                raise NotDivisible("leading coefficient does not divide")
            pos = k - (nb - 1)
            q[pos] = cq
            for j in range(nb):
                d = bc[j]
                if d:
                    rem[pos + j] -= cq * d
        if any(rem):
            raise NotDivisible("nonzero remainder")
        return LaurentPoly(self.val - b.val, q)

    def derivative(self) -> "LaurentPoly":
        """d/dA, termwise: c*A^k -> c*k*A^(k-1)."""
        n = len(self.coeffs)
        if n == 0:
            return self
        if n > _NP_SPAN:
            arr = self._object_array() * np.arange(self.val, self.val + n, dtype=object)
            return LaurentPoly(self.val - 1, arr.tolist())
        v = self.val
        return LaurentPoly(v - 1, [c * (v + i) for i, c in enumerate(self.coeffs)])

    def mirror(self) -> "LaurentPoly":
        """Substitute A -> A^(-1): the coefficient of A^k moves to A^(-k)."""
        if not self.coeffs:
            return self
        return LaurentPoly(-(self.val + len(self.coeffs) - 1), self.coeffs[::-1])

    def eval_at_root(self, pt: RootOfUnityPoint) -> complex:
        """Evaluate at A0 = exp(i*pi/2N) by exact residue-class reduction.

        Exponents are reduced mod 4N and summed exactly per residue class
        before any floating-point work, so exponent magnitude never costs
        precision; the final pass is at most 4N complex multiply-adds.
        """
        order = pt.order
        n = len(self.coeffs)
        sums = [0] * order
        if n > _NP_SPAN:
            arr = self._object_array()
            idx = np.nonzero(arr)[0]
            if len(idx):
                res = (idx + self.val) % order
                sarr = np.zeros(order, dtype=object)
                np.add.at(sarr, res, arr[idx])
                sums = sarr.tolist()
        else:
            v = self.val
            for i, c in enumerate(self.coeffs):
                if c:
                    sums[(v + i) % order] += c
        powers = pt.powers()
        total = 0j
        for k, s in enumerate(sums):
            if s:
                total += float(s) * powers[k]
        return total

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        """{"variable": "A", "terms": [[exp, "coeff"], ...]} by descending exponent."""
        terms = [[e, str(c)] for e, c in self.support()]
        terms.reverse()
        return {"variable": "A", "terms": terms}

    @staticmethod
    def from_json_dict(data: dict) -> "LaurentPoly":
        if data.get("variable") != "A":
            raise ValueError("expected a polynomial in the variable A")
        return LaurentPoly.from_terms((int(e), int(c)) for e, c in data["terms"])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in reversed(list(self.support())):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                a = "A" if e == 1 else f"A^{e}"
                body = a if mag == 1 else f"{mag}{a}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def quantum_integer(n: int) -> LaurentPoly:
    """The quantum integer [n] = A^(2(n-1)) + A^(2(n-3)) + ... + A^(-2(n-1)).

    [0] = 0 and [-n] = -[n]; [n] is the value of the unknot colored with the
    n-dimensional representation.

    >>> quantum_integer(2)
    LaurentPoly('A^2 + A^-2')
    >>> quantum_integer(-3)
    LaurentPoly('-A^4 - 1 - A^-4')
    """
    if n == 0:
        return LaurentPoly.zero()
    sign = 1 if n > 0 else -1
    n = abs(n)
    coeffs = [0] * (4 * (n - 1) + 1)
    coeffs[::4] = [sign] * n
    return LaurentPoly(-2 * (n - 1), coeffs)


class PolyAccumulator:
    """Streaming sum of terms coeff * A^shift * poly on a dense object buffer.

    The buffer grows geometrically as terms arrive, so a long cabling sum
    costs one vectorized slice add per term and never holds more than the
    running total plus the current term.
    """

    __slots__ = ("_buf", "_lo")

    def __init__(self):
        self._buf = None
        self._lo = 0

    def _ensure(self, lo: int, hi: int):
        if self._buf is None:
            margin = max(16, (hi - lo) // 4)
            self._lo = lo - margin
            self._buf = np.zeros(hi - lo + 2 * margin, dtype=object)
            return
        cur_hi = self._lo + len(self._buf)
        if lo >= self._lo and hi <= cur_hi:
            return
        new_lo = min(lo, self._lo)
        new_hi = max(hi, cur_hi)
        margin = max(16, (new_hi - new_lo) // 2)
        if lo < self._lo:
            new_lo -= margin
        if hi > cur_hi:
            new_hi += margin
        grown = np.zeros(new_hi - new_lo, dtype=object)
        off = self._lo - new_lo
        grown[off: off + len(self._buf)] = self._buf
        self._buf = grown
        self._lo = new_lo

    def hint_bounds(self, lo: int, hi: int):
        """Pre-extend the buffer to cover [lo, hi); purely an optimization."""
        if hi > lo:
            self._ensure(lo, hi)

    def add(self, coeff: int, shift: int, poly: LaurentPoly):
        if coeff == 0 or poly.is_zero():
            return
        lo = shift + poly.val
        n = len(poly.coeffs)
        self._ensure(lo, lo + n)
        o = lo - self._lo
        arr = poly._object_array()
        view = self._buf[o: o + n]
        if coeff == 1:
            view += arr
        elif coeff == -1:
            view -= arr
        else:
            view += arr * coeff

    def result(self) -> LaurentPoly:
        if self._buf is None:
            return LaurentPoly.zero()
        # Trim by scanning windows inward from each end; cable sums carry
        # nonzero extreme terms, so this normally touches two windows.
        buf = self._buf
        n = len(buf)
        lo = 0
        while lo < n:
            step = min(4096, n - lo)
            nz = np.nonzero(buf[lo: lo + step])[0]
            if len(nz):
                lo += int(nz[0])
                break
            lo += step
        if lo == n:
            return LaurentPoly.zero()
        hi = n
        while hi > lo:
            step = min(4096, hi - lo)
            nz = np.nonzero(buf[hi - step: hi])[0]
            if len(nz):
                hi -= step - int(nz[-1]) - 1
                break
            hi -= step
        return LaurentPoly(self._lo + lo, buf[lo:hi].tolist())


def _divide_by_binomial(coeffs: Sequence[int], K: int) -> list[int]:
    """Divide the dense polynomial by x^K - 1; raise NotDivisible on remainder.

    The quotient satisfies num[i] = q[i-K] - q[i], so q unrolls in one
    ascending pass; the top K recovered values double as the remainder check.
    """
    L = len(coeffs)
    if L <= K:
        raise NotDivisible("degree span smaller than the divisor's")
    qlen = L - K
    if L > _NP_SPAN:
        pad = (-L) % K
        arr = np.concatenate([np.array(coeffs, dtype=object),
                              np.zeros(pad, dtype=object)])
        rows = arr.reshape(-1, K)
        q = (-np.cumsum(rows, axis=0)).reshape(-1)
        if np.any(q[qlen:L] != 0):
            raise NotDivisible("nonzero remainder")
        return q[:qlen].tolist()
    q = [0] * L
    for i in range(L):
        prev = q[i - K] if i >= K else 0
        q[i] = prev - coeffs[i]
    if any(q[qlen:]):
        raise NotDivisible("nonzero remainder")
    return q[:qlen]


def divide_by_quantum_integer(a: LaurentPoly, n: int) -> LaurentPoly:
    """Exact division a / [n] for n >= 1, in time linear in the span of a.

    Uses [n] = (A^(2n) - A^(-2n)) / (A^2 - A^(-2)): multiply by the small
    binomial, divide by the large one.  Equivalent to
    ``a.exact_divide(quantum_integer(n))`` including the NotDivisible
    behaviour, but does not touch every (quotient term, divisor term) pair.
    """
    if n < 1:
        raise ValueError("divisor color must be >= 1")
    if n == 1 or a.is_zero():
        return a
    num = a.scale_shift(1, 2) - a.scale_shift(1, -2)
    q = _divide_by_binomial(num.coeffs, 4 * n)
    # num / (A^(2n) - A^(-2n)) = num / (A^(-2n) (A^(4n) - 1))
    return LaurentPoly(num.val + 2 * n, q)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
