"""Two independent combinatorial oracles for the cabling coefficients.

The q-independent weights of the cabling expansion can be derived two more
ways, and both are implemented here to certify :mod:`cablejones.trinomial`:

  (a) expand the product of complete homogeneous symmetric functions
      prod_k h_{N_k - 1}(t^p, t^(-p)) into the two-variable characters
      chi_j(t) = (t^j - t^(-j)) / (t - t^(-1)) by peeling from the top
      degree;

  (b) count chains of two-row partitions that grow by border strips of
      length p, with signs given by skew Schur functions evaluated at the
      p-th roots of unity.

For a color vector N with g entries and p >= 1, both routes must reproduce
the signed, collapsed trinomial coefficients

    c_j = sum over support m with |m p + 1| = j of sgn(m p + 1) * C[m].

For p >= 2 at most one m feeds each j, so this is the per-m identity
K_mu = sgn(m p + 1) * C[m]; for p = 1 the indices m and -m-2 collapse onto
the same j and the differences C[m] - C[m + 2] appear instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly
from .trinomial import trinomial_table, validate_color_vector

__all__ = [
    "NotContained",
    "TwoRowPartition",
    "VerifyReport",
    "chain_trace",
    "expected_character_coefficients",
    "h_product_character_expansion",
    "skew_schur_at_roots",
    "strip_sign",
    "two_row_partitions",
    "verify_coefficients",
]


class NotContained(ValueError):
    """The inner partition is not contained in the outer one."""


@dataclass(frozen=True)
class TwoRowPartition:
    """A partition with at most two rows, mu1 >= mu2 >= 0."""

    mu1: int
    mu2: int

    def __post_init__(self):
        if not (self.mu1 >= self.mu2 >= 0):
            raise ValueError(f"not a two-row partition: ({self.mu1}, {self.mu2})")

    @property
    def size(self) -> int:
        return self.mu1 + self.mu2

    @property
    def character_index(self) -> int:
        """j = mu1 - mu2 + 1, the dimension label of the matching character."""
        return self.mu1 - self.mu2 + 1

    def contains(self, other: "TwoRowPartition") -> bool:
        return self.mu1 >= other.mu1 and self.mu2 >= other.mu2

    def __str__(self) -> str:
        return f"({self.mu1},{self.mu2})"


EMPTY = TwoRowPartition(0, 0)


def _h_at_roots(m: int, p: int) -> int:
    # h_m(1, w, ..., w^(p-1)) for w = exp(2 pi i / p): the generating series
    # prod_u (1 - w^u t)^(-1) collapses to (1 - t^p)^(-1).
    if m < 0:
        return 0
    return 1 if m % p == 0 else 0


def skew_schur_at_roots(outer: TwoRowPartition, inner: TwoRowPartition,
                        p: int) -> int:
    """s_{outer/inner}(1, w, ..., w^(p-1)) for w a primitive p-th root of unity.

    Evaluated exactly through the 2x2 Jacobi-Trudi determinant
    det(h_{lambda_i - mu_j - i + j}); always one of -1, 0, 1 for two-row
    shapes.  The value is nonzero exactly when outer/inner is a disjoint
    union of border strips of length p, and then carries the strip sign.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if not outer.contains(inner):
        raise NotContained(f"{inner} is not contained in {outer}")
    a = _h_at_roots(outer.mu1 - inner.mu1, p)
    b = _h_at_roots(outer.mu1 - inner.mu2 + 1, p)
    c = _h_at_roots(outer.mu2 - inner.mu1 - 1, p)
    d = _h_at_roots(outer.mu2 - inner.mu2, p)
    return a * d - b * c


def strip_sign(mu: TwoRowPartition, p: int) -> int:
    """(-1)^(mu2 mod p): the common sign of every chain contribution at mu."""
    return -1 if (mu.mu2 % p) % 2 else 1


def two_row_partitions(size: int, within: TwoRowPartition | None = None):
    """All two-row partitions of the given size, optionally inside ``within``."""
    out = []
    for mu1 in range((size + 1) // 2, size + 1):
        mu = TwoRowPartition(mu1, size - mu1)
        if within is None or within.contains(mu):
            out.append(mu)
    return out


def chain_trace(colors, p: int, mu: TwoRowPartition) -> int:
    """Signed count of border-strip chains from the empty shape up to mu.

    Sums, over all sequences empty = nu(0) <= nu(1) <= ... <= nu(g) = mu of
    two-row partitions with |nu(k)| - |nu(k-1)| = p * (N_k - 1), the product
    of the skew Schur values at p-th roots of unity.  Zero by convention
    when |mu| differs from p * (|N| - g).
    """
    colors = validate_color_vector(colors)
    if p < 1:
        raise ValueError("p must be >= 1")
    total = p * (sum(colors) - len(colors))
    if mu.size != total:
        return 0
    level = {EMPTY: 1}
    size = 0
    for n in colors:
        size += p * (n - 1)
        nxt: dict[TwoRowPartition, int] = {}
        targets = two_row_partitions(size, within=mu)
        for nu, weight in level.items():
            for nu2 in targets:
                if not nu2.contains(nu):
                    continue
                w = skew_schur_at_roots(nu2, nu, p)
                if w:
                    nxt[nu2] = nxt.get(nu2, 0) + weight * w
        level = nxt
        if not level:
            return 0
    return level.get(mu, 0)


def h_product_character_expansion(colors, p: int) -> dict[int, int]:
    """Expand prod_k h_{N_k-1}(t^p, t^(-p)) into the characters chi_j.

    h_{n}(t^p, t^(-p)) is the symmetric geometric sum
    t^(p n) + t^(p(n-2)) + ... + t^(-p n).  The product is peeled greedily:
    the top term of degree e contributes its coefficient at j = e + 1,
    since chi_j = t^(j-1) + t^(j-3) + ... + t^(1-j).  Peeling a symmetric
    integer Laurent polynomial always terminates.
    """
    colors = validate_color_vector(colors)
    if p < 1:
        raise ValueError("p must be >= 1")
    product = LaurentPoly.one()
    for n in colors:
        factor = LaurentPoly(-p * (n - 1), _geometric(n, 2 * p))
        product = product * factor
    out: dict[int, int] = {}
    while not product.is_zero():
        e = product.maxdeg
        c = product.coefficient(e)
        out[e + 1] = c
        chi = LaurentPoly(-e, _geometric(e + 1, 2))
        product = product - chi * c
    return out


def _geometric(terms: int, step: int) -> list[int]:
    coeffs = [0] * (step * (terms - 1) + 1)
    coeffs[::step] = [1] * terms
    return coeffs


def expected_character_coefficients(colors, p: int) -> dict[int, int]:
    """Signed collapse of the trinomial table onto character indices j.

    c_j = sum of sgn(m p + 1) * C[m] over support m with |m p + 1| = j.
    This is the target both oracles must reproduce.
    """
    table = trinomial_table(tuple(colors))
    out: dict[int, int] = {}
    for m, c in table.items():
        j = m * p + 1
        if j == 0:
            continue
        sign = 1 if j > 0 else -1
        out[abs(j)] = out.get(abs(j), 0) + sign * c
    return {j: c for j, c in out.items() if c}


@dataclass(frozen=True)
class VerifyReport:
    colors: tuple[int, ...]
    p: int
    passed: bool
    failures: tuple[str, ...]

    def __str__(self) -> str:
        head = f"colors={self.colors} p={self.p}: "
        if self.passed:
            return head + "pass"
        return head + "FAIL (" + "; ".join(self.failures) + ")"


def verify_coefficients(colors, p: int) -> VerifyReport:
    """Check both oracles against the trinomial table for one (colors, p).

    Confirms that the character expansion of the h-product equals the
    signed collapsed coefficients, and that the border-strip chain count
    agrees on every admissible two-row partition (including the zero
    values off the collapsed support).
    """
    colors = validate_color_vector(colors)
    expected = expected_character_coefficients(colors, p)
    failures: list[str] = []

    expansion = h_product_character_expansion(colors, p)
    if expansion != expected:
        diff = sorted(set(expansion) | set(expected))
        first = next(j for j in diff if expansion.get(j, 0) != expected.get(j, 0))
        failures.append(
            f"character expansion at j={first}: got {expansion.get(first, 0)}, "
            f"want {expected.get(first, 0)}")

    total = p * (sum(colors) - len(colors))
    for mu in two_row_partitions(total):
        got = chain_trace(colors, p, mu)
        want = expected.get(mu.character_index, 0)
        if got != want:
            failures.append(f"chain count at mu={mu}: got {got}, want {want}")
            break

    return VerifyReport(colors, p, not failures, tuple(failures))
