"""Diagonal invariants of the symmetric and hyperoctahedral groups in two
sets of variables, with exact graded linear algebra.

The group acts on Q[x_1..x_n, y_1..y_n] by x_i -> (+/-) x_|w(i)|,
y_i -> (+/-) y_|w(i)| simultaneously.  Graded pieces of the invariant ring
are coordinatized by orbit sums of monomials: a monomial is recorded as the
multiset of its per-slot exponent pairs (a_i, b_i), and for the signed group
only multisets with every a_i + b_i even survive averaging.  Ideal quotients
and basis checks then reduce to exact rank computations in these
coordinates.

All polynomial degrees here are plain degrees of polynomials; the doubling
to cohomological degree happens in callers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qseries import QPoly, product_series
from .repa import partitions_max_parts
from .reports import CheckReport
from .weylcomb import (
    GroupSizeError,
    KINDS,
    Permutation,
    SignedPermutation,
    WeylElement,
    elements,
    group_order,
)

#: Documented feasibility range for the graded linear algebra.
QUOTIENT_CAPS = {"sym": 4, "signed": 3}
MAX_QUOTIENT_DEGREE = 12

ExpKey = tuple[tuple[int, ...], tuple[int, ...]]
Pair = tuple[int, int]
OrbitRep = tuple[Pair, ...]
GradedDims = dict[int, int]


class MultiPoly:
    """Sparse polynomial in x_1..x_n, y_1..y_n over exact rationals.

    Terms map ((a_1..a_n), (b_1..b_n)) to a nonzero Fraction.  Instances are
    treated as immutable; every operation returns a fresh polynomial.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[ExpKey, Fraction | int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable pair")
        self.n = n
        data: dict[ExpKey, Fraction] = {}
        if terms:
            for (xexp, yexp), coeff in terms.items():
                if len(xexp) != n or len(yexp) != n:
                    raise ValueError("exponent vector length mismatch")
                if any(e < 0 for e in xexp) or any(e < 0 for e in yexp):
                    raise ValueError("negative exponent")
                c = Fraction(coeff)
                if c:
                    key = (tuple(xexp), tuple(yexp))
                    c = data.get(key, Fraction(0)) + c
                    if c:
                        data[key] = c
                    else:
                        del data[key]
        self.terms = data

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls(n, {((0,) * n, (0,) * n): 1})

    @classmethod
    def monomial(
        cls,
        n: int,
        xexp: tuple[int, ...],
        yexp: tuple[int, ...],
        coeff: Fraction | int = 1,
    ) -> "MultiPoly":
        return cls(n, {(tuple(xexp), tuple(yexp)): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, xexp: tuple[int, ...], yexp: tuple[int, ...]) -> Fraction:
        return self.terms.get((tuple(xexp), tuple(yexp)), Fraction(0))

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(x) + sum(y) for x, y in self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        result = MultiPoly(self.n)
        result.terms = out
        return result

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly(self.n)
        result.terms = {key: -c for key, c in self.terms.items()}
        return result

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly | Fraction | int") -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            result = MultiPoly(self.n)
            if c:
                result.terms = {key: v * c for key, v in self.terms.items()}
            return result
        if self.n != other.n:
            raise ValueError("size mismatch")
        out: dict[ExpKey, Fraction] = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(x1, x2)),
                    tuple(a + b for a, b in zip(y1, y2)),
                )
                v = out.get(key, Fraction(0)) + c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
        result = MultiPoly(self.n)
        result.terms = out
        return result

    __rmul__ = __mul__

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xexp, yexp), c in sorted(self.terms.items()):
            factors = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}"
                       for i, e in enumerate(xexp) if e]
            factors += [f"y{i + 1}^{e}" if e > 1 else f"y{i + 1}"
                        for i, e in enumerate(yexp) if e]
            body = "*".join(factors) if factors else "1"
            parts.append(f"{c}*{body}" if c != 1 or not factors else body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_str()})"


def act(w: WeylElement, poly: MultiPoly) -> MultiPoly:
    """Diagonal substitution x_i -> (sign) x_|w(i)|, y_i -> (sign) y_|w(i)|."""
    if w.n != poly.n:
        raise ValueError("size mismatch between element and polynomial")
    n = poly.n
    word = w.word
    out: dict[ExpKey, Fraction] = {}
    for (xexp, yexp), coeff in poly.terms.items():
        new_x = [0] * n
        new_y = [0] * n
        sign = 1
        for i in range(n):
            v = word[i]
            j = abs(v) - 1
            new_x[j] = xexp[i]
            new_y[j] = yexp[i]
            if v < 0 and (xexp[i] + yexp[i]) % 2:
                sign = -sign
        key = (tuple(new_x), tuple(new_y))
        v2 = out.get(key, Fraction(0)) + sign * coeff
        if v2:
            out[key] = v2
        else:
            del out[key]
    result = MultiPoly(n)
    result.terms = out
    return result


def average(kind: str, poly: MultiPoly) -> MultiPoly:
    """Group average (1/|W|) sum_w w . poly; idempotent on invariants."""
    total = MultiPoly.zero(poly.n)
    for w in elements(kind, poly.n):
        total = total + act(w, poly)
    return total * Fraction(1, group_order(kind, poly.n))


def power_sum(n: int, a: int, b: int) -> MultiPoly:
    """The invariant x_1^a y_1^b + ... + x_n^a y_n^b."""
    if a < 0 or b < 0 or a + b < 1:
        raise ValueError("power sum needs a, b >= 0 with a + b >= 1")
    terms: dict[ExpKey, Fraction | int] = {}
    for i in range(n):
        xexp = [0] * n
        yexp = [0] * n
        xexp[i] = a
        yexp[i] = b
        terms[(tuple(xexp), tuple(yexp))] = 1
    return MultiPoly(n, terms)


def descent_monomial(w: Permutation) -> MultiPoly:
    """Product over descents i of w^-1 of x_1..x_i, times the product over
    descents j of w of y_w(1)..y_w(j).

    The x-degree is the major index of w^-1 and the y-degree that of w.
    """
    n = w.n
    xexp = [0] * n
    yexp = [0] * n
    for i in w.inverse().descent_set():
        for k in range(i):
            xexp[k] += 1
    for j in w.descent_set():
        for k in range(1, j + 1):
            yexp[w(k) - 1] += 1
    return MultiPoly.monomial(n, tuple(xexp), tuple(yexp))


def signed_descent_monomial(w: SignedPermutation) -> MultiPoly:
    """Monomial with x_i-exponent the i-th flag-vector entry of w^-1 and
    y_|w(i)|-exponent the i-th flag-vector entry of w; its total degree is
    fmaj(w^-1) + fmaj(w)."""
    n = w.n
    xexp = list(w.inverse().flag_vector())
    fv = w.flag_vector()
    yexp = [0] * n
    for i in range(1, n + 1):
        yexp[abs(w(i)) - 1] = fv[i - 1]
    return MultiPoly.monomial(n, tuple(xexp), tuple(yexp))


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")


@lru_cache(maxsize=None)
def monomial_orbit_reps(kind: str, n: int, degree: int) -> tuple[OrbitRep, ...]:
    """Canonical representatives of monomial orbits in degree ``degree``.

    A representative lists the n exponent pairs sorted by (a+b, a)
    descending.  For 'signed', only all-even pair degrees appear, since the
    other orbits average to zero.
    """
    _check_kind(kind)
    if degree < 0:
        raise ValueError("degree must be >= 0")
    even_only = kind == "signed"
    out: list[OrbitRep] = []

    def rec(slots_left: int, remaining: int, bound: Pair, acc: tuple[Pair, ...]) -> None:
        if remaining == 0:
            out.append(acc + ((0, 0),) * slots_left)
            return
        bound_deg, bound_a = bound
        for d in range(min(bound_deg, remaining), 0, -1):
            if d * slots_left < remaining:
                break
            if even_only and d % 2:
                continue
            a_max = bound_a if d == bound_deg else d
            for a in range(a_max, -1, -1):
                rec(slots_left - 1, remaining - d, (d, a), acc + ((a, d - a),))

    rec(n, degree, (degree, degree), ())
    return tuple(out)


def invariant_graded_dim(kind: str, n: int, degree: int) -> int:
    """Dimension of the degree-``degree`` piece of the invariant ring."""
    return len(monomial_orbit_reps(kind, n, degree))


@lru_cache(maxsize=None)
def orbit_sum(n: int, rep: OrbitRep) -> MultiPoly:
    """Sum of the distinct monomials in the orbit of the representative."""
    terms: dict[ExpKey, Fraction | int] = {}
    for arrangement in set(itertools.permutations(rep)):
        xexp = tuple(p[0] for p in arrangement)
        yexp = tuple(p[1] for p in arrangement)
        terms[(xexp, yexp)] = 1
    return MultiPoly(n, terms)


def invariant_coordinates(
    poly: MultiPoly, reps: tuple[OrbitRep, ...]
) -> list[Fraction]:
    """Coordinates of an invariant polynomial in the orbit-sum basis: the
    coefficient of each representative monomial."""
    out = []
    for rep in reps:
        xexp = tuple(p[0] for p in rep)
        yexp = tuple(p[1] for p in rep)
        out.append(poly.coefficient(xexp, yexp))
    return out


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q by Gaussian elimination with exact arithmetic."""
    pivots: list[tuple[int, list[Fraction]]] = []
    for row in rows:
        work = list(row)
        for col, pivot_row in pivots:
            c = work[col]
            if c:
                work = [a - c * b for a, b in zip(work, pivot_row)]
        for col, value in enumerate(work):
            if value:
                work = [a / value for a in work]
                pivots.append((col, work))
                break
    return len(pivots)


@dataclass(frozen=True)
class IdealSpec:
    """An ideal of the invariant ring given by power-sum generators."""

    generators: tuple[Pair, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(map(tuple, self.generators)))
        for a, b in self.generators:
            if a < 0 or b < 0 or a + b < 1:
                raise ValueError(f"invalid power-sum index ({a}, {b})")


def bcom_ideal(family: str, n: int) -> IdealSpec:
    """Generators of the ideal presenting the commuting classifying space:
    the pure-x power sums of BG, plus the trace class for SU."""
    family = family.upper()
    if family == "U":
        return IdealSpec(tuple((a, 0) for a in range(1, n + 1)))
    if family == "SU":
        return IdealSpec(tuple((a, 0) for a in range(1, n + 1)) + ((0, 1),))
    if family == "SP":
        return IdealSpec(tuple((2 * a, 0) for a in range(1, n + 1)))
    raise ValueError(f"unknown family {family!r}")


def ecom_ideal(family: str, n: int) -> IdealSpec:
    """Generators for the fiber-space quotient: the x power sums and their
    y mirrors."""
    family = family.upper()
    if family == "U":
        pairs = [(a, 0) for a in range(1, n + 1)]
    elif family == "SP":
        pairs = [(2 * a, 0) for a in range(1, n + 1)]
    elif family == "SU":
        raise ValueError(
            "the fiber space of SU(n) shares the U(n) numerator; "
            "quotient against ecom_ideal('U', n) instead"
        )
    else:
        raise ValueError(f"unknown family {family!r}")
    return IdealSpec(tuple(pairs) + tuple((b, a) for a, b in pairs))


def _check_feasible(kind: str, n: int, max_degree: int) -> None:
    _check_kind(kind)
    if n > QUOTIENT_CAPS[kind] or max_degree > MAX_QUOTIENT_DEGREE:
        raise GroupSizeError(
            f"graded linear algebra supports n <= {QUOTIENT_CAPS[kind]} for "
            f"{kind!r} and degree <= {MAX_QUOTIENT_DEGREE}; "
            f"got n={n}, degree={max_degree}"
        )


def quotient_graded_dims(
    kind: str, n: int, ideal: IdealSpec, max_degree: int
) -> GradedDims:
    """Graded dimensions of (invariant ring)/(ideal) through ``max_degree``.

    In each degree the ideal's piece is spanned by invariant-basis multiples
    of the generators; its exact rank is subtracted from the invariant
    dimension.
    """
    _check_feasible(kind, n, max_degree)
    if kind == "signed" and any((a + b) % 2 for a, b in ideal.generators):
        raise ValueError("signed quotients need even-degree generators")
    dims: GradedDims = {}
    for d in range(max_degree + 1):
        reps_d = monomial_orbit_reps(kind, n, d)
        rows = []
        for a, b in ideal.generators:
            e = a + b
            if e > d:
                continue
            gen = power_sum(n, a, b)
            for rep in monomial_orbit_reps(kind, n, d - e):
                rows.append(invariant_coordinates(orbit_sum(n, rep) * gen, reps_d))
        dims[d] = len(reps_d) - exact_rank(rows)
    return dims


@dataclass(frozen=True)
class BasisReport:
    """Result of the free-basis verification, with the basis degrees."""

    kind: str
    n: int
    passed: bool
    basis_size: int
    degrees: tuple[int, ...]
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _block_exponents(kind: str, n: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent partitions of the one-variable-block invariants in a degree:
    monomial symmetric functions of x (resp. of the squares of x)."""
    if kind == "sym":
        return partitions_max_parts(degree, n)
    if degree % 2:
        return ()
    return tuple(
        tuple(2 * p for p in mu) for mu in partitions_max_parts(degree // 2, n)
    )


def _block_poly(n: int, lam: tuple[int, ...], block: str) -> MultiPoly:
    pairs = tuple((p, 0) if block == "x" else (0, p) for p in lam)
    pairs += ((0, 0),) * (n - len(lam))
    return orbit_sum(n, pairs)


def _base_ring_weights(kind: str, n: int) -> dict[int, int]:
    if kind == "sym":
        return {i: 2 for i in range(1, n + 1)}
    return {2 * i: 2 for i in range(1, n + 1)}


def averaged_descent_basis(kind: str, n: int) -> list[tuple[WeylElement, MultiPoly]]:
    """The group-averaged (signed) descent monomials, one per element."""
    out = []
    for w in elements(kind, n):
        mono = descent_monomial(w) if kind == "sym" else signed_descent_monomial(w)
        out.append((w, average(kind, mono)))
    return out


def verify_free_basis(kind: str, n: int, max_degree: int) -> BasisReport:
    """Check that the averaged descent monomials freely generate the
    invariant ring over the two-block invariants, degree by degree.

    Verified through ``max_degree``: every averaged monomial is nonzero, the
    products basis x (block invariants) are independent and span each graded
    piece, and the corresponding Hilbert series identity holds.
    """
    _check_feasible(kind, n, max_degree)
    basis = averaged_descent_basis(kind, n)
    degrees = tuple(sorted(poly.total_degree() for _, poly in basis))
    if any(poly.is_zero() for _, poly in basis):
        return BasisReport(kind, n, False, len(basis), degrees,
                           "an averaged descent monomial vanished")

    degree_counts: dict[int, int] = {}
    for d in degrees:
        degree_counts[d] = degree_counts.get(d, 0) + 1
    basis_gen = QPoly(degree_counts).truncated(max_degree)
    base_hilbert = product_series(_base_ring_weights(kind, n), max_degree)
    predicted = basis_gen * base_hilbert

    for d in range(max_degree + 1):
        reps_d = monomial_orbit_reps(kind, n, d)
        if predicted.coeffs[d] != len(reps_d):
            return BasisReport(
                kind, n, False, len(basis), degrees,
                f"Hilbert series mismatch in degree {d}: "
                f"{predicted.coeffs[d]} != {len(reps_d)}",
            )
        products = []
        for _, bpoly in basis:
            bdeg = bpoly.total_degree()
            if bdeg > d:
                continue
            for ex in range(d - bdeg + 1):
                ey = d - bdeg - ex
                for lam_x in _block_exponents(kind, n, ex):
                    px = _block_poly(n, lam_x, "x")
                    for lam_y in _block_exponents(kind, n, ey):
                        products.append(bpoly * px * _block_poly(n, lam_y, "y"))
        if len(products) != len(reps_d):
            return BasisReport(
                kind, n, False, len(basis), degrees,
                f"product count {len(products)} != dimension {len(reps_d)} "
                f"in degree {d}",
            )
        rows = [invariant_coordinates(p, reps_d) for p in products]
        rank = exact_rank(rows)
        if rank != len(reps_d):
            return BasisReport(
                kind, n, False, len(basis), degrees,
                f"products only span rank {rank} of {len(reps_d)} in degree {d}",
            )
    return BasisReport(kind, n, True, len(basis), degrees,
                       f"free basis verified through degree {max_degree}")


def generation_generators(kind: str, n: int, max_degree: int) -> tuple[Pair, ...]:
    """The power-sum family expected to generate the invariant ring: total
    degree up to n for 'sym'; every even total degree up to the working
    degree for 'signed', where no uniform bound is assumed."""
    _check_kind(kind)
    if kind == "sym":
        return tuple(
            (a, tot - a) for tot in range(1, n + 1) for a in range(tot + 1)
        )
    return tuple(
        (a, tot - a) for tot in range(2, max_degree + 1, 2) for a in range(tot + 1)
    )


def verify_power_sum_generation(kind: str, n: int, max_degree: int) -> CheckReport:
    """Check degree by degree that monomials in the designated power sums
    span the invariant ring."""
    _check_feasible(kind, n, max_degree)
    gens = generation_generators(kind, n, max_degree)
    polys = [power_sum(n, a, b) for a, b in gens]
    gen_degrees = [a + b for a, b in gens]

    for d in range(max_degree + 1):
        reps_d = monomial_orbit_reps(kind, n, d)
        rows: list[list[Fraction]] = []

        def rec(idx: int, remaining: int, acc: MultiPoly) -> None:
            if remaining == 0:
                rows.append(invariant_coordinates(acc, reps_d))
                return
            for i in range(idx, len(polys)):
                if gen_degrees[i] <= remaining:
                    rec(i, remaining - gen_degrees[i], acc * polys[i])

        rec(0, d, MultiPoly.one(n))
        rank = exact_rank(rows)
        if rank != len(reps_d):
            return CheckReport(
                name=f"power sum generation kind={kind} n={n}",
                passed=False,
                detail=f"degree {d}: span has rank {rank} of {len(reps_d)}",
                first_mismatch=d,
            )
    return CheckReport(
        name=f"power sum generation kind={kind} n={n}",
        passed=True,
        detail=f"spans every degree through {max_degree}",
    )
