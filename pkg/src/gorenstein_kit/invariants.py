"""Finite matrix groups acting on graded polynomial generators.

A group is enumerated explicitly (orders here are tiny, so exactness beats
generality) as block-diagonal matrices with exact rational entries, one
square block per generator degree.  On top of the enumeration this module
computes Molien and character-twisted Molien series, pseudoreflection
counts, fundamental invariant degrees by greedy peeling, the Solomon
supplement together with its verification as an identity of rational
functions, symmetric-power characters, decompositions against rational
character tables, and explicit invariant polynomials via the averaging
(Reynolds) operator.

Only rational-valued character tables are supported for decomposition;
groups with irrational irreducible characters still get Molien series and
Solomon verification, which need nothing beyond determinants and traces of
rational matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .linalg import Matrix, as_exact
from .series import HilbertSeries, LaurentPolynomial

DEFAULT_ORDER_CAP = 10_000
DEFAULT_MONOMIAL_BOUND = 5_000


class OrderCapExceeded(RuntimeError):
    """Closure enumeration hit the cap: the group is infinite or too large."""


class NotPolynomial(ArithmeticError):
    """The series is not of the form 1/prod(1 - t^{e_i}) at the given rank."""


class LengthMismatch(ValueError):
    pass


class NonIntegralMultiplicity(ArithmeticError):
    """Decomposition produced a non-(nonnegative-integer) multiplicity.

    Signals a character table inconsistent with the representation, e.g. a
    group whose decomposition would need irrational characters.
    """


class MonomialBoundExceeded(RuntimeError):
    pass


class NoBuiltinCharacterTable(LookupError):
    """No built-in rational character table for this group."""


def _element_key(m: Matrix) -> tuple[Fraction, ...]:
    return tuple(x for row in m for x in row)


def _block_slices(blocks: Sequence[tuple[int, int]]) -> list[tuple[int, int, int]]:
    out = []
    start = 0
    for degree, dim in blocks:
        out.append((degree, start, start + dim))
        start += dim
    return out


@dataclass(frozen=True)
class GradedGroupRep:
    """An enumerated finite group of graded, invertible rational matrices.

    ``blocks`` lists (degree, dimension) pairs partitioning the generator
    set; every element is block-diagonal with respect to that partition.
    ``elements`` is the full closure with the identity first.
    """

    name: str
    blocks: tuple[tuple[int, int], ...]
    generators: tuple[Matrix, ...]
    elements: tuple[Matrix, ...]
    order: int
    _classes: tuple[tuple[int, ...], ...] | None = field(
        default=None, compare=False, repr=False
    )

    @property
    def dimension(self) -> int:
        return sum(dim for _, dim in self.blocks)

    @property
    def graded_degrees(self) -> tuple[int, ...]:
        """Degree of each matrix coordinate: block degrees with multiplicity."""
        out: list[int] = []
        for degree, dim in self.blocks:
            out.extend([degree] * dim)
        return tuple(out)

    def block_slices(self) -> list[tuple[int, int, int]]:
        """(degree, start, stop) coordinate ranges of the diagonal blocks."""
        return _block_slices(self.blocks)


def _is_block_diagonal(m: Matrix, slices: list[tuple[int, int, int]]) -> bool:
    n = len(m)
    for _, start, stop in slices:
        for i in range(start, stop):
            for j in range(n):
                if not (start <= j < stop) and m[i][j]:
                    return False
    return True


def generate_group(
    generators: Sequence[Sequence[Sequence[Fraction | int]]],
    blocks: Sequence[tuple[int, int]],
    cap: int = DEFAULT_ORDER_CAP,
    name: str = "",
) -> GradedGroupRep:
    """Breadth-first closure of the generators under multiplication.

    Raises :class:`OrderCapExceeded` when the closure grows past ``cap``
    (the signature of an infinite or unexpectedly large group).
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    blocks = tuple((int(d), int(m)) for d, m in blocks)
    for degree, dim in blocks:
        if degree < 1 or dim < 1:
            raise ValueError(f"bad block ({degree}, {dim}): degree and dimension must be >= 1")
    n = sum(dim for _, dim in blocks)
    slices = _block_slices(blocks)
    gens = tuple(linalg.freeze(g) for g in generators)
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError(f"generator is not {n}x{n}")
        if not _is_block_diagonal(g, slices):
            raise ValueError("generator is not block-diagonal for the given grading")
        if linalg.determinant(g) == 0:
            raise ValueError("generator is singular")
    ident = linalg.identity(n)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        new: list[Matrix] = []
        for m in frontier:
            for g in gens:
                prod = linalg.mat_mul(m, g)
                if prod not in seen:
                    if len(seen) >= cap:
                        raise OrderCapExceeded(
                            f"group closure exceeds the cap of {cap} elements"
                        )
                    seen.add(prod)
                    elements.append(prod)
                    new.append(prod)
        frontier = new
    return GradedGroupRep(
        name=name,
        blocks=blocks,
        generators=gens,
        elements=tuple(elements),
        order=len(elements),
    )


def element_order(m: Matrix, bound: int = DEFAULT_ORDER_CAP) -> int:
    ident = linalg.identity(len(m))
    power = m
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = linalg.mat_mul(power, m)
    raise OrderCapExceeded(f"element order exceeds {bound}")


def conjugacy_classes(group: GradedGroupRep) -> tuple[tuple[int, ...], ...]:
    """Partition of element indices into conjugacy classes, canonically ordered.

    Classes are sorted by (order of representative, class size, entries of
    the lexicographically least member); the identity class comes first.
    Character tables and symmetric-power characters index classes in this
    order.
    """
    if group._classes is not None:
        return group._classes
    index = {m: i for i, m in enumerate(group.elements)}
    inverses = [linalg.inverse(m) for m in group.elements]
    assigned: dict[int, int] = {}
    raw: list[list[int]] = []
    for i, x in enumerate(group.elements):
        if i in assigned:
            continue
        members = set()
        for h, hinv in zip(group.elements, inverses):
            members.add(index[linalg.mat_mul(linalg.mat_mul(h, x), hinv)])
        cls = sorted(members)
        for j in cls:
            assigned[j] = len(raw)
        raw.append(cls)

    def class_key(cls: list[int]) -> tuple:
        rep = min(cls, key=lambda i: _element_key(group.elements[i]))
        mat = group.elements[rep]
        return (element_order(mat, group.order), len(cls), _element_key(mat))

    ordered = tuple(tuple(cls) for cls in sorted(raw, key=class_key))
    object.__setattr__(group, "_classes", ordered)
    return ordered


def class_representatives(group: GradedGroupRep) -> tuple[int, ...]:
    """Canonical representative index of each conjugacy class."""
    reps = []
    for cls in conjugacy_classes(group):
        reps.append(min(cls, key=lambda i: _element_key(group.elements[i])))
    return tuple(reps)


def _class_of_element(group: GradedGroupRep) -> list[int]:
    lookup = [0] * group.order
    for c, cls in enumerate(conjugacy_classes(group)):
        for i in cls:
            lookup[i] = c
    return lookup


@dataclass(frozen=True)
class RationalCharacterTable:
    """Rational-valued characters, one value per canonical conjugacy class."""

    class_representatives: tuple[int, ...]
    class_sizes: tuple[int, ...]
    irreducibles: tuple[tuple[str, tuple[Fraction, ...]], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.irreducibles)

    def row(self, name: str) -> tuple[Fraction, ...]:
        for row_name, values in self.irreducibles:
            if row_name == name:
                return values
        raise KeyError(f"no character named {name!r} in the table")

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)


def character_table(
    group: GradedGroupRep,
    irreducibles: Sequence[tuple[str, Sequence[Fraction | int]]],
) -> RationalCharacterTable:
    """Build and validate a character table against an enumerated group.

    Rows must be rational-valued class functions in the canonical class
    order satisfying the orthonormality relations; anything else is
    rejected, since decomposition against such a table would be silently
    wrong.
    """
    classes = conjugacy_classes(group)
    sizes = tuple(len(c) for c in classes)
    rows = []
    names = set()
    for name, values in irreducibles:
        values = tuple(as_exact(v) for v in values)
        if len(values) != len(classes):
            raise ValueError(
                f"character {name!r} has {len(values)} values for {len(classes)} classes"
            )
        if name in names:
            raise ValueError(f"duplicate character name {name!r}")
        names.add(name)
        rows.append((str(name), values))
    for i, (name_i, chi_i) in enumerate(rows):
        for j, (name_j, chi_j) in enumerate(rows):
            inner = sum(
                (Fraction(s) * a * b for s, a, b in zip(sizes, chi_i, chi_j)),
                Fraction(0),
            ) / group.order
            expected = Fraction(1) if i == j else Fraction(0)
            if inner != expected:
                raise ValueError(
                    f"characters {name_i!r}, {name_j!r} fail orthogonality: <,> = {inner}"
                )
    return RationalCharacterTable(
        class_representatives=class_representatives(group),
        class_sizes=sizes,
        irreducibles=tuple(rows),
    )


def builtin_character_table(group: GradedGroupRep) -> RationalCharacterTable:
    """Built-in tables for the group shapes the bundled fixtures use.

    Covers the trivial group, the two-element group, the Klein four-group,
    and the nonabelian group of order six.  Raises
    :class:`NoBuiltinCharacterTable` otherwise; such groups need a
    user-supplied table (and have one only when all irreducible characters
    are rational).
    """
    n_classes = len(conjugacy_classes(group))
    if group.order == 1:
        rows = [("triv", (1,))]
    elif group.order == 2:
        rows = [("triv", (1, 1)), ("sign", (1, -1))]
    elif group.order == 4 and all(
        element_order(m, 4) <= 2 for m in group.elements
    ):
        rows = [("triv", (1,) * 4)]
        for k in range(1, 4):
            rows.append(
                (f"chi{k}", tuple(1 if c in (0, k) else -1 for c in range(4)))
            )
    elif group.order == 6 and n_classes == 3:
        rows = [("triv", (1, 1, 1)), ("sign", (1, -1, 1)), ("std", (2, 0, -1))]
    else:
        raise NoBuiltinCharacterTable(
            f"no built-in rational character table for a group of order {group.order}"
        )
    return character_table(group, rows)


# -- Molien series ------------------------------------------------------------


@dataclass(frozen=True)
class MolienReport:
    """A (possibly twisted) Molien series with its structural diagnostics.

    ``polynomial_degrees`` is populated exactly when the series is the
    series of a polynomial ring on ``dimension`` generators, in which case
    it lists their degrees; ``pseudoreflection_count`` counts non-identity
    elements fixing a hyperplane of the whole graded vector space.
    """

    series: HilbertSeries
    twist: str
    polynomial_degrees: tuple[int, ...] | None
    pseudoreflection_count: int


def _element_term(group: GradedGroupRep, m: Matrix) -> HilbertSeries:
    """1 / prod_blocks det(1 - (m on V_d) t^d) as a canonical series."""
    inv = linalg.inverse(m)
    order = element_order(m, group.order)
    numerator = LaurentPolynomial.one()
    dens: list[int] = []
    for degree, start, stop in group.block_slices():
        sub = tuple(tuple(inv[i][j] for j in range(start, stop)) for i in range(start, stop))
        dim = stop - start
        det_coeffs = linalg.det_one_minus_coefficients(sub)
        det_poly = LaurentPolynomial(
            {k * degree: c for k, c in enumerate(det_coeffs) if c}
        )
        # All eigenvalues are order-th roots of unity, so det divides
        # (1 - t^{degree*order})^dim exactly.
        full = LaurentPolynomial.one_minus(degree * order) ** dim
        quotient = full.divide_exact(det_poly)
        if quotient is None:
            raise ArithmeticError("characteristic factor failed to divide cyclotomic power")
        numerator = numerator * quotient
        dens.extend([degree * order] * dim)
    return HilbertSeries(numerator, dens)


def pseudoreflection_count(group: GradedGroupRep) -> int:
    ident = linalg.identity(group.dimension)
    count = 0
    for m in group.elements:
        if m != ident and linalg.rank(linalg.mat_sub(m, ident)) == 1:
            count += 1
    return count


def molien_series(
    group: GradedGroupRep,
    twist: str = "trivial",
    table: RationalCharacterTable | None = None,
) -> MolienReport:
    """Exact (twisted) Molien series of the group action.

    Averages 1/det(1 - g^{-1} t^d on V_d) over the group, each degree-d
    block contributing at t^d; for ``twist="det"`` every term is weighted by
    the determinant of g, and for a named twist by that character's value on
    the class of g (the table must contain the name).
    """
    if twist == "trivial":
        weights = [Fraction(1)] * group.order
    elif twist == "det":
        weights = [linalg.determinant(m) for m in group.elements]
    else:
        if table is None:
            raise ValueError(f"twist {twist!r} needs a character table")
        values = table.row(twist)
        lookup = _class_of_element(group)
        weights = [values[lookup[i]] for i in range(group.order)]
    total = HilbertSeries.zero()
    for m, w in zip(group.elements, weights):
        if w:
            total = total + _element_term(group, m) * w
    series = total * Fraction(1, group.order)
    try:
        degrees = extract_polynomial_degrees(series, group.dimension)
    except NotPolynomial:
        degrees = None
    return MolienReport(
        series=series,
        twist=twist,
        polynomial_degrees=degrees,
        pseudoreflection_count=pseudoreflection_count(group),
    )


def extract_polynomial_degrees(series: HilbertSeries, rank: int) -> tuple[int, ...]:
    """Degrees e_1..e_rank with series = 1/prod(1 - t^{e_i}), if they exist.

    Greedy peeling, smallest degree first: repeatedly find the least
    positive degree with a positive coefficient and multiply that geometric
    factor away.  The multiset of degrees of a genuine polynomial series is
    unique, so the greedy order only affects failure diagnostics.
    """
    if rank < 1:
        raise ValueError("rank must be >= 1")
    current = series
    degrees: list[int] = []
    for _ in range(rank):
        if current.is_zero:
            raise NotPolynomial("series vanished before peeling finished")
        num = current.numerator
        span = max(0, num.max_exponent) - min(0, num.min_exponent)
        limit = sum(current.denominator_degrees) + span + 1
        coeffs = current.expand(1, limit)
        e = next((k for k, c in enumerate(coeffs, start=1) if c > 0), None)
        if e is None:
            raise NotPolynomial("no positive coefficient left to peel")
        degrees.append(e)
        current = current * HilbertSeries(LaurentPolynomial.one_minus(e))
    if not current.is_one():
        raise NotPolynomial(f"residue after peeling {degrees} is {current}, not 1")
    return tuple(sorted(degrees))


def solomon_supplement(
    generator_degrees: Sequence[int], invariant_degrees: Sequence[int]
) -> int:
    """Shift relating determinant-twisted invariants to invariants:
    sum of generator degrees minus sum of invariant degrees."""
    if len(generator_degrees) != len(invariant_degrees):
        raise LengthMismatch(
            f"{len(generator_degrees)} generator degrees vs "
            f"{len(invariant_degrees)} invariant degrees"
        )
    return sum(generator_degrees) - sum(invariant_degrees)


@dataclass(frozen=True)
class SolomonVerification:
    """Outcome of checking twisted = t^{-b} * untwisted as rational functions."""

    verified: bool
    supplement: int
    generator_degrees: tuple[int, ...]
    invariant_degrees: tuple[int, ...]
    invariant_series: HilbertSeries
    det_twisted_series: HilbertSeries


def verify_solomon(group: GradedGroupRep) -> SolomonVerification:
    """Check the determinant-twisted Molien series against the prediction.

    Requires polynomial invariants (so that the supplement is defined); the
    check itself is an exact identity of rational functions, and the two
    series are returned either way so a failure carries its witness.
    """
    trivial = molien_series(group, "trivial")
    if trivial.polynomial_degrees is None:
        raise NotPolynomial(
            "invariants are not a polynomial ring; no supplement to verify"
        )
    gen_degrees = group.graded_degrees
    b = solomon_supplement(gen_degrees, trivial.polynomial_degrees)
    twisted = molien_series(group, "det")
    verified = twisted.series == trivial.series.shifted(-b)
    return SolomonVerification(
        verified=verified,
        supplement=b,
        generator_degrees=gen_degrees,
        invariant_degrees=trivial.polynomial_degrees,
        invariant_series=trivial.series,
        det_twisted_series=twisted.series,
    )


# -- symmetric powers and decomposition ---------------------------------------


def sym_power_character(group: GradedGroupRep, n: int) -> tuple[Fraction, ...]:
    """Character of the n-th symmetric power of the underlying (ungraded)
    representation, one value per canonical conjugacy class.

    Computed from the generating identity sum_n chi_{Sym^n}(g) s^n =
    1/det(1 - g s) by expanding the reciprocal to order n.
    """
    if n < 0:
        raise ValueError("symmetric power index must be >= 0")
    values = []
    for rep in class_representatives(group):
        m = group.elements[rep]
        det_coeffs = linalg.det_one_minus_coefficients(m)
        h = [Fraction(1)]
        for j in range(1, n + 1):
            s = Fraction(0)
            for i in range(1, min(j, len(det_coeffs) - 1) + 1):
                s += det_coeffs[i] * h[j - i]
            h.append(-s)
        values.append(h[n])
    return tuple(values)


def decompose(
    values: Sequence[Fraction | int], table: RationalCharacterTable
) -> tuple[int, ...]:
    """Multiplicities of the table's characters in a class function.

    Every multiplicity must come out a nonnegative integer; anything else
    raises :class:`NonIntegralMultiplicity`, the sign of a table that cannot
    see the representation (e.g. irrational characters would be needed).
    """
    values = tuple(as_exact(v) for v in values)
    if len(values) != len(table.class_sizes):
        raise LengthMismatch(
            f"{len(values)} values for {len(table.class_sizes)} classes"
        )
    order = table.group_order
    mults = []
    for name, chi in table.irreducibles:
        inner = sum(
            (Fraction(s) * a * b for s, a, b in zip(table.class_sizes, chi, values)),
            Fraction(0),
        ) / order
        if inner.denominator != 1 or inner < 0:
            raise NonIntegralMultiplicity(
                f"multiplicity of {name!r} is {inner}, not a nonnegative integer"
            )
        mults.append(int(inner))
    return tuple(mults)


# -- explicit invariants via averaging ----------------------------------------

Polynomial = dict[tuple[int, ...], Fraction]


def _poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(e, Fraction(0)) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def _poly_pow(a: Polynomial, k: int, nvars: int) -> Polynomial:
    result: Polynomial = {(0,) * nvars: Fraction(1)}
    base = a
    while k:
        if k & 1:
            result = _poly_mul(result, base)
        base = _poly_mul(base, base)
        k >>= 1
    return result


def _apply_element(m: Matrix, exponents: tuple[int, ...]) -> Polynomial:
    """Image of the monomial prod x_j^{e_j} under x_j -> sum_i m[i][j] x_i."""
    nvars = len(exponents)
    result: Polynomial = {(0,) * nvars: Fraction(1)}
    for j, e in enumerate(exponents):
        if not e:
            continue
        linear: Polynomial = {}
        for i in range(nvars):
            if m[i][j]:
                unit = tuple(1 if k == i else 0 for k in range(nvars))
                linear[unit] = m[i][j]
        result = _poly_mul(result, _poly_pow(linear, e, nvars))
    return result


def monomials_of_degree(var_degrees: Sequence[int], total: int) -> list[tuple[int, ...]]:
    """Exponent vectors with sum(e_i * var_degrees[i]) = total."""
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: list[int]):
        if i == len(var_degrees) - 1:
            if remaining % var_degrees[i] == 0:
                out.append(tuple(prefix + [remaining // var_degrees[i]]))
            return
        d = var_degrees[i]
        for e in range(remaining // d + 1):
            rec(i + 1, remaining - e * d, prefix + [e])

    if total < 0:
        return []
    rec(0, total, [])
    return out


def invariant_basis(
    group: GradedGroupRep,
    total_degree: int,
    monomial_bound: int = DEFAULT_MONOMIAL_BOUND,
) -> list[Polynomial]:
    """Exact basis of the invariant polynomials of one topological degree.

    Applies the averaging operator (1/|G|) sum_g g . to every monomial of
    the degree and row-reduces the results; the number of basis elements
    equals the corresponding Molien coefficient.  Polynomials are exponent
    dictionaries over the graded variables, one slot per matrix coordinate.
    """
    var_degrees = group.graded_degrees
    if total_degree == 0:
        return [{(0,) * group.dimension: Fraction(1)}]
    monomials = monomials_of_degree(var_degrees, total_degree)
    if len(monomials) > monomial_bound:
        raise MonomialBoundExceeded(
            f"{len(monomials)} monomials at degree {total_degree} "
            f"(bound {monomial_bound})"
        )
    if not monomials:
        return []
    averaged: list[Polynomial] = []
    inv_order = Fraction(1, group.order)
    for expvec in monomials:
        acc: Polynomial = {}
        for m in group.elements:
            for e, c in _apply_element(m, expvec).items():
                v = acc.get(e, Fraction(0)) + c
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        acc = {e: c * inv_order for e, c in acc.items()}
        if acc:
            averaged.append(acc)
    columns = sorted(monomials, reverse=True)
    col_index = {e: i for i, e in enumerate(columns)}
    rows = []
    for poly in averaged:
        row = [Fraction(0)] * len(columns)
        for e, c in poly.items():
            row[col_index[e]] = c
        rows.append(row)
    basis = []
    for row in linalg.rref(rows):
        poly = {columns[i]: c for i, c in enumerate(row) if c}
        basis.append(poly)
    return basis


def format_polynomial(poly: Polynomial, symbols: Sequence[str]) -> str:
    """Human-readable rendering like ``x^2 + x*y + y^2``."""
    if not poly:
        return "0"
    pieces = []
    for exponents, coeff in sorted(poly.items(), reverse=True):
        factors = []
        for sym, e in zip(symbols, exponents):
            if e == 1:
                factors.append(sym)
            elif e > 1:
                factors.append(f"{sym}^{e}")
        body = "*".join(factors)
        c = abs(coeff)
        if not body:
            text = str(c)
        elif c == 1:
            text = body
        elif c.denominator == 1:
            text = f"{c}*{body}"
        else:
            text = f"({c})*{body}"
        if not pieces:
            pieces.append(text if coeff > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
    return " ".join(pieces)
