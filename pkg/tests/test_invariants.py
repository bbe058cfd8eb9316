"""Group enumeration, Molien series, Solomon verification, symmetric powers,
and the averaging-operator oracle."""

from fractions import Fraction

import pytest

from gorenstein_kit import linalg
from gorenstein_kit.invariants import (
    LengthMismatch,
    MonomialBoundExceeded,
    NoBuiltinCharacterTable,
    NonIntegralMultiplicity,
    NotPolynomial,
    OrderCapExceeded,
    builtin_character_table,
    character_table,
    class_representatives,
    conjugacy_classes,
    decompose,
    element_order,
    extract_polynomial_degrees,
    format_polynomial,
    generate_group,
    invariant_basis,
    molien_series,
    monomials_of_degree,
    solomon_supplement,
    sym_power_character,
    verify_solomon,
)
from gorenstein_kit.series import HilbertSeries, LaurentPolynomial


def c3_group():
    """Rotation subgroup of the standard order-6 action: not a reflection group."""
    return generate_group([[[0, -1], [1, -1]]], [(4, 2)], name="c3")


def trivial_group(blocks=((2, 1),)):
    return generate_group([], blocks, name="trivial")


# -- enumeration ----------------------------------------------------------------


def test_negation_generates_order_two(c2_group):
    assert c2_group.order == 2


def test_empty_generators_give_trivial_group():
    assert trivial_group().order == 1


def test_standard_action_has_order_six(sigma3_group):
    assert sigma3_group.order == 6
    dets = sorted(linalg.determinant(m) for m in sigma3_group.elements)
    assert dets == [-1, -1, -1, 1, 1, 1]


def test_cap_exceeded_for_infinite_group():
    with pytest.raises(OrderCapExceeded):
        generate_group([[[2]]], [(2, 1)], cap=50)


def test_cap_smaller_than_group():
    with pytest.raises(OrderCapExceeded):
        generate_group([[[-1, 1], [0, 1]], [[1, 0], [1, -1]]], [(4, 2)], cap=4)


def test_generator_validation():
    with pytest.raises(ValueError):
        generate_group([[[1, 0]]], [(2, 1)])  # not square of total dimension
    with pytest.raises(ValueError):
        generate_group([[[0]]], [(2, 1)])  # singular
    with pytest.raises(ValueError):
        # off-block entry between two one-dimensional blocks
        generate_group([[[1, 1], [0, 1]]], [(2, 1), (4, 1)])


def test_group_axioms(sigma3_group):
    elements = set(sigma3_group.elements)
    ident = linalg.identity(2)
    assert ident in elements
    for a in elements:
        assert linalg.inverse(a) in elements
        for b in elements:
            assert linalg.mat_mul(a, b) in elements


def test_class_sizes_divide_order(sigma3_group, all_group_fixtures):
    for group in [sigma3_group, *all_group_fixtures.values()]:
        for cls in conjugacy_classes(group):
            assert group.order % len(cls) == 0


# -- conjugacy classes ------------------------------------------------------------


def test_classes_of_order_two_group(c2_group):
    assert [len(c) for c in conjugacy_classes(c2_group)] == [1, 1]


def test_classes_of_trivial_group():
    assert conjugacy_classes(trivial_group()) == ((0,),)


def test_classes_of_standard_action(sigma3_group):
    classes = conjugacy_classes(sigma3_group)
    assert [len(c) for c in classes] == [1, 3, 2]
    # brute-force cross-check of the partition
    index = {m: i for i, m in enumerate(sigma3_group.elements)}
    for cls in classes:
        for i in cls:
            x = sigma3_group.elements[i]
            orbit = {
                index[linalg.mat_mul(linalg.mat_mul(h, x), linalg.inverse(h))]
                for h in sigma3_group.elements
            }
            assert orbit == set(cls)


def test_class_representatives_sorted_by_element_order(sigma3_group):
    reps = class_representatives(sigma3_group)
    orders = [element_order(sigma3_group.elements[i], 6) for i in reps]
    assert orders == [1, 2, 3]


# -- Molien series ------------------------------------------------------------------


def test_molien_of_standard_action(sigma3_group):
    report = molien_series(sigma3_group)
    assert report.series == HilbertSeries.inverse_product([8, 12])
    string = [int(c) for c in report.series.expand(0, 68)][::4]
    assert string == [1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2, 3, 3, 3, 3]
    assert report.polynomial_degrees == (8, 12)
    assert report.pseudoreflection_count == 3


def test_molien_of_trivial_group_is_whole_ring():
    report = molien_series(trivial_group(((2, 1),)))
    assert report.series == HilbertSeries.inverse_product([2])


def test_molien_of_negation(c2_group):
    report = molien_series(c2_group)
    assert report.series == HilbertSeries.inverse_product([4])
    assert report.polynomial_degrees == (4,)
    assert report.pseudoreflection_count == 1


def test_det_twisted_molien_of_negation(c2_group):
    report = molien_series(c2_group, "det")
    assert report.series == HilbertSeries(LaurentPolynomial.monomial(2), [4])


def test_twisted_molien_coefficients_are_nonnegative_integers(sigma3_group):
    for twist in ("trivial", "det"):
        series = molien_series(sigma3_group, twist).series
        for c in series.expand(0, 60):
            assert c.denominator == 1 and c >= 0


def test_named_twist_counts_isotypic_multiplicities(sigma3_group, sigma3_table):
    report = molien_series(sigma3_group, "std", table=sigma3_table)
    got = [int(c) for c in report.series.expand(0, 20)][::4]
    expected = []
    for n in range(6):
        mults = decompose(sym_power_character(sigma3_group, n), sigma3_table)
        expected.append(mults[2])
    assert got == expected


def test_named_twist_requires_table(sigma3_group):
    with pytest.raises(ValueError):
        molien_series(sigma3_group, "std")


def test_molien_of_rotation_subgroup_is_hypersurface():
    report = molien_series(c3_group())
    expected = HilbertSeries(LaurentPolynomial({0: 1, 12: 1}), [8, 12])
    assert report.series == expected
    assert report.polynomial_degrees is None
    assert report.pseudoreflection_count == 0


def test_molien_of_atkin_lehner_actions(all_group_fixtures):
    alpha = molien_series(all_group_fixtures["taf_d6_alpha"])
    assert alpha.series == HilbertSeries.inverse_product([8, 24, 24])
    beta = molien_series(all_group_fixtures["taf_d6_beta"])
    assert beta.series == HilbertSeries.inverse_product([8, 12, 48])
    both = molien_series(all_group_fixtures["taf_d6_alphabeta"])
    expected = HilbertSeries(LaurentPolynomial({0: 1, 44: 1}), [16, 24, 48])
    assert both.series == expected
    assert both.polynomial_degrees is None


def test_pseudoreflection_degree_relation(c2_group, sigma3_group):
    # uniform generator degree d: reflections = sum(e_i/d - 1)
    for group in (c2_group, sigma3_group):
        report = molien_series(group)
        d = group.blocks[0][0]
        assert report.pseudoreflection_count == sum(
            e // d - 1 for e in report.polynomial_degrees
        )


# -- degree extraction ----------------------------------------------------------------


def test_extract_degrees_of_standard_invariants():
    assert extract_polynomial_degrees(HilbertSeries.inverse_product([8, 12]), 2) == (8, 12)


def test_extract_single_degree():
    assert extract_polynomial_degrees(HilbertSeries.inverse_product([4]), 1) == (4,)


def test_extract_rejects_non_polynomial():
    series = HilbertSeries(LaurentPolynomial({0: 1, 3: 1}), [2, 4])
    with pytest.raises(NotPolynomial):
        extract_polynomial_degrees(series, 2)


def test_extract_rejects_wrong_rank():
    with pytest.raises(NotPolynomial):
        extract_polynomial_degrees(HilbertSeries.inverse_product([8, 12]), 1)


def test_extract_handles_repeated_degrees():
    assert extract_polynomial_degrees(HilbertSeries.inverse_product([2, 2, 2]), 3) == (2, 2, 2)


def test_extraction_reconstructs_input(sigma3_group, c2_group, all_group_fixtures):
    for group in (sigma3_group, c2_group, all_group_fixtures["taf_d6_alpha"]):
        report = molien_series(group)
        degrees = report.polynomial_degrees
        assert HilbertSeries.inverse_product(degrees) == report.series


# -- Solomon supplement -----------------------------------------------------------------


def test_supplement_examples():
    assert solomon_supplement([2], [4]) == -2
    assert solomon_supplement([4, 4], [8, 12]) == -12
    assert solomon_supplement([6, 8], [6, 8]) == 0


def test_supplement_length_mismatch():
    with pytest.raises(LengthMismatch):
        solomon_supplement([2, 4], [4])


def test_solomon_verification_for_negation(c2_group):
    result = verify_solomon(c2_group)
    assert result.verified
    assert result.supplement == -2
    assert result.det_twisted_series == HilbertSeries(LaurentPolynomial.monomial(2), [4])


def test_solomon_verification_for_standard_action(sigma3_group):
    result = verify_solomon(sigma3_group)
    assert result.verified
    assert result.supplement == -12
    assert result.det_twisted_series == result.invariant_series.shifted(12)


def test_solomon_verification_for_trivial_group():
    result = verify_solomon(trivial_group(((2, 1),)))
    assert result.verified and result.supplement == 0


def test_solomon_needs_polynomial_invariants():
    with pytest.raises(NotPolynomial):
        verify_solomon(c3_group())


# -- symmetric powers and decomposition ----------------------------------------------------


def test_sym_power_zero_is_trivial(sigma3_group):
    assert sym_power_character(sigma3_group, 0) == (1, 1, 1)


def test_sym_power_one_is_the_representation(sigma3_group):
    reps = class_representatives(sigma3_group)
    traces = tuple(linalg.trace(sigma3_group.elements[i]) for i in reps)
    assert sym_power_character(sigma3_group, 1) == traces
    assert sym_power_character(sigma3_group, 1) == (2, 0, -1)


def test_sym_power_two_by_brute_force(sigma3_group):
    # induced action on the three quadratic monomials
    values = []
    for rep in class_representatives(sigma3_group):
        m = sigma3_group.elements[rep]
        basis = monomials_of_degree((4, 4), 8)
        total = Fraction(0)
        from gorenstein_kit.invariants import _apply_element

        for expvec in basis:
            total += _apply_element(m, expvec).get(expvec, Fraction(0))
        values.append(total)
    assert tuple(values) == sym_power_character(sigma3_group, 2)
    assert tuple(values) == (3, 1, 0)


def test_decomposition_sequence(sigma3_group, sigma3_table):
    expected = [(1, 0, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1), (1, 0, 2), (1, 1, 2)]
    got = [
        decompose(sym_power_character(sigma3_group, n), sigma3_table) for n in range(6)
    ]
    assert got == expected


def test_decomposition_period_six_adds_regular_representation(sigma3_group, sigma3_table):
    # dim Sym^{n+6} - dim Sym^n = 6 = 1 + 1 + 2*2, one regular representation
    for n in range(19):
        low = decompose(sym_power_character(sigma3_group, n), sigma3_table)
        high = decompose(sym_power_character(sigma3_group, n + 6), sigma3_table)
        assert high == (low[0] + 1, low[1] + 1, low[2] + 2)


def test_invariant_multiplicity_is_one_periodic(sigma3_group, sigma3_table):
    # the invariant-dimension string 101111212222... repeats with +1 per period
    for n in range(19):
        low = decompose(sym_power_character(sigma3_group, n), sigma3_table)
        high = decompose(sym_power_character(sigma3_group, n + 6), sigma3_table)
        assert high[0] == low[0] + 1


def test_decomposition_reproduces_dimensions(sigma3_group, sigma3_table):
    dims = {name: chi[0] for name, chi in sigma3_table.irreducibles}
    for n in range(12):
        mults = decompose(sym_power_character(sigma3_group, n), sigma3_table)
        total = sum(m * dims[name] for m, name in zip(mults, sigma3_table.names))
        assert total == n + 1  # dim Sym^n of a 2-dimensional space


def test_trivial_class_function_decomposes_as_unit(sigma3_table, c2_table):
    assert decompose((1, 1, 1), sigma3_table) == (1, 0, 0)
    assert decompose((1, 1), c2_table) == (1, 0)


def test_non_character_raises(sigma3_table):
    with pytest.raises(NonIntegralMultiplicity):
        decompose((1, 0, 0), sigma3_table)


def test_decompose_length_mismatch(sigma3_table):
    with pytest.raises(LengthMismatch):
        decompose((1, 1), sigma3_table)


# -- character tables --------------------------------------------------------------------


def test_builtin_tables(c2_group, sigma3_group, all_group_fixtures):
    assert builtin_character_table(c2_group).names == ("triv", "sign")
    assert builtin_character_table(sigma3_group).names == ("triv", "sign", "std")
    klein = builtin_character_table(all_group_fixtures["taf_d6_alphabeta"])
    assert klein.names == ("triv", "chi1", "chi2", "chi3")
    assert builtin_character_table(trivial_group()).names == ("triv",)


def test_no_builtin_table_for_rotation_group():
    with pytest.raises(NoBuiltinCharacterTable):
        builtin_character_table(c3_group())


def test_character_table_rejects_non_orthogonal_rows(sigma3_group):
    with pytest.raises(ValueError):
        character_table(sigma3_group, [("bad", (1, 1, 0))])


def test_character_table_rejects_wrong_length(sigma3_group):
    with pytest.raises(ValueError):
        character_table(sigma3_group, [("triv", (1, 1))])


def test_character_table_orthogonality_invariant(sigma3_table):
    order = sigma3_table.group_order
    assert order == 6
    for i, (_, chi_i) in enumerate(sigma3_table.irreducibles):
        for j, (_, chi_j) in enumerate(sigma3_table.irreducibles):
            inner = sum(
                Fraction(s) * a * b
                for s, a, b in zip(sigma3_table.class_sizes, chi_i, chi_j)
            ) / order
            assert inner == (1 if i == j else 0)


# -- explicit invariants --------------------------------------------------------------------


def scalar_multiple(p, q):
    """The scalar c with p = c*q, or None."""
    if p.keys() != q.keys():
        return None
    ratios = {p[e] / q[e] for e in p}
    return ratios.pop() if len(ratios) == 1 else None


def test_degree_zero_invariants_are_constants(sigma3_group):
    basis = invariant_basis(sigma3_group, 0)
    assert basis == [{(0, 0): Fraction(1)}]


def test_quadratic_invariant_of_standard_action(sigma3_group):
    basis = invariant_basis(sigma3_group, 8)
    assert len(basis) == 1
    expected = {(2, 0): Fraction(1), (1, 1): Fraction(1), (0, 2): Fraction(1)}
    assert scalar_multiple(basis[0], expected) is not None


def test_cubic_invariant_of_standard_action(sigma3_group):
    # hand computation of the averaging operator on x^2 y gives
    # x^3 + (3/2) x^2 y - (3/2) x y^2 - y^3, spanning the degree-12 invariants
    basis = invariant_basis(sigma3_group, 12)
    assert len(basis) == 1
    expected = {
        (3, 0): Fraction(1),
        (2, 1): Fraction(3, 2),
        (1, 2): Fraction(-3, 2),
        (0, 3): Fraction(-1),
    }
    assert scalar_multiple(basis[0], expected) is not None


def test_invariant_dimensions_match_molien(c2_group, sigma3_group, all_group_fixtures):
    for group in (c2_group, sigma3_group, all_group_fixtures["taf_d6_alphabeta"]):
        series = molien_series(group).series
        for degree in range(0, 30):
            expected = series.coefficient(degree)
            assert len(invariant_basis(group, degree)) == expected


def test_monomial_bound(sigma3_group):
    with pytest.raises(MonomialBoundExceeded):
        invariant_basis(sigma3_group, 40, monomial_bound=2)


def test_off_grading_degree_has_no_monomials(sigma3_group):
    assert invariant_basis(sigma3_group, 6) == []


def test_format_polynomial():
    poly = {(2, 0): Fraction(1), (1, 1): Fraction(3, 2), (0, 2): Fraction(-1)}
    assert format_polynomial(poly, ["x", "y"]) == "x^2 + (3/2)*x*y - y^2"
    assert format_polynomial({}, ["x"]) == "0"
    assert format_polynomial({(0,): Fraction(5)}, ["x"]) == "5"


def test_float_matrix_entries_are_rejected():
    with pytest.raises(TypeError):
        generate_group([[[0.5]]], [(2, 1)])


def test_float_character_values_are_rejected(sigma3_group):
    with pytest.raises(TypeError):
        character_table(sigma3_group, [("triv", (1.0, 1, 1))])
