"""
Tests for skew Schur functions at repeated evaluation points and their
reciprocity s_{lambda/mu}(z^-n) = (-1)^{|lambda/mu|} s_{lambda^t/mu^t}(z_rev^n).
"""
import itertools
import sys
from fractions import Fraction
from math import comb, factorial, prod

import pytest

sys.path.append('.')

from pathrecip.core.errors import CapacityError, DimensionError, ShapeError
from pathrecip.core.exact import SubsetIndex
from pathrecip.data.reciprocity import reciprocity_engine
from pathrecip.apps.partitions import Partition, SkewShape, staircase
from pathrecip.apps.schur import (
    EvalPoint,
    Tableau,
    build_schur_network,
    check_schur_reciprocity,
    elementary_eval,
    homogeneous_eval,
    hook_content,
    interpolate,
    omega_power_sum_sign,
    power_sum_direct,
    power_sum_eval,
    schur_boundary_subsets,
    schur_eval,
    schur_eval_polynomial,
    ssyt_enumerate,
    ssyt_weighted_sum,
)

POINTS = [EvalPoint.of(1), EvalPoint.of(1, 1), EvalPoint.of(1, "1/2"), EvalPoint.of(2, 3, "1/5")]


def partitions(size: int, max_part=None):
    """Partitions of exactly ``size``, largest part first."""
    if size == 0:
        yield ()
        return
    max_part = size if max_part is None else max_part
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, first):
            yield (first,) + rest


def skew_shapes(max_size: int):
    outers = [Partition(p) for s in range(1, max_size + 1) for p in partitions(s)]
    for outer in outers:
        for s in range(outer.size):
            for inner in partitions(s):
                if outer.contains(Partition(inner)):
                    yield SkewShape(outer, Partition(inner))


def complete_homogeneous(d: int, values) -> Fraction:
    if d < 0:
        return Fraction(0)
    return sum(
        (prod(c, start=Fraction(1)) for c in itertools.combinations_with_replacement(values, d)),
        Fraction(0),
    )


def test_partition_basics():
    lam = Partition((3, 2, 2, 0))
    assert lam.parts == (3, 2, 2)
    assert lam.transpose() == Partition((3, 3, 1))
    assert lam.transpose().transpose() == lam
    assert lam.hook_length(1, 1) == 5
    assert str(lam) == "(3,2,2)"
    assert Partition.parse("") == Partition()
    assert staircase(4) == Partition((3, 2, 1))
    with pytest.raises(ShapeError):
        Partition((1, 2))
    with pytest.raises(ShapeError):
        Partition.parse("3,x")
    with pytest.raises(ShapeError):
        SkewShape.of((2, 1), (3,))
    shape = SkewShape.of((3, 2, 2), (1, 1))
    assert shape.size == 5
    assert shape.transpose() == SkewShape.of((3, 3, 1), (2,))
    assert list(shape.cells())[:3] == [(1, 2), (1, 3), (2, 2)]
    assert str(shape) == "(3,2,2)/(1,1)"


def test_eval_point():
    z = EvalPoint.parse("1, 1/2")
    assert z.values == (1, Fraction(1, 2))
    assert z.reversed().values == (Fraction(1, 2), 1)
    assert z.repeated(2).values == (1, Fraction(1, 2), 1, Fraction(1, 2))
    assert z.repeated(0).k == 0
    assert str(z) == "(1,1/2)"
    with pytest.raises(DimensionError):
        z.repeated(-1)


def test_schur_network_path_matrix():
    net = build_schur_network(Partition((1,)), 1).instantiate(EvalPoint.of(2))
    assert net.path_matrix().to_rows() == [[1, 2], [0, 1]]

    z = EvalPoint.of(1, "1/2")
    template = build_schur_network(Partition((2, 1)), 2)
    assert template.tracks == 4
    p = template.instantiate(z).path_matrix()
    for i in range(4):
        for j in range(4):
            assert p[i, j] == complete_homogeneous(j - i, z.values)
    assert p[0, 2] == Fraction(7, 4)

    with pytest.raises(DimensionError):
        template.instantiate(EvalPoint.of(1))
    with pytest.raises(DimensionError):
        build_schur_network(Partition((1,)), 0)


def test_boundary_subsets():
    sources, sinks = schur_boundary_subsets(SkewShape.of((3, 2, 2), (1, 1)))
    assert sources == SubsetIndex.of([1, 3, 4], 6)
    assert sinks == SubsetIndex.of([3, 4, 6], 6)
    sources, sinks = schur_boundary_subsets(SkewShape.of((3, 3, 2), (1, 1)))
    assert (sources.elements, sinks.elements) == ((1, 3, 4), (3, 5, 6))


def test_schur_eval_examples():
    one = EvalPoint.of(1)
    assert [schur_eval(SkewShape.of((1,)), one, n) for n in range(4)] == [0, 1, 2, 3]
    assert schur_eval(SkewShape.of((1,)), one, -3) == -3
    assert schur_eval(SkewShape.of((2,)), one, 4) == comb(5, 2)
    assert schur_eval(SkewShape.of((1, 1)), one, 4) == comb(4, 2)
    assert schur_eval(SkewShape.of((2,)), one, -4) == comb(4, 2)
    assert schur_eval(SkewShape.of((2, 1)), EvalPoint.of(1, 1, 1), 1) == 8
    assert schur_eval(SkewShape.of(()), one, -2) == 1
    assert schur_eval(SkewShape.of((2, 1), (2, 1)), one, 3) == 1
    assert schur_eval(SkewShape.of((1,)), EvalPoint(), 3) == 0
    # s_{(2,1)/(1)} = h_1^2, so at (1,1/2) it is (3/2)^2
    assert schur_eval(SkewShape.of((2, 1), (1,)), EvalPoint.of(1, "1/2"), 1) == Fraction(9, 4)


def test_ssyt_enumeration():
    assert len(ssyt_enumerate(SkewShape.of((2,)), 2)) == 3
    assert len(ssyt_enumerate(SkewShape.of((2, 1)), 3)) == 8
    assert len(ssyt_enumerate(SkewShape.of((1, 1, 1)), 2)) == 0
    assert [t.rows for t in ssyt_enumerate(SkewShape.of((2, 1)), 2)] == [((1, 1), (2,)), ((1, 2), (2,))]
    assert ssyt_weighted_sum(SkewShape.of((1,)), [2, 3]) == 5
    with pytest.raises(CapacityError, match="fillings"):
        ssyt_enumerate(SkewShape.of((3, 3)), 9, capacity=10)
    with pytest.raises(ShapeError):
        Tableau(SkewShape.of((2, 1)), ((1, 1), (1,)))
    with pytest.raises(ShapeError):
        Tableau(SkewShape.of((2, 1)), ((2, 1), (3,)))


def test_elementary_and_homogeneous():
    one = EvalPoint.of(1)
    for n in range(7):
        for m in range(7):
            assert elementary_eval(m, one, n) == comb(n, m)
    for n in range(1, 7):
        for m in range(7):
            assert homogeneous_eval(m, one, n) == comb(n + m - 1, m)
    assert homogeneous_eval(2, EvalPoint.of(1, "1/2"), 1) == Fraction(7, 4)
    with pytest.raises(DimensionError):
        elementary_eval(-1, one, 2)


@pytest.mark.parametrize("m", range(7))
def test_binomial_reciprocity(m):
    one = EvalPoint.of(1)
    for n in range(1, 7):
        # C(-n, m) = (-1)^m C(n+m-1, m)
        falling = prod((Fraction(-n - t) for t in range(m)), start=Fraction(1))
        assert elementary_eval(m, one, -n) == falling / factorial(m)
        assert elementary_eval(m, one, -n) == (-1) ** m * comb(n + m - 1, m)


@pytest.mark.parametrize("z", POINTS, ids=str)
def test_schur_reciprocity(z):
    for shape in skew_shapes(5):
        report = check_schur_reciprocity(shape, z, 4)
        assert report.passed, (str(shape), report.model_dump())


@pytest.mark.parametrize("z", [EvalPoint.of(1), EvalPoint.of(1, "1/2")], ids=str)
def test_network_count_matches_tableaux(z):
    for shape in skew_shapes(5):
        for n in range(4):
            assert schur_eval(shape, z, n) == ssyt_weighted_sum(shape, z.repeated(n).values)


def test_tableau_sum_is_symmetric():
    values = (Fraction(1), Fraction(2), Fraction(1, 3))
    for shape in skew_shapes(3):
        sums = {ssyt_weighted_sum(shape, perm) for perm in itertools.permutations(values)}
        assert len(sums) == 1


@pytest.mark.parametrize("n", [-2, -1, 1, 2])
def test_schur_eval_is_symmetric_in_z(n):
    values = (Fraction(2), Fraction(3), Fraction(1, 5))
    for shape in skew_shapes(4):
        results = {schur_eval(shape, EvalPoint(perm), n) for perm in itertools.permutations(values)}
        assert len(results) == 1, (str(shape), n)


@pytest.mark.parametrize("z", [EvalPoint.of(1, "1/2"), EvalPoint.of(2, 3, "1/5")], ids=str)
def test_complementary_subsets_give_the_transpose(z):
    for shape in skew_shapes(4):
        net = build_schur_network(shape.outer, z.k).instantiate(z)
        sources, sinks = schur_boundary_subsets(shape)
        for n in range(3):
            complementary = reciprocity_engine.f_value(net, sinks.complement(), sources.complement(), n)
            assert complementary == schur_eval(shape.transpose(), z.reversed(), n)


@pytest.mark.parametrize("z", POINTS[1:3], ids=str)
def test_polynomial_in_n(z):
    for shape in skew_shapes(4):
        poly = schur_eval_polynomial(shape, z)
        assert poly.degree <= shape.size
        for n in range(-3, 7):
            assert poly(n) == schur_eval(shape, z, n)


def test_interpolate():
    assert interpolate([(0, Fraction(0)), (1, Fraction(1)), (2, Fraction(4))]).coefficients == (0, 0, 1)
    assert interpolate([(3, Fraction(5))]).coefficients == (5,)


def test_hook_content():
    one = EvalPoint.of(1)
    for size in range(1, 6):
        for parts in partitions(size):
            lam = Partition(parts)
            for n in range(-3, 7):
                assert schur_eval(SkewShape(lam), one, n) == hook_content(lam, n)


def test_power_sums():
    z = EvalPoint.of(2, "1/3")
    for size in range(1, 5):
        for parts in partitions(size):
            rho = Partition(parts)
            for n in range(4):
                assert power_sum_eval(rho, z, n) == power_sum_direct(rho, z, n)
            # p_rho(z^-n) = (-1)^|rho| (omega p_rho)(z^n)
            for n in range(1, 4):
                expected = (-1) ** rho.size * omega_power_sum_sign(rho) * power_sum_direct(rho, z, n)
                assert power_sum_eval(rho, z, -n) == expected
    assert omega_power_sum_sign(Partition((2,))) == -1
    assert omega_power_sum_sign(Partition((1, 1))) == 1
    assert power_sum_eval(Partition((2,)), z, 3) == 3 * (4 + Fraction(1, 9))
