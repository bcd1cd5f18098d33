from itertools import product
from random import Random

from pytest import raises

import config
from models.errors import DimensionError, ValidationError
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils import orthoset


def random_set(rng: Random, dimension: int, count: int) -> OrthohedralSet:
    result = OrthohedralSet(dimension)
    for _ in range(count):
        base = tuple(rng.randint(-3, 3) for _ in range(dimension))
        direction = tuple(rng.choice((0, 1, -1)) for _ in range(dimension))
        result = result | OrthohedralSet(dimension, [Orthant(base, direction)])
    return result


def sample_points(dimension: int) -> list[tuple]:
    box = list(product(range(-5, 6), repeat=dimension))
    depth = config.TAIL_DEPTH
    tails = list(product((-depth, 0, depth), repeat=dimension))
    return box + tails


def layers(count: int) -> list[Orthant]:
    return [Orthant((0, 0, height), (1, 1, 0)) for height in range(count)]


class Tests:
    def test_orthant(self):
        orthant = Orthant((0, -1), (1, -1))
        assert str(orthant) == "O base=(0,-1) dir=(+,-)"
        assert (5, -7) in orthant
        assert (5, 0) not in orthant
        assert orthant.Rank == 2
        assert orthant.push(2) == Orthant((2, -3), (1, -1))
        assert orthant.face(1) == Orthant((0, -1), (1, 0))
        assert orthant.indicator() == Orthant((0, 0), (1, -1))
        with raises(ValueError):
            Orthant((0, 0), (1, 2))

    def test_intersect_and_difference(self):
        quadrant = Orthant((0, 0), (1, 1))
        assert quadrant.intersect(Orthant((2, -5), (0, 1))) == [Orthant((2, 0), (0, 1))]
        assert quadrant.intersect(Orthant((-1, 0), (-1, 1))) == []
        ray = Orthant((0,), (1,))
        assert ray.difference(Orthant((2,), (1,))) == [Orthant((0,), (0,)), Orthant((1,), (0,))]

    def test_validation(self):
        with raises(ValidationError):
            OrthohedralSet(1, [Orthant((0,), (1,)), Orthant((5,), (0,))])
        with raises(DimensionError):
            OrthohedralSet(2, [Orthant((0,), (1,))])
        with raises(DimensionError):
            OrthohedralSet(1) | OrthohedralSet(2)

    def test_equality_ignores_decomposition(self):
        whole = OrthohedralSet(1, [Orthant((0,), (1,))])
        split = OrthohedralSet(1, [Orthant((0,), (0,)), Orthant((1,), (1,))])
        assert whole == split
        assert orthoset.tidy(split).Pieces == [Orthant((0,), (1,))]
        assert whole != OrthohedralSet(1, [Orthant((1,), (1,))])

    def test_rank_and_height(self):
        assert orthoset.rank_height(OrthohedralSet.whole(2)) == (2, 4)
        assert orthoset.rank_height(OrthohedralSet(3)) == (None, 0)
        stack = OrthohedralSet(3, layers(3) + [Orthant((0, 0, -4), (1, 0, 0))])
        assert orthoset.rank_height(stack) == (2, 3)
        assert stack.height_at(2) == 3
        assert stack.height_at(1) == 0

    def test_complement(self):
        assert orthoset.complement(OrthohedralSet.whole(2)).is_empty()
        quadrant = OrthohedralSet(2, [Orthant((0, 0), (1, 1))])
        rest = orthoset.complement(quadrant)
        assert (rest | quadrant) == OrthohedralSet.whole(2)
        assert (rest & quadrant).is_empty()
        assert orthoset.rank_height(rest) == (2, 3)

    def test_boolean_operations(self):
        rng = Random(config.DEFAULT_SEED)
        for dimension in (1, 2):
            points = sample_points(dimension)
            for _ in range(15):
                first = random_set(rng, dimension, 3)
                second = random_set(rng, dimension, 3)
                union = orthoset.combine(first, second, "union")
                meet = orthoset.combine(first, second, "intersect")
                rest = orthoset.combine(first, second, "difference")
                outside = orthoset.complement(first)
                for point in points:
                    a, b = point in first, point in second
                    assert (point in union) == (a or b)
                    assert (point in meet) == (a and b)
                    assert (point in rest) == (a and not b)
                    assert (point in outside) == (not a)

    def test_indicator_data(self):
        stack = OrthohedralSet(3, layers(2))
        heights, support, quasi_normal = orthoset.indicator_data(stack)
        assert heights == {Orthant((0, 0, 0), (1, 1, 0)): 2}
        assert support == [Orthant((0, 0, 0), (1, 1, 0))]
        assert quasi_normal
        assert len(orthoset.indicator_orthants(3)) == 27

    def test_skeleton_profile(self):
        assert orthoset.skeleton_profile(OrthohedralSet(3, layers(3))) == (3, 2, 2)
        octant = Orthant((0, 0, 0), (1, 1, 1))
        assert orthoset.skeleton_profile(orthoset.skeleton(octant, 2)) == (1, 3, 2)
        assert orthoset.skeleton_profile(OrthohedralSet.whole(2)) is None
        assert orthoset.skeleton(octant, 1).Rank == 1

    def test_order_preserving(self):
        source = Orthant((0, 0), (1, 0))
        target = Orthant((5, 5), (0, -1))
        assert source.image(orthoset.order_preserving(source, target)) == target
        with raises(ValueError):
            orthoset.order_preserving(source, Orthant((0, 0), (1, 1)))

    def test_de_morgan(self):
        rng = Random(config.DEFAULT_SEED)
        for dimension in (1, 2, 3):
            for _ in range(10):
                first = random_set(rng, dimension, 3)
                second = random_set(rng, dimension, 3)
                outside, other = orthoset.complement(first), orthoset.complement(second)
                assert orthoset.complement(first | second) == (outside & other)
                assert orthoset.complement(first & second) == (outside | other)
                assert orthoset.complement(outside) == first

    def test_indicator_count(self):
        for dimension in range(1, 5):
            indicators = orthoset.indicator_orthants(dimension)
            assert len(indicators) == len(set(indicators)) == 3 ** dimension

    def test_not_quasi_normal(self):
        src = OrthohedralSet(2, [Orthant((0, 0), (1, 0)), Orthant((0, 1), (0, 0))])
        heights, support, quasi_normal = orthoset.indicator_data(src)
        assert heights == {Orthant((0, 0), (0, 0)): 1, Orthant((0, 0), (1, 0)): 1}
        assert len(support) == 2
        assert not quasi_normal
