from random import Random

from pytest import raises

import config
from models.errors import PreconditionError
from models.germ import Germ
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils import germs


def random_set(rng: Random, dimension: int, count: int) -> OrthohedralSet:
    result = OrthohedralSet(dimension)
    for _ in range(count):
        base = tuple(rng.randint(-3, 3) for _ in range(dimension))
        direction = tuple(rng.choice((0, 1, -1)) for _ in range(dimension))
        result = result | OrthohedralSet(dimension, [Orthant(base, direction)])
    return result


class Tests:
    def test_germ(self):
        germ = germs.germ_of(Orthant((3, 7), (1, 0)))
        assert germ == Germ((1, 0), (None, 7))
        assert str(germ) == "G dir=(+,0) frozen={2:7}"
        assert germ.Axes == (0,)
        assert germ.in_coset((-10, 7))
        assert not germ.in_coset((-10, 6))
        with raises(ValueError):
            Germ((1, 0), (1, 7))

    def test_commensurable(self):
        assert germs.commensurable(Orthant((0, 0), (1, 1)), Orthant((5, -3), (1, 1)))
        assert not germs.commensurable(Orthant((0, 0), (1, 0)), Orthant((0, 1), (1, 0)))
        assert not germs.commensurable(Orthant((0, 0), (1, 1)), Orthant((0, 0), (1, 0)))
        assert germs.germ_of(Orthant((0, 0), (1, 1))) == germs.germ_of(Orthant((5, -3), (1, 1)))

    def test_germs_of(self):
        src = OrthohedralSet(2, [Orthant((0, 0), (1, 0)), Orthant((2, 1), (1, 0)), Orthant((0, 5), (0, 0))])
        assert germs.germs_of(src, rank=1) == [Germ((1, 0), (None, 0)), Germ((1, 0), (None, 1))]
        assert len(germs.germs_of(src)) == 3
        assert len(germs.max_germs(src)) == 3

        upper = Germ((1, 0), (None, 1))
        assert germs.represents(src, upper)
        assert not germs.represents(src, Germ((-1, 0), (None, 0)))
        assert germs.representative(src, upper, 2) == Orthant((4, 1), (1, 0))
        with raises(PreconditionError):
            germs.representative(src, Germ((0, 1), (3, None)))

    def test_germ_order(self):
        ray = Germ((1, 0, 0), (None, 0, 0))
        plane = Germ((1, 1, 0), (None, None, 0))
        assert germs.germ_leq(ray, plane)
        assert not germs.germ_leq(plane, ray)
        assert not germs.germ_leq(Germ((1, 0, 0), (None, 0, 1)), plane)

        src = OrthohedralSet(3, [Orthant((0, 0, 0), (1, 1, 0)), Orthant((0, -1, 0), (1, 0, 0))])
        assert germs.max_germs(src) == [plane]

    def test_partial_order(self):
        rng = Random(config.DEFAULT_SEED)
        candidates = []
        for _ in range(40):
            direction = tuple(rng.choice((0, 1, -1)) for _ in range(3))
            candidates.append(Germ(direction, tuple(None if d else rng.randint(0, 1) for d in direction)))
        for first in candidates:
            assert germs.germ_leq(first, first)
            for second in candidates:
                if germs.germ_leq(first, second) and germs.germ_leq(second, first):
                    assert first == second
                for third in candidates:
                    if germs.germ_leq(first, second) and germs.germ_leq(second, third):
                        assert germs.germ_leq(first, third)

    def test_convexity(self):
        rng = Random(config.DEFAULT_SEED)
        for _ in range(20):
            src = random_set(rng, 3, 3)
            for piece in src.Pieces:
                kept = [axis for axis in piece.Axes if rng.random() < 0.5]
                frozen = tuple(None if axis in kept else
                               piece.Base[axis] + piece.Dir[axis] * rng.randint(0, 3) for axis in range(3))
                lower = Germ(tuple(piece.Dir[axis] if axis in kept else 0 for axis in range(3)), frozen)
                assert germs.germ_leq(lower, germs.germ_of(piece))
                assert lower.meets(piece)
                assert germs.piece_carries(piece, lower)
                found = germs.representative(src, lower, rng.randint(0, 2))
                assert germs.germ_of(found) == lower
                assert (OrthohedralSet(3, [found]) - OrthohedralSet(3, [piece])).is_empty()
