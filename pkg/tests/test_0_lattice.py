from random import Random

from pytest import raises

import config
from models.errors import DimensionError
from models.lattice import Isometry, SignedPermutation, check_dimension
from utils import lattice


class Tests:
    def test_signed_permutation(self):
        with raises(ValueError):
            SignedPermutation((0, 0))
        with raises(ValueError):
            SignedPermutation((1, 0), (1, 2))

        swap = SignedPermutation((1, 0), (1, -1))
        assert swap.apply((3, 5)) == (-5, 3)
        assert swap.matrix() == [[0, -1], [1, 0]]
        assert swap.then(swap.inverse()).is_identity()
        assert not swap.is_identity()

    def test_dimensions(self):
        with raises(DimensionError):
            check_dimension((1, 2), (1,))
        with raises(DimensionError):
            Isometry((0, 0), SignedPermutation((0,)))
        with raises(TypeError):
            Isometry((0, 0), (1, 0))

    def test_compose_order(self):
        shift = Isometry.translation((1, 0))
        turn = Isometry((0, 0), SignedPermutation((1, 0)))
        # shift first, then turn
        assert lattice.apply(lattice.compose(shift, turn), (0, 0)) == (0, 1)
        assert lattice.apply(lattice.compose(turn, shift), (0, 0)) == (1, 0)

    def test_random_isometries(self):
        rng = Random(config.DEFAULT_SEED)
        for _ in range(50):
            dimension = rng.randint(1, 4)
            a = lattice.random_isometry(rng, dimension)
            b = lattice.random_isometry(rng, dimension)
            point = tuple(rng.randint(-9, 9) for _ in range(dimension))
            assert lattice.apply(lattice.compose(a, b), point) == lattice.apply(b, lattice.apply(a, point))
            assert lattice.apply(lattice.invert(a), lattice.apply(a, point)) == point
            assert lattice.compose(a, lattice.invert(a)).is_identity()

    def test_fixed_points(self):
        assert lattice.fixed_point_data(Isometry.identity(2)).Kind == "all"
        assert lattice.fixed_point_data(Isometry.translation((1, 0))).Kind == "empty"

        reflection = lattice.fixed_point_data(Isometry((0, 0), SignedPermutation((1, 0))))
        assert reflection.Kind == "affine"
        assert reflection.Basis == [(1, 1)]
        assert not reflection.AxisParallel

        # x -> -x + 4 fixes 2 only
        flip = lattice.fixed_point_data(Isometry((4,), SignedPermutation((0,), (-1,))))
        assert flip.Kind == "affine"
        assert flip.Particular == (2,)
        assert flip.Basis == []
