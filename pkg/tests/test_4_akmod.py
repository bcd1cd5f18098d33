from random import Random

from pytest import raises

import config
from models.errors import BudgetError, PreconditionError, ValidationError
from models.germ import Germ
from models.germmatrix import GermMatrix
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils import akmod, generators, pei

LOWER = Germ((1, 1, 0), (None, None, 0))
UPPER = Germ((1, 1, 0), (None, None, 1))
OCTANT = Germ((1, 1, 1), (None, None, None))


def layers(count: int) -> list[Orthant]:
    return [Orthant((0, 0, height), (1, 1, 0)) for height in range(count)]


class Tests:
    def test_matrix(self):
        with raises(ValidationError):
            GermMatrix(2, {LOWER: (1, 0)})
        with raises(ValueError):
            GermMatrix(0)
        with raises(ValueError):
            GermMatrix(2, {LOWER: (1, -1, 0)})

        m = GermMatrix(2, {LOWER: (2, -2), UPPER: (0, 0)})
        assert list(m.Rows) == [LOWER]
        assert m.row(UPPER) == (0, 0)
        assert (m - m).is_zero()
        assert (m + 2 * m) == GermMatrix(2, {LOWER: (6, -6)})
        assert str(m) == "matrix k=2 rows=1\nrow germ=(G dir=(+,+,0) frozen={3:0}) entries=(2,-2)"

    def test_matrix_of_translation(self):
        domain = OrthohedralSet(3, layers(2))
        first, second = layers(2)
        translation = generators.unit_pei_translation(domain, first, 0, second, 0)
        m = akmod.matrix_of(translation, 2)
        assert m.Rows == {LOWER: (-1, 0), UPPER: (1, 0)}
        result = akmod.classify(m)
        assert not result.InD and not result.InE
        assert str(result) == "in_D=false in_E=false flow_column=(-1,1)"

        with raises(PreconditionError):
            akmod.matrix_of(generators.transposition(domain, first, second), 2)

    def test_additivity(self):
        domain = OrthohedralSet(3, layers(2))
        first, second = layers(2)
        translation = generators.unit_pei_translation(domain, first, 0, second, 0)
        eta = generators.unit_endotranslation(domain, second, 0, 1)
        product = akmod.matrix_of(pei.compose(translation, eta), 2)
        assert product == akmod.matrix_of(translation, 2) + akmod.matrix_of(eta, 2)
        assert product.Rows == {LOWER: (-1, 0), UPPER: (0, 1)}
        assert akmod.matrix_of(pei.identity(domain), 2).is_zero()

    def test_classify(self):
        assert str(akmod.classify(GermMatrix(2))) == "in_D=true in_E=true flow_column=()"
        constant = akmod.classify(GermMatrix(3, {LOWER: (1, 1, 1), UPPER: (-1, -1, -1)}))
        assert constant.InD and not constant.InE
        assert constant.FlowColumn == {LOWER: 3, UPPER: -3}

    def test_matrix_of_endotranslation(self):
        octant = Orthant((0, 0, 0), (1, 1, 1))
        domain = OrthohedralSet(3, [octant])
        eta = generators.unit_endotranslation(domain, octant, 0, 1)
        m = akmod.matrix_of(eta, 3)
        assert m.Rows == {OCTANT: (-1, 1, 0)}
        assert akmod.classify(m).InE

    def test_rotations(self):
        assert akmod.rotate((1, 2, 3), 1) == (3, 1, 2)
        assert akmod.rotate((1, 2, 3), 3) == (1, 2, 3)
        m = GermMatrix(3, {LOWER: (1, 2, 0), UPPER: (-3, 0, 0)})
        assert akmod.diagonal_average(m).Rows == {LOWER: (3, 3, 3), UPPER: (-3, -3, -3)}
        for k in range(2, 6):
            for t in (1, -2, 5):
                assert akmod.diagonal_combination(t, k) == (k * t,) + (0,) * (k - 1)

    def test_submodule_invariants(self):
        lone = GermMatrix(2, {LOWER: (2, -2)})
        assert akmod.submodule_invariants([lone]) == (None, 2)

        diagonal = GermMatrix(2, {LOWER: (1, 1), UPPER: (-1, -1)})
        assert akmod.submodule_invariants([diagonal]) == (1, None)
        assert akmod.submodule_invariants([lone, diagonal]) == (1, 2)

        column = GermMatrix(1, {LOWER: (1,), UPPER: (-1,)})
        assert akmod.submodule_invariants([column]) == (1, 1)

        with raises(PreconditionError):
            akmod.submodule_invariants([GermMatrix(2)])
        with raises(PreconditionError):
            akmod.submodule_invariants([lone, column])
        with raises(BudgetError):
            akmod.submodule_invariants([diagonal], orbit_budget=2)

    def test_lattice_order(self):
        assert akmod.lattice_order((0, 0), [(2, 0)]) == 1
        assert akmod.lattice_order((1, 0), [(2, 0)]) == 2
        assert akmod.lattice_order((0, 1), [(2, 0)]) is None

    def test_reductions(self):
        m = GermMatrix(3, {LOWER: (4, -2, 0), UPPER: (0, 0, -2)})
        assert (akmod.row_reduction([m]), akmod.entry_reduction([m])) == (2, 2)
        assert akmod.row_reduction([GermMatrix(2, {LOWER: (1, -1)})]) is None
        assert akmod.entry_reduction([GermMatrix(2, {LOWER: (1, 1), UPPER: (-1, -1)})]) is None

        assert akmod.submodule_invariants([GermMatrix(2, {LOWER: (1, -1)})]) == (None, 1)
        assert akmod.submodule_invariants([GermMatrix(2, {LOWER: (-1, 0), UPPER: (1, 0)})]) == (1, 1)
        assert akmod.submodule_invariants([GermMatrix(2, {LOWER: (-2, 0), UPPER: (2, 0)})]) == (2, 2)
        assert akmod.submodule_invariants([GermMatrix(2, {LOWER: (3, -3)})]) == (None, 3)

        with raises(ValidationError):
            akmod.check_reduction("p", 3, 2)
        with raises(ValidationError):
            akmod.check_reduction("q", 2, None)
        akmod.check_reduction("q", None, 2)

    def test_random_submodules(self):
        random = Random(config.DEFAULT_SEED)
        for _ in range(50):
            m = GermMatrix(2)
            while m.is_zero():
                germs = random.sample([LOWER, UPPER], random.randint(1, 2))
                entries = [random.randint(-3, 3) for _ in range(2 * len(germs) - 1)]
                entries.append(-sum(entries))
                m = GermMatrix(2, {germ: tuple(entries[2 * i:2 * i + 2]) for i, germ in enumerate(germs)})
            p, q = akmod.submodule_invariants([m])
            for reduced, closure in ((akmod.row_reduction([m]), p), (akmod.entry_reduction([m]), q)):
                assert (reduced is None) == (closure is None)
                assert reduced is None or reduced % closure == 0
