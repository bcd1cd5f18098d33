from pytest import raises

from models.errors import BudgetError, PreconditionError, ValidationError
from models.graph import ColoredGraph
from models.lattice import Isometry
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils import morse, pei
from utils.homology import complete_multipartite, conditions_hold, flag_complex, flag_homology

RAY = Orthant((0,), (1,))
NEGATIVE = Orthant((-1,), (-1,))


def line() -> OrthohedralSet:
    return OrthohedralSet(1, [RAY, NEGATIVE])


class Tests:
    def test_heights(self):
        src = OrthohedralSet(1, [RAY])
        t = morse.diagonal_unit_translation(src, RAY)
        assert morse.height(t) == 1
        assert morse.height(morse.diagonal_unit_translation(src, RAY, 3)) == 3
        assert morse.height(pei.identity(src)) == 0
        assert morse.height_split(t, src) == 1

        f = morse.monoid_element(line(), {RAY: 2, NEGATIVE: 1})
        assert morse.height(f) == 3
        with raises(PreconditionError):
            morse.height_split(f, OrthohedralSet(1, [RAY]))
        with raises(PreconditionError):
            morse.diagonal_unit_translation(line(), Orthant((3,), (1,)))

    def test_order(self):
        f = morse.diagonal_unit_translation(line(), RAY)
        other = morse.monoid_element(line(), {RAY: 2, NEGATIVE: 1})
        assert morse.order_leq(f, other) == {RAY: 1, NEGATIVE: 1}
        assert morse.order_leq(other, f) is None
        assert morse.order_leq(f, f) == {}

    def test_diagonal(self):
        f = morse.monoid_element(line(), {RAY: 1, NEGATIVE: 1})
        g = morse.monoid_element(line(), {RAY: 2, NEGATIVE: 1})
        assert morse.diagonal_lengths(g) is not None
        assert morse.is_superdiagonal(f, [line()])
        assert not morse.is_superdiagonal(g, [line()])
        assert morse.is_superdiagonal(g, [OrthohedralSet(1, [RAY]), OrthohedralSet(1, [NEGATIVE])])

        quadrant = Orthant((0, 0), (1, 1))
        skew = pei.make(OrthohedralSet(2, [quadrant]), [(quadrant, Isometry((1, 0)))], "injection")
        assert not morse.is_diagonal(skew)

    def test_maximal_below(self):
        src = OrthohedralSet(1, [RAY])
        f = morse.diagonal_unit_translation(src, RAY, 2)
        point = Orthant((0,), (0,))

        b = morse.maximal_below(f, RAY, [(point, Isometry((1,)))])
        assert pei.equals(b, morse.diagonal_unit_translation(src, RAY))
        fixed = morse.maximal_below(f, RAY, [(point, Isometry((0,)))])
        assert morse.height(fixed) == 1
        assert pei.apply(fixed, (0,)) == (0,) and pei.apply(fixed, (4,)) == (5,)

        with raises(PreconditionError):
            morse.maximal_below(f, RAY, [(point, Isometry((2,)))])

    def test_common_lower_bound(self):
        src = line()
        f = morse.monoid_element(src, {RAY: 1, NEGATIVE: 1})
        first = morse.maximal_below(f, RAY, [(Orthant((0,), (0,)), Isometry((0,)))])
        second = morse.maximal_below(f, NEGATIVE, [(Orthant((-1,), (0,)), Isometry((0,)))])
        delta = morse.common_lower_bound(f, [(first, RAY), (second, NEGATIVE)])
        assert pei.equals(delta, pei.identity(src))
        assert morse.common_lower_bound(f, [(first, RAY), (first, RAY)]) is None
        assert morse.common_lower_bound(f, [(first, RAY)]) is first

    def test_skeleton_heights(self):
        heights = morse.skeleton_heights(3, 2)
        assert heights == {"skeleton": 3, "regular": 3, "singular": 3, "singular_regular": 6}
        assert morse.skeleton_heights(4, 2)["skeleton"] == 6
        assert morse.superdiagonal_modulus(3, 2) == 6
        with raises(PreconditionError):
            morse.skeleton_heights(2, 3)

    def test_graph(self):
        with raises(ValidationError):
            ColoredGraph({"a": 1, "b": 1}, [("a", "b")])
        with raises(ValidationError):
            ColoredGraph({"a": 1}, [("a", "c")])
        graph = complete_multipartite([2, 2])
        assert graph.Height == 2
        assert str(graph).splitlines()[0] == "V v1_0:1 v1_1:1 v2_0:2 v2_1:2"

    def test_bipartite_homology(self):
        report = flag_homology(complete_multipartite([2, 2]))
        assert str(report) == "conditions=true betti=[0,1] torsion=[[],[]] bouquet=(1,1)"
        assert flag_homology(complete_multipartite([3, 3])).Bouquet == (1, 4)

        names = ["a0", "b0", "a1", "b1", "a2", "b2"]
        hexagon = ColoredGraph({name: 1 if name[0] == "a" else 2 for name in names},
                               [(names[i], names[(i + 1) % 6]) for i in range(6)])
        report = flag_homology(hexagon)
        assert not report.ConditionsOk
        assert report.Bouquet == (1, 1)

    def test_higher_homology(self):
        octahedron = flag_homology(complete_multipartite([2, 2, 2]))
        assert octahedron.ConditionsOk
        assert octahedron.Betti == [0, 0, 1]
        assert octahedron.Bouquet == (2, 1)
        assert str(octahedron).endswith('note="homology-consistent with bouquet"')

        edgeless = flag_homology(ColoredGraph({f"v{index}": 1 for index in range(4)}))
        assert edgeless.Betti == [3]
        assert edgeless.Bouquet == (0, 3)

        path = ColoredGraph({"a": 1, "b": 2}, [("a", "b")])
        assert not conditions_hold(path)

    def test_simplex_cap(self):
        assert len(flag_complex(complete_multipartite([2, 2]))) == 8
        with raises(BudgetError):
            flag_complex(complete_multipartite([3, 3]), 5)
