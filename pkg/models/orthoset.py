from itertools import combinations, product

from models.errors import DimensionError, ValidationError
from models.lattice import Point, check_dimension
from models.orthant import Orthant


class OrthohedralSet:
    """
    A finite disjoint union of orthants in Z^N.
    Equality is exact set equality (empty symmetric difference), not equality of decompositions.
    """
    Dimension: int
    Pieces: list[Orthant]

    def __init__(self, dimension: int, pieces: list = None, check: bool = True):
        self.Dimension = int(dimension)
        self.set_pieces(list(pieces) if pieces else [], check)

    def __str__(self):
        return "[" + ", ".join(str(piece) for piece in self.Pieces) + "]"

    def __repr__(self):
        return f"OrthohedralSet({self.Dimension}, {self.Pieces!r})"

    __hash__ = None

    def __eq__(self, other):
        if not isinstance(other, OrthohedralSet):
            return NotImplemented
        return (self - other).is_empty() and (other - self).is_empty()

    def __len__(self):
        return len(self.Pieces)

    def __iter__(self):
        return iter(self.Pieces)

    def __contains__(self, point: Point):
        check_dimension(point, (0,) * self.Dimension)
        return any(point in piece for piece in self.Pieces)

    def __and__(self, other):
        self.check_compatible(other)
        pieces = []
        for first in self.Pieces:
            for second in other.Pieces:
                pieces.extend(first.intersect(second))
        return OrthohedralSet(self.Dimension, pieces, check=False)

    def __sub__(self, other):
        self.check_compatible(other)
        pieces = []
        for piece in self.Pieces:
            fragments = [piece]
            for cut in other.Pieces:
                fragments = [rest for fragment in fragments for rest in fragment.difference(cut)]
                if not fragments:
                    break
            pieces.extend(fragments)
        return OrthohedralSet(self.Dimension, pieces, check=False)

    def __or__(self, other):
        self.check_compatible(other)
        return OrthohedralSet(self.Dimension, self.Pieces + (other - self).Pieces, check=False)

    def set_pieces(self, pieces: list, check: bool = True):
        for piece in pieces:
            if not isinstance(piece, Orthant):
                raise TypeError(f"Unsupported type: {type(piece)}")
            if piece.Dimension != self.Dimension:
                raise DimensionError(f"Dimension mismatch: {piece.Dimension} != {self.Dimension}")
        if check:
            for first, second in combinations(pieces, 2):
                if first.intersect_nonempty(second):
                    raise ValidationError(f"Overlapping pieces: {first} and {second}")
        self.Pieces = pieces

    def check_compatible(self, other):
        if not isinstance(other, OrthohedralSet):
            raise TypeError(f"Unsupported type: {type(other)}")
        if other.Dimension != self.Dimension:
            raise DimensionError(f"Dimension mismatch: {self.Dimension} != {other.Dimension}")

    def is_empty(self) -> bool:
        return not self.Pieces

    def deepcopy(self):
        return OrthohedralSet(self.Dimension, [Orthant(piece.Base, piece.Dir) for piece in self.Pieces], check=False)

    def add(self, piece: Orthant):
        for other in self.Pieces:
            if other.intersect_nonempty(piece):
                raise ValidationError(f"Overlapping pieces: {other} and {piece}")
        self.Pieces.append(piece)

    @property
    def Rank(self) -> int | None:
        return max((piece.Rank for piece in self.Pieces), default=None)

    @property
    def Height(self) -> int:
        rank = self.Rank
        return sum(1 for piece in self.Pieces if piece.Rank == rank)

    def height_at(self, rank: int) -> int:
        """
        Number of rank-`rank` pieces when that is the rank of the set, otherwise 0.
        """
        if self.Rank != rank:
            return 0
        return self.Height

    @staticmethod
    def whole(dimension: int):
        pieces = [Orthant(tuple(0 if d == 1 else -1 for d in signs), signs)
                  for signs in product((1, -1), repeat=dimension)]
        return OrthohedralSet(dimension, pieces, check=False)

    @staticmethod
    def points(dimension: int, points: list):
        return OrthohedralSet(dimension, [Orthant(p, (0,) * dimension) for p in points])
