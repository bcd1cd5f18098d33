from models.lattice import Point, check_dimension
from models.orthant import Orthant


class Germ:
    """
    Commensurability class of an orthant: its indicator plus the coordinates frozen on the zero axes.
    Frozen holds None on the axes the germ extends along.
    """
    Dir: tuple[int, ...]
    Frozen: tuple

    def __init__(self, direction: tuple, frozen: tuple):
        self.set_dir(direction)
        self.set_frozen(frozen)

    def __str__(self):
        signs = ",".join({1: "+", -1: "-", 0: "0"}[d] for d in self.Dir)
        frozen = ",".join(f"{axis + 1}:{value}" for axis, value in enumerate(self.Frozen) if value is not None)
        return f"G dir=({signs}) frozen={{{frozen}}}"

    def __repr__(self):
        return f"Germ({self.Dir}, {self.Frozen})"

    def __hash__(self):
        return hash((self.Dir, self.Frozen))

    def __eq__(self, other):
        return self.Dir == other.Dir and self.Frozen == other.Frozen

    def __lt__(self, other):
        return self.key() < other.key()

    def key(self):
        return self.Rank, self.Dir, tuple(v if v is not None else 0 for v in self.Frozen)

    def set_dir(self, direction):
        direction = tuple(int(d) for d in direction)
        if any(d not in (0, 1, -1) for d in direction):
            raise ValueError(f"Invalid direction: {direction}")
        self.Dir = direction

    def set_frozen(self, frozen):
        frozen = tuple(None if v is None else int(v) for v in frozen)
        check_dimension(frozen, self.Dir)
        for d, v in zip(self.Dir, frozen):
            if (d == 0) != (v is not None):
                raise ValueError(f"Invalid frozen coordinates: {frozen}")
        self.Frozen = frozen

    @property
    def Dimension(self) -> int:
        return len(self.Dir)

    @property
    def Rank(self) -> int:
        return sum(1 for d in self.Dir if d)

    @property
    def Axes(self) -> tuple[int, ...]:
        """
        X(γ): the canonical axis directions in their fixed order (by axis index).
        """
        return tuple(axis for axis, d in enumerate(self.Dir) if d)

    def in_coset(self, point: Point) -> bool:
        return all(v is None or p == v for p, v in zip(point, self.Frozen))

    def meets(self, orthant: Orthant) -> bool:
        """
        Whether the tangent coset meets the orthant.
        """
        for axis, value in enumerate(self.Frozen):
            if value is None:
                continue
            low, high = orthant.interval(axis)
            if (low is not None and value < low) or (high is not None and value > high):
                return False
        return True

    def representative(self, start: Point) -> Orthant:
        """
        The orthant of this germ whose base agrees with `start` on the axes the germ extends along.
        """
        base = tuple(start[axis] if value is None else value for axis, value in enumerate(self.Frozen))
        return Orthant(base, self.Dir)
