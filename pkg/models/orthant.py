from itertools import product

from models.lattice import Point, check_dimension

Interval = tuple  # (low, high); None stands for an unbounded end.


def meet(first: Interval, second: Interval) -> Interval | None:
    lows = [v for v in (first[0], second[0]) if v is not None]
    highs = [v for v in (first[1], second[1]) if v is not None]
    low = max(lows) if lows else None
    high = min(highs) if highs else None
    if low is not None and high is not None and low > high:
        return None
    return low, high


def remove(first: Interval, second: Interval) -> list[Interval]:
    """
    The part of the first interval outside the second, as at most two intervals.
    """
    if meet(first, second) is None:
        return [first]
    pieces = []
    if second[0] is not None and (first[0] is None or first[0] < second[0]):
        pieces.append((first[0], second[0] - 1))
    if second[1] is not None and (first[1] is None or first[1] > second[1]):
        pieces.append((second[1] + 1, first[1]))
    return pieces


def split(interval: Interval) -> list[Interval]:
    """
    Splits an interval into orthant-shaped parts: rays stay whole, finite intervals become points.
    """
    low, high = interval
    if low is None and high is None:
        return [(0, None), (None, -1)]
    if low is None or high is None:
        return [interval]
    return [(v, v) for v in range(low, high + 1)]


class Orthant:
    """
    Base + the monoid spanned by Dir[i]·e_i over the axes with Dir[i] != 0.
    """
    Base: Point
    Dir: tuple[int, ...]

    def __init__(self, base: tuple, direction: tuple):
        self.set_base(base)
        self.set_dir(direction)

    def __str__(self):
        signs = ",".join({1: "+", -1: "-", 0: "0"}[d] for d in self.Dir)
        return f"O base=({','.join(str(v) for v in self.Base)}) dir=({signs})"

    def __repr__(self):
        return f"Orthant({self.Base}, {self.Dir})"

    def __hash__(self):
        return hash((self.Base, self.Dir))

    def __eq__(self, other):
        return self.Base == other.Base and self.Dir == other.Dir

    def __lt__(self, other):
        return (self.Dir, self.Base) < (other.Dir, other.Base)

    def __contains__(self, point: Point):
        check_dimension(self.Base, point)
        for axis, value in enumerate(point):
            low, high = self.interval(axis)
            if (low is not None and value < low) or (high is not None and value > high):
                return False
        return True

    def set_base(self, base):
        self.Base = tuple(int(v) for v in base)

    def set_dir(self, direction):
        direction = tuple(int(d) for d in direction)
        if len(direction) != len(self.Base) or any(d not in (0, 1, -1) for d in direction):
            raise ValueError(f"Invalid direction: {direction}")
        self.Dir = direction

    @property
    def Dimension(self) -> int:
        return len(self.Base)

    @property
    def Rank(self) -> int:
        return sum(1 for d in self.Dir if d)

    @property
    def Axes(self) -> tuple[int, ...]:
        return tuple(axis for axis, d in enumerate(self.Dir) if d)

    @property
    def Diagonal(self) -> Point:
        return self.Dir

    def interval(self, axis: int) -> Interval:
        match self.Dir[axis]:
            case 1:
                return self.Base[axis], None
            case -1:
                return None, self.Base[axis]
            case _:
                return self.Base[axis], self.Base[axis]

    def intervals(self) -> list[Interval]:
        return [self.interval(axis) for axis in range(self.Dimension)]

    def corners(self) -> list[Point]:
        """
        The base and base + Dir[i]·e_i for every axis of the orthant; they affinely span it.
        """
        points = [self.Base]
        for axis in self.Axes:
            shifted = list(self.Base)
            shifted[axis] += self.Dir[axis]
            points.append(tuple(shifted))
        return points

    def translate(self, vector: tuple):
        check_dimension(self.Base, vector)
        return Orthant(tuple(a + b for a, b in zip(self.Base, vector)), self.Dir)

    def image(self, iso):
        base = tuple(a + b for a, b in zip(iso.Shift, iso.Rotation.apply(self.Base)))
        return Orthant(base, iso.Rotation.apply(self.Dir))

    def push(self, steps: int = 1):
        """
        The commensurable suborthant Base + steps·Dir.
        """
        return self.translate(tuple(steps * d for d in self.Dir))

    def face(self, axis: int):
        if not self.Dir[axis]:
            raise ValueError(f"Invalid face axis: {axis}")
        direction = list(self.Dir)
        direction[axis] = 0
        return Orthant(self.Base, tuple(direction))

    def indicator(self):
        return Orthant((0,) * self.Dimension, self.Dir)

    def intersect(self, other) -> list:
        check_dimension(self.Base, other.Base)
        axes = []
        for first, second in zip(self.intervals(), other.intervals()):
            common = meet(first, second)
            if common is None:
                return []
            axes.append(common)
        return from_intervals(axes)

    def difference(self, other) -> list:
        """
        self minus other, peeled axis by axis; the result orthants are pairwise disjoint.
        """
        check_dimension(self.Base, other.Base)
        own = self.intervals()
        theirs = other.intervals()
        commons = []
        for first, second in zip(own, theirs):
            common = meet(first, second)
            if common is None:
                return [self]
            commons.append(common)
        pieces = []
        for axis in range(self.Dimension):
            for rest in remove(own[axis], theirs[axis]):
                pieces.extend(from_intervals(commons[:axis] + [rest] + own[axis + 1:]))
        return pieces

    def is_disjoint(self, other) -> bool:
        return not self.intersect_nonempty(other)

    def intersect_nonempty(self, other) -> bool:
        return all(meet(first, second) is not None for first, second in zip(self.intervals(), other.intervals()))


def from_intervals(intervals: list[Interval]) -> list[Orthant]:
    orthants = []
    for choice in product(*[split(interval) for interval in intervals]):
        base = []
        direction = []
        for low, high in choice:
            if high is None:
                base.append(low)
                direction.append(1)
            elif low is None:
                base.append(high)
                direction.append(-1)
            else:
                base.append(low)
                direction.append(0)
        orthants.append(Orthant(tuple(base), tuple(direction)))
    return orthants
