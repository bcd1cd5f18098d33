from fractions import Fraction

from models.errors import DimensionError

Point = tuple[int, ...]


def check_dimension(*items):
    dimensions = {len(item) for item in items}
    if len(dimensions) > 1:
        raise DimensionError(f"Dimension mismatch: {sorted(dimensions)}")


class SignedPermutation:
    """
    Integral orthogonal matrix A, stored as A·e_i = Signs[i]·e_{Image[i]} (axes are 0-based).
    """
    Image: tuple[int, ...]
    Signs: tuple[int, ...]

    def __init__(self, image: tuple = (), signs: tuple = ()):
        self.set_image(image)
        self.set_signs(signs if signs else (1,) * len(self.Image))

    def __str__(self):
        return f"Image: {self.Image}, Signs: {self.Signs}"

    def __repr__(self):
        return f"SignedPermutation({self.Image}, {self.Signs})"

    def __hash__(self):
        return hash((self.Image, self.Signs))

    def __eq__(self, other):
        return self.Image == other.Image and self.Signs == other.Signs

    def __len__(self):
        return len(self.Image)

    def set_image(self, image):
        image = tuple(int(i) for i in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"Invalid axis permutation: {image}")
        self.Image = image

    def set_signs(self, signs):
        signs = tuple(int(s) for s in signs)
        if len(signs) != len(self.Image) or any(s not in (1, -1) for s in signs):
            raise ValueError(f"Invalid signs: {signs}")
        self.Signs = signs

    @staticmethod
    def identity(dimension: int):
        return SignedPermutation(tuple(range(dimension)), (1,) * dimension)

    def is_identity(self) -> bool:
        return self.Image == tuple(range(len(self.Image))) and all(s == 1 for s in self.Signs)

    def apply(self, point: Point) -> Point:
        check_dimension(self.Image, point)
        result = [0] * len(point)
        for axis, value in enumerate(point):
            result[self.Image[axis]] = self.Signs[axis] * value
        return tuple(result)

    def then(self, other):
        # Apply self first, other second.
        check_dimension(self.Image, other.Image)
        image = tuple(other.Image[self.Image[axis]] for axis in range(len(self.Image)))
        signs = tuple(self.Signs[axis] * other.Signs[self.Image[axis]] for axis in range(len(self.Image)))
        return SignedPermutation(image, signs)

    def inverse(self):
        image = [0] * len(self.Image)
        signs = [1] * len(self.Image)
        for axis, target in enumerate(self.Image):
            image[target] = axis
            signs[target] = self.Signs[axis]
        return SignedPermutation(tuple(image), tuple(signs))

    def matrix(self) -> list[list[int]]:
        size = len(self.Image)
        rows = [[0] * size for _ in range(size)]
        for axis, target in enumerate(self.Image):
            rows[target][axis] = self.Signs[axis]
        return rows


class Isometry:
    """
    The affine map x -> Shift + Rotation·x.
    """
    Shift: Point
    Rotation: SignedPermutation

    def __init__(self, shift: tuple, rotation: SignedPermutation = None):
        self.set_shift(shift)
        self.set_rotation(rotation if rotation is not None else SignedPermutation.identity(len(self.Shift)))

    def __str__(self):
        return f"Shift: {self.Shift}, Rotation: [{self.Rotation}]"

    def __repr__(self):
        return f"Isometry({self.Shift}, {self.Rotation!r})"

    def __hash__(self):
        return hash((self.Shift, self.Rotation))

    def __eq__(self, other):
        return self.Shift == other.Shift and self.Rotation == other.Rotation

    def set_shift(self, shift):
        self.Shift = tuple(int(v) for v in shift)

    def set_rotation(self, rotation: SignedPermutation):
        if not isinstance(rotation, SignedPermutation):
            raise TypeError(f"Unsupported type: {type(rotation)}")
        check_dimension(self.Shift, rotation.Image)
        self.Rotation = rotation

    @property
    def Dimension(self) -> int:
        return len(self.Shift)

    @staticmethod
    def identity(dimension: int):
        return Isometry((0,) * dimension)

    @staticmethod
    def translation(vector: tuple):
        return Isometry(vector)

    def is_identity(self) -> bool:
        return not any(self.Shift) and self.Rotation.is_identity()

    def is_translation(self) -> bool:
        return self.Rotation.is_identity()


class AffineSolutionSet:
    """
    Solution set of x = a + A·x over the rationals.
    Kind is "empty", "all" or "affine"; an affine set is Particular + span(Basis).
    """
    Kind: str
    Particular: tuple[Fraction, ...]
    Basis: list[Point]
    AxisParallel: bool

    def __init__(self, kind: str, particular: tuple = (), basis: list = None):
        self.set_kind(kind)
        self.Particular = tuple(Fraction(v) for v in particular)
        self.Basis = [tuple(v) for v in basis] if basis else []
        self.AxisParallel = all(sum(1 for entry in vector if entry) == 1 for vector in self.Basis)

    def __str__(self):
        return f"Kind: {self.Kind}, Particular: {self.Particular}, Basis: {self.Basis}"

    def __eq__(self, other):
        return (self.Kind == other.Kind and self.Particular == other.Particular
                and self.Basis == other.Basis)

    def set_kind(self, kind):
        if kind not in ("empty", "all", "affine"):
            raise TypeError(f"Unsupported type: {kind}")
        self.Kind = kind
