from models.errors import DimensionError, ValidationError
from models.lattice import Isometry, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet


def canonical(orthant: Orthant, iso: Isometry) -> Isometry:
    """
    The representative of iso restricted to the orthant: axes the orthant does not extend along are sent
    in increasing order, with sign +, to the target axes left over.
    """
    used = {iso.Rotation.Image[axis] for axis in orthant.Axes}
    free = iter(target for target in range(orthant.Dimension) if target not in used)
    image = list(iso.Rotation.Image)
    signs = list(iso.Rotation.Signs)
    for axis in range(orthant.Dimension):
        if not orthant.Dir[axis]:
            image[axis] = next(free)
            signs[axis] = 1
    rotation = SignedPermutation(tuple(image), tuple(signs))
    target = tuple(a + b for a, b in zip(iso.Shift, iso.Rotation.apply(orthant.Base)))
    shift = tuple(t - v for t, v in zip(target, rotation.apply(orthant.Base)))
    return Isometry(shift, rotation)


class PeiMap:
    """
    A map of an orthohedral set that is an isometry on each of finitely many orthants.
    Products are read left to right: compose(g, f) is g followed by f.
    """
    Domain: OrthohedralSet
    Pieces: list[tuple[Orthant, Isometry]]
    Injective: bool
    Bijective: bool
    Pet: bool
    Diagonal: bool

    def __init__(self, domain: OrthohedralSet, pieces: list, require: str = "map", validate: bool = True):
        if not isinstance(domain, OrthohedralSet):
            raise TypeError(f"Unsupported type: {type(domain)}")
        if require not in ("map", "injection", "bijection"):
            raise TypeError(f"Unsupported type: {require}")
        self.Domain = domain
        self.set_pieces(pieces)
        if validate:
            self.validate(require)
        else:
            self.Injective = require != "map"
            self.Bijective = require == "bijection"
        self.Pet = all(iso.is_translation() for _, iso in self.Pieces)
        self.Diagonal = self.Pet and self.is_diagonal()

    def __str__(self):
        pieces = ", ".join(f"({piece}, iso={format_isometry(iso)})" for piece, iso in self.Pieces)
        return f"P domain={self.Domain} pieces=[{pieces}]"

    def __repr__(self):
        return f"PeiMap({self.Domain!r}, {self.Pieces!r})"

    def __len__(self):
        return len(self.Pieces)

    def __iter__(self):
        return iter(self.Pieces)

    def set_pieces(self, pieces: list):
        result = []
        for item in pieces:
            orthant, iso = item
            if not isinstance(orthant, Orthant) or not isinstance(iso, Isometry):
                raise TypeError(f"Unsupported type: {type(item)}")
            if orthant.Dimension != self.Domain.Dimension or iso.Dimension != self.Domain.Dimension:
                raise DimensionError(f"Dimension mismatch in piece {orthant}")
            result.append((orthant, canonical(orthant, iso)))
        self.Pieces = result

    def validate(self, require: str):
        dimension = self.Domain.Dimension
        cover = OrthohedralSet(dimension, [orthant for orthant, _ in self.Pieces])
        if cover != self.Domain:
            raise ValidationError("Pieces do not cover the domain")
        images = [orthant.image(iso) for orthant, iso in self.Pieces]
        try:
            image_set = OrthohedralSet(dimension, images)
            self.Injective = True
        except ValidationError:
            self.Injective = False
            if require != "map":
                raise ValidationError("Image overlap")
            image_set = None
        self.Bijective = self.Injective and image_set == self.Domain
        if require == "bijection" and not self.Bijective:
            raise ValidationError("Image differs from domain")

    def image(self) -> OrthohedralSet:
        return OrthohedralSet(self.Domain.Dimension, [orthant.image(iso) for orthant, iso in self.Pieces],
                              check=False)

    def is_diagonal(self) -> bool:
        """
        On every orthant of top rank the map translates by a multiple of the diagonal direction.
        """
        rank = self.Domain.Rank
        for orthant, iso in self.Pieces:
            if orthant.Rank != rank:
                continue
            steps = {s * d for s, d in zip(iso.Shift, orthant.Dir) if d}
            if len(steps) > 1 or any(s for s, d in zip(iso.Shift, orthant.Dir) if not d):
                return False
        return True


def format_isometry(iso: Isometry) -> str:
    shift = ",".join(str(v) for v in iso.Shift)
    image = ",".join(str(v + 1) for v in iso.Rotation.Image)
    signs = ",".join("+" if s == 1 else "-" for s in iso.Rotation.Signs)
    return f"({shift};{image};{signs})"
