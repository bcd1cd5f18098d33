from models.germ import Germ
from models.orthant import Orthant
from models.orthoset import OrthohedralSet


def format_value(value) -> str:
    match value:
        case None:
            return "none"
        case bool():
            return "true" if value else "false"
        case list() | tuple():
            return "[" + ",".join(format_value(item) for item in value) + "]"
        case _:
            return str(value)


class Invariants:
    """
    Rank-k invariants of an element; fields that only make sense inside G_k are None outside it.
    """
    Rank: int
    K: int
    InGk: bool
    InC: bool | None
    InCord: bool | None
    Stagnant: bool | None
    ParityGerms: int | None
    ParityAxes: int | None
    InAltGk: bool
    IsPet: bool
    Flows: dict[Germ, int]

    def __init__(self, rank: int, k: int, is_pet: bool):
        self.Rank = rank
        self.K = k
        self.InGk = rank <= k
        self.InC = None
        self.InCord = None
        self.Stagnant = None
        self.ParityGerms = None
        self.ParityAxes = None
        self.InAltGk = False
        self.IsPet = is_pet
        self.Flows = {}

    def __str__(self):
        fields = {
            "rank": self.Rank,
            "k": self.K,
            "in_Gk": self.InGk,
            "in_C": self.InC,
            "in_Cord": self.InCord,
            "stagnant": self.Stagnant,
            "parity_germs": self.ParityGerms,
            "parity_axes": self.ParityAxes,
            "in_altGk": self.InAltGk,
            "is_pet": self.IsPet,
        }
        lines = [" ".join(f"{key}={format_value(value)}" for key, value in fields.items())]
        for germ in sorted(self.Flows):
            lines.append(f"flow germ=({germ}) value={self.Flows[germ]}")
        return "\n".join(lines)


class IdentityReport:
    Results: list[tuple[str, bool]]

    def __init__(self):
        self.Results = []

    def __str__(self):
        lines = [f"identity name={name} result={'pass' if passed else 'fail'}" for name, passed in self.Results]
        lines.append(f"summary passed={sum(1 for _, passed in self.Results if passed)} total={len(self.Results)}")
        return "\n".join(lines)

    def __len__(self):
        return len(self.Results)

    def add(self, name: str, passed: bool):
        if not isinstance(name, str):
            raise TypeError(f"Unsupported type: {type(name)}")
        self.Results.append((name, bool(passed)))

    @property
    def Passed(self) -> bool:
        return all(passed for _, passed in self.Results)

    def failures(self) -> list[str]:
        return [name for name, passed in self.Results if not passed]


class BoundarySet:
    """
    The boundary at infinity of S in direction Axis, one dimension lower, with the section
    sending each boundary piece to the ray-parallel orthant of S above it.
    """
    Axis: int
    Boundary: OrthohedralSet
    Section: dict[Orthant, Orthant]

    def __init__(self, axis: int, boundary: OrthohedralSet, section: dict):
        if not isinstance(boundary, OrthohedralSet):
            raise TypeError(f"Unsupported type: {type(boundary)}")
        self.Axis = axis
        self.Boundary = boundary
        self.Section = section

    def __str__(self):
        lines = [f"boundary axis={self.Axis + 1} set={self.Boundary}"]
        for piece in sorted(self.Section):
            lines.append(f"section piece=({piece}) lift=({self.Section[piece]})")
        return "\n".join(lines)


class FlBoundsReport:
    """
    Upper None stands for the unbounded marker.
    """
    Kind: str
    Lower: int
    Upper: int | None
    Provenance: list[str]

    def __init__(self, kind: str, lower: int, upper: int | None, provenance: list[str]):
        if kind not in ("pet", "pei"):
            raise TypeError(f"Unsupported type: {kind}")
        if upper is not None and lower > upper:
            raise ValueError(f"Invalid bounds: {lower} > {upper}")
        self.Kind = kind
        self.Lower = lower
        self.Upper = upper
        self.Provenance = provenance

    def __str__(self):
        upper = "inf" if self.Upper is None else str(self.Upper)
        exact = f" exact={self.Lower}" if self.Exact else ""
        return f"group={self.Kind} lower={self.Lower} upper={upper}{exact} [{'; '.join(self.Provenance)}]"

    @property
    def Exact(self) -> bool:
        return self.Upper == self.Lower


class HomologyReport:
    ConditionsOk: bool
    Betti: list[int]
    Torsion: list[list[int]]
    Bouquet: tuple[int, int] | None
    Note: str

    def __init__(self, conditions_ok: bool, betti: list, torsion: list, bouquet: tuple | None, note: str = ""):
        self.ConditionsOk = conditions_ok
        self.Betti = list(betti)
        self.Torsion = [list(item) for item in torsion]
        self.Bouquet = bouquet
        self.Note = note

    def __str__(self):
        bouquet = "none" if self.Bouquet is None else f"({self.Bouquet[0]},{self.Bouquet[1]})"
        line = (f"conditions={format_value(self.ConditionsOk)} betti={format_value(self.Betti)} "
                f"torsion={format_value(self.Torsion)} bouquet={bouquet}")
        if self.Note:
            line += f" note=\"{self.Note}\""
        return line
