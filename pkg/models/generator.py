from models.lattice import Isometry
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import format_isometry

KINDS = (
    "transposition",
    "point_transposition",
    "n_cycle",
    "single_orthant_isometry",
    "single_orthant_reflection",
    "pei_translation",
    "unit_pei_translation",
    "endotranslation",
    "unit_endotranslation",
)


def format_argument(value) -> str:
    match value:
        case Orthant() | OrthohedralSet():
            return f"({value})"
        case Isometry():
            return format_isometry(value)
        case None:
            return "default"
        case list() | tuple():
            return "[" + ", ".join(format_argument(item) for item in value) + "]"
        case int():
            # Axes are stored 0-based and shown 1-based.
            return str(value + 1)
        case _:
            return str(value)


class Generator:
    """
    A named generator of pei(S): its kind, the domain S it acts on and the geometric arguments.
    Axis arguments are 0-based; points are stored as tuples.
    """
    Kind: str
    Domain: OrthohedralSet
    Arguments: dict

    def __init__(self, kind: str, domain: OrthohedralSet, **arguments):
        self.set_kind(kind)
        if not isinstance(domain, OrthohedralSet):
            raise TypeError(f"Unsupported type: {type(domain)}")
        self.Domain = domain
        self.Arguments = arguments

    def __str__(self):
        arguments = " ".join(f"{key}={self.format_value(value)}" for key, value in self.Arguments.items())
        return f"{self.Kind} {arguments}"

    def __repr__(self):
        return f"Generator({self.Kind!r}, {self.Arguments!r})"

    def __eq__(self, other):
        return self.Kind == other.Kind and self.Arguments == other.Arguments

    def __getitem__(self, key: str):
        return self.Arguments[key]

    @staticmethod
    def format_value(value) -> str:
        if isinstance(value, tuple) and value and all(isinstance(v, int) for v in value):
            return "(" + ",".join(str(v) for v in value) + ")"
        return format_argument(value)

    def set_kind(self, kind: str):
        if kind not in KINDS:
            raise ValueError(f"Invalid generator kind: {kind}")
        self.Kind = kind
