import re
from pathlib import Path

from models.errors import DimensionError, ParseError, PeiError
from models.germ import Germ
from models.graph import ColoredGraph
from models.lattice import Isometry, SignedPermutation
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from models.peimap import PeiMap

TOKEN = re.compile(r"[()\[\]{},;=:]|[^\s()\[\]{},;=:#]+")
SIGNS = {"+": 1, "-": -1, "0": 0}


class Token:
    Text: str
    Line: int
    Column: int

    def __init__(self, text: str, line: int, column: int):
        self.Text = text
        self.Line = line
        self.Column = column

    def __repr__(self):
        return f"Token({self.Text!r}, {self.Line}, {self.Column})"


def tokenize(text: str) -> list[Token]:
    """
    Splits on whitespace and punctuation; '#' starts a comment running to the end of the line.
    Lines and columns are 1-based.
    """
    tokens = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for match in TOKEN.finditer(line):
            tokens.append(Token(match.group(), number, match.start() + 1))
    return tokens


class Reader:
    Tokens: list[Token]
    Position: int

    def __init__(self, text: str):
        self.Tokens = tokenize(text)
        self.Position = 0

    def at_end(self) -> bool:
        return self.Position >= len(self.Tokens)

    def peek(self) -> str | None:
        return None if self.at_end() else self.Tokens[self.Position].Text

    def error(self, message: str, token: Token = None) -> ParseError:
        if token is None:
            token = self.Tokens[min(self.Position, len(self.Tokens) - 1)] if self.Tokens else Token("", 1, 1)
        return ParseError(message, token.Line, token.Column)

    def take(self, expected: str = None) -> Token:
        if self.at_end():
            last = self.Tokens[-1] if self.Tokens else Token("", 1, 0)
            raise ParseError(f"Unexpected end of input, expected {expected or 'a token'}", last.Line,
                             last.Column + len(last.Text))
        token = self.Tokens[self.Position]
        if expected is not None and token.Text != expected:
            raise self.error(f"Expected '{expected}', found '{token.Text}'", token)
        self.Position += 1
        return token

    def keyword(self, name: str):
        self.take(name)
        self.take("=")

    def integer(self) -> int:
        token = self.take()
        if not re.fullmatch(r"-?\d+", token.Text):
            raise self.error(f"Invalid integer: {token.Text}", token)
        return int(token.Text)

    def sign(self) -> int:
        token = self.take()
        if token.Text not in SIGNS:
            raise self.error(f"Invalid direction token: {token.Text}", token)
        return SIGNS[token.Text]

    def sequence(self, item, opening: str = "(", closing: str = ")", separator: str = ",") -> list:
        self.take(opening)
        values = []
        if self.peek() == closing:
            self.take(closing)
            return values
        while True:
            values.append(item())
            token = self.take()
            if token.Text == closing:
                return values
            if token.Text != separator:
                raise self.error(f"Expected '{separator}' or '{closing}', found '{token.Text}'", token)


def parse_orthant_from(reader: Reader) -> Orthant:
    start = reader.take("O")
    reader.keyword("base")
    base = reader.sequence(reader.integer)
    reader.keyword("dir")
    direction = reader.sequence(reader.sign)
    if len(base) != len(direction):
        raise reader.error(f"Base and direction lengths differ: {len(base)} != {len(direction)}", start)
    return Orthant(tuple(base), tuple(direction))


def parse_set_from(reader: Reader, dimension: int = None) -> OrthohedralSet:
    if reader.peek() == "[":
        start = reader.Tokens[reader.Position]
        pieces = reader.sequence(lambda: parse_orthant_from(reader), "[", "]")
    else:
        start = reader.Tokens[reader.Position] if not reader.at_end() else None
        pieces = []
        while reader.peek() == "O":
            pieces.append(parse_orthant_from(reader))
    dimensions = {piece.Dimension for piece in pieces}
    if dimension is not None:
        dimensions.add(dimension)
    if len(dimensions) > 1:
        raise DimensionError(f"Dimension mismatch: {sorted(dimensions)}")
    if not dimensions:
        raise reader.error("Empty set without a dimension", start)
    return OrthohedralSet(dimensions.pop(), pieces)


def parse_isometry_from(reader: Reader) -> Isometry:
    start = reader.take("(")
    parts = [[]]
    while True:
        token = reader.take()
        match token.Text:
            case ")":
                break
            case ";":
                parts.append([])
            case ",":
                continue
            case _:
                parts[-1].append(token)
    if len(parts) != 3:
        raise reader.error("Isometry needs shift;permutation;signs", start)
    shift, image, signs = parts
    try:
        shift = tuple(int(token.Text) for token in shift)
        image = tuple(int(token.Text) - 1 for token in image)
        signs = tuple(SIGNS[token.Text] for token in signs)
        return Isometry(shift, SignedPermutation(image, signs))
    except (KeyError, ValueError) as error:
        if isinstance(error, PeiError):
            raise
        raise reader.error(f"Invalid isometry: {error}", start)


def parse_map_from(reader: Reader, require: str = "map") -> PeiMap:
    reader.take("P")
    reader.keyword("domain")
    domain = parse_set_from(reader)
    reader.keyword("pieces")

    def piece():
        reader.take("(")
        orthant = parse_orthant_from(reader)
        reader.take(",")
        reader.keyword("iso")
        iso = parse_isometry_from(reader)
        reader.take(")")
        return orthant, iso

    pieces = reader.sequence(piece, "[", "]")
    return PeiMap(domain, pieces, require)


def parse_germ_from(reader: Reader) -> Germ:
    start = reader.take("G")
    reader.keyword("dir")
    direction = reader.sequence(reader.sign)
    reader.keyword("frozen")

    def entry():
        axis = reader.integer()
        reader.take(":")
        return axis - 1, reader.integer()

    entries = dict(reader.sequence(entry, "{", "}"))
    frozen = tuple(entries.get(axis) for axis in range(len(direction)))
    try:
        return Germ(tuple(direction), frozen)
    except ValueError as error:
        if isinstance(error, PeiError):
            raise
        raise reader.error(f"Invalid germ: {error}", start)


def finish(reader: Reader, result):
    if not reader.at_end():
        raise reader.error(f"Unexpected token: {reader.peek()}")
    return result


def parse_orthant(text: str) -> Orthant:
    reader = Reader(text)
    return finish(reader, parse_orthant_from(reader))


def parse_set(text: str, dimension: int = None) -> OrthohedralSet:
    reader = Reader(text)
    return finish(reader, parse_set_from(reader, dimension))


def parse_map(text: str, require: str = "map") -> PeiMap:
    reader = Reader(text)
    return finish(reader, parse_map_from(reader, require))


def parse_germ(text: str) -> Germ:
    reader = Reader(text)
    return finish(reader, parse_germ_from(reader))


def parse_graph(text: str) -> ColoredGraph:
    """
    `V name:colour ...` lines declare vertices, `E a b` lines declare edges.
    """
    colors = {}
    edges = []
    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split("#", 1)[0].split()
        if not fields:
            continue
        column = line.index(fields[0]) + 1
        match fields[0]:
            case "V":
                for field in fields[1:]:
                    name, _, color = field.partition(":")
                    if not name or not re.fullmatch(r"\d+", color):
                        raise ParseError(f"Invalid vertex: {field}", number, line.index(field) + 1)
                    colors[name] = int(color)
            case "E":
                if len(fields) != 3:
                    raise ParseError("An edge needs two vertices", number, column)
                edges.append((fields[1], fields[2]))
            case _:
                raise ParseError(f"Unknown record: {fields[0]}", number, column)
    return ColoredGraph(colors, edges)


def parse(text: str):
    """
    An orthohedral set, a pei-map or a coloured graph, told apart by the first record.
    """
    reader = Reader(text)
    match reader.peek():
        case "P":
            return finish(reader, parse_map_from(reader))
        case "O" | "[":
            return finish(reader, parse_set_from(reader))
        case "G":
            return finish(reader, parse_germ_from(reader))
        case "V" | "E":
            return parse_graph(text)
        case None:
            raise ParseError("Empty input", 1, 1)
        case other:
            raise reader.error(f"Unknown record: {other}")


def serialize(value) -> str:
    return f"{value}\n"


def load(path: Path, kind: str = None):
    text = Path(path).read_text(encoding="utf-8")
    match kind:
        case None:
            return parse(text)
        case "set":
            return parse_set(text)
        case "map":
            return parse_map(text)
        case "graph":
            return parse_graph(text)
        case _:
            raise TypeError(f"Unsupported type: {kind}")


def dump(report, path: Path = None) -> str:
    """
    Writes the report to the file when a path is given; returns the text either way.
    """
    text = serialize(report)
    if path is not None:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")
    return text
