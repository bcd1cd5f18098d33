import networkx as nx

from models.errors import ValidationError


class ColoredGraph:
    """
    A finite graph whose vertex set is split into colour classes; no edge joins two vertices of one colour.
    """
    Colors: dict[str, int]
    Edges: set[frozenset]

    def __init__(self, colors: dict = None, edges: list = None):
        self.set_colors(colors if colors else {})
        self.set_edges(edges if edges else [])

    def __str__(self):
        vertices = " ".join(f"{vertex}:{color}" for vertex, color in sorted(self.Colors.items()))
        lines = [f"V {vertices}"] if self.Colors else []
        lines += [f"E {a} {b}" for a, b in sorted(tuple(sorted(edge)) for edge in self.Edges)]
        return "\n".join(lines)

    def __eq__(self, other):
        return self.Colors == other.Colors and self.Edges == other.Edges

    def set_colors(self, colors: dict):
        for vertex, color in colors.items():
            if not isinstance(vertex, str):
                raise TypeError(f"Unsupported type: {type(vertex)}")
            if not isinstance(color, int) or color < 1:
                raise ValueError(f"Invalid colour: {color}")
        self.Colors = dict(colors)

    def set_edges(self, edges: list):
        result = set()
        for first, second in edges:
            for vertex in (first, second):
                if vertex not in self.Colors:
                    raise ValidationError(f"Unknown vertex: {vertex}")
            if self.Colors[first] == self.Colors[second]:
                raise ValidationError(f"Monochromatic edge: {first} {second}")
            result.add(frozenset((first, second)))
        self.Edges = result

    def add_edge(self, first: str, second: str):
        self.set_edges([tuple(edge) for edge in self.Edges] + [(first, second)])

    @property
    def Classes(self) -> dict[int, list[str]]:
        result = {}
        for vertex, color in sorted(self.Colors.items()):
            result.setdefault(color, []).append(vertex)
        return dict(sorted(result.items()))

    @property
    def Height(self) -> int:
        return len(self.Classes)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.Colors))
        graph.add_edges_from(tuple(sorted(edge)) for edge in self.Edges)
        return graph


class SimplicialComplex:
    """
    Closed under faces; simplices are sorted vertex tuples grouped by dimension.
    """
    Vertices: list[str]
    Simplices: dict[int, list[tuple]]

    def __init__(self, simplices: list):
        self.Simplices = {}
        for simplex in sorted({tuple(sorted(simplex)) for simplex in simplices}):
            self.Simplices.setdefault(len(simplex) - 1, []).append(simplex)
        self.Vertices = [simplex[0] for simplex in self.Simplices.get(0, [])]

    def __len__(self):
        return sum(len(simplices) for simplices in self.Simplices.values())

    @property
    def Dimension(self) -> int:
        return max(self.Simplices, default=-1)

    def boundary(self, dimension: int) -> list[list[int]]:
        """
        The integral boundary matrix from dimension-simplices to (dimension − 1)-simplices; dimension 0
        maps onto the augmentation.
        """
        columns = self.Simplices.get(dimension, [])
        if dimension == 0:
            return [[1] * len(columns)]
        rows = self.Simplices.get(dimension - 1, [])
        index = {simplex: position for position, simplex in enumerate(rows)}
        matrix = [[0] * len(columns) for _ in rows]
        for column, simplex in enumerate(columns):
            for position in range(len(simplex)):
                face = simplex[:position] + simplex[position + 1:]
                matrix[index[face]][column] = (-1) ** position
        return matrix
