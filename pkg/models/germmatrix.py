from models.errors import ValidationError


class GermMatrix:
    """
    Finitely supported integral matrix over (rank-k germ, axis slot); entries add up to 0.
    Only non-zero rows are stored.
    """
    K: int
    Rows: dict

    def __init__(self, k: int, rows: dict = None, check: bool = True):
        if k < 1:
            raise ValueError(f"Invalid matrix width: {k}")
        self.K = k
        self.set_rows(rows if rows else {}, check)

    def __str__(self):
        lines = [f"matrix k={self.K} rows={len(self.Rows)}"]
        for key in sorted(self.Rows):
            entries = ",".join(str(v) for v in self.Rows[key])
            lines.append(f"row germ=({key}) entries=({entries})")
        return "\n".join(lines)

    def __repr__(self):
        return f"GermMatrix({self.K}, {self.Rows!r})"

    def __eq__(self, other):
        return self.K == other.K and self.Rows == other.Rows

    def __add__(self, other):
        if self.K != other.K:
            raise ValueError(f"Invalid matrix width: {other.K}")
        rows = dict(self.Rows)
        for key, row in other.Rows.items():
            rows[key] = tuple(a + b for a, b in zip(rows.get(key, (0,) * self.K), row))
        return GermMatrix(self.K, rows, check=False)

    def __neg__(self):
        return GermMatrix(self.K, {key: tuple(-v for v in row) for key, row in self.Rows.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, factor: int):
        return GermMatrix(self.K, {key: tuple(factor * v for v in row) for key, row in self.Rows.items()}, check=False)

    __rmul__ = __mul__

    def set_rows(self, rows: dict, check: bool = True):
        result = {}
        for key, row in rows.items():
            row = tuple(int(v) for v in row)
            if len(row) != self.K:
                raise ValueError(f"Invalid row length: {row}")
            if any(row):
                result[key] = row
        if check and sum(sum(row) for row in result.values()):
            raise ValidationError("Matrix entries do not add up to 0")
        self.Rows = result

    def is_zero(self) -> bool:
        return not self.Rows

    def row(self, key) -> tuple[int, ...]:
        return self.Rows.get(key, (0,) * self.K)

    def flow_column(self) -> dict:
        return {key: sum(row) for key, row in self.Rows.items()}

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(row[i] for row in self.Rows.values()) for i in range(self.K))


class Classification:
    InD: bool
    InE: bool
    FlowColumn: dict

    def __init__(self, in_d: bool, in_e: bool, flow_column: dict):
        self.InD = in_d
        self.InE = in_e
        self.FlowColumn = flow_column

    def __str__(self):
        flows = ",".join(f"{value}" for _, value in sorted(self.FlowColumn.items()))
        return f"in_D={str(self.InD).lower()} in_E={str(self.InE).lower()} flow_column=({flows})"
