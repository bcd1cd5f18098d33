from pathlib import Path

from pytest import raises

import cli
from models.errors import DimensionError, ParseError
from models.germ import Germ
from models.orthant import Orthant
from models.orthoset import OrthohedralSet
from utils import pei, textformat

STACK = "./src/stack.txt"
MAP = "./src/map3.txt"


def run(capsys, *argv) -> tuple[int, str]:
    code = cli.run(list(argv))
    return code, capsys.readouterr().out


class Tests:
    def test_tokenize(self):
        tokens = textformat.tokenize("O base=(1,-2) # comment\n  dir=(+,0)")
        assert [token.Text for token in tokens] == ["O", "base", "=", "(", "1", ",", "-2", ")",
                                                    "dir", "=", "(", "+", ",", "0", ")"]
        assert (tokens[8].Line, tokens[8].Column) == (2, 3)

    def test_parse_values(self):
        assert textformat.parse_orthant("O base=(1,-2) dir=(+,0)") == Orthant((1, -2), (1, 0))
        bracketed = textformat.parse_set("[O base=(0) dir=(+), O base=(-1) dir=(-)]")
        bare = textformat.parse_set("O base=(-1) dir=(-)\nO base=(0) dir=(+)")
        assert bracketed == bare == OrthohedralSet.whole(1)
        assert textformat.parse("G dir=(+,0) frozen={2:7}") == Germ((1, 0), (None, 7))
        assert textformat.parse_set("[]", 2) == OrthohedralSet(2)

    def test_parse_errors(self):
        with raises(ParseError) as error:
            textformat.parse_orthant("O base=(1,2) dir=(+,x)")
        assert str(error.value) == "line 1, column 21: Invalid direction token: x"
        with raises(ParseError):
            textformat.parse_orthant("O base=(1,2) dir=(+)")
        with raises(ParseError):
            textformat.parse_orthant("O base=(1,2) dir=(+,+) extra")
        with raises(DimensionError):
            textformat.parse_set("O base=(0) dir=(+)\nO base=(0,0) dir=(+,+)")
        with raises(ParseError) as error:
            textformat.parse_graph("V a:1 b:x")
        assert (error.value.Line, error.value.Column) == (1, 7)
        with raises(ParseError):
            textformat.parse("")

    def test_map_text(self):
        g = textformat.load(Path(MAP), "map")
        assert g.Bijective and g.Pet
        assert pei.equals(textformat.parse_map(str(g)), g)
        assert textformat.serialize(g) == f"{g}\n"

    def test_set_eval(self, capsys):
        code, out = run(capsys, "set-eval", STACK)
        assert code == 0
        assert out == ("rank=2 height=3 pieces=3\n[O base=(0,0,0) dir=(+,+,0), O base=(0,0,1) dir=(+,+,0), "
                       "O base=(0,0,2) dir=(+,+,0)]\n")
        code, out = run(capsys, "set-eval", STACK, "--op", "equals", "--with", STACK)
        assert (code, out) == (0, "equals=true\n")

    def test_elem_eval(self, capsys):
        code, out = run(capsys, "elem-eval", MAP, "--point", "0,3,0")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "injective=true bijective=true pet=true diagonal=false rank=2"
        assert lines[1] == "support=[O base=(0,0,0) dir=(+,+,0), O base=(0,0,1) dir=(+,+,0)]"
        assert lines[2] == "point=(0,3,0) image=(0,3,1)"

    def test_invariants(self, capsys):
        code, out = run(capsys, "invariants", MAP, "--k", "2")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == ("rank=2 k=2 in_Gk=true in_C=true in_Cord=true stagnant=false parity_germs=0 "
                            "parity_axes=0 in_altGk=true is_pet=true")
        assert "row germ=(G dir=(+,+,0) frozen={3:1}) entries=(1,0)" in lines
        assert lines[-2] == "in_D=false in_E=false flow_column=(-1,1)"
        assert lines[-1] == "submodule p=1 q=1"

    def test_reports(self, capsys):
        code, out = run(capsys, "fl-bounds", STACK, "--group", "pet")
        assert code == 0
        assert out == ("group=pet lower=2 upper=2 exact=2 [lower: c(S)-1 by the stack-of-orthants theorem; "
                       "upper: link height minus 1 over Y={1} by the link-height theorem]\n")
        code, out = run(capsys, "flag-homology", "./src/k22.graph")
        assert (code, out) == (0, "conditions=true betti=[0,1] torsion=[[],[]] bouquet=(1,1)\n")
        code, out = run(capsys, "flag-homology", "./src/k33.graph", "--simplex-cap", "5")
        assert code == 4 and out.startswith("error category=budget ")
        code, out = run(capsys, "verify-identities", "--suite", "endotranslations")
        assert code == 0 and out.splitlines()[-1] == "summary passed=7 total=7"

    def test_errors(self, capsys):
        code, out = run(capsys, "set-eval", "./src/bad_dir.txt")
        assert (code, out) == (2, "error category=syntax message=line 1, column 21: Invalid direction token: x\n")
        code, out = run(capsys, "set-eval", "./src/missing.txt")
        assert code == 2 and out.startswith("error category=io ")
        code, out = run(capsys, "set-eval", STACK, "--op", "union", "--with", "./src/ray.txt")
        assert code == 3 and out.startswith("error category=dimension ")
        code, out = run(capsys, "factor", "./src/map3.txt", "--abelianization", "1")
        assert code == 3 and out.startswith("error category=precondition ")
        for operation in ("union", "intersect", "difference", "equals"):
            code, out = run(capsys, "set-eval", STACK, "--op", operation)
            assert (code, out) == (3, f"error category=precondition message=--op {operation} needs --with\n")

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "report.txt"
        code, out = run(capsys, "--output", str(target), "flag-homology", "./src/k22.graph")
        assert (code, out) == (0, "")
        assert target.read_text(encoding="utf-8").startswith("conditions=true")
