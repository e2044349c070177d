import pytest

from dpcore import Problem, ProblemSyntaxError, parse_problem, preset


@pytest.mark.parametrize("text", [
    "vertpart(edgeless,edgeless)",
    "graphpart(3; tree,atmost(2))",
    "and(or(tree,edgeless),forest)",
    "edgepart(forest,forest,forest)",
])
def test_roundtrip(text):
    expr = parse_problem(text)
    assert parse_problem(str(expr)) == expr


def test_whitespace_ignored():
    assert parse_problem(" vertpart ( tree , tree ) ") == parse_problem("vertpart(tree,tree)")


@pytest.mark.parametrize("text", [
    "", "tree(", "vertpart(tree)", "graphpart(tree,tree)", "graphpart(-1; tree,tree)",
    "atmost()", "bogus", "tree tree", "and()", "vertpart(tree,tree))",
])
def test_syntax_errors(text):
    with pytest.raises(ProblemSyntaxError):
        parse_problem(text)


def test_presets():
    assert preset("3col") == parse_problem("vertpart(edgeless,edgeless,edgeless)")
    assert preset("two-trees") == parse_problem("vertpart(tree,tree)")
    assert preset("vc=4") == parse_problem("vertpart(atmost(4),edgeless)")
    assert preset("arb=3") == parse_problem("edgepart(forest,forest,forest)")
    for bad in ("arb=1", "vc", "vc=x", "nope"):
        with pytest.raises(ValueError):
            preset(bad)


def test_problem_fields():
    expr = parse_problem("graphpart(2; edgeless,edgeless)")
    assert isinstance(expr, Problem) and expr.p == 2 and expr.is_partition
    assert not parse_problem("tree").is_partition
