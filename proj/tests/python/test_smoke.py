"""Smoke tests for the python bindings."""

try:
    from trineg import _core
except ImportError:
    import _core


def test_parse_and_render():
    p = _core.parse_program("p :- not q, ~w r.\nr :- ~w p, ~s s.")
    assert p.base == ["p", "q", "r", "s"]
    assert p.clause_count == 2
    assert _core.parse_program(str(p)) == p


def test_eval_literal():
    p = _core.parse_program("p :- not q.")
    assert _core.eval_literal(p, ["p"], ["q"], "not q") == "t"
    assert _core.eval_literal(p, [], [], "~s p") == "f"


def test_semantic_fixpoints():
    p = _core.parse_program("p :- not q, ~w r. r :- ~w p, ~s s.")
    fixpoints = _core.semantic_fixpoints(p)
    assert fixpoints == [
        {"true": ["p"], "false": ["q", "r", "s"]},
        {"true": ["r"], "false": ["p", "q", "s"]},
    ]
    assert _core.semantic_fixpoints(_core.parse_program("p :- ~w q. q :- p, ~s s.")) == []


def test_stable_and_wfm():
    p = _core.parse_program("p :- not q.")
    assert _core.stable_models(p) == [{"true": ["p"], "false": ["q"]}]
    assert _core.well_founded_model(p) == {"true": ["p"], "false": ["q"]}


def test_admissible_and_query():
    p = _core.parse_program("p :- ~s q. q :- q.")
    adm = _core.admissible_pairs(p)
    assert adm["pairs"] == [{"true": [], "false": ["p"]}]
    assert adm["canonical"] == {"true": [], "false": ["p"]}
    assert _core.query(p, "?- not p.") == "succeeds"


def test_negation_chain():
    assert _core.negation_chain_truth("not", "~w", "u") == "f"
    assert _core.negation_chain_truth("~w", "not", "u") == "t"


def test_random_program_reproducible():
    a = _core.random_program(atoms=4, clauses=5, seed=9)
    b = _core.random_program(atoms=4, clauses=5, seed=9)
    assert str(a) == str(b)
