"""3-valued semantics engine for ground logic programs with default (not),
weak (~w) and strict (~s) negation."""

from trineg._core import (
    GuardError,
    NoAdmissibleClosureError,
    ParseError,
    Program,
    ProgramClassError,
    admissible_pairs,
    eval_literal,
    models,
    negation_chain_truth,
    parse_program,
    query,
    random_program,
    render_program,
    semantic_fixpoints,
    stable_models,
    well_founded_model,
)

__all__ = [
    "GuardError",
    "NoAdmissibleClosureError",
    "ParseError",
    "Program",
    "ProgramClassError",
    "admissible_pairs",
    "eval_literal",
    "models",
    "negation_chain_truth",
    "parse_program",
    "query",
    "random_program",
    "render_program",
    "semantic_fixpoints",
    "stable_models",
    "well_founded_model",
]
