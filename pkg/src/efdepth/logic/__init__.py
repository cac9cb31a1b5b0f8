from .evaluate import CompiledFormula, evaluate
from .formula import (
    And, AtomAdj, AtomEq, Exists, Forall, Formula, FormulaError, Implies, Not, Or, ParseError,
    conj, disj, free_variables, parse, quantifier_depth, to_text,
)
from .synth import (
    complement_transform, random_sentence, synth_pattern_predicate, synth_thm11, synth_trivial,
)
