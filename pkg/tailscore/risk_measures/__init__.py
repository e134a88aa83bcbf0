from .measures import (integrate_var_plus, mean, variance, es, es_from_tail, rvar, lower_es, expectile, shortfall,
                       ratio_of_expectations)
from .generators import GeneratorSpec, TailPairSpec, tail_risk
from .axioms import AXIOMS, AxiomReport, axiom_probe, are_comonotonic, law
