"""Lie poset algebras: posets, exact linear algebra, and certified breadth."""

from .algebra import (FULL, NILPOTENT, TYPEA, AlgebraElement, AlgebraMismatch,
                      BasisElement, LiePosetAlgebra, build)
from .breadth import (Bound, BreadthReport, NoKnownFormula, NoKnownWitness,
                      NotDoubleFan, breadth, breadth_spectrum_sample,
                      formula_breadth, mx_ordered, paper_witness,
                      sample_generic, upper_bounds)
from .exactla import (DimensionMismatch, RationalMatrix, nullspace_basis,
                      rank, span_dim)
from .poset import (CycleDetected, FamilyDescriptor, FinitePoset,
                    InvalidParameter, OutOfRange, PosetError,
                    UnsupportedFamily, build_family,
                    count_non_covering_closed_form, from_covers, random_poset)

__all__ = [name for name in dir() if not name.startswith("_")]
