"""Fully commutative elements of affine Coxeter groups of types D and B.

Heaps and Cartier-Foata normal forms, star and weak star reductions with the
classification of irreducible elements, the decorated Temperley-Lieb diagram
algebra of type D and the a-function computed on both sides.
"""

__version__ = "0.1.0"
