"""borsuk_lab: finite models of graded Banach algebras.

Three layers:

* :mod:`borsuk_lab.algebra` - sampled functions as a stand-in for ``C(X)``,
  grading operators, spectra and convex-hull tests, log/exp.
* :mod:`borsuk_lab.sphere` - icosphere meshes, finite-order maps of S^2,
  symmetrized functions and their zeros, discrete logarithm lifting.
* :mod:`borsuk_lab.freegroup` - reduced words in F_2, finite quotients and
  partitions, the group algebra and truncated operator norms.
"""

__version__ = "0.1.0"
