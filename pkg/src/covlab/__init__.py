"""covlab: a desk-scale numerical laboratory for Green-function-based
changes of variables between a Lipschitz graph domain and its bi-Lipschitz
perturbations.

Subpackages are organized by pipeline stage:

- ``geometry``     graph domains, bi-Lipschitz maps, Whitney decompositions
- ``green``        Green function with pole at infinity (finite differences
                   plus closed forms), derivatives, gradient bounds
- ``frame``        the moving orthonormal frame built from the Green gradient
- ``perturb``      boundary displacement, mollified perturbation field,
                   its gradient split, and best-affine-fit beta numbers
- ``cov``          the perturbed frame, the change of variables rho, its
                   Jacobian blocks, and the induced operator coefficients
- ``carleson``     Carleson-measure norm estimators over Whitney boxes
- ``solvability``  boundary density kappa, reverse Hoelder constants,
                   harmonic measure, and the base-vs-perturbed experiment
- ``cli``          scenario-driven command line front end
"""

from covlab.errors import CovlabError, InputError, InvariantViolation

__all__ = ["CovlabError", "InputError", "InvariantViolation"]
__version__ = "0.1.0"
