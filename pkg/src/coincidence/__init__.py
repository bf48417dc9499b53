"""Nielsen and minimum coincidence numbers for maps from spheres to spherical space forms.

The package is layered: :mod:`abelian` does exact arithmetic in finitely
generated abelian groups, :mod:`catalog` loads homotopy group data,
:mod:`nielsen` and :mod:`minimum` evaluate the coincidence invariants and
:mod:`census` counts pairs by their Nielsen numbers.
"""

from .abelian import (
    INFINITE,
    FgAbGroup,
    GroupElement,
    Homomorphism,
    Subgroup,
    compose,
    count_two_torsion,
    image,
    kernel,
    smith_normal_form,
)
from .catalog import (
    Catalog,
    SphereGroupKey,
    bundled_catalog,
    default_catalog,
    kernel_sequence,
    load_catalog,
    loads_catalog,
    validate_catalog,
)
from .census import (
    census_bruteforce,
    census_closed_form,
    loose_pairs,
    projection_consistency,
    sphere_census,
)
from .errors import *  # noqa: F401,F403
from .minimum import Certainty, MinimumVerdict, Undecided, mc, mcc
from .nielsen import (
    Clause,
    NielsenQuery,
    NielsenVerdict,
    hierarchy_check,
    nielsen_function_profile,
    nielsen_number,
    nielsen_value,
)

__version__ = "0.1.0"
