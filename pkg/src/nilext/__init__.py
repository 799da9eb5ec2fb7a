"""Exact-arithmetic verification for a catalog of small nilpotent algebras
built as central extensions of lower-dimensional ones."""

from .algebra import Algebra, fingerprint
from .catalog import (all_ids, catalog_json, instantiate, reconstruct,
                      sample_parameters, verify_catalog)
from .extensions import (BilinearForm, LineClass, central_extension,
                         classify_line, cohomology, parse_form, render_form)
from .orbits import iso_search, orbit_census_fp
from .scalars import FIELDS, QQ, QZ12

__version__ = "0.1.0"

__all__ = [
    "Algebra", "BilinearForm", "FIELDS", "LineClass", "QQ", "QZ12",
    "all_ids", "catalog_json", "central_extension", "classify_line",
    "cohomology", "fingerprint", "instantiate", "iso_search",
    "orbit_census_fp", "parse_form", "reconstruct", "render_form",
    "sample_parameters", "verify_catalog",
]
