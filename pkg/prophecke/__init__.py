import os
from loguru import logger

from .combinatorics.root_datum import RootDatum, StandardFacet, build_root_datum
from .combinatorics.affine_weyl import AffineWeylGroup, ExtendedWeylElement
from .combinatorics.extended_group import ExtendedGroup, TildeElement

from .algebra.hecke_algebra import HeckeAlgebra, HeckeElement
from .algebra.bernstein import BernsteinMaps
from .algebra.levi import LeviAlgebra
from .algebra.ideal import IdealJ

from .modules.affine_characters import AffineCharacter, AffineCharacters
from .modules.induced_module import InducedModule, ModuleContext, induce
from .modules.supersingular import SupersingularModules
from .modules.weight_module import WeightCharacter, WeightModules

from .verification.suite import SuiteConfig, run_suite
from .verification.tables import emit_tables

from .utils.errors import (
    ConfigurationError,
    IntegralityError,
    ModeMismatchError,
    PreconditionError,
    TruncationOverflow,
)
from .utils.rng import RNG
from .utils.set_log_level import set_log_level
from .utils.set_up_mode import set_up_mode
from .utils.deployment_test import _deployment_test

__all__ = [
    "RootDatum",
    "StandardFacet",
    "build_root_datum",
    "AffineWeylGroup",
    "ExtendedWeylElement",
    "ExtendedGroup",
    "TildeElement",
    "HeckeAlgebra",
    "HeckeElement",
    "BernsteinMaps",
    "LeviAlgebra",
    "IdealJ",
    "AffineCharacter",
    "AffineCharacters",
    "InducedModule",
    "ModuleContext",
    "induce",
    "SupersingularModules",
    "WeightCharacter",
    "WeightModules",
    "SuiteConfig",
    "run_suite",
    "emit_tables",
    "ConfigurationError",
    "IntegralityError",
    "ModeMismatchError",
    "PreconditionError",
    "TruncationOverflow",
    "RNG",
    "set_log_level",
    "set_up_mode",
    "_deployment_test",
]

set_log_level(os.environ.get("PROP_HECKE_LOG_LEVEL", "WARNING"))
logger.info("Initializing prophecke.")
