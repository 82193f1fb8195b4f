"""Finite branched covers of surfaces: monodromy, curve lifting and Birman-Hilden verdicts."""
from .cover import InvalidCover, MonodromyCover, from_images, validate
from .lifting import bh_verdict, essential_flags, wcl_decision
from .orbit import canonicalize, mcg_orbit
from .presentation import Signature

__all__ = ["InvalidCover", "MonodromyCover", "Signature", "bh_verdict", "canonicalize",
           "essential_flags", "from_images", "mcg_orbit", "validate", "wcl_decision"]
__version__ = "0.1.0"
