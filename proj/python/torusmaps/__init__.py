from ._core import (
    automorphism_count,
    classify,
    covers,
    cyclic_cover,
    hnf,
    is_isomorphic,
    minimal_cover,
    oracle_orbit_count,
    render_svg,
    tiling_geometry,
    tiling_types,
)

__all__ = [
    "automorphism_count",
    "classify",
    "covers",
    "cyclic_cover",
    "hnf",
    "is_isomorphic",
    "minimal_cover",
    "oracle_orbit_count",
    "render_svg",
    "tiling_geometry",
    "tiling_types",
]
