from ._core import (
    ParseError,
    a_to_l,
    base_point,
    closure,
    dual,
    dual_data,
    is_image_of_a,
    jacquet,
    jacquet_str,
    multiplicity,
    swap_sl2,
    symmetry,
    verify,
)

__all__ = [
    "ParseError",
    "a_to_l",
    "base_point",
    "closure",
    "dual",
    "dual_data",
    "is_image_of_a",
    "jacquet",
    "jacquet_str",
    "multiplicity",
    "swap_sl2",
    "symmetry",
    "verify",
]
