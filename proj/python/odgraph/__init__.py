"""Order-divisor graphs of finite groups."""

from ._core import (
    GroupSpec,
    ResourceError,
    deg_dn,
    deg_zn,
    deg_zn_prime_power,
    degree_sum_zn_prime_power,
    degree_via_profile,
    divisors,
    element_orders,
    euler_phi,
    export,
    girth_of_cyclic_product,
    girth_of_group,
    girth_of_product,
    group_order,
    is_composite,
    is_prime,
    is_star_group,
    multiplicative_order,
    oracle_report,
    order_profile,
    order_sum_prime_power,
    parse_spec,
    size_dn,
    size_via_profile,
    size_zn,
    size_zn_prime_power,
    sweep,
    verify_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
