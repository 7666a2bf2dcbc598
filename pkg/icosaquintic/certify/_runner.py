import logging
import typing

from .. import bjseries, icosa, invariantmap, recovery
from ..contracts import Certificate
from ..errors import QuinticError

logger = logging.getLogger(__name__)

REGISTRY: typing.Dict[str, typing.Callable[[], Certificate]] = {
    "syzygy": icosa.verify_syzygy,
    "vertices": icosa.verify_vertices,
    "group": icosa.group_checks,
    "products": invariantmap.verify_product_identities,
    "pq": invariantmap.verify_pq_identity,
    "equivariance": invariantmap.verify_equivariance,
    "divisibility": recovery.verify_cube_polys,
    "transvectants": recovery.verify_gordon_forms,
    "linear_forms": recovery.verify_linear_form_identities,
    "bc_display": recovery.verify_bc_display,
    "series": bjseries.verify_term_ratios,
}


def run_certificates(names: typing.Optional[typing.Iterable[str]] = None) -> typing.List[Certificate]:
    """Run the named certificates, all of them by default, in registry order.

    A certificate whose construction raises is reported as failed.

    :raises KeyError: On an unknown name.
    """
    selected = list(REGISTRY) if names is None else list(names)
    unknown = [n for n in selected if n not in REGISTRY]
    if unknown:
        raise KeyError(f"Unknown certificates: {unknown}")
    results = []
    for name in selected:
        try:
            cert = REGISTRY[name]()
        except QuinticError as exc:
            logger.error("Certificate %s raised: %s", name, exc)
            cert = Certificate(name, {"construction": False})
        logger.info(
            "Certificate %s: %s in %.2fs",
            name,
            "passed" if cert.passed else f"failed {cert.failures}",
            cert.elapsed,
        )
        results.append(cert)
    return results


def format_table(certificates: typing.Sequence[Certificate]) -> str:
    """A fixed-width pass/fail table, one row per certificate."""
    width = max((len(c.name) for c in certificates), default=4)
    lines = [f"{'name':<{width}}  status  seconds  failures"]
    for c in certificates:
        status = "PASS" if c.passed else "FAIL"
        lines.append(
            f"{c.name:<{width}}  {status:<6}  {c.elapsed:7.2f}  {', '.join(c.failures) or '-'}"
        )
    return "\n".join(lines)
