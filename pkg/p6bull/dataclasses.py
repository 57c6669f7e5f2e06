from dataclasses import MISSING, field
from typing import Any, Callable, Dict, Optional


##############################################################
# Field helpers for the marshmallow-dataclass models (CampaignConfig, RunReport).
#
#   nmax: VertexCount = field(default=12, metadata=dict(required=False, metadata=dict(description='...')))
# becomes
#   nmax: VertexCount = optional_field(default=12, description='...')
##############################################################
def _field(
    required: bool,
    default: Any,
    default_factory: Callable,
    description: Optional[str],
    schema_kwargs: Dict[str, Any],
):
    # a None default next to a factory means "use the factory"
    if default_factory is not MISSING and default is None:
        default = MISSING

    return field(
        default=default,
        default_factory=default_factory,
        metadata=dict(
            **schema_kwargs,
            required=required,
            metadata={} if description is None else {'description': description},
        ),
    )


def required_field(
    default: Any = MISSING,
    default_factory: Callable = MISSING,
    description: Optional[str] = None,
    # Marshmallow field kwargs, e.g. validate=
    **schema_kwargs,
):
    return _field(True, default, default_factory, description, schema_kwargs)


def optional_field(
    default: Any = None,
    default_factory: Callable = MISSING,
    description: Optional[str] = None,
    # Marshmallow field kwargs, e.g. validate=
    **schema_kwargs,
):
    return _field(False, default, default_factory, description, schema_kwargs)
