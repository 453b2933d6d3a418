# semiloc/schemas/__init__.py

from .channel_schemas import ChannelFileSchema, DimsSchema, MetadataSchema
from .report_schemas import DecompositionSummarySchema, ReportSchema, VerdictSchema, VerificationSchema

__all__ = [
    "ChannelFileSchema",
    "DecompositionSummarySchema",
    "DimsSchema",
    "MetadataSchema",
    "ReportSchema",
    "VerdictSchema",
    "VerificationSchema",
]
