from ._encoders import (
    encode_ghz_direct,
    encode_msp,
    encode_stabilizer_qts,
    ghz_isometry,
    msp_eigensystem,
    msp_isometry,
    stabilizer_isometry,
)
from ._instance import REFERENCE, MixedSchemeInstance, SchemeInstance, discard_share, share_label
from ._secret import SecretSpec
from ._teleport import OUTCOMES, bell_vector, teleport_protocol

__all__ = [
    "REFERENCE",
    "SecretSpec",
    "SchemeInstance",
    "MixedSchemeInstance",
    "share_label",
    "stabilizer_isometry",
    "msp_isometry",
    "ghz_isometry",
    "encode_stabilizer_qts",
    "encode_msp",
    "msp_eigensystem",
    "encode_ghz_direct",
    "OUTCOMES",
    "bell_vector",
    "teleport_protocol",
    "discard_share",
]
