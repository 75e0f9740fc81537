"""Local symmetry-preserving operations on embedded graphs."""

from .embedded import (
    EmbeddedGraph,
    SubgraphComponent,
    build_embedded_graph,
    canonical_code,
    embedded_subgraph,
    euler_characteristic,
    faces,
    genus,
    iso,
    NotInvolution,
    DartMissingOrDuplicated,
    Disconnected,
    EmptySelection,
)
from .chambers import (
    BarycentricSubdivision,
    ChamberSystem,
    DoubleChamberSystem,
    NotOnChamberBoundary,
    barycentric,
    chamber_flip,
    double_chambers,
)
from .topology import (
    Bridge,
    CkReport,
    FaceIsBridged,
    InternalComponent,
    bridges,
    ck_via_cycles,
    face_width,
    internal_component,
    is_ck_embedded,
    is_contractible,
)
from .operations import (
    ApplicationResult,
    CutPath,
    DoubleChamberPatch,
    InvalidLopsp,
    InvalidLsp,
    InvalidOperation,
    LopspOperation,
    LspOperation,
    UnknownOperation,
    apply,
    apply_lsp_direct,
    catalog,
    catalog_names,
    classify_ck,
    double_chamber_patch,
    find_cut_path,
    inflation_factor,
    lsp_to_lopsp,
    validate_lopsp,
    validate_lsp,
)
from .delaney import (
    DelaneySymbol,
    RotationInfo,
    curvature,
    dd_from_lopsp,
    dd_from_lsp,
    is_dd_morphism,
    rotation_orders,
    validate_dd,
)

__all__ = [
    "EmbeddedGraph",
    "SubgraphComponent",
    "build_embedded_graph",
    "canonical_code",
    "embedded_subgraph",
    "euler_characteristic",
    "faces",
    "genus",
    "iso",
    "NotInvolution",
    "DartMissingOrDuplicated",
    "Disconnected",
    "EmptySelection",
    "BarycentricSubdivision",
    "ChamberSystem",
    "DoubleChamberSystem",
    "NotOnChamberBoundary",
    "barycentric",
    "chamber_flip",
    "double_chambers",
    "Bridge",
    "CkReport",
    "FaceIsBridged",
    "InternalComponent",
    "bridges",
    "ck_via_cycles",
    "face_width",
    "internal_component",
    "is_ck_embedded",
    "is_contractible",
    "ApplicationResult",
    "CutPath",
    "DoubleChamberPatch",
    "InvalidLopsp",
    "InvalidLsp",
    "InvalidOperation",
    "LopspOperation",
    "LspOperation",
    "UnknownOperation",
    "apply",
    "apply_lsp_direct",
    "catalog",
    "catalog_names",
    "classify_ck",
    "double_chamber_patch",
    "find_cut_path",
    "inflation_factor",
    "lsp_to_lopsp",
    "validate_lopsp",
    "validate_lsp",
    "DelaneySymbol",
    "RotationInfo",
    "curvature",
    "dd_from_lopsp",
    "dd_from_lsp",
    "is_dd_morphism",
    "rotation_orders",
    "validate_dd",
]
