"""Balanced lines of bichromatic planar point sets.

Exact enumeration of balanced lines, allowable-sequence construction via a
rotating sweep, and certificate generation for the min(b, r) lower bound.
"""

from .balance import (
    BalancedWitness,
    CorrespondenceReport,
    WitnessSource,
    check_correspondence,
    enumerate_balanced_lines,
    scan_balanced_transpositions,
    witnesses_to_json,
)
from .certificate import (
    Border,
    Case,
    Certificate,
    certificate_to_json,
    certify,
    classify_case,
    verify_certificate,
)
from .curves import (
    ChangeEvent,
    CurveClass,
    CurveSpec,
    WeightTrack,
    classify,
    classify_change,
    find_weight_changes,
    mirror_track,
    track,
)
from .errors import (
    BadParamsError,
    BalancedLinesError,
    CollinearWitnessError,
    DegenerateInputError,
    FailsToSeparateError,
    GenerationExhaustedError,
    InsufficientBorderError,
    MixedColorsError,
    ParityError,
    ProofGapError,
)
from .geometry import (
    ChromaticPoint,
    Color,
    GeneralPositionReport,
    Instance,
    halfplane_weights,
    instance_from_json,
    instance_to_json,
    orientation,
    perturb,
    validate_general_position,
)
from .harness import (
    Check,
    FuzzConfig,
    FuzzMode,
    FuzzReport,
    fuzz,
    random_instance,
    render_svg,
    separated_instance,
)
from .sequence import (
    AllowableSequence,
    Transposition,
    build_from_points,
    permutation_at,
    random_sequence,
    reverse_sequence,
    sequence_from_text,
    sequence_to_text,
    transposition_at,
    validate,
)

__version__ = "0.1.0"
