"""Euclidean bottleneck spanning trees with bounded degree.

Typical use::

    from bottleneck_trees import PointSet, bounded_degree_tree
    res = bounded_degree_tree(PointSet(points), K=3)
    res.tree.edges, res.bottleneck, res.ratio
"""
from .checks import (
    CheckReport,
    check_abu_affash,
    check_all,
    check_lemma1,
    check_lemma2,
    check_two_angle,
    two_angle_ratio,
    verify_result,
)
from .constructions import NamedConstruction, generate, random_points
from .emst import RootedTree, Tree, bottleneck, compute_emst, enforce_degree5, hop_distance, root_at_leaf
from .errors import (
    BadParams,
    BottleneckTreeError,
    BudgetExceeded,
    DegenerateAngle,
    DuplicatePoints,
    GuaranteeViolated,
    LemmaViolated,
    NormalizationFailed,
    NotALeaf,
    PreconditionViolated,
)
from .exact import ExactResult, RatioReport, bottleneck_hamiltonian_path, exact_bottleneck_tree, ratio
from .geometry import EPS_ANG, EPS_LEN, Point, PointSet, angle_at, dist, radial_order
from .transforms import (
    AngleSlot,
    DegreeBoundedTree,
    TransformResult,
    bounded_degree_tree,
    choose_angles,
    degree2_path,
    degree3_transform,
    degree4_transform,
)

__version__ = "0.1.0"
