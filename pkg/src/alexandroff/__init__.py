"""Finite (Alexandroff) topological spaces: minimal neighborhoods, components,
and maps with closed graph."""
from .components import Partition, components, components_oracle
from .errors import (
    DuplicatePoint,
    EmptyCodomain,
    EmptyWindow,
    EnumerationTooLarge,
    InteriorityViolation,
    MapSpaceMismatch,
    MissingNeighborhood,
    OracleTooLarge,
    ReflexivityViolation,
    SizeLimit,
    TopologyError,
    UnknownPoint,
    ValidationError,
)
from .generators import GenConfig, random_map, random_space
from .khalimsky import khalimsky_closed_points, khalimsky_line, khalimsky_space
from .maps import (
    CountReport,
    GraphSet,
    NotConstantOnComponent,
    SpaceMap,
    ValueNotClosed,
    closed_graph_witness,
    count_closed_graph_maps,
    enumerate_closed_graph_maps,
    graph_of,
    has_closed_graph,
    has_closed_graph_oracle,
    is_continuous,
    restrict,
)
from .space import FinSpace, product, validate
from .dot import export_dot

__version__ = "0.1.0"
