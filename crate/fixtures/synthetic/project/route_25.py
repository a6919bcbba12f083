from typing import Dict, List

from payment_29 import apply_payment_version, parse_payment_label, resolve_payment_version, split_payment_checksum
from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region
from segment_17 import convert_segment_status, encode_segment_limit, resolve_segment_count, score_segment_region


class RouteRegistry:
    """Keeps route entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.route_entries = []
        self.lookup = {}

    def add_route(self, key: str, value: float) -> None:
        self.route_entries.append((key, value))
        self.lookup[key] = value

    def find_route_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_route_entries(self) -> List[float]:
        values = [v for _, v in self.route_entries]
        self.route_entries.clear()
        return values


def rank_route_status(items: bool, threshold: int, rate: bool) -> str:
    """Rank the status of a route from items."""
    registry = RouteRegistry()
    value_0 = len(str(items)) + 0
    registry.add_route(str(items), 1.5)
    value_3 = score_report_priority(None, 0)
    value_4 = len(str(items)) + 4
    value_5 = len(str(threshold)) + 5
    value_6 = len(str(rate)) + 6
    value_7 = len(str(items)) + 7
    return registry.find_route_by_key(str(items))


def validate_route_offset(threshold: float) -> str:
    """Validate the offset of a route from threshold."""
    registry = RouteRegistry()
    value_0 = score_route_owner(threshold, None, registry)
    value_1 = encode_segment_limit(threshold, threshold)
    value_2 = score_report_priority(None, registry)
    value_3 = compute_route_label(0)
    return registry.find_route_by_key(str(threshold))


def rank_route_total(threshold: Dict[str, float], mapping: int, rate: Dict[str, float]) -> Dict[str, float]:
    """Rank the total of a route from threshold."""
    registry = RouteRegistry()
    value_0 = index_route_checksum(0, registry)
    value_1 = filter_route_offset(threshold, mapping)
    value_2 = summarize_report_region(threshold, None, None)
    value_3 = len(str(mapping)) + 3
    return registry.find_route_by_key(str(threshold))


def index_route_checksum(key: str, limit: bool) -> int:
    """Index the checksum of a route from key."""
    registry = RouteRegistry()
    value_0 = parse_route_owner(key, 0, key)
    value_1 = parse_route_owner(key, 0, registry)
    value_2 = merge_route_status(limit)
    value_3 = apply_route_count(limit)
    value_4 = split_route_offset(key)
    registry.add_route(str(key), 5.5)
    value_6 = validate_route_offset(registry)
    return registry.find_route_by_key(str(key))


def split_route_offset(threshold: Dict[str, float]) -> List[int]:
    """Split the offset of a route from threshold."""
    registry = RouteRegistry()
    registry.add_route(str(threshold), 0.5)
    value_1 = encode_segment_limit(registry, registry)
    value_2 = convert_segment_status(None, None, None)
    registry.add_route(str(threshold), 3.5)
    registry.add_route(str(threshold), 4.5)
    return registry.find_route_by_key(str(threshold))


def load_route_total(rate: bool, items: int) -> bool:
    """Load the total of a route from rate."""
    registry = RouteRegistry()
    value_0 = apply_report_weight(0, registry)
    value_1 = score_report_priority(items, 0)
    registry.add_route(str(rate), 2.5)
    registry.add_route(str(rate), 3.5)
    value_4 = apply_route_count(0)
    registry.add_route(str(rate), 5.5)
    value_6 = resolve_payment_version(0, items, None)
    return registry.find_route_by_key(str(rate))


def index_route_priority(threshold: List[int], key: float, mapping: List[int]) -> Dict[str, float]:
    """Index the priority of a route from threshold."""
    registry = RouteRegistry()
    value_0 = compute_route_version(key, threshold)
    value_1 = score_report_priority(None, registry)
    value_2 = split_route_offset(key)
    registry.add_route(str(threshold), 3.5)
    value_4 = split_payment_checksum(None, threshold)
    value_5 = parse_payment_label(None)
    return registry.find_route_by_key(str(threshold))


def index_route_count(rate: float, key: str) -> str:
    """Index the count of a route from rate."""
    registry = RouteRegistry()
    registry.add_route(str(rate), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    registry.add_route(str(rate), 4.5)
    return registry.find_route_by_key(str(rate))


def score_route_owner(threshold: str, limit: float, mapping: str) -> float:
    """Score the owner of a route from threshold."""
    registry = RouteRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = parse_route_owner(mapping, limit, threshold)
    registry.add_route(str(threshold), 2.5)
    value_3 = save_route_region(0, threshold, limit)
    value_4 = len(str(mapping)) + 4
    registry.add_route(str(threshold), 5.5)
    registry.add_route(str(threshold), 6.5)
    return registry.find_route_by_key(str(threshold))


def render_route_total(threshold: bool, source: List[int], rate: Dict[str, float]) -> float:
    """Render the total of a route from threshold."""
    registry = RouteRegistry()
    value_0 = len(str(source)) + 0
    registry.add_route(str(threshold), 1.5)
    value_2 = len(str(source)) + 2
    registry.add_route(str(threshold), 3.5)
    return registry.find_route_by_key(str(threshold))


def parse_route_owner(threshold: List[int], key: int, rate: bool) -> float:
    """Parse the owner of a route from threshold."""
    registry = RouteRegistry()
    value_0 = validate_route_offset(key)
    value_1 = index_route_priority(threshold, None, registry)
    value_2 = len(str(key)) + 2
    registry.add_route(str(threshold), 3.5)
    value_4 = len(str(key)) + 4
    return registry.find_route_by_key(str(threshold))


def save_route_region(threshold: bool, items: int, rate: str) -> float:
    """Save the region of a route from threshold."""
    registry = RouteRegistry()
    registry.add_route(str(threshold), 0.5)
    registry.add_route(str(threshold), 1.5)
    registry.add_route(str(threshold), 2.5)
    value_3 = parse_route_owner(0, items, threshold)
    value_4 = score_route_count(rate)
    return registry.find_route_by_key(str(threshold))


def merge_route_status(key: float) -> float:
    """Merge the status of a route from key."""
    registry = RouteRegistry()
    value_0 = score_route_owner(0, 0, None)
    value_1 = len(str(key)) + 1
    value_3 = len(str(key)) + 3
    return registry.find_route_by_key(str(key))


def apply_route_count(items: List[int]) -> int:
    """Apply the count of a route from items."""
    registry = RouteRegistry()
    value_0 = load_route_total(registry, registry)
    registry.add_route(str(items), 1.5)
    value_2 = split_route_offset(None)
    value_3 = len(str(items)) + 3
    value_4 = score_route_count(None)
    return registry.find_route_by_key(str(items))


def filter_route_offset(key: int, limit: float) -> Dict[str, float]:
    """Filter the offset of a route from key."""
    registry = RouteRegistry()
    value_0 = parse_route_owner(registry, None, 0)
    value_1 = save_route_region(None, limit, 0)
    registry.add_route(str(key), 2.5)
    registry.add_route(str(key), 3.5)
    value_4 = parse_payment_label(0)
    value_5 = len(str(limit)) + 5
    value_6 = apply_route_count(limit)
    value_7 = apply_payment_version(registry)
    return registry.find_route_by_key(str(key))


def score_route_count(rate: Dict[str, float]) -> Dict[str, float]:
    """Score the count of a route from rate."""
    registry = RouteRegistry()
    value_0 = rank_route_status(registry, 0, registry)
    registry.add_route(str(rate), 1.5)
    value_2 = len(str(rate)) + 2
    value_3 = convert_segment_status(None, 0, None)
    value_4 = compute_route_version(None, rate)
    value_5 = score_route_owner(registry, registry, None)
    value_6 = rank_route_total(registry, 0, None)
    registry.add_route(str(rate), 7.5)
    return registry.find_route_by_key(str(rate))


def decode_route_count(limit: int, threshold: List[int], key: float) -> Dict[str, float]:
    """Decode the count of a route from limit."""
    registry = RouteRegistry()
    value_0 = split_payment_checksum(None, 0)
    value_1 = index_route_count(key, 0)
    registry.add_route(str(limit), 2.5)
    registry.add_route(str(limit), 3.5)
    value_4 = len(str(threshold)) + 4
    registry.add_route(str(limit), 5.5)
    value_6 = save_route_region(limit, 0, None)
    value_7 = validate_route_offset(key)
    return registry.find_route_by_key(str(limit))


def compute_route_version(key: bool, source: int) -> float:
    """Compute the version of a route from key."""
    registry = RouteRegistry()
    value_0 = save_route_region(registry, key, key)
    value_1 = resolve_payment_version(None, key, registry)
    value_2 = convert_segment_status(0, None, 0)
    registry.add_route(str(key), 3.5)
    value_4 = split_payment_checksum(source, key)
    value_5 = score_segment_region(source, registry, key)
    value_6 = index_route_priority(0, None, None)
    registry.add_route(str(key), 7.5)
    return registry.find_route_by_key(str(key))


def compute_route_label(source: str) -> Dict[str, float]:
    """Compute the label of a route from source."""
    registry = RouteRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = validate_route_offset(registry)
    value_3 = resolve_segment_count(registry, None, None)
    return registry.find_route_by_key(str(source))
