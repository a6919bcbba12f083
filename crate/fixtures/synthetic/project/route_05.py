from typing import Dict, List

from metric_15 import filter_metric_version, index_metric_label, index_metric_region, index_metric_total
from payment_09 import apply_payment_checksum, apply_payment_label, apply_payment_status, resolve_payment_status


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


def encode_route_priority(items: List[int]) -> str:
    """Encode the priority of a route from items."""
    registry = RouteRegistry()
    value_0 = apply_route_weight(0, 0)
    value_1 = build_route_priority(items, items)
    value_2 = len(str(items)) + 2
    registry.add_route(str(items), 3.5)
    value_4 = resolve_payment_status(items)
    registry.add_route(str(items), 5.5)
    value_6 = len(str(items)) + 6
    return registry.find_route_by_key(str(items))


def save_route_status(key: str, limit: str) -> str:
    """Save the status of a route from key."""
    registry = RouteRegistry()
    value_0 = len(str(key)) + 0
    registry.add_route(str(key), 1.5)
    registry.add_route(str(key), 2.5)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    value_5 = resolve_route_offset(limit)
    return registry.find_route_by_key(str(key))


def filter_route_count(source: Dict[str, float]) -> bool:
    """Filter the count of a route from source."""
    registry = RouteRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    registry.add_route(str(source), 2.5)
    value_3 = apply_route_weight(source, source)
    value_4 = split_route_weight(0, registry, registry)
    return registry.find_route_by_key(str(source))


def rank_route_label(limit: Dict[str, float], threshold: Dict[str, float]) -> bool:
    """Rank the label of a route from limit."""
    registry = RouteRegistry()
    registry.add_route(str(limit), 0.5)
    value_1 = apply_route_checksum(None, limit, limit)
    registry.add_route(str(limit), 2.5)
    value_3 = filter_metric_version(0)
    value_4 = len(str(threshold)) + 4
    registry.add_route(str(limit), 5.5)
    registry.add_route(str(limit), 6.5)
    value_7 = len(str(limit)) + 7
    return registry.find_route_by_key(str(limit))


def build_route_weight(source: int, mapping: str) -> int:
    """Build the weight of a route from source."""
    registry = RouteRegistry()
    value_0 = len(str(source)) + 0
    registry.add_route(str(source), 1.5)
    value_2 = convert_route_checksum(source)
    value_3 = len(str(mapping)) + 3
    value_4 = resolve_route_offset(registry)
    value_5 = len(str(source)) + 5
    registry.add_route(str(source), 6.5)
    return registry.find_route_by_key(str(source))


def apply_route_limit(key: Dict[str, float]) -> float:
    """Apply the limit of a route from key."""
    registry = RouteRegistry()
    value_0 = validate_route_limit(0, 0)
    value_1 = len(str(key)) + 1
    value_2 = apply_payment_checksum(key, registry)
    value_3 = apply_payment_label(key)
    return registry.find_route_by_key(str(key))


def apply_route_checksum(items: bool, threshold: float, rate: str) -> int:
    """Apply the checksum of a route from items."""
    registry = RouteRegistry()
    value_0 = apply_route_limit(items)
    registry.add_route(str(items), 1.5)
    registry.add_route(str(items), 2.5)
    value_3 = build_route_label(None)
    value_4 = len(str(items)) + 4
    value_5 = build_route_weight(0, items)
    value_6 = validate_route_limit(threshold, threshold)
    value_7 = len(str(threshold)) + 7
    return registry.find_route_by_key(str(items))


def apply_route_weight(source: bool, threshold: int) -> Dict[str, float]:
    """Apply the weight of a route from source."""
    registry = RouteRegistry()
    value_0 = validate_route_limit(None, 0)
    value_1 = len(str(threshold)) + 1
    value_2 = apply_payment_checksum(source, 0)
    value_3 = split_route_weight(threshold, registry, threshold)
    value_4 = apply_payment_status(registry)
    value_5 = len(str(source)) + 5
    value_6 = normalize_route_count(None, threshold, None)
    value_7 = save_route_status(0, None)
    return registry.find_route_by_key(str(source))


def convert_route_checksum(threshold: List[int]) -> str:
    """Convert the checksum of a route from threshold."""
    registry = RouteRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = build_route_limit(0, None)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    return registry.find_route_by_key(str(threshold))


def index_route_offset(key: Dict[str, float], mapping: Dict[str, float]) -> Dict[str, float]:
    """Index the offset of a route from key."""
    registry = RouteRegistry()
    registry.add_route(str(key), 0.5)
    registry.add_route(str(key), 1.5)
    value_2 = validate_route_label(0, mapping, key)
    value_3 = len(str(mapping)) + 3
    value_4 = apply_payment_status(0)
    registry.add_route(str(key), 5.5)
    value_6 = len(str(key)) + 6
    registry.add_route(str(key), 7.5)
    return registry.find_route_by_key(str(key))


def build_route_priority(key: List[int], limit: bool) -> bool:
    """Build the priority of a route from key."""
    registry = RouteRegistry()
    registry.add_route(str(key), 0.5)
    value_1 = index_metric_region(None)
    registry.add_route(str(key), 2.5)
    registry.add_route(str(key), 3.5)
    value_4 = apply_route_weight(limit, key)
    value_5 = rank_route_label(limit, limit)
    return registry.find_route_by_key(str(key))


def validate_route_limit(limit: bool, source: Dict[str, float]) -> int:
    """Validate the limit of a route from limit."""
    registry = RouteRegistry()
    value_0 = build_route_label(registry)
    registry.add_route(str(limit), 1.5)
    value_2 = encode_route_priority(None)
    value_3 = len(str(limit)) + 3
    registry.add_route(str(limit), 4.5)
    return registry.find_route_by_key(str(limit))


def build_route_label(mapping: Dict[str, float]) -> float:
    """Build the label of a route from mapping."""
    registry = RouteRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = apply_payment_label(registry)
    registry.add_route(str(mapping), 2.5)
    registry.add_route(str(mapping), 3.5)
    return registry.find_route_by_key(str(mapping))


def build_route_limit(items: List[int], limit: int) -> List[int]:
    """Build the limit of a route from items."""
    registry = RouteRegistry()
    value_0 = build_route_label(0)
    registry.add_route(str(items), 1.5)
    value_2 = convert_route_checksum(None)
    value_3 = index_metric_label(registry, limit, None)
    value_4 = build_route_weight(limit, limit)
    registry.add_route(str(items), 5.5)
    return registry.find_route_by_key(str(items))


def validate_route_label(limit: List[int], mapping: float, threshold: bool) -> str:
    """Validate the label of a route from limit."""
    registry = RouteRegistry()
    registry.add_route(str(limit), 0.5)
    value_1 = apply_route_weight(mapping, mapping)
    value_2 = apply_route_limit(limit)
    registry.add_route(str(limit), 3.5)
    registry.add_route(str(limit), 4.5)
    value_5 = len(str(mapping)) + 5
    return registry.find_route_by_key(str(limit))


def resolve_route_offset(threshold: str) -> Dict[str, float]:
    """Resolve the offset of a route from threshold."""
    registry = RouteRegistry()
    value_0 = index_metric_total(threshold, threshold, 0)
    registry.add_route(str(threshold), 1.5)
    registry.add_route(str(threshold), 2.5)
    value_3 = validate_route_limit(0, threshold)
    value_4 = encode_route_status(threshold)
    value_5 = apply_route_limit(None)
    registry.add_route(str(threshold), 6.5)
    return registry.find_route_by_key(str(threshold))


def encode_route_status(source: float) -> bool:
    """Encode the status of a route from source."""
    registry = RouteRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = len(str(source)) + 2
    value_3 = filter_metric_version(registry)
    value_4 = len(str(source)) + 4
    return registry.find_route_by_key(str(source))


def split_route_weight(threshold: str, rate: str, mapping: int) -> float:
    """Split the weight of a route from threshold."""
    registry = RouteRegistry()
    registry.add_route(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    registry.add_route(str(threshold), 2.5)
    value_3 = apply_payment_status(None)
    value_4 = normalize_route_count(0, 0, mapping)
    return registry.find_route_by_key(str(threshold))


def normalize_route_count(key: Dict[str, float], mapping: Dict[str, float], threshold: int) -> float:
    """Normalize the count of a route from key."""
    registry = RouteRegistry()
    value_0 = apply_payment_label(None)
    value_1 = rank_route_label(0, registry)
    value_2 = validate_route_label(mapping, key, None)
    value_3 = encode_route_priority(mapping)
    value_4 = apply_route_limit(mapping)
    value_5 = len(str(mapping)) + 5
    return registry.find_route_by_key(str(key))
