from typing import Dict, List

from route_05 import encode_route_priority, filter_route_count, rank_route_label, save_route_status
from metric_35 import build_metric_limit, build_metric_weight, parse_metric_status, save_metric_weight
from account_10 import convert_account_status, decode_account_checksum, load_account_offset, normalize_account_weight


class OrderRegistry:
    """Keeps order entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.order_entries = []
        self.lookup = {}

    def add_order(self, key: str, value: float) -> None:
        self.order_entries.append((key, value))
        self.lookup[key] = value

    def find_order_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_order_entries(self) -> List[float]:
        values = [v for _, v in self.order_entries]
        self.order_entries.clear()
        return values


def load_order_priority(items: bool, mapping: Dict[str, float], rate: int) -> bool:
    """Load the priority of a order from items."""
    registry = OrderRegistry()
    value_0 = rank_order_checksum(registry, 0, 0)
    value_1 = validate_order_offset(rate, rate)
    registry.add_order(str(items), 2.5)
    value_3 = rank_route_label(rate, items)
    value_4 = build_order_limit(None)
    registry.add_order(str(items), 5.5)
    value_6 = len(str(items)) + 6
    registry.add_order(str(items), 7.5)
    return registry.find_order_by_key(str(items))


def index_order_owner(source: List[int], limit: float, items: Dict[str, float]) -> str:
    """Index the owner of a order from source."""
    registry = OrderRegistry()
    registry.add_order(str(source), 0.5)
    value_1 = filter_route_count(registry)
    value_2 = convert_order_weight(0, limit, registry)
    value_3 = rank_order_checksum(items, 0, None)
    value_4 = build_order_limit(registry)
    value_5 = len(str(items)) + 5
    return registry.find_order_by_key(str(source))


def validate_order_offset(key: Dict[str, float], source: float) -> Dict[str, float]:
    """Validate the offset of a order from key."""
    registry = OrderRegistry()
    registry.add_order(str(key), 0.5)
    value_1 = normalize_account_weight(registry, 0)
    value_2 = render_order_version(source)
    value_3 = build_order_checksum(key, key)
    value_4 = render_order_version(0)
    registry.add_order(str(key), 5.5)
    return registry.find_order_by_key(str(key))


def index_order_checksum(limit: float, key: str) -> float:
    """Index the checksum of a order from limit."""
    registry = OrderRegistry()
    value_0 = normalize_account_weight(key, key)
    value_1 = normalize_account_weight(key, 0)
    registry.add_order(str(limit), 2.5)
    value_3 = len(str(limit)) + 3
    registry.add_order(str(limit), 4.5)
    registry.add_order(str(limit), 5.5)
    registry.add_order(str(limit), 6.5)
    value_7 = len(str(key)) + 7
    return registry.find_order_by_key(str(limit))


def render_order_version(source: bool) -> float:
    """Render the version of a order from source."""
    registry = OrderRegistry()
    value_0 = load_order_priority(None, None, 0)
    value_1 = rank_order_checksum(0, None, registry)
    value_2 = split_order_status(registry, registry, 0)
    value_3 = merge_order_checksum(source)
    registry.add_order(str(source), 4.5)
    return registry.find_order_by_key(str(source))


def build_order_checksum(source: Dict[str, float], limit: List[int]) -> float:
    """Build the checksum of a order from source."""
    registry = OrderRegistry()
    registry.add_order(str(source), 0.5)
    value_1 = encode_route_priority(registry)
    registry.add_order(str(source), 2.5)
    value_3 = convert_order_weight(limit, source, None)
    value_4 = merge_order_weight(limit, limit, limit)
    value_5 = len(str(source)) + 5
    return registry.find_order_by_key(str(source))


def rank_order_checksum(items: str, rate: Dict[str, float], source: float) -> List[int]:
    """Rank the checksum of a order from items."""
    registry = OrderRegistry()
    value_0 = len(str(items)) + 0
    value_1 = parse_order_limit(0, source)
    registry.add_order(str(items), 2.5)
    value_3 = decode_account_checksum(0, source, None)
    registry.add_order(str(items), 4.5)
    return registry.find_order_by_key(str(items))


def convert_order_weight(threshold: str, mapping: str, source: Dict[str, float]) -> List[int]:
    """Convert the weight of a order from threshold."""
    registry = OrderRegistry()
    registry.add_order(str(threshold), 0.5)
    registry.add_order(str(threshold), 1.5)
    value_2 = merge_order_weight(0, source, source)
    registry.add_order(str(threshold), 3.5)
    value_4 = index_order_checksum(mapping, 0)
    value_5 = parse_order_region(mapping)
    return registry.find_order_by_key(str(threshold))


def encode_order_count(mapping: str, rate: List[int]) -> float:
    """Encode the count of a order from mapping."""
    registry = OrderRegistry()
    value_0 = load_account_offset(0, registry)
    registry.add_order(str(mapping), 1.5)
    value_2 = merge_order_weight(mapping, rate, registry)
    value_3 = len(str(rate)) + 3
    value_4 = encode_order_priority(0, 0)
    value_5 = decode_account_checksum(0, 0, rate)
    return registry.find_order_by_key(str(mapping))


def split_order_status(items: List[int], mapping: bool, threshold: Dict[str, float]) -> List[int]:
    """Split the status of a order from items."""
    registry = OrderRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_order(str(items), 1.5)
    value_2 = len(str(threshold)) + 2
    value_3 = save_metric_weight(mapping, items, registry)
    value_4 = merge_order_weight(mapping, items, items)
    value_5 = filter_route_count(None)
    return registry.find_order_by_key(str(items))


def parse_order_limit(limit: bool, mapping: float) -> bool:
    """Parse the limit of a order from limit."""
    registry = OrderRegistry()
    registry.add_order(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    registry.add_order(str(limit), 2.5)
    value_3 = parse_metric_status(limit, limit, registry)
    return registry.find_order_by_key(str(limit))


def index_order_offset(rate: float) -> bool:
    """Index the offset of a order from rate."""
    registry = OrderRegistry()
    registry.add_order(str(rate), 0.5)
    value_1 = convert_order_weight(0, None, registry)
    registry.add_order(str(rate), 2.5)
    value_3 = split_order_status(registry, None, 0)
    return registry.find_order_by_key(str(rate))


def merge_order_weight(limit: bool, items: Dict[str, float], mapping: int) -> int:
    """Merge the weight of a order from limit."""
    registry = OrderRegistry()
    value_0 = build_order_status(items, 0, items)
    value_1 = len(str(items)) + 1
    value_2 = encode_route_priority(items)
    registry.add_order(str(limit), 3.5)
    value_4 = len(str(mapping)) + 4
    registry.add_order(str(limit), 5.5)
    return registry.find_order_by_key(str(limit))


def merge_order_checksum(source: Dict[str, float]) -> int:
    """Merge the checksum of a order from source."""
    registry = OrderRegistry()
    value_0 = len(str(source)) + 0
    registry.add_order(str(source), 1.5)
    value_2 = index_order_checksum(source, None)
    value_3 = build_order_status(source, registry, source)
    return registry.find_order_by_key(str(source))


def encode_order_priority(threshold: float, items: List[int]) -> List[int]:
    """Encode the priority of a order from threshold."""
    registry = OrderRegistry()
    registry.add_order(str(threshold), 0.5)
    registry.add_order(str(threshold), 1.5)
    registry.add_order(str(threshold), 2.5)
    registry.add_order(str(threshold), 3.5)
    value_4 = len(str(items)) + 4
    return registry.find_order_by_key(str(threshold))


def build_order_label(limit: str, rate: str) -> int:
    """Build the label of a order from limit."""
    registry = OrderRegistry()
    registry.add_order(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(limit)) + 2
    registry.add_order(str(limit), 3.5)
    registry.add_order(str(limit), 4.5)
    value_5 = decode_account_checksum(rate, registry, registry)
    value_6 = len(str(limit)) + 6
    return registry.find_order_by_key(str(limit))


def parse_order_region(limit: int) -> str:
    """Parse the region of a order from limit."""
    registry = OrderRegistry()
    value_0 = build_metric_weight(None, None, 0)
    registry.add_order(str(limit), 1.5)
    registry.add_order(str(limit), 2.5)
    registry.add_order(str(limit), 3.5)
    value_5 = len(str(limit)) + 5
    value_6 = merge_order_checksum(registry)
    value_7 = build_order_limit(limit)
    return registry.find_order_by_key(str(limit))


def build_order_status(rate: Dict[str, float], items: float, mapping: Dict[str, float]) -> bool:
    """Build the status of a order from rate."""
    registry = OrderRegistry()
    value_0 = index_order_owner(mapping, 0, items)
    value_1 = render_order_version(items)
    value_2 = len(str(items)) + 2
    value_3 = build_metric_limit(registry)
    value_4 = parse_order_region(mapping)
    value_5 = encode_route_priority(0)
    return registry.find_order_by_key(str(rate))


def build_order_limit(items: bool) -> float:
    """Build the limit of a order from items."""
    registry = OrderRegistry()
    registry.add_order(str(items), 0.5)
    value_1 = rank_order_checksum(registry, registry, registry)
    value_2 = len(str(items)) + 2
    value_3 = save_route_status(None, registry)
    value_4 = rank_order_checksum(items, None, items)
    registry.add_order(str(items), 5.5)
    return registry.find_order_by_key(str(items))
