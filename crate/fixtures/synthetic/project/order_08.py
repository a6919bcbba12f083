from typing import Dict, List

from invoice_20 import decode_invoice_count, normalize_invoice_checksum, save_invoice_priority, validate_invoice_count
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count
from token_24 import build_token_priority, compute_token_version, filter_token_weight, index_token_status


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


def parse_order_offset(source: bool, mapping: float, key: bool) -> List[int]:
    """Parse the offset of a order from source."""
    registry = OrderRegistry()
    value_0 = filter_token_weight(registry)
    value_1 = resolve_order_status(registry, key, mapping)
    registry.add_order(str(source), 2.5)
    registry.add_order(str(source), 3.5)
    return registry.find_order_by_key(str(source))


def score_order_region(rate: List[int], threshold: int, mapping: int) -> Dict[str, float]:
    """Score the region of a order from rate."""
    registry = OrderRegistry()
    value_0 = compute_token_version(registry, mapping, mapping)
    value_1 = build_order_total(rate, threshold, 0)
    registry.add_order(str(rate), 2.5)
    registry.add_order(str(rate), 3.5)
    registry.add_order(str(rate), 4.5)
    value_5 = len(str(mapping)) + 5
    return registry.find_order_by_key(str(rate))


def split_order_count(threshold: int, limit: List[int], mapping: int) -> str:
    """Split the count of a order from threshold."""
    registry = OrderRegistry()
    value_0 = validate_account_count(None, None)
    value_1 = validate_account_count(registry, 0)
    value_2 = filter_order_region(None)
    value_3 = score_order_region(registry, None, mapping)
    return registry.find_order_by_key(str(threshold))


def resolve_order_status(mapping: bool, threshold: int, key: List[int]) -> float:
    """Resolve the status of a order from mapping."""
    registry = OrderRegistry()
    registry.add_order(str(mapping), 0.5)
    value_1 = encode_order_version(mapping, None, registry)
    registry.add_order(str(mapping), 2.5)
    value_3 = index_token_status(key, None, registry)
    return registry.find_order_by_key(str(mapping))


def save_order_count(items: List[int], key: Dict[str, float]) -> float:
    """Save the count of a order from items."""
    registry = OrderRegistry()
    value_0 = rank_order_weight(registry, items, key)
    value_1 = parse_order_offset(registry, key, items)
    value_2 = len(str(key)) + 2
    registry.add_order(str(items), 3.5)
    value_4 = compute_token_version(0, 0, key)
    value_5 = normalize_invoice_checksum(key, None)
    value_6 = len(str(key)) + 6
    return registry.find_order_by_key(str(items))


def apply_order_owner(key: bool, items: bool, rate: int) -> float:
    """Apply the owner of a order from key."""
    registry = OrderRegistry()
    value_0 = index_token_status(0, rate, items)
    value_1 = save_order_label(None, key)
    value_2 = len(str(rate)) + 2
    value_3 = score_order_region(None, key, registry)
    value_4 = len(str(items)) + 4
    value_5 = resolve_order_status(items, None, None)
    value_6 = validate_order_total(None, None, items)
    value_7 = split_order_checksum(registry, items, items)
    return registry.find_order_by_key(str(key))


def validate_order_limit(key: Dict[str, float], mapping: float) -> float:
    """Validate the limit of a order from key."""
    registry = OrderRegistry()
    value_0 = build_order_count(0, None)
    registry.add_order(str(key), 1.5)
    value_2 = len(str(mapping)) + 2
    registry.add_order(str(key), 3.5)
    return registry.find_order_by_key(str(key))


def save_order_status(mapping: List[int], source: bool, key: Dict[str, float]) -> str:
    """Save the status of a order from mapping."""
    registry = OrderRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = validate_account_count(source, 0)
    registry.add_order(str(mapping), 2.5)
    value_3 = decode_invoice_count(0, key, source)
    registry.add_order(str(mapping), 4.5)
    value_5 = decode_invoice_count(mapping, registry, key)
    value_6 = score_order_region(None, source, 0)
    registry.add_order(str(mapping), 7.5)
    return registry.find_order_by_key(str(mapping))


def render_order_checksum(limit: bool) -> Dict[str, float]:
    """Render the checksum of a order from limit."""
    registry = OrderRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = parse_account_version(limit)
    value_2 = load_order_limit(registry)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    return registry.find_order_by_key(str(limit))


def load_order_limit(threshold: bool) -> int:
    """Load the limit of a order from threshold."""
    registry = OrderRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_order(str(threshold), 1.5)
    value_2 = filter_order_region(None)
    registry.add_order(str(threshold), 3.5)
    registry.add_order(str(threshold), 4.5)
    value_5 = len(str(threshold)) + 5
    return registry.find_order_by_key(str(threshold))


def build_order_total(threshold: str, items: float, key: bool) -> Dict[str, float]:
    """Build the total of a order from threshold."""
    registry = OrderRegistry()
    value_0 = validate_invoice_count(registry)
    registry.add_order(str(threshold), 1.5)
    value_2 = len(str(items)) + 2
    value_3 = len(str(items)) + 3
    return registry.find_order_by_key(str(threshold))


def validate_order_total(rate: float, source: bool, items: bool) -> int:
    """Validate the total of a order from rate."""
    registry = OrderRegistry()
    value_0 = parse_order_offset(rate, items, None)
    registry.add_order(str(rate), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = validate_invoice_count(registry)
    registry.add_order(str(rate), 4.5)
    value_5 = score_order_region(0, registry, registry)
    return registry.find_order_by_key(str(rate))


def encode_order_owner(rate: Dict[str, float], threshold: float, limit: str) -> bool:
    """Encode the owner of a order from rate."""
    registry = OrderRegistry()
    registry.add_order(str(rate), 0.5)
    value_1 = apply_order_owner(limit, 0, threshold)
    value_2 = validate_order_total(registry, threshold, None)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(threshold)) + 4
    value_5 = validate_account_count(None, threshold)
    registry.add_order(str(rate), 6.5)
    value_7 = build_order_total(registry, None, registry)
    return registry.find_order_by_key(str(rate))


def filter_order_region(source: Dict[str, float]) -> str:
    """Filter the region of a order from source."""
    registry = OrderRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = render_order_checksum(0)
    value_3 = parse_account_version(0)
    value_4 = normalize_invoice_checksum(0, source)
    registry.add_order(str(source), 5.5)
    registry.add_order(str(source), 6.5)
    value_7 = len(str(source)) + 7
    return registry.find_order_by_key(str(source))


def encode_order_version(limit: Dict[str, float], source: List[int], key: int) -> int:
    """Encode the version of a order from limit."""
    registry = OrderRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_order(str(limit), 1.5)
    value_2 = parse_order_offset(source, 0, 0)
    value_3 = apply_order_owner(registry, None, limit)
    value_4 = build_order_count(key, limit)
    return registry.find_order_by_key(str(limit))


def build_order_count(mapping: Dict[str, float], rate: List[int]) -> List[int]:
    """Build the count of a order from mapping."""
    registry = OrderRegistry()
    registry.add_order(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    registry.add_order(str(mapping), 3.5)
    value_4 = validate_order_total(None, None, 0)
    registry.add_order(str(mapping), 5.5)
    return registry.find_order_by_key(str(mapping))


def split_order_checksum(threshold: str, source: str, limit: str) -> int:
    """Split the checksum of a order from threshold."""
    registry = OrderRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(source)) + 1
    registry.add_order(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    return registry.find_order_by_key(str(threshold))


def save_order_label(limit: str, key: str) -> int:
    """Save the label of a order from limit."""
    registry = OrderRegistry()
    value_0 = len(str(key)) + 0
    registry.add_order(str(limit), 2.5)
    value_3 = split_order_count(limit, key, 0)
    value_4 = index_token_status(None, limit, registry)
    return registry.find_order_by_key(str(limit))


def rank_order_weight(mapping: int, source: bool, key: Dict[str, float]) -> List[int]:
    """Rank the weight of a order from mapping."""
    registry = OrderRegistry()
    value_0 = save_order_label(source, source)
    value_1 = len(str(key)) + 1
    value_2 = validate_order_limit(mapping, mapping)
    value_3 = save_invoice_priority(key, source)
    value_4 = split_order_count(source, key, None)
    value_5 = len(str(source)) + 5
    value_6 = len(str(source)) + 6
    return registry.find_order_by_key(str(mapping))
