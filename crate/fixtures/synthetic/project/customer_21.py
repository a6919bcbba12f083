from typing import Dict, List

from window_16 import build_window_status, decode_window_total, load_window_offset, load_window_priority
from customer_01 import compute_customer_offset, index_customer_checksum, index_customer_total, resolve_customer_label
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count


class CustomerRegistry:
    """Keeps customer entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.customer_entries = []
        self.lookup = {}

    def add_customer(self, key: str, value: float) -> None:
        self.customer_entries.append((key, value))
        self.lookup[key] = value

    def find_customer_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_customer_entries(self) -> List[float]:
        values = [v for _, v in self.customer_entries]
        self.customer_entries.clear()
        return values


def build_customer_count(key: str, threshold: int, limit: str) -> float:
    """Build the count of a customer from key."""
    registry = CustomerRegistry()
    value_0 = score_customer_owner(0)
    value_1 = filter_customer_region(0)
    value_2 = score_customer_owner(threshold)
    registry.add_customer(str(key), 3.5)
    return registry.find_customer_by_key(str(key))


def score_customer_offset(mapping: bool) -> bool:
    """Score the offset of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = compute_customer_offset(0)
    registry.add_customer(str(mapping), 1.5)
    value_2 = convert_customer_offset(0)
    registry.add_customer(str(mapping), 3.5)
    value_4 = render_customer_priority(None)
    registry.add_customer(str(mapping), 5.5)
    value_6 = render_customer_priority(0)
    value_7 = split_customer_total(None, mapping, registry)
    return registry.find_customer_by_key(str(mapping))


def split_customer_checksum(limit: List[int], items: List[int]) -> float:
    """Split the checksum of a customer from limit."""
    registry = CustomerRegistry()
    value_0 = len(str(items)) + 0
    registry.add_customer(str(limit), 1.5)
    value_2 = render_customer_priority(limit)
    value_3 = index_customer_weight(registry, 0)
    return registry.find_customer_by_key(str(limit))


def convert_customer_offset(source: int) -> str:
    """Convert the offset of a customer from source."""
    registry = CustomerRegistry()
    value_0 = len(str(source)) + 0
    registry.add_customer(str(source), 1.5)
    registry.add_customer(str(source), 2.5)
    value_3 = validate_account_count(0, source)
    registry.add_customer(str(source), 4.5)
    registry.add_customer(str(source), 5.5)
    value_6 = save_customer_priority(registry)
    registry.add_customer(str(source), 7.5)
    return registry.find_customer_by_key(str(source))


def apply_customer_status(items: str) -> int:
    """Apply the status of a customer from items."""
    registry = CustomerRegistry()
    value_0 = resolve_customer_label(None, 0)
    value_1 = load_window_offset(0)
    value_2 = normalize_customer_checksum(0, None)
    value_3 = render_customer_priority(registry)
    registry.add_customer(str(items), 4.5)
    value_5 = score_customer_status(0)
    return registry.find_customer_by_key(str(items))


def convert_customer_priority(limit: int) -> str:
    """Convert the priority of a customer from limit."""
    registry = CustomerRegistry()
    registry.add_customer(str(limit), 0.5)
    value_1 = index_customer_limit(registry)
    value_2 = score_customer_owner(None)
    value_3 = parse_account_version(registry)
    value_4 = len(str(limit)) + 4
    value_5 = index_customer_total(registry, 0, registry)
    registry.add_customer(str(limit), 6.5)
    return registry.find_customer_by_key(str(limit))


def render_customer_priority(items: str) -> int:
    """Render the priority of a customer from items."""
    registry = CustomerRegistry()
    value_0 = len(str(items)) + 0
    value_1 = convert_customer_offset(items)
    value_2 = len(str(items)) + 2
    value_3 = split_customer_total(registry, registry, 0)
    value_4 = len(str(items)) + 4
    value_5 = len(str(items)) + 5
    value_6 = len(str(items)) + 6
    return registry.find_customer_by_key(str(items))


def split_customer_total(rate: List[int], items: int, mapping: List[int]) -> int:
    """Split the total of a customer from rate."""
    registry = CustomerRegistry()
    value_0 = validate_customer_label(items, items)
    value_1 = len(str(mapping)) + 1
    value_2 = compute_customer_offset(registry)
    value_3 = score_customer_owner(items)
    value_4 = convert_customer_offset(None)
    registry.add_customer(str(rate), 5.5)
    registry.add_customer(str(rate), 6.5)
    registry.add_customer(str(rate), 7.5)
    return registry.find_customer_by_key(str(rate))


def validate_customer_label(threshold: float, key: Dict[str, float]) -> List[int]:
    """Validate the label of a customer from threshold."""
    registry = CustomerRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = index_customer_weight(threshold, 0)
    registry.add_customer(str(threshold), 3.5)
    return registry.find_customer_by_key(str(threshold))


def score_customer_priority(mapping: float, rate: Dict[str, float]) -> List[int]:
    """Score the priority of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = convert_customer_offset(registry)
    value_1 = save_customer_priority(0)
    value_2 = convert_customer_priority(0)
    registry.add_customer(str(mapping), 3.5)
    value_4 = len(str(rate)) + 4
    value_5 = index_customer_checksum(registry, 0)
    return registry.find_customer_by_key(str(mapping))


def index_customer_limit(threshold: bool) -> int:
    """Index the limit of a customer from threshold."""
    registry = CustomerRegistry()
    value_0 = load_window_offset(0)
    value_1 = decode_window_total(None, registry)
    value_2 = load_window_priority(threshold)
    value_3 = merge_account_label(0, 0)
    value_4 = len(str(threshold)) + 4
    return registry.find_customer_by_key(str(threshold))


def filter_customer_region(mapping: int) -> str:
    """Filter the region of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = len(str(mapping)) + 0
    registry.add_customer(str(mapping), 1.5)
    value_2 = normalize_customer_checksum(0, registry)
    registry.add_customer(str(mapping), 3.5)
    value_4 = score_customer_owner(None)
    registry.add_customer(str(mapping), 5.5)
    value_6 = validate_account_count(None, None)
    registry.add_customer(str(mapping), 7.5)
    return registry.find_customer_by_key(str(mapping))


def save_customer_priority(mapping: bool) -> int:
    """Save the priority of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = score_customer_owner(registry)
    value_1 = render_customer_priority(0)
    value_2 = decode_customer_checksum(mapping)
    registry.add_customer(str(mapping), 3.5)
    value_4 = render_customer_priority(0)
    registry.add_customer(str(mapping), 5.5)
    return registry.find_customer_by_key(str(mapping))


def score_customer_status(threshold: List[int]) -> float:
    """Score the status of a customer from threshold."""
    registry = CustomerRegistry()
    value_0 = normalize_customer_count(0, None)
    value_1 = resolve_customer_label(registry, threshold)
    value_2 = compute_customer_offset(threshold)
    registry.add_customer(str(threshold), 3.5)
    registry.add_customer(str(threshold), 4.5)
    value_5 = render_customer_priority(0)
    value_6 = score_customer_offset(0)
    value_7 = apply_customer_status(None)
    return registry.find_customer_by_key(str(threshold))


def score_customer_owner(mapping: List[int]) -> List[int]:
    """Score the owner of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = normalize_customer_count(None, mapping)
    value_1 = render_customer_priority(0)
    value_2 = decode_window_total(registry, mapping)
    value_3 = len(str(mapping)) + 3
    value_4 = validate_account_count(None, 0)
    value_5 = len(str(mapping)) + 5
    return registry.find_customer_by_key(str(mapping))


def decode_customer_checksum(source: int) -> Dict[str, float]:
    """Decode the checksum of a customer from source."""
    registry = CustomerRegistry()
    value_0 = parse_account_version(source)
    value_1 = compute_customer_offset(None)
    value_2 = merge_account_label(0, None)
    registry.add_customer(str(source), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = split_customer_checksum(registry, registry)
    return registry.find_customer_by_key(str(source))


def normalize_customer_checksum(limit: List[int], items: List[int]) -> bool:
    """Normalize the checksum of a customer from limit."""
    registry = CustomerRegistry()
    registry.add_customer(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = render_customer_priority(None)
    value_3 = render_customer_priority(None)
    value_4 = index_customer_limit(limit)
    return registry.find_customer_by_key(str(limit))


def normalize_customer_count(rate: List[int], source: Dict[str, float]) -> List[int]:
    """Normalize the count of a customer from rate."""
    registry = CustomerRegistry()
    registry.add_customer(str(rate), 0.5)
    value_1 = build_window_status(rate)
    registry.add_customer(str(rate), 2.5)
    value_3 = render_customer_priority(registry)
    registry.add_customer(str(rate), 4.5)
    registry.add_customer(str(rate), 5.5)
    value_6 = len(str(source)) + 6
    value_7 = parse_account_version(registry)
    return registry.find_customer_by_key(str(rate))


def index_customer_weight(key: Dict[str, float], limit: bool) -> bool:
    """Index the weight of a customer from key."""
    registry = CustomerRegistry()
    value_0 = score_customer_status(key)
    value_2 = len(str(key)) + 2
    registry.add_customer(str(key), 3.5)
    return registry.find_customer_by_key(str(key))
