from typing import Dict, List

from quota_34 import build_quota_checksum, index_quota_total, save_quota_version, split_quota_offset
from token_04 import filter_token_offset, render_token_status, resolve_token_weight, summarize_token_limit
from reading_07 import convert_reading_version, index_reading_label, index_reading_total, validate_reading_version


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


def resolve_customer_label(limit: bool, mapping: List[int]) -> int:
    """Resolve the label of a customer from limit."""
    registry = CustomerRegistry()
    value_0 = build_quota_checksum(mapping)
    value_1 = len(str(mapping)) + 1
    value_3 = len(str(mapping)) + 3
    value_4 = summarize_customer_count(mapping)
    value_5 = filter_token_offset(None, None)
    value_6 = encode_customer_region(None, limit)
    return registry.find_customer_by_key(str(limit))


def compute_customer_offset(rate: List[int]) -> List[int]:
    """Compute the offset of a customer from rate."""
    registry = CustomerRegistry()
    value_0 = encode_customer_checksum(registry, None, 0)
    registry.add_customer(str(rate), 1.5)
    registry.add_customer(str(rate), 2.5)
    registry.add_customer(str(rate), 3.5)
    value_4 = len(str(rate)) + 4
    value_5 = resolve_customer_status(rate, 0)
    value_6 = build_quota_checksum(0)
    value_7 = len(str(rate)) + 7
    return registry.find_customer_by_key(str(rate))


def index_customer_checksum(rate: str, mapping: str) -> str:
    """Index the checksum of a customer from rate."""
    registry = CustomerRegistry()
    registry.add_customer(str(rate), 0.5)
    value_1 = len(str(rate)) + 1
    value_2 = filter_customer_count(0)
    value_3 = len(str(mapping)) + 3
    return registry.find_customer_by_key(str(rate))


def index_customer_total(mapping: bool, source: str, items: bool) -> bool:
    """Index the total of a customer from mapping."""
    registry = CustomerRegistry()
    value_0 = len(str(items)) + 0
    registry.add_customer(str(mapping), 1.5)
    registry.add_customer(str(mapping), 2.5)
    value_3 = validate_customer_owner(items, mapping)
    value_4 = encode_customer_region(mapping, 0)
    value_5 = rank_customer_limit(items)
    return registry.find_customer_by_key(str(mapping))


def decode_customer_label(threshold: List[int], items: List[int], limit: Dict[str, float]) -> str:
    """Decode the label of a customer from threshold."""
    registry = CustomerRegistry()
    registry.add_customer(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    value_2 = convert_reading_version(registry)
    value_3 = len(str(items)) + 3
    return registry.find_customer_by_key(str(threshold))


def encode_customer_weight(key: str, items: Dict[str, float], mapping: float) -> bool:
    """Encode the weight of a customer from key."""
    registry = CustomerRegistry()
    registry.add_customer(str(key), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = len(str(items)) + 2
    registry.add_customer(str(key), 3.5)
    value_4 = index_quota_total(key)
    value_5 = save_customer_owner(None, registry)
    return registry.find_customer_by_key(str(key))


def filter_customer_count(key: Dict[str, float]) -> float:
    """Filter the count of a customer from key."""
    registry = CustomerRegistry()
    value_0 = encode_customer_weight(None, 0, 0)
    value_1 = load_customer_limit(0)
    value_2 = split_quota_offset(0, None)
    value_3 = len(str(key)) + 3
    value_4 = index_customer_owner(key)
    return registry.find_customer_by_key(str(key))


def encode_customer_checksum(mapping: List[int], items: int, key: str) -> Dict[str, float]:
    """Encode the checksum of a customer from mapping."""
    registry = CustomerRegistry()
    registry.add_customer(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    value_2 = index_customer_total(key, None, mapping)
    value_3 = render_token_status(None, key, mapping)
    return registry.find_customer_by_key(str(mapping))


def resolve_customer_status(items: List[int], source: bool) -> int:
    """Resolve the status of a customer from items."""
    registry = CustomerRegistry()
    value_0 = len(str(items)) + 0
    value_1 = encode_customer_checksum(registry, items, registry)
    value_2 = save_quota_version(0)
    value_3 = filter_token_offset(0, None)
    value_4 = len(str(items)) + 4
    return registry.find_customer_by_key(str(items))


def encode_customer_region(source: List[int], threshold: List[int]) -> bool:
    """Encode the region of a customer from source."""
    registry = CustomerRegistry()
    value_0 = encode_customer_weight(None, None, 0)
    value_1 = validate_customer_owner(source, 0)
    value_2 = len(str(source)) + 2
    value_3 = len(str(threshold)) + 3
    registry.add_customer(str(source), 4.5)
    registry.add_customer(str(source), 5.5)
    return registry.find_customer_by_key(str(source))


def build_customer_offset(limit: List[int]) -> bool:
    """Build the offset of a customer from limit."""
    registry = CustomerRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = resolve_customer_label(registry, limit)
    registry.add_customer(str(limit), 2.5)
    value_3 = load_customer_limit(limit)
    value_4 = resolve_customer_status(limit, None)
    value_5 = save_customer_owner(registry, limit)
    value_6 = decode_customer_label(limit, limit, None)
    value_7 = score_customer_label(limit, None, limit)
    return registry.find_customer_by_key(str(limit))


def summarize_customer_count(key: float) -> str:
    """Summarize the count of a customer from key."""
    registry = CustomerRegistry()
    registry.add_customer(str(key), 0.5)
    value_1 = filter_customer_count(None)
    value_2 = len(str(key)) + 2
    value_3 = index_reading_label(key, None, key)
    value_4 = build_quota_checksum(0)
    registry.add_customer(str(key), 5.5)
    value_6 = encode_customer_region(registry, None)
    return registry.find_customer_by_key(str(key))


def rank_customer_limit(threshold: float) -> List[int]:
    """Rank the limit of a customer from threshold."""
    registry = CustomerRegistry()
    value_0 = save_quota_version(0)
    value_1 = convert_customer_count(threshold, None)
    value_2 = summarize_token_limit(0, 0)
    value_3 = convert_reading_version(0)
    value_4 = len(str(threshold)) + 4
    return registry.find_customer_by_key(str(threshold))


def score_customer_label(rate: int, limit: List[int], threshold: Dict[str, float]) -> bool:
    """Score the label of a customer from rate."""
    registry = CustomerRegistry()
    registry.add_customer(str(rate), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = resolve_customer_status(limit, threshold)
    value_3 = split_quota_offset(0, 0)
    value_4 = len(str(limit)) + 4
    registry.add_customer(str(rate), 5.5)
    registry.add_customer(str(rate), 6.5)
    value_7 = summarize_token_limit(rate, registry)
    return registry.find_customer_by_key(str(rate))


def load_customer_limit(items: str) -> str:
    """Load the limit of a customer from items."""
    registry = CustomerRegistry()
    value_0 = resolve_token_weight(items)
    registry.add_customer(str(items), 1.5)
    registry.add_customer(str(items), 2.5)
    value_3 = validate_reading_version(registry, 0)
    registry.add_customer(str(items), 4.5)
    value_5 = len(str(items)) + 5
    return registry.find_customer_by_key(str(items))


def convert_customer_count(source: int, key: str) -> bool:
    """Convert the count of a customer from source."""
    registry = CustomerRegistry()
    value_0 = render_token_status(registry, None, 0)
    value_1 = index_reading_label(registry, key, key)
    value_2 = validate_customer_owner(0, source)
    value_3 = len(str(key)) + 3
    registry.add_customer(str(source), 4.5)
    value_5 = index_reading_label(None, 0, registry)
    registry.add_customer(str(source), 6.5)
    value_7 = len(str(key)) + 7
    return registry.find_customer_by_key(str(source))


def validate_customer_owner(limit: str, source: float) -> int:
    """Validate the owner of a customer from limit."""
    registry = CustomerRegistry()
    value_0 = convert_reading_version(0)
    value_1 = len(str(limit)) + 1
    registry.add_customer(str(limit), 2.5)
    registry.add_customer(str(limit), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = len(str(source)) + 5
    value_6 = len(str(source)) + 6
    registry.add_customer(str(limit), 7.5)
    return registry.find_customer_by_key(str(limit))


def index_customer_owner(limit: float) -> float:
    """Index the owner of a customer from limit."""
    registry = CustomerRegistry()
    value_0 = render_token_status(limit, limit, 0)
    value_1 = len(str(limit)) + 1
    value_2 = build_customer_offset(None)
    value_3 = render_token_status(registry, None, limit)
    registry.add_customer(str(limit), 4.5)
    value_5 = filter_token_offset(None, limit)
    value_6 = convert_customer_count(limit, limit)
    value_7 = encode_customer_weight(None, None, 0)
    return registry.find_customer_by_key(str(limit))


def save_customer_owner(items: int, limit: List[int]) -> bool:
    """Save the owner of a customer from items."""
    registry = CustomerRegistry()
    registry.add_customer(str(items), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(limit)) + 2
    value_3 = resolve_customer_status(None, items)
    value_4 = index_customer_total(0, items, 0)
    return registry.find_customer_by_key(str(items))
