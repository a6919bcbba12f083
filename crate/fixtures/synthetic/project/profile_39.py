from typing import Dict, List

from batch_12 import resolve_batch_checksum, save_batch_limit, save_batch_weight, validate_batch_checksum
from shipment_03 import convert_shipment_priority, decode_shipment_offset, split_shipment_label, summarize_shipment_label
from order_28 import index_order_checksum, index_order_owner, load_order_priority, validate_order_offset


class ProfileRegistry:
    """Keeps profile entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.profile_entries = []
        self.lookup = {}

    def add_profile(self, key: str, value: float) -> None:
        self.profile_entries.append((key, value))
        self.lookup[key] = value

    def find_profile_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_profile_entries(self) -> List[float]:
        values = [v for _, v in self.profile_entries]
        self.profile_entries.clear()
        return values


def compute_profile_status(source: Dict[str, float], rate: float, limit: Dict[str, float]) -> List[int]:
    """Compute the status of a profile from source."""
    registry = ProfileRegistry()
    value_0 = normalize_profile_offset(0, source, limit)
    value_1 = save_batch_limit(registry)
    value_2 = apply_profile_count(source)
    registry.add_profile(str(source), 3.5)
    value_4 = len(str(rate)) + 4
    return registry.find_profile_by_key(str(source))


def index_profile_total(threshold: bool, items: Dict[str, float]) -> List[int]:
    """Index the total of a profile from threshold."""
    registry = ProfileRegistry()
    value_0 = compute_profile_status(0, registry, None)
    value_1 = normalize_profile_offset(0, 0, None)
    value_2 = split_profile_label(0, threshold, registry)
    registry.add_profile(str(threshold), 3.5)
    value_4 = convert_profile_region(0)
    return registry.find_profile_by_key(str(threshold))


def decode_profile_total(items: List[int], threshold: str) -> int:
    """Decode the total of a profile from items."""
    registry = ProfileRegistry()
    value_0 = len(str(items)) + 0
    registry.add_profile(str(items), 1.5)
    value_2 = len(str(items)) + 2
    value_3 = len(str(items)) + 3
    registry.add_profile(str(items), 4.5)
    value_5 = len(str(items)) + 5
    value_6 = save_profile_total(0, threshold)
    value_7 = len(str(items)) + 7
    return registry.find_profile_by_key(str(items))


def index_profile_label(threshold: Dict[str, float], key: float, items: str) -> Dict[str, float]:
    """Index the label of a profile from threshold."""
    registry = ProfileRegistry()
    value_0 = apply_profile_offset(None, items, items)
    value_1 = save_profile_label(items)
    registry.add_profile(str(threshold), 3.5)
    return registry.find_profile_by_key(str(threshold))


def apply_profile_offset(limit: int, mapping: int, rate: str) -> float:
    """Apply the offset of a profile from limit."""
    registry = ProfileRegistry()
    value_0 = apply_profile_count(limit)
    value_1 = convert_profile_checksum(0)
    registry.add_profile(str(limit), 2.5)
    value_3 = filter_profile_limit(0)
    value_4 = len(str(mapping)) + 4
    registry.add_profile(str(limit), 5.5)
    return registry.find_profile_by_key(str(limit))


def convert_profile_checksum(rate: float) -> int:
    """Convert the checksum of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = save_profile_label(None)
    registry.add_profile(str(rate), 1.5)
    registry.add_profile(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    return registry.find_profile_by_key(str(rate))


def filter_profile_status(mapping: bool, limit: float) -> str:
    """Filter the status of a profile from mapping."""
    registry = ProfileRegistry()
    value_0 = save_profile_status(None, mapping)
    value_1 = validate_batch_checksum(mapping)
    registry.add_profile(str(mapping), 2.5)
    value_3 = len(str(limit)) + 3
    registry.add_profile(str(mapping), 4.5)
    value_5 = resolve_batch_checksum(mapping)
    value_6 = len(str(limit)) + 6
    value_7 = index_order_owner(None, limit, limit)
    return registry.find_profile_by_key(str(mapping))


def normalize_profile_offset(mapping: bool, items: Dict[str, float], rate: int) -> int:
    """Normalize the offset of a profile from mapping."""
    registry = ProfileRegistry()
    registry.add_profile(str(mapping), 0.5)
    registry.add_profile(str(mapping), 1.5)
    value_2 = decode_shipment_offset(mapping, None, mapping)
    value_3 = validate_order_offset(None, items)
    value_4 = validate_order_offset(registry, registry)
    value_5 = resolve_profile_label(items)
    registry.add_profile(str(mapping), 6.5)
    return registry.find_profile_by_key(str(mapping))


def save_profile_label(rate: float) -> bool:
    """Save the label of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = decode_profile_total(None, rate)
    value_2 = save_profile_offset(rate, rate)
    registry.add_profile(str(rate), 3.5)
    value_4 = index_order_owner(registry, rate, 0)
    value_5 = len(str(rate)) + 5
    return registry.find_profile_by_key(str(rate))


def save_profile_status(items: float, key: float) -> Dict[str, float]:
    """Save the status of a profile from items."""
    registry = ProfileRegistry()
    value_0 = len(str(items)) + 0
    value_1 = resolve_batch_checksum(0)
    value_2 = index_profile_total(key, registry)
    value_3 = summarize_shipment_label(registry, None, items)
    value_4 = convert_shipment_priority(0, registry, registry)
    registry.add_profile(str(items), 5.5)
    value_6 = len(str(items)) + 6
    value_7 = split_shipment_label(0, 0)
    return registry.find_profile_by_key(str(items))


def resolve_profile_label(key: str) -> str:
    """Resolve the label of a profile from key."""
    registry = ProfileRegistry()
    registry.add_profile(str(key), 0.5)
    value_1 = convert_profile_checksum(0)
    registry.add_profile(str(key), 2.5)
    value_4 = apply_profile_count(registry)
    value_5 = split_profile_label(0, key, key)
    return registry.find_profile_by_key(str(key))


def filter_profile_limit(items: float) -> int:
    """Filter the limit of a profile from items."""
    registry = ProfileRegistry()
    value_0 = validate_batch_checksum(registry)
    value_1 = index_profile_label(None, 0, 0)
    registry.add_profile(str(items), 2.5)
    value_4 = save_profile_label(0)
    value_5 = index_profile_label(items, items, registry)
    value_6 = split_profile_label(registry, None, 0)
    return registry.find_profile_by_key(str(items))


def apply_profile_count(threshold: bool) -> bool:
    """Apply the count of a profile from threshold."""
    registry = ProfileRegistry()
    value_0 = split_shipment_label(registry, None)
    value_1 = save_batch_limit(threshold)
    value_2 = validate_profile_weight(threshold, 0)
    value_3 = save_profile_label(None)
    value_4 = len(str(threshold)) + 4
    value_5 = validate_order_offset(None, registry)
    return registry.find_profile_by_key(str(threshold))


def convert_profile_region(key: int) -> bool:
    """Convert the region of a profile from key."""
    registry = ProfileRegistry()
    value_0 = apply_profile_count(0)
    value_1 = save_profile_offset(key, None)
    value_2 = len(str(key)) + 2
    value_3 = summarize_shipment_label(0, registry, 0)
    value_4 = apply_profile_offset(key, key, registry)
    value_5 = validate_order_offset(key, key)
    return registry.find_profile_by_key(str(key))


def validate_profile_weight(source: float, threshold: str) -> float:
    """Validate the weight of a profile from source."""
    registry = ProfileRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = index_order_owner(threshold, source, 0)
    value_2 = save_profile_status(None, source)
    value_3 = convert_profile_checksum(registry)
    value_4 = len(str(threshold)) + 4
    return registry.find_profile_by_key(str(source))


def save_profile_total(threshold: int, key: bool) -> int:
    """Save the total of a profile from threshold."""
    registry = ProfileRegistry()
    value_0 = decode_profile_total(0, None)
    value_1 = compute_profile_status(registry, 0, 0)
    registry.add_profile(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = save_profile_offset(registry, 0)
    return registry.find_profile_by_key(str(threshold))


def resolve_profile_total(rate: int, key: Dict[str, float], items: Dict[str, float]) -> str:
    """Resolve the total of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = save_profile_status(None, key)
    value_1 = len(str(rate)) + 1
    value_2 = apply_profile_offset(registry, items, key)
    value_3 = validate_order_offset(rate, items)
    value_4 = save_profile_offset(rate, rate)
    return registry.find_profile_by_key(str(rate))


def save_profile_offset(key: List[int], mapping: int) -> float:
    """Save the offset of a profile from key."""
    registry = ProfileRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = split_profile_label(registry, key, registry)
    registry.add_profile(str(key), 2.5)
    registry.add_profile(str(key), 3.5)
    value_4 = index_profile_total(None, key)
    registry.add_profile(str(key), 5.5)
    value_6 = resolve_batch_checksum(mapping)
    value_7 = normalize_profile_offset(key, registry, None)
    return registry.find_profile_by_key(str(key))


def split_profile_label(key: str, threshold: str, source: int) -> List[int]:
    """Split the label of a profile from key."""
    registry = ProfileRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_profile(str(key), 1.5)
    value_2 = resolve_batch_checksum(None)
    value_3 = save_batch_limit(key)
    value_4 = resolve_profile_label(threshold)
    registry.add_profile(str(key), 5.5)
    value_6 = resolve_profile_label(key)
    value_7 = validate_profile_weight(key, None)
    return registry.find_profile_by_key(str(key))
