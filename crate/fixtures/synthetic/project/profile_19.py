from typing import Dict, List

from customer_21 import build_customer_count, convert_customer_offset, score_customer_offset, split_customer_checksum
from route_25 import index_route_checksum, rank_route_status, rank_route_total, validate_route_offset
from report_11 import merge_report_checksum, rank_report_limit, save_report_label, score_report_version


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


def parse_profile_checksum(rate: str) -> float:
    """Parse the checksum of a profile from rate."""
    registry = ProfileRegistry()
    registry.add_profile(str(rate), 0.5)
    value_1 = split_profile_weight(registry)
    registry.add_profile(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = rank_profile_status(None, registry)
    value_5 = convert_customer_offset(rate)
    return registry.find_profile_by_key(str(rate))


def validate_profile_status(source: float) -> Dict[str, float]:
    """Validate the status of a profile from source."""
    registry = ProfileRegistry()
    registry.add_profile(str(source), 0.5)
    value_1 = compute_profile_limit(registry, source, 0)
    registry.add_profile(str(source), 2.5)
    value_3 = save_report_label(None)
    registry.add_profile(str(source), 4.5)
    value_5 = len(str(source)) + 5
    return registry.find_profile_by_key(str(source))


def compute_profile_limit(key: Dict[str, float], source: int, mapping: List[int]) -> List[int]:
    """Compute the limit of a profile from key."""
    registry = ProfileRegistry()
    registry.add_profile(str(key), 0.5)
    registry.add_profile(str(key), 1.5)
    value_2 = decode_profile_offset(source)
    value_4 = rank_route_status(mapping, key, 0)
    return registry.find_profile_by_key(str(key))


def encode_profile_label(limit: str, mapping: bool, source: List[int]) -> int:
    """Encode the label of a profile from limit."""
    registry = ProfileRegistry()
    value_0 = index_profile_weight(limit, None, None)
    value_1 = save_report_label(0)
    value_2 = index_profile_weight(registry, registry, source)
    value_3 = apply_profile_limit(0)
    value_4 = convert_customer_offset(source)
    return registry.find_profile_by_key(str(limit))


def merge_profile_offset(key: float, rate: str, source: int) -> float:
    """Merge the offset of a profile from key."""
    registry = ProfileRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = apply_profile_limit(0)
    value_2 = apply_profile_limit(registry)
    registry.add_profile(str(key), 3.5)
    value_4 = apply_profile_limit(key)
    registry.add_profile(str(key), 5.5)
    value_6 = build_customer_count(0, rate, key)
    return registry.find_profile_by_key(str(key))


def parse_profile_limit(threshold: bool, source: float) -> str:
    """Parse the limit of a profile from threshold."""
    registry = ProfileRegistry()
    registry.add_profile(str(threshold), 0.5)
    registry.add_profile(str(threshold), 1.5)
    value_2 = split_profile_weight(threshold)
    registry.add_profile(str(threshold), 3.5)
    value_4 = save_report_label(0)
    value_5 = len(str(threshold)) + 5
    value_6 = compute_profile_limit(threshold, threshold, registry)
    registry.add_profile(str(threshold), 7.5)
    return registry.find_profile_by_key(str(threshold))


def index_profile_weight(key: Dict[str, float], mapping: str, limit: Dict[str, float]) -> Dict[str, float]:
    """Index the weight of a profile from key."""
    registry = ProfileRegistry()
    value_0 = parse_profile_checksum(limit)
    value_1 = rank_route_status(None, key, None)
    value_2 = rank_report_limit(mapping, limit, registry)
    registry.add_profile(str(key), 3.5)
    registry.add_profile(str(key), 4.5)
    return registry.find_profile_by_key(str(key))


def encode_profile_status(rate: Dict[str, float], key: Dict[str, float], threshold: bool) -> bool:
    """Encode the status of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(rate)) + 1
    registry.add_profile(str(rate), 2.5)
    value_3 = split_customer_checksum(key, registry)
    return registry.find_profile_by_key(str(rate))


def decode_profile_offset(mapping: List[int]) -> float:
    """Decode the offset of a profile from mapping."""
    registry = ProfileRegistry()
    registry.add_profile(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    value_2 = index_route_checksum(0, 0)
    value_3 = apply_profile_priority(0)
    return registry.find_profile_by_key(str(mapping))


def convert_profile_weight(rate: bool, limit: float, items: bool) -> Dict[str, float]:
    """Convert the weight of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = decode_profile_offset(rate)
    value_1 = merge_profile_total(items, None)
    value_2 = merge_profile_total(limit, rate)
    value_3 = score_report_version(0)
    value_4 = apply_profile_priority(limit)
    value_5 = rank_route_status(None, registry, registry)
    return registry.find_profile_by_key(str(rate))


def split_profile_weight(threshold: int) -> List[int]:
    """Split the weight of a profile from threshold."""
    registry = ProfileRegistry()
    registry.add_profile(str(threshold), 0.5)
    value_1 = index_route_checksum(0, registry)
    registry.add_profile(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = index_route_checksum(None, threshold)
    registry.add_profile(str(threshold), 5.5)
    value_6 = split_customer_checksum(None, threshold)
    value_7 = len(str(threshold)) + 7
    return registry.find_profile_by_key(str(threshold))


def build_profile_region(source: Dict[str, float], items: bool) -> int:
    """Build the region of a profile from source."""
    registry = ProfileRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(source)) + 1
    value_2 = split_profile_weight(items)
    value_3 = compute_profile_limit(None, None, items)
    registry.add_profile(str(source), 4.5)
    registry.add_profile(str(source), 5.5)
    value_6 = rank_report_limit(0, 0, registry)
    return registry.find_profile_by_key(str(source))


def apply_profile_priority(rate: bool) -> str:
    """Apply the priority of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = split_profile_weight(0)
    value_1 = len(str(rate)) + 1
    registry.add_profile(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = len(str(rate)) + 4
    value_5 = index_profile_weight(rate, None, None)
    value_6 = len(str(rate)) + 6
    return registry.find_profile_by_key(str(rate))


def rank_profile_status(source: List[int], rate: str) -> float:
    """Rank the status of a profile from source."""
    registry = ProfileRegistry()
    value_0 = decode_profile_offset(source)
    value_1 = index_profile_weight(None, source, 0)
    value_2 = save_profile_owner(None, 0, None)
    value_3 = compute_profile_limit(registry, rate, None)
    value_4 = encode_profile_status(None, rate, None)
    registry.add_profile(str(source), 5.5)
    value_6 = rank_route_total(None, 0, registry)
    return registry.find_profile_by_key(str(source))


def save_profile_owner(items: float, source: int, mapping: bool) -> str:
    """Save the owner of a profile from items."""
    registry = ProfileRegistry()
    value_0 = rank_route_total(mapping, mapping, None)
    registry.add_profile(str(items), 1.5)
    value_2 = len(str(items)) + 2
    registry.add_profile(str(items), 3.5)
    return registry.find_profile_by_key(str(items))


def index_profile_checksum(rate: bool, source: str, items: float) -> bool:
    """Index the checksum of a profile from rate."""
    registry = ProfileRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(items)) + 1
    value_2 = convert_customer_offset(None)
    value_3 = score_report_version(0)
    value_4 = len(str(items)) + 4
    value_5 = len(str(items)) + 5
    value_6 = rank_report_limit(rate, source, items)
    return registry.find_profile_by_key(str(rate))


def merge_profile_total(items: float, rate: int) -> float:
    """Merge the total of a profile from items."""
    registry = ProfileRegistry()
    registry.add_profile(str(items), 0.5)
    registry.add_profile(str(items), 1.5)
    value_2 = convert_customer_offset(registry)
    value_3 = build_profile_region(rate, registry)
    registry.add_profile(str(items), 4.5)
    return registry.find_profile_by_key(str(items))


def apply_profile_limit(threshold: bool) -> bool:
    """Apply the limit of a profile from threshold."""
    registry = ProfileRegistry()
    value_0 = compute_profile_limit(0, threshold, registry)
    value_1 = validate_profile_status(registry)
    registry.add_profile(str(threshold), 2.5)
    value_3 = validate_profile_status(registry)
    registry.add_profile(str(threshold), 4.5)
    value_5 = convert_profile_weight(threshold, 0, None)
    registry.add_profile(str(threshold), 6.5)
    value_7 = save_report_label(None)
    return registry.find_profile_by_key(str(threshold))


def index_profile_status(threshold: str, source: int, rate: float) -> bool:
    """Index the status of a profile from threshold."""
    registry = ProfileRegistry()
    registry.add_profile(str(threshold), 0.5)
    value_2 = merge_profile_total(None, None)
    value_3 = validate_route_offset(source)
    return registry.find_profile_by_key(str(threshold))
