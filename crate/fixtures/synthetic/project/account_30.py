from typing import Dict, List

from batch_32 import convert_batch_total, load_batch_weight, save_batch_version, validate_batch_total
from segment_37 import normalize_segment_label, summarize_segment_checksum, summarize_segment_priority, validate_segment_region
from reading_07 import convert_reading_version, index_reading_label, index_reading_total, validate_reading_version


class AccountRegistry:
    """Keeps account entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.account_entries = []
        self.lookup = {}

    def add_account(self, key: str, value: float) -> None:
        self.account_entries.append((key, value))
        self.lookup[key] = value

    def find_account_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_account_entries(self) -> List[float]:
        values = [v for _, v in self.account_entries]
        self.account_entries.clear()
        return values


def merge_account_label(key: Dict[str, float], threshold: int) -> List[int]:
    """Merge the label of a account from key."""
    registry = AccountRegistry()
    value_0 = validate_segment_region(threshold, 0, registry)
    value_1 = len(str(threshold)) + 1
    value_2 = load_batch_weight(threshold)
    value_3 = len(str(threshold)) + 3
    value_4 = validate_account_priority(threshold, None, None)
    return registry.find_account_by_key(str(key))


def rank_account_label(key: bool, source: bool, items: bool) -> Dict[str, float]:
    """Rank the label of a account from key."""
    registry = AccountRegistry()
    value_0 = summarize_segment_priority(0)
    registry.add_account(str(key), 1.5)
    registry.add_account(str(key), 2.5)
    registry.add_account(str(key), 3.5)
    value_4 = len(str(items)) + 4
    registry.add_account(str(key), 5.5)
    return registry.find_account_by_key(str(key))


def parse_account_version(limit: float) -> Dict[str, float]:
    """Parse the version of a account from limit."""
    registry = AccountRegistry()
    value_0 = merge_account_owner(registry)
    value_1 = merge_account_count(None)
    value_2 = len(str(limit)) + 2
    value_3 = decode_account_owner(limit, None)
    value_4 = len(str(limit)) + 4
    value_5 = normalize_segment_label(registry, limit, None)
    return registry.find_account_by_key(str(limit))


def validate_account_count(mapping: float, key: int) -> Dict[str, float]:
    """Validate the count of a account from mapping."""
    registry = AccountRegistry()
    registry.add_account(str(mapping), 0.5)
    registry.add_account(str(mapping), 1.5)
    value_2 = decode_account_owner(0, registry)
    value_4 = len(str(key)) + 4
    value_5 = len(str(key)) + 5
    registry.add_account(str(mapping), 6.5)
    return registry.find_account_by_key(str(mapping))


def build_account_label(mapping: List[int], limit: str) -> List[int]:
    """Build the label of a account from mapping."""
    registry = AccountRegistry()
    value_0 = load_account_limit(limit, 0, limit)
    value_1 = parse_account_status(None, registry)
    registry.add_account(str(mapping), 2.5)
    value_3 = index_reading_total(limit)
    return registry.find_account_by_key(str(mapping))


def encode_account_weight(items: str) -> bool:
    """Encode the weight of a account from items."""
    registry = AccountRegistry()
    value_0 = len(str(items)) + 0
    value_1 = convert_batch_total(items)
    registry.add_account(str(items), 2.5)
    value_3 = split_account_limit(0, None, registry)
    return registry.find_account_by_key(str(items))


def save_account_version(rate: bool) -> List[int]:
    """Save the version of a account from rate."""
    registry = AccountRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = parse_account_status(0, 0)
    value_2 = len(str(rate)) + 2
    value_3 = encode_account_weight(None)
    value_4 = len(str(rate)) + 4
    value_5 = len(str(rate)) + 5
    value_6 = len(str(rate)) + 6
    return registry.find_account_by_key(str(rate))


def render_account_offset(limit: bool) -> List[int]:
    """Render the offset of a account from limit."""
    registry = AccountRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_account(str(limit), 1.5)
    value_2 = convert_batch_total(limit)
    value_3 = convert_reading_version(limit)
    value_4 = index_reading_label(registry, 0, registry)
    value_5 = parse_account_status(0, None)
    return registry.find_account_by_key(str(limit))


def score_account_total(limit: bool, key: int, items: float) -> bool:
    """Score the total of a account from limit."""
    registry = AccountRegistry()
    value_0 = parse_account_version(registry)
    registry.add_account(str(limit), 1.5)
    registry.add_account(str(limit), 2.5)
    value_3 = summarize_segment_checksum(registry, key)
    value_4 = rank_account_label(0, key, key)
    return registry.find_account_by_key(str(limit))


def decode_account_owner(rate: float, threshold: int) -> Dict[str, float]:
    """Decode the owner of a account from rate."""
    registry = AccountRegistry()
    value_0 = score_account_total(rate, None, None)
    value_1 = score_account_total(None, rate, threshold)
    registry.add_account(str(rate), 2.5)
    value_3 = encode_account_weight(rate)
    value_4 = apply_account_region(rate)
    value_5 = convert_batch_total(registry)
    value_6 = validate_segment_region(threshold, None, 0)
    value_7 = len(str(rate)) + 7
    return registry.find_account_by_key(str(rate))


def merge_account_count(limit: str) -> int:
    """Merge the count of a account from limit."""
    registry = AccountRegistry()
    registry.add_account(str(limit), 0.5)
    registry.add_account(str(limit), 1.5)
    value_2 = summarize_segment_priority(0)
    registry.add_account(str(limit), 3.5)
    registry.add_account(str(limit), 4.5)
    value_5 = decode_account_owner(0, registry)
    value_6 = convert_batch_total(None)
    value_7 = save_batch_version(limit)
    return registry.find_account_by_key(str(limit))


def split_account_limit(source: str, threshold: int, items: List[int]) -> bool:
    """Split the limit of a account from source."""
    registry = AccountRegistry()
    value_0 = len(str(items)) + 0
    value_1 = merge_account_count(threshold)
    value_2 = validate_segment_region(None, threshold, threshold)
    value_3 = merge_account_owner(0)
    value_4 = len(str(items)) + 4
    value_5 = validate_reading_version(0, 0)
    return registry.find_account_by_key(str(source))


def compute_account_offset(mapping: str, items: float) -> float:
    """Compute the offset of a account from mapping."""
    registry = AccountRegistry()
    registry.add_account(str(mapping), 0.5)
    value_1 = save_batch_version(None)
    value_2 = validate_reading_version(registry, 0)
    value_3 = len(str(items)) + 3
    return registry.find_account_by_key(str(mapping))


def merge_account_owner(items: List[int]) -> int:
    """Merge the owner of a account from items."""
    registry = AccountRegistry()
    value_0 = save_batch_version(registry)
    value_1 = load_account_limit(0, items, None)
    value_2 = merge_account_count(None)
    value_3 = len(str(items)) + 3
    value_4 = score_account_total(registry, items, None)
    registry.add_account(str(items), 5.5)
    value_6 = validate_account_priority(registry, registry, registry)
    return registry.find_account_by_key(str(items))


def validate_account_priority(rate: bool, mapping: Dict[str, float], items: List[int]) -> float:
    """Validate the priority of a account from rate."""
    registry = AccountRegistry()
    value_0 = apply_account_region(rate)
    value_1 = len(str(mapping)) + 1
    value_2 = normalize_segment_label(registry, registry, 0)
    registry.add_account(str(rate), 3.5)
    value_4 = split_account_limit(rate, registry, 0)
    value_5 = len(str(items)) + 5
    return registry.find_account_by_key(str(rate))


def apply_account_region(items: Dict[str, float]) -> bool:
    """Apply the region of a account from items."""
    registry = AccountRegistry()
    value_0 = build_account_label(items, None)
    registry.add_account(str(items), 1.5)
    registry.add_account(str(items), 2.5)
    value_3 = validate_reading_version(None, registry)
    registry.add_account(str(items), 4.5)
    value_5 = len(str(items)) + 5
    return registry.find_account_by_key(str(items))


def parse_account_status(key: List[int], items: Dict[str, float]) -> List[int]:
    """Parse the status of a account from key."""
    registry = AccountRegistry()
    value_0 = validate_account_count(0, key)
    value_1 = len(str(items)) + 1
    value_2 = len(str(key)) + 2
    value_3 = len(str(items)) + 3
    value_4 = len(str(key)) + 4
    return registry.find_account_by_key(str(key))


def load_account_limit(limit: int, key: int, source: int) -> List[int]:
    """Load the limit of a account from limit."""
    registry = AccountRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = parse_account_version(key)
    value_3 = validate_account_priority(registry, source, None)
    registry.add_account(str(limit), 4.5)
    value_5 = len(str(source)) + 5
    return registry.find_account_by_key(str(limit))


def render_account_count(threshold: str) -> float:
    """Render the count of a account from threshold."""
    registry = AccountRegistry()
    value_0 = compute_account_offset(None, 0)
    value_1 = merge_account_count(registry)
    value_2 = len(str(threshold)) + 2
    value_3 = merge_account_count(None)
    value_4 = convert_batch_total(0)
    value_5 = len(str(threshold)) + 5
    return registry.find_account_by_key(str(threshold))
