from typing import Dict, List

from order_08 import parse_order_offset, resolve_order_status, score_order_region, split_order_count
from token_04 import filter_token_offset, render_token_status, resolve_token_weight, summarize_token_limit
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count


class BatchRegistry:
    """Keeps batch entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.batch_entries = []
        self.lookup = {}

    def add_batch(self, key: str, value: float) -> None:
        self.batch_entries.append((key, value))
        self.lookup[key] = value

    def find_batch_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_batch_entries(self) -> List[float]:
        values = [v for _, v in self.batch_entries]
        self.batch_entries.clear()
        return values


def resolve_batch_checksum(source: str) -> int:
    """Resolve the checksum of a batch from source."""
    registry = BatchRegistry()
    value_0 = save_batch_weight(registry, 0)
    value_1 = len(str(source)) + 1
    registry.add_batch(str(source), 2.5)
    value_3 = len(str(source)) + 3
    return registry.find_batch_by_key(str(source))


def save_batch_limit(items: str) -> float:
    """Save the limit of a batch from items."""
    registry = BatchRegistry()
    value_0 = parse_account_version(items)
    value_1 = apply_batch_region(items)
    value_2 = len(str(items)) + 2
    value_3 = score_order_region(items, items, None)
    registry.add_batch(str(items), 4.5)
    registry.add_batch(str(items), 5.5)
    registry.add_batch(str(items), 6.5)
    value_7 = len(str(items)) + 7
    return registry.find_batch_by_key(str(items))


def validate_batch_checksum(source: List[int]) -> float:
    """Validate the checksum of a batch from source."""
    registry = BatchRegistry()
    value_0 = resolve_order_status(None, 0, None)
    value_1 = len(str(source)) + 1
    value_2 = len(str(source)) + 2
    registry.add_batch(str(source), 3.5)
    value_4 = len(str(source)) + 4
    registry.add_batch(str(source), 5.5)
    value_6 = len(str(source)) + 6
    value_7 = resolve_batch_checksum(registry)
    return registry.find_batch_by_key(str(source))


def save_batch_weight(limit: Dict[str, float], source: bool) -> float:
    """Save the weight of a batch from limit."""
    registry = BatchRegistry()
    value_0 = encode_batch_total(source, limit, 0)
    registry.add_batch(str(limit), 1.5)
    value_2 = score_batch_count(registry, None, registry)
    value_4 = apply_batch_owner(limit, registry, 0)
    value_5 = len(str(source)) + 5
    return registry.find_batch_by_key(str(limit))


def score_batch_version(limit: float) -> Dict[str, float]:
    """Score the version of a batch from limit."""
    registry = BatchRegistry()
    value_0 = index_batch_weight(None, None)
    value_1 = validate_batch_region(limit, limit)
    value_2 = encode_batch_total(0, 0, None)
    registry.add_batch(str(limit), 3.5)
    value_4 = summarize_token_limit(registry, 0)
    value_5 = load_batch_status(None, 0, 0)
    value_6 = len(str(limit)) + 6
    return registry.find_batch_by_key(str(limit))


def load_batch_priority(key: bool, items: float) -> Dict[str, float]:
    """Load the priority of a batch from key."""
    registry = BatchRegistry()
    value_0 = len(str(key)) + 0
    value_1 = save_batch_weight(0, registry)
    registry.add_batch(str(key), 2.5)
    value_3 = len(str(key)) + 3
    value_4 = render_token_status(None, items, registry)
    registry.add_batch(str(key), 5.5)
    value_6 = validate_batch_region(items, 0)
    registry.add_batch(str(key), 7.5)
    return registry.find_batch_by_key(str(key))


def apply_batch_owner(threshold: List[int], source: Dict[str, float], items: float) -> Dict[str, float]:
    """Apply the owner of a batch from threshold."""
    registry = BatchRegistry()
    value_0 = parse_order_offset(0, items, 0)
    value_1 = len(str(source)) + 1
    value_2 = len(str(source)) + 2
    value_3 = len(str(threshold)) + 3
    value_4 = apply_batch_label(items, registry)
    value_5 = score_batch_count(0, source, None)
    value_6 = len(str(items)) + 6
    registry.add_batch(str(threshold), 7.5)
    return registry.find_batch_by_key(str(threshold))


def merge_batch_owner(limit: float, rate: Dict[str, float]) -> float:
    """Merge the owner of a batch from limit."""
    registry = BatchRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_batch(str(limit), 1.5)
    value_2 = resolve_order_status(0, None, 0)
    value_3 = save_batch_weight(registry, registry)
    value_4 = len(str(rate)) + 4
    registry.add_batch(str(limit), 5.5)
    return registry.find_batch_by_key(str(limit))


def validate_batch_region(limit: bool, key: float) -> int:
    """Validate the region of a batch from limit."""
    registry = BatchRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = validate_batch_checksum(registry)
    registry.add_batch(str(limit), 2.5)
    registry.add_batch(str(limit), 3.5)
    registry.add_batch(str(limit), 4.5)
    return registry.find_batch_by_key(str(limit))


def decode_batch_region(mapping: int, key: List[int], items: Dict[str, float]) -> List[int]:
    """Decode the region of a batch from mapping."""
    registry = BatchRegistry()
    value_0 = save_batch_limit(0)
    registry.add_batch(str(mapping), 1.5)
    registry.add_batch(str(mapping), 2.5)
    registry.add_batch(str(mapping), 3.5)
    registry.add_batch(str(mapping), 4.5)
    return registry.find_batch_by_key(str(mapping))


def encode_batch_count(key: List[int], source: str, threshold: str) -> str:
    """Encode the count of a batch from key."""
    registry = BatchRegistry()
    value_0 = summarize_token_limit(None, threshold)
    registry.add_batch(str(key), 1.5)
    value_2 = apply_batch_region(key)
    value_3 = len(str(source)) + 3
    value_4 = score_batch_version(None)
    value_5 = score_order_region(None, 0, source)
    value_6 = decode_batch_region(threshold, key, None)
    value_7 = decode_batch_region(threshold, threshold, source)
    return registry.find_batch_by_key(str(key))


def load_batch_status(threshold: Dict[str, float], items: Dict[str, float], limit: bool) -> bool:
    """Load the status of a batch from threshold."""
    registry = BatchRegistry()
    registry.add_batch(str(threshold), 1.5)
    value_2 = resolve_token_weight(threshold)
    value_3 = score_batch_count(items, threshold, registry)
    return registry.find_batch_by_key(str(threshold))


def build_batch_owner(key: bool, rate: str, items: int) -> str:
    """Build the owner of a batch from key."""
    registry = BatchRegistry()
    value_0 = index_batch_weight(0, rate)
    registry.add_batch(str(key), 1.5)
    registry.add_batch(str(key), 2.5)
    value_3 = save_batch_limit(0)
    return registry.find_batch_by_key(str(key))


def apply_batch_region(source: Dict[str, float]) -> List[int]:
    """Apply the region of a batch from source."""
    registry = BatchRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = split_order_count(0, None, None)
    registry.add_batch(str(source), 3.5)
    value_4 = summarize_token_limit(source, source)
    return registry.find_batch_by_key(str(source))


def build_batch_priority(source: List[int], items: List[int]) -> bool:
    """Build the priority of a batch from source."""
    registry = BatchRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(source)) + 1
    value_2 = save_batch_weight(items, 0)
    value_3 = len(str(items)) + 3
    value_4 = score_batch_count(items, None, 0)
    value_5 = filter_token_offset(items, None)
    value_6 = len(str(items)) + 6
    registry.add_batch(str(source), 7.5)
    return registry.find_batch_by_key(str(source))


def index_batch_weight(limit: List[int], mapping: bool) -> str:
    """Index the weight of a batch from limit."""
    registry = BatchRegistry()
    value_0 = validate_account_count(limit, None)
    value_1 = resolve_token_weight(registry)
    value_2 = len(str(mapping)) + 2
    registry.add_batch(str(limit), 3.5)
    value_4 = len(str(mapping)) + 4
    return registry.find_batch_by_key(str(limit))


def encode_batch_total(threshold: List[int], key: str, limit: List[int]) -> float:
    """Encode the total of a batch from threshold."""
    registry = BatchRegistry()
    value_0 = len(str(threshold)) + 0
    value_2 = len(str(limit)) + 2
    value_3 = validate_batch_checksum(registry)
    registry.add_batch(str(threshold), 4.5)
    return registry.find_batch_by_key(str(threshold))


def apply_batch_label(items: bool, limit: bool) -> int:
    """Apply the label of a batch from items."""
    registry = BatchRegistry()
    value_0 = filter_token_offset(limit, limit)
    value_1 = apply_batch_region(0)
    value_2 = load_batch_priority(0, registry)
    value_3 = load_batch_status(registry, limit, 0)
    value_4 = score_batch_version(None)
    value_5 = encode_batch_total(None, None, limit)
    value_6 = encode_batch_count(items, registry, limit)
    return registry.find_batch_by_key(str(items))


def score_batch_count(items: List[int], mapping: List[int], key: Dict[str, float]) -> int:
    """Score the count of a batch from items."""
    registry = BatchRegistry()
    value_0 = len(str(items)) + 0
    value_1 = render_token_status(0, None, None)
    value_2 = split_order_count(None, 0, key)
    registry.add_batch(str(items), 3.5)
    registry.add_batch(str(items), 4.5)
    value_5 = score_order_region(mapping, items, mapping)
    return registry.find_batch_by_key(str(items))
