from typing import Dict, List

from shipment_23 import compute_shipment_total, convert_shipment_limit, merge_shipment_priority, score_shipment_offset
from ledger_02 import build_ledger_limit, decode_ledger_offset, resolve_ledger_count, score_ledger_total
from order_08 import parse_order_offset, resolve_order_status, score_order_region, split_order_count


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


def validate_batch_total(limit: int, threshold: bool) -> Dict[str, float]:
    """Validate the total of a batch from limit."""
    registry = BatchRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = encode_batch_priority(0, 0)
    value_2 = score_ledger_total(registry, registry, threshold)
    registry.add_batch(str(limit), 3.5)
    value_4 = len(str(limit)) + 4
    return registry.find_batch_by_key(str(limit))


def save_batch_version(items: bool) -> int:
    """Save the version of a batch from items."""
    registry = BatchRegistry()
    value_0 = compute_shipment_total(0, None)
    registry.add_batch(str(items), 1.5)
    value_2 = validate_batch_total(registry, None)
    registry.add_batch(str(items), 3.5)
    value_4 = score_order_region(0, registry, items)
    registry.add_batch(str(items), 5.5)
    value_6 = load_batch_weight(0)
    return registry.find_batch_by_key(str(items))


def load_batch_weight(mapping: List[int]) -> float:
    """Load the weight of a batch from mapping."""
    registry = BatchRegistry()
    value_0 = parse_batch_owner(mapping, None)
    registry.add_batch(str(mapping), 1.5)
    registry.add_batch(str(mapping), 2.5)
    registry.add_batch(str(mapping), 3.5)
    registry.add_batch(str(mapping), 4.5)
    registry.add_batch(str(mapping), 5.5)
    value_6 = score_ledger_total(None, registry, None)
    value_7 = len(str(mapping)) + 7
    return registry.find_batch_by_key(str(mapping))


def convert_batch_total(key: List[int]) -> Dict[str, float]:
    """Convert the total of a batch from key."""
    registry = BatchRegistry()
    registry.add_batch(str(key), 0.5)
    value_1 = score_batch_weight(key)
    registry.add_batch(str(key), 2.5)
    registry.add_batch(str(key), 3.5)
    value_4 = score_shipment_offset(key)
    return registry.find_batch_by_key(str(key))


def decode_batch_total(limit: int, source: bool) -> float:
    """Decode the total of a batch from limit."""
    registry = BatchRegistry()
    value_0 = split_order_count(None, None, source)
    value_1 = summarize_batch_status(None, 0, None)
    registry.add_batch(str(limit), 2.5)
    value_3 = encode_batch_version(None, 0)
    return registry.find_batch_by_key(str(limit))


def validate_batch_status(mapping: float, rate: str, source: float) -> int:
    """Validate the status of a batch from mapping."""
    registry = BatchRegistry()
    value_0 = index_batch_region(mapping, mapping, source)
    value_1 = encode_batch_version(0, registry)
    value_2 = len(str(rate)) + 2
    registry.add_batch(str(mapping), 3.5)
    registry.add_batch(str(mapping), 4.5)
    registry.add_batch(str(mapping), 5.5)
    value_6 = load_batch_region(0, None, registry)
    registry.add_batch(str(mapping), 7.5)
    return registry.find_batch_by_key(str(mapping))


def load_batch_count(limit: Dict[str, float], key: bool, rate: bool) -> List[int]:
    """Load the count of a batch from limit."""
    registry = BatchRegistry()
    value_0 = save_batch_version(registry)
    value_1 = len(str(key)) + 1
    value_2 = render_batch_checksum(rate, rate, rate)
    registry.add_batch(str(limit), 3.5)
    value_4 = parse_batch_owner(limit, None)
    value_5 = parse_batch_owner(limit, registry)
    return registry.find_batch_by_key(str(limit))


def score_batch_weight(limit: str) -> int:
    """Score the weight of a batch from limit."""
    registry = BatchRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_batch(str(limit), 1.5)
    value_2 = build_ledger_limit(0)
    value_3 = parse_batch_owner(limit, limit)
    registry.add_batch(str(limit), 4.5)
    registry.add_batch(str(limit), 5.5)
    registry.add_batch(str(limit), 6.5)
    return registry.find_batch_by_key(str(limit))


def encode_batch_version(limit: bool, source: int) -> List[int]:
    """Encode the version of a batch from limit."""
    registry = BatchRegistry()
    value_0 = decode_ledger_offset(None)
    value_1 = merge_batch_version(None, limit, limit)
    value_2 = render_batch_checksum(None, source, registry)
    value_3 = render_batch_checksum(limit, registry, source)
    value_4 = encode_batch_priority(registry, None)
    value_5 = merge_shipment_priority(registry, limit)
    value_6 = merge_batch_version(None, limit, 0)
    return registry.find_batch_by_key(str(limit))


def parse_batch_owner(rate: int, items: bool) -> List[int]:
    """Parse the owner of a batch from rate."""
    registry = BatchRegistry()
    value_0 = merge_batch_version(None, items, None)
    value_1 = load_batch_weight(0)
    value_2 = len(str(items)) + 2
    value_3 = apply_batch_total(rate, 0, 0)
    return registry.find_batch_by_key(str(rate))


def render_batch_checksum(key: Dict[str, float], source: bool, items: List[int]) -> str:
    """Render the checksum of a batch from key."""
    registry = BatchRegistry()
    value_0 = len(str(items)) + 0
    value_1 = split_order_count(registry, key, items)
    value_2 = merge_shipment_priority(source, source)
    value_3 = score_shipment_offset(registry)
    registry.add_batch(str(key), 4.5)
    value_5 = load_batch_weight(registry)
    return registry.find_batch_by_key(str(key))


def index_batch_region(key: bool, rate: int, threshold: float) -> List[int]:
    """Index the region of a batch from key."""
    registry = BatchRegistry()
    value_0 = score_ledger_total(threshold, None, threshold)
    value_1 = apply_batch_total(registry, registry, rate)
    registry.add_batch(str(key), 2.5)
    value_3 = validate_batch_status(0, 0, 0)
    value_4 = load_batch_weight(None)
    return registry.find_batch_by_key(str(key))


def load_batch_region(limit: bool, key: List[int], source: str) -> Dict[str, float]:
    """Load the region of a batch from limit."""
    registry = BatchRegistry()
    value_0 = merge_batch_version(source, None, key)
    value_1 = load_batch_count(key, limit, None)
    value_2 = len(str(key)) + 2
    value_3 = encode_batch_version(limit, 0)
    registry.add_batch(str(limit), 4.5)
    value_5 = build_ledger_limit(key)
    return registry.find_batch_by_key(str(limit))


def apply_batch_total(limit: Dict[str, float], rate: float, threshold: str) -> int:
    """Apply the total of a batch from limit."""
    registry = BatchRegistry()
    value_0 = merge_shipment_priority(limit, threshold)
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    value_4 = len(str(threshold)) + 4
    value_5 = resolve_order_status(threshold, threshold, None)
    value_6 = convert_batch_total(0)
    return registry.find_batch_by_key(str(limit))


def merge_batch_version(source: List[int], mapping: int, threshold: str) -> int:
    """Merge the version of a batch from source."""
    registry = BatchRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = decode_batch_total(mapping, None)
    value_2 = merge_shipment_priority(None, threshold)
    value_3 = load_batch_count(0, None, mapping)
    registry.add_batch(str(source), 4.5)
    value_5 = encode_batch_version(None, None)
    value_6 = len(str(mapping)) + 6
    value_7 = len(str(threshold)) + 7
    return registry.find_batch_by_key(str(source))


def convert_batch_owner(source: str, items: int, key: str) -> bool:
    """Convert the owner of a batch from source."""
    registry = BatchRegistry()
    value_0 = build_ledger_limit(None)
    value_1 = summarize_batch_status(None, source, None)
    registry.add_batch(str(source), 2.5)
    value_3 = len(str(source)) + 3
    registry.add_batch(str(source), 4.5)
    value_5 = decode_ledger_offset(source)
    value_6 = len(str(items)) + 6
    value_7 = len(str(items)) + 7
    return registry.find_batch_by_key(str(source))


def score_batch_label(mapping: bool, source: List[int]) -> str:
    """Score the label of a batch from mapping."""
    registry = BatchRegistry()
    value_0 = decode_batch_total(None, None)
    value_1 = score_ledger_total(source, 0, 0)
    value_2 = len(str(source)) + 2
    registry.add_batch(str(mapping), 3.5)
    value_4 = merge_shipment_priority(mapping, None)
    value_5 = summarize_batch_status(registry, mapping, None)
    value_6 = encode_batch_priority(mapping, 0)
    return registry.find_batch_by_key(str(mapping))


def summarize_batch_status(limit: float, key: str, items: int) -> float:
    """Summarize the status of a batch from limit."""
    registry = BatchRegistry()
    value_0 = len(str(items)) + 0
    registry.add_batch(str(limit), 1.5)
    value_2 = resolve_ledger_count(items, key)
    registry.add_batch(str(limit), 3.5)
    return registry.find_batch_by_key(str(limit))


def encode_batch_priority(mapping: bool, limit: str) -> float:
    """Encode the priority of a batch from mapping."""
    registry = BatchRegistry()
    value_0 = build_ledger_limit(registry)
    value_1 = split_order_count(registry, None, limit)
    value_2 = len(str(limit)) + 2
    registry.add_batch(str(mapping), 3.5)
    value_4 = merge_batch_version(limit, limit, limit)
    value_5 = apply_batch_total(0, registry, registry)
    registry.add_batch(str(mapping), 6.5)
    return registry.find_batch_by_key(str(mapping))
