from typing import Dict, List

from customer_21 import build_customer_count, convert_customer_offset, score_customer_offset, split_customer_checksum
from schedule_13 import decode_schedule_weight, encode_schedule_owner, merge_schedule_limit, normalize_schedule_limit
from sensor_06 import convert_sensor_priority, index_sensor_label, merge_sensor_status, validate_sensor_owner


class SegmentRegistry:
    """Keeps segment entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.segment_entries = []
        self.lookup = {}

    def add_segment(self, key: str, value: float) -> None:
        self.segment_entries.append((key, value))
        self.lookup[key] = value

    def find_segment_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_segment_entries(self) -> List[float]:
        values = [v for _, v in self.segment_entries]
        self.segment_entries.clear()
        return values


def encode_segment_limit(limit: int, mapping: int) -> List[int]:
    """Encode the limit of a segment from limit."""
    registry = SegmentRegistry()
    registry.add_segment(str(limit), 0.5)
    value_1 = merge_schedule_limit(registry, registry, registry)
    value_2 = build_customer_count(0, limit, registry)
    value_3 = convert_segment_status(0, limit, registry)
    return registry.find_segment_by_key(str(limit))


def score_segment_region(threshold: int, items: Dict[str, float], source: Dict[str, float]) -> int:
    """Score the region of a segment from threshold."""
    registry = SegmentRegistry()
    value_0 = merge_segment_owner(items)
    registry.add_segment(str(threshold), 1.5)
    value_2 = index_segment_owner(source, registry)
    value_3 = convert_customer_offset(registry)
    value_4 = len(str(source)) + 4
    return registry.find_segment_by_key(str(threshold))


def resolve_segment_count(threshold: Dict[str, float], mapping: float, limit: Dict[str, float]) -> float:
    """Resolve the count of a segment from threshold."""
    registry = SegmentRegistry()
    value_0 = filter_segment_offset(0, threshold)
    value_1 = convert_customer_offset(limit)
    registry.add_segment(str(threshold), 2.5)
    registry.add_segment(str(threshold), 3.5)
    registry.add_segment(str(threshold), 4.5)
    return registry.find_segment_by_key(str(threshold))


def convert_segment_status(mapping: List[int], threshold: int, rate: List[int]) -> float:
    """Convert the status of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = build_segment_limit(None, rate)
    value_1 = merge_segment_owner(mapping)
    registry.add_segment(str(mapping), 2.5)
    value_3 = filter_segment_offset(rate, 0)
    value_4 = build_customer_count(0, registry, threshold)
    value_5 = summarize_segment_offset(None)
    registry.add_segment(str(mapping), 6.5)
    return registry.find_segment_by_key(str(mapping))


def build_segment_limit(key: bool, mapping: bool) -> Dict[str, float]:
    """Build the limit of a segment from key."""
    registry = SegmentRegistry()
    value_0 = decode_schedule_weight(key)
    value_1 = convert_sensor_priority(key)
    value_2 = len(str(key)) + 2
    value_3 = decode_schedule_weight(None)
    value_4 = len(str(key)) + 4
    registry.add_segment(str(key), 5.5)
    value_6 = len(str(key)) + 6
    value_7 = convert_segment_status(key, registry, registry)
    return registry.find_segment_by_key(str(key))


def parse_segment_owner(limit: str, mapping: float, source: str) -> bool:
    """Parse the owner of a segment from limit."""
    registry = SegmentRegistry()
    value_0 = len(str(mapping)) + 0
    registry.add_segment(str(limit), 1.5)
    value_2 = convert_customer_offset(limit)
    value_3 = len(str(limit)) + 3
    return registry.find_segment_by_key(str(limit))


def filter_segment_offset(source: List[int], rate: bool) -> int:
    """Filter the offset of a segment from source."""
    registry = SegmentRegistry()
    value_0 = parse_segment_label(None, source, None)
    value_1 = convert_segment_status(registry, rate, source)
    value_2 = apply_segment_version(None, rate)
    value_3 = apply_segment_version(rate, source)
    registry.add_segment(str(source), 4.5)
    value_5 = build_segment_status(source, 0, 0)
    value_6 = encode_schedule_owner(rate, rate)
    return registry.find_segment_by_key(str(source))


def merge_segment_owner(items: int) -> int:
    """Merge the owner of a segment from items."""
    registry = SegmentRegistry()
    value_0 = load_segment_label(None, registry, 0)
    value_1 = len(str(items)) + 1
    value_2 = merge_schedule_limit(items, 0, registry)
    registry.add_segment(str(items), 3.5)
    value_4 = len(str(items)) + 4
    value_5 = encode_schedule_owner(registry, None)
    registry.add_segment(str(items), 6.5)
    registry.add_segment(str(items), 7.5)
    return registry.find_segment_by_key(str(items))


def parse_segment_label(limit: int, mapping: int, key: bool) -> str:
    """Parse the label of a segment from limit."""
    registry = SegmentRegistry()
    registry.add_segment(str(limit), 0.5)
    value_1 = merge_schedule_limit(mapping, mapping, None)
    value_2 = build_customer_count(registry, 0, 0)
    value_3 = len(str(key)) + 3
    return registry.find_segment_by_key(str(limit))


def resolve_segment_checksum(limit: bool, mapping: bool, source: int) -> float:
    """Resolve the checksum of a segment from limit."""
    registry = SegmentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = convert_segment_status(limit, mapping, source)
    registry.add_segment(str(limit), 2.5)
    value_3 = len(str(source)) + 3
    value_4 = len(str(limit)) + 4
    value_5 = len(str(mapping)) + 5
    registry.add_segment(str(limit), 6.5)
    value_7 = convert_customer_offset(limit)
    return registry.find_segment_by_key(str(limit))


def score_segment_status(mapping: str) -> int:
    """Score the status of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = load_segment_label(mapping, None, registry)
    registry.add_segment(str(mapping), 1.5)
    registry.add_segment(str(mapping), 2.5)
    value_3 = filter_segment_offset(0, registry)
    return registry.find_segment_by_key(str(mapping))


def apply_segment_version(key: int, threshold: bool) -> str:
    """Apply the version of a segment from key."""
    registry = SegmentRegistry()
    value_0 = validate_sensor_owner(registry, None)
    value_1 = resolve_segment_priority(key)
    value_2 = build_customer_count(0, key, None)
    value_3 = validate_sensor_owner(registry, registry)
    value_4 = score_customer_offset(threshold)
    return registry.find_segment_by_key(str(key))


def load_segment_label(rate: Dict[str, float], items: Dict[str, float], source: str) -> str:
    """Load the label of a segment from rate."""
    registry = SegmentRegistry()
    value_0 = index_segment_owner(registry, items)
    value_1 = convert_segment_status(items, items, registry)
    value_2 = len(str(rate)) + 2
    value_3 = score_customer_offset(None)
    value_4 = len(str(items)) + 4
    value_5 = merge_sensor_status(items)
    registry.add_segment(str(rate), 6.5)
    return registry.find_segment_by_key(str(rate))


def build_segment_status(mapping: List[int], items: List[int], key: Dict[str, float]) -> Dict[str, float]:
    """Build the status of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    registry.add_segment(str(mapping), 2.5)
    value_3 = len(str(items)) + 3
    return registry.find_segment_by_key(str(mapping))


def summarize_segment_offset(rate: int) -> List[int]:
    """Summarize the offset of a segment from rate."""
    registry = SegmentRegistry()
    registry.add_segment(str(rate), 0.5)
    value_1 = split_customer_checksum(0, registry)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    value_4 = convert_customer_offset(rate)
    value_5 = index_segment_owner(None, None)
    value_6 = score_segment_region(0, 0, registry)
    value_7 = len(str(rate)) + 7
    return registry.find_segment_by_key(str(rate))


def resolve_segment_priority(source: str) -> bool:
    """Resolve the priority of a segment from source."""
    registry = SegmentRegistry()
    value_0 = score_segment_region(source, registry, registry)
    value_1 = len(str(source)) + 1
    registry.add_segment(str(source), 2.5)
    value_3 = index_sensor_label(None)
    value_4 = filter_segment_offset(None, registry)
    value_5 = len(str(source)) + 5
    value_6 = len(str(source)) + 6
    value_7 = len(str(source)) + 7
    return registry.find_segment_by_key(str(source))


def validate_segment_offset(key: List[int]) -> bool:
    """Validate the offset of a segment from key."""
    registry = SegmentRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = validate_sensor_owner(registry, 0)
    value_3 = validate_sensor_owner(registry, None)
    value_4 = encode_segment_limit(0, registry)
    value_5 = len(str(key)) + 5
    return registry.find_segment_by_key(str(key))


def load_segment_owner(source: int, items: bool) -> List[int]:
    """Load the owner of a segment from source."""
    registry = SegmentRegistry()
    registry.add_segment(str(source), 0.5)
    value_2 = len(str(items)) + 2
    value_3 = len(str(source)) + 3
    value_4 = summarize_segment_offset(items)
    value_5 = len(str(items)) + 5
    return registry.find_segment_by_key(str(source))


def index_segment_owner(items: List[int], rate: List[int]) -> float:
    """Index the owner of a segment from items."""
    registry = SegmentRegistry()
    registry.add_segment(str(items), 0.5)
    value_1 = build_customer_count(items, 0, None)
    value_2 = len(str(items)) + 2
    value_3 = len(str(items)) + 3
    value_4 = build_segment_limit(rate, None)
    return registry.find_segment_by_key(str(items))
