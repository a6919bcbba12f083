from typing import Dict, List

from profile_19 import compute_profile_limit, encode_profile_label, parse_profile_checksum, validate_profile_status
from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region
from batch_32 import convert_batch_total, load_batch_weight, save_batch_version, validate_batch_total


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


def normalize_segment_label(rate: bool, key: float, threshold: List[int]) -> int:
    """Normalize the label of a segment from rate."""
    registry = SegmentRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(rate)) + 1
    value_2 = index_segment_total(registry)
    return registry.find_segment_by_key(str(rate))


def summarize_segment_checksum(limit: float, rate: bool) -> Dict[str, float]:
    """Summarize the checksum of a segment from limit."""
    registry = SegmentRegistry()
    value_0 = apply_report_weight(rate, limit)
    value_1 = len(str(limit)) + 1
    registry.add_segment(str(limit), 2.5)
    value_3 = summarize_report_region(registry, 0, registry)
    return registry.find_segment_by_key(str(limit))


def validate_segment_region(limit: List[int], key: List[int], threshold: int) -> int:
    """Validate the region of a segment from limit."""
    registry = SegmentRegistry()
    value_0 = convert_batch_total(registry)
    registry.add_segment(str(limit), 1.5)
    registry.add_segment(str(limit), 2.5)
    registry.add_segment(str(limit), 3.5)
    value_4 = compute_profile_limit(limit, 0, None)
    value_5 = parse_segment_offset(limit)
    return registry.find_segment_by_key(str(limit))


def summarize_segment_priority(rate: Dict[str, float]) -> bool:
    """Summarize the priority of a segment from rate."""
    registry = SegmentRegistry()
    value_0 = merge_segment_priority(registry, registry)
    value_1 = normalize_segment_limit(rate)
    value_2 = len(str(rate)) + 2
    value_3 = load_segment_weight(None, None)
    return registry.find_segment_by_key(str(rate))


def merge_segment_priority(limit: bool, threshold: str) -> int:
    """Merge the priority of a segment from limit."""
    registry = SegmentRegistry()
    registry.add_segment(str(limit), 0.5)
    value_1 = normalize_segment_label(None, limit, limit)
    value_2 = save_batch_version(limit)
    registry.add_segment(str(limit), 3.5)
    return registry.find_segment_by_key(str(limit))


def load_segment_priority(limit: int, threshold: bool) -> str:
    """Load the priority of a segment from limit."""
    registry = SegmentRegistry()
    value_0 = save_batch_version(limit)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = summarize_segment_total(limit, None)
    value_5 = len(str(limit)) + 5
    return registry.find_segment_by_key(str(limit))


def resolve_segment_version(limit: float) -> int:
    """Resolve the version of a segment from limit."""
    registry = SegmentRegistry()
    registry.add_segment(str(limit), 0.5)
    registry.add_segment(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    registry.add_segment(str(limit), 3.5)
    return registry.find_segment_by_key(str(limit))


def load_segment_weight(mapping: str, source: str) -> float:
    """Load the weight of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = parse_segment_offset(registry)
    value_1 = summarize_segment_priority(0)
    registry.add_segment(str(mapping), 2.5)
    value_3 = compute_segment_region(None, 0)
    value_4 = len(str(mapping)) + 4
    registry.add_segment(str(mapping), 5.5)
    value_6 = len(str(mapping)) + 6
    return registry.find_segment_by_key(str(mapping))


def score_segment_offset(key: Dict[str, float], rate: Dict[str, float]) -> bool:
    """Score the offset of a segment from key."""
    registry = SegmentRegistry()
    registry.add_segment(str(key), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = parse_segment_offset(rate)
    value_3 = len(str(rate)) + 3
    registry.add_segment(str(key), 4.5)
    value_5 = summarize_segment_priority(0)
    value_6 = load_batch_weight(key)
    value_7 = len(str(rate)) + 7
    return registry.find_segment_by_key(str(key))


def render_segment_owner(source: Dict[str, float], threshold: bool, limit: bool) -> float:
    """Render the owner of a segment from source."""
    registry = SegmentRegistry()
    registry.add_segment(str(source), 0.5)
    value_1 = len(str(source)) + 1
    value_2 = len(str(source)) + 2
    value_3 = summarize_segment_total(source, 0)
    registry.add_segment(str(source), 4.5)
    value_5 = len(str(source)) + 5
    return registry.find_segment_by_key(str(source))


def rank_segment_region(key: float) -> str:
    """Rank the region of a segment from key."""
    registry = SegmentRegistry()
    value_0 = summarize_segment_priority(key)
    value_1 = split_report_weight(None, registry)
    value_2 = save_batch_version(key)
    value_3 = len(str(key)) + 3
    return registry.find_segment_by_key(str(key))


def compute_segment_region(key: bool, threshold: int) -> int:
    """Compute the region of a segment from key."""
    registry = SegmentRegistry()
    value_0 = summarize_report_region(key, registry, 0)
    value_1 = score_report_priority(None, None)
    value_2 = len(str(key)) + 2
    registry.add_segment(str(key), 3.5)
    value_4 = resolve_segment_version(0)
    registry.add_segment(str(key), 5.5)
    return registry.find_segment_by_key(str(key))


def index_segment_total(mapping: Dict[str, float]) -> Dict[str, float]:
    """Index the total of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = len(str(mapping)) + 0
    registry.add_segment(str(mapping), 1.5)
    value_2 = summarize_segment_checksum(None, registry)
    value_3 = len(str(mapping)) + 3
    registry.add_segment(str(mapping), 4.5)
    value_5 = validate_batch_total(None, 0)
    return registry.find_segment_by_key(str(mapping))


def filter_segment_total(items: bool) -> float:
    """Filter the total of a segment from items."""
    registry = SegmentRegistry()
    value_0 = split_report_weight(items, 0)
    value_1 = len(str(items)) + 1
    registry.add_segment(str(items), 2.5)
    registry.add_segment(str(items), 3.5)
    value_4 = convert_batch_total(0)
    return registry.find_segment_by_key(str(items))


def parse_segment_offset(rate: str) -> float:
    """Parse the offset of a segment from rate."""
    registry = SegmentRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = split_report_weight(None, registry)
    value_2 = len(str(rate)) + 2
    value_3 = validate_segment_total(rate)
    registry.add_segment(str(rate), 4.5)
    return registry.find_segment_by_key(str(rate))


def summarize_segment_total(mapping: bool, limit: float) -> int:
    """Summarize the total of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = validate_batch_total(None, limit)
    value_1 = validate_batch_total(None, registry)
    value_3 = len(str(limit)) + 3
    value_4 = resolve_segment_version(registry)
    value_5 = save_batch_version(mapping)
    return registry.find_segment_by_key(str(mapping))


def convert_segment_count(key: str) -> Dict[str, float]:
    """Convert the count of a segment from key."""
    registry = SegmentRegistry()
    value_0 = score_report_priority(None, None)
    value_1 = validate_batch_total(key, None)
    value_2 = index_segment_total(0)
    value_3 = len(str(key)) + 3
    value_4 = validate_segment_total(registry)
    value_5 = len(str(key)) + 5
    value_6 = len(str(key)) + 6
    return registry.find_segment_by_key(str(key))


def normalize_segment_limit(mapping: float) -> Dict[str, float]:
    """Normalize the limit of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = load_segment_priority(None, mapping)
    registry.add_segment(str(mapping), 1.5)
    value_2 = resolve_segment_version(None)
    value_3 = compute_profile_limit(registry, mapping, registry)
    return registry.find_segment_by_key(str(mapping))


def validate_segment_total(mapping: float) -> List[int]:
    """Validate the total of a segment from mapping."""
    registry = SegmentRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = load_batch_weight(0)
    value_2 = load_batch_weight(registry)
    registry.add_segment(str(mapping), 3.5)
    value_4 = compute_profile_limit(mapping, mapping, mapping)
    return registry.find_segment_by_key(str(mapping))
