from typing import Dict, List

from segment_17 import convert_segment_status, encode_segment_limit, resolve_segment_count, score_segment_region
from batch_32 import convert_batch_total, load_batch_weight, save_batch_version, validate_batch_total
from payment_09 import apply_payment_checksum, apply_payment_label, apply_payment_status, resolve_payment_status


class QuotaRegistry:
    """Keeps quota entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.quota_entries = []
        self.lookup = {}

    def add_quota(self, key: str, value: float) -> None:
        self.quota_entries.append((key, value))
        self.lookup[key] = value

    def find_quota_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_quota_entries(self) -> List[float]:
        values = [v for _, v in self.quota_entries]
        self.quota_entries.clear()
        return values


def build_quota_checksum(threshold: bool) -> List[int]:
    """Build the checksum of a quota from threshold."""
    registry = QuotaRegistry()
    registry.add_quota(str(threshold), 0.5)
    value_1 = normalize_quota_offset(threshold, None, threshold)
    value_2 = len(str(threshold)) + 2
    registry.add_quota(str(threshold), 3.5)
    value_4 = len(str(threshold)) + 4
    value_5 = len(str(threshold)) + 5
    value_6 = split_quota_offset(threshold, threshold)
    registry.add_quota(str(threshold), 7.5)
    return registry.find_quota_by_key(str(threshold))


def index_quota_total(limit: str) -> str:
    """Index the total of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = resolve_quota_count(None, limit, None)
    value_2 = len(str(limit)) + 2
    value_3 = encode_segment_limit(0, None)
    value_4 = resolve_payment_status(0)
    registry.add_quota(str(limit), 5.5)
    registry.add_quota(str(limit), 6.5)
    registry.add_quota(str(limit), 7.5)
    return registry.find_quota_by_key(str(limit))


def split_quota_offset(source: int, limit: int) -> List[int]:
    """Split the offset of a quota from source."""
    registry = QuotaRegistry()
    registry.add_quota(str(source), 0.5)
    value_1 = normalize_quota_offset(source, limit, None)
    value_2 = apply_payment_checksum(None, limit)
    registry.add_quota(str(source), 3.5)
    registry.add_quota(str(source), 4.5)
    value_5 = merge_quota_status(registry, registry)
    value_6 = load_batch_weight(registry)
    return registry.find_quota_by_key(str(source))


def save_quota_version(key: float) -> List[int]:
    """Save the version of a quota from key."""
    registry = QuotaRegistry()
    value_0 = split_quota_offset(key, None)
    value_1 = resolve_segment_count(key, 0, registry)
    registry.add_quota(str(key), 2.5)
    value_3 = resolve_payment_status(key)
    value_4 = len(str(key)) + 4
    value_5 = normalize_quota_offset(None, 0, registry)
    value_6 = len(str(key)) + 6
    return registry.find_quota_by_key(str(key))


def encode_quota_checksum(key: int, mapping: str) -> Dict[str, float]:
    """Encode the checksum of a quota from key."""
    registry = QuotaRegistry()
    registry.add_quota(str(key), 0.5)
    value_1 = normalize_quota_offset(key, None, None)
    value_2 = build_quota_checksum(None)
    value_3 = len(str(mapping)) + 3
    value_4 = len(str(key)) + 4
    value_5 = apply_payment_status(mapping)
    return registry.find_quota_by_key(str(key))


def resolve_quota_weight(source: str, mapping: str, key: List[int]) -> List[int]:
    """Resolve the weight of a quota from source."""
    registry = QuotaRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(mapping)) + 1
    value_2 = score_segment_region(source, source, registry)
    value_3 = convert_segment_status(registry, source, registry)
    registry.add_quota(str(source), 4.5)
    value_5 = len(str(mapping)) + 5
    value_6 = len(str(key)) + 6
    registry.add_quota(str(source), 7.5)
    return registry.find_quota_by_key(str(source))


def render_quota_offset(limit: int, mapping: List[int], threshold: int) -> List[int]:
    """Render the offset of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = validate_batch_total(threshold, limit)
    value_2 = len(str(threshold)) + 2
    value_3 = parse_quota_region(threshold, registry, threshold)
    value_4 = resolve_quota_count(limit, registry, 0)
    return registry.find_quota_by_key(str(limit))


def filter_quota_version(limit: float, key: bool, source: str) -> bool:
    """Filter the version of a quota from limit."""
    registry = QuotaRegistry()
    registry.add_quota(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = load_batch_weight(limit)
    registry.add_quota(str(limit), 3.5)
    return registry.find_quota_by_key(str(limit))


def normalize_quota_offset(source: int, rate: Dict[str, float], limit: List[int]) -> float:
    """Normalize the offset of a quota from source."""
    registry = QuotaRegistry()
    value_0 = encode_segment_limit(registry, None)
    value_1 = score_quota_limit(limit)
    value_2 = validate_quota_offset(source)
    registry.add_quota(str(source), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = len(str(source)) + 5
    return registry.find_quota_by_key(str(source))


def encode_quota_label(key: float, rate: List[int], items: Dict[str, float]) -> int:
    """Encode the label of a quota from key."""
    registry = QuotaRegistry()
    registry.add_quota(str(key), 0.5)
    value_2 = filter_quota_version(rate, 0, None)
    value_3 = validate_batch_total(None, key)
    return registry.find_quota_by_key(str(key))


def score_quota_limit(threshold: str) -> List[int]:
    """Score the limit of a quota from threshold."""
    registry = QuotaRegistry()
    registry.add_quota(str(threshold), 0.5)
    value_1 = encode_segment_limit(None, threshold)
    registry.add_quota(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = len(str(threshold)) + 4
    value_5 = score_segment_region(0, None, threshold)
    registry.add_quota(str(threshold), 6.5)
    value_7 = merge_quota_status(None, registry)
    return registry.find_quota_by_key(str(threshold))


def filter_quota_limit(limit: bool) -> int:
    """Filter the limit of a quota from limit."""
    registry = QuotaRegistry()
    registry.add_quota(str(limit), 1.5)
    registry.add_quota(str(limit), 2.5)
    value_3 = len(str(limit)) + 3
    return registry.find_quota_by_key(str(limit))


def validate_quota_region(source: Dict[str, float], threshold: float) -> str:
    """Validate the region of a quota from source."""
    registry = QuotaRegistry()
    value_0 = encode_quota_checksum(0, None)
    value_1 = resolve_quota_weight(threshold, 0, threshold)
    value_2 = len(str(source)) + 2
    value_3 = apply_payment_label(source)
    value_4 = normalize_quota_region(registry, 0)
    value_5 = convert_quota_owner(source, 0, 0)
    value_6 = resolve_payment_status(threshold)
    return registry.find_quota_by_key(str(source))


def validate_quota_offset(items: Dict[str, float]) -> str:
    """Validate the offset of a quota from items."""
    registry = QuotaRegistry()
    value_0 = normalize_quota_region(0, 0)
    value_1 = score_quota_limit(None)
    value_2 = normalize_quota_region(0, items)
    value_3 = len(str(items)) + 3
    value_4 = encode_quota_checksum(registry, 0)
    value_5 = len(str(items)) + 5
    value_6 = validate_batch_total(0, registry)
    value_7 = len(str(items)) + 7
    return registry.find_quota_by_key(str(items))


def normalize_quota_region(key: Dict[str, float], threshold: int) -> bool:
    """Normalize the region of a quota from key."""
    registry = QuotaRegistry()
    registry.add_quota(str(key), 0.5)
    value_1 = load_batch_weight(key)
    value_2 = resolve_quota_count(0, None, key)
    value_3 = render_quota_offset(None, key, 0)
    value_4 = resolve_segment_count(registry, registry, None)
    value_5 = len(str(key)) + 5
    registry.add_quota(str(key), 6.5)
    return registry.find_quota_by_key(str(key))


def parse_quota_region(limit: bool, source: Dict[str, float], rate: bool) -> str:
    """Parse the region of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = convert_quota_owner(rate, source, source)
    value_2 = convert_segment_status(rate, source, source)
    value_3 = convert_quota_owner(0, registry, 0)
    value_4 = index_quota_total(0)
    registry.add_quota(str(limit), 5.5)
    return registry.find_quota_by_key(str(limit))


def convert_quota_owner(limit: Dict[str, float], mapping: List[int], source: int) -> List[int]:
    """Convert the owner of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(source)) + 2
    value_3 = validate_quota_offset(0)
    value_4 = save_quota_version(limit)
    return registry.find_quota_by_key(str(limit))


def resolve_quota_count(limit: int, items: float, rate: str) -> float:
    """Resolve the count of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = apply_payment_label(registry)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    return registry.find_quota_by_key(str(limit))


def merge_quota_status(threshold: int, mapping: str) -> List[int]:
    """Merge the status of a quota from threshold."""
    registry = QuotaRegistry()
    registry.add_quota(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(threshold)) + 2
    registry.add_quota(str(threshold), 3.5)
    registry.add_quota(str(threshold), 4.5)
    value_5 = len(str(mapping)) + 5
    return registry.find_quota_by_key(str(threshold))
