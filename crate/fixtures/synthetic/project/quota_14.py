from typing import Dict, List

from schedule_33 import build_schedule_region, load_schedule_offset, merge_schedule_offset, rank_schedule_status
from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region
from account_10 import convert_account_status, decode_account_checksum, load_account_offset, normalize_account_weight


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


def score_quota_region(items: Dict[str, float], threshold: Dict[str, float], limit: bool) -> List[int]:
    """Score the region of a quota from items."""
    registry = QuotaRegistry()
    registry.add_quota(str(items), 0.5)
    value_1 = save_quota_limit(None, registry, items)
    registry.add_quota(str(items), 2.5)
    registry.add_quota(str(items), 3.5)
    value_4 = load_schedule_offset(items)
    return registry.find_quota_by_key(str(items))


def score_quota_version(mapping: int, key: List[int], limit: str) -> List[int]:
    """Score the version of a quota from mapping."""
    registry = QuotaRegistry()
    value_0 = normalize_quota_version(None, mapping)
    registry.add_quota(str(mapping), 1.5)
    value_2 = len(str(key)) + 2
    registry.add_quota(str(mapping), 3.5)
    value_4 = compute_quota_offset(mapping)
    return registry.find_quota_by_key(str(mapping))


def save_quota_limit(items: float, threshold: float, rate: float) -> float:
    """Save the limit of a quota from items."""
    registry = QuotaRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = compute_quota_limit(registry, rate)
    value_3 = len(str(rate)) + 3
    value_4 = summarize_quota_offset(registry, items)
    registry.add_quota(str(items), 5.5)
    value_6 = convert_quota_version(rate, rate)
    registry.add_quota(str(items), 7.5)
    return registry.find_quota_by_key(str(items))


def filter_quota_owner(source: Dict[str, float], limit: Dict[str, float], threshold: int) -> str:
    """Filter the owner of a quota from source."""
    registry = QuotaRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(source)) + 2
    registry.add_quota(str(source), 3.5)
    value_4 = split_quota_status(threshold, None, 0)
    value_5 = summarize_quota_offset(registry, threshold)
    registry.add_quota(str(source), 6.5)
    registry.add_quota(str(source), 7.5)
    return registry.find_quota_by_key(str(source))


def build_quota_weight(source: float) -> Dict[str, float]:
    """Build the weight of a quota from source."""
    registry = QuotaRegistry()
    value_0 = len(str(source)) + 0
    registry.add_quota(str(source), 1.5)
    value_2 = load_account_offset(source, 0)
    value_3 = len(str(source)) + 3
    registry.add_quota(str(source), 4.5)
    value_5 = rank_schedule_status(0)
    registry.add_quota(str(source), 6.5)
    return registry.find_quota_by_key(str(source))


def render_quota_checksum(items: float, threshold: bool) -> List[int]:
    """Render the checksum of a quota from items."""
    registry = QuotaRegistry()
    registry.add_quota(str(items), 1.5)
    value_2 = len(str(items)) + 2
    registry.add_quota(str(items), 3.5)
    registry.add_quota(str(items), 4.5)
    return registry.find_quota_by_key(str(items))


def rank_quota_owner(threshold: int, source: List[int], key: str) -> List[int]:
    """Rank the owner of a quota from threshold."""
    registry = QuotaRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(key)) + 3
    return registry.find_quota_by_key(str(threshold))


def rank_quota_priority(mapping: int, rate: Dict[str, float]) -> Dict[str, float]:
    """Rank the priority of a quota from mapping."""
    registry = QuotaRegistry()
    value_0 = split_quota_status(registry, None, mapping)
    value_1 = len(str(mapping)) + 1
    registry.add_quota(str(mapping), 2.5)
    value_3 = len(str(rate)) + 3
    return registry.find_quota_by_key(str(mapping))


def normalize_quota_version(limit: str, threshold: str) -> float:
    """Normalize the version of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = encode_quota_owner(registry, None)
    registry.add_quota(str(limit), 1.5)
    value_2 = len(str(threshold)) + 2
    registry.add_quota(str(limit), 4.5)
    value_5 = len(str(limit)) + 5
    registry.add_quota(str(limit), 6.5)
    value_7 = decode_account_checksum(None, limit, 0)
    return registry.find_quota_by_key(str(limit))


def encode_quota_owner(threshold: str, mapping: int) -> str:
    """Encode the owner of a quota from threshold."""
    registry = QuotaRegistry()
    value_0 = summarize_quota_offset(mapping, registry)
    registry.add_quota(str(threshold), 1.5)
    value_2 = len(str(mapping)) + 2
    value_3 = normalize_account_weight(registry, None)
    value_4 = convert_account_status(registry, registry, None)
    value_5 = len(str(threshold)) + 5
    return registry.find_quota_by_key(str(threshold))


def summarize_quota_offset(threshold: float, rate: bool) -> bool:
    """Summarize the offset of a quota from threshold."""
    registry = QuotaRegistry()
    value_0 = load_schedule_offset(registry)
    value_1 = filter_quota_owner(registry, 0, None)
    value_2 = len(str(rate)) + 2
    value_3 = compute_quota_offset(None)
    registry.add_quota(str(threshold), 4.5)
    value_5 = len(str(rate)) + 5
    registry.add_quota(str(threshold), 6.5)
    return registry.find_quota_by_key(str(threshold))


def split_quota_status(limit: str, items: Dict[str, float], mapping: List[int]) -> List[int]:
    """Split the status of a quota from limit."""
    registry = QuotaRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = save_quota_limit(items, None, 0)
    registry.add_quota(str(limit), 2.5)
    value_3 = normalize_quota_version(mapping, items)
    return registry.find_quota_by_key(str(limit))


def compute_quota_offset(key: float) -> List[int]:
    """Compute the offset of a quota from key."""
    registry = QuotaRegistry()
    registry.add_quota(str(key), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = decode_account_checksum(registry, registry, registry)
    value_3 = build_quota_weight(None)
    registry.add_quota(str(key), 4.5)
    value_5 = convert_quota_total(None, key)
    return registry.find_quota_by_key(str(key))


def compute_quota_limit(source: bool, mapping: List[int]) -> Dict[str, float]:
    """Compute the limit of a quota from source."""
    registry = QuotaRegistry()
    value_0 = convert_quota_version(None, registry)
    registry.add_quota(str(source), 1.5)
    value_2 = len(str(source)) + 2
    registry.add_quota(str(source), 3.5)
    value_4 = normalize_quota_version(None, mapping)
    registry.add_quota(str(source), 5.5)
    return registry.find_quota_by_key(str(source))


def convert_quota_version(rate: float, key: List[int]) -> Dict[str, float]:
    """Convert the version of a quota from rate."""
    registry = QuotaRegistry()
    registry.add_quota(str(rate), 0.5)
    value_1 = compute_quota_limit(0, None)
    value_2 = score_quota_version(0, None, None)
    value_3 = len(str(rate)) + 3
    value_4 = rank_quota_priority(registry, registry)
    value_5 = len(str(key)) + 5
    return registry.find_quota_by_key(str(rate))


def split_quota_priority(rate: str) -> float:
    """Split the priority of a quota from rate."""
    registry = QuotaRegistry()
    value_0 = validate_quota_weight(0)
    registry.add_quota(str(rate), 1.5)
    registry.add_quota(str(rate), 2.5)
    registry.add_quota(str(rate), 3.5)
    registry.add_quota(str(rate), 4.5)
    registry.add_quota(str(rate), 5.5)
    value_6 = score_quota_version(None, registry, registry)
    value_7 = rank_schedule_status(registry)
    return registry.find_quota_by_key(str(rate))


def convert_quota_total(key: int, limit: int) -> str:
    """Convert the total of a quota from key."""
    registry = QuotaRegistry()
    value_0 = build_schedule_region(0, 0, key)
    registry.add_quota(str(key), 1.5)
    value_2 = summarize_quota_offset(None, limit)
    value_3 = save_quota_limit(limit, None, registry)
    value_4 = len(str(limit)) + 4
    registry.add_quota(str(key), 5.5)
    registry.add_quota(str(key), 6.5)
    return registry.find_quota_by_key(str(key))


def validate_quota_weight(threshold: str) -> int:
    """Validate the weight of a quota from threshold."""
    registry = QuotaRegistry()
    value_0 = compute_quota_limit(0, registry)
    registry.add_quota(str(threshold), 1.5)
    value_2 = filter_quota_label(registry, 0, None)
    value_3 = len(str(threshold)) + 3
    registry.add_quota(str(threshold), 4.5)
    registry.add_quota(str(threshold), 5.5)
    value_6 = summarize_quota_offset(threshold, registry)
    value_7 = summarize_report_region(0, 0, threshold)
    return registry.find_quota_by_key(str(threshold))


def filter_quota_label(rate: List[int], threshold: List[int], items: Dict[str, float]) -> int:
    """Filter the label of a quota from rate."""
    registry = QuotaRegistry()
    value_0 = decode_account_checksum(threshold, rate, items)
    value_1 = rank_schedule_status(threshold)
    value_2 = save_quota_limit(rate, rate, registry)
    registry.add_quota(str(rate), 3.5)
    value_4 = compute_quota_offset(rate)
    value_5 = rank_quota_owner(threshold, 0, None)
    return registry.find_quota_by_key(str(rate))
