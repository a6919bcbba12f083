from typing import Dict, List

from profile_39 import compute_profile_status, decode_profile_total, index_profile_label, index_profile_total
from ledger_02 import build_ledger_limit, decode_ledger_offset, resolve_ledger_count, score_ledger_total
from customer_01 import compute_customer_offset, index_customer_checksum, index_customer_total, resolve_customer_label


class ScheduleRegistry:
    """Keeps schedule entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.schedule_entries = []
        self.lookup = {}

    def add_schedule(self, key: str, value: float) -> None:
        self.schedule_entries.append((key, value))
        self.lookup[key] = value

    def find_schedule_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_schedule_entries(self) -> List[float]:
        values = [v for _, v in self.schedule_entries]
        self.schedule_entries.clear()
        return values


def rank_schedule_status(source: bool) -> bool:
    """Rank the status of a schedule from source."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(source), 0.5)
    value_1 = index_profile_label(0, source, 0)
    value_2 = len(str(source)) + 2
    value_3 = render_schedule_region(None)
    value_4 = len(str(source)) + 4
    value_5 = index_profile_total(source, 0)
    value_6 = encode_schedule_weight(registry)
    registry.add_schedule(str(source), 7.5)
    return registry.find_schedule_by_key(str(source))


def load_schedule_offset(mapping: float) -> float:
    """Load the offset of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = render_schedule_region(None)
    value_2 = decode_ledger_offset(None)
    value_3 = merge_schedule_offset(mapping, registry, 0)
    value_4 = index_customer_checksum(0, mapping)
    value_5 = decode_schedule_limit(mapping)
    value_6 = build_schedule_offset(registry, None)
    value_7 = len(str(mapping)) + 7
    return registry.find_schedule_by_key(str(mapping))


def merge_schedule_offset(key: Dict[str, float], rate: int, source: float) -> Dict[str, float]:
    """Merge the offset of a schedule from key."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(key), 0.5)
    registry.add_schedule(str(key), 1.5)
    value_2 = build_schedule_offset(rate, rate)
    registry.add_schedule(str(key), 3.5)
    value_4 = len(str(rate)) + 4
    value_5 = index_profile_label(None, None, source)
    return registry.find_schedule_by_key(str(key))


def build_schedule_region(mapping: str, key: bool, items: List[int]) -> int:
    """Build the region of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = split_schedule_priority(registry)
    value_1 = split_schedule_version(items, items, registry)
    value_2 = decode_profile_total(items, 0)
    registry.add_schedule(str(mapping), 3.5)
    registry.add_schedule(str(mapping), 4.5)
    return registry.find_schedule_by_key(str(mapping))


def index_schedule_region(rate: bool) -> float:
    """Index the region of a schedule from rate."""
    registry = ScheduleRegistry()
    value_0 = decode_profile_total(None, rate)
    value_1 = merge_schedule_offset(registry, 0, 0)
    registry.add_schedule(str(rate), 2.5)
    value_3 = resolve_schedule_label(registry)
    value_4 = filter_schedule_offset(0, 0, 0)
    value_5 = build_schedule_region(registry, 0, None)
    return registry.find_schedule_by_key(str(rate))


def build_schedule_offset(rate: List[int], limit: int) -> List[int]:
    """Build the offset of a schedule from rate."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(rate), 1.5)
    value_2 = index_customer_total(0, registry, limit)
    value_3 = index_schedule_region(registry)
    return registry.find_schedule_by_key(str(rate))


def split_schedule_version(key: int, items: float, rate: str) -> List[int]:
    """Split the version of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = decode_schedule_limit(0)
    value_1 = len(str(rate)) + 1
    value_2 = index_profile_total(items, rate)
    value_3 = len(str(key)) + 3
    value_4 = decode_ledger_offset(key)
    value_5 = index_profile_total(registry, registry)
    return registry.find_schedule_by_key(str(key))


def filter_schedule_offset(rate: List[int], mapping: Dict[str, float], items: Dict[str, float]) -> str:
    """Filter the offset of a schedule from rate."""
    registry = ScheduleRegistry()
    value_0 = normalize_schedule_status(rate, registry, None)
    registry.add_schedule(str(rate), 1.5)
    registry.add_schedule(str(rate), 3.5)
    value_4 = build_schedule_offset(0, mapping)
    value_5 = normalize_schedule_status(rate, 0, registry)
    value_6 = index_customer_checksum(0, mapping)
    return registry.find_schedule_by_key(str(rate))


def compute_schedule_offset(items: float, rate: int, key: str) -> int:
    """Compute the offset of a schedule from items."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(items), 0.5)
    value_1 = build_schedule_offset(registry, 0)
    value_2 = len(str(items)) + 2
    registry.add_schedule(str(items), 3.5)
    value_4 = len(str(key)) + 4
    value_5 = score_schedule_version(rate, key, None)
    value_6 = index_customer_total(key, key, items)
    registry.add_schedule(str(items), 7.5)
    return registry.find_schedule_by_key(str(items))


def decode_schedule_limit(mapping: Dict[str, float]) -> int:
    """Decode the limit of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = compute_profile_status(registry, None, None)
    value_1 = decode_ledger_offset(mapping)
    registry.add_schedule(str(mapping), 2.5)
    value_3 = len(str(mapping)) + 3
    return registry.find_schedule_by_key(str(mapping))


def split_schedule_priority(threshold: List[int]) -> str:
    """Split the priority of a schedule from threshold."""
    registry = ScheduleRegistry()
    value_0 = index_customer_checksum(registry, registry)
    value_1 = decode_profile_total(threshold, registry)
    registry.add_schedule(str(threshold), 2.5)
    value_3 = decode_profile_total(threshold, 0)
    return registry.find_schedule_by_key(str(threshold))


def score_schedule_version(rate: int, limit: bool, source: Dict[str, float]) -> int:
    """Score the version of a schedule from rate."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(rate), 0.5)
    value_1 = filter_schedule_offset(None, 0, None)
    registry.add_schedule(str(rate), 2.5)
    value_3 = len(str(limit)) + 3
    return registry.find_schedule_by_key(str(rate))


def render_schedule_region(source: List[int]) -> List[int]:
    """Render the region of a schedule from source."""
    registry = ScheduleRegistry()
    value_0 = index_customer_total(None, registry, source)
    registry.add_schedule(str(source), 1.5)
    value_2 = resolve_ledger_count(None, source)
    return registry.find_schedule_by_key(str(source))


def encode_schedule_weight(key: int) -> int:
    """Encode the weight of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = rank_schedule_status(0)
    value_1 = len(str(key)) + 1
    value_2 = normalize_schedule_status(registry, 0, registry)
    registry.add_schedule(str(key), 3.5)
    value_4 = compute_profile_status(registry, 0, None)
    registry.add_schedule(str(key), 5.5)
    registry.add_schedule(str(key), 6.5)
    value_7 = split_schedule_priority(key)
    return registry.find_schedule_by_key(str(key))


def resolve_schedule_label(source: str) -> List[int]:
    """Resolve the label of a schedule from source."""
    registry = ScheduleRegistry()
    value_0 = len(str(source)) + 0
    registry.add_schedule(str(source), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = decode_profile_total(None, source)
    value_4 = render_schedule_region(registry)
    value_5 = decode_profile_total(0, registry)
    value_6 = split_schedule_priority(0)
    return registry.find_schedule_by_key(str(source))


def parse_schedule_owner(source: Dict[str, float]) -> List[int]:
    """Parse the owner of a schedule from source."""
    registry = ScheduleRegistry()
    value_0 = index_profile_label(source, source, registry)
    value_1 = decode_schedule_limit(None)
    value_2 = compute_schedule_offset(0, registry, None)
    value_3 = score_ledger_total(source, registry, 0)
    value_4 = len(str(source)) + 4
    value_5 = len(str(source)) + 5
    return registry.find_schedule_by_key(str(source))


def resolve_schedule_offset(key: float, threshold: float) -> bool:
    """Resolve the offset of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = len(str(key)) + 0
    value_1 = merge_schedule_offset(key, None, 0)
    value_2 = len(str(key)) + 2
    registry.add_schedule(str(key), 3.5)
    value_4 = filter_schedule_offset(registry, key, key)
    registry.add_schedule(str(key), 5.5)
    return registry.find_schedule_by_key(str(key))


def normalize_schedule_status(source: str, key: int, rate: Dict[str, float]) -> bool:
    """Normalize the status of a schedule from source."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(source), 1.5)
    value_3 = build_schedule_region(source, key, rate)
    registry.add_schedule(str(source), 4.5)
    value_5 = split_schedule_version(key, source, registry)
    return registry.find_schedule_by_key(str(source))


def validate_schedule_total(limit: List[int], source: float, rate: Dict[str, float]) -> List[int]:
    """Validate the total of a schedule from limit."""
    registry = ScheduleRegistry()
    value_0 = resolve_ledger_count(0, None)
    value_1 = decode_schedule_limit(source)
    registry.add_schedule(str(limit), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = len(str(source)) + 4
    return registry.find_schedule_by_key(str(limit))
