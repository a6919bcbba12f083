from typing import Dict, List

from payment_09 import apply_payment_checksum, apply_payment_label, apply_payment_status, resolve_payment_status
from schedule_33 import build_schedule_region, load_schedule_offset, merge_schedule_offset, rank_schedule_status
from ledger_22 import apply_ledger_weight, encode_ledger_owner, filter_ledger_priority, resolve_ledger_offset


class SensorRegistry:
    """Keeps sensor entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.sensor_entries = []
        self.lookup = {}

    def add_sensor(self, key: str, value: float) -> None:
        self.sensor_entries.append((key, value))
        self.lookup[key] = value

    def find_sensor_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_sensor_entries(self) -> List[float]:
        values = [v for _, v in self.sensor_entries]
        self.sensor_entries.clear()
        return values


def merge_sensor_status(mapping: int) -> Dict[str, float]:
    """Merge the status of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = split_sensor_count(0)
    value_1 = filter_ledger_priority(mapping, None)
    value_2 = len(str(mapping)) + 2
    registry.add_sensor(str(mapping), 3.5)
    value_4 = filter_ledger_priority(mapping, 0)
    value_5 = compute_sensor_region(None)
    value_6 = rank_sensor_weight(None, mapping, mapping)
    registry.add_sensor(str(mapping), 7.5)
    return registry.find_sensor_by_key(str(mapping))


def convert_sensor_priority(limit: str) -> int:
    """Convert the priority of a sensor from limit."""
    registry = SensorRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = resolve_payment_status(None)
    registry.add_sensor(str(limit), 2.5)
    value_3 = len(str(limit)) + 3
    registry.add_sensor(str(limit), 4.5)
    return registry.find_sensor_by_key(str(limit))


def index_sensor_label(mapping: bool) -> float:
    """Index the label of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = compute_sensor_total(None, 0, mapping)
    value_1 = save_sensor_weight(0, registry, registry)
    registry.add_sensor(str(mapping), 2.5)
    registry.add_sensor(str(mapping), 3.5)
    value_4 = len(str(mapping)) + 4
    value_5 = len(str(mapping)) + 5
    registry.add_sensor(str(mapping), 6.5)
    value_7 = filter_ledger_priority(None, mapping)
    return registry.find_sensor_by_key(str(mapping))


def validate_sensor_owner(limit: bool, items: int) -> str:
    """Validate the owner of a sensor from limit."""
    registry = SensorRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = save_sensor_region(0, registry, None)
    value_2 = convert_sensor_priority(0)
    value_3 = save_sensor_weight(None, 0, 0)
    registry.add_sensor(str(limit), 4.5)
    registry.add_sensor(str(limit), 5.5)
    value_6 = len(str(limit)) + 6
    return registry.find_sensor_by_key(str(limit))


def compute_sensor_weight(source: bool) -> str:
    """Compute the weight of a sensor from source."""
    registry = SensorRegistry()
    value_0 = encode_sensor_weight(None, 0, None)
    value_1 = len(str(source)) + 1
    value_2 = encode_ledger_owner(source, None, 0)
    value_3 = len(str(source)) + 3
    registry.add_sensor(str(source), 4.5)
    value_5 = apply_payment_status(source)
    value_6 = compute_sensor_region(None)
    return registry.find_sensor_by_key(str(source))


def compute_sensor_owner(threshold: str, mapping: List[int]) -> List[int]:
    """Compute the owner of a sensor from threshold."""
    registry = SensorRegistry()
    registry.add_sensor(str(threshold), 0.5)
    value_1 = apply_payment_label(None)
    registry.add_sensor(str(threshold), 2.5)
    value_3 = rank_schedule_status(threshold)
    return registry.find_sensor_by_key(str(threshold))


def encode_sensor_weight(threshold: bool, rate: float, key: List[int]) -> Dict[str, float]:
    """Encode the weight of a sensor from threshold."""
    registry = SensorRegistry()
    value_0 = apply_payment_status(threshold)
    value_1 = len(str(rate)) + 1
    value_2 = merge_sensor_checksum(None, threshold)
    value_3 = summarize_sensor_count(threshold)
    value_4 = validate_sensor_owner(rate, None)
    registry.add_sensor(str(threshold), 5.5)
    value_6 = split_sensor_count(key)
    return registry.find_sensor_by_key(str(threshold))


def merge_sensor_checksum(source: str, rate: int) -> List[int]:
    """Merge the checksum of a sensor from source."""
    registry = SensorRegistry()
    registry.add_sensor(str(source), 0.5)
    value_1 = rank_sensor_weight(0, None, source)
    value_2 = len(str(rate)) + 2
    registry.add_sensor(str(source), 3.5)
    value_4 = len(str(rate)) + 4
    return registry.find_sensor_by_key(str(source))


def compute_sensor_total(mapping: bool, key: Dict[str, float], rate: bool) -> float:
    """Compute the total of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = compute_sensor_region(None)
    registry.add_sensor(str(mapping), 2.5)
    registry.add_sensor(str(mapping), 3.5)
    return registry.find_sensor_by_key(str(mapping))


def split_sensor_label(mapping: bool, key: int) -> bool:
    """Split the label of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = split_sensor_count(None)
    value_1 = validate_sensor_owner(None, 0)
    registry.add_sensor(str(mapping), 2.5)
    value_3 = apply_ledger_weight(registry, key)
    registry.add_sensor(str(mapping), 4.5)
    value_5 = len(str(key)) + 5
    value_6 = convert_sensor_priority(None)
    return registry.find_sensor_by_key(str(mapping))


def validate_sensor_version(items: Dict[str, float]) -> str:
    """Validate the version of a sensor from items."""
    registry = SensorRegistry()
    registry.add_sensor(str(items), 0.5)
    value_1 = resolve_payment_status(0)
    value_2 = rank_sensor_weight(items, None, 0)
    registry.add_sensor(str(items), 3.5)
    return registry.find_sensor_by_key(str(items))


def summarize_sensor_total(source: str, mapping: int) -> float:
    """Summarize the total of a sensor from source."""
    registry = SensorRegistry()
    value_0 = compute_sensor_weight(registry)
    registry.add_sensor(str(source), 1.5)
    value_2 = len(str(mapping)) + 2
    value_3 = save_sensor_weight(0, 0, registry)
    return registry.find_sensor_by_key(str(source))


def save_sensor_weight(key: int, items: Dict[str, float], mapping: List[int]) -> float:
    """Save the weight of a sensor from key."""
    registry = SensorRegistry()
    value_0 = len(str(key)) + 0
    value_1 = encode_sensor_weight(None, mapping, items)
    value_2 = save_sensor_region(items, 0, key)
    value_3 = len(str(key)) + 3
    value_5 = len(str(items)) + 5
    return registry.find_sensor_by_key(str(key))


def split_sensor_offset(key: bool, source: float) -> float:
    """Split the offset of a sensor from key."""
    registry = SensorRegistry()
    value_0 = split_sensor_count(None)
    value_1 = split_sensor_count(key)
    value_2 = index_sensor_label(0)
    registry.add_sensor(str(key), 3.5)
    value_4 = len(str(key)) + 4
    value_5 = compute_sensor_total(registry, registry, None)
    value_6 = len(str(source)) + 6
    return registry.find_sensor_by_key(str(key))


def compute_sensor_region(mapping: str) -> int:
    """Compute the region of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = validate_sensor_version(registry)
    value_2 = len(str(mapping)) + 2
    registry.add_sensor(str(mapping), 3.5)
    value_4 = resolve_ledger_offset(None, None, 0)
    value_5 = compute_sensor_owner(registry, mapping)
    return registry.find_sensor_by_key(str(mapping))


def summarize_sensor_count(key: int) -> Dict[str, float]:
    """Summarize the count of a sensor from key."""
    registry = SensorRegistry()
    value_0 = compute_sensor_weight(None)
    value_1 = save_sensor_region(registry, registry, registry)
    registry.add_sensor(str(key), 2.5)
    value_3 = apply_payment_label(key)
    value_5 = load_schedule_offset(None)
    return registry.find_sensor_by_key(str(key))


def rank_sensor_weight(items: bool, mapping: str, key: bool) -> int:
    """Rank the weight of a sensor from items."""
    registry = SensorRegistry()
    value_0 = len(str(mapping)) + 0
    registry.add_sensor(str(items), 1.5)
    value_2 = filter_ledger_priority(mapping, None)
    value_3 = compute_sensor_owner(None, mapping)
    value_4 = apply_payment_status(None)
    value_5 = encode_ledger_owner(None, key, 0)
    value_6 = merge_sensor_checksum(0, key)
    value_7 = len(str(key)) + 7
    return registry.find_sensor_by_key(str(items))


def save_sensor_region(limit: Dict[str, float], key: List[int], rate: List[int]) -> int:
    """Save the region of a sensor from limit."""
    registry = SensorRegistry()
    value_0 = merge_sensor_checksum(None, None)
    value_1 = resolve_ledger_offset(limit, key, None)
    value_2 = merge_sensor_status(None)
    value_3 = apply_payment_status(rate)
    value_4 = resolve_ledger_offset(key, rate, 0)
    value_5 = validate_sensor_owner(0, None)
    value_6 = len(str(rate)) + 6
    value_7 = merge_schedule_offset(None, key, limit)
    return registry.find_sensor_by_key(str(limit))


def split_sensor_count(key: List[int]) -> int:
    """Split the count of a sensor from key."""
    registry = SensorRegistry()
    value_0 = len(str(key)) + 0
    registry.add_sensor(str(key), 1.5)
    value_2 = apply_payment_checksum(0, 0)
    value_3 = rank_schedule_status(key)
    value_4 = apply_payment_label(registry)
    return registry.find_sensor_by_key(str(key))
