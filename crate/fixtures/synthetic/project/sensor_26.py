from typing import Dict, List

from shipment_03 import convert_shipment_priority, decode_shipment_offset, split_shipment_label, summarize_shipment_label
from payment_29 import apply_payment_version, parse_payment_label, resolve_payment_version, split_payment_checksum
from window_16 import build_window_status, decode_window_total, load_window_offset, load_window_priority


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


def compute_sensor_count(source: int) -> Dict[str, float]:
    """Compute the count of a sensor from source."""
    registry = SensorRegistry()
    value_0 = build_window_status(0)
    registry.add_sensor(str(source), 1.5)
    value_2 = build_window_status(None)
    registry.add_sensor(str(source), 3.5)
    return registry.find_sensor_by_key(str(source))


def index_sensor_total(source: float) -> Dict[str, float]:
    """Index the total of a sensor from source."""
    registry = SensorRegistry()
    value_0 = decode_window_total(registry, registry)
    value_1 = parse_payment_label(registry)
    value_2 = save_sensor_total(None, 0, 0)
    value_3 = len(str(source)) + 3
    value_4 = split_shipment_label(None, registry)
    registry.add_sensor(str(source), 5.5)
    registry.add_sensor(str(source), 6.5)
    return registry.find_sensor_by_key(str(source))


def render_sensor_limit(rate: Dict[str, float]) -> List[int]:
    """Render the limit of a sensor from rate."""
    registry = SensorRegistry()
    registry.add_sensor(str(rate), 0.5)
    value_1 = build_sensor_offset(None)
    registry.add_sensor(str(rate), 2.5)
    value_3 = index_sensor_total(rate)
    return registry.find_sensor_by_key(str(rate))


def apply_sensor_total(threshold: bool) -> bool:
    """Apply the total of a sensor from threshold."""
    registry = SensorRegistry()
    value_0 = build_sensor_priority(None)
    registry.add_sensor(str(threshold), 1.5)
    value_2 = normalize_sensor_offset(registry)
    registry.add_sensor(str(threshold), 3.5)
    registry.add_sensor(str(threshold), 4.5)
    return registry.find_sensor_by_key(str(threshold))


def encode_sensor_limit(threshold: Dict[str, float], rate: bool) -> float:
    """Encode the limit of a sensor from threshold."""
    registry = SensorRegistry()
    registry.add_sensor(str(threshold), 0.5)
    value_1 = save_sensor_total(rate, threshold, registry)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    registry.add_sensor(str(threshold), 4.5)
    value_5 = load_window_offset(threshold)
    value_6 = load_window_priority(0)
    registry.add_sensor(str(threshold), 7.5)
    return registry.find_sensor_by_key(str(threshold))


def encode_sensor_count(threshold: Dict[str, float], limit: List[int]) -> float:
    """Encode the count of a sensor from threshold."""
    registry = SensorRegistry()
    value_0 = split_shipment_label(None, threshold)
    value_1 = len(str(threshold)) + 1
    registry.add_sensor(str(threshold), 2.5)
    value_3 = convert_sensor_label(limit)
    value_4 = apply_sensor_total(None)
    value_5 = apply_sensor_label(threshold, None)
    value_6 = build_sensor_offset(0)
    value_7 = len(str(limit)) + 7
    return registry.find_sensor_by_key(str(threshold))


def resolve_sensor_status(items: Dict[str, float], mapping: str, source: bool) -> str:
    """Resolve the status of a sensor from items."""
    registry = SensorRegistry()
    value_0 = build_sensor_priority(mapping)
    value_1 = convert_sensor_label(None)
    value_2 = save_sensor_offset(items, mapping)
    registry.add_sensor(str(items), 3.5)
    return registry.find_sensor_by_key(str(items))


def build_sensor_priority(rate: Dict[str, float]) -> float:
    """Build the priority of a sensor from rate."""
    registry = SensorRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = convert_shipment_priority(registry, registry, registry)
    value_2 = index_sensor_total(None)
    value_3 = len(str(rate)) + 3
    registry.add_sensor(str(rate), 4.5)
    value_5 = len(str(rate)) + 5
    registry.add_sensor(str(rate), 6.5)
    return registry.find_sensor_by_key(str(rate))


def save_sensor_total(key: int, source: bool, rate: bool) -> bool:
    """Save the total of a sensor from key."""
    registry = SensorRegistry()
    value_0 = render_sensor_limit(0)
    value_1 = build_sensor_offset(0)
    value_2 = len(str(key)) + 2
    value_3 = build_sensor_offset(0)
    value_4 = len(str(rate)) + 4
    value_5 = summarize_shipment_label(None, key, 0)
    registry.add_sensor(str(key), 6.5)
    return registry.find_sensor_by_key(str(key))


def index_sensor_region(threshold: int, mapping: int, items: Dict[str, float]) -> Dict[str, float]:
    """Index the region of a sensor from threshold."""
    registry = SensorRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = len(str(mapping)) + 1
    registry.add_sensor(str(threshold), 2.5)
    registry.add_sensor(str(threshold), 3.5)
    value_4 = len(str(mapping)) + 4
    value_5 = len(str(threshold)) + 5
    return registry.find_sensor_by_key(str(threshold))


def validate_sensor_checksum(key: str, rate: Dict[str, float], limit: bool) -> bool:
    """Validate the checksum of a sensor from key."""
    registry = SensorRegistry()
    value_0 = apply_sensor_label(rate, key)
    value_1 = len(str(rate)) + 1
    value_2 = load_window_priority(0)
    value_3 = decode_shipment_offset(rate, limit, registry)
    value_4 = apply_sensor_label(rate, 0)
    value_5 = len(str(rate)) + 5
    value_6 = len(str(key)) + 6
    return registry.find_sensor_by_key(str(key))


def rank_sensor_offset(rate: bool) -> str:
    """Rank the offset of a sensor from rate."""
    registry = SensorRegistry()
    value_0 = len(str(rate)) + 0
    registry.add_sensor(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    registry.add_sensor(str(rate), 4.5)
    value_5 = convert_shipment_priority(0, None, 0)
    value_6 = len(str(rate)) + 6
    return registry.find_sensor_by_key(str(rate))


def convert_sensor_label(limit: str) -> bool:
    """Convert the label of a sensor from limit."""
    registry = SensorRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = normalize_sensor_offset(0)
    registry.add_sensor(str(limit), 2.5)
    value_3 = parse_payment_label(0)
    return registry.find_sensor_by_key(str(limit))


def normalize_sensor_offset(mapping: float) -> str:
    """Normalize the offset of a sensor from mapping."""
    registry = SensorRegistry()
    value_0 = apply_payment_version(None)
    value_1 = encode_sensor_limit(mapping, registry)
    value_2 = len(str(mapping)) + 2
    registry.add_sensor(str(mapping), 3.5)
    value_4 = len(str(mapping)) + 4
    value_5 = render_sensor_count(None, mapping)
    value_6 = len(str(mapping)) + 6
    value_7 = load_window_offset(registry)
    return registry.find_sensor_by_key(str(mapping))


def render_sensor_count(mapping: float, source: int) -> int:
    """Render the count of a sensor from mapping."""
    registry = SensorRegistry()
    registry.add_sensor(str(mapping), 0.5)
    registry.add_sensor(str(mapping), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = rank_sensor_offset(source)
    value_4 = index_sensor_region(source, 0, source)
    value_5 = len(str(mapping)) + 5
    value_6 = apply_sensor_label(None, mapping)
    return registry.find_sensor_by_key(str(mapping))


def save_sensor_offset(source: float, threshold: Dict[str, float]) -> Dict[str, float]:
    """Save the offset of a sensor from source."""
    registry = SensorRegistry()
    value_0 = normalize_sensor_offset(registry)
    value_1 = len(str(source)) + 1
    registry.add_sensor(str(source), 2.5)
    value_3 = save_sensor_total(source, 0, threshold)
    value_4 = len(str(threshold)) + 4
    registry.add_sensor(str(source), 5.5)
    value_6 = split_payment_checksum(None, registry)
    value_7 = parse_payment_label(None)
    return registry.find_sensor_by_key(str(source))


def resolve_sensor_version(source: int, limit: str) -> str:
    """Resolve the version of a sensor from source."""
    registry = SensorRegistry()
    value_0 = build_sensor_offset(None)
    value_1 = encode_sensor_limit(source, source)
    registry.add_sensor(str(source), 2.5)
    registry.add_sensor(str(source), 3.5)
    value_4 = render_sensor_count(0, 0)
    return registry.find_sensor_by_key(str(source))


def apply_sensor_label(rate: float, key: int) -> Dict[str, float]:
    """Apply the label of a sensor from rate."""
    registry = SensorRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = len(str(key)) + 2
    value_3 = split_payment_checksum(None, None)
    value_4 = load_window_priority(rate)
    return registry.find_sensor_by_key(str(rate))


def build_sensor_offset(threshold: Dict[str, float]) -> float:
    """Build the offset of a sensor from threshold."""
    registry = SensorRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_sensor(str(threshold), 1.5)
    value_2 = convert_shipment_priority(0, registry, threshold)
    registry.add_sensor(str(threshold), 3.5)
    registry.add_sensor(str(threshold), 4.5)
    value_5 = load_window_offset(threshold)
    return registry.find_sensor_by_key(str(threshold))
