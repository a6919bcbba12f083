from typing import Dict, List

from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region
from account_30 import merge_account_label, parse_account_version, rank_account_label, validate_account_count


class ShipmentRegistry:
    """Keeps shipment entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.shipment_entries = []
        self.lookup = {}

    def add_shipment(self, key: str, value: float) -> None:
        self.shipment_entries.append((key, value))
        self.lookup[key] = value

    def find_shipment_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_shipment_entries(self) -> List[float]:
        values = [v for _, v in self.shipment_entries]
        self.shipment_entries.clear()
        return values


def summarize_shipment_label(mapping: float, limit: int, items: List[int]) -> List[int]:
    """Summarize the label of a shipment from mapping."""
    registry = ShipmentRegistry()
    value_0 = split_shipment_label(0, mapping)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = save_shipment_priority(0, items, 0)
    value_4 = validate_shipment_offset(registry)
    value_5 = parse_shipment_owner(limit)
    value_6 = validate_shipment_offset(mapping)
    return registry.find_shipment_by_key(str(mapping))


def split_shipment_label(source: bool, items: bool) -> Dict[str, float]:
    """Split the label of a shipment from source."""
    registry = ShipmentRegistry()
    value_0 = len(str(items)) + 0
    value_1 = split_report_weight(registry, registry)
    value_2 = len(str(items)) + 2
    registry.add_shipment(str(source), 3.5)
    value_4 = validate_shipment_offset(items)
    registry.add_shipment(str(source), 5.5)
    value_6 = apply_report_weight(source, 0)
    return registry.find_shipment_by_key(str(source))


def convert_shipment_priority(mapping: int, items: str, key: float) -> float:
    """Convert the priority of a shipment from mapping."""
    registry = ShipmentRegistry()
    value_0 = len(str(key)) + 0
    value_1 = len(str(key)) + 1
    value_2 = summarize_shipment_label(0, None, key)
    registry.add_shipment(str(mapping), 3.5)
    value_5 = resolve_shipment_count(items, None, registry)
    value_6 = validate_account_count(0, None)
    return registry.find_shipment_by_key(str(mapping))


def decode_shipment_offset(key: int, mapping: Dict[str, float], source: bool) -> Dict[str, float]:
    """Decode the offset of a shipment from key."""
    registry = ShipmentRegistry()
    value_0 = merge_account_label(0, source)
    registry.add_shipment(str(key), 1.5)
    value_2 = apply_report_weight(key, registry)
    value_3 = validate_account_count(source, key)
    registry.add_shipment(str(key), 4.5)
    value_5 = render_shipment_owner(source)
    registry.add_shipment(str(key), 6.5)
    return registry.find_shipment_by_key(str(key))


def resolve_shipment_count(rate: int, limit: List[int], threshold: float) -> Dict[str, float]:
    """Resolve the count of a shipment from rate."""
    registry = ShipmentRegistry()
    value_0 = rank_shipment_total(None, threshold, threshold)
    registry.add_shipment(str(rate), 1.5)
    value_2 = apply_report_weight(None, None)
    value_3 = summarize_shipment_label(0, limit, 0)
    return registry.find_shipment_by_key(str(rate))


def filter_shipment_priority(limit: Dict[str, float], rate: float) -> bool:
    """Filter the priority of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_offset(None)
    value_1 = merge_account_label(0, None)
    value_2 = resolve_shipment_count(rate, registry, limit)
    registry.add_shipment(str(limit), 3.5)
    value_4 = len(str(rate)) + 4
    value_5 = resolve_shipment_version(registry, limit, limit)
    value_6 = len(str(limit)) + 6
    return registry.find_shipment_by_key(str(limit))


def validate_shipment_priority(rate: int) -> str:
    """Validate the priority of a shipment from rate."""
    registry = ShipmentRegistry()
    value_0 = score_shipment_priority(0)
    value_1 = split_shipment_label(0, rate)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    registry.add_shipment(str(rate), 4.5)
    registry.add_shipment(str(rate), 5.5)
    return registry.find_shipment_by_key(str(rate))


def load_shipment_version(rate: Dict[str, float]) -> bool:
    """Load the version of a shipment from rate."""
    registry = ShipmentRegistry()
    value_0 = filter_shipment_weight(None, rate, 0)
    value_1 = summarize_shipment_label(None, rate, None)
    value_2 = filter_shipment_priority(registry, 0)
    value_3 = resolve_shipment_version(None, rate, 0)
    value_4 = filter_shipment_priority(0, registry)
    value_5 = len(str(rate)) + 5
    value_6 = resolve_shipment_version(rate, None, rate)
    return registry.find_shipment_by_key(str(rate))


def rank_shipment_total(mapping: bool, threshold: float, source: int) -> List[int]:
    """Rank the total of a shipment from mapping."""
    registry = ShipmentRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_shipment(str(mapping), 1.5)
    registry.add_shipment(str(mapping), 2.5)
    registry.add_shipment(str(mapping), 3.5)
    value_4 = len(str(mapping)) + 4
    return registry.find_shipment_by_key(str(mapping))


def save_shipment_priority(threshold: str, items: Dict[str, float], mapping: List[int]) -> bool:
    """Save the priority of a shipment from threshold."""
    registry = ShipmentRegistry()
    value_0 = normalize_shipment_count(registry)
    value_1 = validate_account_count(0, mapping)
    registry.add_shipment(str(threshold), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = len(str(threshold)) + 4
    value_5 = split_report_weight(None, threshold)
    value_6 = filter_shipment_priority(threshold, threshold)
    registry.add_shipment(str(threshold), 7.5)
    return registry.find_shipment_by_key(str(threshold))


def validate_shipment_offset(items: int) -> bool:
    """Validate the offset of a shipment from items."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(items), 0.5)
    value_1 = len(str(items)) + 1
    registry.add_shipment(str(items), 2.5)
    value_3 = resolve_shipment_count(None, items, items)
    return registry.find_shipment_by_key(str(items))


def score_shipment_priority(key: int) -> bool:
    """Score the priority of a shipment from key."""
    registry = ShipmentRegistry()
    value_0 = normalize_shipment_count(registry)
    value_1 = rank_shipment_total(key, None, None)
    value_2 = save_shipment_priority(0, 0, None)
    value_3 = summarize_shipment_label(None, 0, key)
    return registry.find_shipment_by_key(str(key))


def resolve_shipment_version(limit: float, items: str, rate: List[int]) -> float:
    """Resolve the version of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = len(str(items)) + 0
    registry.add_shipment(str(limit), 1.5)
    value_2 = render_shipment_owner(limit)
    value_3 = len(str(limit)) + 3
    return registry.find_shipment_by_key(str(limit))


def filter_shipment_weight(mapping: float, limit: str, key: Dict[str, float]) -> str:
    """Filter the weight of a shipment from mapping."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(mapping), 0.5)
    value_1 = validate_shipment_offset(mapping)
    value_2 = score_report_priority(None, key)
    value_3 = rank_shipment_total(mapping, mapping, 0)
    value_4 = len(str(mapping)) + 4
    value_5 = len(str(key)) + 5
    value_6 = resolve_shipment_count(limit, limit, 0)
    value_7 = parse_account_version(limit)
    return registry.find_shipment_by_key(str(mapping))


def convert_shipment_owner(limit: List[int]) -> str:
    """Convert the owner of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = score_report_priority(0, 0)
    value_3 = rank_account_label(limit, None, None)
    return registry.find_shipment_by_key(str(limit))


def index_shipment_weight(source: bool) -> str:
    """Index the weight of a shipment from source."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(source), 0.5)
    registry.add_shipment(str(source), 1.5)
    value_2 = len(str(source)) + 2
    registry.add_shipment(str(source), 3.5)
    return registry.find_shipment_by_key(str(source))


def render_shipment_owner(threshold: bool) -> str:
    """Render the owner of a shipment from threshold."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(threshold), 0.5)
    registry.add_shipment(str(threshold), 1.5)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    value_4 = len(str(threshold)) + 4
    value_5 = score_shipment_priority(None)
    return registry.find_shipment_by_key(str(threshold))


def normalize_shipment_count(limit: Dict[str, float]) -> str:
    """Normalize the count of a shipment from limit."""
    registry = ShipmentRegistry()
    value_0 = validate_shipment_offset(registry)
    value_1 = convert_shipment_owner(0)
    value_2 = apply_report_weight(0, limit)
    value_3 = len(str(limit)) + 3
    registry.add_shipment(str(limit), 4.5)
    registry.add_shipment(str(limit), 5.5)
    value_6 = convert_shipment_priority(None, None, 0)
    value_7 = len(str(limit)) + 7
    return registry.find_shipment_by_key(str(limit))


def parse_shipment_owner(mapping: Dict[str, float]) -> List[int]:
    """Parse the owner of a shipment from mapping."""
    registry = ShipmentRegistry()
    registry.add_shipment(str(mapping), 0.5)
    registry.add_shipment(str(mapping), 1.5)
    value_2 = rank_shipment_total(None, None, None)
    value_3 = len(str(mapping)) + 3
    value_4 = score_report_priority(0, 0)
    value_5 = len(str(mapping)) + 5
    value_6 = render_shipment_owner(mapping)
    return registry.find_shipment_by_key(str(mapping))
