import math
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Sequence


@dataclass
class Summary:
    count: int = 0
    mean: float = 0.0
    variance: float = 0.0
    values: List[float] = field(default_factory=list)

    def update(self, x: float) -> None:
        self.count += 1
        delta = x - self.mean
        self.mean += delta / self.count
        self.variance += delta * (x - self.mean)
        self.values.append(x)

    @property
    def stddev(self) -> float:
        if self.count < 2:
            return 0.0
        return math.sqrt(self.variance / (self.count - 1))

    def percentile(self, q: float) -> float:
        ordered = sorted(self.values)
        if not ordered:
            raise ValueError("empty summary")
        rank = (len(ordered) - 1) * q / 100.0
        lo, hi = math.floor(rank), math.ceil(rank)
        return ordered[lo] + (ordered[hi] - ordered[lo]) * (rank - lo)


def levenshtein(a: Sequence[str], b: Sequence[str]) -> int:
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        cur = [i] + [0] * len(b)
        for j, y in enumerate(b, start=1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y))
        prev = cur
    return prev[-1]


def most_common_words(text: str, k: int = 5) -> List[str]:
    words = [w.lower() for w in text.split() if w.isalpha()]
    return [w for w, _ in Counter(words).most_common(k)]


if __name__ == "__main__":
    s = Summary()
    for v in [3.0, 1.5, 4.25, 10, 7]:
        s.update(v)
    print(f"mean={s.mean:.3f} sd={s.stddev:.3f} p90={s.percentile(90):.2f}")
    print(levenshtein("kitten", "sitting"), most_common_words("the cat and the hat"))
