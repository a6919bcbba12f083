"""Writes the synthetic Python project used by the throughput and mock-family tests.

Deterministic: rerunning reproduces the checked-in tree byte for byte.
Usage: python3 generate.py [out_dir]
"""
import os
import random
import shutil
import sys

VERBS = ["load", "save", "compute", "parse", "render", "merge", "filter", "validate",
         "normalize", "build", "resolve", "apply", "score", "encode", "decode", "split",
         "rank", "summarize", "convert", "index"]
NOUNS = ["invoice", "customer", "ledger", "shipment", "token", "route", "sensor", "reading",
         "order", "payment", "account", "report", "batch", "schedule", "quota", "metric",
         "window", "segment", "record", "profile"]
ATTRS = ["total", "weight", "count", "limit", "offset", "label", "status", "priority",
         "owner", "region", "version", "checksum"]
TYPES = ["int", "float", "str", "List[int]", "Dict[str, float]", "bool"]
MODULES = 40
FUNCTIONS = 19


def main(out):
    rng = random.Random(20240611)
    if os.path.exists(out):
        shutil.rmtree(out)
    os.makedirs(out)
    used = set()
    modules = []
    for m in range(MODULES):
        noun = NOUNS[m % len(NOUNS)]
        functions = []
        while len(functions) < FUNCTIONS:
            name = f"{rng.choice(VERBS)}_{noun}_{rng.choice(ATTRS)}"
            if name in used:
                continue
            used.add(name)
            params = rng.sample(["items", "rate", "key", "limit", "source", "threshold", "mapping"], rng.randint(1, 3))
            functions.append((name, params, rng.choice(TYPES)))
        modules.append((f"{noun}_{m:02d}", noun, functions))

    total = 0
    for i, (mod, noun, functions) in enumerate(modules):
        lines = ["from typing import Dict, List", ""]
        deps = [modules[j] for j in rng.sample(range(MODULES), 3) if j != i]
        for dep_mod, _, dep_fns in deps:
            names = ", ".join(sorted(f[0] for f in dep_fns[:4]))
            lines.append(f"from {dep_mod} import {names}")
        lines += ["", ""]
        cls = noun.capitalize() + "Registry"
        lines += [
            f"class {cls}:",
            f'    """Keeps {noun} entries in insertion order."""',
            "",
            "    def __init__(self, capacity: int = 64):",
            "        self.capacity = capacity",
            f"        self.{noun}_entries = []",
            "        self.lookup = {}",
            "",
            f"    def add_{noun}(self, key: str, value: float) -> None:",
            f"        self.{noun}_entries.append((key, value))",
            "        self.lookup[key] = value",
            "",
            f"    def find_{noun}_by_key(self, key: str) -> float:",
            "        return self.lookup.get(key, 0.0)",
            "",
            f"    def drain_{noun}_entries(self) -> List[float]:",
            f"        values = [v for _, v in self.{noun}_entries]",
            f"        self.{noun}_entries.clear()",
            "        return values",
            "",
            "",
        ]
        callable_pool = [f for f in functions] + [f for d in deps for f in d[2][:4]]
        for name, params, ret in functions:
            sig = ", ".join(f"{p}: {rng.choice(TYPES)}" for p in params)
            words = name.split("_")
            lines.append(f"def {name}({sig}) -> {ret}:")
            lines.append(f'    """{words[0].capitalize()} the {words[2]} of a {words[1]} from {params[0]}."""')
            lines.append(f"    registry = {cls}()")
            body = rng.randint(4, 8)
            for b in range(body):
                if rng.random() < 0.5:
                    callee, cparams, _ = rng.choice(callable_pool)
                    if callee == name:
                        continue
                    args = ", ".join(rng.choice(params + ["registry", "0", "None"]) for _ in cparams)
                    lines.append(f"    value_{b} = {callee}({args})")
                elif rng.random() < 0.5:
                    lines.append(f"    registry.add_{noun}(str({params[0]}), {b}.5)")
                else:
                    lines.append(f"    value_{b} = len(str({rng.choice(params)})) + {b}")
            lines.append(f"    return registry.find_{noun}_by_key(str({params[0]}))")
            lines += ["", ""]
        while lines and lines[-1] == "":
            lines.pop()
        text = "\n".join(lines) + "\n"
        total += text.count("\n")
        with open(os.path.join(out, mod + ".py"), "w") as f:
            f.write(text)
    print(f"{len(modules)} modules, {total} lines")


if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "project"))
