"""Built-in example configurations."""

from __future__ import annotations

from typing import Dict, List

CATALOG: Dict[str, str] = {}

CATALOG["trivial"] = """
name = "trivial"
description = "trivial group on Q[x]/(x^2); braiding is trivial and everything is classical"
field = "QQ"
max_degree = 4

[hopf]
group = "trivial"

[algebra]
dim = 2
labels = ["1", "x"]
unit = [[0, 1]]
mult = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]
"""

CATALOG["dual-numbers-z2"] = """
name = "dual-numbers-z2"
description = "Z/2 acting on Q[x]/(x^2) by x -> -x"
field = "QQ"
max_degree = 4

[hopf]
group = "cyclic"
order = 2

[algebra]
dim = 2
labels = ["1", "x"]
unit = [[0, 1]]
mult = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]

[action]
entries = [[1, 0, 0, 1], [1, 1, 1, -1]]
"""

CATALOG["z3-rational"] = """
name = "z3-rational"
description = "Z/3 acting on Q[x,y]/(x,y)^2 through its rational 2-dimensional representation"
field = "QQ"
max_degree = 3

[hopf]
group = "cyclic"
order = 3

[algebra]
dim = 3
labels = ["1", "x", "y"]
unit = [[0, 1]]
mult = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [0, 2, 2, 1], [2, 0, 2, 1]]

[action]
entries = [
  [1, 0, 0, 1], [1, 1, 2, 1], [1, 2, 1, -1], [1, 2, 2, -1],
  [2, 0, 0, 1], [2, 1, 1, -1], [2, 1, 2, -1], [2, 2, 1, 1],
]
"""

CATALOG["group-algebra-s3"] = """
name = "group-algebra-s3"
description = "B = QS_3 as the smash product Q * QS_3"
field = "QQ"
max_degree = 2

[hopf]
group = "symmetric"
degree = 3
"""

CATALOG["sweedler4"] = """
name = "sweedler4"
description = "Sweedler's 4-dimensional Hopf algebra over itself (not semisimple)"
field = "QQ"
max_degree = 3

[hopf]
preset = "sweedler"
"""

CATALOG["klein-twist"] = """
name = "klein-twist"
description = "Z/2 x Z/2 with the alternating bicharacter twist, A = Q"
field = "QQ"
max_degree = 3

[hopf]
group = "klein"

[twist]
alpha = "alternating-bicharacter"
"""

CATALOG["f2-modular"] = """
name = "f2-modular"
description = "Z/2 on F_2[x]/(x^2) by x -> -x = x; characteristic divides |G|"
field = "GF(2)"
max_degree = 3

[hopf]
group = "cyclic"
order = 2

[algebra]
dim = 2
labels = ["1", "x"]
unit = [[0, 1]]
mult = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]]

[action]
entries = [[1, 0, 0, 1], [1, 1, 1, -1]]
"""


def names() -> List[str]:
    return list(CATALOG)


def get(name: str) -> str:
    try:
        return CATALOG[name].lstrip()
    except KeyError:
        raise KeyError("unknown example %r (known: %s)" % (name, ", ".join(CATALOG))) from None


def description(name: str) -> str:
    for line in CATALOG[name].splitlines():
        if line.startswith("description"):
            return line.split("=", 1)[1].strip().strip('"')
    return ""
