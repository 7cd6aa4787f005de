"""Every polynomial printed in the two worked examples, in the input grammar."""

from __future__ import annotations

CASE_I = [
    "(x - t^2)*(x + 3*t + 2)*(x - 3*t + 2)",
    "x - t^2",
    "x + 3*t + 2",
    "x - 3*t + 2",
    "t + 2",
    "-2*sqrt(2)*(t + 1)*(t - 2)",
    "-3*(t + 1)*(t - 1)",
    "3*(t - 2)*(t + 2)",
    "2 - t",
    "2*sqrt(2)*(t - 1)*(t + 2)",
    "9/8*t^2",
    "-(sqrt(2)/32)*t*(9*t^2 - 16)",
    "t^2 + 1/4",
    "(t^2 - 9/4)/2",
    "x - t^2 - 1/4",
    "x - 9/8*t^2",
    "x^3 - 2*(c + 1)*x^2 + (7*t^2 + c^2 + 2*c - 11)*x - (6*c - 14)*t^2 - (c - 3)^2",
    "(4*sqrt(2) + 5)*t - 2*c - 3",
    "(12*sqrt(2) + 12)*t^2 - (4*sqrt(2)*c + 4*c + 12*sqrt(2) + 13)*t + c^2 + 4*c - 8*sqrt(2) - 6",
    "-(-6*c + 36*sqrt(2) + 36)*t^2 - (c^2 - 12*sqrt(2)*c - 12*c + 24*sqrt(2) + 40)*t - 2*c^2 + 8*sqrt(2)*c - 16",
    "-(2*sqrt(2) + 3)*t + c",
]

CASE_II = [
    "(x - t^2)*(x^2 - 10*t*x + 25*x - 36)",
    "x^2 - 10*t*x + 25*x - 36",
    "5*t - 6",
    "-5*(t - 2)*(t - 3)",
    "9*t - 18",
    "-3*(t - 3)*(t - 6)",
    "8*t - 12",
    "-4*(t - 2)*(t - 6)",
    "5*t + 6",
    "5*(t - 6)*(t + 1)",
    "t + 2",
    "3*(t - 2)*(t + 1)",
    "2*t + 3",
    "4*(t - 3)*(t + 1)",
    "-6*t",
    "10*t - 25",
    "-6*(t - 5)",
    "x - 10*t + 25",
    "x - 5*t + 6",
    "x - 9*t + 18",
    "x - 8*t + 12",
    "x^3 + (-2*s - 22*t + 36)*x^2 + (s^2 + 22*s*t + 157*t^2 - 72*s - 504*t + 396)*x"
    " - 360*t^3 + 72*s*t + 1692*t^2 - 2592*t + 1296",
    "x^3 - (2*s + 22*t - 36)*x^2 - (-s^2 - 32*s*t - 157*t^2 + 62*s + 504*t - 396)*x"
    " - 10*s^2*t - 120*s*t^2 - 360*t^3 + 25*s^2 + 432*s*t + 1692*t^2 - 360*s - 2592*t + 1296",
    "1/6*x*(x - (11*t - 36 + s)) + 6*t",
    "(x - 10*t + 25)*(x - (6*t - 6 + s)) + 6*(t - 5)",
    "11*t - 36 + s",
    "6*t - 6 + s",
]

PARAMETERS = {"c": ["0", "1", "5", "-7/3"], "s": ["0", "1", "-3", "7/2"]}


def instances() -> list[str]:
    """The corpus with the family parameters c and s replaced by sample values."""
    import re

    out = []
    for src in CASE_I + CASE_II:
        names = [n for n in PARAMETERS if re.search(rf"\b{n}\b", src)]
        if not names:
            out.append(src)
            continue
        (name,) = names
        for value in PARAMETERS[name]:
            out.append(re.sub(rf"\b{name}\b", f"({value})", src))
    return out
