"""Reproduce the two published graded-dimension data points and print them as JSON."""

import json
import sys

from hwtrans.oracle import graded_nilcone_dim, qpoly_to_json
from hwtrans.verify import DATA_POINT_A, reproduce_data_point_a, reproduce_data_point_b


def main():
    a = reproduce_data_point_a()
    a["graded"] = qpoly_to_json(graded_nilcone_dim(DATA_POINT_A["chi"]))
    b = reproduce_data_point_b()
    json.dump({"a": a, "b": b}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if a["ok"] and b["ok"] else 3


if __name__ == "__main__":
    sys.exit(main())
