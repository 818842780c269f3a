"""Re-parse `gavekit check --json` output and validate it against the report schema."""

import json
import subprocess
import sys

STATUSES = {"Proved", "NotEstablished", "Inconclusive"}
CLAIMS = {"UniqueForAllB", "NoSolutionForGivenB", "NotUniqueForAllB"}


def validate(report):
    assert set(report) == {"problem", "verdicts", "summary"}, report.keys()
    problem = report["problem"]
    assert problem["kind"] in {"gave", "gavme"}
    assert isinstance(problem["n"], int) and problem["n"] > 0
    assert isinstance(problem["hash"], str) and len(problem["hash"]) == 16
    assert report["summary"] in CLAIMS | {"None"}
    assert report["verdicts"], "no verdicts"
    for v in report["verdicts"]:
        assert v["status"] in STATUSES, v
        assert v["claim"] in CLAIMS, v
        assert v["soundness"] in {"Sound", "KnownUnsound"}, v
        assert isinstance(v["certificate"], dict)
        for value in v["certificate"].values():
            assert isinstance(value, (int, float)), v
        if v["soundness"] == "KnownUnsound":
            assert v["status"] != "Proved", v


def main():
    exe, *files = sys.argv[1:]
    for path in files:
        proc = subprocess.run([exe, "check", path, "--json"], capture_output=True, text=True)
        assert proc.returncode in (0, 2), (path, proc.returncode, proc.stderr)
        data = json.loads(proc.stdout)
        for report in data if isinstance(data, list) else [data]:
            validate(report)
        print(f"{path}: ok")


if __name__ == "__main__":
    main()
