import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import json
import tempfile

import pytest

from prophecke.verification.cli import build_parser, main


def test_parser():
    """Subcommands share the common options"""
    args = build_parser().parse_args(["verify", "relations", "--group", "GL2", "--max-len", "3"])
    assert args.command == "verify"
    assert args.names == ["relations"]
    assert args.group == "GL2"
    assert args.max_len == 3
    with pytest.raises(SystemExit):
        build_parser().parse_args(["verify", "--mode", "complex"])


def test_commands():
    """Exit codes of the commands: 0 on success, 2 for invalid input"""
    assert main(["datum", "--group", "GL2"]) == 0
    assert main(["datum", "--group", "XY7"]) == 2
    assert main(["bernstein", "--group", "SL2", "--lambda", "1,2"]) == 2
    assert main(["bernstein", "--group", "SL2", "--lambda", "-1", "--sign", "+"]) == 0
    assert main(["bernstein", "--group", "SL2", "--lambda", "-1", "--facet", "2"]) == 2
    assert main(["satake", "--group", "SL2", "--chi", "xi=0;pi=1", "--lambda", "1"]) == 0
    assert main(["satake", "--group", "SL2", "--chi", "pi=1", "--lambda", "1"]) == 2


def test_verify_output():
    """verify writes its report to --out and returns the suite exit code"""
    with tempfile.TemporaryDirectory() as out_dir:
        path = os.path.join(out_dir, "report.json")
        argv = ["verify", "relations", "--group", "SL2", "--max-len", "3", "--samples", "3", "--format", "json"]
        assert main(argv + ["--out", path]) == 0
        with open(path) as f:
            report = json.load(f)
    assert report["checks"][0]["name"] == "relations"
    assert report["checks"][0]["status"] == "PASS"
    assert report["checks"][0]["anchor"] == "relations/associativity"
    assert main(["verify", "--checks", "no-such-check"]) == 2
    assert main(["verify", "lemma-1.2", "--max-len", "3", "--samples", "3"]) == 0
    assert main(["verify", "--checks", "orientation-character,prop-1.3", "--max-len", "3", "--samples", "3"]) == 0


if __name__ == "__main__":
    # used to run this test individually
    test_parser()
    test_commands()
    test_verify_output()
