"""The command line JSON outputs validate against the shipped schema, and
identical invocations are byte-identical."""

import json
import os
import pathlib
import subprocess

import pytest

jsonschema = pytest.importorskip("jsonschema")

CLI = os.environ.get("QCRYSTAL_CLI")
SCHEMA_PATH = pathlib.Path(__file__).resolve().parents[2] / "schemas" / "cli.schema.json"

pytestmark = pytest.mark.skipif(CLI is None, reason="QCRYSTAL_CLI not set")

COMMANDS = {
    "enumerate": ["enumerate", "--shape", "3,1", "--n", "3", "--format", "json"],
    "apply": ["apply", "--word", "11", "--n", "3", "--op", "1bar", "--format", "json"],
    "insert": ["insert", "--tableau", "66135/324", "--letters", "2", "--n", "6",
               "--format", "json"],
    "insert-pair": ["insert", "--tableau", "12", "--tableau2", "333/2", "--right", "--n", "3",
                    "--format", "json"],
    "rsk": ["rsk", "--word", "2321", "--n", "3", "--format", "json"],
    "unrsk": ["unrsk", "--p", "321/2", "--q", "124/3", "--n", "3", "--format", "json"],
    "lr": ["lr", "--lambda", "2", "--mu", "3,1", "--n", "3", "--method", "all",
           "--format", "json"],
    "decompose-power": ["decompose-power", "--n", "3", "--N", "4", "--format", "json"],
}


def run(args):
    return subprocess.run([CLI] + args, capture_output=True, text=True, check=True).stdout


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_output_matches_schema(name):
    schema = json.loads(SCHEMA_PATH.read_text())
    validator = jsonschema.Draft202012Validator(
        {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
    )
    output = run(COMMANDS[name])
    validator.validate(json.loads(output))


@pytest.mark.parametrize("name", sorted(COMMANDS))
def test_output_is_deterministic(name):
    assert run(COMMANDS[name]) == run(COMMANDS[name])


def test_exit_codes():
    assert subprocess.run([CLI, "enumerate", "--shape", "3,1", "--n", "3"],
                          capture_output=True).returncode == 0
    assert subprocess.run([CLI, "enumerate", "--shape", "oops", "--n", "3"],
                          capture_output=True).returncode == 2
    assert subprocess.run([CLI, "nonsense"], capture_output=True).returncode == 2
