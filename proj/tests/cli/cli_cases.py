"""Runs the hsh binary for one named case and checks exit code and output."""

import json
import pathlib
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
CASE = sys.argv[3]


def run(*args):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, timeout=300)


def expect(condition, message):
    if not condition:
        sys.exit(f"{CASE}: {message}")


def schema_validator(name):
    import jsonschema
    from referencing import Registry, Resource

    registry = Registry()
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


def eval_constant():
    r = run("eval", "--index", '{"N":2,"l":[0,0],"branch":"+"}', "--point", "0.1,0.2")
    expect(r.returncode == 0, f"exit {r.returncode}")
    rows = r.stdout.splitlines()
    expect(rows == ["theta1,theta2,re,im", "0.1,0.2,1.0,0.0"], f"unexpected output {rows}")


def eval_equator():
    r = run("eval", "--index", '{"N":2,"l":[0,1],"branch":"+"}', "--point", "0,1.5707963")
    expect(r.returncode == 0, f"exit {r.returncode}")
    re, im = (float(v) for v in r.stdout.splitlines()[1].split(",")[2:])
    expect(abs(re) < 1e-6 and abs(im) < 1e-15, f"value {re}, {im}")


def eval_malformed():
    r = run("eval", "--index", "{oops", "--point", "0.1,0.2")
    expect(r.returncode == 2, f"exit {r.returncode}")
    expect(r.stderr.strip() != "", "no message on stderr")


def verify_counts():
    for args, count in ((["--N", "2", "--lmax", "3"], 16), (["--N", "1", "--lmax", "2"], 5),
                        (["--N", "4", "--lmax", "0"], 1)):
        r = run("verify", *args)
        expect(r.returncode == 0, f"{args}: exit {r.returncode}")
        reports = [json.loads(line) for line in r.stdout.splitlines()]
        expect(len(reports) == count, f"{args}: {len(reports)} reports")
        expect(all(rep["passed"] for rep in reports), f"{args}: a report failed")


def verify_schema():
    validator = schema_validator("verification_report.schema.json")
    r = run("verify", "--N", "3", "--lmax", "2")
    expect(r.returncode == 0, f"exit {r.returncode}")
    for line in r.stdout.splitlines():
        validator.validate(json.loads(line))
    index_validator = schema_validator("multi_index.schema.json")
    r = run("eval", "--index", '{"N":3,"l":[1,2,2],"branch":"-"}', "--point", "0.1,0.2,0.3",
            "--format", "json")
    index_validator.validate(json.loads(r.stdout)["index"])


def verify_resource_limit():
    r = run("verify", "--N", "6", "--lmax", "2")
    expect(r.returncode == 3, f"exit {r.returncode}")
    r = run("verify", "--N", "2", "--lmax", "9")
    expect(r.returncode == 3, f"exit {r.returncode}")


def verify_deterministic():
    with tempfile.TemporaryDirectory() as tmp:
        outputs = []
        for i, threads in enumerate(("1", "4")):
            path = pathlib.Path(tmp) / f"run{i}.csv"
            env = {"HSH_THREADS": threads}
            r = subprocess.run([BINARY, "verify", "--N", "3", "--lmax", "3", "--format", "csv",
                                "--output", str(path)], capture_output=True, env=env, timeout=300)
            expect(r.returncode == 0, f"exit {r.returncode}")
            outputs.append(path.read_bytes())
        expect(outputs[0] == outputs[1], "outputs differ between runs")


def table_example():
    r = run("table", "--N", "2", "--lmax", "3")
    expect(r.returncode == 0, f"exit {r.returncode}")
    expect(r.stdout == "N,l_N,lambda,count\n2,0,0.0,1\n2,1,2.0,3\n2,2,6.0,5\n2,3,12.0,7\n",
           f"unexpected output {r.stdout!r}")


def pt_spectrum_examples():
    r = run("pt-spectrum", "--symmetric", "--mu", "2", "--nmax", "3")
    expect(r.stdout == "n,energy\n0,4.0\n1,9.0\n2,16.0\n3,25.0\n", f"symmetric: {r.stdout!r}")
    r = run("pt-spectrum", "--general", "--c", "1", "--mu", "2", "--kappa", "2", "--nmax", "1")
    expect(r.stdout == "n,energy\n0,16.0\n1,36.0\n", f"general: {r.stdout!r}")
    r = run("pt-spectrum", "--symmetric", "--mu", "0.5", "--nmax", "3")
    expect(r.returncode == 2, f"mu=0.5: exit {r.returncode}")


def usage_errors():
    for args in ([], ["nope"], ["table", "--N", "x", "--lmax", "1"], ["verify", "--lmax", "2"]):
        r = run(*args)
        expect(r.returncode == 2, f"{args}: exit {r.returncode}")
    r = run("--help")
    expect(r.returncode == 0 and "eval" in r.stdout, "help")


CASES = {name: fn for name, fn in globals().items() if callable(fn) and fn.__module__ == "__main__"
         and name not in {"run", "expect", "schema_validator"}}

if __name__ == "__main__":
    CASES[CASE]()
