"""Malformed-input generators for the command-line fuzz checks."""
import json
import random

from colorlie.cli import run

from conftest import ROOT

SOURCES = [(ROOT / "algebras" / f).read_text() for f in
           ("quantum_plane.json", "heisenberg.json", "sl2.json", "exterior2.json")]
EXPR_ALPHABET = list("xyq0123456789+-*/^() \n") + ["x", "y", "q^-1", "(x + y)", "^2", "1/0", "^-"]


def mutate_text(rng, text):
    chars = list(text)
    for _ in range(rng.randint(1, 4)):
        op = rng.random()
        pos = rng.randrange(len(chars)) if chars else 0
        if op < 0.35 and chars:
            del chars[pos]
        elif op < 0.7:
            chars.insert(pos, rng.choice('{}[]",:0123456789-qxyz \\\x00é'))
        elif chars:
            chars[pos] = rng.choice('{}[]",:019-qz ')
    if rng.random() < 0.1:
        chars = chars[:rng.randrange(len(chars) + 1)]
    return "".join(chars)


def mutate_json(rng, text):
    data = json.loads(text)
    junk = [None, -1, 10 ** 30, "q^", "", [], {}, [[]], "x", 3.5, True, ["1"], [[1, 2, 3]]]

    def walk(node, depth=0):
        if isinstance(node, dict) and node:
            k = rng.choice(sorted(node))
            if depth > 3 or rng.random() < 0.4:
                if rng.random() < 0.2:
                    del node[k]
                else:
                    node[k] = rng.choice(junk)
            else:
                walk(node[k], depth + 1)
        elif isinstance(node, list) and node:
            i = rng.randrange(len(node))
            if depth > 3 or rng.random() < 0.4:
                node[i] = rng.choice(junk)
            else:
                walk(node[i], depth + 1)
    walk(data)
    return json.dumps(data)


def check_structured(code, out):
    assert code in (0, 1, 2, 3)
    data = json.loads(out)
    if code >= 2:
        assert set(data["error"]) >= {"type", "message"}


def fuzz_cli(seed, file_cases, expr_cases, workdir):
    """Run malformed algebra files and expressions through the CLI; returns (cases, errors)."""
    rng = random.Random(seed)
    path = workdir / "fuzz.json"
    cases = errors = 0
    commands = [["validate"], ["hilbert", "--max-weight", "3"], ["normalize", "-e", "y*x"]]
    for _ in range(file_cases):
        src = rng.choice(SOURCES)
        text = mutate_text(rng, src) if rng.random() < 0.5 else mutate_json(rng, src)
        path.write_text(text, encoding="utf-8")
        cmd = rng.choice(commands)
        code, out = run([cmd[0], str(path), *cmd[1:], "--json"])
        check_structured(code, out)
        cases += 1
        errors += code >= 2
    algebra = str(ROOT / "algebras" / "quantum_plane.json")
    for _ in range(expr_cases):
        expr = "".join(rng.choice(EXPR_ALPHABET) for _ in range(rng.randint(0, 12)))
        code, out = run(["normalize", algebra, "--expr=" + expr, "--json"])
        check_structured(code, out)
        cases += 1
        errors += code >= 2
    return cases, errors
