import json

from binarray.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_render_csv(capsys):
    code, out, _ = run(capsys, "render", "--init", "1,-1", "--rows", "5", "--cols", "-2..2")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "k\\n,-2,-1,0,1,2"
    assert [line.split(",")[5] for line in lines[1:]] == ["1", "1", "-1", "-1", "0"]


def test_render_negative_init(capsys):
    code, out, _ = run(capsys, "render", "--init", "3,-2,0,0", "--rows", "4", "--cols", "0..2")
    assert code == EXIT_OK
    assert [line.split(",")[3] for line in out.splitlines()[1:]] == ["3", "4", "-1", "-2"]


def test_render_ascii(capsys):
    code, out, _ = run(capsys, "render", "--init", "1", "--rows", "3", "--cols", "-2..1", "--format", "ascii")
    assert code == EXIT_OK
    assert "-2" in out.splitlines()[0]
    assert out.splitlines()[-1].split()[1:] == ["3", "1", "0", "0"]


def test_convolve(capsys):
    code, out, _ = run(capsys, "convolve", "--a", "3,4,-1,-2", "--b", "2,2,-1,-1", "--m", "3", "--shift", "-2")
    assert code == EXIT_OK
    assert out.splitlines() == ["-13", "-13", "EQUAL"]


def test_convolve_short_prefix(capsys):
    code, _, err = run(capsys, "convolve", "--a", "1,2", "--b", "1,2", "--m", "3", "--shift", "1")
    assert code == EXIT_USAGE
    assert "error" in err


def test_seq(capsys):
    code, out, _ = run(capsys, "seq", "--family", "catalan", "--count", "5")
    assert (code, out) == (EXIT_OK, "1\n1\n2\n5\n14\n")
    code, out, _ = run(capsys, "seq", "--family", "shapiro-row", "--param", "n=4")
    assert out.split() == ["14", "14", "6", "1"]


def test_seq_unknown(capsys):
    code, _, err = run(capsys, "seq", "--family", "nope")
    assert code == EXIT_USAGE


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sl2", "--seed", "7", "--cases", "10")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["ok"] and report["seed"] == 7


def test_verify_strict(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "catalan", "--strict")
    assert code == EXIT_FAIL
    assert json.loads(out)["failing_families"]


def test_verify_is_repeatable(capsys):
    first = run(capsys, "verify", "--suite", "core", "--seed", "42", "--cases", "5")
    second = run(capsys, "verify", "--suite", "core", "--seed", "42", "--cases", "5")
    assert first == second
