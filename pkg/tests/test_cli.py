import json

import pytest

from kerrspin.cli import (
    EXIT_INVALID,
    EXIT_NO_ORBIT,
    EXIT_OK,
    EXIT_TOLERANCE,
    FIGURE1_HEADER,
    FIGURE2_HEADER,
    main,
)


def read_csv(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return header, rows


def test_radial_fall_schwarzschild(capsys):
    assert main(["radial-fall", "--chi", "0", "--x-end", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "omega" in out
    omega = float(out.split("omega")[1].split(":")[1].split("rad")[0])
    assert abs(omega) < 1e-8


def test_radial_fall_extremal_value(capsys):
    assert main(["radial-fall", "--chi", "0.5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "+3.182779" in out
    assert "within bounds: yes" in out


def test_radial_fall_censorship_violation_exits_2(capsys):
    assert main(["radial-fall", "--chi", "0.7"]) == EXIT_INVALID
    err = capsys.readouterr().err
    assert "1/2" in err  # names the bound


def test_radial_fall_tolerance_not_met_exits_4(capsys):
    assert main(["radial-fall", "--chi", "0.5", "--tol", "1e-15"]) == EXIT_TOLERANCE
    assert "best estimate" in capsys.readouterr().err


def test_circular_reports_both_conventions(capsys):
    assert main(["circular", "--chi", "0.3", "--x", "0.4", "--sense", "counter",
                 "--orbits", "7"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "delta_omega_N" in out
    assert "omega = 2*pi*delta_omega_N" in out
    assert "omega = N*omega_orbit" in out


def test_circular_outside_window_exits_3(capsys):
    assert main(["circular", "--chi", "0", "--x", "0.8", "--sense", "co"]) == EXIT_NO_ORBIT
    assert main(["circular", "--chi", "0", "--x", "-0.1", "--sense", "co"]) == EXIT_INVALID


def test_circular_no_orbit_exits_3(capsys):
    assert main(["circular", "--chi", "0.5", "--x", "0.55", "--sense", "counter"]) == EXIT_NO_ORBIT
    assert "no counter-rotating circular orbit" in capsys.readouterr().err


def test_json_spec_with_flag_override(tmp_path, capsys):
    doc = tmp_path / "scenario.json"
    doc.write_text(json.dumps({"chi": 0.7, "x_end": 0.5}), encoding="utf-8")
    # flag overrides the censorship-violating chi in the file
    assert main(["radial-fall", "--json", str(doc), "--chi", "0.25"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "x 0.000000 -> 0.500000" in out
    # without the override the file value is used and rejected
    assert main(["radial-fall", "--json", str(doc)]) == EXIT_INVALID


def test_figure1_sweep(tmp_path, capsys):
    out = tmp_path / "fig1.csv"
    assert main(["figure1", "--samples", "8", "--out", str(out)]) == EXIT_OK
    header, rows = read_csv(out)
    assert ",".join(header) == FIGURE1_HEADER
    assert len(rows) == 5 * 8
    assert all(row["error"] == "" for row in rows)
    by_curve = {}
    for row in rows:
        by_curve.setdefault(float(row["chi"]), {})[float(row["x"])] = float(row["omega_rad"])
    # no rotation without spin
    assert all(abs(v) < 1e-8 for v in by_curve[0.0].values())
    # mirrored spin curves
    for x, omega in by_curve[0.5].items():
        assert abs(omega + by_curve[-0.5][x]) < 2e-8
    # monotone accumulation toward the stationary limit
    omegas = [by_curve[0.5][x] for x in sorted(by_curve[0.5])]
    assert omegas == sorted(omegas)
    assert omegas[-1] == pytest.approx(3.1827796, abs=1e-4)


def test_figure2_sweep(tmp_path, capsys):
    out = tmp_path / "fig2.csv"
    assert main(["figure2", "--samples", "24", "--out", str(out)]) == EXIT_OK
    header, rows = read_csv(out)
    assert ",".join(header) == FIGURE2_HEADER
    assert len(rows) == 24
    curve_keys = ["delta_omega_aplus", "delta_omega_aminus", "delta_omega_zero",
                  "delta_omega_dynbound_plus", "delta_omega_dynbound_minus"]
    for row in rows:
        for key in curve_keys:
            if row[key]:
                assert 0.0 < float(row[key]) < 1.2
        if row["admissible"] == "true":
            assert (float(row["delta_omega_aplus"]) > float(row["delta_omega_zero"])
                    > float(row["delta_omega_aminus"]))
    # the spin curves exist at small x; the upper one dies out beyond x = 0.5
    assert rows[0]["admissible"] == "true"
    assert rows[-1]["delta_omega_aplus"] == ""
    # dynamics-bound curves appear once that bound is the operative one
    assert rows[-1]["delta_omega_dynbound_plus"] != ""
    assert rows[0]["delta_omega_dynbound_plus"] == ""


def test_figure1_stable_under_tolerance_halving(tmp_path):
    coarse = tmp_path / "coarse.csv"
    fine = tmp_path / "fine.csv"
    assert main(["figure1", "--samples", "10", "--tol", "1e-8", "--out", str(coarse)]) == EXIT_OK
    assert main(["figure1", "--samples", "10", "--tol", "5e-9", "--out", str(fine)]) == EXIT_OK
    _, rows_c = read_csv(coarse)
    _, rows_f = read_csv(fine)
    for rc, rf in zip(rows_c, rows_f):
        allowed = max(float(rc["err_estimate"]), float(rf["err_estimate"]))
        assert abs(float(rc["omega_rad"]) - float(rf["omega_rad"])) <= allowed


def test_sweep_json_spec(tmp_path):
    doc = tmp_path / "sweep.json"
    out = tmp_path / "sweep.csv"
    doc.write_text(json.dumps({"samples": 5, "out": str(out)}), encoding="utf-8")
    assert main(["figure2", "--json", str(doc)]) == EXIT_OK
    _, rows = read_csv(out)
    assert len(rows) == 5
    # explicit flag beats the file value
    assert main(["figure2", "--json", str(doc), "--samples", "3"]) == EXIT_OK
    _, rows = read_csv(out)
    assert len(rows) == 3


def test_figure_outputs_deterministic(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    assert main(["figure1", "--samples", "6", "--out", str(a)]) == EXIT_OK
    assert main(["figure1", "--samples", "6", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_figure_csv_format(tmp_path):
    out = tmp_path / "fig1.csv"
    main(["figure1", "--samples", "4", "--out", str(out)])
    raw = out.read_text(encoding="utf-8")
    assert "\r" not in raw
    assert not any(line.endswith(",") for line in raw.splitlines()[:1])


def test_check_command_reports_deviations(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert main(["check", "--samples", "6", "--out", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "compatibility report" in text
    assert "DEVIATION" in text
    assert out.read_text(encoding="utf-8").strip().startswith("compatibility report")


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc_info:
        main(["radial-fall", "--nope", "1"])
    assert exc_info.value.code == 2


def test_missing_required_flag_exits_2(capsys):
    assert main(["circular", "--x", "0.4", "--sense", "co"]) == EXIT_INVALID
    assert "--chi is required" in capsys.readouterr().err
