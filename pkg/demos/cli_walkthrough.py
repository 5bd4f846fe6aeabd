"""Drive the command-line interface end to end in a temp directory.

Every subcommand is exercised the way a shell user would: construct a
block family (signal + certificate), profile the frequency function over
a range, tabulate the density series, verify the construction's claims,
and diff the engines against the oracles.  Each call prints the argv it
runs so the walkthrough doubles as usage documentation.

Run:  python3 demos/cli_walkthrough.py
"""

import tempfile
from pathlib import Path

from hlmax.cli import main


def run(*argv: str) -> int:
    print(f"$ hlmax {' '.join(argv)}")
    code = main(list(argv))
    print(f"  -> exit {code}\n")
    return code


def main_demo() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        d = Path(tmp)
        sig = str(d / "t27.json")
        cert = str(d / "t27.cert.json")
        prof = str(d / "profile.csv")
        dens = str(d / "density.csv")
        report = str(d / "report.json")

        run("construct", "theorem27", "--g", "log", "--k", "4", "--out", sig, "--cert", cert)
        run("profile", "--signal", sig, "--range", "14..18", "--out", prof)
        print("profile.csv:")
        print("  " + Path(prof).read_text().replace("\n", "\n  ").rstrip() + "\n")
        run("density", "--signal", sig, "--N-list", "20,200", "--C", "2", "--g", "log", "--out", dens)
        print("density.csv:")
        print("  " + Path(dens).read_text().replace("\n", "\n  ").rstrip() + "\n")
        run("verify", "theorem27", "--g", "log", "--k", "4", "--report", report)
        run("oracle-diff", "--seed", "11", "--trials", "25", "--max-width", "16")


if __name__ == "__main__":
    main_demo()
