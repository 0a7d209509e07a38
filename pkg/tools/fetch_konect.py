"""Download KONECT temporal datasets used by the optional count check.

    python tools/fetch_konect.py --dest data/ prosper-loans lastfm_band dblp_coauthor

Each archive is ``<base-url>/download.tsv.<name>.tar.bz2``; its ``out.<name>``
file is extracted flat into ``--dest``. Point ``SPANTRUSS_DATASETS`` at that
directory to enable the count check in the acceptance suite.
"""
import argparse
import shutil
import sys
import tarfile
import tempfile
import urllib.request
from pathlib import Path

DEFAULT_BASE = "http://konect.cc/files"


def fetch(name: str, dest: Path, base: str) -> Path:
    url = f"{base}/download.tsv.{name}.tar.bz2"
    target = dest / f"out.{name}"
    if target.exists():
        print(f"{target} exists, skipping")
        return target
    with tempfile.TemporaryDirectory() as tmp:
        archive = Path(tmp) / "a.tar.bz2"
        print(f"downloading {url}")
        with urllib.request.urlopen(url) as resp, open(archive, "wb") as fh:
            shutil.copyfileobj(resp, fh)
        with tarfile.open(archive) as tar:
            member = next((m for m in tar.getmembers() if Path(m.name).name == f"out.{name}"), None)
            if member is None:
                raise SystemExit(f"out.{name} not found in {url}")
            with tar.extractfile(member) as src, open(target, "wb") as dst:
                shutil.copyfileobj(src, dst)
    return target


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="+", help="KONECT internal names")
    ap.add_argument("--dest", type=Path, default=Path("data"))
    ap.add_argument("--base-url", default=DEFAULT_BASE)
    args = ap.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    for name in args.names:
        print(fetch(name, args.dest, args.base_url))
    return 0


if __name__ == "__main__":
    sys.exit(main())
