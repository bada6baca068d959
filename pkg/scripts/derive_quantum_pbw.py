"""Solve the PBW rewrite rules of the exact-rank quantum presets and write
them to src/superhaar/data/. Each rule set is checked for local confluence
and against the vector representation before it is written."""
import argparse
import time
from pathlib import Path

from superhaar.freealg import check_local_confluence
from superhaar.presets.uq_osp import EXACT_OSP, osp_chevalley_data, osp_roots
from superhaar.presets.uq_osp import data_file as osp_file
from superhaar.presets.uq_sl import EXACT_SL, sl_chevalley_data, sl_roots
from superhaar.presets.uq_sl import data_file as sl_file
from superhaar.quantum import QuantumAlgebra, derive_pbw_rules, dump_presentation
from superhaar.reps import rep_check

DATA = Path(__file__).resolve().parents[1] / "src" / "superhaar" / "data"
FAMILY = [["T"], ["T", "T"], ["Tb"], ["T", "Tb"], ["T", "T", "T"]]


def build(qa: QuantumAlgebra, kmax: int, out: Path, verbose: bool):
    t0 = time.time()
    rules = derive_pbw_rules(qa, FAMILY, kmax=kmax, log=print if verbose else None)
    p = qa.install_rules(rules)
    bad = check_local_confluence(p, 3)
    if bad:
        raise SystemExit(f"{p.name}: {len(bad)} critical pairs do not resolve")
    if not rep_check(qa.t):
        raise SystemExit(f"{p.name}: vector representation violates a rule")
    out.write_text(dump_presentation(p))
    print(f"{p.name}: {len(rules)} rules, confluent, {time.time() - t0:.1f}s -> {out.name}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    for m, n in sorted(EXACT_SL):
        qa = QuantumAlgebra(sl_chevalley_data(m, n), sl_roots(m, n))
        build(qa, 1, DATA / sl_file(m, n), args.verbose)
    for n in sorted(EXACT_OSP):
        qa = QuantumAlgebra(osp_chevalley_data(n), osp_roots(n))
        build(qa, 2, DATA / osp_file(n), args.verbose)


if __name__ == "__main__":
    main()
