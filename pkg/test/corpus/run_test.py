import argparse, sys
import pybicorn as pb

# ===========================================================
# Corpus run: validate, reduce, build bicorn sequences and
# certify distances on grid-k for k in [kmin, kmax], then
# check random bigon-removal orders on the fixed patterns.
# ===========================================================

parser = argparse.ArgumentParser()
parser.add_argument("--params", type=str, default="parameters.yml")
parser.add_argument("--kmin", type=int, default=None)
parser.add_argument("--kmax", type=int, default=None)
parser.add_argument("--jobs", type=int, default=None)
args = parser.parse_args()

wb = pb.Workbench(args.params)

passed = wb.run_corpus(args.kmin, args.kmax, args.jobs)

# Reduced counts must not depend on the order bigons are removed in
for pattern, pairs in (("genus2-i2", [(0, 1)]), ("figure1", [(0, 1)]), ("triple-5", [(0, 1), (0, 2), (1, 2)]),
                       ("bigon-4", [(0, 1)]), ("projection", [(0, 1), (0, 2), (1, 3), (2, 5)])):
    config, _ = wb.load(pattern)
    for c1, c2 in pairs:
        count, agree = wb.check_reduction_orders(config, c1, c2)
        wb.printlog("%-10s i(%d,%d) = %-3d %d random orders %s" %(pattern, c1, c2, count, wb.random_orders,
                                                                 "PASSED" if agree else "FAILED"))
        passed &= agree

# Integer ledger, every step recomputed from its expression
entries = pb.ledger()
failed = pb.replay_ledger(entries)
for e in entries:
    ok = e.name not in failed
    wb.printlog("ledger %-30s %-6s %s" %(e.name, e.result, "PASSED" if ok else "FAILED"))
    for problem in failed.get(e.name, []):
        wb.printlog("    %s" %problem)
passed &= not failed

wb.printlog("Corpus %s" %("PASSED" if passed else "FAILED"))
sys.exit(0 if passed else 1)
