import os
from concurrent.futures import ProcessPoolExecutor

from .bicorns import bicorn_sequence, sequence_problems, third_reduction
from .certify import certified_distance_upper, replay_certificate
from .surface.generators import generate_family
from .surface.reduction import reduced_intersection
from .surface.topology import validate
from .utils.logutils import printdiag, printlog
from .utils.other_utils import Timer, parse_pattern_range
from .utils.paramutils import Params
from .utils.serialization import load_document

# ======================================================================
# This file contains the Workbench class, which drives runs of pyBicorn
# from a parameter file: it owns the log file, loads or generates
# configurations and runs the corpus checks.
#
# The command-line interface and the scenario scripts under test/corpus
# build a Workbench and call its methods; library functions are called
# with its diagnostic logger.
# ======================================================================

def check_grid(k, strict=False, graph="curve", aug_k=2):
    """Corpus checks on the grid-k pattern (curves 0 and 1).

    Returns
    -------
    list of (str, bool, str)
        (check name, passed, detail)
    """
    results = []
    config = generate_family("grid-%d" %k)

    report = validate(config)
    results.append(("validate", report.valid, str(report)))

    n = config.intersection(0, 1)
    if n >= 3:
        red = third_reduction(config, 0, 1)
        ia = reduced_intersection(config, 0, red.bicorn)[0]
        ib = reduced_intersection(config, 1, red.bicorn)[0]
        results.append(("third_reduction", ia <= 2 and 3*ib <= n, "i(α,γ) = %d, i(β,γ) = %d, i(α,β) = %d" %(ia, ib, n)))

    seq = bicorn_sequence(config, 0, 1, strict=strict)
    problems = sequence_problems(config, seq)
    results.append(("bicorn_sequence", not problems, "; ".join(problems) or "%d items" %len(seq)))

    cert = certified_distance_upper(config, 0, 1, "curve_graph" if graph == "curve" else "augmented_k", aug_k)
    replay = replay_certificate(cert)
    bound_ok = all(v for key, v in cert.bounds.items() if key in ("holds", "stated_holds")) if cert.bounds else True
    results.append(("certify", cert.complete and not replay and bound_ok,
                    "total %d, bounds %s%s" %(cert.total, cert.bounds, "" if not replay else ", " + "; ".join(replay))))
    return results

class Workbench:
    def __init__(self, paramfile=None, logging=True):
        """Driver for pyBicorn runs

        Parameters
        ----------
        paramfile : str, optional
            Name of a YAML file containing parameters; every parameter has a
            default, so the file may be left out
        logging : bool
            Whether to open a log file. Without one, printlog raises
        """
        self.paramfile = paramfile
        self.params = Params(paramfile)
        self._ld = self.params._ld
        self._param_init()
        if logging:
            self._output_init()
        else:
            self.logfile = None
        self.timer = Timer()

    # =====================================================================================================
    # USER-ACCESSIBLE METHODS
    # =====================================================================================================

    def printlog(self, s, quiet=False):
        """Print to log file and standard output

        Parameters
        ----------
        s : str
            String to print
        quiet : bool
            Whether to print only to log file or also to standard output (default)
        """
        if self.logfile is None:
            raise RuntimeError("Please set the log file in output_init")
        printlog(s, self.logfile, quiet)

    def diagnostic(self, s):
        """Diagnostic logger handed to library functions (standard error and log file)"""
        printdiag(s, self.logfile)

    def load(self, source, surface=None):
        """Configuration (and document extras) from a JSON file or a pattern name"""
        if os.path.exists(source):
            return load_document(source)
        return generate_family(source, surface, self.handle_face), {}

    def check_reduction_orders(self, config, c1, c2):
        """Reduced intersection under `random_orders` random bigon-removal orders

        Returns
        -------
        count : int
            Count of the deterministic order
        agree : bool
            Whether every random order gives the same count
        """
        count = reduced_intersection(config, c1, c2)[0]
        counts = [reduced_intersection(config, c1, c2, seed=self.seed + j)[0] for j in range(self.random_orders)]
        return count, all(c == count for c in counts)

    def certify(self, config, alpha, beta, graph=None, k=None):
        graph = self.graph if graph is None else graph
        k = self.k if k is None else k
        return certified_distance_upper(config, alpha, beta, "curve_graph" if graph == "curve" else "augmented_k",
                                        k, log=self.diagnostic)

    def run_corpus(self, kmin=None, kmax=None, jobs=None):
        """Run the grid-k checks for k in [kmin, kmax]

        With jobs > 1 the patterns are spread over worker processes; every
        worker builds its own configurations.

        Returns
        -------
        bool
            True if every check passed
        """
        kmin = self.kmin if kmin is None else kmin
        kmax = self.kmax if kmax is None else kmax
        jobs = self.jobs if jobs is None else jobs
        ks = parse_pattern_range(kmin, kmax)

        self.timer.start()
        self.printlog("Running corpus grid-%d ... grid-%d on %d worker(s)" %(kmin, kmax, jobs))
        args = (self.strict_monotonicity, self.graph, self.k)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                futures = [ex.submit(check_grid, k, *args) for k in ks]
                outcomes = [f.result() for f in futures]
        else:
            outcomes = [check_grid(k, *args) for k in ks]

        passed = True
        for k, results in zip(ks, outcomes):
            for name, ok, detail in results:
                self.printlog("grid-%d %-16s %s  (%s)" %(k, name, "PASSED" if ok else "FAILED", detail))
                passed &= ok
            self.timer.lap("grid-%d" %k)
        self.timer.stop("corpus")
        self.printlog(self.timer.summary)
        return passed

    # =====================================================================================================
    # INITIALIZATION METHODS (PRIVATE)
    # =====================================================================================================

    def _param_init(self):
        """ Set the parameters of the run as attributes (checked by Params) """
        self.results_basename = self._ld['Output']['results_basename']
        self.resume = bool(self._ld['Output']['resume'])

        self.seed = int(self._ld['Reduction']['seed'])
        self.random_orders = int(self._ld['Reduction']['random_orders'])

        self.strict_monotonicity = bool(self._ld['Sequence']['strict_monotonicity'])

        self.graph = self._ld['Certify']['graph']
        self.k = int(self._ld['Certify']['k'])

        self.grid_k = int(self._ld['Generators']['grid_k'])
        self.handle_face = int(self._ld['Generators']['handle_face'])

        self.jobs = int(self._ld['Batch']['jobs'])
        self.kmin = int(self._ld['Batch']['kmin'])
        self.kmax = int(self._ld['Batch']['kmax'])

    def _output_init(self):
        """ Set up output & log file
        """
        if not os.path.exists(self.results_basename):
            os.makedirs(self.results_basename)
        self.logfile = os.path.join(self.results_basename, self._ld['Output']['logfile'])
        title = '               ____  _                     \n    ____  __  __/ __ )(_)________  _________ \n   / __ \\/ / / / __  / / ___/ __ \\/ ___/ __ \\\n  / /_/ / /_/ / /_/ / / /__/ /_/ / /  / / / /\n / .___/\\__, /_____/_/\\___/\\____/_/  /_/ /_/ \n/_/    /____/                              \n'

        if self.resume and os.path.exists(self.logfile):
            title = "\n\nResuming" + title[8:] + "\n\n"
            with open(self.logfile, "a") as f:
                f.write(title)
        else:
            with open(self.logfile, "w") as f:
                # Clear file and write header line
                f.write(title + "\nLog file for pyBicorn.\n\n")
