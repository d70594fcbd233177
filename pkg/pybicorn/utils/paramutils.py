import yaml
import re
import copy
try:
    from yaml import CSafeLoader as SafeLoader
except ImportError:
    from yaml import SafeLoader

# Every section and key is optional. A missing key takes the value below, an
# unknown section or key is an error (most likely a typo in the YAML file).
DEFAULT_PARAMETERS = {
    "Output": {
        "results_basename": "./results/",
        "logfile": "pybicorn.log",
        "resume": False,
    },
    "Reduction": {
        "seed": 918,
        "random_orders": 100,
    },
    "Sequence": {
        "strict_monotonicity": False,
    },
    "Certify": {
        "graph": "curve",
        "k": 2,
    },
    "Generators": {
        "grid_k": 9,
        "handle_face": 0,
    },
    "Batch": {
        "jobs": 1,
        "kmin": 3,
        "kmax": 50,
    },
}

def read_paramfile(paramfile):
    """Read in YAML parameter file

    Parameters
    ----------
    paramfile : str
        Name of the YAML file

    Returns
    -------
    ld : dict
        Content of the file (empty dict for an empty file)
    """
    loader = SafeLoader
    # Configure to read scientific notation as floats rather than strings
    loader.add_implicit_resolver(
        u'tag:yaml.org,2002:float',
        re.compile(u'''^(?:
        [-+]?(?:[0-9][0-9_]*)\\.[0-9_]*(?:[eE][-+]?[0-9]+)?
        |[-+]?(?:[0-9][0-9_]*)(?:[eE][-+]?[0-9]+)
        |\\.[0-9_]+(?:[eE][-+][0-9]+)?
        |[-+]?[0-9][0-9_]*(?::[0-5]?[0-9])+\\.[0-9_]*
        |[-+]?\\.(?:inf|Inf|INF)
        |\\.(?:nan|NaN|NAN))$''', re.X),
        list(u'-+0123456789.')
    )
    with open(paramfile,'r') as f:
        ld = yaml.load(f,loader)
    return {} if ld is None else ld

def merge_parameters(ld):
    """Fill the sections of a parameter dictionary with the default values

    Raises
    ------
    ValueError
        If a section or a key is not known
    """
    merged = copy.deepcopy(DEFAULT_PARAMETERS)
    for section, values in ld.items():
        if section not in merged:
            raise ValueError(f"Unknown parameter section: {section}")
        if values is None:
            continue
        for key, val in values.items():
            if key not in merged[section]:
                raise ValueError(f"Unknown parameter {key} in section {section}")
            merged[section][key] = val
    return merged

class Params:
    def __init__(self,paramfile=None) -> None:
        # Read in YAML parameter file (or use the defaults only)
        self.paramfile = paramfile
        ld = {} if paramfile is None else read_paramfile(paramfile)
        self._ld = merge_parameters(ld)

        # ============================================================
        # Output
        # ============================================================
        for at in self._ld["Output"]:
            val = self._ld["Output"][at]
            self.setparam(at,val)

        # ============================================================
        # Reduction
        # ============================================================
        if int(self._ld["Reduction"]["random_orders"]) < 1:
            raise ValueError("random_orders must be a positive integer")
        for at in self._ld["Reduction"]:
            val = self._ld["Reduction"][at]
            self.setparam(at,val)

        # ============================================================
        # Sequence
        # ============================================================
        for at in self._ld["Sequence"]:
            val = self._ld["Sequence"][at]
            self.setparam(at,bool(val))

        # ============================================================
        # Certify
        # ============================================================
        if self._ld["Certify"]["graph"] not in ("curve", "augmented"):
            raise ValueError("Certify graph must be 'curve' or 'augmented', got %s" %self._ld["Certify"]["graph"])
        if int(self._ld["Certify"]["k"]) < 2:
            raise ValueError("Certify k must be at least 2")
        for at in self._ld["Certify"]:
            val = self._ld["Certify"][at]
            self.setparam(at,val)

        # ============================================================
        # Generators
        # ============================================================
        for at in self._ld["Generators"]:
            val = self._ld["Generators"][at]
            self.setparam(at,val)

        # ============================================================
        # Batch
        # ============================================================
        if not 1 <= int(self._ld["Batch"]["kmin"]) <= int(self._ld["Batch"]["kmax"]):
            raise ValueError("Batch range must satisfy 1 <= kmin <= kmax")
        for at in self._ld["Batch"]:
            val = self._ld["Batch"][at]
            self.setparam(at,val)

    def setparam(self,at,val):
        if hasattr(self,at):
            raise ValueError(f"Trying to set existing attribute: {at}")
        else:
            setattr(self,at,val)
