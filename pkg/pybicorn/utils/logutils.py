import sys

def printlog(s,filename,quiet=False,end='\n'):
    """Write log and print to screen

    Parameters
    ----------
    s : str
        String to write to log
    filename : str
        Name of the logfile to append text to. If None, nothing is written to disk
    quiet : bool
        Don't write to stdout. Default is False
    """

    if filename is not None:
        with open(filename,"a") as f:
            f.write(s + end)
    if not quiet: print(s,end=end)

def printdiag(s,filename=None):
    """Report a diagnostic on standard error (and in the log file, if any)

    Diagnostics are messages that do not change a result but that a user
    should see, e.g. a bicorn step that did not lower the intersection number.

    Parameters
    ----------
    s : str
        Diagnostic message
    filename : str
        Name of the logfile to append the message to (optional)
    """
    if filename is not None:
        printlog("DIAGNOSTIC: " + s, filename, quiet=True)
    print("DIAGNOSTIC: " + s, file=sys.stderr)
